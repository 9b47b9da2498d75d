//! Buchberger's algorithm for submodules of a free module `S^n`.
//!
//! Elements are dense vectors of term lists. The module order is
//! position-over-term: a smaller position index dominates, ties are broken
//! by the ring's monomial order. This makes the trailing block of positions
//! an elimination block, which is how syzygies are extracted.
//!
//! Pairs are chosen by the normal strategy (smallest sugar first) and pruned
//! with the Gebauer–Möller installation of Buchberger's chain criterion;
//! the coprime-leads criterion is only used for ideals (rank one).

use crate::error::{Error, Result};
use crate::poly::{scale_terms, sub_mul_terms, Monomial, PolyRing, Term};

pub(crate) type RawVec = Vec<Vec<Term>>;

pub(crate) fn lead_of(v: &RawVec) -> Option<(usize, &Term)> {
    v.iter()
        .enumerate()
        .find_map(|(p, c)| c.first().map(|t| (p, t)))
}

pub(crate) fn is_zero_vec(v: &RawVec) -> bool {
    v.iter().all(|c| c.is_empty())
}

struct Elem {
    comps: RawVec,
    pos: usize,
    lead: Monomial,
    sugar: i64,
}

struct Pair {
    i: usize,
    j: usize,
    pos: usize,
    lcm: Monomial,
    sugar: i64,
    seq: u64,
}

pub(crate) struct GbEngine {
    ring: PolyRing,
    twists: Vec<i64>,
    cap: u32,
    product_criterion: bool,
    elems: Vec<Elem>,
    by_pos: Vec<Vec<usize>>,
    pairs: Vec<Pair>,
    pending: Vec<(i64, u64, RawVec)>,
    seq: u64,
}

impl GbEngine {
    pub(crate) fn new(ring: &PolyRing, twists: Vec<i64>, cap: u32) -> GbEngine {
        let rank = twists.len();
        GbEngine {
            ring: ring.clone(),
            product_criterion: rank == 1,
            twists,
            cap,
            elems: Vec::new(),
            by_pos: vec![Vec::new(); rank],
            pairs: Vec::new(),
            pending: Vec::new(),
            seq: 0,
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.twists.len()
    }

    fn sugar_of(&self, v: &RawVec) -> i64 {
        let mut s = i64::MIN;
        for (p, comp) in v.iter().enumerate() {
            for (m, _) in comp {
                s = s.max(m.degree() as i64 + self.twists[p]);
            }
        }
        s
    }

    /// Queue a generator; zero vectors are ignored.
    pub(crate) fn add(&mut self, v: RawVec) {
        debug_assert_eq!(v.len(), self.rank());
        if is_zero_vec(&v) {
            return;
        }
        let s = self.sugar_of(&v);
        self.seq += 1;
        self.pending.push((s, self.seq, v));
    }

    fn find_reducer(&self, pos: usize, m: &Monomial, exclude: Option<usize>) -> Option<usize> {
        self.by_pos[pos]
            .iter()
            .copied()
            .find(|&k| Some(k) != exclude && self.elems[k].lead.divides(m))
    }

    /// Subtract `c·q·g` from `v`, leaving the first `keep` terms of
    /// component `pos` untouched (they are known to be larger than every
    /// term of `q·g` there).
    fn subtract(
        &self,
        v: &mut RawVec,
        pos: usize,
        keep: usize,
        c: &Monomial,
        coef: &crate::poly::Coeff,
        k: usize,
    ) {
        let g = &self.elems[k];
        let tail = sub_mul_terms(&self.ring, &v[pos][keep..], coef, c, &g.comps[pos]);
        v[pos].truncate(keep);
        v[pos].extend(tail);
        for (vp, gp) in v.iter_mut().zip(&g.comps).skip(pos + 1) {
            if !gp.is_empty() {
                *vp = sub_mul_terms(&self.ring, vp, coef, c, gp);
            }
        }
    }

    /// Reduce until the leading term is irreducible.
    fn reduce_top(&self, mut v: RawVec) -> RawVec {
        while let Some((pos, (m, c))) = lead_of(&v) {
            let Some(k) = self.find_reducer(pos, m, None) else {
                break;
            };
            let q = self.elems[k].lead.quotient_of(m);
            let coef = c.clone();
            self.subtract(&mut v, pos, 0, &q, &coef, k);
        }
        v
    }

    fn reduce_full_excluding(&self, mut v: RawVec, exclude: Option<usize>) -> RawVec {
        for pos in 0..v.len() {
            let mut cursor = 0;
            while cursor < v[pos].len() {
                let (m, c) = &v[pos][cursor];
                match self.find_reducer(pos, m, exclude) {
                    Some(k) => {
                        let q = self.elems[k].lead.quotient_of(m);
                        let coef = c.clone();
                        self.subtract(&mut v, pos, cursor, &q, &coef, k);
                    }
                    None => cursor += 1,
                }
            }
        }
        v
    }

    /// Full normal form with respect to the current basis.
    pub(crate) fn reduce(&self, v: RawVec) -> RawVec {
        self.reduce_full_excluding(v, None)
    }

    fn make_monic(&self, mut v: RawVec) -> RawVec {
        let field = self.ring.field();
        let Some((_, (_, c))) = lead_of(&v) else {
            return v;
        };
        if field.is_one(c) {
            return v;
        }
        let inv = field.inv(c);
        let one = self.ring.one_monomial();
        for comp in v.iter_mut() {
            if !comp.is_empty() {
                *comp = scale_terms(&self.ring, comp, &inv, &one);
            }
        }
        v
    }

    fn spoly(&self, p: &Pair) -> RawVec {
        let (gi, gj) = (&self.elems[p.i], &self.elems[p.j]);
        let qi = gi.lead.quotient_of(&p.lcm);
        let qj = gj.lead.quotient_of(&p.lcm);
        let one = self.ring.field().one();
        gi.comps
            .iter()
            .zip(&gj.comps)
            .map(|(a, b)| {
                let a = scale_terms(&self.ring, a, &one, &qi);
                sub_mul_terms(&self.ring, &a, &one, &qj, b)
            })
            .collect()
    }

    fn insert(&mut self, v: RawVec, sugar: i64) {
        let v = self.make_monic(v);
        let (pos, lead) = {
            let (p, t) = lead_of(&v).expect("nonzero");
            (p, t.0.clone())
        };
        let h = self.elems.len();
        self.elems.push(Elem {
            comps: v,
            pos,
            lead: lead.clone(),
            sugar,
        });

        // Gebauer–Möller update
        let cands: Vec<(usize, Monomial, bool)> = self.by_pos[pos]
            .iter()
            .map(|&g| {
                let gl = &self.elems[g].lead;
                (
                    g,
                    self.ring.lcm(&lead, gl),
                    self.product_criterion && lead.is_coprime(gl),
                )
            })
            .collect();
        let n = cands.len();
        let mut kept = vec![false; n];
        for k in 0..n {
            if cands[k].2 {
                kept[k] = true;
                continue;
            }
            let l1 = &cands[k].1;
            let dominated = (k + 1..n).any(|j| cands[j].1.divides(l1))
                || (0..k).any(|j| kept[j] && cands[j].1.divides(l1));
            if !dominated {
                kept[k] = true;
            }
        }
        let ring = &self.ring;
        let elems = &self.elems;
        self.pairs.retain(|p| {
            !(p.pos == pos
                && lead.divides(&p.lcm)
                && ring.lcm(&elems[p.i].lead, &lead) != p.lcm
                && ring.lcm(&elems[p.j].lead, &lead) != p.lcm)
        });
        for (k, (g, lcm, coprime)) in cands.into_iter().enumerate() {
            if !kept[k] || coprime {
                continue;
            }
            let ge = &self.elems[g];
            let sh = sugar + (lcm.degree() - lead.degree()) as i64;
            let sg = ge.sugar + (lcm.degree() - ge.lead.degree()) as i64;
            self.seq += 1;
            self.pairs.push(Pair {
                i: g,
                j: h,
                pos,
                lcm,
                sugar: sh.max(sg),
                seq: self.seq,
            });
        }
        let elems = &self.elems;
        self.by_pos[pos].retain(|&g| !lead.divides(&elems[g].lead));
        self.by_pos[pos].push(h);
    }

    /// Run Buchberger until every pair and generator of sugar at most
    /// `upto` is processed (`None`: until done).
    pub(crate) fn complete(&mut self, upto: Option<i64>) -> Result<()> {
        loop {
            let best_pair = self
                .pairs
                .iter()
                .enumerate()
                .min_by_key(|(_, p)| (p.sugar, p.seq))
                .map(|(k, p)| (k, p.sugar));
            let best_gen = self
                .pending
                .iter()
                .enumerate()
                .min_by_key(|(_, g)| (g.0, g.1))
                .map(|(k, g)| (k, g.0));
            let take_gen = match (best_pair, best_gen) {
                (None, None) => return Ok(()),
                (Some(_), None) => false,
                (None, Some(_)) => true,
                (Some((_, sp)), Some((_, sg))) => sg <= sp,
            };
            let sugar = if take_gen {
                best_gen.unwrap().1
            } else {
                best_pair.unwrap().1
            };
            if let Some(limit) = upto {
                if sugar > limit {
                    return Ok(());
                }
            }
            let (v, sugar) = if take_gen {
                let (s, _, v) = self.pending.swap_remove(best_gen.unwrap().0);
                (v, s)
            } else {
                let p = self.pairs.swap_remove(best_pair.unwrap().0);
                if p.lcm.degree() > self.cap {
                    return Err(Error::DegreeCapExceeded {
                        cap: self.cap,
                        needed: p.lcm.degree(),
                    });
                }
                (self.spoly(&p), p.sugar)
            };
            let h = self.reduce_top(v);
            if !is_zero_vec(&h) {
                self.insert(h, sugar);
            }
        }
    }

    /// The reduced Gröbner basis, sorted descending by leading term.
    /// Only meaningful after a full [`complete`](Self::complete).
    pub(crate) fn reduced_basis(&self) -> Vec<RawVec> {
        let mut active: Vec<usize> = self.by_pos.iter().flatten().copied().collect();
        active.sort_by(|&a, &b| {
            let (ea, eb) = (&self.elems[a], &self.elems[b]);
            ea.pos
                .cmp(&eb.pos)
                .then_with(|| self.ring.cmp(&eb.lead, &ea.lead))
        });
        active
            .into_iter()
            .map(|k| {
                let v = self.reduce_full_excluding(self.elems[k].comps.clone(), Some(k));
                self.make_monic(v)
            })
            .collect()
    }

    /// Buchberger's criterion on the current basis: every S-vector of two
    /// elements with a common leading position reduces to zero.
    pub(crate) fn satisfies_criterion(&self) -> bool {
        for ks in &self.by_pos {
            for (a, &i) in ks.iter().enumerate() {
                for &j in &ks[a + 1..] {
                    let (gi, gj) = (&self.elems[i], &self.elems[j]);
                    let lcm = self.ring.lcm(&gi.lead, &gj.lead);
                    let p = Pair {
                        i,
                        j,
                        pos: gi.pos,
                        lcm,
                        sugar: 0,
                        seq: 0,
                    };
                    if !is_zero_vec(&self.reduce(self.spoly(&p))) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Leading positions and monomials of the current (minimal) basis.
    pub(crate) fn leads(&self) -> Vec<(usize, Monomial)> {
        let mut out: Vec<(usize, Monomial)> = self
            .by_pos
            .iter()
            .flatten()
            .map(|&k| (self.elems[k].pos, self.elems[k].lead.clone()))
            .collect();
        out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| self.ring.cmp(&b.1, &a.1)));
        out
    }
}
