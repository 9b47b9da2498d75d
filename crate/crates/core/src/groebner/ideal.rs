use std::fmt;
use std::sync::OnceLock;

use super::engine::RawVec;
use super::submodule::{minimal_generators, syzygy_vectors};
use super::{ideal_basis, monomial, normal_form};
use crate::complexes::FreeModule;
use crate::error::{Error, Result};
use crate::poly::{parse_generators, Monomial, Polynomial, RingSpec};

/// An ideal of `R = S/J`, given by generators (reduced modulo `J`).
/// Generators may be inhomogeneous; graded operations check homogeneity.
pub struct Ideal {
    ring: RingSpec,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            gb,
        }
    }
}

/// A prime generated by variables; `vars` holds sorted variable indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialPrime {
    pub vars: Vec<usize>,
    names: Vec<String>,
}

impl MonomialPrime {
    fn new(ring: &RingSpec, vars: Vec<usize>) -> MonomialPrime {
        let names = vars
            .iter()
            .map(|&i| ring.base().vars()[i].clone())
            .collect();
        MonomialPrime { vars, names }
    }

    pub fn to_ideal(&self, ring: &RingSpec) -> Result<Ideal> {
        let gens = self
            .vars
            .iter()
            .map(|&i| Polynomial::var(ring.base(), i))
            .collect();
        Ideal::new(ring, gens)
    }

    /// Height in the ambient polynomial ring.
    pub fn codim(&self) -> usize {
        self.vars.len()
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.names.is_empty() {
            write!(f, "(0)")
        } else {
            write!(f, "({})", self.names.join(", "))
        }
    }
}

impl Ideal {
    pub fn new(ring: &RingSpec, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.ring().same(ring.base()) {
                return Err(Error::Usage(format!(
                    "generator {g} is not in {}",
                    ring.base()
                )));
            }
            let g = ring.reduce(&g)?;
            if !g.is_zero() && !kept.contains(&g) {
                kept.push(g);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: kept,
            gb: OnceLock::new(),
        })
    }

    pub fn parse(ring: &RingSpec, text: &str) -> Result<Ideal> {
        Ideal::new(ring, parse_generators(ring.base(), text)?)
    }

    pub fn zero(ring: &RingSpec) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            gb: OnceLock::new(),
        }
    }

    pub fn unit(ring: &RingSpec) -> Ideal {
        Ideal {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring.base())],
            gb: OnceLock::new(),
        }
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &RingSpec) -> Ideal {
        let gens = (0..ring.nvars())
            .map(|i| Polynomial::var(ring.base(), i))
            .collect();
        Ideal::new(ring, gens).expect("variables are valid generators")
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// Reduced Gröbner basis of `I + J` in `S`.
    pub fn basis(&self) -> Result<&[Polynomial]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let mut all = self.gens.clone();
        all.extend_from_slice(self.ring.relations());
        let gb = ideal_basis(self.ring.base(), &all, self.ring.degree_cap())?;
        Ok(self.gb.get_or_init(|| gb))
    }

    /// Leading monomials of the reduced basis of `I + J`.
    pub fn lead_monomials(&self) -> Result<Vec<Monomial>> {
        Ok(self
            .basis()?
            .iter()
            .map(|g| g.lead_monomial().unwrap().clone())
            .collect())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        Ok(normal_form(f, self.basis()?))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        Ok(self.basis()? == other.basis()?)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.basis()?.iter().any(|g| g.is_constant()))
    }

    /// True when `I + J` has a basis of monomials.
    pub fn is_monomial(&self) -> Result<bool> {
        Ok(self.basis()?.iter().all(|g| g.is_monomial()))
    }

    /// Krull dimension of `R/I`; `-1` when `I` is the unit ideal.
    pub fn dim(&self) -> Result<i64> {
        Ok(monomial::dimension(
            self.ring.nvars(),
            &self.lead_monomials()?,
        ))
    }

    /// Generators of `I` in canonical form: the elements of the reduced
    /// basis of `I + J` that survive modulo `J`.
    pub fn canonical_generators(&self) -> Result<Vec<Polynomial>> {
        let qgb = self.ring.quotient_basis()?;
        let mut out = Vec::new();
        for g in self.basis()? {
            let r = normal_form(g, qgb);
            if !r.is_zero() {
                out.push(r);
            }
        }
        Ok(out)
    }

    /// Minimal homogeneous generators.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>> {
        let f = FreeModule::standard(&self.ring, 1);
        let vs = minimal_generators(&f, self.gens.iter().map(|g| vec![g.clone()]).collect())?;
        Ok(vs.into_iter().map(|mut v| v.pop().unwrap()).collect())
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> Result<usize> {
        Ok(self.minimal_generators()?.len())
    }

    fn check_same_ring(&self, other: &Ideal) -> Result<()> {
        if !self.ring.same(&other.ring) {
            return Err(Error::Usage(format!(
                "ideals of different rings {} and {}",
                self.ring, other.ring
            )));
        }
        Ok(())
    }

    // syzygies of a list of ring elements, as coefficient vectors
    fn element_syzygies(&self, elems: &[Polynomial]) -> Result<Vec<Vec<Polynomial>>> {
        let cols: Vec<RawVec> = elems.iter().map(|e| vec![e.terms().to_vec()]).collect();
        let twists: Vec<i64> = elems
            .iter()
            .map(|e| e.degree().unwrap_or(0) as i64)
            .collect();
        let raw = syzygy_vectors(&self.ring, &[0], &cols, &twists)?;
        let base = self.ring.base();
        Ok(raw.into_iter().map(|v| super::from_raw(base, v)).collect())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// `I ∩ K`, read off the syzygies of the joint generator list.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        let p = self.gens.len();
        let mut all = self.gens.clone();
        all.extend_from_slice(&other.gens);
        let syz = self.element_syzygies(&all)?;
        let mut gens = Vec::new();
        for c in syz {
            let mut s = Polynomial::zero(self.ring.base());
            for (ci, a) in c[..p].iter().zip(&self.gens) {
                s = s.add(&ci.mul(a));
            }
            gens.push(s);
        }
        Ideal::new(&self.ring, gens)
    }

    /// `(I : f)`.
    pub fn quotient_element(&self, f: &Polynomial) -> Result<Ideal> {
        let f = self.ring.reduce(f)?;
        if f.is_zero() {
            return Ok(Ideal::unit(&self.ring));
        }
        let mut elems = vec![f];
        elems.extend_from_slice(&self.gens);
        let syz = self.element_syzygies(&elems)?;
        let gens = syz.into_iter().map(|c| c[0].clone()).collect();
        Ideal::new(&self.ring, gens)
    }

    /// `(I : K)`, the intersection of `(I : k)` over generators `k` of `K`.
    pub fn quotient(&self, other: &Ideal) -> Result<Ideal> {
        self.check_same_ring(other)?;
        let mut acc = Ideal::unit(&self.ring);
        for k in &other.gens {
            acc = acc.intersect(&self.quotient_element(k)?)?;
        }
        Ok(acc)
    }

    /// Radical membership by the Rabinowitsch trick: `f ∈ √(I + J)` iff
    /// `1 ∈ (I + J, 1 - t·f)` in `S[t]`.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        let f = self.ring.reduce(f)?;
        if f.is_zero() || self.contains(&f)? {
            return Ok(true);
        }
        let base = self.ring.base();
        let ext = base.with_extra_variable(&base.fresh_name("t"))?;
        let t = Polynomial::var(&ext, base.nvars());
        let mut gens = Vec::new();
        for g in self.gens.iter().chain(self.ring.relations()) {
            gens.push(g.embed(&ext)?);
        }
        gens.push(Polynomial::one(&ext).sub(&t.mul(&f.embed(&ext)?)));
        let gb = ideal_basis(&ext, &gens, self.ring.degree_cap())?;
        Ok(gb.iter().any(|g| g.is_constant()))
    }

    /// `√I ⊆ √K`.
    pub fn radical_contained_in(&self, other: &Ideal) -> Result<bool> {
        self.check_same_ring(other)?;
        for g in &self.gens {
            if !other.radical_contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn radical_equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.radical_contained_in(other)? && other.radical_contained_in(self)?)
    }

    fn monomial_leads(&self) -> Result<Vec<Monomial>> {
        if !self.is_monomial()? {
            return Err(Error::Unsupported(format!(
                "{self} is not a monomial ideal"
            )));
        }
        self.lead_monomials()
    }

    /// Minimal primes of `I + J` (monomial ideals only).
    pub fn minimal_primes(&self) -> Result<Vec<MonomialPrime>> {
        let leads = self.monomial_leads()?;
        let primes = monomial::minimal_primes(self.ring.nvars(), &leads)?;
        Ok(primes
            .into_iter()
            .map(|p| MonomialPrime::new(&self.ring, p))
            .collect())
    }

    /// Minimal primes of `I` among caller-supplied candidates. Each
    /// candidate must be generated by variables unless `asserted_prime`
    /// (the caller vouches for primality); candidates not containing `I`
    /// are dropped, and of the rest only the inclusion-minimal ones kept.
    pub fn minimal_primes_among(
        &self,
        candidates: &[Ideal],
        asserted_prime: bool,
    ) -> Result<Vec<Ideal>> {
        let mut over = Vec::new();
        for c in candidates {
            self.check_same_ring(c)?;
            let linear = c
                .gens
                .iter()
                .all(|g| g.is_monomial() && g.degree() == Some(1));
            if !asserted_prime && !linear {
                return Err(Error::Unsupported(format!(
                    "cannot verify that {c} is prime"
                )));
            }
            if c.contains_ideal(self)? {
                over.push(c);
            }
        }
        let mut out: Vec<Ideal> = Vec::new();
        for (k, c) in over.iter().enumerate() {
            let mut minimal = true;
            for (j, o) in over.iter().enumerate() {
                if j != k && c.contains_ideal(o)? && !(o.contains_ideal(c)? && j > k) {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                out.push((*c).clone());
            }
        }
        Ok(out)
    }

    /// Associated primes of `R/I` by brute-force colon search (monomial
    /// ideals only).
    pub fn associated_primes(&self) -> Result<Vec<MonomialPrime>> {
        let leads = self.monomial_leads()?;
        let primes = monomial::associated_primes(self.ring.base().weights(), &leads)?;
        Ok(primes
            .into_iter()
            .map(|p| MonomialPrime::new(&self.ring, p))
            .collect())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        let g: Vec<String> = self.gens.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", g.join(", "))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.ring)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(s: &str) -> RingSpec {
        RingSpec::parse(s).unwrap()
    }

    fn id(r: &RingSpec, s: &str) -> Ideal {
        Ideal::parse(r, s).unwrap()
    }

    #[test]
    fn intersection_of_monomial_ideals() {
        let r = ring("QQ[x,y,z]");
        let i = id(&r, "(x)").intersect(&id(&r, "(y, z)")).unwrap();
        assert!(i.equals(&id(&r, "(x*y, x*z)")).unwrap());
    }

    #[test]
    fn colon_in_a_quotient_ring() {
        let r = ring("QQ[X,Y,Z]/(X^2,XY,XZ)");
        let q = Ideal::zero(&r)
            .quotient_element(&Polynomial::parse(r.base(), "x").unwrap())
            .unwrap();
        assert!(q.equals(&Ideal::maximal(&r)).unwrap());
    }

    #[test]
    fn quotient_by_ideal() {
        let r = ring("QQ[x,y,z]");
        let q = id(&r, "(x*y, x*z)").quotient(&id(&r, "(y, z)")).unwrap();
        assert!(q.equals(&id(&r, "(x)")).unwrap());
    }

    #[test]
    fn radical_membership() {
        let r = ring("QQ[x,y,z]");
        let i = id(&r, "(x^3, y^2)");
        assert!(i
            .radical_contains(&Polynomial::parse(r.base(), "x + y").unwrap())
            .unwrap());
        assert!(!i
            .radical_contains(&Polynomial::parse(r.base(), "z").unwrap())
            .unwrap());
        assert!(i.radical_equals(&id(&r, "(x, y)")).unwrap());
    }

    #[test]
    fn radical_in_quotient_ring() {
        let r = ring("QQ[X,Y,Z]/(X^2,XY,XZ)");
        // x is nilpotent in R
        assert!(Ideal::zero(&r)
            .radical_contains(&Polynomial::parse(r.base(), "x").unwrap())
            .unwrap());
    }

    #[test]
    fn dimensions_and_primes() {
        let r = ring("QQ[x,y,z]");
        let i = id(&r, "(x*y, x*z)");
        assert_eq!(i.dim().unwrap(), 2);
        let mp: Vec<String> = i
            .minimal_primes()
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(mp, vec!["(x)", "(y, z)"]);
        assert_eq!(Ideal::unit(&r).dim().unwrap(), -1);
        assert!(matches!(
            id(&r, "(x + y)").minimal_primes(),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn candidate_primes_are_checked() {
        let r = ring("QQ[x,y,z]");
        let i = id(&r, "(x*y + x*z)");
        let cands = vec![
            id(&r, "(x)"),
            id(&r, "(y + z)"),
            id(&r, "(x, y)"),
            id(&r, "(y)"),
        ];
        assert!(matches!(
            i.minimal_primes_among(&cands, false),
            Err(Error::Unsupported(_))
        ));
        let mp = i.minimal_primes_among(&cands, true).unwrap();
        let names: Vec<String> = mp.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, vec!["(x)", "(y + z)"]);
    }

    #[test]
    fn minimal_generators_of_ideal() {
        let r = ring("QQ[x,y,z]");
        let i = id(&r, "(x*y, x*z, x*y + x*z, x^2*y)");
        assert_eq!(i.mu().unwrap(), 2);
    }
}
