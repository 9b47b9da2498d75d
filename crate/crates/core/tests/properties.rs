//! Randomized property tests over ℚ[x,y,z] and its quotients.

use num::{BigRational, One, Zero};
use proptest::prelude::*;

use extscope::complexes::{free_resolution, FreeModule};
use extscope::ext::{ext_dual, ext_range, ext_shift_check, iterated_ext, PresentedModule};
use extscope::groebner::{
    ideal_basis, normal_form, satisfies_buchberger_criterion, syzygies, Ideal, SubmoduleOfFree,
};
use extscope::invariants::{
    ass_oracle, depth, ext_dimension_bound_check, gamma, grade_by_ext, grade_by_koszul,
    homological_support_check, invariant_report, module_dimension, top_ext_generator_check,
    ExtendedInt, HilbertSeries,
};
use extscope::poly::{Coeff, Field, Monomial, MonomialOrder, PolyRing, Polynomial, RingSpec};

fn ring() -> RingSpec {
    RingSpec::parse("QQ[x,y,z]").unwrap()
}

fn build(r: &PolyRing, terms: &[([u32; 3], i64)]) -> Polynomial {
    terms.iter().fold(Polynomial::zero(r), |acc, (e, c)| {
        acc.add(&Polynomial::monomial(r, e, Field::Rational.from_i64(*c)))
    })
}

fn exps(max: u32) -> impl Strategy<Value = [u32; 3]> {
    [0..=max, 0..=max, 0..=max]
}

fn poly_terms() -> impl Strategy<Value = Vec<([u32; 3], i64)>> {
    prop::collection::vec((exps(2), -3i64..=3), 0..5)
}

/// Exponent vectors of 1 to 4 nonconstant monomial generators.
fn monomial_gens(max: u32) -> impl Strategy<Value = Vec<[u32; 3]>> {
    prop::collection::vec(
        exps(max).prop_filter("nonconstant", |e| e.iter().sum::<u32>() > 0),
        1..5,
    )
}

fn monomial_ideal(r: &RingSpec, gens: &[[u32; 3]]) -> Ideal {
    let gens = gens
        .iter()
        .map(|e| Polynomial::monomial(r.base(), e, Field::Rational.one()))
        .collect();
    Ideal::new(r, gens).unwrap()
}

fn monomials_of_degree(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

/// A homogeneous polynomial of degree 1 or 2 with small coefficients.
fn homogeneous_terms() -> impl Strategy<Value = Vec<([u32; 3], i64)>> {
    (1u32..=2).prop_flat_map(|d| {
        let mons = monomials_of_degree(d);
        let n = mons.len();
        prop::collection::vec((0..n, -2i64..=2), 1..4).prop_map(move |picks| {
            picks
                .into_iter()
                .map(|(i, c)| (mons[i], if c == 0 { 1 } else { c }))
                .collect()
        })
    })
}

fn nonzero_homogeneous(r: &PolyRing, terms: &[([u32; 3], i64)]) -> Option<Polynomial> {
    let p = build(r, terms);
    (!p.is_zero()).then_some(p)
}

fn hilbert(m: &PresentedModule) -> HilbertSeries {
    HilbertSeries::of_module(m).unwrap().shift_normalized()
}

fn rational(c: &Coeff) -> BigRational {
    match c {
        Coeff::Q(q) => q.clone(),
        Coeff::Fp(v) => BigRational::from_integer((*v).into()),
    }
}

/// Basis of the kernel of a dense rational matrix by row reduction.
fn nullspace(mut a: Vec<Vec<BigRational>>, ncols: usize) -> Vec<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = BigRational::one() / a[row][col].clone();
        for v in a[row].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..a.len() {
            if i != row && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                let pivot_row = a[row].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![BigRational::zero(); ncols];
            v[fc] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][fc].clone();
            }
            v
        })
        .collect()
}

/// Every syzygy of `gens` in degree `c`, found by linear algebra on the
/// graded piece `S_c`.
fn graded_syzygies(r: &PolyRing, gens: &[Polynomial], c: u32) -> Vec<Vec<Polynomial>> {
    let target = monomials_of_degree(c);
    let mut columns: Vec<(usize, [u32; 3])> = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        let e = g.degree().unwrap();
        if e <= c {
            columns.extend(monomials_of_degree(c - e).into_iter().map(|u| (j, u)));
        }
    }
    let mut a = vec![vec![BigRational::zero(); columns.len()]; target.len()];
    for (k, (j, u)) in columns.iter().enumerate() {
        let prod = gens[*j].mul(&Polynomial::monomial(r, u, Field::Rational.one()));
        for (m, coeff) in prod.terms() {
            let i = target
                .iter()
                .position(|t| t.as_slice() == m.exponents())
                .unwrap();
            a[i][k] = rational(coeff);
        }
    }
    nullspace(a, columns.len())
        .into_iter()
        .map(|v| {
            let mut z = vec![Polynomial::zero(r); gens.len()];
            for (k, q) in v.iter().enumerate() {
                if !q.is_zero() {
                    let (j, u) = columns[k];
                    let term =
                        Polynomial::monomial(r, &u, Field::Rational.from_rational(q).unwrap());
                    z[j] = z[j].add(&term);
                }
            }
            z
        })
        .collect()
}

fn mono(r: &PolyRing, e: &[u32; 3]) -> Monomial {
    r.monomial(e)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ring_axioms(a in poly_terms(), b in poly_terms(), c in poly_terms()) {
        let r = ring();
        let s = r.base();
        let (a, b, c) = (build(s, &a), build(s, &b), build(s, &c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&Polynomial::one(s)), a.clone());
    }

    #[test]
    fn text_round_trip(a in poly_terms()) {
        let r = ring();
        let p = build(r.base(), &a);
        let text = p.to_string();
        let back = Polynomial::parse(r.base(), &text).unwrap();
        prop_assert_eq!(&back, &p);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn division_reconstructs(f in poly_terms(), ds in prop::collection::vec(poly_terms(), 1..4)) {
        let r = ring();
        let s = r.base();
        let f = build(s, &f);
        let ds: Vec<Polynomial> = ds.iter().map(|d| build(s, d)).filter(|d| !d.is_zero()).collect();
        prop_assume!(!ds.is_empty());
        let (qs, rem) = f.divide_with_remainder(&ds).unwrap();
        let back = qs.iter().zip(&ds).fold(rem.clone(), |acc, (q, d)| acc.add(&q.mul(d)));
        prop_assert_eq!(back, f);
        for (m, _) in rem.terms() {
            prop_assert!(ds.iter().all(|d| !d.lead_monomial().unwrap().divides(m)));
        }
    }

    #[test]
    fn order_is_multiplicative_and_graded(u in exps(3), v in exps(3), w in exps(3)) {
        let r = ring();
        let s = r.base();
        prop_assert_eq!(s.order(), MonomialOrder::DegRevLex);
        let (u, v, w) = (mono(s, &u), mono(s, &v), mono(s, &w));
        let uv = s.cmp(&u, &v);
        prop_assert_eq!(s.cmp(&u.mul(&w), &v.mul(&w)), uv);
        if u.degree() != v.degree() {
            prop_assert_eq!(uv, u.degree().cmp(&v.degree()));
        }
        prop_assert_eq!(uv == std::cmp::Ordering::Equal, u == v);
    }

    #[test]
    fn ideal_bases_satisfy_buchberger(gens in prop::collection::vec(poly_terms(), 1..4)) {
        let r = ring();
        let s = r.base();
        let gens: Vec<Polynomial> = gens.iter().map(|g| build(s, g)).filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let gb = ideal_basis(s, &gens, 12).unwrap();
        prop_assert!(satisfies_buchberger_criterion(&gb));
        for g in &gens {
            prop_assert!(normal_form(g, &gb).is_zero());
        }
    }

    #[test]
    fn monomial_membership_is_divisibility(gens in monomial_gens(4), f in exps(4)) {
        let r = ring();
        let s = r.base();
        let i = monomial_ideal(&r, &gens);
        let m = mono(s, &f);
        let divisible = gens.iter().any(|g| mono(s, g).divides(&m));
        let p = Polynomial::monomial(s, &f, Field::Rational.one());
        prop_assert_eq!(i.contains(&p).unwrap(), divisible);
    }

    #[test]
    fn colon_multiplies_back(gens in monomial_gens(3), f in poly_terms()) {
        let r = ring();
        let i = monomial_ideal(&r, &gens);
        let f = build(r.base(), &f);
        let colon = i.quotient_element(&f).unwrap();
        for g in colon.generators() {
            prop_assert!(i.contains(&g.mul(&f)).unwrap());
        }
        prop_assert!(colon.contains_ideal(&i).unwrap());
    }

    #[test]
    fn radical_membership_matches_power_search(gens in monomial_gens(4), f in exps(4)) {
        let r = ring();
        let i = monomial_ideal(&r, &gens);
        let f = Polynomial::monomial(r.base(), &f, Field::Rational.one());
        let by_powers = (1..=4).any(|k| i.contains(&f.pow(k)).unwrap());
        prop_assert_eq!(i.radical_contains(&f).unwrap(), by_powers);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn syzygies_are_exact(gens in prop::collection::vec(homogeneous_terms(), 2..4)) {
        let r = ring();
        let s = r.base();
        let gens: Vec<Polynomial> = gens.iter().filter_map(|g| nonzero_homogeneous(s, g)).collect();
        prop_assume!(gens.len() >= 2);
        let f1 = FreeModule::standard(&r, 1);
        let sub = SubmoduleOfFree::new(&f1, gens.iter().map(|g| vec![g.clone()]).collect()).unwrap();
        let syz = syzygies(&sub).unwrap();
        for z in syz.generators() {
            let total = z.iter().zip(&gens).fold(Polynomial::zero(s), |acc, (a, g)| acc.add(&a.mul(g)));
            prop_assert!(total.is_zero());
        }
        for c in 2..=4 {
            for z in graded_syzygies(s, &gens, c) {
                prop_assert!(syz.contains(&z).unwrap(), "degree-{} syzygy {:?} missing", c, z);
            }
        }
    }

    #[test]
    fn resolutions_are_minimal_exact_complexes(gens in monomial_gens(3), seed in any::<u64>()) {
        let r = ring();
        let i = monomial_ideal(&r, &gens);
        let m = PresentedModule::cyclic(&i).unwrap();
        let res = free_resolution(&m, 4, true).unwrap();
        prop_assert!(res.complex().is_complex());
        prop_assert!(res.verify_exactness().unwrap());
        prop_assert!(res.entries_in_maximal_ideal());
        prop_assert!(res.is_finite());

        let mut shuffled: Vec<Polynomial> = i.generators().to_vec();
        let k = shuffled.len();
        shuffled.rotate_left((seed as usize) % k);
        if seed % 2 == 1 {
            shuffled.reverse();
        }
        let again = free_resolution(&PresentedModule::cyclic(&Ideal::new(&r, shuffled).unwrap()).unwrap(), 4, true).unwrap();
        prop_assert_eq!(again.betti(), res.betti());
    }

    #[test]
    fn binomial_resolutions_are_exact(gens in prop::collection::vec(homogeneous_terms(), 1..4)) {
        let r = ring();
        let gens: Vec<Polynomial> = gens.iter().filter_map(|g| nonzero_homogeneous(r.base(), g)).collect();
        prop_assume!(!gens.is_empty());
        let m = PresentedModule::cyclic(&Ideal::new(&r, gens).unwrap()).unwrap();
        let res = free_resolution(&m, 4, true).unwrap();
        prop_assert!(res.complex().is_complex());
        prop_assert!(res.verify_exactness().unwrap());
        prop_assert!(res.entries_in_maximal_ideal());
    }

    #[test]
    fn auslander_buchsbaum(gens in monomial_gens(3)) {
        let r = ring();
        let m = PresentedModule::cyclic(&monomial_ideal(&r, &gens)).unwrap();
        let pd = free_resolution(&m, 4, true).unwrap().pd().unwrap();
        let depth = depth(&m).unwrap().finite().unwrap();
        prop_assert_eq!(pd + depth, 3);
    }

    #[test]
    fn hypersurface_resolutions_have_period_two(g in homogeneous_terms(), h in homogeneous_terms()) {
        let s = ring();
        let (Some(g), Some(h)) = (nonzero_homogeneous(s.base(), &g), nonzero_homogeneous(s.base(), &h)) else {
            return Ok(());
        };
        // d_1 keeps the given generator; later steps come out monic.
        let g = g.monic();
        let r = RingSpec::quotient(s.base().clone(), vec![g.mul(&h)]).unwrap();
        let m = PresentedModule::cyclic(&Ideal::new(&r, vec![g]).unwrap()).unwrap();
        let res = free_resolution(&m, 6, true).unwrap();
        prop_assert!(!res.is_finite());
        prop_assert!(res.betti().iter().all(|&b| b == 1));
        prop_assert!(res.verify_exactness().unwrap());
        for k in 1..=4 {
            let (a, b) = (res.differential(k), res.differential(k + 2));
            prop_assert_eq!(a.columns(), b.columns());
        }
    }

    #[test]
    fn ext_annihilators_are_sound(gens in monomial_gens(3)) {
        let r = ring();
        let m = PresentedModule::cyclic(&monomial_ideal(&r, &gens)).unwrap();
        let ann_m = m.annihilator().unwrap();
        for e in ext_range(&m, &PresentedModule::ring_module(&r), 3).unwrap() {
            let module = e.module();
            let ann = e.annihilator().unwrap();
            let rels = module.relation_basis().unwrap();
            let f0 = module.generators_module();
            for a in ann.generators() {
                for j in 0..f0.rank() {
                    let v: Vec<Polynomial> = f0.basis_vector(j).iter().map(|p| p.mul(a)).collect();
                    prop_assert!(rels.contains(&v));
                }
            }
            prop_assert!(ann.contains_ideal(&ann_m).unwrap());
        }
    }

    #[test]
    fn grade_by_ext_matches_koszul(gens in monomial_gens(3)) {
        let r = ring();
        let m = PresentedModule::cyclic(&monomial_ideal(&r, &gens)).unwrap();
        let by_koszul = grade_by_koszul(&m.annihilator().unwrap(), &PresentedModule::ring_module(&r)).unwrap();
        prop_assert_eq!(grade_by_ext(&m).unwrap(), by_koszul);
    }

    #[test]
    fn bridger_stability(gens in monomial_gens(3), i in 1usize..=3) {
        let r = ring();
        let m = PresentedModule::cyclic(&monomial_ideal(&r, &gens)).unwrap();
        let two = iterated_ext(&m, &[i, i]).unwrap();
        let four = iterated_ext(&m, &[i, i, i, i]).unwrap();
        prop_assert_eq!(hilbert(two.module()), hilbert(four.module()));
        prop_assert!(two.annihilator().unwrap().equals(&four.annihilator().unwrap()).unwrap());
    }

    #[test]
    fn ext_dimension_is_bounded(gens in monomial_gens(3), other in monomial_gens(3)) {
        let r = ring();
        let m = PresentedModule::cyclic(&monomial_ideal(&r, &gens)).unwrap();
        prop_assert!(ext_dimension_bound_check(&m, &PresentedModule::ring_module(&r)).unwrap().holds);
        let n = PresentedModule::cyclic(&monomial_ideal(&r, &other)).unwrap();
        prop_assert!(ext_dimension_bound_check(&m, &n).unwrap().holds);
    }

    #[test]
    fn perfect_modules_are_self_dual(gens in monomial_gens(3)) {
        let r = ring();
        let m = PresentedModule::cyclic(&monomial_ideal(&r, &gens)).unwrap();
        let g = grade_by_ext(&m).unwrap().finite().unwrap();
        let pd = free_resolution(&m, 4, true).unwrap().pd().unwrap();
        prop_assume!(g == pd);
        let dual = iterated_ext(&m, &[g as usize, g as usize]).unwrap();
        prop_assert_eq!(hilbert(dual.module()), hilbert(&m));
        prop_assert!(dual.annihilator().unwrap().equals(&m.annihilator().unwrap()).unwrap());
    }

    #[test]
    fn invariant_inequalities(gens in monomial_gens(3)) {
        let r = ring();
        let m = PresentedModule::cyclic(&monomial_ideal(&r, &gens)).unwrap();
        let rep = invariant_report(&m, "M").unwrap();
        prop_assert!(rep.inequalities_hold());
        prop_assert!(rep.t <= ExtendedInt::Finite(rep.r) && rep.r <= rep.d && rep.d == 3);
        prop_assert_eq!(rep.r, rep.cross_checks.dim_by_hilbert_pole);
        prop_assert_eq!(rep.r, module_dimension(&m).unwrap());
        prop_assert_eq!(rep.g, rep.cross_checks.grade_by_koszul);
        prop_assert_ne!(rep.cross_checks.hilbert_by_resolution, Some(false));
    }

    #[test]
    fn support_identity(gens in monomial_gens(3), other in monomial_gens(3)) {
        let r = ring();
        let m = PresentedModule::cyclic(&monomial_ideal(&r, &gens)).unwrap();
        let n = PresentedModule::cyclic(&monomial_ideal(&r, &other)).unwrap();
        prop_assert!(homological_support_check(&m, &n, None).unwrap().equal);
    }

    #[test]
    fn gamma_is_radical_of_annihilator(gens in monomial_gens(3)) {
        let r = ring();
        let m = PresentedModule::cyclic(&monomial_ideal(&r, &gens)).unwrap();
        let gam = gamma(&m, None).unwrap();
        prop_assert!(gam.radical_equals(&m.annihilator().unwrap()).unwrap());
    }

    #[test]
    fn associated_primes_are_among_ext_minimal_primes(gens in monomial_gens(3)) {
        let r = ring();
        let m = PresentedModule::cyclic(&monomial_ideal(&r, &gens)).unwrap();
        let rep = ass_oracle(&m).unwrap();
        prop_assert_eq!(rep.contained, Some(true));
        if rep.cohen_macaulay {
            prop_assert_eq!(rep.equal, Some(true));
        }
    }

    #[test]
    fn top_ext_has_betti_many_generators(gens in monomial_gens(3)) {
        let r = ring();
        let m = PresentedModule::cyclic(&monomial_ideal(&r, &gens)).unwrap();
        let rep = top_ext_generator_check(&m).unwrap().unwrap();
        prop_assert!(rep.holds, "{:?}", rep);
    }

    #[test]
    fn ideal_ext_is_shifted_quotient_ext(gens in monomial_gens(3), i in 1usize..=3) {
        let r = ring();
        let rep = ext_shift_check(&monomial_ideal(&r, &gens), i).unwrap();
        prop_assert!(rep.all_match, "{:?}", rep);
    }

    #[test]
    fn dual_ext_vanishes_below_grade(gens in monomial_gens(3)) {
        let r = ring();
        let m = PresentedModule::cyclic(&monomial_ideal(&r, &gens)).unwrap();
        let g = grade_by_ext(&m).unwrap().finite().unwrap() as usize;
        for i in 0..g {
            prop_assert!(ext_dual(&m, i).unwrap().is_zero().unwrap());
        }
        prop_assert!(!ext_dual(&m, g).unwrap().is_zero().unwrap());
    }
}
