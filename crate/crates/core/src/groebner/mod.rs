//! Gröbner bases of ideals and of submodules of graded free modules, and
//! the ideal and module operations built on them.
//!
//! Over a quotient `R = S/J` everything is lifted to `S`: a submodule
//! `U ⊆ R^n` is represented by lifts of its generators together with
//! `J·e_i` for every basis vector.

mod engine;
mod ideal;
pub mod monomial;
mod submodule;

pub(crate) use engine::{GbEngine, RawVec};
pub use ideal::{Ideal, MonomialPrime};
pub(crate) use submodule::syzygy_vectors;
pub use submodule::{
    kernel, minimal_generators, module_basis, syzygies, ModuleGb, SubmoduleOfFree,
};

use crate::error::Result;
use crate::poly::{sub_mul_terms, PolyRing, Polynomial};

pub(crate) fn to_raw(v: &[Polynomial]) -> RawVec {
    v.iter().map(|p| p.terms().to_vec()).collect()
}

pub(crate) fn from_raw(ring: &PolyRing, v: RawVec) -> Vec<Polynomial> {
    v.into_iter()
        .map(|t| Polynomial::from_sorted_terms(ring.clone(), t))
        .collect()
}

/// Reduced Gröbner basis of the ideal generated by `gens` in `ring`,
/// sorted descending by leading monomial. The input may be inhomogeneous.
pub fn ideal_basis(ring: &PolyRing, gens: &[Polynomial], cap: u32) -> Result<Vec<Polynomial>> {
    let mut engine = GbEngine::new(ring, vec![0], cap);
    for g in gens {
        engine.add(vec![g.terms().to_vec()]);
    }
    engine.complete(None)?;
    Ok(engine
        .reduced_basis()
        .into_iter()
        .map(|mut v| Polynomial::from_sorted_terms(ring.clone(), v.pop().unwrap()))
        .collect())
}

/// Fully reduced remainder of `f` on division by `gb`. The divisors need
/// not be monic; the result is the normal form when `gb` is a Gröbner basis.
pub fn normal_form(f: &Polynomial, gb: &[Polynomial]) -> Polynomial {
    let ring = f.ring();
    let field = ring.field();
    let mut terms = f.terms().to_vec();
    let mut cursor = 0;
    while cursor < terms.len() {
        let m = &terms[cursor].0;
        let reducer = gb
            .iter()
            .find(|g| g.lead_monomial().is_some_and(|l| l.divides(m)));
        match reducer {
            Some(g) => {
                let lead = g.lead_monomial().unwrap();
                let q = lead.quotient_of(m);
                let coef = field.div(&terms[cursor].1, g.lead_coeff().unwrap());
                let tail = sub_mul_terms(ring, &terms[cursor..], &coef, &q, g.terms());
                terms.truncate(cursor);
                terms.extend(tail);
            }
            None => cursor += 1,
        }
    }
    Polynomial::from_sorted_terms(ring.clone(), terms)
}

/// Buchberger's criterion: every S-polynomial of two elements of `gb`
/// reduces to zero modulo `gb`.
pub fn satisfies_buchberger_criterion(gb: &[Polynomial]) -> bool {
    let field = match gb.first() {
        Some(g) => g.field(),
        None => return true,
    };
    for (a, f) in gb.iter().enumerate() {
        for g in &gb[a + 1..] {
            let (Some(lf), Some(lg)) = (f.lead_monomial(), g.lead_monomial()) else {
                continue;
            };
            let ring = f.ring();
            let l = ring.lcm(lf, lg);
            let s = f
                .mul_term(&lf.quotient_of(&l), &field.inv(f.lead_coeff().unwrap()))
                .sub(&g.mul_term(&lg.quotient_of(&l), &field.inv(g.lead_coeff().unwrap())));
            if !normal_form(&s, gb).is_zero() {
                return false;
            }
        }
    }
    true
}
