//! Seeded random monomial ideals for property campaigns.
//!
//! Generators have exponents at most 3 in each variable; the same seed
//! always yields the same list.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::ExtendedInt;
use crate::complexes::free_resolution;
use crate::error::Result;
use crate::ext::PresentedModule;
use crate::groebner::Ideal;
use crate::poly::{Polynomial, RingSpec};

pub const DEFAULT_SEED: u64 = 20;
pub const DEFAULT_SIZE: usize = 100;
pub const MAX_EXPONENT: u32 = 3;

fn monomial(ring: &RingSpec, exps: &[u32]) -> Polynomial {
    Polynomial::monomial(ring.base(), exps, ring.base().field().one())
}

fn key(ideal: &Ideal) -> Result<Vec<String>> {
    Ok(ideal
        .canonical_generators()?
        .iter()
        .map(|p| p.to_string())
        .collect())
}

fn random_ideal(ring: &RingSpec, rng: &mut ChaCha8Rng) -> Result<Ideal> {
    let n = ring.nvars();
    let count = rng.gen_range(1..=4);
    let mut gens = Vec::with_capacity(count);
    while gens.len() < count {
        let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=MAX_EXPONENT)).collect();
        if exps.iter().any(|&e| e > 0) {
            gens.push(monomial(ring, &exps));
        }
    }
    Ideal::new(ring, gens)
}

/// `count` distinct proper monomial ideals of `ring`.
pub fn monomial_ideals(ring: &RingSpec, seed: u64, count: usize) -> Result<Vec<Ideal>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 100 * count.max(1) {
        attempts += 1;
        let i = random_ideal(ring, &mut rng)?;
        if seen.insert(key(&i)?) {
            out.push(i);
        }
    }
    Ok(out)
}

/// `R/I` for each ideal.
pub fn cyclic_modules(ideals: &[Ideal]) -> Result<Vec<PresentedModule>> {
    ideals.iter().map(PresentedModule::cyclic).collect()
}

/// A candidate that is often height-two perfect: pure powers of two
/// variables plus a few mixed monomials in them, or a random ideal.
fn height_two_candidate(ring: &RingSpec, rng: &mut ChaCha8Rng) -> Result<Ideal> {
    let n = ring.nvars();
    if n < 2 || rng.gen_bool(0.25) {
        return random_ideal(ring, rng);
    }
    let a = rng.gen_range(0..n);
    let b = (a + rng.gen_range(1..n)) % n;
    let mut gens = Vec::new();
    for v in [a, b] {
        let mut e = vec![0; n];
        e[v] = rng.gen_range(1..=MAX_EXPONENT);
        gens.push(monomial(ring, &e));
    }
    for _ in 0..rng.gen_range(0..=2) {
        let mut e = vec![0; n];
        e[a] = rng.gen_range(1..=MAX_EXPONENT);
        e[b] = rng.gen_range(1..=MAX_EXPONENT);
        gens.push(monomial(ring, &e));
    }
    Ideal::new(ring, gens)
}

/// Grade two and projective dimension two, by direct computation.
pub fn is_perfect_height_two(ideal: &Ideal) -> Result<bool> {
    let m = PresentedModule::cyclic(ideal)?;
    let res = free_resolution(&m, ideal.ring().nvars() + 1, true)?;
    if res.pd() != Some(2) {
        return Ok(false);
    }
    Ok(
        super::grade_by_koszul(ideal, &PresentedModule::ring_module(ideal.ring()))?
            == ExtendedInt::Finite(2),
    )
}

/// `count` distinct height-two perfect monomial ideals; every member is
/// verified, candidates that fail are skipped.
pub fn perfect_height_two(ring: &RingSpec, seed: u64, count: usize) -> Result<Vec<Ideal>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count && attempts < 200 * count.max(1) {
        attempts += 1;
        let i = height_two_candidate(ring, &mut rng)?;
        if !seen.insert(key(&i)?) {
            continue;
        }
        if is_perfect_height_two(&i)? {
            out.push(i);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_distinct() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let a = monomial_ideals(&r, 7, 30).unwrap();
        let b = monomial_ideals(&r, 7, 30).unwrap();
        assert_eq!(a.len(), 30);
        let ka: Vec<_> = a.iter().map(|i| key(i).unwrap()).collect();
        let kb: Vec<_> = b.iter().map(|i| key(i).unwrap()).collect();
        assert_eq!(ka, kb);
        assert_eq!(ka.iter().collect::<BTreeSet<_>>().len(), 30);
        let c = monomial_ideals(&r, 8, 30).unwrap();
        assert_ne!(ka, c.iter().map(|i| key(i).unwrap()).collect::<Vec<_>>());
    }

    #[test]
    fn perfect_corpus_members_are_verified() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let p = perfect_height_two(&r, 1, 5).unwrap();
        assert_eq!(p.len(), 5);
        assert!(!is_perfect_height_two(&Ideal::parse(&r, "(xy, xz)").unwrap()).unwrap());
    }
}
