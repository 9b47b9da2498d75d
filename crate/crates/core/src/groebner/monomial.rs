//! Combinatorics of monomial ideals, given by exponent vectors.

use crate::error::{Error, Result};
use crate::poly::Monomial;

fn support_mask(m: &Monomial) -> u64 {
    m.support().iter().fold(0, |acc, &i| acc | (1u64 << i))
}

fn check_nvars(nvars: usize) -> Result<()> {
    if nvars > 24 {
        return Err(Error::Unsupported(format!(
            "monomial search over {nvars} variables"
        )));
    }
    Ok(())
}

/// Krull dimension of `S/L` for the monomial ideal `L` generated by
/// `gens`: the size of a largest set of variables containing no
/// generator's support. Returns `-1` for the unit ideal.
pub fn dimension(nvars: usize, gens: &[Monomial]) -> i64 {
    let masks: Vec<u64> = gens.iter().map(support_mask).collect();
    if masks.contains(&0) {
        return -1;
    }
    // a generator "avoids" U when its support is not inside U
    let mut best = 0i64;
    let full = if nvars >= 64 {
        u64::MAX
    } else {
        (1u64 << nvars) - 1
    };
    let mut u = full;
    loop {
        let size = u.count_ones() as i64;
        if size > best && masks.iter().all(|&g| g & !u != 0) {
            best = size;
        }
        if u == 0 {
            break;
        }
        u = (u - 1) & full;
    }
    best
}

/// Minimal generators of a monomial ideal (duplicates and multiples removed),
/// in input order.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let redundant = gens
            .iter()
            .enumerate()
            .any(|(j, h)| j != i && h.divides(g) && (h != g || j < i));
        if !redundant {
            out.push(g.clone());
        }
    }
    out
}

/// Minimal primes of a monomial ideal, each as a sorted list of variable
/// indices (the empty list is the zero ideal). Empty for the unit ideal.
pub fn minimal_primes(nvars: usize, gens: &[Monomial]) -> Result<Vec<Vec<usize>>> {
    check_nvars(nvars)?;
    let masks: Vec<u64> = gens.iter().map(support_mask).collect();
    if masks.contains(&0) {
        return Ok(Vec::new());
    }
    let mut covers: Vec<u64> = Vec::new();
    let mut subsets: Vec<u64> = (0..1u64 << nvars).collect();
    subsets.sort_by_key(|s| (s.count_ones(), *s));
    for s in subsets {
        if masks.iter().all(|&g| g & s != 0) && !covers.iter().any(|&c| c & !s == 0) {
            covers.push(s);
        }
    }
    let mut out: Vec<Vec<usize>> = covers
        .into_iter()
        .map(|c| (0..nvars).filter(|i| c >> i & 1 == 1).collect())
        .collect();
    out.sort();
    Ok(out)
}

/// Generators of the colon `(L : m)` of a monomial ideal, minimalized.
pub fn colon(weights: &[u32], gens: &[Monomial], m: &Monomial) -> Vec<Monomial> {
    let q: Vec<Monomial> = gens
        .iter()
        .map(|g| {
            let exps: Vec<u32> = g
                .exps
                .iter()
                .zip(&m.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect();
            let degree = exps.iter().zip(weights).map(|(e, w)| e * w).sum();
            Monomial::from_parts(exps.into_iter().collect(), degree)
        })
        .collect();
    minimalize(&q)
}

fn is_variable(m: &Monomial) -> bool {
    m.exps.iter().sum::<u32>() == 1
}

/// Associated primes of `S/L` for a monomial ideal `L`, found by brute
/// force: every prime of the form `(L : m)` with `m` below the exponent
/// bound of the generators. Each prime is a sorted list of variable indices.
pub fn associated_primes(weights: &[u32], gens: &[Monomial]) -> Result<Vec<Vec<usize>>> {
    let nvars = weights.len();
    check_nvars(nvars)?;
    let gens = minimalize(gens);
    if gens.iter().any(|g| g.is_one()) {
        return Ok(Vec::new());
    }
    if gens.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    let bound: Vec<u32> = (0..nvars)
        .map(|i| gens.iter().map(|g| g.exps[i]).max().unwrap_or(0))
        .collect();
    let total: u64 = bound.iter().map(|&b| b as u64 + 1).product();
    if total > 5_000_000 {
        return Err(Error::Unsupported(
            "exponent box too large for the brute-force search".into(),
        ));
    }
    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let degree = exps.iter().zip(weights).map(|(e, w)| e * w).sum();
        let m = Monomial::from_parts(exps.iter().copied().collect(), degree);
        let q = colon(weights, &gens, &m);
        if !q.is_empty() && q.iter().all(is_variable) {
            let mut p: Vec<usize> = q.iter().map(|g| g.support()[0]).collect();
            p.sort();
            p.dedup();
            if !found.contains(&p) {
                found.push(p);
            }
        }
        // odometer
        let mut k = 0;
        loop {
            if k == nvars {
                found.sort();
                return Ok(found);
            }
            if exps[k] < bound[k] {
                exps[k] += 1;
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}
