use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::complexes::Resolution;
use crate::error::Result;
use crate::ext::PresentedModule;
use crate::groebner::monomial::{colon, minimalize};
use crate::poly::Monomial;

/// `H_M(t) = N(t) / Π_i (1 - t^{w_i})` with a Laurent numerator `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: BTreeMap<i64, i64>,
    weights: Vec<u32>,
}

fn add_shifted(acc: &mut BTreeMap<i64, i64>, p: &BTreeMap<i64, i64>, shift: i64, sign: i64) {
    for (e, c) in p {
        let v = acc.entry(e + shift).or_insert(0);
        *v += sign * c;
        if *v == 0 {
            acc.remove(&(e + shift));
        }
    }
}

/// Numerator of the Hilbert series of `S/L` for the monomial ideal `L`,
/// by pivoting on variables shared between generators.
pub fn k_polynomial(weights: &[u32], gens: &[Monomial]) -> BTreeMap<i64, i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return BTreeMap::from([(0, 1)]);
    }
    if gens.iter().any(|g| g.is_one()) {
        return BTreeMap::new();
    }
    let n = weights.len();
    let shared = (0..n).find(|&j| gens.iter().filter(|g| g.exponents()[j] > 0).count() > 1);
    let Some(j) = shared else {
        // pairwise coprime: a complete intersection
        let mut acc = BTreeMap::from([(0, 1)]);
        for g in &gens {
            let mut next = acc.clone();
            add_shifted(&mut next, &acc, g.degree() as i64, -1);
            acc = next;
        }
        return acc;
    };
    let mut exps = vec![0u32; n];
    exps[j] = 1;
    let x = Monomial::from_parts(exps.into_iter().collect(), weights[j]);
    let mut with_x = gens.clone();
    with_x.push(x.clone());
    let mut acc = k_polynomial(weights, &with_x);
    add_shifted(
        &mut acc,
        &k_polynomial(weights, &colon(weights, &gens, &x)),
        weights[j] as i64,
        1,
    );
    acc
}

impl HilbertSeries {
    /// Hilbert series of a presented module, from the leading terms of its
    /// relation module, position by position.
    pub fn of_module(m: &PresentedModule) -> Result<HilbertSeries> {
        let ring = m.ring();
        let weights = ring.base().weights().to_vec();
        let f0 = m.generators_module();
        let mut numerator = BTreeMap::new();
        if f0.rank() > 0 {
            let leads = m.relation_basis()?.leads();
            for i in 0..f0.rank() {
                let li: Vec<Monomial> = leads
                    .iter()
                    .filter(|(p, _)| *p == i)
                    .map(|(_, l)| l.clone())
                    .collect();
                add_shifted(&mut numerator, &k_polynomial(&weights, &li), f0.twist(i), 1);
            }
        }
        Ok(HilbertSeries { numerator, weights })
    }

    /// Alternating sum over a finite free resolution:
    /// `H_M = Σ_k (-1)^k Σ_j t^{a_kj} H_R`.
    pub fn of_resolution(res: &Resolution) -> Result<HilbertSeries> {
        let ring = res.complex().ring();
        let base = HilbertSeries::of_module(&PresentedModule::ring_module(ring))?;
        let mut numerator = BTreeMap::new();
        for k in 0..=res.length() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            for &a in res.module_at(k).twists() {
                add_shifted(&mut numerator, &base.numerator, a, sign);
            }
        }
        Ok(HilbertSeries {
            numerator,
            weights: base.weights,
        })
    }

    pub fn from_parts(numerator: BTreeMap<i64, i64>, weights: Vec<u32>) -> HilbertSeries {
        let numerator = numerator.into_iter().filter(|(_, c)| *c != 0).collect();
        HilbertSeries { numerator, weights }
    }

    pub fn numerator(&self) -> &BTreeMap<i64, i64> {
        &self.numerator
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// Multiplied by the power of `t` that moves the lowest numerator term
    /// to `t^0`: modules that agree up to a degree shift compare equal.
    pub fn shift_normalized(&self) -> HilbertSeries {
        let Some((&low, _)) = self.numerator.iter().next() else {
            return self.clone();
        };
        HilbertSeries {
            numerator: self.numerator.iter().map(|(e, c)| (e - low, *c)).collect(),
            weights: self.weights.clone(),
        }
    }

    /// Order of the pole at `t = 1`, which is the Krull dimension; `-1` for
    /// the zero series.
    pub fn pole_order(&self) -> i64 {
        if self.is_zero() {
            return -1;
        }
        // divide the numerator by (1 - t) while it vanishes at t = 1
        let low = *self.numerator.keys().next().unwrap();
        let high = *self.numerator.keys().last().unwrap();
        let mut coeffs: Vec<i128> = (low..=high)
            .map(|e| *self.numerator.get(&e).unwrap_or(&0) as i128)
            .collect();
        let mut mult = 0i64;
        while coeffs.iter().sum::<i128>() == 0 && !coeffs.is_empty() {
            // q(t)·(1 - t) = p(t): q_0 = p_0, q_k = p_k + q_{k-1}
            let mut q = Vec::with_capacity(coeffs.len() - 1);
            let mut run = 0i128;
            for c in &coeffs[..coeffs.len() - 1] {
                run += c;
                q.push(run);
            }
            coeffs = q;
            mult += 1;
        }
        self.weights.len() as i64 - mult
    }

    /// Values of the Hilbert function from degree `from` through `to`.
    pub fn hilbert_function(&self, from: i64, to: i64) -> Vec<i64> {
        if to < from {
            return Vec::new();
        }
        let start = self.numerator.keys().next().map_or(from, |&e| e.min(from));
        let mut s = vec![0i64; (to - start + 1) as usize];
        for (e, c) in self.numerator.range(..=to) {
            s[(e - start) as usize] += c;
        }
        for &w in &self.weights {
            for i in w as usize..s.len() {
                s[i] += s[i - w as usize];
            }
        }
        s.split_off((from - start) as usize)
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        for (e, c) in &self.numerator {
            let (sign, a) = if *c < 0 { ("-", -c) } else { ("+", *c) };
            if num.is_empty() {
                if sign == "-" {
                    num.push('-');
                }
            } else {
                num.push_str(&format!(" {sign} "));
            }
            let mono = match e {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            };
            match (a, mono.is_empty()) {
                (_, true) => num.push_str(&a.to_string()),
                (1, false) => num.push_str(&mono),
                _ => num.push_str(&format!("{a}*{mono}")),
            }
        }
        if num.is_empty() {
            return write!(f, "0");
        }
        let mut den = String::new();
        let mut ws = self.weights.clone();
        ws.sort();
        let mut k = 0;
        while k < ws.len() {
            let w = ws[k];
            let count = ws[k..].iter().take_while(|&&x| x == w).count();
            let base = if w == 1 {
                "(1-t)".to_string()
            } else {
                format!("(1-t^{w})")
            };
            den.push_str(&base);
            if count > 1 {
                den.push_str(&format!("^{count}"));
            }
            k += count;
        }
        write!(f, "({num})/{den}")
    }
}

impl Serialize for HilbertSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::poly::RingSpec;

    #[test]
    fn series_of_cyclic_modules() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let m = PresentedModule::cyclic(&Ideal::parse(&r, "(xy, xz)").unwrap()).unwrap();
        let h = HilbertSeries::of_module(&m).unwrap();
        assert_eq!(h.to_string(), "(1 - 2*t^2 + t^3)/(1-t)^3");
        assert_eq!(h.pole_order(), 2);
        let yz = PresentedModule::cyclic(&Ideal::parse(&r, "(y, z)").unwrap()).unwrap();
        let h = HilbertSeries::of_module(&yz).unwrap();
        assert_eq!(h.pole_order(), 1);
        assert_eq!(h.hilbert_function(0, 4), vec![1, 1, 1, 1, 1]);
        let free = HilbertSeries::of_module(&PresentedModule::ring_module(&r)).unwrap();
        assert_eq!(free.to_string(), "(1)/(1-t)^3");
        assert_eq!(free.hilbert_function(0, 3), vec![1, 3, 6, 10]);
    }

    #[test]
    fn k_polynomial_matches_inclusion_exclusion() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let b = r.base();
        let gens = vec![
            b.monomial(&[1, 1, 0]),
            b.monomial(&[1, 0, 1]),
            b.monomial(&[0, 1, 1]),
        ];
        // 1 - 3t^2 + 2t^3
        assert_eq!(
            k_polynomial(b.weights(), &gens),
            BTreeMap::from([(0, 1), (2, -3), (3, 2)])
        );
    }
}
