use std::collections::BTreeSet;

use serde::Serialize;

use crate::complexes::{free_resolution, Resolution};
use crate::error::{Error, Result};
use crate::ext::{ext_from_resolution, PresentedModule};
use crate::groebner::Ideal;

/// Per-index data of `Ext^i(I, R)`.
#[derive(Clone, Debug, Serialize)]
pub struct EassStep {
    pub index: usize,
    pub zero: bool,
    pub annihilator: Vec<String>,
    /// Minimal primes of the annihilator, when it is monomial.
    pub minimal_primes: Option<Vec<String>>,
    /// Every generator of the probe ideal lies in `rad Ann Ext^i`.
    pub probe_in_radical: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Periodicity {
    /// `d_{k+p} = d_k` entrywise for every `k ≥ start` inside the window.
    Periodic {
        start: usize,
        period: usize,
    },
    /// The resolution ended, so Ext vanishes beyond its length.
    Finite {
        length: usize,
    },
    Inconclusive,
}

#[derive(Clone, Debug, Serialize)]
pub struct EassReport {
    pub ideal: Vec<String>,
    pub window: usize,
    pub resolution_ranks: Vec<usize>,
    pub periodicity: Periodicity,
    pub steps: Vec<EassStep>,
    /// Union of the minimal primes seen so far, by index.
    pub min_union: Vec<String>,
    /// Last index at which the union grew.
    pub min_union_last_growth: Option<usize>,
    pub unsupported_indices: Vec<usize>,
    pub verdict: String,
}

/// Smallest period (then smallest start `≥ 1`) such that the
/// differentials repeat entrywise over the computed range, with at least
/// two comparisons and one full period covered.
pub fn detect_periodicity(res: &Resolution) -> Periodicity {
    if res.is_finite() {
        return Periodicity::Finite {
            length: res.length(),
        };
    }
    let top = res.length();
    let entries: Vec<_> = (0..=top)
        .map(|k| res.differential(k).columns().to_vec())
        .collect();
    for period in 1..=top / 2 {
        for start in 1..=top {
            if start + period > top {
                break;
            }
            let compared = top - period - start + 1;
            if compared < period.max(2) {
                break;
            }
            if (start..=top - period).all(|k| entries[k] == entries[k + period]) {
                return Periodicity::Periodic { start, period };
            }
        }
    }
    Periodicity::Inconclusive
}

/// `Ext^i(I, R)` for `i ≤ window` over a quotient ring, with annihilators,
/// minimal-prime unions and periodicity of the minimal resolution of `I`.
/// With `probe`, also tests `probe ⊆ rad Ann Ext^i` at every index.
pub fn eass_experiment(ideal: &Ideal, window: usize, probe: Option<&Ideal>) -> Result<EassReport> {
    if window < 4 {
        return Err(Error::Usage(format!(
            "eAss window must be at least 4, got {window}"
        )));
    }
    let ring = ideal.ring();
    let m = PresentedModule::ideal_module(ideal)?;
    let res = free_resolution(&m, window + 1, true)?;
    let periodicity = detect_periodicity(&res);
    let r = PresentedModule::ring_module(ring);
    let mut steps = Vec::new();
    let mut union = BTreeSet::new();
    let mut stable_from = 0;
    let mut unsupported = Vec::new();
    for i in 0..=window {
        let e = ext_from_resolution(&res, &r, i)?;
        let zero = e.is_zero()?;
        let ann = e.annihilator()?;
        let minimal_primes = if ann.is_monomial()? {
            Some(
                ann.minimal_primes()?
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>(),
            )
        } else {
            unsupported.push(i);
            None
        };
        let before = union.len();
        if let Some(mp) = &minimal_primes {
            if !zero {
                union.extend(mp.iter().cloned());
            }
        }
        if union.len() != before {
            stable_from = i;
        }
        let probe_in_radical = match probe {
            Some(p) => Some(p.radical_contained_in(&ann)?),
            None => None,
        };
        steps.push(EassStep {
            index: i,
            zero,
            annihilator: ann
                .canonical_generators()?
                .iter()
                .map(|p| p.to_string())
                .collect(),
            minimal_primes,
            probe_in_radical,
        });
    }
    let verdict = match &periodicity {
        Periodicity::Periodic { start, period } => {
            format!("finiteness evidence: periodic from step {start} with period {period}")
        }
        Periodicity::Finite { length } => {
            format!("finiteness evidence: resolution ends at step {length}")
        }
        Periodicity::Inconclusive => "inconclusive".to_string(),
    };
    Ok(EassReport {
        ideal: ideal
            .canonical_generators()?
            .iter()
            .map(|p| p.to_string())
            .collect(),
        window,
        resolution_ranks: res.betti(),
        periodicity,
        steps,
        min_union: union.into_iter().collect(),
        min_union_last_growth: if unsupported.is_empty() {
            Some(stable_from)
        } else {
            None
        },
        unsupported_indices: unsupported,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RingSpec;

    #[test]
    fn fermat_resolution_is_two_periodic() {
        let r = RingSpec::parse("F5[X,Y,Z]/(X+Y+Z)^5").unwrap();
        let xi = Ideal::parse(&r, "((x+y+z)^2)").unwrap();
        let rep = eass_experiment(&xi, 8, None).unwrap();
        assert_eq!(
            rep.periodicity,
            Periodicity::Periodic {
                start: 1,
                period: 2
            }
        );
        assert!(rep.verdict.contains("periodic from step 1"));
    }

    #[test]
    fn unit_ideal_is_trivially_finite() {
        let r = RingSpec::parse("QQ[X,Y,Z]/(X^2,XYZ)").unwrap();
        let rep = eass_experiment(&Ideal::unit(&r), 4, None).unwrap();
        assert_eq!(rep.periodicity, Periodicity::Finite { length: 0 });
        assert!(rep.steps[1..].iter().all(|s| s.zero));
    }

    #[test]
    fn small_window_is_rejected() {
        let r = RingSpec::parse("QQ[X,Y,Z]/(X^2,XYZ)").unwrap();
        assert!(matches!(
            eass_experiment(&Ideal::unit(&r), 3, None),
            Err(Error::Usage(_))
        ));
    }
}
