//! Checkers that evaluate structural statements about Ext on concrete
//! modules and report hypotheses, conclusions and the evidence used.

use std::collections::BTreeMap;

use serde::Serialize;

use super::numeric::{depth, module_dimension, ExtendedInt};
use super::profile::ExtProfile;
use crate::complexes::free_resolution;
use crate::error::{Error, Result};
use crate::ext::{ext_range, PresentedModule};
use crate::groebner::{Ideal, MonomialPrime};

fn strings(ideal: &Ideal) -> Result<Vec<String>> {
    Ok(ideal
        .canonical_generators()?
        .iter()
        .map(|p| p.to_string())
        .collect())
}

/// A support `V(a)` described by `a` up to radical, with its dimension and
/// (for monomial `a`) its minimal primes.
#[derive(Clone, Debug, Serialize)]
pub struct SupportDescriptor {
    #[serde(skip)]
    pub ideal: Ideal,
    pub generators: Vec<String>,
    pub dim: i64,
    pub minimal_primes: Option<Vec<String>>,
}

impl SupportDescriptor {
    pub fn of(ideal: &Ideal) -> Result<SupportDescriptor> {
        let minimal_primes = if ideal.is_monomial()? {
            Some(
                ideal
                    .minimal_primes()?
                    .iter()
                    .map(|p| p.to_string())
                    .collect(),
            )
        } else {
            None
        };
        Ok(SupportDescriptor {
            ideal: ideal.clone(),
            generators: strings(ideal)?,
            dim: ideal.dim()?,
            minimal_primes,
        })
    }

    /// Same support, i.e. radical equality of the defining ideals.
    pub fn same_support(&self, other: &SupportDescriptor) -> Result<bool> {
        self.ideal.radical_equals(&other.ideal)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IndexedAnnihilator {
    pub index: usize,
    pub zero: bool,
    pub annihilator: Vec<String>,
}

/// `Supp(M ⊗ N) = ∪_{i ≤ w} Supp Ext^i(M, N)` at radical level:
/// `Ann M + Ann N` against `∩_i Ann Ext^i(M, N)`.
#[derive(Clone, Debug, Serialize)]
pub struct SupportCheckReport {
    pub window: usize,
    pub tensor_side: SupportDescriptor,
    pub ext_side: SupportDescriptor,
    pub per_index: Vec<IndexedAnnihilator>,
    pub equal: bool,
}

/// The window defaults to `dim N`.
pub fn homological_support_check(
    m: &PresentedModule,
    n: &PresentedModule,
    window: Option<usize>,
) -> Result<SupportCheckReport> {
    let window = match window {
        Some(w) => w,
        None => module_dimension(n)?.max(0) as usize,
    };
    let ring = m.ring();
    let exts = ext_range(m, n, window)?;
    let mut per_index = Vec::with_capacity(exts.len());
    let mut acc: Option<Ideal> = None;
    for (i, e) in exts.iter().enumerate() {
        let zero = e.is_zero()?;
        let ann = e.annihilator()?;
        per_index.push(IndexedAnnihilator {
            index: i,
            zero,
            annihilator: strings(&ann)?,
        });
        if !zero {
            acc = Some(match acc {
                None => ann,
                Some(a) => a.intersect(&ann)?,
            });
        }
    }
    let ext_ideal = acc.unwrap_or_else(|| Ideal::unit(ring));
    let tensor_ideal = m.annihilator()?.sum(&n.annihilator()?)?;
    let tensor_side = SupportDescriptor::of(&tensor_ideal)?;
    let ext_side = SupportDescriptor::of(&ext_ideal)?;
    let equal = tensor_side.same_support(&ext_side)?;
    Ok(SupportCheckReport {
        window,
        tensor_side,
        ext_side,
        per_index,
        equal,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct OraclePrime {
    pub prime: String,
    pub codim: usize,
    pub indices: Vec<usize>,
}

/// `Ass(M) ⊆ ∪_{i=d-n}^{d} Min Ext^i_S(M, S)` over the ambient polynomial
/// ring `S` of dimension `d`, for `M` of dimension `n`.
#[derive(Clone, Debug, Serialize)]
pub struct AssOracleReport {
    pub ambient_dim: usize,
    pub module_dim: i64,
    pub indices: (usize, usize),
    pub primes: Vec<OraclePrime>,
    pub unsupported_indices: Vec<usize>,
    pub top_dimensional: Vec<String>,
    pub cohen_macaulay: bool,
    pub brute_force_ass: Option<Vec<String>>,
    pub contained: Option<bool>,
    pub equal: Option<bool>,
}

pub fn ass_oracle(m: &PresentedModule) -> Result<AssOracleReport> {
    let ms = m.over_ambient()?;
    let s = ms.ring().clone();
    let d = s.nvars();
    let n = module_dimension(&ms)?;
    if n < 0 {
        return Ok(AssOracleReport {
            ambient_dim: d,
            module_dim: n,
            indices: (d, d),
            primes: Vec::new(),
            unsupported_indices: Vec::new(),
            top_dimensional: Vec::new(),
            cohen_macaulay: true,
            brute_force_ass: Some(Vec::new()),
            contained: Some(true),
            equal: Some(true),
        });
    }
    let lo = d - n as usize;
    let profile = ExtProfile::new(&ms, d)?;
    let mut found: BTreeMap<Vec<usize>, (MonomialPrime, Vec<usize>)> = BTreeMap::new();
    let mut unsupported = Vec::new();
    let mut top_dimensional = Vec::new();
    for i in lo..=d {
        if profile.is_zero(i)? {
            continue;
        }
        let b = profile.annihilator(i)?;
        if !b.is_monomial()? {
            unsupported.push(i);
            continue;
        }
        for p in b.minimal_primes()? {
            if i == lo && p.codim() == lo {
                top_dimensional.push(p.to_string());
            }
            found
                .entry(p.vars.clone())
                .or_insert_with(|| (p.clone(), Vec::new()))
                .1
                .push(i);
        }
    }
    let cohen_macaulay = depth(&ms)? == ExtendedInt::Finite(n);
    let ann = ms.annihilator()?;
    let brute: Option<Vec<MonomialPrime>> = if ms.mu()? == 1 && ann.is_monomial()? {
        Some(ann.associated_primes()?)
    } else {
        None
    };
    let (contained, equal) = match (&brute, unsupported.is_empty()) {
        (Some(ass), true) => {
            let c = ass.iter().all(|p| found.contains_key(&p.vars));
            (Some(c), Some(c && ass.len() == found.len()))
        }
        _ => (None, None),
    };
    Ok(AssOracleReport {
        ambient_dim: d,
        module_dim: n,
        indices: (lo, d),
        primes: found
            .into_values()
            .map(|(p, indices)| OraclePrime {
                prime: p.to_string(),
                codim: p.codim(),
                indices,
            })
            .collect(),
        unsupported_indices: unsupported,
        top_dimensional,
        cohen_macaulay,
        brute_force_ass: brute.map(|a| a.iter().map(|p| p.to_string()).collect()),
        contained,
        equal,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct IndexedDimension {
    pub index: usize,
    pub dim: i64,
    pub bound: i64,
    pub within_bound: bool,
}

/// Hypotheses `dim Ext^{d-i}(M, R) ≤ i` for all `i` and `g = d - r`, the
/// conclusion `dim Ext^g(M, R) = r`, and the support comparison that the
/// dimension formula does not imply.
#[derive(Clone, Debug, Serialize)]
pub struct DimFormulaReport {
    pub ring_dim: i64,
    pub module_dim: i64,
    pub grade: ExtendedInt,
    pub per_index: Vec<IndexedDimension>,
    pub bounds_hold: bool,
    pub grade_condition: bool,
    pub hypotheses_hold: bool,
    pub ext_g_dim: Option<i64>,
    pub conclusion_holds: Option<bool>,
    /// `dim Ext^g = dim M`, the comparison in the Cohen–Macaulay criterion.
    pub equals_module_dim: Option<bool>,
    /// `dim Ext^g = d - g`, the alternative reading of the same statement.
    pub equals_codim_complement: Option<bool>,
    pub support_equal: Option<bool>,
    /// The dimension formula holds while `Supp Ext^g ≠ Supp M`.
    pub support_differs_despite_formula: bool,
}

pub fn dim_formula_check(m: &PresentedModule) -> Result<DimFormulaReport> {
    let d = m.ring().dim()?;
    let r = module_dimension(m)?;
    let profile = ExtProfile::standard(m)?;
    let g = profile.grade();
    let mut per_index = Vec::new();
    for j in 0..=d.max(0) as usize {
        let dim = match profile.ext(j) {
            Some(e) => module_dimension(e.module())?,
            None => -1,
        };
        let bound = d - j as i64;
        per_index.push(IndexedDimension {
            index: j,
            dim,
            bound,
            within_bound: dim <= bound,
        });
    }
    let bounds_hold = per_index.iter().all(|x| x.within_bound);
    let grade_condition = g.finite() == Some(d - r);
    let (mut ext_g_dim, mut support_equal) = (None, None);
    if let Some(gi) = g.finite() {
        if let Some(e) = profile.ext(gi as usize) {
            ext_g_dim = Some(module_dimension(e.module())?);
            support_equal = Some(e.annihilator()?.radical_equals(&m.annihilator()?)?);
        }
    }
    let hypotheses_hold = bounds_hold && grade_condition;
    let conclusion_holds = ext_g_dim.map(|x| x == r);
    Ok(DimFormulaReport {
        ring_dim: d,
        module_dim: r,
        grade: g,
        per_index,
        bounds_hold,
        grade_condition,
        hypotheses_hold,
        ext_g_dim,
        conclusion_holds,
        equals_module_dim: conclusion_holds,
        equals_codim_complement: ext_g_dim.zip(g.finite()).map(|(x, gi)| x == d - gi),
        support_equal,
        support_differs_despite_formula: conclusion_holds == Some(true)
            && support_equal == Some(false),
    })
}

/// `dim Ext^i(M, N) ≤ d - i` for `i ≤ d`, which holds when `pd M < ∞`.
#[derive(Clone, Debug, Serialize)]
pub struct ExtBoundReport {
    pub ring_dim: i64,
    pub finite_pd: bool,
    pub per_index: Vec<IndexedDimension>,
    pub holds: bool,
}

pub fn ext_dimension_bound_check(
    m: &PresentedModule,
    n: &PresentedModule,
) -> Result<ExtBoundReport> {
    let d = m.ring().dim()?.max(0);
    let exts = ext_range(m, n, d as usize)?;
    let finite_pd = exts
        .first()
        .is_none_or(|e| e.window_valid_up_to().is_none());
    let mut per_index = Vec::new();
    for (i, e) in exts.iter().enumerate() {
        let dim = module_dimension(e.module())?;
        let bound = d - i as i64;
        per_index.push(IndexedDimension {
            index: i,
            dim,
            bound,
            within_bound: dim <= bound,
        });
    }
    let holds = per_index.iter().all(|x| x.within_bound);
    Ok(ExtBoundReport {
        ring_dim: d,
        finite_pd,
        per_index,
        holds,
    })
}

/// `μ(Ext^p(M, R)) = β_p(M)` for `p = pd M < ∞`.
#[derive(Clone, Debug, Serialize)]
pub struct TopExtReport {
    pub pd: i64,
    pub betti: Vec<usize>,
    pub mu_top_ext: usize,
    pub holds: bool,
}

/// `None` when the resolution does not end within `dim R + 1` steps or
/// `M = 0`.
pub fn top_ext_generator_check(m: &PresentedModule) -> Result<Option<TopExtReport>> {
    let window = m.ring().nvars() + 1;
    let res = free_resolution(m, window, true)?;
    let Some(pd) = res.pd().filter(|&p| p >= 0) else {
        return Ok(None);
    };
    let e = crate::ext::ext_from_resolution(
        &res,
        &PresentedModule::ring_module(m.ring()),
        pd as usize,
    )?;
    let mu = e.module().mu()?;
    let betti = res.betti();
    Ok(Some(TopExtReport {
        pd,
        holds: mu == betti[pd as usize],
        betti,
        mu_top_ext: mu,
    }))
}

/// Generator counts for a height-two perfect ideal `I` of a
/// Cohen–Macaulay ring `S`: `μ(Ext²(S/I, S)) = μ(I) - 1`, the top-Ext
/// identity, and the Hilbert–Burch shape `(1, μ, μ - 1)`.
#[derive(Clone, Debug, Serialize)]
pub struct GeneratorCountReport {
    pub ideal: Vec<String>,
    pub mu_ideal: usize,
    pub betti: Vec<usize>,
    pub pd: Option<i64>,
    pub grade: ExtendedInt,
    pub hypotheses_hold: bool,
    pub failed_hypotheses: Vec<String>,
    pub mu_ext2: Option<usize>,
    pub mu_ext2_equals_mu_minus_one: Option<bool>,
    pub top_ext_equals_betti: Option<bool>,
    pub hilbert_burch_shape: Option<bool>,
}

impl GeneratorCountReport {
    /// Hypotheses hold and every identity checked out.
    pub fn all_hold(&self) -> bool {
        self.hypotheses_hold
            && self.mu_ext2_equals_mu_minus_one == Some(true)
            && self.top_ext_equals_betti == Some(true)
            && self.hilbert_burch_shape == Some(true)
    }
}

pub fn generator_count_check(ideal: &Ideal) -> Result<GeneratorCountReport> {
    let ring = ideal.ring();
    let m = PresentedModule::cyclic(ideal)?;
    let mu_ideal = ideal.mu()?;
    let res = free_resolution(&m, ring.nvars() + 1, true)?;
    let betti = res.betti();
    let pd = res.pd();
    let profile = ExtProfile::standard(&m)?;
    let grade = profile.grade();
    let mut failed = Vec::new();
    let d = ring.dim()?;
    if depth(&PresentedModule::ring_module(ring))? != ExtendedInt::Finite(d) {
        failed.push("ambient ring is not Cohen-Macaulay".to_string());
    }
    if grade != ExtendedInt::Finite(2) {
        failed.push(format!("height is {grade}, not 2"));
    }
    if pd != Some(2) {
        failed.push(match pd {
            Some(p) => format!("projective dimension is {p}, not 2"),
            None => "projective dimension is not finite within the window".to_string(),
        });
    }
    let hypotheses_hold = failed.is_empty();
    let mut report = GeneratorCountReport {
        ideal: strings(ideal)?,
        mu_ideal,
        betti: betti.clone(),
        pd,
        grade,
        hypotheses_hold,
        failed_hypotheses: failed,
        mu_ext2: None,
        mu_ext2_equals_mu_minus_one: None,
        top_ext_equals_betti: None,
        hilbert_burch_shape: None,
    };
    if hypotheses_hold {
        let e2 = profile.ext(2).ok_or(Error::Truncated {
            available: profile.top(),
            required: 2,
        })?;
        let mu2 = e2.module().mu()?;
        report.mu_ext2 = Some(mu2);
        report.mu_ext2_equals_mu_minus_one = Some(mu2 + 1 == mu_ideal);
        report.top_ext_equals_betti = Some(mu2 == betti[2]);
        report.hilbert_burch_shape = Some(betti == vec![1, mu_ideal, mu_ideal - 1]);
    }
    Ok(report)
}
