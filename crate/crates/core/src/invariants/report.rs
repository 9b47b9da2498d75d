use serde::Serialize;

use super::numeric::{depth, grade_by_koszul, module_dimension, ExtendedInt};
use super::profile::ExtProfile;
use super::HilbertSeries;
use crate::error::{Error, Result};
use crate::ext::PresentedModule;
use crate::groebner::Ideal;

#[derive(Clone, Debug, Serialize)]
pub struct Window {
    /// Highest Ext index computed.
    pub up_to: usize,
    /// The resolution ended inside the window.
    pub complete: bool,
    pub degree_cap: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct Flags {
    pub cohen_macaulay: Option<bool>,
    pub finite_pd: bool,
    pub perfect: Option<bool>,
    pub quasi_perfect: Option<bool>,
}

/// Independent recomputations that the reported numbers were checked
/// against.
#[derive(Clone, Debug, Serialize)]
pub struct CrossChecks {
    pub grade_by_koszul: ExtendedInt,
    pub dim_by_hilbert_pole: i64,
    pub hilbert_by_resolution: Option<bool>,
}

/// Invariants of one module. Field order is the serialization order.
///
/// `g` is the first nonvanishing `Ext^i(M, R)`, `t` the depth from Koszul
/// homology on the variables, `r = dim M` from the lead terms of `Ann M`,
/// `d = dim R`; `betti` are the ranks of the minimal resolution.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantReport {
    pub module: String,
    pub ring: String,
    pub window: Window,
    pub d: i64,
    pub g: ExtendedInt,
    pub t: ExtendedInt,
    pub r: i64,
    pub pd: Option<i64>,
    pub betti: Vec<usize>,
    pub truncated_at: Option<usize>,
    pub mu: usize,
    pub hilbert: HilbertSeries,
    pub ann: Vec<String>,
    pub gamma: Vec<String>,
    pub hann: Vec<String>,
    pub flags: Flags,
    pub cross_checks: CrossChecks,
}

impl InvariantReport {
    /// `t ≤ r ≤ d` and `g ≤ d - r` (grade is bounded by the codimension,
    /// not by the depth: the residue field has `g = d`, `t = 0`).
    pub fn inequalities_hold(&self) -> bool {
        if self.r < 0 {
            return self.g.is_infinite() && self.t.is_infinite();
        }
        self.t <= ExtendedInt::Finite(self.r)
            && self.r <= self.d
            && self.g <= ExtendedInt::Finite(self.d - self.r)
    }
}

fn strings(ideal: &Ideal) -> Result<Vec<String>> {
    Ok(ideal
        .canonical_generators()?
        .iter()
        .map(|p| p.to_string())
        .collect())
}

pub fn invariant_report(m: &PresentedModule, label: &str) -> Result<InvariantReport> {
    let ring = m.ring();
    let d = ring.dim()?;
    let top = d.max(0) as usize;
    let profile = ExtProfile::new(m, top)?;
    let res = profile.resolution();
    let g = profile.grade();
    let ann = m.annihilator()?;
    let by_koszul = grade_by_koszul(&ann, &PresentedModule::ring_module(ring))?;
    if g != by_koszul {
        return Err(Error::Integrity(format!(
            "grade {g} from Ext but {by_koszul} from Koszul homology"
        )));
    }
    let t = depth(m)?;
    let r = module_dimension(m)?;
    let hilbert = HilbertSeries::of_module(m)?;
    let hilbert_by_resolution = if res.is_finite() {
        let h = HilbertSeries::of_resolution(res)?;
        if h != hilbert {
            return Err(Error::Integrity(format!(
                "Hilbert series {hilbert} but {h} from the resolution"
            )));
        }
        Some(true)
    } else {
        None
    };
    let pd = res.pd();
    let zero = r < 0;
    let flags = Flags {
        cohen_macaulay: if zero {
            None
        } else {
            Some(t == ExtendedInt::Finite(r))
        },
        finite_pd: pd.is_some(),
        perfect: pd.filter(|_| !zero).map(|p| g == ExtendedInt::Finite(p)),
        quasi_perfect: if zero { None } else { profile.quasi_perfect() },
    };
    Ok(InvariantReport {
        module: label.to_string(),
        ring: ring.to_string(),
        window: Window {
            up_to: profile.top(),
            complete: profile.is_complete(),
            degree_cap: ring.degree_cap(),
        },
        d,
        g,
        t,
        r,
        pd,
        betti: res.betti(),
        truncated_at: res.truncated_at(),
        mu: m.mu()?,
        hilbert,
        ann: strings(&ann)?,
        gamma: strings(&profile.gamma()?)?,
        hann: strings(&profile.hann()?)?,
        flags,
        cross_checks: CrossChecks {
            grade_by_koszul: by_koszul,
            dim_by_hilbert_pole: r,
            hilbert_by_resolution,
        },
    })
}
