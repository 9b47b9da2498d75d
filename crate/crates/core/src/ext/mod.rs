//! Presentations of `Ext^i_R(M, N)`, iterated Ext modules, annihilators
//! and subquotients.
//!
//! `Ext` is computed from a minimal free resolution `F` of the first
//! argument: `Ext^i(M, N)` is the homology of `F^* ⊗ N` at `F_i^*`, taken
//! as a subquotient of the free module `F_i^* ⊗ G_0` where `N = coker(G_1 → G_0)`.

mod presented;

pub use presented::{homology, subquotient, PresentationReport, PresentedModule, Provenance};

use serde::Serialize;

use crate::complexes::{free_resolution, FreeModule, ModuleMap, Resolution};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::invariants::HilbertSeries;

/// A computed Ext module with the window of the resolution it came from.
#[derive(Clone, Debug)]
pub struct ExtResult {
    module: PresentedModule,
    path: Vec<usize>,
    window: usize,
    resolution_finite: bool,
}

impl ExtResult {
    pub fn module(&self) -> &PresentedModule {
        &self.module
    }

    /// `[i]` for `Ext^i`; the full index path for iterated Ext.
    pub fn path(&self) -> &[usize] {
        &self.path
    }

    pub fn index(&self) -> usize {
        self.path.first().copied().unwrap_or(0)
    }

    /// Length of the resolution used; the result is exact for every index
    /// up to one less than this (or for all indices if the resolution ended).
    pub fn window_valid_up_to(&self) -> Option<usize> {
        if self.resolution_finite {
            None
        } else {
            Some(self.window.saturating_sub(1))
        }
    }

    pub fn annihilator(&self) -> Result<Ideal> {
        self.module.annihilator()
    }

    pub fn is_zero(&self) -> Result<bool> {
        self.module.is_zero()
    }

    pub fn report(&self) -> Result<ExtReport> {
        Ok(ExtReport {
            path: self.path.clone(),
            window_valid_up_to: self.window_valid_up_to(),
            zero: self.is_zero()?,
            annihilator: self
                .annihilator()?
                .canonical_generators()?
                .iter()
                .map(|p| p.to_string())
                .collect(),
            hilbert_series: HilbertSeries::of_module(&self.module)?.to_string(),
            mu: self.module.generators_module().rank(),
            presentation: self.module.report(),
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtReport {
    pub path: Vec<usize>,
    pub window_valid_up_to: Option<usize>,
    pub zero: bool,
    pub annihilator: Vec<String>,
    pub hilbert_series: String,
    pub mu: usize,
    pub presentation: PresentationReport,
}

/// `Ext^i(M, N)` from an existing resolution of `M`. Needs `d_{i+1}`.
pub fn ext_from_resolution(res: &Resolution, n: &PresentedModule, i: usize) -> Result<ExtResult> {
    if !res.covers(i + 1) {
        return Err(Error::Truncated {
            available: res.length(),
            required: i + 1,
        });
    }
    let ring = res.complex().ring();
    if !ring.same(n.ring()) {
        return Err(Error::Usage("Ext arguments over different rings".into()));
    }
    let prev = if i == 0 {
        ModuleMap::zero(FreeModule::new(ring, Vec::new()), res.module_at(0).dual())
    } else {
        res.differential(i).transpose()
    };
    let next = res.differential(i + 1).transpose();
    let module = homology(&prev, &next, n)?.with_provenance(Provenance::Ext { index: i });
    Ok(ExtResult {
        module,
        path: vec![i],
        window: res.length(),
        resolution_finite: res.is_finite(),
    })
}

/// `Ext^i_R(M, N)`.
pub fn ext(m: &PresentedModule, n: &PresentedModule, i: usize) -> Result<ExtResult> {
    let res = free_resolution(m, i + 1, true)?;
    ext_from_resolution(&res, n, i)
}

/// `Ext^i(M, N)` for every `i` in `0..=top`, sharing one resolution.
pub fn ext_range(m: &PresentedModule, n: &PresentedModule, top: usize) -> Result<Vec<ExtResult>> {
    let res = free_resolution(m, top + 1, true)?;
    (0..=top).map(|i| ext_from_resolution(&res, n, i)).collect()
}

/// `Ext^i_R(M, R)`.
pub fn ext_dual(m: &PresentedModule, i: usize) -> Result<ExtResult> {
    ext(m, &PresentedModule::ring_module(m.ring()), i)
}

/// `M_(i_1,…,i_p) = Ext^{i_1}(Ext^{i_2}(… Ext^{i_p}(M, R) …, R), R)`,
/// applied right to left. A zero intermediate module short-circuits; the
/// empty path returns `M`.
pub fn iterated_ext(m: &PresentedModule, path: &[usize]) -> Result<ExtResult> {
    let ring = m.ring().clone();
    let mut current = m.clone();
    let mut window = usize::MAX;
    let mut finite = true;
    for &i in path.iter().rev() {
        if current.is_zero()? {
            current = PresentedModule::zero(&ring);
            break;
        }
        let e = ext_dual(&current, i)?;
        if !e.resolution_finite {
            finite = false;
            window = window.min(e.window);
        }
        current = e.module;
    }
    let module = current.with_provenance(Provenance::IteratedExt {
        path: path.to_vec(),
    });
    Ok(ExtResult {
        module,
        path: path.to_vec(),
        window: if finite { 0 } else { window },
        resolution_finite: finite,
    })
}

/// Invariant-level comparison of `Ext^i(I, R)` with `Ext^{i+1}(R/I, R)`.
#[derive(Clone, Debug, Serialize)]
pub struct ShiftCheckReport {
    pub index: usize,
    pub hilbert_left: String,
    pub hilbert_right: String,
    pub hilbert_equal: bool,
    pub annihilator_left: Vec<String>,
    pub annihilator_right: Vec<String>,
    pub annihilator_equal: bool,
    pub mu_left: usize,
    pub mu_right: usize,
    pub mu_equal: bool,
    pub all_match: bool,
    pub evidence: &'static str,
}

pub fn ext_shift_check(ideal: &Ideal, i: usize) -> Result<ShiftCheckReport> {
    if i == 0 {
        return Err(Error::Usage("the comparison needs i > 0".into()));
    }
    let left = ext_dual(&PresentedModule::ideal_module(ideal)?, i)?;
    let right = ext_dual(&PresentedModule::cyclic(ideal)?, i + 1)?;
    let (hl, hr) = (
        HilbertSeries::of_module(left.module())?,
        HilbertSeries::of_module(right.module())?,
    );
    let (al, ar) = (left.annihilator()?, right.annihilator()?);
    let (ml, mr) = (left.module().mu()?, right.module().mu()?);
    let strings = |a: &Ideal| -> Result<Vec<String>> {
        Ok(a.canonical_generators()?
            .iter()
            .map(|p| p.to_string())
            .collect())
    };
    let annihilator_equal = al.equals(&ar)?;
    Ok(ShiftCheckReport {
        index: i,
        hilbert_equal: hl == hr,
        hilbert_left: hl.to_string(),
        hilbert_right: hr.to_string(),
        annihilator_left: strings(&al)?,
        annihilator_right: strings(&ar)?,
        annihilator_equal,
        mu_left: ml,
        mu_right: mr,
        mu_equal: ml == mr,
        all_match: hl == hr && annihilator_equal && ml == mr,
        evidence: "invariant-level",
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::RingSpec;

    fn setup() -> (RingSpec, PresentedModule) {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let m = PresentedModule::cyclic(&Ideal::parse(&r, "(xy, xz)").unwrap()).unwrap();
        (r, m)
    }

    #[test]
    fn ext_of_xy_xz() {
        let (r, m) = setup();
        let e = ext_range(&m, &PresentedModule::ring_module(&r), 3).unwrap();
        assert!(e[0].is_zero().unwrap());
        assert!(e[1]
            .annihilator()
            .unwrap()
            .equals(&Ideal::parse(&r, "(x)").unwrap())
            .unwrap());
        assert!(e[2]
            .annihilator()
            .unwrap()
            .equals(&Ideal::parse(&r, "(y, z)").unwrap())
            .unwrap());
        assert_eq!(e[2].module().mu().unwrap(), 1);
        assert!(e[3].is_zero().unwrap());
    }

    #[test]
    fn iterated_paths() {
        let (r, m) = setup();
        let e = iterated_ext(&m, &[2, 2]).unwrap();
        assert!(e
            .annihilator()
            .unwrap()
            .equals(&Ideal::parse(&r, "(y, z)").unwrap())
            .unwrap());
        assert!(iterated_ext(&m, &[1, 2]).unwrap().is_zero().unwrap());
        assert!(iterated_ext(&m, &[])
            .unwrap()
            .annihilator()
            .unwrap()
            .equals(&Ideal::parse(&r, "(xy, xz)").unwrap())
            .unwrap());
    }

    #[test]
    fn truncation_is_reported() {
        let r = RingSpec::parse("QQ[X,Y,Z]/(X^2,XY,XZ)").unwrap();
        let m = PresentedModule::cyclic(&Ideal::parse(&r, "(x)").unwrap()).unwrap();
        let res = free_resolution(&m, 2, true).unwrap();
        let err = ext_from_resolution(&res, &PresentedModule::ring_module(&r), 2).unwrap_err();
        assert_eq!(
            err,
            Error::Truncated {
                available: 2,
                required: 3
            }
        );
    }

    #[test]
    fn shift_check_on_xy_xz() {
        let (r, _) = setup();
        let rep = ext_shift_check(&Ideal::parse(&r, "(xy, xz)").unwrap(), 1).unwrap();
        assert!(rep.all_match, "{rep:?}");
    }
}
