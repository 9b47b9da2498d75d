use serde::Serialize;

use super::complex::{ComplexReport, FreeComplex};
use super::free::{FreeModule, ModuleMap};
use crate::error::{Error, Result};
use crate::ext::PresentedModule;
use crate::groebner::{from_raw, kernel, syzygy_vectors, to_raw, SubmoduleOfFree};

/// A free resolution `… → F_1 → F_0 → M → 0`, computed up to a declared
/// length. `truncated_at` is `Some(k)` when `F_{k+1}` would be nonzero but
/// was not computed.
#[derive(Clone, Debug)]
pub struct Resolution {
    module: PresentedModule,
    complex: FreeComplex,
    minimal: bool,
    truncated_at: Option<usize>,
}

fn next_syzygies(d: &ModuleMap, minimal: bool) -> Result<SubmoduleOfFree> {
    if minimal {
        return kernel(d);
    }
    let ring = d.ring();
    let cols: Vec<_> = d.columns().iter().map(|c| to_raw(c)).collect();
    let raw = syzygy_vectors(ring, d.target().twists(), &cols, d.source().twists())?;
    SubmoduleOfFree::new(
        d.source(),
        raw.into_iter().map(|v| from_raw(ring.base(), v)).collect(),
    )
}

/// Resolve `m` through `F_up_to` (at least the presentation is kept).
/// With `minimal`, the presentation is pruned first and each syzygy step
/// keeps only minimal generators, so the ranks are the Betti numbers.
pub fn free_resolution(m: &PresentedModule, up_to: usize, minimal: bool) -> Result<Resolution> {
    let up_to = up_to.max(1);
    let ring = m.ring().clone();
    let pres = if minimal {
        m.minimal_presentation()?
    } else {
        m.clone()
    };
    let mut modules = vec![pres.generators_module().clone()];
    let mut maps: Vec<ModuleMap> = Vec::new();
    let mut finite = false;
    let d1 = pres.presentation().clone();
    if d1.ncols() == 0 || modules[0].rank() == 0 {
        finite = true;
    } else {
        modules.push(d1.source().clone());
        maps.push(d1);
    }
    while !finite {
        let syz = next_syzygies(maps.last().unwrap(), minimal)?;
        if syz.is_zero() {
            finite = true;
            break;
        }
        if maps.len() == up_to {
            break;
        }
        let d = syz.inclusion()?;
        modules.push(d.source().clone());
        maps.push(d);
        if ring.is_polynomial_ring() && maps.len() > ring.nvars() {
            return Err(Error::Integrity(format!(
                "resolution over a polynomial ring in {} variables did not stop",
                ring.nvars()
            )));
        }
    }
    let truncated_at = if finite { None } else { Some(maps.len()) };
    let complex = FreeComplex::new(&ring, 0, modules, maps)?;
    Ok(Resolution {
        module: pres,
        complex,
        minimal,
        truncated_at,
    })
}

impl Resolution {
    pub fn complex(&self) -> &FreeComplex {
        &self.complex
    }

    /// The presentation that was resolved (pruned when minimal).
    pub fn module(&self) -> &PresentedModule {
        &self.module
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn truncated_at(&self) -> Option<usize> {
        self.truncated_at
    }

    pub fn is_finite(&self) -> bool {
        self.truncated_at.is_none()
    }

    /// Index of the last computed free module.
    pub fn length(&self) -> usize {
        self.complex.hi().max(0) as usize
    }

    /// Ranks of `F_0, F_1, …` (Betti numbers when minimal).
    pub fn betti(&self) -> Vec<usize> {
        let r = self.complex.ranks();
        if r.is_empty() {
            vec![0]
        } else {
            r
        }
    }

    /// Projective dimension when the resolution ended inside the window;
    /// `-1` for the zero module.
    pub fn pd(&self) -> Option<i64> {
        if !self.is_finite() {
            return None;
        }
        if self.complex.module(0).rank() == 0 {
            return Some(-1);
        }
        Some(self.complex.hi())
    }

    pub fn module_at(&self, k: usize) -> FreeModule {
        self.complex.module(k as i64)
    }

    pub fn differential(&self, k: usize) -> ModuleMap {
        self.complex.differential(k as i64)
    }

    /// Whether `d_k` is available: inside the window, or anywhere once the
    /// resolution is known to have ended.
    pub fn covers(&self, k: usize) -> bool {
        self.is_finite() || k <= self.length()
    }

    /// Exactness at every interior position: `ker d_k ⊆ im d_{k+1}`, and
    /// `d_top` injective when the resolution is finite.
    pub fn verify_exactness(&self) -> Result<bool> {
        let top = self.length();
        for k in 1..=top {
            let d = self.differential(k);
            let ker = kernel(&d)?;
            if k == top {
                if self.is_finite() && !ker.is_zero() {
                    return Ok(false);
                }
                continue;
            }
            let im = SubmoduleOfFree::new(d.source(), self.differential(k + 1).columns().to_vec())?;
            if !im.contains_submodule(&ker)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every differential entry lies in the irrelevant ideal.
    pub fn entries_in_maximal_ideal(&self) -> bool {
        (1..=self.length()).all(|k| {
            self.differential(k)
                .columns()
                .iter()
                .flatten()
                .all(|p| p.constant_term() == p.field().zero())
        })
    }

    pub fn report(&self) -> ResolutionReport {
        ResolutionReport {
            minimal: self.minimal,
            truncated_at: self.truncated_at,
            betti: self.betti(),
            complex: self.complex.report(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionReport {
    pub minimal: bool,
    pub truncated_at: Option<usize>,
    pub betti: Vec<usize>,
    pub complex: ComplexReport,
}

/// Betti numbers of the minimal resolution through `F_up_to`.
pub fn betti_numbers(m: &PresentedModule, up_to: usize) -> Result<Vec<usize>> {
    Ok(free_resolution(m, up_to, true)?.betti())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::poly::RingSpec;

    #[test]
    fn resolution_of_xy_xz() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let m = PresentedModule::cyclic(&Ideal::parse(&r, "(xy, xz)").unwrap()).unwrap();
        let res = free_resolution(&m, 5, true).unwrap();
        assert_eq!(res.betti(), vec![1, 2, 1]);
        assert_eq!(res.pd(), Some(2));
        assert!(res.verify_exactness().unwrap());
        assert!(res.entries_in_maximal_ideal());
        let d2 = res.differential(2);
        let col: Vec<String> = d2.columns()[0].iter().map(|p| p.to_string()).collect();
        assert_eq!(col, vec!["z", "-y"]);
    }

    #[test]
    fn resolution_over_quotient_ring_is_truncated() {
        let r = RingSpec::parse("QQ[X,Y,Z]/(X^2,XY,XZ)").unwrap();
        let m = PresentedModule::cyclic(&Ideal::parse(&r, "(x)").unwrap()).unwrap();
        let res = free_resolution(&m, 3, true).unwrap();
        assert_eq!(res.betti(), vec![1, 1, 3, 6]);
        assert_eq!(res.truncated_at(), Some(3));
        assert!(res.verify_exactness().unwrap());
    }

    #[test]
    fn free_and_zero_modules() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let free = PresentedModule::free(&FreeModule::standard(&r, 2));
        let res = free_resolution(&free, 3, true).unwrap();
        assert_eq!(res.betti(), vec![2]);
        assert_eq!(res.pd(), Some(0));
        let zero = free_resolution(&PresentedModule::zero(&r), 3, true).unwrap();
        assert_eq!(zero.pd(), Some(-1));
    }
}
