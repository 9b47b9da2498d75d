use super::numeric::ExtendedInt;
use crate::complexes::{free_resolution, Resolution};
use crate::error::{Error, Result};
use crate::ext::{ext_from_resolution, ExtResult, PresentedModule};
use crate::groebner::Ideal;
use crate::poly::RingSpec;

/// `Ext^i(M, R)` for `i = 0..=top` with their annihilators
/// `b_i = Ann Ext^i(M, R)`, sharing one resolution of `M`.
///
/// `complete` means the resolution ended inside the window, so every
/// `Ext^i` with `i > top` vanishes.
#[derive(Clone, Debug)]
pub struct ExtProfile {
    ring: RingSpec,
    resolution: Resolution,
    exts: Vec<ExtResult>,
    zero: Vec<bool>,
    complete: bool,
}

impl ExtProfile {
    pub fn new(m: &PresentedModule, top: usize) -> Result<ExtProfile> {
        let resolution = free_resolution(m, top + 1, true)?;
        let r = PresentedModule::ring_module(m.ring());
        let exts = (0..=top)
            .map(|i| ext_from_resolution(&resolution, &r, i))
            .collect::<Result<Vec<_>>>()?;
        let zero = exts
            .iter()
            .map(|e| e.is_zero())
            .collect::<Result<Vec<_>>>()?;
        let complete = resolution.is_finite();
        Ok(ExtProfile {
            ring: m.ring().clone(),
            resolution,
            exts,
            zero,
            complete,
        })
    }

    /// Window `dim R`, which is enough for grade and for `Hann`.
    pub fn standard(m: &PresentedModule) -> Result<ExtProfile> {
        let d = m.ring().dim()?.max(0) as usize;
        ExtProfile::new(m, d)
    }

    /// The minimal resolution the Ext modules were computed from.
    pub fn resolution(&self) -> &Resolution {
        &self.resolution
    }

    pub fn top(&self) -> usize {
        self.exts.len() - 1
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn ext(&self, i: usize) -> Option<&ExtResult> {
        self.exts.get(i)
    }

    pub fn exts(&self) -> &[ExtResult] {
        &self.exts
    }

    /// `b_i`; the unit ideal beyond a complete window.
    pub fn annihilator(&self, i: usize) -> Result<Ideal> {
        match self.exts.get(i) {
            Some(e) => e.annihilator(),
            None if self.complete => Ok(Ideal::unit(&self.ring)),
            None => Err(Error::Truncated {
                available: self.top(),
                required: i,
            }),
        }
    }

    pub fn is_zero(&self, i: usize) -> Result<bool> {
        match self.zero.get(i) {
            Some(z) => Ok(*z),
            None if self.complete => Ok(true),
            None => Err(Error::Truncated {
                available: self.top(),
                required: i,
            }),
        }
    }

    /// Indices of the nonvanishing Ext modules inside the window.
    pub fn nonvanishing(&self) -> Vec<usize> {
        (0..self.exts.len()).filter(|&i| !self.zero[i]).collect()
    }

    /// First nonvanishing index; `+∞` when all vanish.
    pub fn grade(&self) -> ExtendedInt {
        match self.nonvanishing().first() {
            Some(&i) => ExtendedInt::Finite(i as i64),
            None => ExtendedInt::Infinite,
        }
    }

    /// Last nonvanishing index, known only for a complete window.
    pub fn sup(&self) -> Option<ExtendedInt> {
        if !self.complete {
            return None;
        }
        Some(match self.nonvanishing().last() {
            Some(&i) => ExtendedInt::Finite(i as i64),
            None => ExtendedInt::Infinite,
        })
    }

    /// `inf = sup` of the nonvanishing indices (a complete window is needed).
    pub fn quasi_perfect(&self) -> Option<bool> {
        let nz = self.nonvanishing();
        self.sup().map(|_| nz.first() == nz.last())
    }

    fn intersection(&self, from: usize) -> Result<Ideal> {
        let mut acc: Option<Ideal> = None;
        for i in from..self.exts.len() {
            if self.zero[i] {
                continue;
            }
            let b = self.annihilator(i)?;
            acc = Some(match acc {
                None => b,
                Some(a) => a.intersect(&b)?,
            });
        }
        Ok(acc.unwrap_or_else(|| Ideal::unit(&self.ring)))
    }

    /// `γ(M) = ∩_{i>0} rad b_i`, represented by `∩_{i>0} b_i` (same
    /// radical) over the window.
    pub fn gamma(&self) -> Result<Ideal> {
        self.intersection(1)
    }

    /// `∩_{i≥0} b_i`, whose zero set is the homological support.
    pub fn support_ideal(&self) -> Result<Ideal> {
        self.intersection(0)
    }

    /// `Hann(M) = Π_{i=0}^{d} b_i`.
    pub fn hann(&self) -> Result<Ideal> {
        let d = self.ring.dim()?.max(0) as usize;
        if d > self.top() && !self.complete {
            return Err(Error::Truncated {
                available: self.top(),
                required: d,
            });
        }
        let mut acc = Ideal::unit(&self.ring);
        for i in 0..=d {
            let b = self.annihilator(i)?;
            if b.is_unit()? {
                continue;
            }
            acc = if acc.is_unit()? { b } else { acc.product(&b)? };
        }
        Ideal::new(&self.ring, acc.canonical_generators()?)
    }
}

/// `γ(M)` over a window of `window` Ext modules (default `dim R`).
pub fn gamma(m: &PresentedModule, window: Option<usize>) -> Result<Ideal> {
    match window {
        Some(w) => ExtProfile::new(m, w)?.gamma(),
        None => ExtProfile::standard(m)?.gamma(),
    }
}

/// `Hann(M)`.
pub fn hann(m: &PresentedModule) -> Result<Ideal> {
    ExtProfile::standard(m)?.hann()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (RingSpec, Ideal, PresentedModule) {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let i = Ideal::parse(&r, "(xy, xz)").unwrap();
        let m = PresentedModule::cyclic(&i).unwrap();
        (r, i, m)
    }

    #[test]
    fn gamma_and_hann_of_cyclic_module() {
        let (_, i, m) = setup();
        let p = ExtProfile::standard(&m).unwrap();
        assert!(p.gamma().unwrap().radical_equals(&i).unwrap());
        assert!(p.hann().unwrap().equals(&i).unwrap());
        assert_eq!(p.grade(), 1.into());
        assert_eq!(p.quasi_perfect(), Some(false));
    }

    #[test]
    fn gamma_of_ideal_module_is_not_its_annihilator() {
        let (r, i, _) = setup();
        let im = PresentedModule::ideal_module(&i).unwrap();
        let g = gamma(&im, None).unwrap();
        assert!(g.equals(&Ideal::parse(&r, "(y, z)").unwrap()).unwrap());
        assert!(im.annihilator().unwrap().is_zero());
    }

    #[test]
    fn hann_of_free_module_is_zero() {
        let (r, _, _) = setup();
        assert!(hann(&PresentedModule::ring_module(&r)).unwrap().is_zero());
        assert!(gamma(&PresentedModule::zero(&r), None)
            .unwrap()
            .is_unit()
            .unwrap());
    }
}
