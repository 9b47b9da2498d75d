use std::fmt;

use serde::{Serialize, Serializer};

use super::HilbertSeries;
use crate::complexes::koszul_complex;
use crate::error::{Error, Result};
use crate::ext::{ext_range, homology, PresentedModule};
use crate::groebner::monomial::minimalize;
use crate::groebner::Ideal;
use crate::poly::{Polynomial, RingSpec};

/// An integer or `+∞`; serialized as a number or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtendedInt {
    Finite(i64),
    Infinite,
}

impl ExtendedInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtendedInt::Finite(v) => Some(v),
            ExtendedInt::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == ExtendedInt::Infinite
    }
}

impl From<i64> for ExtendedInt {
    fn from(v: i64) -> Self {
        ExtendedInt::Finite(v)
    }
}

impl fmt::Display for ExtendedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedInt::Finite(v) => write!(f, "{v}"),
            ExtendedInt::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for ExtendedInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtendedInt::Finite(v) => s.serialize_i64(*v),
            ExtendedInt::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Krull dimension of `M`, i.e. of `R/Ann(M)`, from the lead terms of the
/// annihilator. Cross-checked against the pole order of the Hilbert
/// series; `-1` for the zero module.
pub fn module_dimension(m: &PresentedModule) -> Result<i64> {
    let by_leads = m.annihilator()?.dim()?;
    let by_pole = HilbertSeries::of_module(m)?.pole_order();
    if by_leads != by_pole {
        return Err(Error::Integrity(format!(
            "dimension {by_leads} from lead terms but {by_pole} from the Hilbert series"
        )));
    }
    Ok(by_leads)
}

/// Generators with the same radical and, for monomial ideals, fewer
/// elements: the squarefree parts of the minimal monomial generators.
pub fn radical_generators(ideal: &Ideal) -> Result<Vec<Polynomial>> {
    if ideal.is_zero() {
        return Ok(Vec::new());
    }
    if !ideal.is_monomial()? {
        return ideal.minimal_generators();
    }
    let base = ideal.ring().base();
    let one = base.field().one();
    let sq: Vec<_> = ideal
        .lead_monomials()?
        .iter()
        .map(|m| base.monomial(&m.exponents().iter().map(|&e| e.min(1)).collect::<Vec<_>>()))
        .collect();
    let mut out = Vec::new();
    for m in minimalize(&sq) {
        let p = Polynomial::monomial(base, m.exponents(), one.clone());
        // generators of J reduce to zero and drop out
        let p = ideal.ring().reduce(&p)?;
        if !p.is_zero() {
            out.push(p);
        }
    }
    Ok(out)
}

/// Largest `j` with `H_j(f_1..f_s; N) ≠ 0`, or `None` if every Koszul
/// homology module vanishes (which happens exactly when `(f)N = N`).
pub fn koszul_top_nonvanishing(
    ring: &RingSpec,
    elements: &[Polynomial],
    n: &PresentedModule,
) -> Result<Option<usize>> {
    let k = koszul_complex(ring, elements)?;
    for j in (0..=elements.len()).rev() {
        let j = j as i64;
        let h = homology(&k.differential(j + 1), &k.differential(j), n)?;
        if !h.is_zero()? {
            return Ok(Some(j as usize));
        }
    }
    Ok(None)
}

/// `grade(I, N)` by Koszul homology on generators of `I`:
/// `s - max{j : H_j ≠ 0}`, and `+∞` when `IN = N`.
pub fn grade_by_koszul(ideal: &Ideal, n: &PresentedModule) -> Result<ExtendedInt> {
    let gens = radical_generators(ideal)?;
    Ok(match koszul_top_nonvanishing(ideal.ring(), &gens, n)? {
        Some(j) => ExtendedInt::Finite(gens.len() as i64 - j as i64),
        None => ExtendedInt::Infinite,
    })
}

/// `depth(M)`: Koszul homology on all variables, `n - max{j : H_j ≠ 0}`;
/// `+∞` for the zero module.
pub fn depth(m: &PresentedModule) -> Result<ExtendedInt> {
    if m.is_zero()? {
        return Ok(ExtendedInt::Infinite);
    }
    let ring = m.ring();
    let vars: Vec<Polynomial> = (0..ring.nvars())
        .map(|i| Polynomial::var(ring.base(), i))
        .collect();
    match koszul_top_nonvanishing(ring, &vars, m)? {
        Some(j) => Ok(ExtendedInt::Finite((vars.len() - j) as i64)),
        None => Err(Error::Integrity(
            "nonzero module with vanishing Koszul homology".into(),
        )),
    }
}

/// `inf{i : Ext^i(M, R) ≠ 0}`; nonzero modules have grade at most
/// `dim R`, so that many Ext modules are enough.
pub fn grade_by_ext(m: &PresentedModule) -> Result<ExtendedInt> {
    if m.is_zero()? {
        return Ok(ExtendedInt::Infinite);
    }
    let d = m.ring().dim()?.max(0) as usize;
    for (i, e) in ext_range(m, &PresentedModule::ring_module(m.ring()), d)?
        .iter()
        .enumerate()
    {
        if !e.is_zero()? {
            return Ok(ExtendedInt::Finite(i as i64));
        }
    }
    Err(Error::Integrity(format!(
        "no nonvanishing Ext^i(M, R) with i ≤ {d} for a nonzero module"
    )))
}

/// `grade(M) = grade(Ann M, R)`, computed from Ext and from Koszul
/// homology; disagreement is an integrity error.
pub fn grade(m: &PresentedModule) -> Result<ExtendedInt> {
    let by_ext = grade_by_ext(m)?;
    let by_koszul = grade_by_koszul(&m.annihilator()?, &PresentedModule::ring_module(m.ring()))?;
    if by_ext != by_koszul {
        return Err(Error::Integrity(format!(
            "grade {by_ext} from Ext but {by_koszul} from Koszul homology"
        )));
    }
    Ok(by_ext)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(r: &RingSpec, s: &str) -> PresentedModule {
        PresentedModule::cyclic(&Ideal::parse(r, s).unwrap()).unwrap()
    }

    #[test]
    fn dimensions() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        assert_eq!(module_dimension(&cyclic(&r, "(xy, xz)")).unwrap(), 2);
        assert_eq!(module_dimension(&cyclic(&r, "(x, y, z)")).unwrap(), 0);
        assert_eq!(module_dimension(&PresentedModule::zero(&r)).unwrap(), -1);
    }

    #[test]
    fn depths() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        assert_eq!(depth(&PresentedModule::ring_module(&r)).unwrap(), 3.into());
        assert_eq!(depth(&cyclic(&r, "(xy, xz)")).unwrap(), 1.into());
        assert_eq!(
            depth(&PresentedModule::zero(&r)).unwrap(),
            ExtendedInt::Infinite
        );
        let q = RingSpec::parse("QQ[X,Y,Z]/(X^2,XY,XZ)").unwrap();
        assert_eq!(depth(&PresentedModule::ring_module(&q)).unwrap(), 0.into());
    }

    #[test]
    fn grades_agree() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        assert_eq!(grade(&cyclic(&r, "(xy, xz)")).unwrap(), 1.into());
        assert_eq!(grade(&cyclic(&r, "(xy, xz, yz)")).unwrap(), 2.into());
        assert_eq!(grade(&PresentedModule::ring_module(&r)).unwrap(), 0.into());
        assert_eq!(
            grade(&PresentedModule::zero(&r)).unwrap(),
            ExtendedInt::Infinite
        );
        assert_eq!(grade(&cyclic(&r, "(x^2 + y^2, z^3)")).unwrap(), 2.into());
    }

    #[test]
    fn residue_field_has_grade_above_depth() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let k = cyclic(&r, "(x, y, z)");
        assert_eq!(grade(&k).unwrap(), 3.into());
        assert_eq!(depth(&k).unwrap(), 0.into());
    }

    #[test]
    fn sentinel_serializes_as_inf() {
        assert_eq!(
            serde_json::to_string(&ExtendedInt::Infinite).unwrap(),
            "\"inf\""
        );
        assert_eq!(serde_json::to_string(&ExtendedInt::Finite(2)).unwrap(), "2");
        assert!(ExtendedInt::Finite(100) < ExtendedInt::Infinite);
    }
}
