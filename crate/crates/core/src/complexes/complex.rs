use serde::Serialize;

use super::free::{FreeModule, MatrixReport, ModuleMap};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, RingSpec};

/// A bounded complex of graded free modules `F_lo ← F_lo+1 ← … ← F_hi`
/// with differentials `d_k : F_k → F_{k-1}`. `d ∘ d = 0` is checked on
/// construction.
#[derive(Clone, Debug)]
pub struct FreeComplex {
    ring: RingSpec,
    lo: i64,
    modules: Vec<FreeModule>,
    maps: Vec<ModuleMap>,
}

impl FreeComplex {
    /// `modules[k]` is `F_{lo+k}`; `maps[k]` is `d_{lo+k+1}`.
    pub fn new(
        ring: &RingSpec,
        lo: i64,
        modules: Vec<FreeModule>,
        maps: Vec<ModuleMap>,
    ) -> Result<FreeComplex> {
        if !modules.is_empty() && maps.len() + 1 != modules.len()
            || modules.is_empty() && !maps.is_empty()
        {
            return Err(Error::Usage(
                "a complex needs one map fewer than modules".into(),
            ));
        }
        for (k, d) in maps.iter().enumerate() {
            if d.target() != &modules[k] || d.source() != &modules[k + 1] {
                return Err(Error::Usage(format!(
                    "differential {} has the wrong shape",
                    lo + k as i64 + 1
                )));
            }
        }
        let c = FreeComplex {
            ring: ring.clone(),
            lo,
            modules,
            maps,
        };
        c.check_square_zero()?;
        Ok(c)
    }

    pub fn zero(ring: &RingSpec) -> FreeComplex {
        FreeComplex {
            ring: ring.clone(),
            lo: 0,
            modules: Vec::new(),
            maps: Vec::new(),
        }
    }

    fn check_square_zero(&self) -> Result<()> {
        for k in 1..self.maps.len() {
            if !self.maps[k - 1].compose(&self.maps[k])?.is_zero() {
                return Err(Error::Integrity(format!(
                    "d∘d ≠ 0 at position {}",
                    self.lo + k as i64
                )));
            }
        }
        Ok(())
    }

    /// Re-verify `d ∘ d = 0` (used by property checks).
    pub fn is_complex(&self) -> bool {
        self.check_square_zero().is_ok()
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest index carrying a module (`lo - 1` when empty).
    pub fn hi(&self) -> i64 {
        self.lo + self.modules.len() as i64 - 1
    }

    /// `F_k`, the zero module outside the range.
    pub fn module(&self, k: i64) -> FreeModule {
        if k < self.lo || k > self.hi() {
            return FreeModule::new(&self.ring, Vec::new());
        }
        self.modules[(k - self.lo) as usize].clone()
    }

    /// `d_k : F_k → F_{k-1}`, the zero map outside the range.
    pub fn differential(&self, k: i64) -> ModuleMap {
        if k > self.lo && k <= self.hi() {
            return self.maps[(k - self.lo - 1) as usize].clone();
        }
        ModuleMap::zero(self.module(k), self.module(k - 1))
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(|m| m.rank()).collect()
    }

    /// `Hom(C, R)`: `G_j = (F_{-j})^*` with transposed differentials and
    /// negated twists; no extra signs.
    pub fn hom_transpose(&self) -> Result<FreeComplex> {
        if self.modules.is_empty() {
            return Ok(FreeComplex::zero(&self.ring));
        }
        let modules: Vec<FreeModule> = self.modules.iter().rev().map(|m| m.dual()).collect();
        let maps: Vec<ModuleMap> = self.maps.iter().rev().map(|d| d.transpose()).collect();
        FreeComplex::new(&self.ring, -self.hi(), modules, maps)
    }

    pub fn report(&self) -> ComplexReport {
        ComplexReport {
            lo: self.lo,
            ranks: self.ranks(),
            twists: self.modules.iter().map(|m| m.twists().to_vec()).collect(),
            differentials: self.maps.iter().map(MatrixReport::from).collect(),
        }
    }
}

/// JSON form of a complex: ranks, twists, and each differential.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexReport {
    pub lo: i64,
    pub ranks: Vec<usize>,
    pub twists: Vec<Vec<i64>>,
    pub differentials: Vec<MatrixReport>,
}

/// The Koszul complex `K(f_1..f_n; R)`, concentrated in degrees `0..n`.
/// `K_k` has the `k`-subsets of `{1..n}` as basis in lexicographic order;
/// `d(e_S) = Σ_j (-1)^j f_{s_j} e_{S \ s_j}` for `S = {s_0 < s_1 < …}`.
pub fn koszul_complex(ring: &RingSpec, elements: &[Polynomial]) -> Result<FreeComplex> {
    let n = elements.len();
    let mut degs = Vec::with_capacity(n);
    for f in elements {
        let f = ring.reduce(f)?;
        degs.push(match f.homogeneous_degree()? {
            crate::poly::Homogeneity::Degree(d) => d,
            crate::poly::Homogeneity::Any => 0,
        });
    }
    let subsets: Vec<Vec<Vec<usize>>> = (0..=n).map(|k| k_subsets(n, k)).collect();
    let modules: Vec<FreeModule> = subsets
        .iter()
        .map(|ss| {
            FreeModule::new(
                ring,
                ss.iter()
                    .map(|s| s.iter().map(|&i| degs[i]).sum())
                    .collect(),
            )
        })
        .collect();
    let base = ring.base();
    let mut maps = Vec::with_capacity(n);
    for k in 1..=n {
        let target_index = &subsets[k - 1];
        let columns = subsets[k]
            .iter()
            .map(|s| {
                let mut col = vec![Polynomial::zero(base); target_index.len()];
                for j in 0..s.len() {
                    let mut rest = s.clone();
                    let v = rest.remove(j);
                    let row = target_index
                        .binary_search(&rest)
                        .expect("lex-ordered subsets");
                    col[row] = if j % 2 == 0 {
                        elements[v].clone()
                    } else {
                        elements[v].neg()
                    };
                }
                col
            })
            .collect();
        maps.push(ModuleMap::new(
            modules[k].clone(),
            modules[k - 1].clone(),
            columns,
        )?);
    }
    FreeComplex::new(ring, 0, modules, maps)
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
