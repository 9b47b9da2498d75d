use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Homogeneity, Polynomial, RingSpec};

/// A graded free module `⊕_j R(-t_j)`: basis vector `j` has degree `t_j`.
#[derive(Clone, PartialEq)]
pub struct FreeModule {
    ring: RingSpec,
    twists: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring: &RingSpec, twists: Vec<i64>) -> FreeModule {
        FreeModule {
            ring: ring.clone(),
            twists,
        }
    }

    /// `R^n` with all generators in degree zero.
    pub fn standard(ring: &RingSpec, rank: usize) -> FreeModule {
        FreeModule::new(ring, vec![0; rank])
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn twist(&self, i: usize) -> i64 {
        self.twists[i]
    }

    /// The same module with every generator degree negated (`F^* = Hom(F, R)`).
    pub fn dual(&self) -> FreeModule {
        FreeModule::new(&self.ring, self.twists.iter().map(|t| -t).collect())
    }

    pub fn zero_vector(&self) -> Vec<Polynomial> {
        vec![Polynomial::zero(self.ring.base()); self.rank()]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Polynomial> {
        let mut v = self.zero_vector();
        v[i] = Polynomial::one(self.ring.base());
        v
    }

    /// Checks that `v` lives in this module and is homogeneous; returns its
    /// degree, `None` for the zero vector.
    pub fn vector_degree(&self, v: &[Polynomial]) -> Result<Option<i64>> {
        if v.len() != self.rank() {
            return Err(Error::Usage(format!(
                "vector of length {} in a module of rank {}",
                v.len(),
                self.rank()
            )));
        }
        let mut deg: Option<i64> = None;
        for (p, t) in v.iter().zip(&self.twists) {
            if !p.ring().same(self.ring.base()) {
                return Err(Error::Usage("vector entry from another ring".into()));
            }
            if let Homogeneity::Degree(d) = p.homogeneous_degree()? {
                let d = d + t;
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return Err(Error::Inhomogeneous(e, d)),
                    _ => {}
                }
            }
        }
        Ok(deg)
    }

    /// `F ⊗ G`, basis `e_a ⊗ f_b` at index `a·rank(G) + b`.
    pub fn tensor(&self, other: &FreeModule) -> FreeModule {
        let twists = self
            .twists
            .iter()
            .flat_map(|a| other.twists.iter().map(move |b| a + b))
            .collect();
        FreeModule::new(&self.ring, twists)
    }

    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        FreeModule::new(&self.ring, twists)
    }

    /// Reduce every entry modulo the defining ideal of the ring.
    pub fn reduce_vector(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        v.iter().map(|p| self.ring.reduce(p)).collect()
    }
}

impl fmt::Debug for FreeModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeModule({}, {:?})", self.ring, self.twists)
    }
}

/// A homogeneous map of degree zero between graded free modules, stored as
/// columns: `columns[j]` is the image of the `j`-th source basis vector.
/// Entry `(i, j)` has degree `twist_source(j) - twist_target(i)`.
#[derive(Clone, PartialEq)]
pub struct ModuleMap {
    source: FreeModule,
    target: FreeModule,
    columns: Vec<Vec<Polynomial>>,
}

impl ModuleMap {
    /// Validates shapes and degrees and reduces entries modulo `J`.
    pub fn new(
        source: FreeModule,
        target: FreeModule,
        columns: Vec<Vec<Polynomial>>,
    ) -> Result<ModuleMap> {
        if !source.ring().same(target.ring()) {
            return Err(Error::Usage(
                "map between modules over different rings".into(),
            ));
        }
        if columns.len() != source.rank() {
            return Err(Error::Usage(format!(
                "{} columns for a source of rank {}",
                columns.len(),
                source.rank()
            )));
        }
        let mut reduced = Vec::with_capacity(columns.len());
        for (j, col) in columns.into_iter().enumerate() {
            let col = target.reduce_vector(&col)?;
            if let Some(d) = target.vector_degree(&col)? {
                if d != source.twist(j) {
                    return Err(Error::Inhomogeneous(source.twist(j), d));
                }
            }
            reduced.push(col);
        }
        Ok(ModuleMap {
            source,
            target,
            columns: reduced,
        })
    }

    /// Map given by a row-major matrix.
    pub fn from_rows(
        source: FreeModule,
        target: FreeModule,
        rows: Vec<Vec<Polynomial>>,
    ) -> Result<ModuleMap> {
        if rows.len() != target.rank() || rows.iter().any(|r| r.len() != source.rank()) {
            return Err(Error::Usage(
                "matrix shape does not match the modules".into(),
            ));
        }
        let columns = (0..source.rank())
            .map(|j| rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        ModuleMap::new(source, target, columns)
    }

    /// The map `⊕ R(-deg g_j) → target` sending `e_j` to `g_j`. Zero
    /// generators get degree zero.
    pub fn from_generators(target: &FreeModule, gens: Vec<Vec<Polynomial>>) -> Result<ModuleMap> {
        let mut twists = Vec::with_capacity(gens.len());
        let mut reduced = Vec::with_capacity(gens.len());
        for g in gens {
            let g = target.reduce_vector(&g)?;
            twists.push(target.vector_degree(&g)?.unwrap_or(0));
            reduced.push(g);
        }
        ModuleMap::new(
            FreeModule::new(target.ring(), twists),
            target.clone(),
            reduced,
        )
    }

    pub fn identity(f: &FreeModule) -> ModuleMap {
        let columns = (0..f.rank()).map(|i| f.basis_vector(i)).collect();
        ModuleMap {
            source: f.clone(),
            target: f.clone(),
            columns,
        }
    }

    pub fn zero(source: FreeModule, target: FreeModule) -> ModuleMap {
        let columns = (0..source.rank()).map(|_| target.zero_vector()).collect();
        ModuleMap {
            source,
            target,
            columns,
        }
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn ring(&self) -> &RingSpec {
        self.source.ring()
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.columns
    }

    pub fn nrows(&self) -> usize {
        self.target.rank()
    }

    pub fn ncols(&self) -> usize {
        self.source.rank()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.columns[j][i]
    }

    pub fn rows(&self) -> Vec<Vec<Polynomial>> {
        (0..self.nrows())
            .map(|i| self.columns.iter().map(|c| c[i].clone()).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().flatten().all(|p| p.is_zero())
    }

    /// Image of a source vector, reduced modulo `J`.
    pub fn apply(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.ncols() {
            return Err(Error::Usage(
                "vector length does not match the source".into(),
            ));
        }
        let mut out = self.target.zero_vector();
        for (c, col) in v.iter().zip(&self.columns) {
            if c.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(col) {
                if !a.is_zero() {
                    *o = o.add(&c.mul(a));
                }
            }
        }
        self.target.reduce_vector(&out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if other.target != self.source {
            return Err(Error::Usage("maps are not composable".into()));
        }
        let columns = other
            .columns
            .iter()
            .map(|c| self.apply(c))
            .collect::<Result<Vec<_>>>()?;
        ModuleMap::new(other.source.clone(), self.target.clone(), columns)
    }

    /// `self ⊗ 1_G : F ⊗ G → F' ⊗ G`.
    pub fn tensor_identity(&self, g: &FreeModule) -> ModuleMap {
        let source = self.source.tensor(g);
        let target = self.target.tensor(g);
        let zero = Polynomial::zero(self.ring().base());
        let gr = g.rank();
        let mut columns = Vec::with_capacity(source.rank());
        for col in &self.columns {
            for b in 0..gr {
                let mut v = vec![zero.clone(); target.rank()];
                for (q, e) in col.iter().enumerate() {
                    v[q * gr + b] = e.clone();
                }
                columns.push(v);
            }
        }
        ModuleMap {
            source,
            target,
            columns,
        }
    }

    /// `1_C ⊗ b : C ⊗ G_1 → C ⊗ G_0`.
    pub fn identity_tensor(c: &FreeModule, b: &ModuleMap) -> ModuleMap {
        let source = c.tensor(&b.source);
        let target = c.tensor(&b.target);
        let zero = Polynomial::zero(c.ring().base());
        let g0 = b.target.rank();
        let mut columns = Vec::with_capacity(source.rank());
        for a in 0..c.rank() {
            for col in &b.columns {
                let mut v = vec![zero.clone(); target.rank()];
                for (k, e) in col.iter().enumerate() {
                    v[a * g0 + k] = e.clone();
                }
                columns.push(v);
            }
        }
        ModuleMap {
            source,
            target,
            columns,
        }
    }

    /// `[self | other]` on the direct sum of the sources.
    pub fn concat(&self, other: &ModuleMap) -> Result<ModuleMap> {
        if self.target != other.target {
            return Err(Error::Usage(
                "concatenated maps need a common target".into(),
            ));
        }
        let mut columns = self.columns.clone();
        columns.extend(other.columns.iter().cloned());
        Ok(ModuleMap {
            source: self.source.direct_sum(&other.source),
            target: self.target.clone(),
            columns,
        })
    }

    /// `Hom(-, R)` of the map: the transposed matrix between dual modules.
    pub fn transpose(&self) -> ModuleMap {
        let columns = self.rows();
        ModuleMap {
            source: self.target.dual(),
            target: self.source.dual(),
            columns,
        }
    }
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModuleMap {:?} -> {:?} [",
            self.source.twists(),
            self.target.twists()
        )?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let r: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", r.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Row-major matrix of canonical polynomial strings, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixReport {
    pub source_twists: Vec<i64>,
    pub target_twists: Vec<i64>,
    pub rows: Vec<Vec<String>>,
}

impl From<&ModuleMap> for MatrixReport {
    fn from(m: &ModuleMap) -> MatrixReport {
        MatrixReport {
            source_twists: m.source.twists().to_vec(),
            target_twists: m.target.twists().to_vec(),
            rows: m
                .rows()
                .iter()
                .map(|r| r.iter().map(|p| p.to_string()).collect())
                .collect(),
        }
    }
}
