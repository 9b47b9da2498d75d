use std::fmt;

use super::engine::{is_zero_vec, lead_of, GbEngine, RawVec};
use super::{from_raw, normal_form, to_raw};
use crate::complexes::{FreeModule, ModuleMap};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, RingSpec};

fn add_quotient_relations(
    engine: &mut GbEngine,
    ring: &RingSpec,
    total: usize,
    positions: std::ops::Range<usize>,
) -> Result<()> {
    for q in ring.quotient_basis()? {
        for i in positions.clone() {
            let mut v: RawVec = vec![Vec::new(); total];
            v[i] = q.terms().to_vec();
            engine.add(v);
        }
    }
    Ok(())
}

/// A completed Gröbner basis of `U + J·F` for a submodule `U` of a free
/// module `F` over `R = S/J`.
pub struct ModuleGb {
    ambient: FreeModule,
    engine: GbEngine,
}

/// Gröbner basis of the submodule generated by `gens`.
pub fn module_basis(ambient: &FreeModule, gens: &[Vec<Polynomial>]) -> Result<ModuleGb> {
    let ring = ambient.ring();
    let mut engine = GbEngine::new(ring.base(), ambient.twists().to_vec(), ring.degree_cap());
    add_quotient_relations(&mut engine, ring, ambient.rank(), 0..ambient.rank())?;
    for g in gens {
        if g.len() != ambient.rank() {
            return Err(Error::Usage(
                "generator length does not match the module".into(),
            ));
        }
        engine.add(to_raw(g));
    }
    engine.complete(None)?;
    Ok(ModuleGb {
        ambient: ambient.clone(),
        engine,
    })
}

impl ModuleGb {
    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    /// Normal form of `v` modulo the submodule (and `J`).
    pub fn reduce(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        from_raw(self.ambient.ring().base(), self.engine.reduce(to_raw(v)))
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        is_zero_vec(&self.engine.reduce(to_raw(v)))
    }

    /// Leading positions and monomials of the minimal basis.
    pub fn leads(&self) -> Vec<(usize, Monomial)> {
        self.engine.leads()
    }

    /// The reduced basis (including the `J·e_i` part).
    pub fn basis(&self) -> Vec<Vec<Polynomial>> {
        let base = self.ambient.ring().base();
        self.engine
            .reduced_basis()
            .into_iter()
            .map(|v| from_raw(base, v))
            .collect()
    }

    /// Re-check Buchberger's criterion on the finished basis.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        self.engine.satisfies_criterion()
    }

    /// True when the submodule is the whole free module.
    pub fn is_everything(&self) -> bool {
        let leads = self.leads();
        (0..self.ambient.rank()).all(|i| leads.iter().any(|(p, m)| *p == i && m.is_one()))
    }
}

/// Lifted syzygies of `columns` (vectors in a free module with
/// `target_twists`) over `R`, reduced modulo `J`. The result generates the
/// syzygy module but need not be minimal.
pub(crate) fn syzygy_vectors(
    ring: &RingSpec,
    target_twists: &[i64],
    columns: &[RawVec],
    source_twists: &[i64],
) -> Result<Vec<RawVec>> {
    let (n, m) = (target_twists.len(), columns.len());
    let base = ring.base();
    let mut twists = target_twists.to_vec();
    twists.extend_from_slice(source_twists);
    let mut engine = GbEngine::new(base, twists, ring.degree_cap());
    let one = vec![(base.one_monomial(), base.field().one())];
    for (j, col) in columns.iter().enumerate() {
        let mut v = col.clone();
        v.resize(n + m, Vec::new());
        v[n + j] = one.clone();
        engine.add(v);
    }
    add_quotient_relations(&mut engine, ring, n + m, 0..n)?;
    engine.complete(None)?;
    let qgb = ring.quotient_basis()?;
    let mut out = Vec::new();
    for v in engine.reduced_basis() {
        if lead_of(&v).is_some_and(|(p, _)| p >= n) {
            let mut tail: RawVec = v[n..].to_vec();
            if !qgb.is_empty() {
                tail = tail
                    .into_iter()
                    .map(|t| {
                        normal_form(&Polynomial::from_sorted_terms(base.clone(), t), qgb)
                            .terms()
                            .to_vec()
                    })
                    .collect();
            }
            if !is_zero_vec(&tail) {
                out.push(tail);
            }
        }
    }
    Ok(out)
}

/// Minimal homogeneous generators of the submodule generated by `gens`,
/// chosen greedily by increasing degree (ties keep the input order).
/// Entries are reduced modulo `J`; zero vectors are dropped.
pub fn minimal_generators(
    ambient: &FreeModule,
    gens: Vec<Vec<Polynomial>>,
) -> Result<Vec<Vec<Polynomial>>> {
    let mut graded: Vec<(i64, Vec<Polynomial>)> = Vec::new();
    for g in gens {
        let g = ambient.reduce_vector(&g)?;
        if let Some(d) = ambient.vector_degree(&g)? {
            graded.push((d, g));
        }
    }
    graded.sort_by_key(|(d, _)| *d);
    let ring = ambient.ring();
    let mut engine = GbEngine::new(ring.base(), ambient.twists().to_vec(), ring.degree_cap());
    add_quotient_relations(&mut engine, ring, ambient.rank(), 0..ambient.rank())?;
    let mut kept = Vec::new();
    for (d, g) in graded {
        engine.complete(Some(d))?;
        let raw = to_raw(&g);
        if is_zero_vec(&engine.reduce(raw.clone())) {
            continue;
        }
        engine.add(raw);
        kept.push(g);
    }
    Ok(kept)
}

/// A finitely generated graded submodule of a free module over `R`,
/// given by homogeneous generators (reduced modulo `J`, nonzero).
#[derive(Clone, PartialEq)]
pub struct SubmoduleOfFree {
    ambient: FreeModule,
    gens: Vec<Vec<Polynomial>>,
}

impl SubmoduleOfFree {
    pub fn new(ambient: &FreeModule, gens: Vec<Vec<Polynomial>>) -> Result<SubmoduleOfFree> {
        let mut kept = Vec::with_capacity(gens.len());
        for g in gens {
            let g = ambient.reduce_vector(&g)?;
            if ambient.vector_degree(&g)?.is_some() {
                kept.push(g);
            }
        }
        Ok(SubmoduleOfFree {
            ambient: ambient.clone(),
            gens: kept,
        })
    }

    pub fn zero(ambient: &FreeModule) -> SubmoduleOfFree {
        SubmoduleOfFree {
            ambient: ambient.clone(),
            gens: Vec::new(),
        }
    }

    /// The whole free module, generated by its basis.
    pub fn whole(ambient: &FreeModule) -> SubmoduleOfFree {
        let gens = (0..ambient.rank())
            .map(|i| ambient.basis_vector(i))
            .collect();
        SubmoduleOfFree {
            ambient: ambient.clone(),
            gens,
        }
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn generators(&self) -> &[Vec<Polynomial>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.gens
            .iter()
            .map(|g| self.ambient.vector_degree(g).unwrap().unwrap())
            .collect()
    }

    pub fn basis(&self) -> Result<ModuleGb> {
        module_basis(&self.ambient, &self.gens)
    }

    pub fn contains(&self, v: &[Polynomial]) -> Result<bool> {
        Ok(self.basis()?.contains(v))
    }

    pub fn contains_submodule(&self, other: &SubmoduleOfFree) -> Result<bool> {
        if self.ambient != other.ambient {
            return Err(Error::Usage("submodules of different free modules".into()));
        }
        let gb = self.basis()?;
        Ok(other.gens.iter().all(|g| gb.contains(g)))
    }

    pub fn equals(&self, other: &SubmoduleOfFree) -> Result<bool> {
        Ok(self.contains_submodule(other)? && other.contains_submodule(self)?)
    }

    pub fn minimalized(&self) -> Result<SubmoduleOfFree> {
        Ok(SubmoduleOfFree {
            ambient: self.ambient.clone(),
            gens: minimal_generators(&self.ambient, self.gens.clone())?,
        })
    }

    /// The map from a free module onto the submodule, one basis vector per
    /// generator.
    pub fn inclusion(&self) -> Result<ModuleMap> {
        ModuleMap::from_generators(&self.ambient, self.gens.clone())
    }
}

impl fmt::Debug for SubmoduleOfFree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .gens
            .iter()
            .map(|g| {
                format!(
                    "({})",
                    g.iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            })
            .collect();
        write!(f, "<{}> in {:?}", gens.join(", "), self.ambient)
    }
}

/// Minimal generators of the kernel of a homogeneous map, as a submodule
/// of its source.
pub fn kernel(map: &ModuleMap) -> Result<SubmoduleOfFree> {
    let ring = map.ring();
    let cols: Vec<RawVec> = map.columns().iter().map(|c| to_raw(c)).collect();
    let raw = syzygy_vectors(ring, map.target().twists(), &cols, map.source().twists())?;
    let gens = raw.into_iter().map(|v| from_raw(ring.base(), v)).collect();
    let gens = minimal_generators(map.source(), gens)?;
    Ok(SubmoduleOfFree {
        ambient: map.source().clone(),
        gens,
    })
}

/// First syzygies of the generators of `sub`, living in the free module
/// with one basis vector per generator.
pub fn syzygies(sub: &SubmoduleOfFree) -> Result<SubmoduleOfFree> {
    kernel(&sub.inclusion()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{parse_generators, RingSpec};

    fn vecs(r: &RingSpec, rows: &[&str]) -> Vec<Vec<Polynomial>> {
        rows.iter()
            .map(|s| parse_generators(r.base(), s).unwrap())
            .collect()
    }

    #[test]
    fn syzygies_of_xy_xz() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let f = FreeModule::standard(&r, 1);
        let sub = SubmoduleOfFree::new(&f, vecs(&r, &["x*y", "x*z"])).unwrap();
        let syz = syzygies(&sub).unwrap();
        assert_eq!(syz.degrees(), vec![3]);
        let g = &syz.generators()[0];
        // (z, -y) up to sign
        assert_eq!(g[0].to_string(), "z");
        assert_eq!(g[1].to_string(), "-y");
    }

    #[test]
    fn kernel_over_a_quotient_ring() {
        let r = RingSpec::parse("QQ[X,Y,Z]/(X^2,XY,XZ)").unwrap();
        let f = FreeModule::standard(&r, 1);
        let sub = SubmoduleOfFree::new(&f, vecs(&r, &["x"])).unwrap();
        let k = syzygies(&sub).unwrap();
        assert_eq!(k.generators().len(), 3);
        let expected = SubmoduleOfFree::new(k.ambient(), vecs(&r, &["x", "y", "z"])).unwrap();
        assert!(k.equals(&expected).unwrap());
    }

    #[test]
    fn minimal_generators_drop_redundant() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let f = FreeModule::standard(&r, 2);
        let gens = vecs(&r, &["x, y", "x^2, x*y", "z, 0", "x*z + z^2, y*z"]);
        let min = minimal_generators(&f, gens).unwrap();
        assert_eq!(min.len(), 2);
    }

    #[test]
    fn everything_is_detected() {
        let r = RingSpec::parse("QQ[x,y]").unwrap();
        let f = FreeModule::standard(&r, 1);
        assert!(module_basis(&f, &vecs(&r, &["1"])).unwrap().is_everything());
        assert!(!module_basis(&f, &vecs(&r, &["x"])).unwrap().is_everything());
    }
}
