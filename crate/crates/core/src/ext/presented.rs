use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::complexes::{FreeModule, MatrixReport, ModuleMap};
use crate::error::{Error, Result};
use crate::groebner::{
    from_raw, minimal_generators, module_basis, syzygy_vectors, to_raw, Ideal, ModuleGb,
    SubmoduleOfFree,
};
use crate::poly::{Polynomial, RingSpec};

/// Where a presented module came from; carried into reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Input,
    Ext { index: usize },
    IteratedExt { path: Vec<usize> },
    Subquotient,
    Syzygy,
    Homology,
}

/// `M = coker(A : F_1 → F_0)` for a homogeneous matrix `A`.
///
/// Generators of `M` are the basis vectors of `F_0`; relations are the
/// columns of `A`.
#[derive(Clone)]
pub struct PresentedModule {
    presentation: ModuleMap,
    provenance: Provenance,
    cache: Arc<Cache>,
}

#[derive(Default)]
struct Cache {
    gb: OnceLock<Arc<ModuleGb>>,
    ann: OnceLock<Ideal>,
}

impl PresentedModule {
    pub fn cokernel(presentation: ModuleMap) -> PresentedModule {
        PresentedModule {
            presentation,
            provenance: Provenance::Input,
            cache: Arc::default(),
        }
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> PresentedModule {
        self.provenance = provenance;
        self
    }

    /// The free module `F` itself (no relations).
    pub fn free(f: &FreeModule) -> PresentedModule {
        PresentedModule::cokernel(ModuleMap::zero(
            FreeModule::new(f.ring(), Vec::new()),
            f.clone(),
        ))
    }

    /// The ring as a module over itself.
    pub fn ring_module(ring: &RingSpec) -> PresentedModule {
        PresentedModule::free(&FreeModule::standard(ring, 1))
    }

    pub fn zero(ring: &RingSpec) -> PresentedModule {
        PresentedModule::free(&FreeModule::new(ring, Vec::new()))
    }

    /// `R/I` for a homogeneous ideal `I`.
    pub fn cyclic(ideal: &Ideal) -> Result<PresentedModule> {
        let target = FreeModule::standard(ideal.ring(), 1);
        let gens = ideal
            .minimal_generators()?
            .into_iter()
            .map(|g| vec![g])
            .collect();
        Ok(PresentedModule::cokernel(ModuleMap::from_generators(
            &target, gens,
        )?))
    }

    /// A homogeneous ideal `I` as a module: minimal generators and their syzygies.
    pub fn ideal_module(ideal: &Ideal) -> Result<PresentedModule> {
        let f = FreeModule::standard(ideal.ring(), 1);
        let gens = ideal
            .minimal_generators()?
            .into_iter()
            .map(|g| vec![g])
            .collect();
        PresentedModule::submodule(&SubmoduleOfFree::new(&f, gens)?)
    }

    /// A submodule of a free module, presented on its generators.
    pub fn submodule(sub: &SubmoduleOfFree) -> Result<PresentedModule> {
        let sub = sub.minimalized()?;
        let syz = crate::groebner::syzygies(&sub)?;
        let map = syz.inclusion()?;
        Ok(PresentedModule::cokernel(map).with_provenance(Provenance::Syzygy))
    }

    /// `F / U`.
    pub fn quotient_of_free(sub: &SubmoduleOfFree) -> Result<PresentedModule> {
        Ok(PresentedModule::cokernel(sub.inclusion()?))
    }

    pub fn ring(&self) -> &RingSpec {
        self.presentation.ring()
    }

    pub fn presentation(&self) -> &ModuleMap {
        &self.presentation
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The free module `F_0` whose basis generates `M`.
    pub fn generators_module(&self) -> &FreeModule {
        self.presentation.target()
    }

    pub fn relations(&self) -> Result<SubmoduleOfFree> {
        SubmoduleOfFree::new(
            self.generators_module(),
            self.presentation.columns().to_vec(),
        )
    }

    /// Gröbner basis of the relation module (plus `J·F_0`), memoized.
    pub fn relation_basis(&self) -> Result<Arc<ModuleGb>> {
        if let Some(gb) = self.cache.gb.get() {
            return Ok(gb.clone());
        }
        let gb = Arc::new(module_basis(
            self.generators_module(),
            self.presentation.columns(),
        )?);
        Ok(self.cache.gb.get_or_init(|| gb).clone())
    }

    /// Zero test: every generator lies in the relation module, i.e. the
    /// relation basis has a unit leading term in every position.
    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.generators_module().rank() == 0 || self.relation_basis()?.is_everything())
    }

    /// `Ann(M) = ∩_i (U : e_i)` where `U` is the relation module; the unit
    /// ideal for the zero module. Memoized.
    pub fn annihilator(&self) -> Result<Ideal> {
        if let Some(a) = self.cache.ann.get() {
            return Ok(a.clone());
        }
        let ring = self.ring();
        let f0 = self.generators_module();
        let rels = self.presentation.columns();
        let mut acc = Ideal::unit(ring);
        for i in 0..f0.rank() {
            // syzygies (c, v) of [e_i | A] give c·e_i ∈ U
            let mut cols = vec![to_raw(&f0.basis_vector(i))];
            cols.extend(rels.iter().map(|c| to_raw(c)));
            let mut twists = vec![f0.twist(i)];
            twists.extend_from_slice(self.presentation.source().twists());
            let syz = syzygy_vectors(ring, f0.twists(), &cols, &twists)?;
            let gens: Vec<Polynomial> = syz
                .into_iter()
                .map(|v| from_raw(ring.base(), v).swap_remove(0))
                .collect();
            let colon = Ideal::new(ring, gens)?;
            acc = if i == 0 {
                colon
            } else {
                acc.intersect(&colon)?
            };
            if acc.is_zero() {
                break;
            }
        }
        let acc = Ideal::new(ring, acc.canonical_generators()?)?;
        Ok(self.cache.ann.get_or_init(|| acc).clone())
    }

    /// An equivalent presentation with minimal generators and minimal
    /// relations: relations are minimalized and every unit entry is used to
    /// eliminate a generator.
    pub fn minimal_presentation(&self) -> Result<PresentedModule> {
        let ring = self.ring().clone();
        let field = ring.base().field();
        let mut f0 = self.generators_module().clone();
        let mut cols = minimal_generators(&f0, self.presentation.columns().to_vec())?;
        loop {
            let mut pivot = None;
            'search: for (j, col) in cols.iter().enumerate() {
                for (i, e) in col.iter().enumerate() {
                    if !e.is_zero() && e.is_constant() {
                        pivot = Some((i, j));
                        break 'search;
                    }
                }
            }
            let Some((i, j)) = pivot else { break };
            let pcol = cols.remove(j);
            let u = pcol[i].constant_term();
            for col in cols.iter_mut() {
                if col[i].is_zero() {
                    continue;
                }
                let q = col[i].scale(&field.inv(&u));
                for (e, p) in col.iter_mut().zip(&pcol) {
                    if !p.is_zero() {
                        *e = e.sub(&q.mul(p));
                    }
                }
                *col = ring_reduce(&ring, col)?;
            }
            for col in cols.iter_mut() {
                col.remove(i);
            }
            let mut twists = f0.twists().to_vec();
            twists.remove(i);
            f0 = FreeModule::new(&ring, twists);
            cols.retain(|c| c.iter().any(|p| !p.is_zero()));
        }
        let cols = minimal_generators(&f0, cols)?;
        let map = ModuleMap::from_generators(&f0, cols)?;
        Ok(PresentedModule::cokernel(map).with_provenance(self.provenance.clone()))
    }

    /// The same module viewed over the ambient polynomial ring `S`:
    /// the relations gain `J·e_i` for every generator.
    pub fn over_ambient(&self) -> Result<PresentedModule> {
        let ring = self.ring();
        if ring.is_polynomial_ring() {
            return Ok(self.clone());
        }
        let s = ring.ambient();
        let f0 = FreeModule::new(&s, self.generators_module().twists().to_vec());
        let mut cols = self.presentation.columns().to_vec();
        let mut twists = self.presentation.source().twists().to_vec();
        for q in ring.relations() {
            let dq = q.degree().unwrap_or(0) as i64;
            for i in 0..f0.rank() {
                let mut v = f0.zero_vector();
                v[i] = q.clone();
                cols.push(v);
                twists.push(f0.twist(i) + dq);
            }
        }
        let map = ModuleMap::new(FreeModule::new(&s, twists), f0, cols)?;
        Ok(PresentedModule::cokernel(map).with_provenance(self.provenance.clone()))
    }

    /// Number of minimal generators.
    pub fn mu(&self) -> Result<usize> {
        Ok(self.minimal_presentation()?.generators_module().rank())
    }

    /// `Hom(F, -)`-style twist: the same presentation with every degree
    /// shifted by `k` (`M(−k)` has generators `k` degrees higher).
    pub fn shifted(&self, k: i64) -> Result<PresentedModule> {
        let shift =
            |f: &FreeModule| FreeModule::new(f.ring(), f.twists().iter().map(|t| t + k).collect());
        let map = ModuleMap::new(
            shift(self.presentation.source()),
            shift(self.presentation.target()),
            self.presentation.columns().to_vec(),
        )?;
        Ok(PresentedModule::cokernel(map).with_provenance(self.provenance.clone()))
    }

    pub fn report(&self) -> PresentationReport {
        PresentationReport {
            provenance: self.provenance.clone(),
            generators: self.generators_module().rank(),
            relations: MatrixReport::from(&self.presentation),
        }
    }
}

fn ring_reduce(ring: &RingSpec, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
    v.iter().map(|p| ring.reduce(p)).collect()
}

impl fmt::Debug for PresentedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "coker {:?}", self.presentation)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PresentationReport {
    pub provenance: Provenance,
    pub generators: usize,
    pub relations: MatrixReport,
}

/// `K / V` for submodules `V ⊆ K` of a common free module, presented on
/// (minimal) generators of `K`. Fails with an integrity error if `V ⊄ K`.
pub fn subquotient(k: &SubmoduleOfFree, v: &SubmoduleOfFree) -> Result<PresentedModule> {
    let ambient = k.ambient();
    if v.ambient() != ambient {
        return Err(Error::Usage("subquotient of different free modules".into()));
    }
    let k = k.minimalized()?;
    let kgb = k.basis()?;
    for g in v.generators() {
        if !kgb.contains(g) {
            return Err(Error::Integrity(
                "image is not contained in the kernel".into(),
            ));
        }
    }
    let ring = ambient.ring();
    let s = k.generators().len();
    let mut cols: Vec<_> = k.generators().iter().map(|g| to_raw(g)).collect();
    cols.extend(v.generators().iter().map(|g| to_raw(g)));
    let mut twists = k.degrees();
    twists.extend(v.degrees());
    let syz = syzygy_vectors(ring, ambient.twists(), &cols, &twists)?;
    let gens_module = FreeModule::new(ring, k.degrees());
    let rels: Vec<Vec<Polynomial>> = syz
        .into_iter()
        .map(|mut r| {
            r.truncate(s);
            from_raw(ring.base(), r)
        })
        .collect();
    let rels = minimal_generators(&gens_module, rels)?;
    let map = ModuleMap::from_generators(&gens_module, rels)?;
    PresentedModule::cokernel(map)
        .with_provenance(Provenance::Subquotient)
        .minimal_presentation()
}

/// Homology at the middle of `P --prev--> C --next--> Q` after tensoring
/// with `N`: `ker(next ⊗ N) / im(prev ⊗ N)`. Requires `next ∘ prev = 0`.
pub fn homology(
    prev: &ModuleMap,
    next: &ModuleMap,
    n: &PresentedModule,
) -> Result<PresentedModule> {
    let c = next.source();
    if prev.target() != c {
        return Err(Error::Usage("maps do not form a sequence".into()));
    }
    let b = n.presentation();
    let g0 = b.target();
    let cg = c.tensor(g0);
    let ring = c.ring();

    let kernel_gens: Vec<Vec<Polynomial>> = if next.target().rank() == 0 || cg.rank() == 0 {
        (0..cg.rank()).map(|i| cg.basis_vector(i)).collect()
    } else {
        let dn = next.tensor_identity(g0);
        let bq = ModuleMap::identity_tensor(next.target(), b);
        let joint = dn.concat(&bq)?;
        let cols: Vec<_> = joint.columns().iter().map(|c| to_raw(c)).collect();
        let syz = syzygy_vectors(
            ring,
            joint.target().twists(),
            &cols,
            joint.source().twists(),
        )?;
        syz.into_iter()
            .map(|mut v| {
                v.truncate(cg.rank());
                from_raw(ring.base(), v)
            })
            .collect()
    };
    let kernel = SubmoduleOfFree::new(&cg, kernel_gens)?;

    let mut image_gens: Vec<Vec<Polynomial>> = prev.tensor_identity(g0).columns().to_vec();
    image_gens.extend(ModuleMap::identity_tensor(c, b).columns().iter().cloned());
    let image = SubmoduleOfFree::new(&cg, image_gens)?;
    Ok(subquotient(&kernel, &image)?.with_provenance(Provenance::Homology))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn annihilator_of_cyclic_module() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let i = Ideal::parse(&r, "(xy, xz)").unwrap();
        let m = PresentedModule::cyclic(&i).unwrap();
        assert!(m.annihilator().unwrap().equals(&i).unwrap());
        assert_eq!(m.mu().unwrap(), 1);
        assert!(!m.is_zero().unwrap());
    }

    #[test]
    fn zero_module_has_unit_annihilator() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let m = PresentedModule::zero(&r);
        assert!(m.is_zero().unwrap());
        assert!(m.annihilator().unwrap().is_unit().unwrap());
        assert_eq!(m.mu().unwrap(), 0);
        let one = PresentedModule::cyclic(&Ideal::unit(&r)).unwrap();
        assert!(one.is_zero().unwrap());
    }

    #[test]
    fn pruning_removes_unit_relations() {
        let r = RingSpec::parse("QQ[x,y]").unwrap();
        let f0 = FreeModule::standard(&r, 2);
        let p = |s: &str| Polynomial::parse(r.base(), s).unwrap();
        // coker of [[1, x], [0, y]] ≅ R/(y)
        let map = ModuleMap::from_rows(
            FreeModule::new(&r, vec![0, 1]),
            f0,
            vec![vec![p("1"), p("x")], vec![p("0"), p("y")]],
        )
        .unwrap();
        let m = PresentedModule::cokernel(map)
            .minimal_presentation()
            .unwrap();
        assert_eq!(m.generators_module().rank(), 1);
        assert!(m
            .annihilator()
            .unwrap()
            .equals(&Ideal::parse(&r, "(y)").unwrap())
            .unwrap());
    }

    #[test]
    fn subquotient_of_equal_modules_is_zero() {
        let r = RingSpec::parse("QQ[x,y,z]").unwrap();
        let f = FreeModule::standard(&r, 1);
        let p = |s: &str| vec![Polynomial::parse(r.base(), s).unwrap()];
        let k = SubmoduleOfFree::new(&f, vec![p("x"), p("y")]).unwrap();
        assert!(subquotient(&k, &k).unwrap().is_zero().unwrap());
        let v = SubmoduleOfFree::new(&f, vec![p("z")]).unwrap();
        assert!(matches!(subquotient(&k, &v), Err(Error::Integrity(_))));
    }
}
