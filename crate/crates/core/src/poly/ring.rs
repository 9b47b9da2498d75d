use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::coeff::Field;
use super::monomial::{Exps, Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// Default cap on the degree of S-pairs in any Gröbner computation.
pub const DEFAULT_DEGREE_CAP: u32 = 20;

#[derive(Debug, PartialEq, Eq)]
pub struct PolyRingData {
    vars: Vec<String>,
    field: Field,
    weights: Vec<u32>,
    order: MonomialOrder,
}

/// The ambient polynomial ring `S = k[x_1..x_n]` with its grading and
/// monomial order. Cheap to clone.
#[derive(Clone)]
pub struct PolyRing(Arc<PolyRingData>);

impl PolyRing {
    /// Standard-graded ring with the degrevlex order.
    pub fn new<S: AsRef<str>>(vars: &[S], field: Field) -> Result<PolyRing> {
        let weights = vec![1; vars.len()];
        PolyRing::with_grading(vars, field, weights, MonomialOrder::DegRevLex)
    }

    pub fn with_grading<S: AsRef<str>>(
        vars: &[S],
        field: Field,
        weights: Vec<u32>,
        order: MonomialOrder,
    ) -> Result<PolyRing> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        if vars.is_empty() {
            return Err(Error::Usage(
                "a polynomial ring needs at least one variable".into(),
            ));
        }
        if weights.len() != vars.len() || weights.contains(&0) {
            return Err(Error::Usage(
                "one positive weight per variable required".into(),
            ));
        }
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() || !v.chars().next().unwrap().is_alphabetic() {
                return Err(Error::Usage(format!("bad variable name {v:?}")));
            }
            if vars[..i].contains(v) {
                return Err(Error::Usage(format!("duplicate variable {v}")));
            }
        }
        if let MonomialOrder::Elimination(k) = order {
            if k == 0 || k > vars.len() {
                return Err(Error::Usage(format!("elimination block {k} out of range")));
            }
        }
        Ok(PolyRing(Arc::new(PolyRingData {
            vars,
            field,
            weights,
            order,
        })))
    }

    /// Same variables and grading, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<PolyRing> {
        PolyRing::with_grading(&self.0.vars, self.0.field, self.0.weights.clone(), order)
    }

    /// Appends one fresh variable of weight one; the result uses degrevlex.
    pub fn with_extra_variable(&self, name: &str) -> Result<PolyRing> {
        let mut vars = self.0.vars.clone();
        vars.push(name.to_string());
        let mut weights = self.0.weights.clone();
        weights.push(1);
        PolyRing::with_grading(&vars, self.0.field, weights, MonomialOrder::DegRevLex)
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn weights(&self) -> &[u32] {
        &self.0.weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn monomial(&self, exps: &[u32]) -> Monomial {
        assert_eq!(exps.len(), self.nvars(), "exponent vector length");
        let degree = exps.iter().zip(&self.0.weights).map(|(e, w)| e * w).sum();
        Monomial::from_parts(exps.iter().copied().collect(), degree)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::from_parts(Exps::from_elem(0, self.nvars()), 0)
    }

    pub fn var_monomial(&self, i: usize) -> Monomial {
        let mut e = Exps::from_elem(0, self.nvars());
        e[i] = 1;
        Monomial::from_parts(e, self.0.weights[i])
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.order.compare(&self.0.weights, a, b)
    }

    pub fn lcm(&self, a: &Monomial, b: &Monomial) -> Monomial {
        let exps: Exps = a.exps.iter().zip(&b.exps).map(|(x, y)| *x.max(y)).collect();
        let degree = exps.iter().zip(&self.0.weights).map(|(e, w)| e * w).sum();
        Monomial::from_parts(exps, degree)
    }

    pub fn gcd(&self, a: &Monomial, b: &Monomial) -> Monomial {
        let exps: Exps = a.exps.iter().zip(&b.exps).map(|(x, y)| *x.min(y)).collect();
        let degree = exps.iter().zip(&self.0.weights).map(|(e, w)| e * w).sum();
        Monomial::from_parts(exps, degree)
    }

    pub fn same(&self, other: &PolyRing) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }

    /// A variable name not already used by the ring.
    pub fn fresh_name(&self, stem: &str) -> String {
        let mut name = stem.to_string();
        let mut k = 0;
        while self.var_index(&name).is_some() {
            k += 1;
            name = format!("{stem}{k}");
        }
        name
    }
}

impl PartialEq for PolyRing {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for PolyRing {}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.field {
            Field::Rational => write!(f, "QQ")?,
            Field::Prime(p) => write!(f, "F{p}")?,
        }
        write!(f, "[{}]", self.0.vars.join(","))
    }
}

struct RingSpecData {
    base: PolyRing,
    quotient: Vec<Polynomial>,
    degree_cap: u32,
    quotient_gb: OnceLock<Vec<Polynomial>>,
    dim: OnceLock<i64>,
}

/// `R = S/J` for a homogeneous ideal `J` of the ambient ring `S`
/// (`J` empty for `R = S`). Carries the degree cap used by every Gröbner
/// computation over it. Cheap to clone.
#[derive(Clone)]
pub struct RingSpec(Arc<RingSpecData>);

impl RingSpec {
    pub fn polynomial_ring(base: PolyRing) -> RingSpec {
        RingSpec(Arc::new(RingSpecData {
            base,
            quotient: Vec::new(),
            degree_cap: DEFAULT_DEGREE_CAP,
            quotient_gb: OnceLock::new(),
            dim: OnceLock::new(),
        }))
    }

    /// The ambient polynomial ring `S` of `S/J`, with the same degree cap.
    pub fn ambient(&self) -> RingSpec {
        if self.is_polynomial_ring() {
            return self.clone();
        }
        RingSpec::polynomial_ring(self.base().clone()).with_degree_cap(self.degree_cap())
    }

    /// The quotient `S/J`. Every generator of `J` must be homogeneous.
    pub fn quotient(base: PolyRing, relations: Vec<Polynomial>) -> Result<RingSpec> {
        let mut quotient = Vec::new();
        for g in relations {
            if !g.ring().same(&base) {
                return Err(Error::Usage("quotient relation from another ring".into()));
            }
            g.homogeneous_degree()?;
            if g.is_zero() {
                continue;
            }
            if g.is_constant() {
                return Err(Error::Usage("the defining ideal is the unit ideal".into()));
            }
            quotient.push(g);
        }
        Ok(RingSpec(Arc::new(RingSpecData {
            base,
            quotient,
            degree_cap: DEFAULT_DEGREE_CAP,
            quotient_gb: OnceLock::new(),
            dim: OnceLock::new(),
        })))
    }

    pub fn with_degree_cap(&self, cap: u32) -> RingSpec {
        RingSpec(Arc::new(RingSpecData {
            base: self.0.base.clone(),
            quotient: self.0.quotient.clone(),
            degree_cap: cap,
            quotient_gb: OnceLock::new(),
            dim: OnceLock::new(),
        }))
    }

    pub fn base(&self) -> &PolyRing {
        &self.0.base
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.0.quotient
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.0.quotient.is_empty()
    }

    pub fn degree_cap(&self) -> u32 {
        self.0.degree_cap
    }

    pub fn nvars(&self) -> usize {
        self.0.base.nvars()
    }

    /// Reduced Gröbner basis of `J` in `S` (empty for a polynomial ring).
    pub fn quotient_basis(&self) -> Result<&[Polynomial]> {
        if let Some(gb) = self.0.quotient_gb.get() {
            return Ok(gb);
        }
        let gb = crate::groebner::ideal_basis(&self.0.base, &self.0.quotient, self.0.degree_cap)?;
        Ok(self.0.quotient_gb.get_or_init(|| gb))
    }

    /// Normal form modulo `J`.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if self.is_polynomial_ring() {
            return Ok(f.clone());
        }
        Ok(crate::groebner::normal_form(f, self.quotient_basis()?))
    }

    /// Krull dimension of `S/J`, computed from the lead-term ideal of `J`.
    pub fn dim(&self) -> Result<i64> {
        if let Some(d) = self.0.dim.get() {
            return Ok(*d);
        }
        let leads: Vec<Monomial> = self
            .quotient_basis()?
            .iter()
            .map(|g| g.lead_monomial().unwrap().clone())
            .collect();
        let d = crate::groebner::monomial::dimension(self.nvars(), &leads);
        Ok(*self.0.dim.get_or_init(|| d))
    }

    /// A ring is the same if the ambient ring and the defining relations agree.
    pub fn same(&self, other: &RingSpec) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.base.same(&other.0.base) && self.0.quotient == other.0.quotient)
    }

    /// Parse `QQ[x,y,z]`, `F5[X,Y,Z]/(X+Y+Z)^5` or `QQ[X,Y,Z]/(X^2,XY,XZ)`.
    pub fn parse(text: &str) -> Result<RingSpec> {
        super::parse::parse_ring(text)
    }
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl fmt::Debug for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.base)?;
        if !self.0.quotient.is_empty() {
            let gens: Vec<String> = self.0.quotient.iter().map(|g| g.to_string()).collect();
            write!(f, "/({})", gens.join(", "))?;
        }
        Ok(())
    }
}
