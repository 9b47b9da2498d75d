use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::coeff::{Coeff, Field};
use super::monomial::Monomial;
use super::ring::PolyRing;
use crate::error::{Error, Result};

pub(crate) type Term = (Monomial, Coeff);

/// Sparse polynomial in canonical form: no zero coefficients, terms sorted
/// strictly descending in the ring's monomial order.
#[derive(Clone)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<Term>,
}

/// Result of a homogeneity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial, homogeneous of every degree.
    Any,
    Degree(i64),
}

/// Arithmetic selector for [`poly_arith`].
#[derive(Clone, Debug)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Checked binary arithmetic; mixing rings is a usage error.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial> {
    if !a.ring.same(&b.ring) {
        return Err(Error::Usage(format!(
            "mixed rings {} and {}",
            a.ring, b.ring
        )));
    }
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
    })
}

// ---- term-slice kernels shared with the Gröbner engine ----

pub(crate) fn add_terms(ring: &PolyRing, a: &[Term], b: &[Term]) -> Vec<Term> {
    let field = ring.field();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ring.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(&a[i].1, &b[j].1);
                if !field.is_zero(&c) {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// `a - c·m·g`.
pub(crate) fn sub_mul_terms(
    ring: &PolyRing,
    a: &[Term],
    c: &Coeff,
    m: &Monomial,
    g: &[Term],
) -> Vec<Term> {
    let field = ring.field();
    let mut out = Vec::with_capacity(a.len() + g.len());
    let (mut i, mut j) = (0, 0);
    let next_g = |j: usize| -> Term { (m.mul(&g[j].0), field.neg(&field.mul(c, &g[j].1))) };
    let mut pending: Option<Term> = if g.is_empty() { None } else { Some(next_g(0)) };
    while i < a.len() {
        let Some(t) = pending.take() else { break };
        match ring.cmp(&a[i].0, &t.0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
                pending = Some(t);
            }
            Ordering::Less => {
                out.push(t);
                j += 1;
                pending = if j < g.len() { Some(next_g(j)) } else { None };
            }
            Ordering::Equal => {
                let s = field.add(&a[i].1, &t.1);
                if !field.is_zero(&s) {
                    out.push((t.0, s));
                }
                i += 1;
                j += 1;
                pending = if j < g.len() { Some(next_g(j)) } else { None };
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    if let Some(t) = pending {
        out.push(t);
        for k in j + 1..g.len() {
            out.push(next_g(k));
        }
    }
    out
}

/// `c·m·a`; `c` must be nonzero.
pub(crate) fn scale_terms(ring: &PolyRing, a: &[Term], c: &Coeff, m: &Monomial) -> Vec<Term> {
    let field = ring.field();
    a.iter()
        .map(|(mono, k)| (mono.mul(m), field.mul(c, k)))
        .collect()
}

pub(crate) fn mul_terms(ring: &PolyRing, a: &[Term], b: &[Term]) -> Vec<Term> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len() == 1 {
        return scale_terms(ring, b, &a[0].1, &a[0].0);
    }
    if b.len() == 1 {
        return scale_terms(ring, a, &b[0].1, &b[0].0);
    }
    let field = ring.field();
    let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(a.len() * b.len());
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m = ma.mul(mb);
            let c = field.mul(ca, cb);
            match acc.get_mut(&m) {
                Some(v) => *v = field.add(v, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
    }
    let mut out: Vec<Term> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
    out.sort_by(|x, y| ring.cmp(&y.0, &x.0));
    out
}

pub(crate) fn normalize_terms(ring: &PolyRing, mut terms: Vec<Term>) -> Vec<Term> {
    let field = ring.field();
    terms.sort_by(|x, y| ring.cmp(&y.0, &x.0));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == m => last.1 = field.add(&last.1, &c),
            _ => out.push((m, c)),
        }
    }
    out.retain(|(_, c)| !field.is_zero(c));
    out
}

impl Polynomial {
    pub(crate) fn from_sorted_terms(ring: PolyRing, terms: Vec<Term>) -> Polynomial {
        Polynomial { ring, terms }
    }

    pub fn zero(ring: &PolyRing) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &PolyRing) -> Polynomial {
        Polynomial::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &PolyRing, c: Coeff) -> Polynomial {
        let terms = if ring.field().is_zero(&c) {
            Vec::new()
        } else {
            vec![(ring.one_monomial(), c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn from_i64(ring: &PolyRing, n: i64) -> Polynomial {
        Polynomial::constant(ring, ring.field().from_i64(n))
    }

    pub fn var(ring: &PolyRing, i: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(ring.var_monomial(i), ring.field().one())],
        }
    }

    pub fn monomial(ring: &PolyRing, exps: &[u32], c: Coeff) -> Polynomial {
        Polynomial::from_terms(ring, vec![(ring.monomial(exps), c)])
    }

    /// Build from arbitrary terms (unsorted, possibly repeated or zero).
    pub fn from_terms(ring: &PolyRing, terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: normalize_terms(ring, terms),
        }
    }

    /// Parse the text syntax, e.g. `3*x^2*y - 1/2*z^3`.
    pub fn parse(ring: &PolyRing, text: &str) -> Result<Polynomial> {
        super::parse::parse_polynomial(ring, text)
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Constant coefficient (zero if absent).
    pub fn constant_term(&self) -> Coeff {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => self.ring.field().zero(),
        }
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|t| &t.1)
    }

    /// Largest weighted degree of a term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn homogeneous_degree(&self) -> Result<Homogeneity> {
        let Some(first) = self.terms.first() else {
            return Ok(Homogeneity::Any);
        };
        let d = first.0.degree();
        for (m, _) in &self.terms[1..] {
            if m.degree() != d {
                return Err(Error::Inhomogeneous(d as i64, m.degree() as i64));
            }
        }
        Ok(Homogeneity::Degree(d as i64))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_ok()
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(
            self.ring.same(&other.ring),
            "mixed rings {} and {}",
            self.ring,
            other.ring
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        Polynomial {
            ring: self.ring.clone(),
            terms: add_terms(&self.ring, &self.terms, &other.terms),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        let one = self.ring.field().one();
        let terms = sub_mul_terms(
            &self.ring,
            &self.terms,
            &one,
            &self.ring.one_monomial(),
            &other.terms,
        );
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), f.neg(c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other);
        Polynomial {
            ring: self.ring.clone(),
            terms: mul_terms(&self.ring, &self.terms, &other.terms),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if self.ring.field().is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: scale_terms(&self.ring, &self.terms, c, &self.ring.one_monomial()),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if self.ring.field().is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: scale_terms(&self.ring, &self.terms, c, m),
        }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Scale so the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&self.ring.field().inv(c)),
        }
    }

    /// Multivariate division: `self = Σ q_i d_i + r` with no term of `r`
    /// divisible by any leading monomial of the divisors. Divisors are tried
    /// in the given sequence.
    pub fn divide_with_remainder(
        &self,
        divisors: &[Polynomial],
    ) -> Result<(Vec<Polynomial>, Polynomial)> {
        for d in divisors {
            if d.is_zero() {
                return Err(Error::Usage("division by the zero polynomial".into()));
            }
            if !d.ring.same(&self.ring) {
                return Err(Error::Usage("divisor from another ring".into()));
            }
        }
        let field = self.ring.field();
        let mut quotients: Vec<Vec<Term>> = vec![Vec::new(); divisors.len()];
        let mut rem: Vec<Term> = Vec::new();
        let mut p = self.terms.clone();
        while let Some((m, c)) = p.first().cloned() {
            let hit = divisors.iter().position(|d| d.terms[0].0.divides(&m));
            match hit {
                Some(i) => {
                    let d = &divisors[i];
                    let q = d.terms[0].0.quotient_of(&m);
                    let k = field.div(&c, &d.terms[0].1);
                    p = sub_mul_terms(&self.ring, &p, &k, &q, &d.terms);
                    quotients[i].push((q, k));
                }
                None => {
                    rem.push((m, c));
                    p.remove(0);
                }
            }
        }
        let qs = quotients
            .into_iter()
            .map(|t| Polynomial::from_terms(&self.ring, t))
            .collect();
        Ok((
            qs,
            Polynomial {
                ring: self.ring.clone(),
                terms: rem,
            },
        ))
    }

    /// Re-express in another ring whose variables extend (or equal) this
    /// ring's variables, e.g. after adding a variable or changing the order.
    pub fn embed(&self, target: &PolyRing) -> Result<Polynomial> {
        let n = self.ring.nvars();
        if target.nvars() < n || target.vars()[..n] != self.ring.vars()[..] {
            return Err(Error::Usage(format!(
                "cannot embed {} into {}",
                self.ring, target
            )));
        }
        if target.field() != self.ring.field() {
            return Err(Error::Usage("cannot embed across fields".into()));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.resize(target.nvars(), 0);
                (target.monomial(&e), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(target, terms))
    }

    pub fn field(&self) -> Field {
        self.ring.field()
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let c = c.abs();
            let mono = format_monomial(self.ring.vars(), m);
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if field.is_one(&c) {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{c}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn format_monomial(vars: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in vars.iter().zip(m.exponents()) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::sub(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
