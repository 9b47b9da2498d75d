use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

pub(crate) type Exps = SmallVec<[u32; 4]>;

/// A power product `x_1^a_1 ... x_n^a_n` together with its weighted degree.
///
/// The degree is fixed when the monomial is built by its ring and is then
/// carried additively through products and quotients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub(crate) exps: Exps,
    pub(crate) degree: u32,
}

impl Monomial {
    pub(crate) fn from_parts(exps: Exps, degree: u32) -> Self {
        Monomial { exps, degree }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Weighted total degree.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: other.degree - self.degree,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of the variables occurring in the monomial.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// The kind of a monomial order; every kind refines weighted degree
/// (the elimination order refines the weighted degree of the first block).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    DegRevLex,
    DegLex,
    /// Eliminates the first `k` variables: compares the weighted degree in
    /// those variables first, then breaks ties by degrevlex.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn compare(&self, weights: &[u32], a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::DegRevLex => a.degree.cmp(&b.degree).then_with(|| revlex(a, b)),
            MonomialOrder::DegLex => a.degree.cmp(&b.degree).then_with(|| lex(a, b)),
            MonomialOrder::Elimination(k) => {
                let block = |m: &Monomial| -> u64 {
                    m.exps[..*k]
                        .iter()
                        .zip(weights)
                        .map(|(e, w)| *e as u64 * *w as u64)
                        .sum()
                };
                block(a)
                    .cmp(&block(b))
                    .then_with(|| a.degree.cmp(&b.degree))
                    .then_with(|| revlex(a, b))
            }
        }
    }
}

fn revlex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().zip(&b.exps).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn lex(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().zip(&b.exps) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}
