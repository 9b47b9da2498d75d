//! Exact sparse multivariate polynomials over ℚ and 𝔽_p.

mod coeff;
mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use coeff::{Coeff, Field};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse_generators;
pub use polynomial::{poly_arith, ArithOp, Homogeneity, Polynomial};
pub(crate) use polynomial::{scale_terms, sub_mul_terms, Term};
pub use ring::{PolyRing, RingSpec, DEFAULT_DEGREE_CAP};
