//! Exact coefficient arithmetic, sparse multivariate polynomials, monomial
//! orders, parsing and printing.

mod context;
mod monomial;
mod order;
mod parse;
mod polynomial;

pub use context::{Ctx, VariableContext};
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_poly, ParseError};
pub use polynomial::Polynomial;

use thiserror::Error;

/// The coefficient field: arbitrary-precision rationals, always reduced to
/// lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for small integer coefficients.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable context mismatch")]
    ContextMismatch,
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("no image supplied for variable `{0}`")]
    MissingImage(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("variable index {0} out of range")]
    VariableOutOfRange(usize),
    #[error("polynomial mentions dropped variable `{0}`")]
    DroppedVariableInSupport(String),
}
