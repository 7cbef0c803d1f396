//! Exact multivariate polynomials over the rationals and monomial orders.

mod context;
mod monomial;
mod order;
pub(crate) mod parse;
mod polynomial;

pub use context::{Block, VarContext, DEFAULT_BLOCK};
pub use monomial::{DisplayMonomial, Monomial};
pub use order::{MonomialOrder, OrderSpec};
pub use parse::{parse_monomial, parse_polynomial};
pub use polynomial::{DisplayPolynomial, Polynomial, Term};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("invalid variable context: {0}")]
    InvalidContext(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariableAt { name: String, pos: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("monomial quotient requested but the divisor does not divide")]
    NotDivisible,
    #[error("operands belong to different variable contexts")]
    ContextMismatch,
    #[error("invalid monomial order: {0}")]
    InvalidOrder(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}
