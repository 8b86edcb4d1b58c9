//! Exact sparse multivariate polynomials over the rationals.

mod monomial;
mod order;
mod parse;
mod poly;

pub use monomial::{ExpVec, MAX_VARS};
pub use order::{MonomialOrder, OrderKind};
pub use parse::parse;
pub use poly::{ArithOp, PolyQ};

/// Arbitrary-precision rational coefficient.
pub type Q = num_rational::BigRational;

/// Convenience constructor for small rationals.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Convenience constructor for integers as rationals.
pub fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}
