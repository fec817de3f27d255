//! Exact sparse polynomials over the rationals.

mod monomial;
mod order;
mod parse;
mod polynomial;
mod ring;

pub use monomial::Monomial;
pub use order::TermOrder;
pub use parse::parse_poly;
pub(crate) use polynomial::monomial_bidegree;
pub use polynomial::{Coeff, Polynomial};
pub use ring::{Bidegree, Ring, RingRef, VarKind};
