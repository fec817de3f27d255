//! Likelihood ideals of hypersurface arrangements.
//!
//! Exact polynomial arithmetic, a Buchberger engine for ideals and free
//! modules, syzygies of polynomial matrices, pre-likelihood and likelihood
//! ideals, multidegrees, and the combinatorics of graphic arrangements.
//! Everything here is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod error;
pub mod graphic;
pub mod groebner;
pub mod likelihood;
pub mod multidegree;
pub mod poly;
pub mod syzygy;

pub use error::{Error, Result};
pub use poly::{parse_poly, Bidegree, Monomial, Polynomial, Ring, RingRef, TermOrder, VarKind};
