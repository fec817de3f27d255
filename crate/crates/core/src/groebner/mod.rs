//! Gröbner bases and the ideal operations built on them.

pub(crate) mod engine;
mod hilbert;
mod ideal;
mod ops;

pub use engine::{Budget, Stats};
pub use hilbert::{hilbert_numerator, HilbertNumerator};
pub(crate) use ideal::from_epoly;
pub use ideal::{reduce, GroebnerBasis, Ideal};
pub use ops::{
    codim, codim_of_monomials, eliminate, groebner_basis, ideal_contained, ideal_equal,
    ideal_member, initial_ideal, is_nonzerodivisor, minimal_generators, quotient,
    quotient_by_intersection, quotient_detailed, saturate, saturate_detailed, saturate_product,
    saturate_rabinowitsch, Colon,
};
