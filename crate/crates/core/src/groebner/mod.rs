//! Buchberger-based Gröbner engine: normal forms, membership, ideal
//! equality, ideal algebra, interreduction, elimination and saturation.

mod buchberger;
mod ideal;
mod quotient;

pub use buchberger::{
    buchberger, complete, is_groebner_basis, is_reduced, normal_form, reduce_basis, s_polynomial,
    DEFAULT_MAX_PAIRS,
};
pub use ideal::Ideal;
pub use quotient::QuotientRing;
