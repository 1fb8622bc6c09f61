//! Exact jet-scheme calculus and Nash-transformation ideals.
//!
//! Given a module presented by an `r x s` matrix `M` over a polynomial ring,
//! the blow-up of the ideal of `r x r` minors of `M` realizes the Nash
//! transformation of the module. On `n`-jets the same role is played by the
//! ideal of maximal minors of the block lower-triangular matrix
//! `M_n = [D_{i-j}(M)]`, where `D_0, .., D_n` is the universal
//! Hasse-Schmidt derivation. This crate computes those ideals exactly and
//! certifies ideal equalities with Gröbner bases.
//!
//! All types are generic over an exact coefficient [`Field`]; the `Q*`
//! aliases fix it to arbitrary-precision rationals.

pub mod error;
pub mod field;
pub mod groebner;
pub mod jets;
pub mod nash;
pub mod poly;
pub mod polymatrix;
pub mod random;

pub use error::{Error, Result};
pub use field::Field;
pub use groebner::{Ideal, QuotientRing};
pub use jets::{JetContext, TruncatedSeries};
pub use nash::{IdealExpr, ModulePresentation, NashJetResult, NashOptions, VerificationReport};
pub use poly::{JetVariable, Monomial, MonomialOrder, Polynomial, PolynomialRing, Term};
pub use polymatrix::PolyMatrix;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Arbitrary-precision rational numbers.
pub type Rational = BigRational;
pub type QPolynomial = Polynomial<Rational>;
pub type QIdeal = Ideal<Rational>;
pub type QQuotientRing = QuotientRing<Rational>;
pub type QPolyMatrix = PolyMatrix<Rational>;
pub type QSeries = TruncatedSeries<Rational>;
pub type QModulePresentation = ModulePresentation<Rational>;
pub type QNashJetResult = NashJetResult<Rational>;
pub type QIdealExpr = IdealExpr<Rational>;
