//! Exact sparse multivariate polynomials over a jet-variable registry.

mod monomial;
mod parse;
mod polynomial;
mod ring;

pub(crate) use parse::{Parser, Token};

pub use monomial::Monomial;
pub use polynomial::{Polynomial, Term};
pub use ring::{is_valid_base_name, JetVariable, MonomialOrder, PolynomialRing};
