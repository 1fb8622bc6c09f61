//! Strategies shared by the property suites.

#![allow(dead_code)]

use nashjet::{Field, Monomial, Polynomial, PolynomialRing, QPolyMatrix, QPolynomial, Term};
use proptest::prelude::*;

/// Monomial over `vars` variables, each exponent at most `max_exp`.
pub fn monomial(vars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    proptest::collection::vec(0..=max_exp, vars)
        .prop_map(|exps| Monomial::from_exponents(exps.into_iter().enumerate().map(|(p, e)| (p as u32, e))))
}

/// Polynomial with up to `max_terms` terms and small integer coefficients.
pub fn poly_in<C: Field>(ring: PolynomialRing, max_exp: u32, max_terms: usize) -> impl Strategy<Value = Polynomial<C>> {
    let vars = ring.num_variables();
    proptest::collection::vec((-9i64..=9, monomial(vars, max_exp)), 0..=max_terms).prop_map(move |terms| {
        Polynomial::from_terms(&ring, terms.into_iter().map(|(c, m)| Term::new(C::from_int(c), m)))
    })
}

pub fn qpoly(ring: &PolynomialRing, max_exp: u32, max_terms: usize) -> impl Strategy<Value = QPolynomial> {
    poly_in(ring.clone(), max_exp, max_terms)
}

pub fn nonzero_qpoly(ring: &PolynomialRing, max_exp: u32, max_terms: usize) -> impl Strategy<Value = QPolynomial> {
    qpoly(ring, max_exp, max_terms).prop_filter("nonzero", |p| !p.is_zero())
}

/// `rows x cols` matrix of polynomials.
pub fn qmatrix(
    ring: &PolynomialRing,
    rows: usize,
    cols: usize,
    max_exp: u32,
    max_terms: usize,
) -> impl Strategy<Value = QPolyMatrix> {
    let r = ring.clone();
    proptest::collection::vec(qpoly(ring, max_exp, max_terms), rows * cols)
        .prop_map(move |entries| QPolyMatrix::new(&r, rows, cols, entries).unwrap())
}

pub fn xyz() -> PolynomialRing {
    PolynomialRing::base(["x", "y", "z"]).unwrap()
}
