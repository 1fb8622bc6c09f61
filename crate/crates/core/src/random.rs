//! Random instances for property suites and the self-test.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::field::Field;
use crate::poly::{Monomial, Polynomial, PolynomialRing, Term};

/// Shape of random polynomials.
#[derive(Clone, Copy, Debug)]
pub struct PolySpec {
    pub max_degree: u32,
    pub max_terms: usize,
    /// Coefficients are drawn from `-coeff_bound..=coeff_bound`, zero
    /// excluded.
    pub coeff_bound: i64,
}

impl Default for PolySpec {
    fn default() -> Self {
        Self { max_degree: 4, max_terms: 5, coeff_bound: 5 }
    }
}

/// Random polynomial in all variables of `ring`. Occasionally zero.
pub fn polynomial<C: Field, R: Rng + ?Sized>(rng: &mut R, ring: &PolynomialRing, spec: PolySpec) -> Polynomial<C> {
    let positions: Vec<usize> = (0..ring.num_variables()).collect();
    polynomial_in(rng, ring, &positions, spec)
}

/// Random polynomial using only the variables at `positions`.
pub fn polynomial_in<C: Field, R: Rng + ?Sized>(
    rng: &mut R,
    ring: &PolynomialRing,
    positions: &[usize],
    spec: PolySpec,
) -> Polynomial<C> {
    let n_terms = rng.gen_range(0..=spec.max_terms);
    let terms = (0..n_terms).map(|_| {
        let degree = rng.gen_range(0..=spec.max_degree);
        let mut exps = Vec::new();
        if !positions.is_empty() {
            for _ in 0..degree {
                exps.push((*positions.choose(rng).unwrap() as u32, 1));
            }
        }
        let mut c = 0;
        while c == 0 {
            c = rng.gen_range(-spec.coeff_bound..=spec.coeff_bound);
        }
        Term::new(C::from_int(c), Monomial::from_exponents(exps))
    });
    Polynomial::from_terms(ring, terms)
}

/// Random `n x n` integer matrix of determinant `±1`, built as a product of
/// elementary row operations, a permutation and sign flips.
pub fn unimodular<R: Rng + ?Sized>(rng: &mut R, n: usize, steps: usize) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    if n == 0 {
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        let k: i64 = rng.gen_range(-2..=2);
        let source = m[j].clone();
        for (t, s) in m[i].iter_mut().zip(source) {
            *t += k * s;
        }
    }
    m.shuffle(rng);
    for row in m.iter_mut() {
        if rng.gen_bool(0.3) {
            row.iter_mut().for_each(|v| *v = -*v);
        }
    }
    m
}
