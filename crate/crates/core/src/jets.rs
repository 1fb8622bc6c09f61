//! Hasse-Schmidt jet calculus.
//!
//! For a base ring `k[x, y, ..]` and a jet order `n`, the jet ring is
//! `k[x, x_1, .., x_n, y, y_1, .., y_n, ..]`. The universal lift sends a base
//! polynomial `f` to `f(x + x_1 t + .. + x_n t^n, ..)` modulo `t^(n+1)`; its
//! coefficient of `t^i` is the Hasse-Schmidt derivative `D_i(f)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::Ideal;
use crate::poly::{JetVariable, MonomialOrder, Polynomial, PolynomialRing};

/// A base ring together with its jet ring of order `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetContext {
    base: PolynomialRing,
    jet: PolynomialRing,
    order: u32,
}

impl JetContext {
    /// The base ring must only contain jet-index-0 variables. The jet ring
    /// inherits its monomial order (degrevlex when the base uses a block
    /// order).
    pub fn new(base: &PolynomialRing, order: u32) -> Result<Self> {
        if base.max_jet_index() != 0 {
            return Err(Error::Shape("the base ring of a jet context may only contain jet index 0".into()));
        }
        let jet_order = match base.order() {
            MonomialOrder::BlockElimination { .. } => MonomialOrder::DegRevLex,
            o => o,
        };
        let jet = PolynomialRing::new(base.base_variables().iter().cloned(), order, jet_order)?;
        Ok(Self { base: base.clone(), jet, order })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn base_ring(&self) -> &PolynomialRing {
        &self.base
    }

    pub fn jet_ring(&self) -> &PolynomialRing {
        &self.jet
    }

    /// The jet variable `x_i` for the base symbol with index `base`.
    pub fn jet_variable<C: Field>(&self, base: usize, i: u32) -> Result<Polynomial<C>> {
        if i > self.order {
            return Err(Error::IndexOutOfRange { index: i as usize, max: self.order as usize });
        }
        let v = JetVariable::new(base, i);
        self.jet.position(v).ok_or(Error::IndexOutOfRange { index: base, max: self.base.base_variables().len() })?;
        Ok(Polynomial::variable(&self.jet, v))
    }

    fn check_base<C: Field>(&self, f: &Polynomial<C>) -> Result<()> {
        if f.ring() == &self.base {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `D_0`: renames base variables to their jet-index-0 copies.
    pub fn rename<C: Field>(&self, f: &Polynomial<C>) -> Result<Polynomial<C>> {
        self.check_base(f)?;
        f.map_into(&self.jet)
    }

    /// The series `x + x_1 t + .. + x_n t^n` for the base variable at
    /// `position` in the base ring.
    fn variable_series<C: Field>(&self, position: usize) -> TruncatedSeries<C> {
        let v = self.base.variable_at(position);
        let coeffs = (0..=self.order)
            .map(|i| Polynomial::variable(&self.jet, JetVariable::new(v.base, i)))
            .collect();
        TruncatedSeries { ring: self.jet.clone(), coeffs }
    }

    /// The truncated lift `f(x + x_1 t + ..)` mod `t^(n+1)`.
    pub fn jet_lift<C: Field>(&self, f: &Polynomial<C>) -> Result<TruncatedSeries<C>> {
        self.check_base(f)?;
        let mut powers: HashMap<(u32, u32), TruncatedSeries<C>> = HashMap::new();
        let mut acc = TruncatedSeries::zero(self);
        for t in f.terms() {
            let mut term = TruncatedSeries::constant(self, Polynomial::constant(&self.jet, t.coeff.clone()));
            for &(p, e) in t.monomial.exponents() {
                let power = powers
                    .entry((p, e))
                    .or_insert_with(|| self.variable_series(p as usize).pow(e))
                    .clone();
                term = term.mul_unchecked(&power);
            }
            acc = acc.add_unchecked(&term);
        }
        Ok(acc)
    }

    /// `D_i(f)`, the coefficient of `t^i` in the lift.
    pub fn hs_derivative<C: Field>(&self, f: &Polynomial<C>, i: u32) -> Result<Polynomial<C>> {
        if i > self.order {
            return Err(Error::IndexOutOfRange { index: i as usize, max: self.order as usize });
        }
        Ok(self.jet_lift(f)?.coeffs.swap_remove(i as usize))
    }

    /// `[D_0(f), .., D_n(f)]`.
    pub fn hs_derivatives<C: Field>(&self, f: &Polynomial<C>) -> Result<Vec<Polynomial<C>>> {
        Ok(self.jet_lift(f)?.coeffs)
    }

    /// Defining ideal of the jet scheme of `V(relations)`: all `D_i(f)`.
    pub fn jet_ideal<C: Field>(&self, relations: &[Polynomial<C>]) -> Result<Ideal<C>> {
        let mut gens = Vec::with_capacity(relations.len() * (self.order as usize + 1));
        for f in relations {
            gens.extend(self.hs_derivatives(f)?);
        }
        Ideal::new(&self.jet, gens)
    }
}

/// `a_0 + a_1 t + .. + a_n t^n` with coefficients in a jet ring; arithmetic
/// is modulo `t^(n+1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C> {
    ring: PolynomialRing,
    coeffs: Vec<Polynomial<C>>,
}

impl<C: Field> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

impl<C: Field> TruncatedSeries<C> {
    pub fn zero(ctx: &JetContext) -> Self {
        let coeffs = vec![Polynomial::zero(&ctx.jet); ctx.order as usize + 1];
        Self { ring: ctx.jet.clone(), coeffs }
    }

    pub fn constant(ctx: &JetContext, c: Polynomial<C>) -> Self {
        let mut s = Self::zero(ctx);
        s.coeffs[0] = c;
        s
    }

    /// Exactly `n + 1` coefficients in the jet ring are required.
    pub fn from_coefficients(ctx: &JetContext, coeffs: Vec<Polynomial<C>>) -> Result<Self> {
        if coeffs.len() != ctx.order as usize + 1 {
            return Err(Error::ContextMismatch);
        }
        if coeffs.iter().any(|c| c.ring() != &ctx.jet) {
            return Err(Error::RingMismatch);
        }
        Ok(Self { ring: ctx.jet.clone(), coeffs })
    }

    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32 - 1
    }

    pub fn coefficient(&self, i: usize) -> Option<&Polynomial<C>> {
        self.coeffs.get(i)
    }

    pub fn coefficients(&self) -> &[Polynomial<C>] {
        &self.coeffs
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring && self.coeffs.len() == other.coeffs.len() {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    /// Cauchy product, truncated.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Self { ring: self.ring.clone(), coeffs }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let len = self.coeffs.len();
        let mut coeffs = vec![Polynomial::zero(&self.ring); len];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.coeffs[..len - i].iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self { ring: self.ring.clone(), coeffs }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self { ring: self.ring.clone(), coeffs: vec![Polynomial::zero(&self.ring); self.coeffs.len()] };
        acc.coeffs[0] = Polynomial::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul_unchecked(self);
        }
        acc
    }
}

impl<C: Field> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn add(self, rhs: Self) -> TruncatedSeries<C> {
        self.checked_add(rhs).expect("jet context mismatch")
    }
}

impl<C: Field> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn mul(self, rhs: Self) -> TruncatedSeries<C> {
        self.checked_mul(rhs).expect("jet context mismatch")
    }
}
