use std::fmt;

use super::ideal::Ideal;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Polynomial, PolynomialRing};

/// `ambient / relations`, with elements represented by normal forms against
/// a Gröbner basis computed once up front. Two elements are equal iff their
/// normal forms are identical.
#[derive(Clone)]
pub struct QuotientRing<C> {
    relations: Ideal<C>,
}

impl<C: Field> QuotientRing<C> {
    pub fn new(relations: Ideal<C>) -> Result<Self> {
        Ok(Self { relations: relations.with_groebner_basis()? })
    }

    pub fn ambient(&self) -> &PolynomialRing {
        self.relations.ring()
    }

    pub fn relations(&self) -> &Ideal<C> {
        &self.relations
    }

    pub fn reduce(&self, f: &Polynomial<C>) -> Result<Polynomial<C>> {
        self.relations.normal_form(f)
    }

    pub fn is_zero(&self, f: &Polynomial<C>) -> Result<bool> {
        Ok(self.reduce(f)?.is_zero())
    }

    pub fn equal(&self, f: &Polynomial<C>, g: &Polynomial<C>) -> Result<bool> {
        Ok(self.reduce(f)? == self.reduce(g)?)
    }

    pub fn add(&self, f: &Polynomial<C>, g: &Polynomial<C>) -> Result<Polynomial<C>> {
        self.reduce(&f.checked_add(g)?)
    }

    pub fn sub(&self, f: &Polynomial<C>, g: &Polynomial<C>) -> Result<Polynomial<C>> {
        self.reduce(&f.checked_sub(g)?)
    }

    pub fn mul(&self, f: &Polynomial<C>, g: &Polynomial<C>) -> Result<Polynomial<C>> {
        let (f, g) = (self.reduce(f)?, self.reduce(g)?);
        self.reduce(&f.checked_mul(&g)?)
    }

    /// The zero quotient, i.e. `relations = (1)`.
    pub fn is_trivial(&self) -> Result<bool> {
        self.relations.is_unit()
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial<C>> {
        self.reduce(&Polynomial::parse(text, self.ambient())?)
    }

    /// Checks that `f` lives in the ambient ring.
    pub fn check(&self, f: &Polynomial<C>) -> Result<()> {
        if f.ring() == self.ambient() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

impl<C: Field> fmt::Debug for QuotientRing<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotientRing(/ {:?})", self.relations)
    }
}
