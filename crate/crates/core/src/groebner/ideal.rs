use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::buchberger::{buchberger, complete, is_unit_basis, normal_form, DEFAULT_MAX_PAIRS};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{JetVariable, MonomialOrder, Polynomial, PolynomialRing};

/// A finitely generated ideal, optionally carrying its reduced Gröbner basis
/// under the ring's order.
#[derive(Clone)]
pub struct Ideal<C> {
    ring: PolynomialRing,
    generators: Vec<Polynomial<C>>,
    basis: Option<Arc<Vec<Polynomial<C>>>>,
}

impl<C: Field> Ideal<C> {
    /// Zero generators are dropped.
    pub fn new(ring: &PolynomialRing, generators: impl IntoIterator<Item = Polynomial<C>>) -> Result<Self> {
        let mut gens = Vec::new();
        for g in generators {
            if g.ring() != ring {
                return Err(Error::RingMismatch);
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
        Ok(Self { ring: ring.clone(), generators: gens, basis: None })
    }

    /// Parses each generator with the polynomial grammar.
    pub fn parse<S: AsRef<str>>(ring: &PolynomialRing, generators: &[S]) -> Result<Self> {
        let gens = generators.iter().map(|s| Polynomial::parse(s.as_ref(), ring)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, gens)
    }

    pub fn zero(ring: &PolynomialRing) -> Self {
        Self { ring: ring.clone(), generators: Vec::new(), basis: None }
    }

    pub fn unit(ring: &PolynomialRing) -> Self {
        Self { ring: ring.clone(), generators: vec![Polynomial::one(ring)], basis: None }
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    /// True for the zero ideal (no generators).
    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn cached_basis(&self) -> Option<&[Polynomial<C>]> {
        self.basis.as_deref().map(Vec::as_slice)
    }

    /// Reduced Gröbner basis under the ring's order.
    pub fn groebner_basis(&self) -> Result<Vec<Polynomial<C>>> {
        match &self.basis {
            Some(b) => Ok(b.as_ref().clone()),
            None => buchberger(&self.generators, DEFAULT_MAX_PAIRS),
        }
    }

    /// Reduced Gröbner basis under another order; the result lives in the
    /// ring re-ordered accordingly.
    pub fn groebner_basis_in(&self, order: MonomialOrder) -> Result<Vec<Polynomial<C>>> {
        if order == self.ring.order() {
            return self.groebner_basis();
        }
        let ring = self.ring.with_order(order)?;
        let gens = self.generators.iter().map(|g| g.map_into(&ring)).collect::<Result<Vec<_>>>()?;
        buchberger(&gens, DEFAULT_MAX_PAIRS)
    }

    /// Computes and caches the Gröbner basis.
    pub fn with_groebner_basis(mut self) -> Result<Self> {
        if self.basis.is_none() {
            self.basis = Some(Arc::new(buchberger(&self.generators, DEFAULT_MAX_PAIRS)?));
        }
        Ok(self)
    }

    fn basis_ref(&self) -> Result<std::borrow::Cow<'_, [Polynomial<C>]>> {
        Ok(match &self.basis {
            Some(b) => std::borrow::Cow::Borrowed(b.as_slice()),
            None => std::borrow::Cow::Owned(buchberger(&self.generators, DEFAULT_MAX_PAIRS)?),
        })
    }

    fn check(&self, f: &Polynomial<C>) -> Result<()> {
        if f.ring() == &self.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Normal form of `f` with respect to the Gröbner basis.
    pub fn normal_form(&self, f: &Polynomial<C>) -> Result<Polynomial<C>> {
        self.check(f)?;
        Ok(normal_form(f, &self.basis_ref()?))
    }

    pub fn contains(&self, f: &Polynomial<C>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// The first generator of `other` that is not in `self`, if any.
    pub fn containment_witness(&self, other: &Ideal<C>) -> Result<Option<Polynomial<C>>> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        let basis = self.basis_ref()?;
        Ok(other.generators.iter().find(|g| !normal_form(g, &basis).is_zero()).cloned())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal<C>) -> Result<bool> {
        Ok(self.containment_witness(other)?.is_none())
    }

    /// Equality by mutual containment.
    pub fn equals(&self, other: &Ideal<C>) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(is_unit_basis(&self.basis_ref()?))
    }

    pub fn sum(&self, other: &Ideal<C>) -> Result<Self> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        Self::new(&self.ring, self.generators.iter().chain(&other.generators).cloned())
    }

    /// Pairwise products of generators.
    pub fn product(&self, other: &Ideal<C>) -> Result<Self> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for f in &self.generators {
            for g in &other.generators {
                let h = f * g;
                if !gens.contains(&h) {
                    gens.push(h);
                }
            }
        }
        Self::new(&self.ring, gens)
    }

    /// `self^k` for `k >= 1`; `k = 0` gives the unit ideal.
    pub fn power(&self, k: u32) -> Result<Self> {
        let mut acc = Self::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// A generating subset in which no generator lies in the ideal of the
    /// others. Duplicates go first, then generators are scanned by ascending
    /// degree and dropped when already in the ideal of the ones kept so far.
    /// For homogeneous generators that scan is already minimal; otherwise a
    /// second pass removes leftovers.
    pub fn interreduce(&self) -> Result<Self> {
        let ring = &self.ring;
        let mut gens: Vec<Polynomial<C>> = Vec::with_capacity(self.len());
        for g in &self.generators {
            if !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        gens.sort_by(|a, b| canonical_cmp(ring, a, b));

        let mut kept: Vec<Polynomial<C>> = Vec::new();
        let mut basis: Vec<Polynomial<C>> = Vec::new();
        for g in gens {
            if !normal_form(&g, &basis).is_zero() {
                basis = complete(&basis, std::slice::from_ref(&g), DEFAULT_MAX_PAIRS)?;
                kept.push(g);
            }
        }

        if !kept.iter().all(Polynomial::is_homogeneous) {
            let mut i = 0;
            while i < kept.len() && kept.len() > 1 {
                let others: Vec<Polynomial<C>> =
                    kept.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, g)| g.clone()).collect();
                let others_basis = buchberger(&others, DEFAULT_MAX_PAIRS)?;
                if normal_form(&kept[i], &others_basis).is_zero() {
                    kept.remove(i);
                    i = 0;
                } else {
                    i += 1;
                }
            }
        }
        Ok(Self { ring: ring.clone(), generators: kept, basis: Some(Arc::new(basis)) })
    }

    /// `self ∩ k[remaining variables]`, via an elimination order that puts
    /// `vars` first.
    pub fn eliminate(&self, vars: &[JetVariable]) -> Result<Self> {
        if vars.is_empty() {
            return Ok(self.clone());
        }
        let elim = self.ring.eliminating(vars)?;
        let split = vars.len();
        let gens = self.generators.iter().map(|g| g.map_into(&elim)).collect::<Result<Vec<_>>>()?;
        self.eliminated(gens, split)
    }

    /// Shared tail of `eliminate`/`saturate`/`intersect`: Gröbner basis in
    /// a ring whose first `split` variables get eliminated, then keep the
    /// elements free of them and map back.
    fn eliminated(&self, gens: Vec<Polynomial<C>>, split: usize) -> Result<Self> {
        let basis = buchberger(&gens, DEFAULT_MAX_PAIRS)?;
        let kept = basis
            .into_iter()
            .filter(|g| g.support().iter().all(|&p| p >= split))
            .map(|g| g.map_into(&self.ring))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&self.ring, kept)
    }

    /// The saturation `(self : f^∞)`, computed by adjoining `w` with
    /// `1 - w f` and eliminating `w`.
    pub fn saturate(&self, f: &Polynomial<C>) -> Result<Self> {
        self.check(f)?;
        if f.is_zero() {
            return Err(Error::ZeroWitness);
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let (ext, w) = self.ring.with_fresh_variable("w")?;
        let mut gens = self.generators.iter().map(|g| g.map_into(&ext)).collect::<Result<Vec<_>>>()?;
        let wf = Polynomial::variable(&ext, w) * f.map_into(&ext)?;
        gens.push(Polynomial::one(&ext) - wf);
        self.eliminated(gens, 1)
    }

    /// `self ∩ other`, via `t·self + (1 - t)·other` and eliminating `t`.
    pub fn intersect(&self, other: &Ideal<C>) -> Result<Self> {
        if other.ring != self.ring {
            return Err(Error::RingMismatch);
        }
        if self.is_empty() || other.is_empty() {
            return Ok(Self::zero(&self.ring));
        }
        let (ext, t) = self.ring.with_fresh_variable("t")?;
        let t = Polynomial::variable(&ext, t);
        let one_minus_t = Polynomial::one(&ext) - &t;
        let mut gens = Vec::with_capacity(self.len() + other.len());
        for g in &self.generators {
            gens.push(&t * &g.map_into(&ext)?);
        }
        for g in &other.generators {
            gens.push(&one_minus_t * &g.map_into(&ext)?);
        }
        self.eliminated(gens, 1)
    }

    /// Moves all generators into `target` (see [`Polynomial::map_into`]).
    pub fn map_into(&self, target: &PolynomialRing) -> Result<Self> {
        let gens = self.generators.iter().map(|g| g.map_into(target)).collect::<Result<Vec<_>>>()?;
        Self::new(target, gens)
    }

    /// Generators sorted into canonical order: ascending degree, then
    /// descending leading monomial.
    pub fn sorted(&self) -> Self {
        let mut gens = self.generators.clone();
        gens.sort_by(|a, b| canonical_cmp(&self.ring, a, b));
        Self { ring: self.ring.clone(), generators: gens, basis: self.basis.clone() }
    }
}

fn canonical_cmp<C: Field>(ring: &PolynomialRing, a: &Polynomial<C>, b: &Polynomial<C>) -> Ordering {
    a.total_degree().cmp(&b.total_degree()).then_with(|| {
        for (s, t) in a.terms().iter().zip(b.terms()) {
            match ring.compare(&t.monomial, &s.monomial) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        b.len().cmp(&a.len())
    })
}

impl<C: Field> fmt::Display for Ideal<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl<C: Field> fmt::Debug for Ideal<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}
