use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::monomial::Monomial;
use super::ring::{JetVariable, PolynomialRing};
use crate::error::{Error, Result};
use crate::field::Field;

/// A single term `coeff * monomial`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<C> {
    pub coeff: C,
    pub monomial: Monomial,
}

impl<C> Term<C> {
    pub fn new(coeff: C, monomial: Monomial) -> Self {
        Self { coeff, monomial }
    }
}

/// Sparse polynomial with terms sorted strictly descending under the ring's
/// order. No zero coefficients, no repeated monomials; zero has no terms.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<C> {
    ring: PolynomialRing,
    terms: Vec<Term<C>>,
}

impl<C: Field> Polynomial<C> {
    pub fn zero(ring: &PolynomialRing) -> Self {
        Self { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &PolynomialRing) -> Self {
        Self::constant(ring, C::one())
    }

    pub fn constant(ring: &PolynomialRing, c: C) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Self { ring: ring.clone(), terms: vec![Term::new(c, Monomial::one())] }
    }

    pub fn from_int(ring: &PolynomialRing, n: i64) -> Self {
        Self::constant(ring, C::from_int(n))
    }

    /// The polynomial `v`. Panics if `v` is not a variable of `ring`.
    pub fn variable(ring: &PolynomialRing, v: JetVariable) -> Self {
        let p = ring.position(v).expect("variable not in ring");
        Self::monomial(ring, C::one(), Monomial::variable(p, 1))
    }

    /// Looks a variable up by name (`x`, `y_2`).
    pub fn var(ring: &PolynomialRing, name: &str) -> Result<Self> {
        Ok(Self::variable(ring, ring.lookup(name)?))
    }

    pub fn monomial(ring: &PolynomialRing, c: C, m: Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Self { ring: ring.clone(), terms: vec![Term::new(c, m)] }
    }

    /// Sorts, merges equal monomials and drops zeros.
    pub fn from_terms(ring: &PolynomialRing, terms: impl IntoIterator<Item = Term<C>>) -> Self {
        let mut terms: Vec<Term<C>> = terms.into_iter().filter(|t| !t.coeff.is_zero()).collect();
        terms.sort_by(|a, b| ring.compare(&b.monomial, &a.monomial));
        let mut out: Vec<Term<C>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = last.coeff.clone() + t.coeff;
                    if last.coeff.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push(t),
            }
        }
        Self { ring: ring.clone(), terms: out }
    }

    /// Terms already sorted and normalized.
    pub(crate) fn from_sorted_terms(ring: &PolynomialRing, terms: Vec<Term<C>>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.compare(&w[0].monomial, &w[1].monomial) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Self { ring: ring.clone(), terms }
    }

    /// Re-runs normalization on the term list; the identity on every value
    /// produced by this module.
    pub fn normalized(&self) -> Self {
        Self::from_terms(&self.ring, self.terms.iter().cloned())
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<C>> {
        self.terms
    }

    /// Number of terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one() && self.terms[0].coeff.is_one()
    }

    /// True for zero and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.monomial.is_one())
    }

    pub fn constant_term(&self) -> C {
        match self.terms.last() {
            Some(t) if t.monomial.is_one() => t.coeff.clone(),
            _ => C::zero(),
        }
    }

    pub fn leading_term(&self) -> Option<&Term<C>> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&C> {
        self.terms.first().map(|t| &t.coeff)
    }

    /// Total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|t| t.monomial.degree());
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    /// Positions of all variables that occur.
    pub fn support(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .terms
            .iter()
            .flat_map(|t| t.monomial.exponents().iter().map(|&(v, _)| v as usize))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, |c| c.clone()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.merge(other, |c| -c.clone()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    /// `self + sign(other)`, merging two sorted term lists.
    fn merge(&self, other: &Self, sign: impl Fn(&C) -> C) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match self.ring.compare(&a[i].monomial, &b[j].monomial) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term::new(sign(&b[j].coeff), b[j].monomial.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].coeff.clone() + sign(&b[j].coeff);
                    if !c.is_zero() {
                        out.push(Term::new(c, a[i].monomial.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|t| Term::new(sign(&t.coeff), t.monomial.clone())));
        Self { ring: self.ring.clone(), terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        // Each row `t * large` is already sorted; fold them in pairwise.
        let mut rows: Vec<Self> = small.terms.iter().map(|t| large.mul_term(&t.coeff, &t.monomial)).collect();
        while rows.len() > 1 {
            let mut next = Vec::with_capacity(rows.len().div_ceil(2));
            let mut it = rows.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(a.merge(&b, |c| c.clone())),
                    None => next.push(a),
                }
            }
            rows = next;
        }
        rows.pop().unwrap()
    }

    /// `c * m * self`. Term order is preserved since the order is
    /// multiplicative.
    pub fn mul_term(&self, c: &C, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(t.coeff.clone() * c.clone(), t.monomial.mul(m)))
            .collect();
        Self { ring: self.ring.clone(), terms }
    }

    /// `self - c * m * g` without materializing the product.
    pub fn sub_mul_term(&self, c: &C, m: &Monomial, g: &Self) -> Self {
        let (a, b) = (&self.terms, &g.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut pending: Option<Monomial> = None;
        while i < a.len() && j < b.len() {
            let bm = pending.take().unwrap_or_else(|| b[j].monomial.mul(m));
            match self.ring.compare(&a[i].monomial, &bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                    pending = Some(bm);
                }
                Ordering::Less => {
                    out.push(Term::new(-(b[j].coeff.clone() * c.clone()), bm));
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = a[i].coeff.clone() - b[j].coeff.clone() * c.clone();
                    if !coeff.is_zero() {
                        out.push(Term::new(coeff, bm));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|t| Term::new(-(t.coeff.clone() * c.clone()), t.monomial.mul(m))));
        Self { ring: self.ring.clone(), terms: out }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(c, &Monomial::one())
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inverse()),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.product(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial_derivative(&self, v: JetVariable) -> Result<Self> {
        let p = self.ring.position(v).ok_or_else(|| Error::UnknownVariable(format!("{v:?}")))?;
        Ok(self.derivative_at(p))
    }

    pub(crate) fn derivative_at(&self, position: usize) -> Self {
        let terms = self.terms.iter().filter_map(|t| {
            let (e, rest) = t.monomial.take_variable(position);
            (e > 0).then(|| {
                let m = rest.mul(&Monomial::variable(position, e - 1));
                Term::new(t.coeff.clone() * C::from_int(e as i64), m)
            })
        });
        Self::from_terms(&self.ring, terms)
    }

    /// Exact quotient `self / g`, or `None` if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        let lead = g.leading_term()?;
        let lc_inv = lead.coeff.inverse();
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some(t) = rem.leading_term() {
            let m = lead.monomial.divide_into(&t.monomial)?;
            let c = t.coeff.clone() * lc_inv.clone();
            rem = rem.sub_mul_term(&c, &m, g);
            quotient.push(Term::new(c, m));
        }
        Some(Self::from_terms(&self.ring, quotient))
    }

    /// Moves the polynomial into `target`, matching variables by base name
    /// and jet index. Fails if some occurring variable has no counterpart.
    pub fn map_into(&self, target: &PolynomialRing) -> Result<Self> {
        if &self.ring == target {
            return Ok(self.clone());
        }
        let support = self.support();
        let full = self.ring.position_map(target);
        let map = match full {
            Ok(map) => map,
            Err(_) => {
                // Only the variables that actually occur need a counterpart.
                let mut map = vec![u32::MAX; self.ring.num_variables()];
                for p in support {
                    let v = self.ring.variable_at(p);
                    let name = &self.ring.base_variables()[v.base];
                    let missing = || Error::UnknownVariable(self.ring.variable_name(p));
                    let b = target.base_variables().iter().position(|s| s == name).ok_or_else(missing)?;
                    map[p] = target.position(JetVariable::new(b, v.jet)).ok_or_else(missing)? as u32;
                }
                map
            }
        };
        let terms = self.terms.iter().map(|t| Term::new(t.coeff.clone(), t.monomial.remap(&map)));
        Ok(Self::from_terms(target, terms))
    }

    /// Replaces each variable position `p` by `images[p]`, all living in
    /// `target`.
    pub fn substitute(&self, images: &[Self], target: &PolynomialRing) -> Self {
        let mut acc = Self::zero(target);
        for t in &self.terms {
            let mut term = Self::constant(target, t.coeff.clone());
            for &(v, e) in t.monomial.exponents() {
                term = term.product(&images[v as usize].pow(e));
            }
            acc = acc.merge(&term, |c| c.clone());
        }
        acc
    }

    /// Evaluates at a point given by one coefficient per variable position.
    pub fn evaluate(&self, point: &[C]) -> C {
        self.terms.iter().fold(C::zero(), |acc, t| {
            let mut value = t.coeff.clone();
            for &(v, e) in t.monomial.exponents() {
                for _ in 0..e {
                    value = value * point[v as usize].clone();
                }
            }
            acc + value
        })
    }
}

impl<C: Field> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = t.coeff.abs();
            let mut first = true;
            if !abs.is_one() || t.monomial.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            for &(v, e) in t.monomial.exponents() {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                f.write_str(&self.ring.variable_name(v as usize))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Field> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<C: Field> $tr<&Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;

            fn $method(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                self.$checked(rhs).expect("ring mismatch")
            }
        }

        impl<C: Field> $tr<Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;

            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$method(&rhs)
            }
        }

        impl<C: Field> $tr<&Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;

            fn $method(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<C: Field> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        let terms = self.terms.iter().map(|t| Term::new(-t.coeff.clone(), t.monomial.clone())).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl<C: Field> Neg for Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        -&self
    }
}
