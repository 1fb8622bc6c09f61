//! Dense matrices over a polynomial ring: the jet block matrix, exact
//! determinants and ideals of minors.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{Ideal, QuotientRing};
use crate::jets::JetContext;
use crate::poly::{Polynomial, PolynomialRing};

/// Largest minor the engine will evaluate.
pub const MAX_MINOR_SIZE: usize = 16;

/// Up to this size determinants use memoized Laplace expansion; above it,
/// fraction-free elimination.
pub const LAPLACE_LIMIT: usize = 12;

/// Row-major `rows x cols` matrix of polynomials over one ring.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix<C> {
    ring: PolynomialRing,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial<C>>,
}

impl<C: Field> PolyMatrix<C> {
    pub fn new(ring: &PolynomialRing, rows: usize, cols: usize, entries: Vec<Polynomial<C>>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        if entries.iter().any(|e| e.ring() != ring) {
            return Err(Error::RingMismatch);
        }
        Ok(Self { ring: ring.clone(), rows, cols, entries })
    }

    /// Builds from a list of rows; the list must be non-empty and
    /// rectangular.
    pub fn from_rows(ring: &PolynomialRing, rows: Vec<Vec<Polynomial<C>>>) -> Result<Self> {
        let Some(cols) = rows.first().map(Vec::len) else {
            return Err(Error::EmptyMatrix);
        };
        if cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
            return Err(Error::Shape(format!("row {i} has {} entries, expected {cols}", r.len())));
        }
        let n = rows.len();
        Self::new(ring, n, cols, rows.into_iter().flatten().collect())
    }

    /// Parses every entry with the polynomial grammar.
    pub fn parse<S: AsRef<str>>(ring: &PolynomialRing, rows: &[Vec<S>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| Polynomial::parse(s.as_ref(), ring)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(ring, parsed)
    }

    pub fn zeros(ring: &PolynomialRing, rows: usize, cols: usize) -> Self {
        Self { ring: ring.clone(), rows, cols, entries: vec![Polynomial::zero(ring); rows * cols] }
    }

    pub fn identity(ring: &PolynomialRing, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = Polynomial::one(ring);
        }
        m
    }

    pub fn from_integers(ring: &PolynomialRing, rows: &[Vec<i64>]) -> Result<Self> {
        let rows = rows.iter().map(|r| r.iter().map(|&v| Polynomial::from_int(ring, v)).collect()).collect();
        Self::from_rows(ring, rows)
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial<C> {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial<C>] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[Polynomial<C>] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Polynomial<C>>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let entries = rows.iter().flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone())).collect();
        Self { ring: self.ring.clone(), rows: rows.len(), cols: cols.len(), entries }
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols).flat_map(|j| (0..self.rows).map(move |i| self.get(i, j).clone())).collect();
        Self { ring: self.ring.clone(), rows: self.cols, cols: self.rows, entries }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    acc = acc + self.get(i, k) * other.get(k, j);
                }
                entries.push(acc);
            }
        }
        Ok(Self { ring: self.ring.clone(), rows: self.rows, cols: other.cols, entries })
    }

    /// Appends one column.
    pub fn with_column(&self, column: &[Polynomial<C>]) -> Result<Self> {
        if column.len() != self.rows {
            return Err(Error::Shape(format!("column of length {} for {} rows", column.len(), self.rows)));
        }
        if column.iter().any(|c| c.ring() != &self.ring) {
            return Err(Error::RingMismatch);
        }
        let mut rows = self.row_vecs();
        for (r, c) in rows.iter_mut().zip(column) {
            r.push(c.clone());
        }
        Ok(Self { ring: self.ring.clone(), rows: self.rows, cols: self.cols + 1, entries: rows.concat() })
    }

    pub fn map_into(&self, target: &PolynomialRing) -> Result<Self> {
        let entries = self.entries.iter().map(|e| e.map_into(target)).collect::<Result<Vec<_>>>()?;
        Ok(Self { ring: target.clone(), rows: self.rows, cols: self.cols, entries })
    }

    /// The `(n+1)r x (n+1)s` block lower-triangular matrix whose block
    /// `(i, j)` is `D_{i-j}(M)` for `i >= j` and zero above the diagonal.
    pub fn jet_matrix(&self, ctx: &JetContext) -> Result<Self> {
        if &self.ring != ctx.base_ring() {
            return Err(Error::RingMismatch);
        }
        let n = ctx.order() as usize + 1;
        let (r, s) = (self.rows, self.cols);
        let derivatives =
            self.entries.par_iter().map(|e| ctx.hs_derivatives(e)).collect::<Result<Vec<Vec<Polynomial<C>>>>>()?;
        let mut out = Self::zeros(ctx.jet_ring(), n * r, n * s);
        for bi in 0..n {
            for bj in 0..=bi {
                for a in 0..r {
                    for b in 0..s {
                        out.entries[(bi * r + a) * out.cols + bj * s + b] = derivatives[a * s + b][bi - bj].clone();
                    }
                }
            }
        }
        Ok(out)
    }

    fn check_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows > MAX_MINOR_SIZE {
            return Err(Error::ResourceLimit(format!(
                "determinant of size {} exceeds the cap of {MAX_MINOR_SIZE}",
                self.rows
            )));
        }
        Ok(())
    }

    /// Exact determinant.
    pub fn determinant(&self) -> Result<Polynomial<C>> {
        self.check_square()?;
        if self.rows <= LAPLACE_LIMIT {
            Ok(self.laplace())
        } else {
            Ok(self.bareiss())
        }
    }

    /// Laplace expansion along the rows, memoized over column subsets.
    pub fn determinant_laplace(&self) -> Result<Polynomial<C>> {
        self.check_square()?;
        Ok(self.laplace())
    }

    /// Fraction-free (Bareiss) elimination with exact polynomial division.
    pub fn determinant_bareiss(&self) -> Result<Polynomial<C>> {
        self.check_square()?;
        Ok(self.bareiss())
    }

    fn laplace(&self) -> Polynomial<C> {
        let n = self.rows;
        // layer[mask] = minor on the first popcount(mask) rows and the
        // columns in mask
        let mut layer: HashMap<u32, Polynomial<C>> = HashMap::new();
        layer.insert(0, Polynomial::one(&self.ring));
        for row in 0..n {
            let mut next: HashMap<u32, Polynomial<C>> = HashMap::new();
            for (&mask, minor) in &layer {
                for j in (0..n).filter(|&j| mask & (1 << j) == 0) {
                    let a = self.get(row, j);
                    if a.is_zero() {
                        continue;
                    }
                    let pos = (mask & ((1u32 << j) - 1)).count_ones() as usize;
                    let term = a * minor;
                    let entry = next.entry(mask | (1 << j)).or_insert_with(|| Polynomial::zero(&self.ring));
                    *entry = if (row + pos).is_multiple_of(2) { &*entry + &term } else { &*entry - &term };
                }
            }
            next.retain(|_, v| !v.is_zero());
            layer = next;
        }
        layer.remove(&((1u64 << n) as u32).wrapping_sub(1)).unwrap_or_else(|| Polynomial::zero(&self.ring))
    }

    fn bareiss(&self) -> Polynomial<C> {
        let n = self.rows;
        if n == 0 {
            return Polynomial::one(&self.ring);
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = Polynomial::one(&self.ring);
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !m.get(i, k).is_zero()) {
                    Some(i) => {
                        m.swap_rows(k, i);
                        negate = !negate;
                    }
                    None => return Polynomial::zero(&self.ring),
                }
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(m.get(i, j) * &pivot) - &(m.get(i, k) * m.get(k, j));
                    let q = num.exact_div(&prev).expect("Bareiss division is exact");
                    m.entries[i * n + j] = q;
                }
            }
            prev = pivot;
        }
        let det = m.get(n - 1, n - 1).clone();
        if negate {
            -det
        } else {
            det
        }
    }

    fn check_minor_size(&self, k: usize) -> Result<()> {
        if k == 0 || k > self.rows.min(self.cols) {
            return Err(Error::MinorSizeOutOfRange { k, rows: self.rows, cols: self.cols });
        }
        if k > MAX_MINOR_SIZE {
            return Err(Error::ResourceLimit(format!("minor size {k} exceeds the cap of {MAX_MINOR_SIZE}")));
        }
        Ok(())
    }

    /// All `k x k` minors. Column subsets are enumerated lexicographically in
    /// the outer loop and row subsets lexicographically in the inner loop;
    /// determinants are evaluated in parallel and returned in that order.
    pub fn minors(&self, k: usize) -> Result<Vec<Polynomial<C>>> {
        self.check_minor_size(k)?;
        let index: Vec<(Vec<usize>, Vec<usize>)> = (0..self.cols)
            .combinations(k)
            .flat_map(|cols| (0..self.rows).combinations(k).map(move |rows| (rows, cols.clone())))
            .collect();
        index.par_iter().map(|(rows, cols)| self.submatrix(rows, cols).determinant()).collect()
    }

    /// Ideal of `k x k` minors with zero and syntactically repeated minors
    /// removed, in enumeration order.
    pub fn minors_ideal_raw(&self, k: usize) -> Result<Ideal<C>> {
        let mut gens: Vec<Polynomial<C>> = Vec::new();
        for m in self.minors(k)? {
            if !m.is_zero() && !gens.contains(&m) {
                gens.push(m);
            }
        }
        Ideal::new(&self.ring, gens)
    }

    /// Ideal of `k x k` minors, interreduced.
    pub fn minors_ideal(&self, k: usize) -> Result<Ideal<C>> {
        self.minors_ideal_raw(k)?.interreduce()
    }

    /// True iff some `r x r` minor is a nonzero polynomial.
    pub fn generic_rank_at_least(&self, r: usize) -> bool {
        self.rank_witness(r, |m| Ok(!m.is_zero())).unwrap_or(false)
    }

    /// Like [`generic_rank_at_least`](Self::generic_rank_at_least), with
    /// minors taken modulo the relations of `quotient`.
    pub fn generic_rank_at_least_mod(&self, r: usize, quotient: &QuotientRing<C>) -> Result<bool> {
        if quotient.ambient() != &self.ring {
            return Err(Error::RingMismatch);
        }
        self.rank_witness(r, |m| Ok(!quotient.is_zero(m)?))
    }

    fn rank_witness(&self, r: usize, nonzero: impl Fn(&Polynomial<C>) -> Result<bool> + Sync) -> Result<bool> {
        if r == 0 {
            return Ok(true);
        }
        if self.check_minor_size(r).is_err() {
            return Ok(false);
        }
        for cols in (0..self.cols).combinations(r) {
            for rows in (0..self.rows).combinations(r) {
                if nonzero(&self.submatrix(&rows, &cols).determinant()?)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

impl<C: Field> fmt::Display for PolyMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let widths: Vec<usize> =
            (0..self.cols).map(|j| (0..self.rows).map(|i| cells[i * self.cols + j].len()).max().unwrap_or(0)).collect();
        for i in 0..self.rows {
            f.write_str("[ ")?;
            for j in 0..self.cols {
                write!(f, "{:<w$}", cells[i * self.cols + j], w = widths[j])?;
                f.write_str(if j + 1 < self.cols { "  " } else { " ]" })?;
            }
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl<C: Field> fmt::Debug for PolyMatrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyMatrix {}x{}\n{self}", self.rows, self.cols)
    }
}
