//! From a module presentation `(M, r)` and a jet order `n` to the ideal
//! whose blow-up realizes the Nash transformation on `n`-jets: the ideal of
//! `(n+1)r x (n+1)r` minors of the jet block matrix `M_n`.

mod expr;

use std::fmt;

use rayon::prelude::*;

pub use expr::{atom_name, verify_presentation, IdealExpr, VerificationReport};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{Ideal, QuotientRing};
use crate::jets::JetContext;
use crate::poly::{Polynomial, PolynomialRing};
use crate::polymatrix::{PolyMatrix, MAX_MINOR_SIZE};

/// Largest jet order accepted by default.
pub const MAX_JET_ORDER: u32 = 8;

/// A torsion-free module `F = im M ⊂ R^r` over `R = k[x..]` or over a
/// quotient `k[x..]/I`.
#[derive(Clone)]
pub struct ModulePresentation<C> {
    quotient: Option<QuotientRing<C>>,
    matrix: PolyMatrix<C>,
    rank: usize,
    warnings: Vec<String>,
}

impl<C: Field> ModulePresentation<C> {
    /// Presentation over the polynomial ring of `matrix`.
    pub fn new(matrix: PolyMatrix<C>, rank: usize) -> Result<Self> {
        Self::build(None, matrix, rank)
    }

    /// Presentation over `quotient`; entries are representatives in the
    /// ambient ring.
    pub fn over_quotient(quotient: QuotientRing<C>, matrix: PolyMatrix<C>, rank: usize) -> Result<Self> {
        if quotient.ambient() != matrix.ring() {
            return Err(Error::RingMismatch);
        }
        Self::build(Some(quotient), matrix, rank)
    }

    fn build(quotient: Option<QuotientRing<C>>, matrix: PolyMatrix<C>, rank: usize) -> Result<Self> {
        if matrix.rows() == 0 || matrix.cols() == 0 {
            return Err(Error::EmptyMatrix);
        }
        if rank == 0 || rank > matrix.rows() || rank > matrix.cols() {
            return Err(Error::RankNotAttained(rank));
        }
        if rank > MAX_MINOR_SIZE {
            return Err(Error::ResourceLimit(format!("rank {rank} exceeds the minor cap of {MAX_MINOR_SIZE}")));
        }
        let attained = match &quotient {
            Some(q) => matrix.generic_rank_at_least_mod(rank, q)?,
            None => matrix.generic_rank_at_least(rank),
        };
        if !attained {
            return Err(Error::RankNotAttained(rank));
        }
        Ok(Self { quotient, matrix, rank, warnings: Vec::new() })
    }

    pub fn ring(&self) -> &PolynomialRing {
        self.matrix.ring()
    }

    pub fn quotient(&self) -> Option<&QuotientRing<C>> {
        self.quotient.as_ref()
    }

    /// Generators of the ambient relations (empty over a polynomial ring).
    pub fn relations(&self) -> &[Polynomial<C>] {
        self.quotient.as_ref().map(|q| q.relations().generators()).unwrap_or(&[])
    }

    pub fn matrix(&self) -> &PolyMatrix<C> {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Notes about unchecked preconditions that look violated.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }
}

/// Output of [`nash_ideal`] for one jet order.
#[derive(Clone)]
pub struct NashJetResult<C> {
    pub jet_order: u32,
    pub context: JetContext,
    /// `M_n`, of shape `(n+1)r x (n+1)s`.
    pub jet_matrix: PolyMatrix<C>,
    /// The ideal of maximal minors of `M_n`, in the jet ring of the ambient
    /// affine space.
    pub ideal: Ideal<C>,
    /// `D_i` of the ambient relations; zero over a polynomial ring.
    pub jet_relations: Ideal<C>,
}

#[derive(Clone, Copy, Debug)]
pub struct NashOptions {
    pub interreduce: bool,
    pub max_jet_order: u32,
}

impl Default for NashOptions {
    fn default() -> Self {
        Self { interreduce: true, max_jet_order: MAX_JET_ORDER }
    }
}

impl<C: Field> fmt::Debug for ModulePresentation<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ModulePresentation")
            .field("quotient", &self.quotient)
            .field("matrix", &self.matrix)
            .field("rank", &self.rank)
            .field("warnings", &self.warnings)
            .finish()
    }
}

impl<C: Field> fmt::Debug for NashJetResult<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NashJetResult")
            .field("jet_order", &self.jet_order)
            .field("jet_matrix", &self.jet_matrix)
            .field("ideal", &self.ideal)
            .field("jet_relations", &self.jet_relations)
            .finish()
    }
}

/// Computes `M_n` and the ideal of its `(n+1)r x (n+1)r` minors.
pub fn nash_ideal<C: Field>(p: &ModulePresentation<C>, n: u32, opts: NashOptions) -> Result<NashJetResult<C>> {
    if n > opts.max_jet_order {
        return Err(Error::ResourceLimit(format!("jet order {n} exceeds the cap of {}", opts.max_jet_order)));
    }
    let ctx = JetContext::new(p.ring(), n)?;
    let jet_matrix = p.matrix.jet_matrix(&ctx)?;
    let k = (n as usize + 1) * p.rank;
    let ideal = if opts.interreduce { jet_matrix.minors_ideal(k)? } else { jet_matrix.minors_ideal_raw(k)? };
    let jet_relations = ctx.jet_ideal(p.relations())?;
    Ok(NashJetResult { jet_order: n, context: ctx, jet_matrix, ideal, jet_relations })
}

/// [`nash_ideal`] for several jet orders, processed in parallel; results come
/// back in the order requested.
pub fn nash_ideals<C: Field>(
    p: &ModulePresentation<C>,
    orders: &[u32],
    opts: NashOptions,
) -> Vec<Result<NashJetResult<C>>> {
    orders.par_iter().map(|&n| nash_ideal(p, n, opts)).collect()
}

/// The blow-up of an ideal is the Nash transformation of the ideal viewed as
/// a rank-one module: the `1 x s` row of generators.
pub fn ideal_blowup_presentation<C: Field>(generators: &[Polynomial<C>]) -> Result<ModulePresentation<C>> {
    let Some(first) = generators.first() else {
        return Err(Error::EmptyGenerators);
    };
    let matrix = PolyMatrix::from_rows(first.ring(), vec![generators.to_vec()])?;
    ModulePresentation::new(matrix, 1)
}

/// Nash blow-up of the hypersurface `f = 0` via its Jacobian ideal: the row
/// of partial derivatives over `k[x..]/(f)`, rank one. A repeated factor in
/// `f` is reported as a warning rather than rejected.
pub fn hypersurface_nash_presentation<C: Field>(f: &Polynomial<C>) -> Result<ModulePresentation<C>> {
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    let ring = f.ring();
    let partials: Vec<Polynomial<C>> = ring.variables().iter().map(|&v| f.partial_derivative(v)).collect::<Result<_>>()?;
    let quotient = QuotientRing::new(Ideal::new(ring, [f.clone()])?)?;
    let matrix = PolyMatrix::from_rows(ring, vec![partials.clone()])?;
    let mut p = ModulePresentation::over_quotient(quotient, matrix, 1)?;
    let repeated = gcd_all(f, &partials)?;
    if !repeated.is_constant() {
        p.warnings.push(format!("hypersurface is not reduced: repeated factor {repeated}"));
    }
    Ok(p)
}

/// Greatest common divisor of `f` and `others`, via `gcd(a, b) = ab /
/// lcm(a, b)` and `(lcm(a, b)) = (a) ∩ (b)`.
fn gcd_all<C: Field>(f: &Polynomial<C>, others: &[Polynomial<C>]) -> Result<Polynomial<C>> {
    let ring = f.ring();
    let mut g = f.monic();
    for h in others.iter().filter(|h| !h.is_zero()) {
        if g.is_constant() {
            break;
        }
        let lcm = Ideal::new(ring, [g.clone()])?.intersect(&Ideal::new(ring, [h.clone()])?)?;
        let lcm = lcm.groebner_basis()?.into_iter().next().ok_or(Error::EmptyGenerators)?;
        g = (&g * h).exact_div(&lcm).expect("lcm divides the product").monic();
    }
    Ok(g)
}

/// Ideal of the main component of the jet scheme: the saturation of the jet
/// relations by `D_0` of a polynomial that does not vanish identically on
/// the smooth locus (caller-asserted).
pub fn main_component_ideal<C: Field>(
    jet_relations: &Ideal<C>,
    smooth_witness: &Polynomial<C>,
    ctx: &JetContext,
) -> Result<Ideal<C>> {
    if smooth_witness.is_zero() {
        return Err(Error::ZeroWitness);
    }
    if jet_relations.ring() != ctx.jet_ring() {
        return Err(Error::RingMismatch);
    }
    let w = ctx.rename(smooth_witness)?;
    jet_relations.saturate(&w)
}

#[cfg(test)]
mod tests;
