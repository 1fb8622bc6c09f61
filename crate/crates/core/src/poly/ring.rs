use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::monomial::Monomial;
use crate::error::{Error, Result};

/// A variable of a jet ring: a base symbol together with its jet index.
///
/// Jet index 0 renders as the bare base name, jet index `i >= 1` as
/// `name_i`, so `JetVariable { base: x, jet: 1 }` is `x_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JetVariable {
    pub base: usize,
    pub jet: u32,
}

impl JetVariable {
    pub fn new(base: usize, jet: u32) -> Self {
        Self { base, jet }
    }
}

/// Term order on monomials.
///
/// Variables are compared by their position in the ring: position 0 is the
/// largest variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    Lex,
    /// Degrevlex on the first `split` variables, ties broken by degrevlex on
    /// the remaining ones. Eliminates the first block.
    BlockElimination { split: usize },
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::DegRevLex => degrevlex(a.exponents(), a.degree(), b.exponents(), b.degree()),
            MonomialOrder::Lex => lex(a.exponents(), b.exponents()),
            MonomialOrder::BlockElimination { split } => {
                let (a1, a2) = a.split_at_variable(split);
                let (b1, b2) = b.split_at_variable(split);
                degrevlex(a1, block_degree(a1), b1, block_degree(b1))
                    .then_with(|| degrevlex(a2, block_degree(a2), b2, block_degree(b2)))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::DegRevLex => f.write_str("degrevlex"),
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::BlockElimination { split } => write!(f, "block({split})"),
        }
    }
}

fn block_degree(exps: &[(u32, u32)]) -> u32 {
    exps.iter().map(|&(_, e)| e).sum()
}

fn degrevlex(a: &[(u32, u32)], da: u32, b: &[(u32, u32)], db: u32) -> Ordering {
    if da != db {
        return da.cmp(&db);
    }
    // Look at the last variable where the exponents differ; the smaller
    // exponent wins.
    let (mut i, mut j) = (a.len(), b.len());
    while i > 0 && j > 0 {
        let (va, ea) = a[i - 1];
        let (vb, eb) = b[j - 1];
        match va.cmp(&vb) {
            Ordering::Equal => {
                if ea != eb {
                    return eb.cmp(&ea);
                }
                i -= 1;
                j -= 1;
            }
            Ordering::Greater => return Ordering::Less,
            Ordering::Less => return Ordering::Greater,
        }
    }
    match (i > 0, j > 0) {
        (true, _) => Ordering::Less,
        (_, true) => Ordering::Greater,
        _ => Ordering::Equal,
    }
}

fn lex(a: &[(u32, u32)], b: &[(u32, u32)]) -> Ordering {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (va, ea) = a[i];
        let (vb, eb) = b[j];
        match va.cmp(&vb) {
            Ordering::Equal => {
                if ea != eb {
                    return ea.cmp(&eb);
                }
                i += 1;
                j += 1;
            }
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    match (i < a.len(), j < b.len()) {
        (true, _) => Ordering::Greater,
        (_, true) => Ordering::Less,
        _ => Ordering::Equal,
    }
}

#[derive(Debug, PartialEq, Eq)]
struct RingData {
    bases: Vec<String>,
    variables: Vec<JetVariable>,
    order: MonomialOrder,
    positions: HashMap<JetVariable, usize>,
}

/// A polynomial ring over a registry of jet variables.
///
/// Cheap to clone; two rings compare equal when they have the same base
/// symbols, the same variable arrangement and the same order.
#[derive(Clone)]
pub struct PolynomialRing(Arc<RingData>);

impl PartialEq for PolynomialRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.bases == other.0.bases
                && self.0.variables == other.0.variables
                && self.0.order == other.0.order)
    }
}

impl Eq for PolynomialRing {}

impl fmt::Debug for PolynomialRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<_> = (0..self.num_variables()).map(|p| self.variable_name(p)).collect();
        f.debug_struct("PolynomialRing")
            .field("variables", &names)
            .field("order", &self.0.order)
            .finish()
    }
}

/// Base names are ASCII letters followed by letters or digits. Underscores
/// are reserved for jet indices.
pub fn is_valid_base_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric())
}

impl PolynomialRing {
    /// Ring with `max_jet + 1` copies of each base variable, arranged base by
    /// base with ascending jet index: `x, x_1, .., x_n, y, y_1, ..`.
    pub fn new<S: Into<String>>(
        bases: impl IntoIterator<Item = S>,
        max_jet: u32,
        order: MonomialOrder,
    ) -> Result<Self> {
        let bases: Vec<String> = bases.into_iter().map(Into::into).collect();
        let variables = (0..bases.len())
            .flat_map(|b| (0..=max_jet).map(move |j| JetVariable::new(b, j)))
            .collect();
        Self::with_variables(bases, variables, order)
    }

    /// Ring over the given base symbols with jet index 0 only.
    pub fn base<S: Into<String>>(bases: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::new(bases, 0, MonomialOrder::DegRevLex)
    }

    /// Ring with an explicit variable arrangement. Position 0 is the largest
    /// variable.
    pub fn with_variables(
        bases: Vec<String>,
        variables: Vec<JetVariable>,
        order: MonomialOrder,
    ) -> Result<Self> {
        for (i, name) in bases.iter().enumerate() {
            if !is_valid_base_name(name) {
                return Err(Error::InvalidVariableName(name.clone()));
            }
            if bases[..i].contains(name) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        let mut positions = HashMap::with_capacity(variables.len());
        for (p, v) in variables.iter().enumerate() {
            if v.base >= bases.len() {
                return Err(Error::IndexOutOfRange { index: v.base, max: bases.len().saturating_sub(1) });
            }
            if positions.insert(*v, p).is_some() {
                return Err(Error::DuplicateVariable(render_variable(&bases, *v)));
            }
        }
        if let MonomialOrder::BlockElimination { split } = order {
            if split > variables.len() {
                return Err(Error::IndexOutOfRange { index: split, max: variables.len() });
            }
        }
        Ok(Self(Arc::new(RingData { bases, variables, order, positions })))
    }

    pub fn base_variables(&self) -> &[String] {
        &self.0.bases
    }

    pub fn variables(&self) -> &[JetVariable] {
        &self.0.variables
    }

    pub fn num_variables(&self) -> usize {
        self.0.variables.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    /// Largest jet index present in the ring.
    pub fn max_jet_index(&self) -> u32 {
        self.0.variables.iter().map(|v| v.jet).max().unwrap_or(0)
    }

    pub fn position(&self, v: JetVariable) -> Option<usize> {
        self.0.positions.get(&v).copied()
    }

    pub fn variable_at(&self, position: usize) -> JetVariable {
        self.0.variables[position]
    }

    pub fn variable_name(&self, position: usize) -> String {
        render_variable(&self.0.bases, self.0.variables[position])
    }

    /// Looks up `x` or `x_3` style names.
    pub fn lookup(&self, name: &str) -> Result<JetVariable> {
        let (base, jet) = match name.split_once('_') {
            Some((b, j)) => {
                let jet = j.parse::<u32>().map_err(|_| Error::UnknownVariable(name.to_string()))?;
                (b, jet)
            }
            None => (name, 0),
        };
        let b = self
            .0
            .bases
            .iter()
            .position(|s| s == base)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let v = JetVariable::new(b, jet);
        self.position(v).map(|_| v).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.order.compare(a, b)
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Self> {
        if order == self.order() {
            return Ok(self.clone());
        }
        Self::with_variables(self.0.bases.clone(), self.0.variables.clone(), order)
    }

    /// Same variables, with `first` moved to the front (in the given order)
    /// and an elimination order splitting them off.
    pub fn eliminating(&self, first: &[JetVariable]) -> Result<Self> {
        for v in first {
            if self.position(*v).is_none() {
                return Err(Error::UnknownVariable(render_variable(&self.0.bases, *v)));
            }
        }
        let mut variables: Vec<JetVariable> = first.to_vec();
        variables.dedup();
        let split = variables.len();
        variables.extend(self.0.variables.iter().filter(|v| !first.contains(v)));
        Self::with_variables(
            self.0.bases.clone(),
            variables,
            MonomialOrder::BlockElimination { split },
        )
    }

    /// Adds a fresh base symbol (jet index 0 only) in front of all existing
    /// variables. Returns the new ring and the fresh variable.
    pub fn with_fresh_variable(&self, hint: &str) -> Result<(Self, JetVariable)> {
        let mut name = hint.to_string();
        let mut k = 0;
        while self.0.bases.contains(&name) {
            k += 1;
            name = format!("{hint}{k}");
        }
        let mut bases = self.0.bases.clone();
        bases.push(name);
        let fresh = JetVariable::new(bases.len() - 1, 0);
        let mut variables = vec![fresh];
        variables.extend_from_slice(&self.0.variables);
        let ring = Self::with_variables(bases, variables, MonomialOrder::BlockElimination { split: 1 })?;
        Ok((ring, fresh))
    }

    /// Maps a position of `self` to the position of the same jet variable in
    /// `target`, matching base symbols by name.
    pub(crate) fn position_map(&self, target: &PolynomialRing) -> Result<Vec<u32>> {
        if self == target {
            return Ok((0..self.num_variables() as u32).collect());
        }
        self.0
            .variables
            .iter()
            .map(|v| {
                let name = &self.0.bases[v.base];
                let missing = || Error::UnknownVariable(render_variable(&self.0.bases, *v));
                let b = target.0.bases.iter().position(|s| s == name).ok_or_else(missing)?;
                target.position(JetVariable::new(b, v.jet)).map(|p| p as u32).ok_or_else(missing)
            })
            .collect()
    }
}

fn render_variable(bases: &[String], v: JetVariable) -> String {
    let name = &bases[v.base];
    if v.jet == 0 {
        name.clone()
    } else {
        format!("{name}_{}", v.jet)
    }
}
