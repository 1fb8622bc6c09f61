//! Input documents.

use std::collections::BTreeMap;

use nashjet::nash::hypersurface_nash_presentation;
use nashjet::{PolynomialRing, QIdeal, QIdealExpr, QModulePresentation, QPolyMatrix, QPolynomial, QQuotientRing};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// A problem as written in the input JSON.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ProblemSpec {
    /// Base variable names, largest first.
    pub variables: Vec<String>,
    /// Defining equations of the ambient space; empty for affine space.
    #[serde(default)]
    pub relations: Vec<String>,
    /// Rows of the presentation matrix.
    #[serde(default)]
    pub matrix: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    /// Shorthand for the Nash blow-up of `f = 0`: the Jacobian row over the
    /// quotient by `f`, rank one. Excludes `relations`, `matrix` and `rank`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hypersurface: Option<String>,
    pub jet_orders: Vec<u32>,
    /// Expected presentation of the ideal at each jet order.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub expected: BTreeMap<u32, String>,
    /// Polynomial not vanishing identically on the smooth locus; when set the
    /// main component of each jet scheme is reported.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub main_component_witness: Option<String>,
}

/// A validated problem.
#[derive(Clone, Debug)]
pub struct Problem {
    pub spec: ProblemSpec,
    pub ring: PolynomialRing,
    pub presentation: QModulePresentation,
    pub witness: Option<QPolynomial>,
}

impl ProblemSpec {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid problem document: {e}")))
    }

    /// Checks the document and builds the presentation.
    pub fn validate(self) -> Result<Problem, CliError> {
        let ring = PolynomialRing::base(self.variables.iter().cloned()).map_err(input)?;
        let presentation = match &self.hypersurface {
            Some(f) => {
                if !self.relations.is_empty() || !self.matrix.is_empty() || self.rank.is_some() {
                    return Err(CliError::Input("hypersurface excludes relations, matrix and rank".into()));
                }
                let f = QPolynomial::parse(f, &ring).map_err(|e| located("hypersurface", e))?;
                hypersurface_nash_presentation(&f).map_err(|e| located("hypersurface", e))?
            }
            None => self.general_presentation(&ring)?,
        };
        if self.jet_orders.is_empty() {
            return Err(CliError::Input("jetOrders is empty".into()));
        }
        for (n, text) in &self.expected {
            let jet_ring = PolynomialRing::new(self.variables.iter().cloned(), *n, Default::default()).map_err(input)?;
            QIdealExpr::parse(text, &jet_ring).map_err(|e| located(&format!("expected[{n}]"), e))?;
        }
        let witness = self
            .main_component_witness
            .as_deref()
            .map(|w| QPolynomial::parse(w, &ring).map_err(|e| located("mainComponentWitness", e)))
            .transpose()?;
        Ok(Problem { spec: self, ring, presentation, witness })
    }

    fn general_presentation(&self, ring: &PolynomialRing) -> Result<QModulePresentation, CliError> {
        let rank = self.rank.ok_or_else(|| CliError::Input("missing field `rank`".into()))?;
        let mut rows = Vec::with_capacity(self.matrix.len());
        for (i, row) in self.matrix.iter().enumerate() {
            let mut entries = Vec::with_capacity(row.len());
            for (j, text) in row.iter().enumerate() {
                entries.push(QPolynomial::parse(text, ring).map_err(|e| located(&format!("matrix[{i}][{j}]"), e))?);
            }
            rows.push(entries);
        }
        let matrix = QPolyMatrix::from_rows(ring, rows).map_err(input)?;
        let presentation = if self.relations.is_empty() {
            QModulePresentation::new(matrix, rank)
        } else {
            let mut relations = Vec::with_capacity(self.relations.len());
            for (i, text) in self.relations.iter().enumerate() {
                relations.push(QPolynomial::parse(text, ring).map_err(|e| located(&format!("relations[{i}]"), e))?);
            }
            let ideal = QIdeal::new(ring, relations).map_err(input)?;
            QModulePresentation::over_quotient(QQuotientRing::new(ideal).map_err(input)?, matrix, rank)
        };
        presentation.map_err(input)
    }
}

fn input(e: nashjet::Error) -> CliError {
    CliError::Input(e.to_string())
}

fn located(field: &str, e: nashjet::Error) -> CliError {
    CliError::Input(format!("{field}: {e}"))
}
