//! Running a problem and assembling the output document.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use nashjet::nash::{atom_name, main_component_ideal, nash_ideal, verify_presentation};
use nashjet::{NashOptions, QIdeal, QIdealExpr, QNashJetResult, QPolyMatrix};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;
use crate::problem::Problem;

#[derive(Clone, Copy, Debug)]
pub struct RunOptions {
    pub interreduce: bool,
    /// Replaces the document's jet orders with this single order.
    pub jet_order: Option<u32>,
    /// Adds wall-clock timings; off by default so output is reproducible.
    pub timings: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { interreduce: true, jet_order: None, timings: false }
    }
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ResultDocument {
    pub variables: Vec<String>,
    pub relations: Vec<String>,
    pub rank: usize,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    pub results: Vec<JetOrderResult>,
    /// `None` when no expected presentation applied.
    pub verified: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct JetOrderResult {
    pub jet_order: u32,
    /// Rows of `M_n`.
    pub jet_matrix: Vec<Vec<String>>,
    /// Row and column block sizes of `M_n`.
    pub block_shape: [usize; 2],
    /// Generators of the ideal of maximal minors, in canonical order.
    pub generators: Vec<String>,
    pub jet_relations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub main_component: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Verdict {
    pub expected: String,
    pub equal: bool,
    pub computed_in_expected: bool,
    pub expected_in_computed: bool,
    /// Generator of the computed ideal outside the expected one.
    pub computed_witness: Option<String>,
    /// Generator of the expected ideal outside the computed one.
    pub expected_witness: Option<String>,
}

impl Verdict {
    /// One line per failing direction, empty when equal.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(w) = &self.computed_witness {
            out.push(format!("computed ⊄ expected: witness {w}"));
        }
        if let Some(w) = &self.expected_witness {
            out.push(format!("expected ⊄ computed: witness {w}"));
        }
        out
    }
}

fn rendered(ideal: &QIdeal) -> Vec<String> {
    ideal.sorted().generators().iter().map(ToString::to_string).collect()
}

fn matrix_rows(m: &QPolyMatrix) -> Vec<Vec<String>> {
    m.row_vecs().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

/// Computes every requested jet order, plus any order referenced by an
/// expected presentation, then verifies.
pub fn run(problem: &Problem, opts: RunOptions) -> Result<ResultDocument, CliError> {
    let spec = &problem.spec;
    let requested: Vec<u32> = match opts.jet_order {
        Some(n) => vec![n],
        None => spec.jet_orders.clone(),
    };
    let mut expressions = HashMap::new();
    let mut needed: BTreeSet<u32> = requested.iter().copied().collect();
    for &n in &requested {
        if let Some(text) = spec.expected.get(&n) {
            let ring = nashjet::PolynomialRing::new(spec.variables.iter().cloned(), n, Default::default())?;
            let expr = QIdealExpr::parse(text, &ring)?;
            for atom in expr.atoms() {
                let k = atom
                    .strip_prefix('a')
                    .and_then(|k| k.parse::<u32>().ok())
                    .ok_or_else(|| CliError::Input(format!("expected[{n}]: unknown ideal `{atom}`")))?;
                if k > n {
                    return Err(CliError::Input(format!("expected[{n}]: `{atom}` has a higher jet order")));
                }
                needed.insert(k);
            }
            expressions.insert(n, expr);
        }
    }

    let nash_opts = NashOptions { interreduce: opts.interreduce, ..Default::default() };
    let needed: Vec<u32> = needed.into_iter().collect();
    let computed: Vec<(QNashJetResult, f64)> = needed
        .par_iter()
        .map(|&n| {
            let start = Instant::now();
            nash_ideal(&problem.presentation, n, nash_opts).map(|r| (r, start.elapsed().as_secs_f64() * 1e3))
        })
        .collect::<Result<_, _>>()?;
    let env: HashMap<String, QIdeal> = computed.iter().map(|(r, _)| (atom_name(r.jet_order), r.ideal.clone())).collect();
    let by_order: HashMap<u32, &(QNashJetResult, f64)> = computed.iter().map(|c| (c.0.jet_order, c)).collect();

    let results = requested
        .par_iter()
        .map(|&n| {
            let (r, ms) = by_order[&n];
            let verification = match expressions.get(&n) {
                Some(expr) => {
                    let report = verify_presentation(&r.ideal, expr, &env)?;
                    Some(Verdict {
                        expected: spec.expected[&n].clone(),
                        equal: report.equal,
                        computed_in_expected: report.computed_in_expected,
                        expected_in_computed: report.expected_in_computed,
                        computed_witness: report.computed_witness.map(|w| w.to_string()),
                        expected_witness: report.expected_witness.map(|w| w.to_string()),
                    })
                }
                None => None,
            };
            let main_component = match &problem.witness {
                Some(w) => Some(rendered(&main_component_ideal(&r.jet_relations, w, &r.context)?)),
                None => None,
            };
            Ok(JetOrderResult {
                jet_order: n,
                jet_matrix: matrix_rows(&r.jet_matrix),
                block_shape: [problem.presentation.matrix().rows(), problem.presentation.matrix().cols()],
                generators: rendered(&r.ideal),
                jet_relations: rendered(&r.jet_relations),
                main_component,
                verification,
                timing_ms: opts.timings.then_some(*ms),
            })
        })
        .collect::<Result<Vec<_>, nashjet::Error>>()?;

    let verdicts: Vec<bool> = results.iter().filter_map(|r| r.verification.as_ref().map(|v| v.equal)).collect();
    Ok(ResultDocument {
        variables: spec.variables.clone(),
        relations: problem.presentation.relations().iter().map(ToString::to_string).collect(),
        rank: problem.presentation.rank(),
        warnings: problem.presentation.warnings().to_vec(),
        results,
        verified: (!verdicts.is_empty()).then(|| verdicts.iter().all(|&v| v)),
    })
}
