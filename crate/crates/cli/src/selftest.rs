//! Built-in verification: the bundled golden problem plus randomized
//! property suites driven by a fixed seed.

use std::fmt::Write;

use nashjet::groebner::{buchberger, is_groebner_basis, is_reduced, normal_form, DEFAULT_MAX_PAIRS};
use nashjet::nash::nash_ideal;
use nashjet::random::{self, PolySpec};
use nashjet::{JetContext, NashOptions, PolynomialRing, QModulePresentation, QPolyMatrix, QPolynomial, QSeries};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::compute::{self, RunOptions};
use crate::error::CliError;
use crate::problem::ProblemSpec;

/// The blow-up of the origin of the plane with its presentations up to
/// jet order 3.
pub const BUNDLED_GOLDEN: &str = include_str!("../golden/example1.json");

pub const DEFAULT_SEED: u64 = 1;

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &'static str) -> Self {
        Self { name, passed: 0, total: 0, failures: Vec::new() }
    }

    fn record(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(failure());
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug)]
pub struct SelfTestReport {
    pub seed: u64,
    pub suites: Vec<SuiteResult>,
}

impl SelfTestReport {
    pub fn ok(&self) -> bool {
        self.suites.iter().all(SuiteResult::ok)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let verdict = if s.ok() { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "{verdict} {:<14} {}/{}", s.name, s.passed, s.total);
            for f in &s.failures {
                let _ = writeln!(out, "  {f}");
            }
        }
        let _ = writeln!(out, "{} (seed {})", if self.ok() { "PASS" } else { "FAIL" }, self.seed);
        out
    }
}

/// Runs all suites. `golden` replaces the bundled golden problem.
pub fn run(seed: u64, golden: Option<&str>) -> Result<SelfTestReport, CliError> {
    let spec = ProblemSpec::from_json(golden.unwrap_or(BUNDLED_GOLDEN))?;
    let suites = vec![
        golden_suite(spec)?,
        leibniz(&mut rng(seed, 1)),
        homomorphism(&mut rng(seed, 2)),
        determinants(&mut rng(seed, 3)),
        invariance(&mut rng(seed, 4)),
        groebner(&mut rng(seed, 5)),
    ];
    Ok(SelfTestReport { seed, suites })
}

fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

fn golden_suite(spec: ProblemSpec) -> Result<SuiteResult, CliError> {
    if spec.expected.is_empty() {
        return Err(CliError::Input("golden problem has no expected presentations".into()));
    }
    let doc = compute::run(&spec.validate()?, RunOptions::default())?;
    let mut suite = SuiteResult::new("golden");
    for r in &doc.results {
        if let Some(v) = &r.verification {
            suite.record(v.equal, || format!("a_{}: {}", r.jet_order, v.failures().join("; ")));
        }
    }
    Ok(suite)
}

fn xyz() -> PolynomialRing {
    PolynomialRing::base(["x", "y", "z"]).expect("valid names")
}

const SMALL: PolySpec = PolySpec { max_degree: 3, max_terms: 4, coeff_bound: 5 };

fn leibniz(rng: &mut ChaCha8Rng) -> SuiteResult {
    let ring = xyz();
    let mut suite = SuiteResult::new("leibniz");
    for _ in 0..100 {
        let f: QPolynomial = random::polynomial(rng, &ring, SMALL);
        let g: QPolynomial = random::polynomial(rng, &ring, SMALL);
        let ctx = JetContext::new(&ring, rng.gen_range(0..=4)).expect("base ring");
        let k = rng.gen_range(0..=ctx.order());
        let lhs = ctx.hs_derivative(&(&f * &g), k).expect("k <= n");
        let rhs = (0..=k).fold(QPolynomial::zero(ctx.jet_ring()), |acc, i| {
            acc + ctx.hs_derivative(&f, i).expect("i <= n") * ctx.hs_derivative(&g, k - i).expect("k - i <= n")
        });
        suite.record(lhs == rhs, || format!("D_{k}(fg) with f = {f}, g = {g}"));
    }
    suite
}

fn homomorphism(rng: &mut ChaCha8Rng) -> SuiteResult {
    let ring = xyz();
    let mut suite = SuiteResult::new("homomorphism");
    for _ in 0..100 {
        let f: QPolynomial = random::polynomial(rng, &ring, SMALL);
        let g: QPolynomial = random::polynomial(rng, &ring, SMALL);
        let ctx = JetContext::new(&ring, rng.gen_range(0..=4)).expect("base ring");
        let (lf, lg) = (ctx.jet_lift(&f).expect("base"), ctx.jet_lift(&g).expect("base"));
        let prod: QSeries = &lf * &lg;
        let sum: QSeries = &lf + &lg;
        let ok = ctx.jet_lift(&(&f * &g)).expect("base") == prod && ctx.jet_lift(&(&f + &g)).expect("base") == sum;
        suite.record(ok, || format!("lift of f = {f}, g = {g} at n = {}", ctx.order()));
    }
    suite
}

fn random_matrix(rng: &mut ChaCha8Rng, ring: &PolynomialRing, rows: usize, cols: usize, spec: PolySpec) -> QPolyMatrix {
    let rows = (0..rows).map(|_| (0..cols).map(|_| random::polynomial(rng, ring, spec)).collect()).collect();
    QPolyMatrix::from_rows(ring, rows).expect("rectangular")
}

fn determinants(rng: &mut ChaCha8Rng) -> SuiteResult {
    let ring = xyz();
    let spec = PolySpec { max_degree: 1, max_terms: 2, coeff_bound: 4 };
    let mut suite = SuiteResult::new("determinants");
    for _ in 0..50 {
        let n = rng.gen_range(1..=4);
        let a = random_matrix(rng, &ring, n, n, spec);
        let b = random_matrix(rng, &ring, n, n, spec);
        let da = a.determinant_laplace().expect("square");
        let agree = a.determinant_bareiss().expect("square") == da;
        let ab = a.checked_mul(&b).expect("square");
        let multiplicative = ab.determinant().expect("square") == &da * &b.determinant().expect("square");
        suite.record(agree && multiplicative, || format!("{n}x{n} determinant:\n{a}"));
    }
    suite
}

fn invariance(rng: &mut ChaCha8Rng) -> SuiteResult {
    let ring = PolynomialRing::base(["x", "y"]).expect("valid names");
    let spec = PolySpec { max_degree: 2, max_terms: 3, coeff_bound: 3 };
    let mut suite = SuiteResult::new("invariance");
    while suite.total < 10 {
        let r = rng.gen_range(1..=2);
        let s = rng.gen_range(r..=3);
        let m = random_matrix(rng, &ring, r, s, spec);
        let Ok(p) = QModulePresentation::new(m.clone(), r) else { continue };
        let u = QPolyMatrix::from_integers(&ring, &random::unimodular(rng, s, 6)).expect("integers");
        let q = QModulePresentation::new(m.checked_mul(&u).expect("shapes"), r).expect("rank is preserved");
        let a = nash_ideal(&p, 0, NashOptions::default()).map(|x| x.ideal);
        let b = nash_ideal(&q, 0, NashOptions::default()).map(|x| x.ideal);
        let ok = matches!((a, b), (Ok(a), Ok(b)) if a.equals(&b).unwrap_or(false));
        suite.record(ok, || format!("minors ideal changed under a unimodular transform of\n{m}"));
    }
    suite
}

fn groebner(rng: &mut ChaCha8Rng) -> SuiteResult {
    let ring = xyz();
    let spec = PolySpec { max_degree: 2, max_terms: 3, coeff_bound: 5 };
    let mut suite = SuiteResult::new("groebner");
    for _ in 0..30 {
        let count = rng.gen_range(1..=3);
        let gens: Vec<QPolynomial> = (0..count).map(|_| random::polynomial(rng, &ring, spec)).collect();
        let mut shuffled = gens.clone();
        shuffled.shuffle(rng);
        let ok = match (buchberger(&gens, DEFAULT_MAX_PAIRS), buchberger(&shuffled, DEFAULT_MAX_PAIRS)) {
            (Ok(basis), Ok(again)) => {
                is_groebner_basis(&basis)
                    && is_reduced(&basis)
                    && gens.iter().all(|g| normal_form(g, &basis).is_zero())
                    && basis == again
            }
            _ => false,
        };
        let shown: Vec<String> = gens.iter().map(ToString::to_string).collect();
        suite.record(ok, || format!("basis of ({})", shown.join(", ")));
    }
    suite
}
