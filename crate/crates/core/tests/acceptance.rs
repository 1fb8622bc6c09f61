//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the verdict lines are printed even
//! when everything passes. Exits non-zero if any criterion fails.

use std::collections::HashMap;
use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use nashjet::groebner::{buchberger, is_groebner_basis, is_reduced, normal_form, DEFAULT_MAX_PAIRS};
use nashjet::nash::{atom_name, nash_ideal, verify_presentation};
use nashjet::random::{self, PolySpec};
use nashjet::{
    JetContext, MonomialOrder, NashOptions, PolynomialRing, QIdeal, QIdealExpr, QModulePresentation, QPolyMatrix,
    QPolynomial, QSeries,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn base() -> PolynomialRing {
    PolynomialRing::base(["x", "y"]).unwrap()
}

/// The presentations printed for the blow-up of the origin of the plane.
const EXAMPLE_ONE: [&str; 4] = [
    "(x, y)",
    "a_0^2 + (x*y_1 - y*x_1)",
    "a_0*a_1 + (y_2*x^2 - y*x_2*x - x_1*y_1*x + y*x_1^2, x_2*y^2 - x_1*y_1*y - x*y_2*y + x*y_1^2)",
    "a_0*a_2 + a_1^2 + (\
     y_3*x^3 - y*x_3*x^2 - x_2*y_1*x^2 - x_1*y_2*x^2 + 2*y*x_1*x_2*x + x_1^2*y_1*x - y*x_1^3, \
     y_1*y_2*x^2 - y*y_3*x^2 - x_1*y_1^2*x + y^2*x_3*x + y^2*x_1*x_2 + y*x_1^2*y_1, \
     x_2*y_1*y^2 + x_1*y_2*y^2 + x*y_3*y^2 - x_1*y_1^2*y - 2*x*y_1*y_2*y + x*y_1^3 - y^3*x_3, \
     y_2^2*x^2 - y_1*y_3*x^2 + x_2*y_1^2*x + y*x_3*y_1*x - 2*y*x_2*y_2*x - x_1*y_1*y_2*x \
     + y*x_1*y_3*x + y^2*x_2^2 - y^2*x_1*x_3 - y*x_1*x_2*y_1 + y*x_1^2*y_2)",
];

/// The second quartic above with the sign of `y^2*x_1*x_2` flipped.
const CORRECTED_QUARTIC: &str = "y_1*y_2*x^2 - y*y_3*x^2 - x_1*y_1^2*x + y^2*x_3*x - y^2*x_1*x_2 + y*x_1^2*y_1";
const PRINTED_QUARTIC: &str = "y_1*y_2*x^2 - y*y_3*x^2 - x_1*y_1^2*x + y^2*x_3*x + y^2*x_1*x_2 + y*x_1^2*y_1";

fn example_one() -> Outcome {
    let start = Instant::now();
    let p = QModulePresentation::new(QPolyMatrix::parse(&base(), &[vec!["x", "y"]]).unwrap(), 1).unwrap();
    let mut env = HashMap::new();
    let mut failures = Vec::new();
    let mut corrected_ok = false;
    for (n, text) in EXAMPLE_ONE.iter().enumerate() {
        let r = nash_ideal(&p, n as u32, NashOptions::default()).map_err(|e| e.to_string())?;
        let ring = r.ideal.ring().clone();
        let expr = QIdealExpr::parse(text, &ring).map_err(|e| e.to_string())?;
        let report = verify_presentation(&r.ideal, &expr, &env).map_err(|e| e.to_string())?;
        if !report.equal {
            failures.push(format!("n = {n}: {report}"));
        }
        if n == 3 {
            let corrected = text.replace(PRINTED_QUARTIC, CORRECTED_QUARTIC);
            let expr = QIdealExpr::parse(&corrected, &ring).map_err(|e| e.to_string())?;
            corrected_ok = verify_presentation(&r.ideal, &expr, &env).map_err(|e| e.to_string())?.equal;
        }
        env.insert(atom_name(n as u32), r.ideal);
    }
    let elapsed = start.elapsed().as_secs_f64();
    check(elapsed < 300.0, || format!("took {elapsed:.1} s"))?;
    if failures.is_empty() {
        Ok(format!("n = 0..3 equal to the printed presentations ({elapsed:.1} s)"))
    } else {
        Err(format!(
            "{}; with the sign of y^2*x_1*x_2 flipped n = 3 {} ({elapsed:.1} s)",
            failures.join("; "),
            if corrected_ok { "is equal" } else { "still differs" }
        ))
    }
}

fn jet_matrices() -> Outcome {
    let m = QPolyMatrix::parse(&base(), &[vec!["x", "y"]]).unwrap();
    let expected: [&[&[&str]]; 3] = [
        &[&["x", "y", "0", "0"], &["x_1", "y_1", "x", "y"]],
        &[&["x", "y", "0", "0", "0", "0"], &["x_1", "y_1", "x", "y", "0", "0"], &["x_2", "y_2", "x_1", "y_1", "x", "y"]],
        &[
            &["x", "y", "0", "0", "0", "0", "0", "0"],
            &["x_1", "y_1", "x", "y", "0", "0", "0", "0"],
            &["x_2", "y_2", "x_1", "y_1", "x", "y", "0", "0"],
            &["x_3", "y_3", "x_2", "y_2", "x_1", "y_1", "x", "y"],
        ],
    ];
    for (i, rows) in expected.iter().enumerate() {
        let n = i as u32 + 1;
        let ctx = JetContext::new(&base(), n).unwrap();
        let got = m.jet_matrix(&ctx).map_err(|e| e.to_string())?;
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        let want = QPolyMatrix::parse(ctx.jet_ring(), &rows).unwrap();
        check(got == want, || format!("M_{n} differs:\n{got}"))?;
    }
    Ok("M_1, M_2, M_3 match entry for entry".into())
}

fn leibniz_and_homomorphism() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1e1b);
    let ring = PolynomialRing::base(["x", "y", "z"]).unwrap();
    let spec = PolySpec { max_degree: 3, max_terms: 4, coeff_bound: 5 };
    let contexts: Vec<JetContext> = (0..=4).map(|n| JetContext::new(&ring, n).unwrap()).collect();
    const CASES: usize = 250;
    for case in 0..CASES {
        let f: QPolynomial = random::polynomial(&mut rng, &ring, spec);
        let g: QPolynomial = random::polynomial(&mut rng, &ring, spec);
        let ctx = &contexts[rng.gen_range(0..contexts.len())];
        let k = rng.gen_range(0..=ctx.order());
        let lhs = ctx.hs_derivative(&(&f * &g), k).unwrap();
        let mut rhs = QPolynomial::zero(ctx.jet_ring());
        for i in 0..=k {
            rhs = rhs + ctx.hs_derivative(&f, i).unwrap() * ctx.hs_derivative(&g, k - i).unwrap();
        }
        check(lhs == rhs, || format!("Leibniz case {case}: f = {f}, g = {g}, k = {k}"))?;

        let (lf, lg) = (ctx.jet_lift(&f).unwrap(), ctx.jet_lift(&g).unwrap());
        let prod: QSeries = &lf * &lg;
        let sum: QSeries = &lf + &lg;
        check(ctx.jet_lift(&(&f * &g)).unwrap() == prod, || format!("lift not multiplicative: f = {f}, g = {g}"))?;
        check(ctx.jet_lift(&(&f + &g)).unwrap() == sum, || format!("lift not additive: f = {f}, g = {g}"))?;
    }
    Ok(format!("{CASES} Leibniz instances, {CASES} homomorphism pairs"))
}

fn random_presentation(rng: &mut ChaCha8Rng, ring: &PolynomialRing) -> QModulePresentation {
    let spec = PolySpec { max_degree: 2, max_terms: 3, coeff_bound: 3 };
    loop {
        let r = rng.gen_range(1..=3);
        let s = rng.gen_range(r..=4);
        let rows = (0..r).map(|_| (0..s).map(|_| random::polynomial(rng, ring, spec)).collect()).collect();
        let m = QPolyMatrix::from_rows(ring, rows).unwrap();
        if let Ok(p) = QModulePresentation::new(m, r) {
            return p;
        }
    }
}

fn determinantal_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xde7);
    let ring = base();
    const CASES: usize = 24;
    let mut jet_checks = 0;
    for case in 0..CASES {
        let p = random_presentation(&mut rng, &ring);
        let m = p.matrix();
        let s = m.cols();
        let u = QPolyMatrix::from_integers(&ring, &random::unimodular(&mut rng, s, 6)).unwrap();
        let mu = m.checked_mul(&u).unwrap();
        let mut coeffs = Vec::new();
        for _ in 0..s {
            coeffs.push(random::polynomial(&mut rng, &ring, PolySpec { max_degree: 1, max_terms: 2, coeff_bound: 3 }));
        }
        let v = QPolyMatrix::from_rows(&ring, coeffs.into_iter().map(|c| vec![c]).collect()).unwrap();
        let extra = m.checked_mul(&v).unwrap();
        let column: Vec<QPolynomial> = (0..m.rows()).map(|i| extra.get(i, 0).clone()).collect();
        let augmented = m.with_column(&column).unwrap();
        // Jet order 1 doubles the minor size; keep it to rank one.
        let orders: &[u32] = if p.rank() == 1 { &[0, 1] } else { &[0] };
        for &n in orders {
            let base_ideal = nash_ideal(&p, n, NashOptions::default()).unwrap().ideal;
            for (label, other) in [("unimodular", &mu), ("redundant column", &augmented)] {
                let q = QModulePresentation::new(other.clone(), p.rank()).unwrap();
                let ideal = nash_ideal(&q, n, NashOptions::default()).unwrap().ideal;
                check(ideal.equals(&base_ideal).unwrap(), || format!("case {case}, n = {n}, {label}:\n{m}"))?;
            }
            if n > 0 {
                jet_checks += 1;
            }
        }
    }
    Ok(format!("{CASES} presentations up to 3x4, {jet_checks} also at jet order 1"))
}

fn degenerate_cases() -> Outcome {
    let ring = base();
    for r in 1..=2 {
        let p = QModulePresentation::new(QPolyMatrix::identity(&ring, r), r).unwrap();
        for n in 0..=4 {
            let ideal = nash_ideal(&p, n, NashOptions::default()).unwrap().ideal;
            check(ideal.is_unit().unwrap(), || format!("identity {r}x{r}, n = {n}: {ideal}"))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xd06);
    let spec = PolySpec { max_degree: 3, max_terms: 3, coeff_bound: 4 };
    let mut principal = 0;
    while principal < 5 {
        let f: QPolynomial = random::polynomial(&mut rng, &ring, spec);
        if f.is_zero() {
            continue;
        }
        let p = nashjet::nash::ideal_blowup_presentation(std::slice::from_ref(&f)).unwrap();
        for n in 0..=3 {
            let basis = nash_ideal(&p, n, NashOptions::default()).unwrap().ideal.groebner_basis().unwrap();
            check(basis.len() == 1, || format!("({f}) at n = {n} has basis of length {}", basis.len()))?;
        }
        principal += 1;
    }
    for case in 0..10 {
        let p = random_presentation(&mut rng, &ring);
        let r = nash_ideal(&p, 0, NashOptions::default()).unwrap();
        let direct = p.matrix().minors_ideal(p.rank()).unwrap().map_into(r.ideal.ring()).unwrap();
        check(r.ideal.equals(&direct).unwrap(), || format!("n = 0 disagrees on case {case}:\n{}", p.matrix()))?;
    }
    Ok("identity gives (1) for n <= 4; principal stays principal; n = 0 is the r x r minors ideal".into())
}

fn groebner_consistency() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9b);
    let spec = PolySpec { max_degree: 3, max_terms: 4, coeff_bound: 5 };
    let orders = [MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::BlockElimination { split: 1 }];
    const CASES: usize = 40;
    for case in 0..CASES {
        let order = orders[case % orders.len()];
        let ring = PolynomialRing::new(["x", "y", "z"], 0, order).unwrap();
        let count = rng.gen_range(1..=3);
        let gens: Vec<QPolynomial> = (0..count).map(|_| random::polynomial(&mut rng, &ring, spec)).collect();
        let basis = buchberger(&gens, DEFAULT_MAX_PAIRS).map_err(|e| e.to_string())?;
        check(is_groebner_basis(&basis), || format!("case {case}: S-pairs do not reduce to zero"))?;
        check(is_reduced(&basis), || format!("case {case}: basis not reduced"))?;
        for g in &gens {
            check(normal_form(g, &basis).is_zero(), || format!("case {case}: generator {g} not a member"))?;
        }
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rng);
        let shuffled: Vec<QPolynomial> =
            shuffled.into_iter().map(|g| g.scale(&nashjet::Rational::from_integer((-3).into()))).collect();
        let again = buchberger(&shuffled, DEFAULT_MAX_PAIRS).map_err(|e| e.to_string())?;
        check(again == basis, || format!("case {case}: basis depends on generator order ({order})"))?;
        let ideal = QIdeal::new(&ring, gens.clone()).unwrap();
        check(ideal.groebner_basis().unwrap() == basis, || format!("case {case}: ideal basis differs"))?;
    }
    Ok(format!("{CASES} random ideals under degrevlex, lex and block orders"))
}

fn out_of_scope() -> Outcome {
    Ok("open-immersion and singularity-propagation statements are scheme-theoretic; \
        covered only through the construction checked above"
        .into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("AC1", "blow-up of the origin, golden presentations", example_one),
        ("AC2", "jet-matrix golden shapes", jet_matrices),
        ("AC3", "Leibniz and lift homomorphism", leibniz_and_homomorphism),
        ("AC4", "determinantal invariance", determinantal_invariance),
        ("AC5", "degenerate cases", degenerate_cases),
        ("AC6", "Groebner self-consistency", groebner_consistency),
        ("AC7", "out of scope (informational)", out_of_scope),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (id, name, run) in criteria {
        let outcome = panic::catch_unwind(run).unwrap_or_else(|e| {
            let msg = e.downcast_ref::<String>().cloned().or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match outcome {
            Ok(detail) => println!("PASS {id} {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {id} {name}: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
