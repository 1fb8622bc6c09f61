use std::collections::HashMap;

use num_rational::BigRational;

use super::*;

type P = Polynomial<BigRational>;
type I = Ideal<BigRational>;
type E = IdealExpr<BigRational>;

fn base() -> PolynomialRing {
    PolynomialRing::base(["x", "y"]).unwrap()
}

fn row(ring: &PolynomialRing, entries: &[&str]) -> PolyMatrix<BigRational> {
    PolyMatrix::parse(ring, &[entries.to_vec()]).unwrap()
}

fn xy() -> ModulePresentation<BigRational> {
    ModulePresentation::new(row(&base(), &["x", "y"]), 1).unwrap()
}

#[test]
fn order_zero_is_the_maximal_minors_ideal() {
    let r = nash_ideal(&xy(), 0, NashOptions::default()).unwrap();
    let expected = I::parse(r.ideal.ring(), &["x", "y"]).unwrap();
    assert!(r.ideal.equals(&expected).unwrap());
    assert!(r.jet_relations.is_empty());
}

#[test]
fn identity_gives_the_unit_ideal() {
    let p = ModulePresentation::new(PolyMatrix::<BigRational>::identity(&base(), 2), 2).unwrap();
    for n in 0..3 {
        assert!(nash_ideal(&p, n, NashOptions::default()).unwrap().ideal.is_unit().unwrap());
    }
}

#[test]
fn second_order_matches_presentation() {
    let p = xy();
    let mut env = HashMap::new();
    let mut last = None;
    for n in 0..=2 {
        let r = nash_ideal(&p, n, NashOptions::default()).unwrap();
        env.insert(atom_name(n), r.ideal.clone());
        last = Some(r);
    }
    let r = last.unwrap();
    let expr = E::parse(
        "𝔞_0*𝔞_1 + (y_2*x^2 - y*x_2*x - x_1*y_1*x + y*x_1^2, x_2*y^2 - x_1*y_1*y - x*y_2*y + x*y_1^2)",
        r.ideal.ring(),
    )
    .unwrap();
    let report = verify_presentation(&r.ideal, &expr, &env).unwrap();
    assert!(report.equal, "{report}");
}

#[test]
fn interreduction_does_not_change_the_ideal() {
    let p = xy();
    let raw = nash_ideal(&p, 2, NashOptions { interreduce: false, ..Default::default() }).unwrap();
    let reduced = nash_ideal(&p, 2, NashOptions::default()).unwrap();
    assert!(raw.ideal.equals(&reduced.ideal).unwrap());
    assert!(reduced.ideal.len() <= raw.ideal.len());
}

#[test]
fn parallel_orders_come_back_in_request_order() {
    let results = nash_ideals(&xy(), &[2, 0, 1], NashOptions::default());
    let orders: Vec<u32> = results.into_iter().map(|r| r.unwrap().jet_order).collect();
    assert_eq!(orders, vec![2, 0, 1]);
}

#[test]
fn caps_and_shape_errors() {
    let p = xy();
    assert!(matches!(nash_ideal(&p, 9, NashOptions::default()), Err(Error::ResourceLimit(_))));
    let zero = row(&base(), &["0", "0"]);
    let err = ModulePresentation::new(zero, 1).unwrap_err();
    assert!(matches!(err, Error::RankNotAttained(1)));
    assert!(err.to_string().contains("generic rank not attained"));
    let m = PolyMatrix::<BigRational>::parse(&base(), &[vec!["x", "y"], vec!["2*x", "2*y"]]).unwrap();
    assert!(matches!(ModulePresentation::new(m, 2), Err(Error::RankNotAttained(2))));
    assert!(matches!(ModulePresentation::new(row(&base(), &["x"]), 2), Err(Error::RankNotAttained(2))));
}

#[test]
fn blowup_presentation_of_an_ideal() {
    let ring = base();
    let gens = vec![P::parse("x^2", &ring).unwrap(), P::parse("y", &ring).unwrap()];
    let p = ideal_blowup_presentation(&gens).unwrap();
    assert_eq!(p.matrix().cols(), 2);
    let r = nash_ideal(&p, 0, NashOptions::default()).unwrap();
    assert!(r.ideal.equals(&I::parse(r.ideal.ring(), &["x^2", "y"]).unwrap()).unwrap());
    assert!(matches!(ideal_blowup_presentation::<BigRational>(&[]), Err(Error::EmptyGenerators)));
}

#[test]
fn principal_presentations_stay_principal() {
    let ring = base();
    let p = ideal_blowup_presentation(&[P::parse("x*y + y^3", &ring).unwrap()]).unwrap();
    for n in 0..=2 {
        let r = nash_ideal(&p, n, NashOptions::default()).unwrap();
        assert_eq!(r.ideal.groebner_basis().unwrap().len(), 1, "n = {n}");
    }
}

#[test]
fn cusp_jacobian_row() {
    let ring = base();
    let f = P::parse("y^2 - x^3", &ring).unwrap();
    let p = hypersurface_nash_presentation(&f).unwrap();
    let expected = row(&ring, &["-3*x^2", "2*y"]);
    assert_eq!(p.matrix(), &expected);
    assert_eq!(p.relations(), &[f]);
    assert!(p.warnings().is_empty());
}

#[test]
fn smooth_hypersurface_has_unit_ideal() {
    let ring = base();
    let p = hypersurface_nash_presentation(&P::parse("x", &ring).unwrap()).unwrap();
    let r = nash_ideal(&p, 0, NashOptions::default()).unwrap();
    assert!(r.ideal.is_unit().unwrap());
    assert_eq!(r.jet_relations.len(), 1);
}

#[test]
fn hypersurface_errors_and_warnings() {
    let ring = base();
    assert!(matches!(hypersurface_nash_presentation(&P::from_int(&ring, 3)), Err(Error::ConstantPolynomial)));
    let p = hypersurface_nash_presentation(&P::parse("x^2*y + x^2", &ring).unwrap());
    let p = p.unwrap();
    assert_eq!(p.warnings().len(), 1);
    assert!(p.warnings()[0].contains("repeated factor x"), "{:?}", p.warnings());
}

#[test]
fn main_component_of_the_cusp() {
    let ring = base();
    let f = P::parse("y^2 - x^3", &ring).unwrap();
    let p = hypersurface_nash_presentation(&f).unwrap();
    let r = nash_ideal(&p, 1, NashOptions::default()).unwrap();
    let witness = P::parse("y", &ring).unwrap();
    let main = main_component_ideal(&r.jet_relations, &witness, &r.context).unwrap();
    assert!(main.contains_ideal(&r.jet_relations).unwrap());
    // The arcs through the cusp point x = y = 0 with arbitrary tangent are
    // an extra component; the main one forces 3 x^2 x_1 = 2 y y_1 plus
    // more, so it is strictly larger than the jet relations.
    assert!(!r.jet_relations.contains_ideal(&main).unwrap());
    let again = main.saturate(&r.context.rename(&witness).unwrap()).unwrap();
    assert!(again.equals(&main).unwrap());
    assert!(matches!(main_component_ideal(&r.jet_relations, &P::zero(&ring), &r.context), Err(Error::ZeroWitness)));
}

#[test]
fn expressions_parse_and_render() {
    let ring = PolynomialRing::new(["x", "y"], 1, Default::default()).unwrap();
    let e = E::parse("a_0^2 + [𝔞0 + a1]*(x*y_1 - y*x_1) + ()", &ring).unwrap();
    assert_eq!(e.to_string(), "a0^2 + [a0 + a1]*(-x_1*y + x*y_1) + ()");
    assert_eq!(e.atoms().into_iter().collect::<Vec<_>>(), vec!["a0", "a1"]);
    let err = E::parse("a0 a1", &ring).unwrap_err();
    assert!(matches!(err, Error::Syntax { position: 4, .. }), "{err}");
    assert!(E::parse("(x, z)", &ring).is_err());
    assert!(matches!(E::parse("a2", &ring).unwrap().evaluate(&ring, &HashMap::new()), Err(Error::UndefinedAtom(_))));
}

#[test]
fn failed_verification_names_a_witness() {
    let p = xy();
    let r = nash_ideal(&p, 1, NashOptions::default()).unwrap();
    let mut env = HashMap::new();
    env.insert(atom_name(0), nash_ideal(&p, 0, NashOptions::default()).unwrap().ideal);
    let expr = E::parse("a0^2", r.ideal.ring()).unwrap();
    let report = verify_presentation(&r.ideal, &expr, &env).unwrap();
    assert!(!report.equal);
    assert!(!report.computed_in_expected);
    assert!(report.expected_in_computed);
    let w = report.computed_witness.clone().unwrap();
    let det = P::parse("x_1*y - x*y_1", r.ideal.ring()).unwrap();
    assert!(w == det || w == -det, "{w}");
    assert!(report.to_string().starts_with("computed ⊄ expected: witness"));
}
