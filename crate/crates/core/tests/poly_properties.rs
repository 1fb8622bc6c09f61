mod common;

use std::cmp::Ordering;

use common::{monomial, nonzero_qpoly, poly_in, qpoly, xyz};
use nashjet::{JetVariable, MonomialOrder, Polynomial, PolynomialRing, QPolynomial, Rational};
use num_rational::Ratio;
use proptest::prelude::*;

const ORDERS: [MonomialOrder; 4] = [
    MonomialOrder::DegRevLex,
    MonomialOrder::Lex,
    MonomialOrder::BlockElimination { split: 1 },
    MonomialOrder::BlockElimination { split: 2 },
];

fn jet_ring() -> PolynomialRing {
    PolynomialRing::new(["x", "y"], 2, MonomialOrder::DegRevLex).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn addition_is_commutative_and_associative(
        a in qpoly(&xyz(), 3, 5), b in qpoly(&xyz(), 3, 5), c in qpoly(&xyz(), 3, 5),
    ) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(
        a in qpoly(&xyz(), 2, 4), b in qpoly(&xyz(), 2, 4), c in qpoly(&xyz(), 2, 4),
    ) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn multiplication_distributes(a in qpoly(&xyz(), 2, 4), b in qpoly(&xyz(), 2, 4), c in qpoly(&xyz(), 2, 4)) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn identities_and_inverses(a in qpoly(&xyz(), 3, 5)) {
        let ring = xyz();
        prop_assert_eq!(&a + &QPolynomial::zero(&ring), a.clone());
        prop_assert_eq!(&a * &QPolynomial::one(&ring), a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &(-&a)).is_zero());
        prop_assert!((&a * &QPolynomial::zero(&ring)).is_zero());
    }

    #[test]
    fn degree_and_leading_term_are_multiplicative(a in nonzero_qpoly(&xyz(), 3, 4), b in nonzero_qpoly(&xyz(), 3, 4)) {
        let p = &a * &b;
        prop_assert_eq!(p.total_degree().unwrap(), a.total_degree().unwrap() + b.total_degree().unwrap());
        prop_assert_eq!(p.leading_monomial().unwrap(), &a.leading_monomial().unwrap().mul(b.leading_monomial().unwrap()));
    }

    #[test]
    fn render_then_parse_is_identity(a in qpoly(&jet_ring(), 2, 6)) {
        let ring = jet_ring();
        let text = a.to_string();
        prop_assert_eq!(Polynomial::parse(&text, &ring).unwrap(), a);
    }

    #[test]
    fn rational_coefficients_round_trip(a in qpoly(&xyz(), 2, 4), d in 1i64..20) {
        let a = a.scale(&Rational::new(1.into(), d.into()));
        prop_assert_eq!(QPolynomial::parse(&a.to_string(), &xyz()).unwrap(), a);
    }

    #[test]
    fn orders_are_total_and_multiplicative(
        a in monomial(4, 3), b in monomial(4, 3), c in monomial(4, 3),
    ) {
        for order in ORDERS {
            let ab = order.compare(&a, &b);
            prop_assert_eq!(ab, order.compare(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            prop_assert_eq!(order.compare(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_ne!(order.compare(&a, &nashjet::Monomial::one()), Ordering::Less);
            if ab == Ordering::Less && order.compare(&b, &c) == Ordering::Less {
                prop_assert_eq!(order.compare(&a, &c), Ordering::Less);
            }
        }
    }

    #[test]
    fn elimination_order_puts_the_block_first(a in monomial(4, 3), b in monomial(4, 3)) {
        let order = MonomialOrder::BlockElimination { split: 2 };
        let first = |m: &nashjet::Monomial| (0..2).map(|p| m.exponent(p)).sum::<u32>();
        if first(&a) > 0 && first(&b) == 0 {
            prop_assert_eq!(order.compare(&a, &b), Ordering::Greater);
        }
    }

    #[test]
    fn derivative_is_a_derivation(a in qpoly(&xyz(), 3, 4), b in qpoly(&xyz(), 3, 4), v in 0usize..3) {
        let v = JetVariable::new(v, 0);
        let d = |p: &QPolynomial| p.partial_derivative(v).unwrap();
        prop_assert_eq!(d(&(&a * &b)), &(&d(&a) * &b) + &(&a * &d(&b)));
        prop_assert_eq!(d(&(&a + &b)), &d(&a) + &d(&b));
    }

    #[test]
    fn evaluation_is_a_ring_map(a in qpoly(&xyz(), 3, 4), b in qpoly(&xyz(), 3, 4), pt in proptest::collection::vec(-5i64..=5, 3)) {
        let pt: Vec<Rational> = pt.into_iter().map(|v| Rational::from_integer(v.into())).collect();
        prop_assert_eq!((&a * &b).evaluate(&pt), a.evaluate(&pt) * b.evaluate(&pt));
        prop_assert_eq!((&a + &b).evaluate(&pt), a.evaluate(&pt) + b.evaluate(&pt));
    }

    #[test]
    fn small_rationals_agree_with_big_rationals(
        a in poly_in::<Ratio<i64>>(xyz(), 2, 3), b in poly_in::<Ratio<i64>>(xyz(), 2, 3),
    ) {
        let lift = |p: &Polynomial<Ratio<i64>>| QPolynomial::parse(&p.to_string(), &xyz()).unwrap();
        prop_assert_eq!(lift(&(&a * &b)), &lift(&a) * &lift(&b));
        prop_assert_eq!(lift(&(&a - &b)), &lift(&a) - &lift(&b));
    }
}
