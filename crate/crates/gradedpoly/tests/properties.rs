use gradedpoly::{parse_poly, rat, GradedPoly, Monomial, RingMap, VariableTable, WeightedDegree};
use proptest::prelude::*;
use std::sync::Arc;

fn table3() -> Arc<VariableTable> {
    VariableTable::new(&[("x", 1), ("y", 1), ("z", 2)])
}

fn arb_poly(table: Arc<VariableTable>) -> impl Strategy<Value = GradedPoly> {
    let nv = table.len();
    prop::collection::vec(
        (
            prop::collection::vec(0u32..4, nv),
            -9i64..10,
            1i64..5,
        ),
        0..6,
    )
    .prop_map(move |terms| {
        GradedPoly::from_terms(
            &table,
            terms
                .into_iter()
                .map(|(e, n, d)| (Monomial(e), rat(n, d))),
        )
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in arb_poly(table3()), b in arb_poly(table3()), c in arb_poly(table3())) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        let one = GradedPoly::one(a.table());
        prop_assert_eq!(a.mul(&one), a.clone());
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(a in arb_poly(table3()), b in arb_poly(table3())) {
        let t = table3();
        let m = RingMap::new(&t, &t, &[
            ("x", parse_poly(&t, "x + y").unwrap()),
            ("y", parse_poly(&t, "2*y").unwrap()),
            ("z", parse_poly(&t, "z - x*y").unwrap()),
        ]).unwrap();
        prop_assert_eq!(
            m.substitute(&a.add(&b)).unwrap(),
            m.substitute(&a).unwrap().add(&m.substitute(&b).unwrap())
        );
        prop_assert_eq!(
            m.substitute(&a.mul(&b)).unwrap(),
            m.substitute(&a).unwrap().mul(&m.substitute(&b).unwrap())
        );
    }

    #[test]
    fn substitute_along_composition(a in arb_poly(table3())) {
        let t = table3();
        let f = RingMap::new(&t, &t, &[
            ("x", parse_poly(&t, "x + 1").unwrap()),
            ("y", parse_poly(&t, "y").unwrap()),
            ("z", parse_poly(&t, "z + x^2").unwrap()),
        ]).unwrap();
        let g = RingMap::new(&t, &t, &[
            ("x", parse_poly(&t, "3*x").unwrap()),
            ("y", parse_poly(&t, "x - y").unwrap()),
            ("z", parse_poly(&t, "z").unwrap()),
        ]).unwrap();
        let gf = g.compose(&f).unwrap();
        prop_assert_eq!(
            gf.substitute(&a).unwrap(),
            g.substitute(&f.substitute(&a).unwrap()).unwrap()
        );
    }

    #[test]
    fn degree_is_additive_on_homogeneous_products(
        e1 in prop::collection::vec(0u32..3, 3),
        e2 in prop::collection::vec(0u32..3, 3),
        n1 in 1i64..7, n2 in 1i64..7,
    ) {
        let t = table3();
        // homogeneous polynomials built from single monomials times constants,
        // plus a second term of the same weighted degree when one exists
        let p = GradedPoly::from_terms(&t, [(Monomial(e1), rat(n1, 1))]);
        let q = GradedPoly::from_terms(&t, [(Monomial(e2), rat(n2, 1))]);
        let (WeightedDegree::Homogeneous(dp), WeightedDegree::Homogeneous(dq)) =
            (p.weighted_degree(), q.weighted_degree()) else { unreachable!() };
        prop_assert_eq!(
            p.mul(&q).weighted_degree(),
            WeightedDegree::Homogeneous(dp + dq)
        );
    }

    #[test]
    fn print_parse_round_trip(a in arb_poly(table3())) {
        let t = table3();
        let text = a.to_string();
        let back = parse_poly(&t, &text).unwrap();
        prop_assert_eq!(back, a);
    }
}
