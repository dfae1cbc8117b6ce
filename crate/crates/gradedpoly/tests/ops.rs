use gradedpoly::{
    binomial_exact, elementary_symmetric, parse_poly, rat, rat_int, GradedPoly, PolyError,
    RingMap, VariableTable, WeightedDegree,
};
use num_bigint::BigInt;
use std::collections::BTreeSet;

fn m3_table() -> std::sync::Arc<VariableTable> {
    VariableTable::new(&[
        ("lambda1", 1),
        ("lambda2", 2),
        ("lambda3", 3),
        ("H", 1),
        ("delta1", 1),
        ("delta11", 2),
        ("delta111", 3),
    ])
}

#[test]
fn substitute_h_to_faber_divisor() {
    let src = m3_table();
    let tgt = VariableTable::new(&[("lambda1", 1), ("delta0", 1), ("delta1", 1), ("kappa2", 2)]);
    let mut assignment = vec![
        ("lambda1", GradedPoly::var(&tgt, "lambda1").unwrap()),
        ("delta1", GradedPoly::var(&tgt, "delta1").unwrap()),
        (
            "H",
            parse_poly(&tgt, "9*lambda1 - 3*delta1 - delta0").unwrap(),
        ),
    ];
    for extra in ["lambda2", "lambda3", "delta11", "delta111"] {
        assignment.push((extra, GradedPoly::zero(&tgt)));
    }
    let map = RingMap::new(&src, &tgt, &assignment).unwrap();
    let h = GradedPoly::var(&src, "H").unwrap();
    let img = map.substitute(&h).unwrap();
    assert_eq!(img, parse_poly(&tgt, "9*lambda1 - 3*delta1 - delta0").unwrap());
}

#[test]
fn substitute_identity_fixes_everything() {
    let t = m3_table();
    let p = parse_poly(&t, "24*(lambda1^2 - 2*lambda2) + H*delta111").unwrap();
    let id = RingMap::identity(&t);
    assert_eq!(id.substitute(&p).unwrap(), p);
}

#[test]
fn substitute_binomial_expansion() {
    let t = m3_table();
    let shift = RingMap::new(
        &t,
        &t,
        &[
            ("lambda1", parse_poly(&t, "lambda1 + delta1").unwrap()),
            ("lambda2", GradedPoly::var(&t, "lambda2").unwrap()),
            ("lambda3", GradedPoly::var(&t, "lambda3").unwrap()),
            ("H", GradedPoly::var(&t, "H").unwrap()),
            ("delta1", GradedPoly::var(&t, "delta1").unwrap()),
            ("delta11", GradedPoly::var(&t, "delta11").unwrap()),
            ("delta111", GradedPoly::var(&t, "delta111").unwrap()),
        ],
    )
    .unwrap();
    let p = parse_poly(&t, "lambda1^2").unwrap();
    assert_eq!(
        shift.substitute(&p).unwrap(),
        parse_poly(&t, "lambda1^2 + 2*lambda1*delta1 + delta1^2").unwrap()
    );
}

#[test]
fn missing_assignment_is_an_error() {
    let t = m3_table();
    let r = RingMap::new(&t, &t, &[("H", GradedPoly::var(&t, "H").unwrap())]);
    assert!(matches!(r, Err(PolyError::MissingAssignment(_))));
}

#[test]
fn elementary_symmetric_examples() {
    let t = VariableTable::unweighted(&["h1", "h2", "h3"]);
    let s2 = elementary_symmetric(&t, 2, &["h1", "h2", "h3"]).unwrap();
    assert_eq!(s2, parse_poly(&t, "h1*h2 + h1*h3 + h2*h3").unwrap());
    let s0 = elementary_symmetric(&t, 0, &["h1", "h2"]).unwrap();
    assert_eq!(s0, GradedPoly::one(&t));
    let s3 = elementary_symmetric(&t, 3, &["h1", "h2"]).unwrap();
    assert!(s3.is_zero());
}

#[test]
fn weighted_degree_examples() {
    let t = m3_table();
    let a2 = parse_poly(&t, "24*(lambda1^2 - 2*lambda2)").unwrap();
    assert_eq!(a2.weighted_degree(), WeightedDegree::Homogeneous(2));

    let bad = parse_poly(&t, "lambda1 + lambda2").unwrap();
    assert!(matches!(
        bad.weighted_degree(),
        WeightedDegree::Inhomogeneous(_, _)
    ));

    let k4 = parse_poly(&t, "H*delta111").unwrap();
    assert_eq!(k4.weighted_degree(), WeightedDegree::Homogeneous(4));

    let z = GradedPoly::zero(&t);
    assert_eq!(z.weighted_degree(), WeightedDegree::ZeroPolynomial);
}

#[test]
fn denominator_primes_examples() {
    let t = m3_table();
    let p = parse_poly(&t, "1/2*H^2 + 3/4*delta1^2").unwrap();
    assert_eq!(p.denominator_primes(), BTreeSet::from([2]));

    let q = parse_poly(&t, "24*lambda1^2").unwrap();
    assert!(q.denominator_primes().is_empty());

    let r = parse_poly(&t, "1048/27*lambda1^3*H").unwrap();
    assert_eq!(r.denominator_primes(), BTreeSet::from([3]));
}

#[test]
fn binomial_examples() {
    assert_eq!(binomial_exact(8, 3), BigInt::from(56));
    for n in 0..20 {
        assert_eq!(binomial_exact(n, 0), BigInt::from(1));
    }
    assert_eq!(binomial_exact(4, 1), BigInt::from(4));
    assert_eq!(binomial_exact(3, 5), BigInt::from(0));
    assert_eq!(binomial_exact(5, -1), BigInt::from(0));
}

#[test]
fn canonical_form_p_minus_p_empty() {
    let t = m3_table();
    let p = parse_poly(&t, "1048/27*lambda1^3*H - 92*lambda1^2*lambda2 + delta1").unwrap();
    assert!(p.sub(&p).is_zero());
    assert_eq!(p.sub(&p).num_terms(), 0);
}

#[test]
fn scalar_constructors() {
    let t = m3_table();
    assert_eq!(
        GradedPoly::constant(&t, rat(3, 4)),
        parse_poly(&t, "3/4").unwrap()
    );
    assert_eq!(GradedPoly::constant(&t, rat_int(0)), GradedPoly::zero(&t));
}
