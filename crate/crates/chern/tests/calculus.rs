use chern::{
    an_open_class, calibrate_lambda_convention, chk_table, c_table, projbundle_pushforward,
    segre, sym_dual_chern, x2_class, xn_class, BundleDescriptor,
};
use gradedpoly::{binomial_exact, parse_poly, GradedPoly, WeightedDegree};

#[test]
fn sym_dual_examples() {
    let t = chk_table();
    assert_eq!(
        sym_dual_chern(1, 3).unwrap(),
        parse_poly(&t, "1 - c1 + c2 - c3").unwrap()
    );
    assert_eq!(sym_dual_chern(0, 3).unwrap(), GradedPoly::one(&t));

    // degree-1 part of c(Sym^4 E^dual) is -20 c1
    let s4 = sym_dual_chern(4, 3).unwrap();
    let deg1: GradedPoly = GradedPoly::from_terms(
        &t,
        s4.terms()
            .filter(|(m, _)| m.weighted_degree(&t) == 1)
            .map(|(m, c)| (m.clone(), c.clone())),
    );
    assert_eq!(deg1, parse_poly(&t, "-20*c1").unwrap());
}

#[test]
fn sym_dual_respects_rank() {
    for (d, rank) in [(2u32, 2u32), (3, 2), (2, 3), (4, 3)] {
        let c = sym_dual_chern(d, rank).unwrap();
        let roots = binomial_exact((d + rank - 1) as i64, (rank - 1) as i64);
        let top: u64 = c
            .terms()
            .map(|(m, _)| m.weighted_degree(c.table()))
            .max()
            .unwrap();
        assert!(
            top <= roots.clone().try_into().unwrap(),
            "top degree {top} exceeds root count {roots} at (d,rank)=({d},{rank})"
        );
    }
    assert!(sym_dual_chern(1, 4).is_err());
}

#[test]
fn segre_examples() {
    let b = BundleDescriptor::standard3();
    let t = chk_table();
    let s = segre(&b, 2);
    assert_eq!(s[0], GradedPoly::one(&t));
    assert_eq!(s[1], parse_poly(&t, "-c1").unwrap());
    assert_eq!(s[2], parse_poly(&t, "c1^2 - c2").unwrap());

    let trivial = BundleDescriptor::new(3, GradedPoly::one(&t));
    let s = segre(&trivial, 3);
    assert!(s[1].is_zero() && s[2].is_zero() && s[3].is_zero());
}

#[test]
fn chern_times_segre_is_one() {
    let t = chk_table();
    for b in [
        BundleDescriptor::standard3(),
        BundleDescriptor::standard3_dual(),
        BundleDescriptor::new(3, parse_poly(&t, "1 + 2*c1 + c2 - 5*c3").unwrap()),
    ] {
        let upto = 6u64;
        let s = segre(&b, upto);
        let total_s = s.iter().fold(GradedPoly::zero(&t), |acc, x| acc.add(x));
        let prod = b.total_chern.mul(&total_s);
        // every graded piece of degree 1..=upto must vanish
        for (m, c) in prod.terms() {
            let d = m.weighted_degree(&t);
            if d >= 1 && d <= upto {
                panic!("c*s has a degree-{d} term {m:?} -> {c}");
            }
        }
    }
}

#[test]
fn pushforward_examples() {
    let t = chk_table();
    let fiber = BundleDescriptor::standard3();
    assert_eq!(
        projbundle_pushforward(&parse_poly(&t, "k^2").unwrap(), &fiber),
        GradedPoly::one(&t)
    );
    assert!(projbundle_pushforward(&parse_poly(&t, "h*k").unwrap(), &fiber).is_zero());
    assert!(projbundle_pushforward(&parse_poly(&t, "1").unwrap(), &fiber).is_zero());
    // k^3 reduced then pushed equals s_1 = -e1 of the fiber
    assert_eq!(
        projbundle_pushforward(&parse_poly(&t, "k^3").unwrap(), &fiber),
        parse_poly(&t, "-c1").unwrap()
    );
    // pi_*(k^{2+i}) = s_i
    let s = segre(&fiber, 4);
    for i in 0..=4u32 {
        assert_eq!(
            projbundle_pushforward(&parse_poly(&t, &format!("k^{}", 2 + i)).unwrap(), &fiber),
            s[i as usize],
            "i = {i}"
        );
    }
}

#[test]
fn x2_class_shape() {
    let t = chk_table();
    let x2 = x2_class();
    assert_eq!(x2.weighted_degree(), WeightedDegree::Homogeneous(4));
    // coefficient of h^4 is 2
    let h4 = gradedpoly::Monomial(vec![0, 0, 0, 4, 0]);
    assert_eq!(x2.coeff(&h4), gradedpoly::rat_int(2));
    // c = 0 specialization agrees with the displayed product
    let zero = GradedPoly::zero(&t);
    let c1i = t.index_of("c1").unwrap();
    let c2i = t.index_of("c2").unwrap();
    let c3i = t.index_of("c3").unwrap();
    let specialized = x2
        .substitute_var(c1i, &zero)
        .substitute_var(c2i, &zero)
        .substitute_var(c3i, &zero);
    let direct = parse_poly(&t, "2*(h+k)*(h+4*k)*((h+3*k)^2 - k*(h+2*k))").unwrap();
    assert_eq!(specialized, direct);
}

#[test]
fn xn_class_degrees() {
    for n in 2..=7u32 {
        let x = xn_class(n).unwrap();
        assert_eq!(
            x.weighted_degree(),
            WeightedDegree::Homogeneous((n + 2) as u64),
            "n = {n}"
        );
    }
    assert_eq!(xn_class(2).unwrap(), x2_class());
    assert!(xn_class(8).is_err());
}

#[test]
fn calibration_selects_exactly_one_convention() {
    let record = calibrate_lambda_convention().unwrap();
    // the degree-2 anchor alone cannot see the lambda flip
    assert_eq!(record.stage_one.len(), 2);
    assert_eq!(record.stage_two.len(), 1);
    // idempotent
    let again = calibrate_lambda_convention().unwrap();
    assert_eq!(record, again);
}

#[test]
fn open_stratum_classes() {
    let t = c_table();
    assert_eq!(
        an_open_class(2).unwrap(),
        parse_poly(&t, "24*(c1^2 - 2*c2)").unwrap()
    );
    assert_eq!(
        an_open_class(3).unwrap(),
        parse_poly(&t, "36*c1^3 - 92*c1*c2 + 56*c3").unwrap()
    );
    assert_eq!(
        an_open_class(4).unwrap(),
        parse_poly(&t, "36*c1^4 - 92*c1^2*c2 + 56*c1*c3").unwrap()
    );
    for n in 2..=7 {
        let a = an_open_class(n).unwrap();
        assert!(
            a.is_zero() || a.is_homogeneous_of_degree(n as u64),
            "n = {n}"
        );
        assert!(a
            .denominator_primes()
            .iter()
            .all(|p| *p == 2 || *p == 3));
    }
}

#[test]
fn wrong_grothendieck_sign_is_rejected_by_the_degree2_anchor() {
    let record = calibrate_lambda_convention().unwrap();
    assert!(record.stage_one.iter().all(|c| !c.dual_fiber));
    assert!(!record.convention.dual_fiber);
}
