//! Cross-module invariants: the lambda-class restrictions of the stored
//! relations must reproduce the stratum classes computed by the Chern
//! pipeline, under the one calibrated convention.

use gradedpoly::{GradedPoly, Monomial};

/// Rename a class in c1,c2,c3 to the lambda table for comparison.
fn rename_to_lambda(p: &GradedPoly) -> GradedPoly {
    let lt = m3bar::restrict_open_stratum(
        m3bar::load_presentation()
            .unwrap()
            .relation("A2")
            .unwrap()
            .poly(),
    )
    .unwrap()
    .table()
    .clone();
    GradedPoly::from_terms(
        &lt,
        p.terms().map(|(m, c)| (Monomial(m.0.clone()), c.clone())),
    )
}

#[test]
fn open_stratum_restrictions_match_the_chern_pipeline() {
    let p = m3bar::load_presentation().unwrap();
    let (resolved, _, _) = m3bar::resolve_variants(&p).unwrap();

    for (name, n) in [("A2", 2u32), ("A3", 3)] {
        let restricted =
            m3bar::restrict_open_stratum(resolved.relation(name).unwrap().poly()).unwrap();
        let computed = rename_to_lambda(&chern::an_open_class(n).unwrap());
        assert_eq!(restricted, computed, "{name}");
    }

    // degree-4: the boundary-free part of the quartic relation
    let restricted =
        m3bar::restrict_open_stratum(resolved.relation("A4").unwrap().poly()).unwrap();
    let computed = rename_to_lambda(&chern::an_open_class(4).unwrap());
    assert_eq!(restricted, computed, "A4");
}
