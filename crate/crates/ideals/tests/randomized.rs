//! Randomized audits: certificate replay, Buchberger re-check, equivalence
//! properties, and the monomial-ideal oracle for minimal generator counts.

use gradedpoly::{rat, GradedPoly, Monomial, VariableTable};
use ideals::{
    groebner_basis, ideal_equal, ideal_membership, minimal_generators_by_degree, MonomialOrder,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::sync::Arc;

const BUDGET: u64 = 2_000_000;

fn random_poly(rng: &mut ChaCha8Rng, table: &Arc<VariableTable>, maxdeg: u32, nterms: usize) -> GradedPoly {
    let nv = table.len();
    let mut p = GradedPoly::zero(table);
    for _ in 0..nterms {
        let mut exps = vec![0u32; nv];
        let mut left = maxdeg;
        for e in exps.iter_mut() {
            let v = rng.gen_range(0..=left.min(2));
            *e = v;
            left -= v;
        }
        let num = rng.gen_range(-6i64..7);
        let den = rng.gen_range(1i64..4);
        p.add_term(Monomial(exps), rat(num, den));
    }
    p
}

#[test]
fn replay_and_buchberger_audit_small_random_ideals() {
    let t = VariableTable::unweighted(&["x", "y", "z"]);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let order = MonomialOrder::GradedRevLex;
    for round in 0..60 {
        let gens: Vec<GradedPoly> = (0..rng.gen_range(1..4))
            .map(|_| random_poly(&mut rng, &t, 3, 3))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let basis = groebner_basis(&gens, &order, BUDGET).unwrap();
        assert!(
            basis.audit_buchberger(BUDGET).unwrap(),
            "round {round}: S-polynomial failed to reduce"
        );
        for _ in 0..5 {
            let q = random_poly(&mut rng, &t, 4, 4);
            let cert = ideal_membership(&q, &gens, &order, BUDGET).unwrap();
            assert!(cert.replay(&q, &gens), "round {round}: replay failed");
        }
    }
}

#[test]
fn ideal_equal_is_reflexive_and_symmetric() {
    let t = VariableTable::unweighted(&["x", "y"]);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let order = MonomialOrder::GradedRevLex;
    for _ in 0..25 {
        let a: Vec<GradedPoly> = (0..2)
            .map(|_| random_poly(&mut rng, &t, 3, 3))
            .filter(|p| !p.is_zero())
            .collect();
        let b: Vec<GradedPoly> = (0..2)
            .map(|_| random_poly(&mut rng, &t, 3, 3))
            .filter(|p| !p.is_zero())
            .collect();
        if a.is_empty() || b.is_empty() {
            continue;
        }
        assert!(ideal_equal(&a, &a, &order, BUDGET).unwrap());
        let ab = ideal_equal(&a, &b, &order, BUDGET).unwrap();
        let ba = ideal_equal(&b, &a, &order, BUDGET).unwrap();
        assert_eq!(ab, ba);
    }
}

/// For monomial ideals the minimal generators are exactly the divisibility-
/// minimal monomials among the given generators; counting those by degree is
/// an independent oracle for the linear-algebra path.
#[test]
fn minimal_generators_match_monomial_ideal_oracle() {
    let t = VariableTable::unweighted(&["x", "y", "z"]);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..40 {
        let mut monos: Vec<Monomial> = (0..rng.gen_range(1..6))
            .map(|_| {
                let mut exps = vec![0u32; 3];
                let mut left = 5u32;
                for e in exps.iter_mut() {
                    let v = rng.gen_range(0..=left.min(3));
                    *e = v;
                    left -= v;
                }
                Monomial(exps)
            })
            .filter(|m| !m.is_one())
            .collect();
        monos.sort();
        monos.dedup();
        if monos.is_empty() {
            continue;
        }
        let gens: Vec<GradedPoly> = monos
            .iter()
            .map(|m| GradedPoly::from_terms(&t, [(m.clone(), rat(1, 1))]))
            .collect();

        let mut oracle: BTreeMap<u64, usize> = BTreeMap::new();
        for m in &monos {
            let minimal = monos
                .iter()
                .all(|other| other == m || m.div(other).is_none());
            if minimal {
                *oracle.entry(m.weighted_degree(&t)).or_insert(0) += 1;
            }
        }
        let counts = minimal_generators_by_degree(&gens, &t, 5).unwrap();
        assert_eq!(counts, oracle, "monomial ideal {monos:?}");
    }
}
