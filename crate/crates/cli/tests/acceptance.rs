//! Acceptance suite: every criterion is exercised at its stated tolerance
//! (exact equality throughout) and reported as one pass/fail line.

use gradedpoly::{parse_poly, rat, GradedPoly, Monomial, VariableTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;

const BUDGET: u64 = 50_000_000;

struct Criteria {
    results: Vec<(String, bool)>,
}

impl Criteria {
    fn new() -> Self {
        Criteria { results: vec![] }
    }

    fn record(&mut self, name: &str, pass: bool) {
        println!("criterion {:<38} {}", name, if pass { "PASS" } else { "FAIL" });
        self.results.push((name.to_string(), pass));
    }

    fn finish(self) {
        let failed: Vec<&(String, bool)> = self.results.iter().filter(|(_, p)| !p).collect();
        assert!(
            failed.is_empty(),
            "failing criteria: {:?}",
            failed.iter().map(|(n, _)| n).collect::<Vec<_>>()
        );
    }
}

#[test]
fn acceptance() {
    let mut c = Criteria::new();

    // 1. closed-form pushforwards equal the brute-force oracle, N <= 8
    let mut ok = true;
    let mut cases = 0;
    for n in 2..=8u32 {
        for k in 2..=n {
            for r in 1..=n / k {
                for m in -1..=(r as i64 - 1) {
                    cases += 1;
                    ok &= binforms::push_pi_closed(r, m, k, n).unwrap()
                        == binforms::push_pi_oracle(r, m, k, n).unwrap();
                }
            }
        }
    }
    c.record(&format!("1 oracle equivalence ({cases} tuples)"), ok && cases == 100);

    // 2. diagonal-class identity for k = 2..8
    let ok = (2..=8).all(|k| {
        binforms::delta_small_diagonal(k).unwrap()
            == binforms::delta_small_diagonal_product(k).unwrap()
    });
    c.record("2 diagonal identity k<=8", ok);

    // 3. two-generator theorem with certificates, including the Gamma
    //    memberships and the halving refinement where it holds
    let mut ok = true;
    for (k, n) in binforms::two_generator_pairs() {
        let out = binforms::verify_two_generator_theorem(k, n, BUDGET).unwrap();
        ok &= out.pass;
        ok &= out.gamma_certs.len() == k as usize;
        for (_, cert) in &out.pushforward_certs {
            ok &= cert.member;
        }
        for (_, cert) in &out.gamma_certs {
            ok &= cert.member;
        }
        let (_, halved_even) = out.gamma0_halving.as_ref().unwrap();
        match (k, n) {
            // the unique degree-2 certificate at (2,5) is odd; the honest
            // outcome is a recorded negative
            (2, 5) => ok &= !halved_even,
            _ => ok &= *halved_even,
        }
    }
    c.record("3 two-generator theorem (6 pairs)", ok);

    // 4. combinatorial identities
    let mut ok = true;
    for n in 0..=12u32 {
        for k in 1..=n.max(1) {
            for m in 0..=n {
                ok &= binforms::check_comb(k, m, n);
            }
        }
    }
    for k in 1..=6u32 {
        for r in 1..=4 {
            for l in 0..k {
                ok &= binforms::check_comb2(k, r, l);
            }
        }
    }
    c.record("4 combinatorial identities", ok);

    // 5. square-power in P^16 and square-h modulo the ideal
    let mut ok = true;
    for m in 0..=8u32 {
        for n in 0..=m {
            ok &= binforms::check_square_power(n, m, 16).unwrap();
        }
    }
    for (k, n) in [(3u32, 8u32), (4, 8)] {
        for t in 0..k {
            ok &= binforms::check_square_h(t, k, n, BUDGET).unwrap().passed();
        }
    }
    c.record("5 square-power and square-h", ok);

    // 6. affine cone cross-check at (6,6)
    let t2 = VariableTable::unweighted(&["t0", "t1"]);
    let target = parse_poly(&t2, "72*(t0+t1)^3*t0*t1 - 384*(t0+t1)*(t0*t1)^2").unwrap();
    let ok = binforms::affine_cone_class(6, 6).unwrap() == target;
    c.record("6 affine cone (6,6)", ok);

    // 7. calibrated open-stratum classes
    let ct = chern::c_table();
    let record = chern::calibrate_lambda_convention().unwrap();
    let mut ok = record.stage_two.len() == 1;
    ok &= chern::an_open_class(2).unwrap() == parse_poly(&ct, "24*(c1^2 - 2*c2)").unwrap();
    ok &= chern::an_open_class(3).unwrap()
        == parse_poly(&ct, "36*c1^3 - 92*c1*c2 + 56*c3").unwrap();
    ok &= chern::an_open_class(4).unwrap()
        == parse_poly(&ct, "36*c1^4 - 92*c1^2*c2 + 56*c1*c3").unwrap();
    c.record("7 open-stratum classes A2 A3 A4", ok);

    // 8. presentation audit after variant resolution
    let p = m3bar::load_presentation().unwrap();
    let literal_audit = m3bar::audit_degrees(&p);
    let text = literal_audit.witness.join("\n");
    let mut ok = !literal_audit.passed()
        && text.contains("k1(1) [literal]: inhomogeneous")
        && text.contains("d11c [literal]: inhomogeneous")
        && p.flagged() == vec!["k1(1)", "d11c", "kh"];
    let (resolved, outcomes, _) = m3bar::resolve_variants(&p).unwrap();
    ok &= outcomes.iter().filter(|o| o.survives).count() >= 1;
    ok &= m3bar::audit_degrees(&resolved).passed();
    let degrees: BTreeMap<u64, usize> =
        resolved
            .relations
            .iter()
            .fold(BTreeMap::new(), |mut acc, r| {
                *acc.entry(r.expected_degree).or_insert(0) += 1;
                acc
            });
    ok &= degrees == [(2, 1), (3, 5), (4, 8), (5, 1)].into();
    c.record("8 presentation audit + variants", ok);

    // 9. rational simplification: nine minimal generators, elimination primes
    let s = m3bar::rational_simplify(&resolved).unwrap();
    let total: usize = s.minimal_counts.values().sum();
    let mut ok = total == 9;
    ok &= s.steps[0].primes_inverted == [2, 3].into();
    ok &= s.steps[1].primes_inverted == [2, 3].into();
    ok &= s.steps[2].primes_inverted.contains(&7);
    c.record("9 rational simplification", ok);

    // 10. divisor/kappa comparison
    let maps = faber::build_maps().unwrap();
    let mut ok = faber::verify_inverse(&maps).unwrap();
    let f = faber::faber_ideal(&s).unwrap();
    ok &= f.minimal_counts == [(3, 3), (4, 6)].into();
    ok &= f.hilbert_source == f.hilbert_target;
    c.record("10 divisor/kappa comparison", ok);

    // 11. engine soundness: 1000 certificate replays plus the monomial oracle
    let mut ok = true;
    let t3 = VariableTable::unweighted(&["x", "y", "z"]);
    let order = ideals::MonomialOrder::GradedRevLex;
    let mut rng = ChaCha8Rng::seed_from_u64(987654321);
    let mut replays = 0;
    while replays < 1000 {
        let gens: Vec<GradedPoly> = (0..rng.gen_range(1..4))
            .map(|_| random_poly(&mut rng, &t3, 3, 3))
            .filter(|p| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let basis = ideals::groebner_basis(&gens, &order, BUDGET).unwrap();
        if replays % 100 == 0 {
            ok &= basis.audit_buchberger(BUDGET).unwrap();
        }
        for _ in 0..10 {
            if replays >= 1000 {
                break;
            }
            let q = random_poly(&mut rng, &t3, 4, 4);
            let cert = ideals::membership_against(&q, &gens, &basis, BUDGET).unwrap();
            let (nf, _) = ideals::normal_form(&q, &basis, BUDGET).unwrap();
            let (nf2, _) = ideals::normal_form(&nf, &basis, BUDGET).unwrap();
            ok &= cert.replay(&q, &gens) && nf == nf2;
            replays += 1;
        }
    }
    for _ in 0..60 {
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
            .map(|m| GradedPoly::from_terms(&t3, [(m.clone(), rat(1, 1))]))
            .collect();
        let mut oracle: BTreeMap<u64, usize> = BTreeMap::new();
        for m in &monos {
            if monos.iter().all(|o| o == m || m.div(o).is_none()) {
                *oracle.entry(m.weighted_degree(&t3)).or_insert(0) += 1;
            }
        }
        ok &= ideals::minimal_generators_by_degree(&gens, &t3, 5).unwrap() == oracle;
    }
    c.record("11 engine soundness (1000 replays)", ok);

    c.finish();
}

fn random_poly(
    rng: &mut ChaCha8Rng,
    table: &std::sync::Arc<VariableTable>,
    maxdeg: u32,
    nterms: usize,
) -> GradedPoly {
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
        p.add_term(Monomial(exps), rat(rng.gen_range(-6i64..7), rng.gen_range(1i64..4)));
    }
    p
}
