//! The verification suites behind the CLI subcommands. Every suite returns a
//! deterministic `ReportSet`; wall times are attached for the human summary
//! only.

use gradedpoly::{parse_poly, rat, GradedPoly, Monomial, VariableTable};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use report::{CheckStatus, ReportSet, VerificationReport};
use std::collections::BTreeMap;
use std::time::Instant;

fn timed(mut r: VerificationReport, start: Instant) -> VerificationReport {
    r.wall_time = Some(start.elapsed());
    r
}

fn status_of(ok: bool) -> CheckStatus {
    if ok {
        CheckStatus::Pass
    } else {
        CheckStatus::Fail
    }
}

/// Small-diagonal identity, oracle equivalence, the two-generator theorem,
/// the square-power/square-h identities and the combinatorial lemmas.
pub fn verify_appendix(max_n: u32, budget: u64, k_filter: Option<u32>) -> ReportSet {
    let mut out = ReportSet::default();

    // diagonal-class identity
    let t0 = Instant::now();
    let mut ok = true;
    let mut witness = Vec::new();
    for k in 2..=8 {
        let same = binforms::delta_small_diagonal(k).unwrap()
            == binforms::delta_small_diagonal_product(k).unwrap();
        ok &= same;
        witness.push(format!("k={k}: formula == product: {same}"));
    }
    out.push(timed(
        VerificationReport::new("binforms", "diagonal_identity", "lem:k-diag", status_of(ok))
            .with_witness(witness),
        t0,
    ));

    // oracle equivalence over the full valid grid
    for n in 2..=max_n {
        let t0 = Instant::now();
        let mut ok = true;
        let mut witness = Vec::new();
        for k in 2..=n {
            if k_filter.is_some_and(|kf| kf != k) {
                continue;
            }
            for r in 1..=n / k {
                for m in -1..=(r as i64 - 1) {
                    let closed = binforms::push_pi_closed(r, m, k, n).unwrap();
                    let oracle = binforms::push_pi_oracle(r, m, k, n).unwrap();
                    let same = closed == oracle;
                    ok &= same;
                    witness.push(format!("(r={r},m={m},k={k},N={n}): {same}"));
                }
            }
        }
        out.push(timed(
            VerificationReport::new(
                "binforms",
                &format!("oracle_equivalence(N={n})"),
                "lem:pi-r-1; rem:gener",
                status_of(ok),
            )
            .with_witness(witness),
            t0,
        ));
    }

    // two-generator theorem with certificates
    for (k, n) in binforms::two_generator_pairs() {
        if k_filter.is_some_and(|kf| kf != k) {
            continue;
        }
        let t0 = Instant::now();
        match binforms::verify_two_generator_theorem(k, n, budget) {
            Ok(outcome) => out.push(timed(outcome.to_report(), t0)),
            Err(binforms::BinformsError::Ideal(ideals::IdealError::BudgetExceeded {
                budget,
                context,
            })) => out.push(timed(
                VerificationReport::new(
                    "binforms",
                    &format!("two_generator_theorem(k={k},N={n})"),
                    "appendix corollary",
                    CheckStatus::Inconclusive,
                )
                .with_witness(vec![format!("budget {budget} exceeded in {context}")]),
                t0,
            )),
            Err(e) => out.push(timed(
                VerificationReport::new(
                    "binforms",
                    &format!("two_generator_theorem(k={k},N={n})"),
                    "appendix corollary",
                    CheckStatus::Fail,
                )
                .with_witness(vec![format!("{e}")]),
                t0,
            )),
        }
    }

    // square-power identity in P^16
    let t0 = Instant::now();
    let mut ok = true;
    for m in 0..=8 {
        for n in 0..=m {
            ok &= binforms::check_square_power(n, m, 16).unwrap();
        }
    }
    out.push(timed(
        VerificationReport::new(
            "binforms",
            "square_power(n<=m<=8,N=16)",
            "prop:square-power",
            status_of(ok),
        ),
        t0,
    ));

    // square-h identities modulo the ideal
    for (k, n) in [(3u32, 8u32), (4, 8)] {
        for t in 0..k {
            let t0 = Instant::now();
            let r = binforms::check_square_h(t, k, n, budget).unwrap();
            out.push(timed(r, t0));
        }
    }

    // combinatorial identities
    let t0 = Instant::now();
    let mut ok = true;
    for n in 0..=12u32 {
        for k in 1..=n.max(1) {
            for m in 0..=n {
                ok &= binforms::check_comb(k, m, n);
            }
        }
    }
    out.push(timed(
        VerificationReport::new("binforms", "comb(k,m<=N<=12)", "lem:comb", status_of(ok)),
        t0,
    ));
    let t0 = Instant::now();
    let mut ok = true;
    for k in 1..=6u32 {
        for r in 1..=4 {
            for l in 0..k {
                ok &= binforms::check_comb2(k, r, l);
            }
        }
    }
    out.push(timed(
        VerificationReport::new("binforms", "comb2(k<=6,r<=4)", "lem:comb2", status_of(ok)),
        t0,
    ));

    // affine cone cross-check
    let t0 = Instant::now();
    let t2 = VariableTable::unweighted(&["t0", "t1"]);
    let target = parse_poly(&t2, "72*(t0+t1)^3*t0*t1 - 384*(t0+t1)*(t0*t1)^2").unwrap();
    let got = binforms::affine_cone_class(6, 6).unwrap();
    let conv = binforms::cone_convention().unwrap();
    out.push(timed(
        VerificationReport::new(
            "binforms",
            "affine_cone(6,6)",
            "lem:a-5-0",
            status_of(got == target),
        )
        .with_witness(vec![
            format!("class = {got}"),
            format!(
                "convention: sign={} eps={} w={} (winners {:?})",
                conv.sign, conv.eps, conv.w, conv.winners
            ),
        ]),
        t0,
    ));

    // cone symmetry/homogeneity sweep
    let t0 = Instant::now();
    let mut ok = true;
    let mut witness = Vec::new();
    for n in 2..=max_n {
        for k in 2..=n {
            if k_filter.is_some_and(|kf| kf != k) {
                continue;
            }
            let c = binforms::affine_cone_class(k, n).unwrap();
            let hom = c.is_zero() || c.is_homogeneous_of_degree((k - 1) as u64);
            let i0 = t2.index_of("t0").unwrap();
            let i1 = t2.index_of("t1").unwrap();
            let swapped = GradedPoly::from_terms(
                &t2,
                c.terms().map(|(m, coef)| {
                    let mut e = m.0.clone();
                    e.swap(i0, i1);
                    (Monomial(e), coef.clone())
                }),
            );
            let sym = swapped == c;
            ok &= hom && sym;
            witness.push(format!("(k={k},N={n}): homogeneous={hom} symmetric={sym}"));
        }
    }
    out.push(timed(
        VerificationReport::new(
            "binforms",
            "affine_cone_sweep",
            "rem:gener",
            status_of(ok),
        )
        .with_witness(witness),
        t0,
    ));

    out
}

/// How the flagged variants are chosen: exhaustive search, or a fixed
/// assignment like `fixed:k1(1)=derived,d11c=section3,kh=minus`.
pub enum VariantMode {
    Search,
    Fixed(std::collections::BTreeMap<String, String>),
}

impl VariantMode {
    pub fn parse(text: &str) -> Result<Self, String> {
        if text == "search" {
            return Ok(VariantMode::Search);
        }
        if let Some(rest) = text.strip_prefix("fixed:") {
            let mut map = std::collections::BTreeMap::new();
            for part in rest.split(',') {
                let (rel, var) = part
                    .split_once('=')
                    .ok_or_else(|| format!("expected relation=variant, got `{part}`"))?;
                map.insert(rel.to_string(), var.to_string());
            }
            return Ok(VariantMode::Fixed(map));
        }
        Err(format!("expected `search` or `fixed:<assignments>`, got `{text}`"))
    }
}

/// Checksum, literal-typo flags, variant resolution and the degree audit of
/// the resolved presentation.
pub fn verify_presentation(mode: &VariantMode) -> ReportSet {
    let mut out = ReportSet::default();

    let t0 = Instant::now();
    let loaded = m3bar::load_presentation();
    match &loaded {
        Ok(_) => out.push(timed(
            VerificationReport::new(
                "m3bar",
                "data_checksum",
                "rem:relations-Mbar",
                CheckStatus::Pass,
            )
            .with_witness(vec![format!("sha256 {}", m3bar::DATA_SHA256)]),
            t0,
        )),
        Err(e) => {
            out.push(timed(
                VerificationReport::new(
                    "m3bar",
                    "data_checksum",
                    "rem:relations-Mbar",
                    CheckStatus::Fail,
                )
                .with_witness(vec![format!("{e}")]),
                t0,
            ));
            return out;
        }
    }
    let p = loaded.unwrap();

    // the literal reading must exhibit exactly the documented inhomogeneities
    let t0 = Instant::now();
    let literal_audit = m3bar::audit_degrees(&p);
    let text = literal_audit.witness.join("\n");
    let flags_ok = !literal_audit.passed()
        && text.contains("k1(1) [literal]: inhomogeneous")
        && text.contains("d11c [literal]: inhomogeneous");
    out.push(timed(
        VerificationReport::new(
            "m3bar",
            "literal_reading_flags",
            "rem:relations-Mbar",
            status_of(flags_ok),
        )
        .with_witness(literal_audit.witness.clone()),
        t0,
    ));

    let t0 = Instant::now();
    let resolution = match mode {
        VariantMode::Search => m3bar::resolve_variants(&p).map(|(r, o, rep)| (r, Some(o), rep)),
        VariantMode::Fixed(ids) => {
            let mut assignment = std::collections::BTreeMap::new();
            let mut bad = Vec::new();
            for r in &p.relations {
                if let Some(want) = ids.get(&r.name) {
                    match r.variants.iter().position(|v| &v.id == want) {
                        Some(i) => {
                            assignment.insert(r.name.clone(), i);
                        }
                        None => bad.push(format!("{}: no variant `{want}`", r.name)),
                    }
                }
            }
            if bad.is_empty() {
                let fixed = p.with_assignment(&assignment);
                let rep = VerificationReport::new(
                    "m3bar",
                    "resolve_variants",
                    "theo:chow-ring-m3bar",
                    CheckStatus::Pass,
                )
                .with_witness(vec![format!("fixed assignment: {ids:?}")]);
                Ok((fixed, None, rep))
            } else {
                Err(m3bar::M3barError::Parse(bad.join("; ")))
            }
        }
    };
    match resolution {
        Ok((resolved, outcomes, mut report)) => {
            if let Some(outcomes) = &outcomes {
                let survivors = outcomes.iter().filter(|o| o.survives).count();
                report
                    .witness
                    .push(format!("resolved assignment selected from {survivors} survivor(s)"));
            }
            out.push(timed(report, t0));

            let t1 = Instant::now();
            out.push(timed(m3bar::audit_degrees(&resolved), t1));

            let t2 = Instant::now();
            let gens = resolved.polynomials();
            let expect = vec![1, 3, 7, 10, 7, 3, 1];
            let dim_report = match ideals::hilbert_function(&gens, &resolved.table, 6) {
                Ok(hil) => VerificationReport::new(
                    "m3bar",
                    "quotient_dimensions",
                    "theo:chow-ring-m3bar",
                    status_of(hil == expect),
                )
                .with_witness(vec![format!("hilbert {hil:?} (expected {expect:?})")]),
                Err(e) => VerificationReport::new(
                    "m3bar",
                    "quotient_dimensions",
                    "theo:chow-ring-m3bar",
                    CheckStatus::Fail,
                )
                .with_witness(vec![format!("{e}")]),
            };
            out.push(timed(dim_report, t2));
        }
        Err(e) => out.push(timed(
            VerificationReport::new(
                "m3bar",
                "resolve_variants",
                "theo:chow-ring-m3bar",
                CheckStatus::Fail,
            )
            .with_witness(vec![format!("{e}")]),
            t0,
        )),
    }
    out
}

/// Elimination primes, the nine minimal generators, and ideal equality with
/// the pulled-back simplification.
pub fn simplify_rational(
    budget: u64,
    degree_bound: u32,
) -> (ReportSet, Option<m3bar::SimplifiedIdeal>) {
    let mut out = ReportSet::default();
    let p = match m3bar::load_presentation() {
        Ok(p) => p,
        Err(e) => {
            out.push(
                VerificationReport::new("m3bar", "load", "rem:relations-Mbar", CheckStatus::Fail)
                    .with_witness(vec![format!("{e}")]),
            );
            return (out, None);
        }
    };
    let (resolved, _, _) = match m3bar::resolve_variants(&p) {
        Ok(r) => r,
        Err(e) => {
            out.push(
                VerificationReport::new(
                    "m3bar",
                    "resolve_variants",
                    "theo:chow-ring-m3bar",
                    CheckStatus::Fail,
                )
                .with_witness(vec![format!("{e}")]),
            );
            return (out, None);
        }
    };
    let t0 = Instant::now();
    let s = m3bar::rational_simplify(&resolved).unwrap();
    let primes_ok = s.steps[0].primes_inverted == [2, 3].into()
        && s.steps[1].primes_inverted == [2, 3].into()
        && s.steps[2].primes_inverted.contains(&7);
    out.push(timed(
        VerificationReport::new(
            "m3bar",
            "elimination_steps",
            "rem:relations-Mbar; sec:4",
            status_of(primes_ok),
        )
        .with_witness(
            s.steps
                .iter()
                .map(|st| {
                    format!(
                        "{} eliminates {} (coefficient {}, primes {:?}): {} := {}",
                        st.relation,
                        st.variable,
                        st.coefficient,
                        st.primes_inverted,
                        st.variable,
                        st.substitution
                    )
                })
                .collect(),
        ),
        t0,
    ));

    let t0 = Instant::now();
    let total: usize = s.minimal_counts.values().sum();
    let mut witness = vec![
        format!("counts by degree: {:?}", s.minimal_counts),
        format!("total: {total} (expected 9)"),
        format!("hilbert of the quotient: {:?}", s.hilbert),
    ];
    if degree_bound > 6 {
        let polys: Vec<GradedPoly> = s.generators.iter().map(|(_, g)| g.clone()).collect();
        if let Ok(ext) = ideals::hilbert_function(&polys, &s.table, degree_bound as u64) {
            witness.push(format!("hilbert through degree {degree_bound}: {ext:?}"));
        }
    }
    out.push(timed(
        VerificationReport::new(
            "m3bar",
            "minimal_generators",
            "sec:4",
            status_of(total == 9),
        )
        .with_witness(witness),
        t0,
    ));

    // the fifteen relations and the pulled-back simplified ideal agree
    let t0 = Instant::now();
    let keep = ["lambda1", "H", "delta1", "delta11"];
    let mut pulled: Vec<GradedPoly> = Vec::new();
    for (_, g) in &s.generators {
        let mut q = GradedPoly::zero(&resolved.table);
        for (m, c) in g.terms() {
            let mut exps = vec![0u32; resolved.table.len()];
            for (j, name) in keep.iter().enumerate() {
                exps[resolved.table.index_of(name).unwrap()] = m.exp(j);
            }
            q.add_term(Monomial(exps), c.clone());
        }
        pulled.push(q);
    }
    for name in ["A2", "d1c", "A3"] {
        pulled.push(resolved.relation(name).unwrap().poly().clone());
    }
    let order = ideals::MonomialOrder::GradedRevLex;
    let eq = ideals::ideal_equal(&resolved.polynomials(), &pulled, &order, budget);
    match eq {
        Ok(equal) => out.push(timed(
            VerificationReport::new("m3bar", "ideal_equality", "sec:4", status_of(equal)),
            t0,
        )),
        Err(ideals::IdealError::BudgetExceeded { budget, context }) => out.push(timed(
            VerificationReport::new("m3bar", "ideal_equality", "sec:4", CheckStatus::Inconclusive)
                .with_witness(vec![format!("budget {budget} exceeded in {context}")]),
            t0,
        )),
        Err(e) => out.push(timed(
            VerificationReport::new("m3bar", "ideal_equality", "sec:4", CheckStatus::Fail)
                .with_witness(vec![format!("{e}")]),
            t0,
        )),
    }

    (out, Some(s))
}

/// Inverse verification, transported shape {3:3, 4:6}, Hilbert agreement and
/// the round trip.
pub fn compare_faber(
    budget: u64,
    degree_bound: u32,
) -> (ReportSet, Option<faber::FaberIdeal>) {
    let (mut out, simplified) = simplify_rational(budget, degree_bound);
    let Some(s) = simplified else {
        return (out, None);
    };

    let t0 = Instant::now();
    let c = faber::build_maps().unwrap();
    let inv = faber::verify_inverse(&c).unwrap();
    out.push(timed(
        VerificationReport::new("faber", "inverse_maps", "sec:4", status_of(inv)),
        t0,
    ));

    let t0 = Instant::now();
    let f = faber::faber_ideal(&s).unwrap();
    let expected: BTreeMap<u64, usize> = [(3, 3), (4, 6)].into();
    out.push(timed(
        VerificationReport::new(
            "faber",
            "transported_counts",
            "sec:4",
            status_of(f.minimal_counts == expected),
        )
        .with_witness(vec![format!(
            "minimal generators by degree: {:?} (expected {expected:?})",
            f.minimal_counts
        )]),
        t0,
    ));

    let t0 = Instant::now();
    out.push(timed(
        VerificationReport::new(
            "faber",
            "hilbert_agreement",
            "sec:4",
            status_of(f.hilbert_source == f.hilbert_target),
        )
        .with_witness(vec![
            format!("source quotient: {:?}", f.hilbert_source),
            format!("target quotient: {:?}", f.hilbert_target),
        ]),
        t0,
    ));

    let t0 = Instant::now();
    match faber::round_trip_ideal_equal(&s, &f, budget) {
        Ok(eq) => out.push(timed(
            VerificationReport::new("faber", "round_trip", "sec:4", status_of(eq)),
            t0,
        )),
        Err(e) => out.push(timed(
            VerificationReport::new("faber", "round_trip", "sec:4", CheckStatus::Fail)
                .with_witness(vec![format!("{e}")]),
            t0,
        )),
    }
    (out, Some(f))
}

/// Calibration record, open-stratum classes, cone classes and the stratum
/// classes in the symmetric basis; also returns the emitted class text.
pub fn emit_classes(max_n: u32) -> (ReportSet, String) {
    let mut out = ReportSet::default();
    let mut text = String::new();

    let t0 = Instant::now();
    let record = chern::calibrate_lambda_convention();
    match record {
        Ok(rec) => {
            out.push(timed(
                VerificationReport::new(
                    "chern",
                    "calibration",
                    "rem:relations-Mbar [A2]",
                    CheckStatus::Pass,
                )
                .with_witness(vec![
                    format!(
                        "convention: dual_fiber={} lambda_dual={}",
                        rec.convention.dual_fiber, rec.convention.lambda_dual
                    ),
                    format!("stage one survivors: {}", rec.stage_one.len()),
                    format!("stage two survivors: {}", rec.stage_two.len()),
                ]),
                t0,
            ));
            text.push_str(&format!(
                "calibration dual_fiber={} lambda_dual={}\n",
                rec.convention.dual_fiber, rec.convention.lambda_dual
            ));
        }
        Err(e) => {
            out.push(timed(
                VerificationReport::new(
                    "chern",
                    "calibration",
                    "rem:relations-Mbar [A2]",
                    CheckStatus::Fail,
                )
                .with_witness(vec![format!("{e}")]),
                t0,
            ));
            return (out, text);
        }
    }

    let t0 = Instant::now();
    let mut ok = true;
    let mut witness = Vec::new();
    for n in 2..=7u32 {
        match chern::an_open_class(n) {
            Ok(c) => {
                let tag = if n == 5 { " (inspection only)" } else { "" };
                witness.push(format!("A{n} open stratum{tag}: {c}"));
                text.push_str(&format!("an_open_class {n} {c}\n"));
            }
            Err(e) => {
                ok = false;
                witness.push(format!("A{n}: {e}"));
            }
        }
    }
    out.push(timed(
        VerificationReport::new("chern", "open_stratum_classes", "sec:3", status_of(ok))
            .with_witness(witness),
        t0,
    ));

    let t0 = Instant::now();
    let mut witness = Vec::new();
    for n in 2..=max_n {
        for k in 2..=n {
            let c = binforms::affine_cone_class(k, n).unwrap();
            witness.push(format!("cone(k={k},N={n}): {c}"));
            text.push_str(&format!("affine_cone {k} {n} {c}\n"));
        }
    }
    out.push(timed(
        VerificationReport::new("binforms", "cone_classes", "rem:gener", CheckStatus::Pass)
            .with_witness(witness),
        t0,
    ));

    // hyperelliptic stratum classes H_{k-1} in the symmetric basis
    let t0 = Instant::now();
    let mut ok = true;
    let mut witness = Vec::new();
    for k in 3..=8u32 {
        let c = binforms::push_pi1_unit(k, 8).unwrap();
        match binforms::to_gl2_basis(&c) {
            Ok(g) => {
                witness.push(format!("H_{} = {g}", k - 1));
                text.push_str(&format!("hyperelliptic_stratum {} {g}\n", k - 1));
            }
            Err(e) => {
                ok = false;
                witness.push(format!("H_{}: {e}", k - 1));
            }
        }
    }
    out.push(timed(
        VerificationReport::new(
            "binforms",
            "hyperelliptic_stratum_classes",
            "rem:ar-vis-2",
            status_of(ok),
        )
        .with_witness(witness),
        t0,
    ));

    (out, text)
}

/// Randomized certificate replays and the monomial-ideal oracle for the
/// graded counts, with a fixed seed for reproducibility.
pub fn engine_soundness(replays: u32) -> ReportSet {
    let mut out = ReportSet::default();
    let t = VariableTable::unweighted(&["x", "y", "z"]);
    let order = ideals::MonomialOrder::GradedRevLex;
    let mut rng = ChaCha8Rng::seed_from_u64(20240811);
    let budget = 5_000_000u64;

    let t0 = Instant::now();
    let mut replay_ok = 0u32;
    let mut buchberger_ok = true;
    let mut done = 0u32;
    while done < replays {
        let gens: Vec<GradedPoly> = (0..rng.gen_range(1..4))
            .map(|_| random_poly(&mut rng, &t, 3, 3))
            .filter(|p: &GradedPoly| !p.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let basis = ideals::groebner_basis(&gens, &order, budget).unwrap();
        if done % 50 == 0 && !basis.audit_buchberger(budget).unwrap() {
            buchberger_ok = false;
        }
        let batch = 10.min(replays - done);
        for _ in 0..batch {
            let q = random_poly(&mut rng, &t, 4, 4);
            let cert = ideals::membership_against(&q, &gens, &basis, budget).unwrap();
            if cert.replay(&q, &gens) {
                replay_ok += 1;
            }
            done += 1;
        }
    }
    out.push(timed(
        VerificationReport::new(
            "ideals",
            "certificate_replays",
            "engine soundness",
            status_of(replay_ok == replays && buchberger_ok),
        )
        .with_witness(vec![format!("{replay_ok}/{replays} replays exact")]),
        t0,
    ));

    // minimal generators vs the divisibility oracle on monomial ideals
    let t0 = Instant::now();
    let mut ok = true;
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
            .map(|m| GradedPoly::from_terms(&t, [(m.clone(), rat(1, 1))]))
            .collect();
        let mut oracle: BTreeMap<u64, usize> = BTreeMap::new();
        for m in &monos {
            if monos.iter().all(|o| o == m || m.div(o).is_none()) {
                *oracle.entry(m.weighted_degree(&t)).or_insert(0) += 1;
            }
        }
        let counts = ideals::minimal_generators_by_degree(&gens, &t, 5).unwrap();
        ok &= counts == oracle;
    }
    out.push(timed(
        VerificationReport::new(
            "ideals",
            "graded_counts_vs_monomial_oracle",
            "engine soundness",
            status_of(ok),
        ),
        t0,
    ));

    out
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
        let num = rng.gen_range(-6i64..7);
        let den = rng.gen_range(1i64..4);
        p.add_term(Monomial(exps), rat(num, den));
    }
    p
}
