//! Chern/Segre calculus for the rank-2/3 representations that govern the
//! plane-quartic stratum: symmetric-power Chern classes by the splitting
//! principle, Segre expansion, the projective-bundle pushforward to the
//! quartic space, and the singular-stratum classes it produces.

use gradedpoly::{rat, rat_int, GradedPoly, Monomial, Rational, VariableTable, WeightedDegree};
use num_traits::One;
use once_cell::sync::OnceCell;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ChernError {
    #[error("unsupported rank {0} (only 2 and 3)")]
    UnsupportedRank(u32),
    #[error("parameter out of range: {0}")]
    Param(String),
    #[error("calibration found {0} consistent conventions instead of exactly one")]
    CalibrationAmbiguous(usize),
    #[error(transparent)]
    Poly(#[from] gradedpoly::PolyError),
}

/// The working table: Chern classes of the rank-3 representation plus the
/// two hyperplane classes (h on the quartic space, k on the point plane).
pub fn chk_table() -> Arc<VariableTable> {
    VariableTable::new(&[("c1", 1), ("c2", 2), ("c3", 3), ("h", 1), ("k", 1)])
}

/// Output table for stratum classes in the Chern classes alone.
pub fn c_table() -> Arc<VariableTable> {
    VariableTable::new(&[("c1", 1), ("c2", 2), ("c3", 3)])
}

/// A polynomial in Chern classes (optionally h and k).
pub type ChernVector = GradedPoly;

/// A bundle given by rank and total Chern class (constant term 1).
#[derive(Debug, Clone, PartialEq)]
pub struct BundleDescriptor {
    pub rank: u32,
    pub total_chern: ChernVector,
}

impl BundleDescriptor {
    pub fn new(rank: u32, total_chern: ChernVector) -> Self {
        assert!(
            total_chern.constant_term() == Rational::one(),
            "total Chern class must start with 1"
        );
        BundleDescriptor { rank, total_chern }
    }

    /// The standard rank-3 representation with c = 1 + c1 + c2 + c3.
    pub fn standard3() -> Self {
        let t = chk_table();
        let c = GradedPoly::one(&t)
            .add(&GradedPoly::var(&t, "c1").unwrap())
            .add(&GradedPoly::var(&t, "c2").unwrap())
            .add(&GradedPoly::var(&t, "c3").unwrap());
        BundleDescriptor::new(3, c)
    }

    /// The dual of the standard rank-3 representation: signs alternate.
    pub fn standard3_dual() -> Self {
        let t = chk_table();
        let c = GradedPoly::one(&t)
            .sub(&GradedPoly::var(&t, "c1").unwrap())
            .add(&GradedPoly::var(&t, "c2").unwrap())
            .sub(&GradedPoly::var(&t, "c3").unwrap());
        BundleDescriptor::new(3, c)
    }
}

/// Weighted-degree-d component of a polynomial.
fn degree_part(p: &GradedPoly, d: u64) -> GradedPoly {
    GradedPoly::from_terms(
        p.table(),
        p.terms().filter_map(|(m, c)| {
            if m.weighted_degree(p.table()) == d {
                Some((m.clone(), c.clone()))
            } else {
                None
            }
        }),
    )
}

/// Rewrite a symmetric polynomial in root variables as a polynomial in the
/// elementary symmetric classes c1..c_rank (Gauss descent on the
/// lexicographically leading exponent).
fn symmetric_to_chern(p: &GradedPoly, roots: &Arc<VariableTable>, out: &Arc<VariableTable>) -> GradedPoly {
    let rank = roots.len();
    let elem: Vec<GradedPoly> = (0..=rank)
        .map(|j| {
            gradedpoly::elementary_symmetric_indices(roots, j, &(0..rank).collect::<Vec<_>>())
        })
        .collect();
    let mut work = p.clone();
    let mut acc = GradedPoly::zero(out);
    while !work.is_zero() {
        let (m, c) = work
            .terms()
            .max_by(|(a, _), (b, _)| a.0.cmp(&b.0))
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nonzero");
        // leading exponent of a symmetric polynomial is weakly decreasing
        let e = &m.0;
        debug_assert!(e.windows(2).all(|w| w[0] >= w[1]), "symmetric input");
        // c * prod elem_j^(e_j - e_{j+1})
        let mut sym = GradedPoly::constant(roots, c.clone());
        let mut mono = Monomial::one(out.len());
        for j in 0..rank {
            let next = if j + 1 < rank { e[j + 1] } else { 0 };
            let pow = e[j] - next;
            if pow > 0 {
                sym = sym.mul(&elem[j + 1].pow(pow));
                mono.0[j] += pow;
            }
        }
        work = work.sub(&sym);
        acc.add_term(mono, c);
    }
    acc
}

/// Total Chern class of Sym^d(E^dual) for E of the given rank, computed by
/// the splitting principle, expressed in c1..c_rank of E (embedded in the
/// shared working table).
pub fn sym_dual_chern(d: u32, rank: u32) -> Result<ChernVector, ChernError> {
    if rank != 2 && rank != 3 {
        return Err(ChernError::UnsupportedRank(rank));
    }
    if d > 8 {
        return Err(ChernError::Param(format!("need d <= 8, got {d}")));
    }
    let names: Vec<&str> = ["a1", "a2", "a3"][..rank as usize].to_vec();
    let roots = VariableTable::unweighted(&names);
    // multisets i_1 + ... + i_rank = d
    let mut product = GradedPoly::one(&roots);
    let mut stack = vec![0u32; rank as usize];
    fn rec(
        pos: usize,
        rem: u32,
        stack: &mut Vec<u32>,
        roots: &Arc<VariableTable>,
        product: &mut GradedPoly,
    ) {
        if pos == stack.len() {
            if rem == 0 {
                // factor 1 - sum_j stack_j * a_j
                let mut f = GradedPoly::one(roots);
                for (j, mult) in stack.iter().enumerate() {
                    if *mult > 0 {
                        f = f.sub(
                            &GradedPoly::var_index(roots, j)
                                .scale(&rat_int(*mult as i64)),
                        );
                    }
                }
                *product = product.mul(&f);
            }
            return;
        }
        for v in 0..=rem {
            stack[pos] = v;
            rec(pos + 1, rem - v, stack, roots, product);
        }
        stack[pos] = 0;
    }
    rec(0, d, &mut stack, &roots, &mut product);

    // rewrite in elementary symmetric classes over a rank-sized c-table,
    // then embed into the shared 5-variable table
    let sym_out = if rank == 3 {
        VariableTable::new(&[("c1", 1), ("c2", 2), ("c3", 3)])
    } else {
        VariableTable::new(&[("c1", 1), ("c2", 2)])
    };
    let in_sym = symmetric_to_chern(&product, &roots, &sym_out);
    let t = chk_table();
    let mut out = GradedPoly::zero(&t);
    for (m, c) in in_sym.terms() {
        let mut mono = Monomial::one(t.len());
        for j in 0..sym_out.len() {
            mono.0[j] = m.exp(j);
        }
        out.add_term(mono, c.clone());
    }
    Ok(out)
}

/// Segre classes s_0..s_upto of a bundle: the inverse of the total Chern
/// class, graded piece by graded piece; c(E) * s(E) = 1 exactly.
pub fn segre(bundle: &BundleDescriptor, upto: u64) -> Vec<ChernVector> {
    let t = bundle.total_chern.table().clone();
    let mut s: Vec<GradedPoly> = vec![GradedPoly::one(&t)];
    for d in 1..=upto {
        // s_d = - sum_{j=1..d} c_j s_{d-j}
        let mut acc = GradedPoly::zero(&t);
        for j in 1..=d {
            let cj = degree_part(&bundle.total_chern, j);
            if cj.is_zero() {
                continue;
            }
            acc = acc.add(&cj.mul(&s[(d - j) as usize]));
        }
        s.push(acc.neg());
    }
    s
}

/// Reduce all powers k^e with e >= 3 via the monic Grothendieck relation
/// k^3 + e1 k^2 + e2 k + e3 = 0 of the rank-3 fiber.
fn reduce_k(p: &GradedPoly, fiber: &BundleDescriptor) -> GradedPoly {
    let t = p.table().clone();
    let k_idx = t.index_of("k").expect("k in table");
    let e1 = degree_part(&fiber.total_chern, 1);
    let e2 = degree_part(&fiber.total_chern, 2);
    let e3 = degree_part(&fiber.total_chern, 3);
    let k = GradedPoly::var(&t, "k").expect("k");
    // k^3 = -(e1 k^2 + e2 k + e3)
    let k3 = e1.mul(&k.pow(2)).add(&e2.mul(&k)).add(&e3).neg();
    let mut work = p.clone();
    loop {
        let maxdeg = work.terms().map(|(m, _)| m.exp(k_idx)).max().unwrap_or(0);
        if maxdeg <= 2 {
            return work;
        }
        let mut slice = GradedPoly::zero(&t);
        for (m, c) in work.terms() {
            if m.exp(k_idx) == maxdeg {
                let mut rest = m.clone();
                rest.0[k_idx] = 0;
                slice.add_term(rest, c.clone());
            }
        }
        let shift = Monomial::var(t.len(), k_idx, maxdeg - 3);
        let replaced = slice.mul(&k3).mul_term(&shift, &Rational::one());
        let removed = slice.mul_term(&Monomial::var(t.len(), k_idx, maxdeg), &Rational::one());
        work = work.sub(&removed).add(&replaced);
    }
}

/// Fiber integration over the plane bundle: pi_*(k^2) = 1, pi_*(k) = 0,
/// pi_*(1) = 0, extended linearly after k-reduction. pi_*(k^{2+i}) = s_i
/// holds by construction.
pub fn projbundle_pushforward(p: &ChernVector, fiber: &BundleDescriptor) -> ChernVector {
    assert_eq!(fiber.rank, 3, "the point-plane fiber has rank 3");
    let t = p.table().clone();
    let k_idx = t.index_of("k").expect("k in table");
    let reduced = reduce_k(p, fiber);
    let mut out = GradedPoly::zero(&t);
    for (m, c) in reduced.terms() {
        if m.exp(k_idx) == 2 {
            let mut rest = m.clone();
            rest.0[k_idx] = 0;
            out.add_term(rest, c.clone());
        }
    }
    out
}

/// The fundamental class of the locus of plane quartics with a marked
/// singular point that is an A-singularity of order >= 2.
pub fn x2_class() -> ChernVector {
    let t = chk_table();
    let p = |s: &str| gradedpoly::parse_poly(&t, s).expect("literal");
    p("2*(h + k - c1)*(h + 4*k)*((h + 3*k)^2 - (c1 + k)*(h + 2*k) + c2)")
}

/// The linear factor cutting the order-(m) stratum inside the order-(m-1)
/// one. The h-coefficient is the torus weight of the degree-m coefficient of
/// the square-completed branch, which lifts uniquely to (m+2)/2.
pub fn stratum_factor(m: u32) -> ChernVector {
    let t = chk_table();
    let c1 = GradedPoly::var(&t, "c1").unwrap();
    let h = GradedPoly::var(&t, "h").unwrap();
    let k = GradedPoly::var(&t, "k").unwrap();
    c1.scale(&rat_int(-(m as i64)))
        .add(&h.scale(&rat(m as i64 + 2, 2)))
        .add(&k.scale(&rat_int(4 - m as i64)))
}

/// [X_n]: the class of quartics with a marked A_{>=n} point, n = 2..7.
pub fn xn_class(n: u32) -> Result<ChernVector, ChernError> {
    if !(2..=7).contains(&n) {
        return Err(ChernError::Param(format!("need 2 <= n <= 7, got {n}")));
    }
    let mut out = x2_class();
    for m in 3..=n {
        out = out.mul(&stratum_factor(m));
    }
    Ok(out)
}

/// Convention bits pinned by calibration: which dual twist the plane fiber
/// carries (the sign pattern of the Grothendieck relation) and whether the
/// lambda classes are Chern classes of the bundle or of its dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Convention {
    /// false: e_i = c_i; true: e_i = (-1)^i c_i
    pub dual_fiber: bool,
    /// substitute c_i -> (-1)^i c_i in the final class
    pub lambda_dual: bool,
}

/// Calibration outcome: the surviving convention and the audit trail of the
/// two selection stages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConventionRecord {
    pub convention: Convention,
    /// conventions surviving the degree-2 anchor alone
    pub stage_one: Vec<Convention>,
    /// conventions surviving both anchors
    pub stage_two: Vec<Convention>,
}

static CONVENTION: OnceCell<ConventionRecord> = OnceCell::new();

fn fiber_for(conv: Convention) -> BundleDescriptor {
    if conv.dual_fiber {
        BundleDescriptor::standard3_dual()
    } else {
        BundleDescriptor::standard3()
    }
}

fn an_open_with(n: u32, conv: Convention) -> Result<ChernVector, ChernError> {
    let t = chk_table();
    let fiber = fiber_for(conv);
    let pushed = projbundle_pushforward(&xn_class(n)?, &fiber);
    // set h = c1 (the projectivization identification)
    let h_idx = t.index_of("h")?;
    let c1 = GradedPoly::var(&t, "c1")?;
    let mut out = pushed.substitute_var(h_idx, &c1);
    if conv.lambda_dual {
        // c_i -> (-1)^i c_i
        let c2 = GradedPoly::var(&t, "c2")?;
        let c3 = GradedPoly::var(&t, "c3")?;
        let c1_idx = t.index_of("c1")?;
        let c3_idx = t.index_of("c3")?;
        out = out.substitute_var(c1_idx, &c1.neg());
        out = out.substitute_var(c3_idx, &c3.neg());
        let _ = c2;
    }
    // move to the three-variable output table
    let out_t = c_table();
    let mut shrunk = GradedPoly::zero(&out_t);
    for (m, c) in out.terms() {
        debug_assert_eq!(m.exp(3), 0, "h eliminated");
        debug_assert_eq!(m.exp(4), 0, "k eliminated");
        shrunk.add_term(Monomial(vec![m.exp(0), m.exp(1), m.exp(2)]), c.clone());
    }
    Ok(shrunk)
}

fn degree2_anchor() -> ChernVector {
    gradedpoly::parse_poly(&c_table(), "24*(c1^2 - 2*c2)").expect("literal")
}

fn degree3_anchor() -> ChernVector {
    gradedpoly::parse_poly(&c_table(), "36*c1^3 - 92*c1*c2 + 56*c3").expect("literal")
}

/// Search the finite convention set against the degree-2 anchor; the anchor
/// is even in the odd Chern classes, so the surviving pair is disambiguated
/// with the degree-3 anchor. Exactly one convention must survive. Idempotent:
/// the record is computed once and then returned as stored.
pub fn calibrate_lambda_convention() -> Result<&'static ConventionRecord, ChernError> {
    if let Some(r) = CONVENTION.get() {
        return Ok(r);
    }
    let all = [
        Convention { dual_fiber: false, lambda_dual: false },
        Convention { dual_fiber: false, lambda_dual: true },
        Convention { dual_fiber: true, lambda_dual: false },
        Convention { dual_fiber: true, lambda_dual: true },
    ];
    let a2 = degree2_anchor();
    let stage_one: Vec<Convention> = all
        .iter()
        .copied()
        .filter(|cv| an_open_with(2, *cv).map(|v| v == a2).unwrap_or(false))
        .collect();
    let a3 = degree3_anchor();
    let stage_two: Vec<Convention> = stage_one
        .iter()
        .copied()
        .filter(|cv| an_open_with(3, *cv).map(|v| v == a3).unwrap_or(false))
        .collect();
    if stage_two.len() != 1 {
        return Err(ChernError::CalibrationAmbiguous(stage_two.len()));
    }
    let record = ConventionRecord {
        convention: stage_two[0],
        stage_one,
        stage_two: stage_two.clone(),
    };
    let _ = CONVENTION.set(record);
    Ok(CONVENTION.get().expect("just set"))
}

/// The fundamental class of the A_n stratum on the open quartic locus,
/// under the calibrated convention, in c1, c2, c3. The n = 5 value carries
/// an unremoved separating-locus contribution and is for inspection only.
pub fn an_open_class(n: u32) -> Result<ChernVector, ChernError> {
    let record = calibrate_lambda_convention()?;
    let out = an_open_with(n, record.convention)?;
    let primes = out.denominator_primes();
    if !primes.iter().all(|p| *p == 2 || *p == 3) {
        return Err(ChernError::Param(format!(
            "stratum class has unexpected denominator primes {primes:?}"
        )));
    }
    match out.weighted_degree() {
        WeightedDegree::Homogeneous(d) if d == n as u64 => {}
        WeightedDegree::ZeroPolynomial => {}
        other => {
            return Err(ChernError::Param(format!(
                "stratum class has wrong degree: {other:?}"
            )))
        }
    }
    Ok(out)
}
