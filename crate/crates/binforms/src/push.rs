use crate::ring::{tauh_table, DiagonalRing, EquivariantClass, ProjectiveRing};
use crate::BinformsError;
use gradedpoly::{
    binomial_exact, elementary_symmetric_indices, factorial_exact, GradedPoly, Rational,
};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// h_i = h0 + i*tau over the internal (tau, h0) table.
pub(crate) fn h_i_tauh(i: u32) -> GradedPoly {
    let t = tauh_table();
    let h0 = GradedPoly::var(&t, "h0").expect("h0");
    let tau = GradedPoly::var(&t, "tau").expect("tau");
    h0.add(&tau.scale(&Rational::from_integer((i as i64).into())))
}

/// h_0 h_1 ... h_{s-1} over (tau, h0); the empty product for s = 0.
pub(crate) fn h_string_tauh(s: u32) -> GradedPoly {
    let t = tauh_table();
    let mut out = GradedPoly::one(&t);
    for i in 0..s {
        out = out.mul(&h_i_tauh(i));
    }
    out
}

pub(crate) fn tau_pow(e: u32) -> GradedPoly {
    let t = tauh_table();
    GradedPoly::var(&t, "tau").expect("tau").pow(e)
}

/// The defining relation of P(A(N)) written in (tau, h0):
/// p_N = h_0 h_1 ... h_N.
pub(crate) fn p_n_tauh(n: u32) -> GradedPoly {
    h_string_tauh(n + 1)
}

/// alpha_l^{(k,d)} = sum over j_1+..+j_d = l with 0 <= j_s <= k-1 of
/// prod binom(k, j_s): the multinomial weight of the diagonal blocks.
fn alpha_coefficient(l: u32, k: u32, d: u32) -> BigInt {
    fn rec(pos: u32, rem: i64, k: u32, d: u32, acc: &BigInt, total: &mut BigInt) {
        if pos == d {
            if rem == 0 {
                *total += acc;
            }
            return;
        }
        for j in 0..=(k - 1).min(rem.max(0) as u32) {
            let c = binomial_exact(k as i64, j as i64);
            rec(pos + 1, rem - j as i64, k, d, &(acc * c), total);
        }
    }
    let mut total = BigInt::zero();
    rec(0, l as i64, k, d, &BigInt::one(), &mut total);
    total
}

fn validate_push_params(r: u32, m: i64, k: u32, n: u32) -> Result<(), BinformsError> {
    if k < 2 || k > n {
        return Err(BinformsError::Param(format!("need 2 <= k <= N, got k={k} N={n}")));
    }
    if r < 1 || r > n / k {
        return Err(BinformsError::Param(format!("need 1 <= r <= N/k, got r={r}")));
    }
    if m < -1 || m > (r as i64) - 1 {
        return Err(BinformsError::Param(format!("need -1 <= m <= r-1, got m={m}")));
    }
    Ok(())
}

pub(crate) fn push_pi_closed_tauh(r: u32, m: i64, k: u32, n: u32) -> Result<GradedPoly, BinformsError> {
    validate_push_params(r, m, k, n)?;
    let d = (r as i64 - (m + 1)) as u32;
    let t = tauh_table();
    let mut out = GradedPoly::zero(&t);
    for l in 0..=d * (k - 1) {
        let a = alpha_coefficient(l, k, d);
        let top = factorial_exact((n as i64 - (m + 1) * k as i64 - l as i64) as u64);
        let bot = factorial_exact((n - k * r) as u64) * factorial_exact(d as u64);
        let coef = Rational::new(a * top, bot);
        let s = ((m + 1) * k as i64 + l as i64) as u32;
        out = out.add(&h_string_tauh(s).mul(&tau_pow(d * (k - 1) - l)).scale(&coef));
    }
    Ok(out)
}

/// Closed-form pushforward of h_0...h_m (m = -1 meaning the unit) along the
/// k-th power multiplication map into P(A(N)).
pub fn push_pi_closed(r: u32, m: i64, k: u32, n: u32) -> Result<EquivariantClass, BinformsError> {
    let ring = ProjectiveRing::new(n);
    let raw = ring.from_tauh(&push_pi_closed_tauh(r, m, k, n)?)?;
    EquivariantClass::projective(&ring, &raw)
}

pub(crate) fn push_pi1_unit_tauh(k: u32, n: u32) -> Result<GradedPoly, BinformsError> {
    if k < 2 || k > n {
        return Err(BinformsError::Param(format!("need 2 <= k <= N, got k={k} N={n}")));
    }
    let t = tauh_table();
    let mut out = GradedPoly::zero(&t);
    for l in 0..k {
        let c = Rational::new(
            binomial_exact(k as i64, l as i64) * factorial_exact((n - l) as u64),
            factorial_exact((n - k) as u64),
        );
        out = out.add(&h_string_tauh(l).mul(&tau_pow(k - 1 - l)).scale(&c));
    }
    Ok(out)
}

/// pi_{1,*}(1): the class of forms with a root of multiplicity >= k.
pub fn push_pi1_unit(k: u32, n: u32) -> Result<EquivariantClass, BinformsError> {
    let ring = ProjectiveRing::new(n);
    let raw = ring.from_tauh(&push_pi1_unit_tauh(k, n)?)?;
    EquivariantClass::projective(&ring, &raw)
}

/// The hyperplane class h_i in ProjectiveRing(N).
pub fn h_class(i: u32, n: u32) -> Result<EquivariantClass, BinformsError> {
    let ring = ProjectiveRing::new(n);
    let raw = ring.h_linear_form(i)?;
    EquivariantClass::projective(&ring, &raw)
}

/// Small-diagonal class by the symmetric-function formula:
/// sum_{j=0..k-1} tau^{k-1-j} sigma_j(h_1..h_k) in DiagonalRing(k).
pub fn delta_small_diagonal(k: u32) -> Result<EquivariantClass, BinformsError> {
    if k < 2 {
        return Err(BinformsError::Param(format!("need k >= 2, got {k}")));
    }
    let ring = DiagonalRing::new(k);
    let idx: Vec<usize> = (1..=k)
        .map(|i| ring.table().index_of(&format!("h{i}")).expect("h in table"))
        .collect();
    let mut out = GradedPoly::zero(ring.table());
    for j in 0..k {
        let sigma = elementary_symmetric_indices(ring.table(), j as usize, &idx);
        out = out.add(&sigma.mul(&ring.tau().pow(k - 1 - j)));
    }
    EquivariantClass::diagonal(&ring, &out)
}

/// Small-diagonal class by its complete-intersection product form:
/// prod_{i=1..k-1} (h_i + h_{i+1} + tau), reduced to normal form.
pub fn delta_small_diagonal_product(k: u32) -> Result<EquivariantClass, BinformsError> {
    if k < 2 {
        return Err(BinformsError::Param(format!("need k >= 2, got {k}")));
    }
    let ring = DiagonalRing::new(k);
    let mut out = GradedPoly::one(ring.table());
    for i in 1..k {
        let f = ring.h_var(i)?.add(&ring.h_var(i + 1)?).add(&ring.tau());
        out = ring.normal_form(&out.mul(&f));
    }
    EquivariantClass::diagonal(&ring, &out)
}

/// Symmetrization multiplicity of the N-fold product map on a square-free
/// monomial in s distinct point classes. Frozen by two constraints: the map
/// has torsor degree N! (s = 0), and the oracle must reproduce
/// pi_{1,*}(h_0) = h_0...h_{k-1}.
pub fn symmetrization_multiplicity(n: u32, s: u32) -> BigInt {
    factorial_exact((n - s) as u64)
}

/// Brute-force pushforward: build the cycle in DiagonalRing(N) as a product
/// of point classes and small-diagonal blocks, push along the symmetrization
/// and divide by the d!(N-kr)! automorphism factor.
pub fn push_pi_oracle(r: u32, m: i64, k: u32, n: u32) -> Result<EquivariantClass, BinformsError> {
    validate_push_params(r, m, k, n)?;
    let d = (r as i64 - (m + 1)) as u32;
    let ring = DiagonalRing::new(n);
    let tau_idx = ring.table().index_of("tau").expect("tau");

    // [infty^{(m+1)k} x (Delta^k)^d x (P^1)^{N-kr}]
    let mut cls = GradedPoly::one(ring.table());
    let point_count = ((m + 1) * k as i64) as u32;
    for i in 1..=point_count {
        cls = ring.normal_form(&cls.mul(&ring.h_var(i)?));
    }
    for block in 0..d {
        let start = point_count + block * k;
        let idx: Vec<usize> = (start + 1..=start + k)
            .map(|i| ring.table().index_of(&format!("h{i}")).expect("h"))
            .collect();
        let mut delta = GradedPoly::zero(ring.table());
        for j in 0..k {
            let sigma = elementary_symmetric_indices(ring.table(), j as usize, &idx);
            delta = delta.add(&sigma.mul(&ring.tau().pow(k - 1 - j)));
        }
        cls = ring.normal_form(&cls.mul(&delta));
    }

    // symmetrize each square-free term and divide by d!(N-kr)!
    let t = tauh_table();
    let mut out = GradedPoly::zero(&t);
    for (mono, coef) in cls.terms() {
        let mut s = 0u32;
        for i in 0..mono.len() {
            if i != tau_idx {
                debug_assert!(mono.exp(i) <= 1, "normal form is square-free");
                s += mono.exp(i);
            }
        }
        let mult = symmetrization_multiplicity(n, s);
        let term = h_string_tauh(s)
            .mul(&tau_pow(mono.exp(tau_idx)))
            .scale(&(coef * Rational::from_integer(mult)));
        out = out.add(&term);
    }
    let divisor = factorial_exact(d as u64) * factorial_exact((n - k * r) as u64);
    out = out.scale(&Rational::new(BigInt::one(), divisor));
    if !out.denominator_primes().is_empty() {
        return Err(BinformsError::OracleInconsistency(format!(
            "non-integral oracle class at (r,m,k,N)=({r},{m},{k},{n})"
        )));
    }
    let pring = ProjectiveRing::new(n);
    let raw = pring.from_tauh(&out)?;
    EquivariantClass::projective(&pring, &raw)
}

pub(crate) fn gamma_tauh(t: u32, k: u32, n: u32) -> Result<GradedPoly, BinformsError> {
    if t > k - 1 || n < 2 * k - 1 {
        return Err(BinformsError::Param(format!(
            "need t <= k-1 and N >= 2k-1, got t={t} k={k} N={n}"
        )));
    }
    let c = Rational::new(
        factorial_exact((n - t) as u64),
        factorial_exact((n + 1 - 2 * k) as u64),
    );
    Ok(h_string_tauh(t).mul(&tau_pow(2 * (k - 1) - t)).scale(&c))
}

/// Gamma_t = (N-t)!/(N-2k+1)! tau^{2(k-1)-t} h_0...h_{t-1}.
pub fn gamma_class(t: u32, k: u32, n: u32) -> Result<EquivariantClass, BinformsError> {
    let ring = ProjectiveRing::new(n);
    let raw = ring.from_tauh(&gamma_tauh(t, k, n)?)?;
    EquivariantClass::projective(&ring, &raw)
}

/// The two generators of the discriminant ideal:
/// (pi_{1,*}(1), h_0...h_{k-1}).
pub fn discriminant_ideal(
    k: u32,
    n: u32,
) -> Result<(EquivariantClass, EquivariantClass), BinformsError> {
    let ring = ProjectiveRing::new(n);
    let g1 = push_pi1_unit(k, n)?;
    let g2 = EquivariantClass::projective(&ring, &ring.from_tauh(&h_string_tauh(k))?)?;
    Ok((g1, g2))
}
