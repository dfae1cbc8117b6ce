use crate::push::push_pi1_unit_tauh;
use crate::ring::{tauh_table, EquivariantClass, RingTag};
use crate::BinformsError;
use gradedpoly::{parse_poly, GradedPoly, Monomial, Rational, RingMap, VariableTable};
use num_traits::One;
use once_cell::sync::OnceCell;
use std::sync::Arc;

fn t01_table() -> Arc<VariableTable> {
    VariableTable::unweighted(&["t0", "t1"])
}

/// Weight convention relating the xi->0 specialization (in torus characters)
/// to the affine classes: an overall sign together with the linear change
/// t = eps*u + w*(u0+u1). Calibrated once against the degree-6 sextic value
/// and then fixed for every (k, N).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeConvention {
    pub sign: i8,
    pub eps: i8,
    pub w: i8,
    /// every parameterization that reproduces the calibration target
    pub winners: Vec<(i8, i8, i8)>,
}

static CONVENTION: OnceCell<ConeConvention> = OnceCell::new();

/// Raw cone class in torus characters: (-1)^(k-1) times the xi -> 0
/// specialization of pi_{1,*}(1) (the parity factor converts hyperplane
/// convention to affine hypersurface classes).
fn affine_cone_raw(k: u32, n: u32) -> Result<GradedPoly, BinformsError> {
    let unit = push_pi1_unit_tauh(k, n)?;
    let t2 = t01_table();
    let t0 = GradedPoly::var(&t2, "t0")?;
    let t1 = GradedPoly::var(&t2, "t1")?;
    let map = RingMap::new(
        &tauh_table(),
        &t2,
        &[
            ("tau", t0.sub(&t1)),
            ("h0", t0.scale(&Rational::from_integer((-(n as i64)).into()))),
        ],
    )?;
    let spec = map.substitute(&unit)?;
    Ok(if (k - 1) % 2 == 1 { spec.neg() } else { spec })
}

/// Apply the convention substitution u_i = (t_i - w/(eps+2w)(t0+t1))/eps to a
/// polynomial in torus characters.
fn apply_convention(p: &GradedPoly, eps: i8, w: i8) -> Option<GradedPoly> {
    let s = eps as i64 + 2 * w as i64;
    if s == 0 {
        return None;
    }
    let t2 = t01_table();
    let t0 = GradedPoly::var(&t2, "t0").expect("t0");
    let t1 = GradedPoly::var(&t2, "t1").expect("t1");
    let d1 = t0.add(&t1);
    let f = Rational::new((w as i64).into(), s.into());
    let inv_eps = Rational::new(1.into(), (eps as i64).into());
    let u0 = t0.sub(&d1.scale(&f)).scale(&inv_eps);
    let u1 = t1.sub(&d1.scale(&f)).scale(&inv_eps);
    let map = RingMap::new(&t2, &t2, &[("t0", u0), ("t1", u1)]).expect("total assignment");
    Some(map.substitute(p).expect("same table"))
}

fn calibration_target() -> GradedPoly {
    let t2 = t01_table();
    parse_poly(&t2, "72*(t0+t1)^3*t0*t1 - 384*(t0+t1)*(t0*t1)^2").expect("literal")
}

/// Calibrate (or fetch) the cone weight convention.
pub fn cone_convention() -> Result<&'static ConeConvention, BinformsError> {
    if let Some(c) = CONVENTION.get() {
        return Ok(c);
    }
    let raw = affine_cone_raw(6, 6)?;
    let target = calibration_target();
    let mut winners = Vec::new();
    for sign in [1i8, -1] {
        for eps in [1i8, -1] {
            for w in -2i8..=2 {
                if let Some(cand) = apply_convention(&raw, eps, w) {
                    let cand = if sign < 0 { cand.neg() } else { cand };
                    if cand == target {
                        winners.push((sign, eps, w));
                    }
                }
            }
        }
    }
    if winners.is_empty() {
        return Err(BinformsError::CalibrationAmbiguous(0));
    }
    let (sign, eps, w) = winners[0];
    let _ = CONVENTION.set(ConeConvention {
        sign,
        eps,
        w,
        winners,
    });
    Ok(CONVENTION.get().expect("just set"))
}

/// T-equivariant class in A(N) of forms with a root of multiplicity >= k,
/// expressed in the calibrated (t0, t1) generators.
pub fn affine_cone_class(k: u32, n: u32) -> Result<GradedPoly, BinformsError> {
    if k < 2 || k > n {
        return Err(BinformsError::Param(format!("need 2 <= k <= N, got k={k} N={n}")));
    }
    let conv = cone_convention()?;
    let raw = affine_cone_raw(k, n)?;
    let out = apply_convention(&raw, conv.eps, conv.w)
        .expect("calibrated convention is invertible");
    Ok(if conv.sign < 0 { out.neg() } else { out })
}

/// Rewrite a t0<->t1 symmetric projective class in the GL2 basis
/// d1 = t0 + t1, d2 = t0*t1 (keeping xi). Errors on asymmetric input.
pub fn to_gl2_basis(c: &EquivariantClass) -> Result<GradedPoly, BinformsError> {
    let RingTag::Projective(_) = c.ring else {
        return Err(BinformsError::Param(
            "gl2 basis rewrite applies to projective classes".into(),
        ));
    };
    let src = c.value.table().clone();
    let (i_t0, i_t1, i_xi) = (
        src.index_of("t0")?,
        src.index_of("t1")?,
        src.index_of("xi")?,
    );
    // symmetry check: swap t0 <-> t1
    let swapped = GradedPoly::from_terms(
        &src,
        c.value.terms().map(|(m, coef)| {
            let mut e = m.0.clone();
            e.swap(i_t0, i_t1);
            (Monomial(e), coef.clone())
        }),
    );
    if swapped != c.value {
        return Err(BinformsError::NotGL2Equivariant(format!("{}", c.value)));
    }

    let out_table = VariableTable::new(&[("d1", 1), ("d2", 2), ("xi", 1)]);
    let (j_d1, j_d2, j_xi) = (
        out_table.index_of("d1")?,
        out_table.index_of("d2")?,
        out_table.index_of("xi")?,
    );

    // group terms by xi power, rewrite each symmetric (t0,t1) part
    let mut out = GradedPoly::zero(&out_table);
    let mut work = c.value.clone();
    while !work.is_zero() {
        // take the term with highest (t0 exp, xi exp) lexicographically;
        // symmetry guarantees its t0-exponent >= t1-exponent twin exists
        let (m, coef) = work
            .terms()
            .max_by_key(|(m, _)| (m.exp(i_t0), m.exp(i_xi)))
            .map(|(m, c0)| (m.clone(), c0.clone()))
            .expect("nonzero");
        let (a, b, e) = (m.exp(i_t0), m.exp(i_t1), m.exp(i_xi));
        if a < b {
            return Err(BinformsError::NotGL2Equivariant(format!("{}", c.value)));
        }
        // subtract coef * (t0+t1)^(a-b) (t0 t1)^b xi^e from work
        let t0 = GradedPoly::var(&src, "t0")?;
        let t1 = GradedPoly::var(&src, "t1")?;
        let sym = t0
            .add(&t1)
            .pow(a - b)
            .mul(&t0.mul(&t1).pow(b))
            .mul_term(&Monomial::var(src.len(), i_xi, e), &Rational::one());
        work = work.sub(&sym.scale(&coef));
        // add coef * d1^(a-b) d2^b xi^e to the output
        let mut mono = Monomial::one(out_table.len());
        mono.0[j_d1] = a - b;
        mono.0[j_d2] = b;
        mono.0[j_xi] = e;
        out.add_term(mono, coef);
    }
    Ok(out)
}
