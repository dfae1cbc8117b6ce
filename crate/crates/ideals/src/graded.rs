use crate::linalg::rank_over_q;
use crate::IdealError;
use gradedpoly::{GradedPoly, Monomial, Rational, VariableTable, WeightedDegree};
use num_traits::Zero;
use std::collections::BTreeMap;

/// All exponent vectors of the given weighted degree, in a fixed order.
pub fn monomials_of_weighted_degree(table: &VariableTable, degree: u64) -> Vec<Monomial> {
    let n = table.len();
    let mut out = Vec::new();
    let mut current = vec![0u32; n];
    fn rec(
        table: &VariableTable,
        i: usize,
        rem: u64,
        current: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if i == table.len() {
            if rem == 0 {
                out.push(Monomial(current.clone()));
            }
            return;
        }
        let w = table.weight(i);
        let max = rem / w;
        for e in 0..=max {
            current[i] = e as u32;
            rec(table, i + 1, rem - e * w, current, out);
        }
        current[i] = 0;
    }
    rec(table, 0, degree, &mut current, &mut out);
    out
}

fn homogeneous_degree_of(g: &GradedPoly) -> Result<u64, IdealError> {
    match g.weighted_degree() {
        WeightedDegree::Homogeneous(d) => Ok(d),
        WeightedDegree::Inhomogeneous(a, b) => Err(IdealError::InhomogeneousInput(a, b)),
        WeightedDegree::ZeroPolynomial => Ok(u64::MAX), // skipped by callers
    }
}

/// Vectors (over the degree-d monomial basis) of all multiples m*g landing in
/// degree d, with multiplier monomials of weighted degree >= `min_mult_deg`.
fn degree_slice_vectors(
    gens: &[GradedPoly],
    table: &VariableTable,
    d: u64,
    min_mult_deg: u64,
) -> Result<(Vec<Vec<Rational>>, usize), IdealError> {
    let basis = monomials_of_weighted_degree(table, d);
    let index: BTreeMap<&Monomial, usize> = basis.iter().zip(0..).collect();
    let mut rows = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let gd = homogeneous_degree_of(g)?;
        if gd > d {
            continue;
        }
        let mult = d - gd;
        if mult < min_mult_deg {
            continue;
        }
        for mm in monomials_of_weighted_degree(table, mult) {
            if mm.weighted_degree(table) < min_mult_deg {
                continue;
            }
            let mut row = vec![Rational::zero(); basis.len()];
            for (m, c) in g.terms() {
                let prod = m.mul(&mm);
                let i = *index.get(&prod).expect("degree bookkeeping");
                let v = &row[i] + c;
                row[i] = v;
            }
            rows.push(row);
        }
    }
    Ok((rows, basis.len()))
}

/// Graded Nakayama counts: for each degree d <= maxdeg, the dimension of
/// I_d / (R_{>=1} * I_{<d})_d, computed by exact rank differences on the
/// monomial basis. Zero counts are omitted.
pub fn minimal_generators_by_degree(
    gens: &[GradedPoly],
    table: &VariableTable,
    maxdeg: u64,
) -> Result<BTreeMap<u64, usize>, IdealError> {
    let mut out = BTreeMap::new();
    for d in 0..=maxdeg {
        let (mut all, _) = degree_slice_vectors(gens, table, d, 0)?;
        let (mut high, _) = degree_slice_vectors(gens, table, d, 1)?;
        let b = rank_over_q(&mut all) - rank_over_q(&mut high);
        if b > 0 {
            out.insert(d, b);
        }
    }
    Ok(out)
}

/// dim_Q (R/I)_d for d = 0..maxdeg.
pub fn hilbert_function(
    gens: &[GradedPoly],
    table: &VariableTable,
    maxdeg: u64,
) -> Result<Vec<usize>, IdealError> {
    let mut out = Vec::with_capacity(maxdeg as usize + 1);
    for d in 0..=maxdeg {
        let (mut rows, nmono) = degree_slice_vectors(gens, table, d, 0)?;
        out.push(nmono - rank_over_q(&mut rows));
    }
    Ok(out)
}
