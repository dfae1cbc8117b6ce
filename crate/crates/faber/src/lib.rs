//! Coordinate changes between the four-generator presentation in
//! lambda1, H, delta1, delta11 and the divisor/kappa generators
//! lambda1, delta0, delta1, kappa2: mutually inverse degree-preserving maps
//! and the transported-ideal statistics.

use gradedpoly::{parse_poly, GradedPoly, RingMap, VariableTable};
use ideals::{hilbert_function, minimal_generators_by_degree};
use m3bar::SimplifiedIdeal;
use std::collections::BTreeMap;
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FaberError {
    #[error(transparent)]
    Poly(#[from] gradedpoly::PolyError),
    #[error(transparent)]
    Ideal(#[from] ideals::IdealError),
}

pub fn source_table() -> Arc<VariableTable> {
    VariableTable::new(&[("lambda1", 1), ("H", 1), ("delta1", 1), ("delta11", 2)])
}

pub fn target_table() -> Arc<VariableTable> {
    VariableTable::new(&[("lambda1", 1), ("delta0", 1), ("delta1", 1), ("kappa2", 2)])
}

/// The pair of mutually inverse coordinate changes.
#[derive(Debug, Clone, PartialEq)]
pub struct CoordinateChange {
    pub phi: RingMap,
    pub psi: RingMap,
}

/// phi fixes lambda1 and delta1, sends H to the divisor combination and
/// delta11 to its kappa expression; psi is obtained by solving the same two
/// linear identities the other way.
pub fn build_maps() -> Result<CoordinateChange, FaberError> {
    let s = source_table();
    let t = target_table();
    let phi = RingMap::new(
        &s,
        &t,
        &[
            ("lambda1", GradedPoly::var(&t, "lambda1")?),
            ("delta1", GradedPoly::var(&t, "delta1")?),
            ("H", parse_poly(&t, "9*lambda1 - 3*delta1 - delta0")?),
            (
                "delta11",
                parse_poly(
                    &t,
                    "-5*lambda1^2 + 1/2*lambda1*delta0 + lambda1*delta1 + 1/2*delta1^2 + 1/2*kappa2",
                )?,
            ),
        ],
    )?;
    let psi = RingMap::new(
        &t,
        &s,
        &[
            ("lambda1", GradedPoly::var(&s, "lambda1")?),
            ("delta1", GradedPoly::var(&s, "delta1")?),
            ("delta0", parse_poly(&s, "9*lambda1 - 3*delta1 - H")?),
            (
                "kappa2",
                parse_poly(
                    &s,
                    "2*delta11 + lambda1^2 + lambda1*delta1 + lambda1*H - delta1^2",
                )?,
            ),
        ],
    )?;
    Ok(CoordinateChange { phi, psi })
}

/// Both compositions fix every generator (hence every polynomial), and both
/// maps preserve the grading.
pub fn verify_inverse(c: &CoordinateChange) -> Result<bool, FaberError> {
    let s = source_table();
    let t = target_table();
    for i in 0..s.len() {
        let x = GradedPoly::var_index(&s, i);
        let roundtrip = c.psi.substitute(&c.phi.substitute(&x)?)?;
        if roundtrip != x {
            return Ok(false);
        }
    }
    for i in 0..t.len() {
        let y = GradedPoly::var_index(&t, i);
        let roundtrip = c.phi.substitute(&c.psi.substitute(&y)?)?;
        if roundtrip != y {
            return Ok(false);
        }
    }
    // degree preservation: each generator image is homogeneous of the
    // generator's weight
    for (map, table) in [(&c.phi, &s), (&c.psi, &t)] {
        for i in 0..table.len() {
            let img = map.substitute(&GradedPoly::var_index(table, i))?;
            if !img.is_homogeneous_of_degree(table.weight(i)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The transported ideal with its minimal-generator profile and the Hilbert
/// functions of both quotients through degree 6.
#[derive(Debug, Clone)]
pub struct FaberIdeal {
    pub generators: Vec<(String, GradedPoly)>,
    pub minimal_counts: BTreeMap<u64, usize>,
    pub hilbert_source: Vec<usize>,
    pub hilbert_target: Vec<usize>,
}

/// Push the simplified ideal through phi and audit its graded shape.
pub fn faber_ideal(simplified: &SimplifiedIdeal) -> Result<FaberIdeal, FaberError> {
    let c = build_maps()?;
    let t = target_table();
    let mut generators = Vec::new();
    for (name, g) in &simplified.generators {
        generators.push((name.clone(), c.phi.substitute(g)?));
    }
    let polys: Vec<GradedPoly> = generators.iter().map(|(_, g)| g.clone()).collect();
    let minimal_counts = minimal_generators_by_degree(&polys, &t, 6)?;
    let hilbert_target = hilbert_function(&polys, &t, 6)?;
    let src_polys: Vec<GradedPoly> = simplified
        .generators
        .iter()
        .map(|(_, g)| g.clone())
        .collect();
    let hilbert_source = hilbert_function(&src_polys, &simplified.table, 6)?;
    Ok(FaberIdeal {
        generators,
        minimal_counts,
        hilbert_source,
        hilbert_target,
    })
}

/// Round trip: mapping the transported ideal back along psi recovers the
/// original ideal.
pub fn round_trip_ideal_equal(
    simplified: &SimplifiedIdeal,
    transported: &FaberIdeal,
    budget: u64,
) -> Result<bool, FaberError> {
    let c = build_maps()?;
    let back: Vec<GradedPoly> = transported
        .generators
        .iter()
        .map(|(_, g)| c.psi.substitute(g))
        .collect::<Result<_, _>>()?;
    let orig: Vec<GradedPoly> = simplified
        .generators
        .iter()
        .map(|(_, g)| g.clone())
        .collect();
    Ok(ideals::ideal_equal(
        &back,
        &orig,
        &ideals::MonomialOrder::GradedRevLex,
        budget,
    )?)
}
