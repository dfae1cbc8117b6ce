use crate::presentation::{Presentation, Relation, Variant};
use crate::M3barError;
use gradedpoly::{
    prime_factors, GradedPoly, Monomial, Rational, RingMap, VariableTable,
};
use ideals::{hilbert_function, minimal_generators_by_degree};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Record of one generator elimination: substituting `substitution` for
/// `variable` sends the used relation to zero exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct EliminationStep {
    pub relation: String,
    pub variable: String,
    pub substitution: GradedPoly,
    pub coefficient: Rational,
    pub primes_inverted: BTreeSet<u64>,
}

/// Solve the named relation for the variable (it must appear linearly with a
/// nonzero constant coefficient) and substitute throughout the others.
pub fn eliminate_generator(
    p: &Presentation,
    relation: &str,
    variable: &str,
) -> Result<(Presentation, EliminationStep), M3barError> {
    let rel = p.relation(relation)?.clone();
    let var_idx = p.table.index_of(variable)?;
    let poly = rel.poly();
    let mut linear_coeff: Option<Rational> = None;
    let mut rest = GradedPoly::zero(&p.table);
    for (m, c) in poly.terms() {
        match m.exp(var_idx) {
            0 => rest.add_term(m.clone(), c.clone()),
            1 => {
                let mut stripped = m.clone();
                stripped.0[var_idx] = 0;
                if !stripped.is_one() {
                    return Err(M3barError::NotEliminable {
                        relation: relation.to_string(),
                        variable: variable.to_string(),
                    });
                }
                linear_coeff = Some(c.clone());
            }
            _ => {
                return Err(M3barError::NotEliminable {
                    relation: relation.to_string(),
                    variable: variable.to_string(),
                })
            }
        }
    }
    let Some(coeff) = linear_coeff else {
        return Err(M3barError::NotEliminable {
            relation: relation.to_string(),
            variable: variable.to_string(),
        });
    };
    let substitution = rest.scale(&(-coeff.recip()));
    let primes_inverted = prime_factors(coeff.numer().magnitude());

    let relations = p
        .relations
        .iter()
        .filter(|r| r.name != relation)
        .map(|r| Relation {
            name: r.name.clone(),
            expected_degree: r.expected_degree,
            anchor: r.anchor.clone(),
            notes: r.notes.clone(),
            variants: vec![Variant {
                id: r.variants[r.selected].id.clone(),
                poly: r.poly().substitute_var(var_idx, &substitution),
            }],
            selected: 0,
        })
        .collect();
    Ok((
        Presentation {
            table: p.table.clone(),
            relations,
        },
        EliminationStep {
            relation: relation.to_string(),
            variable: variable.to_string(),
            substitution,
            coefficient: coeff,
            primes_inverted,
        },
    ))
}

pub fn simplified_table() -> Arc<VariableTable> {
    VariableTable::new(&[("lambda1", 1), ("H", 1), ("delta1", 1), ("delta11", 2)])
}

/// The rational simplification: the four-generator ideal left after the
/// three linear eliminations, with its graded minimal-generator counts and
/// Hilbert function through degree 6.
#[derive(Debug, Clone)]
pub struct SimplifiedIdeal {
    pub table: Arc<VariableTable>,
    pub generators: Vec<(String, GradedPoly)>,
    pub steps: Vec<EliminationStep>,
    pub minimal_counts: BTreeMap<u64, usize>,
    pub hilbert: Vec<usize>,
}

/// Eliminate lambda2 (degree-2 relation), delta111 (separating-boundary
/// relation), then lambda3 (degree-3 stratum relation), in that order, and
/// present the induced ideal in lambda1, H, delta1, delta11.
pub fn rational_simplify(p: &Presentation) -> Result<SimplifiedIdeal, M3barError> {
    let (p1, s1) = eliminate_generator(p, "A2", "lambda2")?;
    let (p2, s2) = eliminate_generator(&p1, "d1c", "delta111")?;
    let (p3, s3) = eliminate_generator(&p2, "A3", "lambda3")?;

    let table4 = simplified_table();
    let keep: Vec<usize> = ["lambda1", "H", "delta1", "delta11"]
        .iter()
        .map(|v| p.table.index_of(v).expect("generator"))
        .collect();
    let dropped: Vec<usize> = (0..p.table.len()).filter(|i| !keep.contains(i)).collect();
    let mut generators = Vec::new();
    for r in &p3.relations {
        let poly = r.poly();
        if poly.is_zero() {
            continue;
        }
        let mut q = GradedPoly::zero(&table4);
        for (m, c) in poly.terms() {
            debug_assert!(m.free_of(&dropped), "eliminated variable survived");
            q.add_term(
                Monomial(keep.iter().map(|&i| m.exp(i)).collect()),
                c.clone(),
            );
        }
        generators.push((r.name.clone(), q));
    }
    let polys: Vec<GradedPoly> = generators.iter().map(|(_, g)| g.clone()).collect();
    let minimal_counts = minimal_generators_by_degree(&polys, &table4, 6)?;
    let hilbert = hilbert_function(&polys, &table4, 6)?;
    Ok(SimplifiedIdeal {
        table: table4,
        generators,
        steps: vec![s1, s2, s3],
        minimal_counts,
        hilbert,
    })
}

fn faber_table() -> Arc<VariableTable> {
    VariableTable::new(&[("lambda1", 1), ("delta0", 1), ("delta1", 1), ("kappa2", 2)])
}

/// Transport the simplified ideal along the divisor/kappa coordinate change
/// and count its minimal generators by degree. (The full coordinate-change
/// interface lives in the comparison crate; this internal copy lets the
/// variant search test its constraint without a dependency cycle.)
pub fn faber_generator_counts(
    s: &SimplifiedIdeal,
) -> Result<BTreeMap<u64, usize>, M3barError> {
    let ft = faber_table();
    let phi = RingMap::new(
        &s.table,
        &ft,
        &[
            ("lambda1", GradedPoly::var(&ft, "lambda1")?),
            ("delta1", GradedPoly::var(&ft, "delta1")?),
            (
                "H",
                gradedpoly::parse_poly(&ft, "9*lambda1 - 3*delta1 - delta0")?,
            ),
            (
                "delta11",
                gradedpoly::parse_poly(
                    &ft,
                    "-5*lambda1^2 + 1/2*lambda1*delta0 + lambda1*delta1 + 1/2*delta1^2 + 1/2*kappa2",
                )?,
            ),
        ],
    )?;
    let transported: Vec<GradedPoly> = s
        .generators
        .iter()
        .map(|(_, g)| phi.substitute(g))
        .collect::<Result<_, _>>()?;
    Ok(minimal_generators_by_degree(&transported, &ft, 6)?)
}

pub fn open_stratum_table() -> Arc<VariableTable> {
    VariableTable::new(&[("lambda1", 1), ("lambda2", 2), ("lambda3", 3)])
}

/// Substitute H = delta1 = delta11 = delta111 = 0: the class restricted to
/// the open quartic stratum, in the lambda classes alone.
pub fn restrict_open_stratum(rel: &GradedPoly) -> Result<GradedPoly, M3barError> {
    let src = rel.table();
    let lt = open_stratum_table();
    let keep: Vec<usize> = ["lambda1", "lambda2", "lambda3"]
        .iter()
        .map(|v| src.index_of(v))
        .collect::<Result<_, _>>()?;
    let kill: Vec<usize> = ["H", "delta1", "delta11", "delta111"]
        .iter()
        .map(|v| src.index_of(v))
        .collect::<Result<_, _>>()?;
    let mut out = GradedPoly::zero(&lt);
    for (m, c) in rel.terms() {
        if kill.iter().any(|&i| m.exp(i) > 0) {
            continue;
        }
        out.add_term(
            Monomial(keep.iter().map(|&i| m.exp(i)).collect()),
            c.clone(),
        );
    }
    Ok(out)
}
