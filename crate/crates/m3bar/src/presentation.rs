use crate::simplify::{faber_generator_counts, rational_simplify};
use crate::M3barError;
use gradedpoly::{parse_poly, GradedPoly, VariableTable, WeightedDegree};
use report::{CheckStatus, VerificationReport};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Pinned digest of the bundled relation data.
pub const DATA_SHA256: &str = "0261db9e5dad3f7bcbb0684c7d0cf6613f8879bd73155f0503672cd9cb44a3b5";

const DATA: &str = include_str!("../data/relations.txt");

#[derive(Debug, Clone, PartialEq)]
pub struct Variant {
    pub id: String,
    pub poly: GradedPoly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Relation {
    pub name: String,
    pub expected_degree: u64,
    pub anchor: String,
    pub notes: Vec<String>,
    pub variants: Vec<Variant>,
    /// index of the variant currently in effect
    pub selected: usize,
}

impl Relation {
    pub fn poly(&self) -> &GradedPoly {
        &self.variants[self.selected].poly
    }

    pub fn is_flagged(&self) -> bool {
        self.variants.len() > 1
    }
}

/// The presentation: seven weighted generators and fifteen named relations.
#[derive(Debug, Clone, PartialEq)]
pub struct Presentation {
    pub table: Arc<VariableTable>,
    pub relations: Vec<Relation>,
}

pub fn generator_table() -> Arc<VariableTable> {
    VariableTable::new(&[
        ("lambda1", 1),
        ("lambda2", 2),
        ("lambda3", 3),
        ("H", 1),
        ("delta1", 1),
        ("delta11", 2),
        ("delta111", 3),
    ])
}

impl Presentation {
    pub fn relation(&self, name: &str) -> Result<&Relation, M3barError> {
        self.relations
            .iter()
            .find(|r| r.name == name)
            .ok_or_else(|| M3barError::NoSuchRelation(name.to_string()))
    }

    pub fn polynomials(&self) -> Vec<GradedPoly> {
        self.relations.iter().map(|r| r.poly().clone()).collect()
    }

    /// Names of the relations that carry more than one candidate reading.
    pub fn flagged(&self) -> Vec<&str> {
        self.relations
            .iter()
            .filter(|r| r.is_flagged())
            .map(|r| r.name.as_str())
            .collect()
    }

    pub fn with_assignment(&self, assignment: &BTreeMap<String, usize>) -> Presentation {
        let mut out = self.clone();
        for r in &mut out.relations {
            if let Some(&i) = assignment.get(&r.name) {
                r.selected = i;
            }
        }
        out
    }
}

/// Parse and checksum the bundled relation data.
pub fn load_presentation() -> Result<Presentation, M3barError> {
    let found = hex::encode(Sha256::digest(DATA.as_bytes()));
    if found != DATA_SHA256 {
        return Err(M3barError::ChecksumMismatch {
            expected: DATA_SHA256.to_string(),
            found,
        });
    }
    let table = generator_table();
    let mut relations = Vec::new();
    let mut current: Option<Relation> = None;
    for (lineno, raw) in DATA.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (kw, rest) = line.split_once(' ').unwrap_or((line, ""));
        match kw {
            "relation" => {
                if current.is_some() {
                    return Err(M3barError::Parse(format!(
                        "line {}: relation inside relation",
                        lineno + 1
                    )));
                }
                current = Some(Relation {
                    name: rest.trim().to_string(),
                    expected_degree: 0,
                    anchor: String::new(),
                    notes: Vec::new(),
                    variants: Vec::new(),
                    selected: 0,
                });
            }
            "degree" => {
                let r = current.as_mut().ok_or_else(|| {
                    M3barError::Parse(format!("line {}: degree outside relation", lineno + 1))
                })?;
                r.expected_degree = rest
                    .trim()
                    .parse()
                    .map_err(|e| M3barError::Parse(format!("line {}: {e}", lineno + 1)))?;
            }
            "anchor" => {
                let r = current.as_mut().ok_or_else(|| {
                    M3barError::Parse(format!("line {}: anchor outside relation", lineno + 1))
                })?;
                r.anchor = rest.trim().to_string();
            }
            "note" => {
                let r = current.as_mut().ok_or_else(|| {
                    M3barError::Parse(format!("line {}: note outside relation", lineno + 1))
                })?;
                r.notes.push(rest.trim().to_string());
            }
            "poly" => {
                let r = current.as_mut().ok_or_else(|| {
                    M3barError::Parse(format!("line {}: poly outside relation", lineno + 1))
                })?;
                let p = parse_poly(&table, rest)
                    .map_err(|e| M3barError::Parse(format!("line {}: {e}", lineno + 1)))?;
                r.variants.push(Variant {
                    id: "text".to_string(),
                    poly: p,
                });
            }
            "variant" => {
                let r = current.as_mut().ok_or_else(|| {
                    M3barError::Parse(format!("line {}: variant outside relation", lineno + 1))
                })?;
                let (id, lit) = rest.split_once(' ').ok_or_else(|| {
                    M3barError::Parse(format!("line {}: variant needs id and literal", lineno + 1))
                })?;
                let p = parse_poly(&table, lit)
                    .map_err(|e| M3barError::Parse(format!("line {}: {e}", lineno + 1)))?;
                r.variants.push(Variant {
                    id: id.to_string(),
                    poly: p,
                });
            }
            "end" => {
                let r = current.take().ok_or_else(|| {
                    M3barError::Parse(format!("line {}: end outside relation", lineno + 1))
                })?;
                if r.variants.is_empty() {
                    return Err(M3barError::Parse(format!(
                        "relation {} has no polynomial",
                        r.name
                    )));
                }
                relations.push(r);
            }
            other => {
                return Err(M3barError::Parse(format!(
                    "line {}: unknown keyword `{other}`",
                    lineno + 1
                )))
            }
        }
    }
    if relations.len() != 15 {
        return Err(M3barError::Parse(format!(
            "expected 15 relations, found {}",
            relations.len()
        )));
    }
    Ok(Presentation { table, relations })
}

/// Per-relation homogeneity audit against the expected degrees, with the
/// degree-count summary {2:1, 3:5, 4:8, 5:1} over the current selection.
pub fn audit_degrees(p: &Presentation) -> VerificationReport {
    let mut witness = Vec::new();
    let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
    let mut all_ok = true;
    for r in &p.relations {
        *counts.entry(r.expected_degree).or_insert(0) += 1;
        match r.poly().weighted_degree() {
            WeightedDegree::Homogeneous(d) if d == r.expected_degree => {
                witness.push(format!(
                    "{} [{}]: homogeneous of degree {}",
                    r.name, r.variants[r.selected].id, d
                ));
            }
            WeightedDegree::Homogeneous(d) => {
                all_ok = false;
                witness.push(format!(
                    "{} [{}]: homogeneous of degree {} but expected {}",
                    r.name, r.variants[r.selected].id, d, r.expected_degree
                ));
            }
            WeightedDegree::Inhomogeneous(a, b) => {
                all_ok = false;
                witness.push(format!(
                    "{} [{}]: inhomogeneous, witness monomials {:?} and {:?}",
                    r.name, r.variants[r.selected].id, a.0, b.0
                ));
            }
            WeightedDegree::ZeroPolynomial => {
                all_ok = false;
                witness.push(format!("{}: zero polynomial", r.name));
            }
        }
    }
    let expected: BTreeMap<u64, usize> = [(2, 1), (3, 5), (4, 8), (5, 1)].into();
    let counts_ok = counts == expected;
    witness.push(format!("degree profile: {counts:?} (expected {expected:?})"));
    VerificationReport::new(
        "m3bar",
        "audit_degrees",
        "theo:chow-ring-m3bar",
        if all_ok && counts_ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        },
    )
    .with_witness(witness)
}

/// One candidate assignment together with the constraint results.
#[derive(Debug, Clone)]
pub struct ResolveOutcome {
    pub assignment: BTreeMap<String, usize>,
    pub assignment_ids: BTreeMap<String, String>,
    pub homogeneous: bool,
    pub simplified_total: Option<usize>,
    pub faber_counts: Option<BTreeMap<u64, usize>>,
    pub survives: bool,
}

/// Enumerate every assignment of the flagged variants; keep those that are
/// homogeneous, simplify to exactly nine minimal generators, and transport
/// to the four-generator ring with minimal counts {3:3, 4:6}. All survivors
/// are reported; the first in lexicographic order becomes the resolved
/// presentation.
pub fn resolve_variants(
    p: &Presentation,
) -> Result<(Presentation, Vec<ResolveOutcome>, VerificationReport), M3barError> {
    let flagged: Vec<&Relation> = p.relations.iter().filter(|r| r.is_flagged()).collect();
    let mut outcomes = Vec::new();
    let mut indices = vec![0usize; flagged.len()];
    loop {
        let assignment: BTreeMap<String, usize> = flagged
            .iter()
            .zip(&indices)
            .map(|(r, &i)| (r.name.clone(), i))
            .collect();
        let candidate = p.with_assignment(&assignment);
        let homogeneous = candidate.relations.iter().all(|r| {
            matches!(r.poly().weighted_degree(),
                     WeightedDegree::Homogeneous(d) if d == r.expected_degree)
        });
        let mut outcome = ResolveOutcome {
            assignment_ids: flagged
                .iter()
                .zip(&indices)
                .map(|(r, &i)| (r.name.clone(), r.variants[i].id.clone()))
                .collect(),
            assignment,
            homogeneous,
            simplified_total: None,
            faber_counts: None,
            survives: false,
        };
        if homogeneous {
            let simplified = rational_simplify(&candidate)?;
            let total: usize = simplified.minimal_counts.values().sum();
            outcome.simplified_total = Some(total);
            let fc = faber_generator_counts(&simplified)?;
            outcome.faber_counts = Some(fc.clone());
            let expected: BTreeMap<u64, usize> = [(3, 3), (4, 6)].into();
            outcome.survives = total == 9 && fc == expected;
        }
        outcomes.push(outcome);

        // advance the odometer
        let mut pos = indices.len();
        loop {
            if pos == 0 {
                break;
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < flagged[pos].variants.len() {
                break;
            }
            indices[pos] = 0;
            if pos == 0 {
                pos = usize::MAX;
                break;
            }
        }
        if pos == usize::MAX || indices.iter().all(|&i| i == 0) {
            break;
        }
    }

    let survivors: Vec<&ResolveOutcome> = outcomes.iter().filter(|o| o.survives).collect();
    let mut witness = vec![format!(
        "flagged relations: {:?}",
        p.flagged()
    )];
    for o in &outcomes {
        witness.push(format!(
            "assignment {:?}: homogeneous={} simplified_total={:?} faber={:?} -> {}",
            o.assignment_ids,
            o.homogeneous,
            o.simplified_total,
            o.faber_counts,
            if o.survives { "SURVIVES" } else { "rejected" }
        ));
    }
    witness.push(format!("{} surviving assignment(s)", survivors.len()));
    if survivors.is_empty() {
        return Err(M3barError::UnresolvedPresentation);
    }
    let resolved = p.with_assignment(&survivors[0].assignment);
    let report = VerificationReport::new(
        "m3bar",
        "resolve_variants",
        "theo:chow-ring-m3bar",
        CheckStatus::Pass,
    )
    .with_witness(witness);
    Ok((resolved, outcomes, report))
}
