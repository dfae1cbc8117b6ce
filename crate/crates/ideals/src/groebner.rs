use crate::{IdealError, MonomialOrder};
use gradedpoly::{GradedPoly, Monomial, Rational, VariableTable};
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

/// Internal representation: terms sorted descending under the active order.
#[derive(Debug, Clone)]
struct OrdPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl OrdPoly {
    fn from_graded(p: &GradedPoly, order: &MonomialOrder, table: &VariableTable) -> Self {
        let mut terms: Vec<(Monomial, Rational)> =
            p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|(a, _), (b, _)| order.cmp(b, a, table));
        OrdPoly { terms }
    }

    fn to_graded(&self, table: &Arc<VariableTable>) -> GradedPoly {
        GradedPoly::from_terms(table, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    fn scale(&mut self, c: &Rational) {
        for (_, k) in &mut self.terms {
            *k *= c;
        }
    }

    /// self -= c * x^shift * other, keeping the descending invariant.
    fn sub_scaled_shift(
        &self,
        c: &Rational,
        shift: &Monomial,
        other: &OrdPoly,
        order: &MonomialOrder,
        table: &VariableTable,
    ) -> OrdPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let mb = other.terms[j].0.mul(shift);
            match order.cmp(ma, &mb, table) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb, -(c * &other.terms[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let k = ca - &(c * &other.terms[j].1);
                    if !k.is_zero() {
                        out.push((ma.clone(), k));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        while i < self.terms.len() {
            out.push(self.terms[i].clone());
            i += 1;
        }
        while j < other.terms.len() {
            let mb = other.terms[j].0.mul(shift);
            out.push((mb, -(c * &other.terms[j].1)));
            j += 1;
        }
        OrdPoly { terms: out }
    }
}

#[derive(Debug, Clone)]
struct BasisElem {
    poly: OrdPoly,
    /// expression of `poly` as a combination of the original generators
    cofs: Vec<OrdPoly>,
}

/// A reduced Groebner basis, remembering the input generators and, for each
/// basis element, its cofactor expression in terms of them.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    table: Arc<VariableTable>,
    order: MonomialOrder,
    input: Vec<GradedPoly>,
    elements: Vec<GradedPoly>,
    cofactors: Vec<Vec<GradedPoly>>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[GradedPoly] {
        &self.elements
    }

    pub fn input(&self) -> &[GradedPoly] {
        &self.input
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    /// Cofactor vector of element `i` over the original generators.
    pub fn element_cofactors(&self, i: usize) -> &[GradedPoly] {
        &self.cofactors[i]
    }

    pub fn leading_monomial(&self, i: usize) -> Monomial {
        leading_of(&self.elements[i], &self.order, &self.table)
    }

    /// Post-hoc audit: every S-polynomial of the basis reduces to zero.
    pub fn audit_buchberger(&self, budget: u64) -> Result<bool, IdealError> {
        let elems: Vec<OrdPoly> = self
            .elements
            .iter()
            .map(|p| OrdPoly::from_graded(p, &self.order, &self.table))
            .collect();
        let mut steps = 0u64;
        for i in 0..elems.len() {
            for j in (i + 1)..elems.len() {
                let (mi, ci) = elems[i].leading().unwrap();
                let (mj, cj) = elems[j].leading().unwrap();
                let l = mi.lcm(mj);
                let si = l.div(mi).unwrap();
                let sj = l.div(mj).unwrap();
                let left = OrdPoly { terms: vec![] }.sub_scaled_shift(
                    &(-(Rational::one() / ci)),
                    &si,
                    &elems[i],
                    &self.order,
                    &self.table,
                );
                let sp = left.sub_scaled_shift(
                    &(Rational::one() / cj),
                    &sj,
                    &elems[j],
                    &self.order,
                    &self.table,
                );
                let (rem, _) = reduce_full(sp, &elems, None, &self.order, &self.table, &mut steps, budget, "buchberger audit")?;
                if !rem.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Every leading monomial of `other` elements, reduced against this basis.
    pub fn contains_ideal(&self, gens: &[GradedPoly], budget: u64) -> Result<bool, IdealError> {
        for g in gens {
            let (r, _) = normal_form(g, self, budget)?;
            if !r.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn leading_of(p: &GradedPoly, order: &MonomialOrder, table: &VariableTable) -> Monomial {
    p.terms()
        .max_by(|(a, _), (b, _)| order.cmp(a, b, table))
        .map(|(m, _)| m.clone())
        .expect("leading monomial of zero polynomial")
}

/// Full reduction of `p` by `basis`; returns remainder and per-basis-element
/// quotients. Deterministic: the first dividing basis element (in stored
/// order) is always chosen.
#[allow(clippy::too_many_arguments)]
fn reduce_full(
    p: OrdPoly,
    basis: &[OrdPoly],
    mut quotients: Option<&mut Vec<OrdPoly>>,
    order: &MonomialOrder,
    table: &VariableTable,
    steps: &mut u64,
    budget: u64,
    context: &str,
) -> Result<(OrdPoly, ()), IdealError> {
    let mut rem_terms: Vec<(Monomial, Rational)> = Vec::new();
    let mut work = p;
    'outer: while let Some((m, c)) = work.leading().cloned() {
        for (bi, b) in basis.iter().enumerate() {
            let (bm, bc) = b.leading().expect("zero basis element");
            if let Some(q) = m.div(bm) {
                *steps += 1;
                if *steps > budget {
                    return Err(IdealError::BudgetExceeded {
                        budget,
                        context: context.to_string(),
                    });
                }
                let fac = &c / bc;
                work = work.sub_scaled_shift(&fac, &q, b, order, table);
                if let Some(qs) = quotients.as_deref_mut() {
                    let addition = OrdPoly {
                        terms: vec![(q, fac)],
                    };
                    qs[bi] = merge_add(&qs[bi], &addition, order, table);
                }
                continue 'outer;
            }
        }
        // irreducible leading term: move it to the remainder
        rem_terms.push((m, c));
        work.terms.remove(0);
    }
    Ok((OrdPoly { terms: rem_terms }, ()))
}

fn merge_add(a: &OrdPoly, b: &OrdPoly, order: &MonomialOrder, table: &VariableTable) -> OrdPoly {
    let neg_one = -Rational::one();
    a.sub_scaled_shift(&neg_one, &Monomial::one(table.len()), b, order, table)
}

/// target_t -= sum_b quotients_b * basis_b.cofs_t
fn cof_combine(
    target: &mut [OrdPoly],
    quotients: &[OrdPoly],
    basis: &[BasisElem],
    order: &MonomialOrder,
    table: &VariableTable,
) {
    for (b, q) in basis.iter().zip(quotients) {
        for (qm, qc) in &q.terms {
            for t in 0..target.len() {
                let updated = target[t].sub_scaled_shift(qc, qm, &b.cofs[t], order, table);
                target[t] = updated;
            }
        }
    }
}

/// Reduced Groebner basis with deterministic S-pair processing (normal
/// strategy by weighted lcm degree, ties by pair index) and a step budget.
pub fn groebner_basis(
    gens: &[GradedPoly],
    order: &MonomialOrder,
    budget: u64,
) -> Result<GroebnerBasis, IdealError> {
    let nonzero: Vec<&GradedPoly> = gens.iter().filter(|g| !g.is_zero()).collect();
    let table = match nonzero.first() {
        None => {
            // zero ideal: empty basis; table unknown only if gens empty
            let table = gens
                .first()
                .map(|g| g.table().clone())
                .unwrap_or_else(|| VariableTable::unweighted(&[]));
            return Ok(GroebnerBasis {
                table,
                order: order.clone(),
                input: gens.to_vec(),
                elements: vec![],
                cofactors: vec![],
            });
        }
        Some(g) => g.table().clone(),
    };
    if gens.iter().any(|g| g.table() != &table) {
        return Err(IdealError::TableMismatch);
    }

    let ngens = gens.len();
    let mut basis: Vec<BasisElem> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut cofs = vec![OrdPoly { terms: vec![] }; ngens];
        cofs[i] = OrdPoly {
            terms: vec![(Monomial::one(table.len()), Rational::one())],
        };
        basis.push(BasisElem {
            poly: OrdPoly::from_graded(g, order, &table),
            cofs,
        });
    }

    let mut pairs: BTreeSet<(u64, usize, usize)> = BTreeSet::new();
    let lcm_deg = |a: &BasisElem, b: &BasisElem| -> u64 {
        let l = a
            .poly
            .leading()
            .unwrap()
            .0
            .lcm(&b.poly.leading().unwrap().0);
        l.weighted_degree(&table)
    };
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.insert((lcm_deg(&basis[i], &basis[j]), i, j));
        }
    }

    let mut steps = 0u64;
    while let Some(&(d, i, j)) = pairs.iter().next() {
        pairs.remove(&(d, i, j));
        let (mi, ci) = basis[i].poly.leading().unwrap().clone();
        let (mj, cj) = basis[j].poly.leading().unwrap().clone();
        let l = mi.lcm(&mj);
        // coprime-lead criterion
        if l == mi.mul(&mj) {
            continue;
        }
        let si = l.div(&mi).unwrap();
        let sj = l.div(&mj).unwrap();
        let inv_i = Rational::one() / &ci;
        let inv_j = Rational::one() / &cj;
        let zero = OrdPoly { terms: vec![] };
        let lhs = zero.sub_scaled_shift(&(-inv_i.clone()), &si, &basis[i].poly, order, &table);
        let sp = lhs.sub_scaled_shift(&inv_j, &sj, &basis[j].poly, order, &table);
        // cofactors of the S-polynomial
        let mut sp_cofs = vec![OrdPoly { terms: vec![] }; ngens];
        for t in 0..ngens {
            let a = OrdPoly { terms: vec![] }.sub_scaled_shift(
                &(-inv_i.clone()),
                &si,
                &basis[i].cofs[t],
                order,
                &table,
            );
            sp_cofs[t] = a.sub_scaled_shift(&inv_j, &sj, &basis[j].cofs[t], order, &table);
        }

        let ordered: Vec<OrdPoly> = basis.iter().map(|b| b.poly.clone()).collect();
        let mut quotients = vec![OrdPoly { terms: vec![] }; ordered.len()];
        let (rem, _) = reduce_full(
            sp,
            &ordered,
            Some(&mut quotients),
            order,
            &table,
            &mut steps,
            budget,
            "buchberger",
        )?;
        if rem.is_zero() {
            continue;
        }
        cof_combine(&mut sp_cofs, &quotients, &basis, order, &table);
        let k = basis.len();
        basis.push(BasisElem {
            poly: rem,
            cofs: sp_cofs,
        });
        for t in 0..k {
            pairs.insert((lcm_deg(&basis[t], &basis[k]), t, k));
        }
    }

    // inter-reduce to the unique reduced basis, cofactors kept in sync
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            if basis[i].poly.is_zero() {
                continue;
            }
            let others: Vec<OrdPoly> = basis
                .iter()
                .enumerate()
                .filter(|(j, b)| *j != i && !b.poly.is_zero())
                .map(|(_, b)| b.poly.clone())
                .collect();
            if others.is_empty() {
                continue;
            }
            let mut quotients = vec![OrdPoly { terms: vec![] }; others.len()];
            let (rem, _) = reduce_full(
                basis[i].poly.clone(),
                &others,
                Some(&mut quotients),
                order,
                &table,
                &mut steps,
                budget,
                "inter-reduction",
            )?;
            if rem.terms != basis[i].poly.terms {
                changed = true;
                let other_elems: Vec<BasisElem> = basis
                    .iter()
                    .enumerate()
                    .filter(|(j, b)| *j != i && !b.poly.is_zero())
                    .map(|(_, b)| b.clone())
                    .collect();
                let mut cofs = basis[i].cofs.clone();
                cof_combine(&mut cofs, &quotients, &other_elems, order, &table);
                basis[i] = BasisElem { poly: rem, cofs };
            }
        }
        if !changed {
            break;
        }
    }
    basis.retain(|b| !b.poly.is_zero());

    // monic, then canonical element order (ascending leading monomial)
    for b in &mut basis {
        let inv = Rational::one() / &b.poly.leading().unwrap().1;
        b.poly.scale(&inv);
        for c in &mut b.cofs {
            c.scale(&inv);
        }
    }
    basis.sort_by(|a, b| {
        order.cmp(
            &a.poly.leading().unwrap().0,
            &b.poly.leading().unwrap().0,
            &table,
        )
    });

    Ok(GroebnerBasis {
        table: table.clone(),
        order: order.clone(),
        input: gens.to_vec(),
        elements: basis.iter().map(|b| b.poly.to_graded(&table)).collect(),
        cofactors: basis
            .iter()
            .map(|b| b.cofs.iter().map(|c| c.to_graded(&table)).collect())
            .collect(),
    })
}

/// Normal form of `p` against a reduced basis, with cofactors over the
/// basis' ORIGINAL generators. NF is linear and idempotent.
pub fn normal_form(
    p: &GradedPoly,
    basis: &GroebnerBasis,
    budget: u64,
) -> Result<(GradedPoly, Vec<GradedPoly>), IdealError> {
    if basis.elements.is_empty() {
        // zero ideal: everything is its own normal form
        return Ok((p.clone(), vec![GradedPoly::zero(p.table()); basis.input.len()]));
    }
    if p.table() != &basis.table {
        return Err(IdealError::TableMismatch);
    }
    let table = &basis.table;
    let order = &basis.order;
    let elems: Vec<OrdPoly> = basis
        .elements
        .iter()
        .map(|e| OrdPoly::from_graded(e, order, table))
        .collect();
    let mut quotients = vec![OrdPoly { terms: vec![] }; elems.len()];
    let mut steps = 0u64;
    let (rem, _) = reduce_full(
        OrdPoly::from_graded(p, order, table),
        &elems,
        Some(&mut quotients),
        order,
        table,
        &mut steps,
        budget,
        "normal form",
    )?;
    // translate per-element quotients into per-original-generator cofactors
    let ngens = basis.input.len();
    let mut cofs = vec![GradedPoly::zero(table); ngens];
    for (q, elem_cofs) in quotients.iter().zip(&basis.cofactors) {
        if q.terms.is_empty() {
            continue;
        }
        let qg = q.to_graded(table);
        for t in 0..ngens {
            cofs[t] = cofs[t].add(&qg.mul(&elem_cofs[t]));
        }
    }
    Ok((rem.to_graded(table), cofs))
}

/// Replayable ideal-membership certificate: the identity
/// `sum_i cofactor_i * generator_i + remainder == query` holds exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct MembershipCertificate {
    pub member: bool,
    pub cofactors: Vec<GradedPoly>,
    pub remainder: GradedPoly,
    /// primes dividing any cofactor coefficient denominator
    pub primes: BTreeSet<u64>,
}

impl MembershipCertificate {
    /// Exact replay of the defining identity.
    pub fn replay(&self, query: &GradedPoly, gens: &[GradedPoly]) -> bool {
        let mut acc = GradedPoly::zero(query.table());
        for (c, g) in self.cofactors.iter().zip(gens) {
            acc = acc.add(&c.mul(g));
        }
        acc = acc.add(&self.remainder);
        &acc == query
    }

    /// Structured text serialization so a report can be replayed externally.
    pub fn to_text(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "certificate {name}");
        let _ = writeln!(out, "member {}", self.member);
        for (i, c) in self.cofactors.iter().enumerate() {
            let _ = writeln!(out, "cofactor gen{} {}", i, c);
        }
        let _ = writeln!(out, "remainder {}", self.remainder);
        let primes: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(out, "primes {{{}}}", primes.join(","));
        out
    }
}

pub fn ideal_membership(
    p: &GradedPoly,
    gens: &[GradedPoly],
    order: &MonomialOrder,
    budget: u64,
) -> Result<MembershipCertificate, IdealError> {
    let basis = groebner_basis(gens, order, budget)?;
    membership_against(p, gens, &basis, budget)
}

/// Membership using a precomputed basis of the same generators.
pub fn membership_against(
    p: &GradedPoly,
    gens: &[GradedPoly],
    basis: &GroebnerBasis,
    budget: u64,
) -> Result<MembershipCertificate, IdealError> {
    let (remainder, cofactors) = normal_form(p, basis, budget)?;
    let mut primes = BTreeSet::new();
    for c in &cofactors {
        primes.extend(c.denominator_primes());
    }
    let cert = MembershipCertificate {
        member: remainder.is_zero(),
        cofactors,
        remainder,
        primes,
    };
    debug_assert!(cert.replay(p, gens), "certificate replay failed");
    Ok(cert)
}

/// Two finite generator lists span the same ideal.
pub fn ideal_equal(
    a: &[GradedPoly],
    b: &[GradedPoly],
    order: &MonomialOrder,
    budget: u64,
) -> Result<bool, IdealError> {
    let ga = groebner_basis(a, order, budget)?;
    for q in b {
        let (r, _) = normal_form(q, &ga, budget)?;
        if !r.is_zero() {
            return Ok(false);
        }
    }
    let gb = groebner_basis(b, order, budget)?;
    for q in a {
        let (r, _) = normal_form(q, &gb, budget)?;
        if !r.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Generators of the elimination ideal: basis elements free of the front
/// variables. The order must be a block order with exactly those in front.
pub fn eliminate(
    gens: &[GradedPoly],
    vars: &[&str],
    order: &MonomialOrder,
    budget: u64,
) -> Result<Vec<GradedPoly>, IdealError> {
    let table = match gens.first() {
        Some(g) => g.table().clone(),
        None => return Ok(vec![]),
    };
    let mut idx = Vec::with_capacity(vars.len());
    for v in vars {
        idx.push(table.index_of(v)?);
    }
    if !order.eliminates(&idx) {
        return Err(IdealError::BadEliminationOrder);
    }
    let basis = groebner_basis(gens, order, budget)?;
    Ok(basis
        .elements
        .iter()
        .filter(|e| e.terms().all(|(m, _)| m.free_of(&idx)))
        .cloned()
        .collect())
}
