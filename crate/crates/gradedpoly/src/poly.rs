use crate::{Monomial, PolyError, Rational, VariableTable};
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

/// Outcome of a weighted-degree query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightedDegree {
    /// All terms share this weighted degree.
    Homogeneous(u64),
    /// Two witness monomials of different weighted degree.
    Inhomogeneous(Monomial, Monomial),
    /// The zero polynomial has no degree.
    ZeroPolynomial,
}

/// Sparse multivariate polynomial over Q. Canonical form: the term map never
/// stores a zero coefficient, so equality is term-map equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPoly {
    table: Arc<VariableTable>,
    terms: BTreeMap<Monomial, Rational>,
}

impl GradedPoly {
    pub fn zero(table: &Arc<VariableTable>) -> Self {
        GradedPoly {
            table: table.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(table: &Arc<VariableTable>, c: Rational) -> Self {
        let mut p = Self::zero(table);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(table.len()), c);
        }
        p
    }

    pub fn one(table: &Arc<VariableTable>) -> Self {
        Self::constant(table, Rational::one())
    }

    pub fn var(table: &Arc<VariableTable>, name: &str) -> Result<Self, PolyError> {
        let i = table.index_of(name)?;
        Ok(Self::var_index(table, i))
    }

    pub fn var_index(table: &Arc<VariableTable>, index: usize) -> Self {
        let mut p = Self::zero(table);
        p.terms
            .insert(Monomial::var(table.len(), index, 1), Rational::one());
        p
    }

    pub fn from_terms<I>(table: &Arc<VariableTable>, iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Self::zero(table);
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.table.len()))
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn assert_same_table(&self, other: &GradedPoly) {
        assert_eq!(
            self.table, other.table,
            "polynomials over different variable tables"
        );
    }

    pub fn add(&self, other: &GradedPoly) -> GradedPoly {
        self.assert_same_table(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> GradedPoly {
        GradedPoly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &GradedPoly) -> GradedPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> GradedPoly {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        GradedPoly {
            table: self.table.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &GradedPoly) -> GradedPoly {
        self.assert_same_table(other);
        let mut out = Self::zero(&self.table);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> GradedPoly {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        GradedPoly {
            table: self.table.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> GradedPoly {
        let mut out = Self::one(&self.table);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Weighted degree with an inhomogeneity witness; see `WeightedDegree`.
    pub fn weighted_degree(&self) -> WeightedDegree {
        let mut it = self.terms.keys();
        let first = match it.next() {
            None => return WeightedDegree::ZeroPolynomial,
            Some(m) => m,
        };
        let d = first.weighted_degree(&self.table);
        for m in it {
            if m.weighted_degree(&self.table) != d {
                return WeightedDegree::Inhomogeneous(first.clone(), m.clone());
            }
        }
        WeightedDegree::Homogeneous(d)
    }

    pub fn is_homogeneous_of_degree(&self, d: u64) -> bool {
        matches!(self.weighted_degree(), WeightedDegree::Homogeneous(dd) if dd == d)
    }

    /// Largest weighted degree among the terms (None for zero).
    pub fn max_degree(&self) -> Option<u64> {
        self.terms
            .keys()
            .map(|m| m.weighted_degree(&self.table))
            .max()
    }

    /// Union of the prime factors of all coefficient denominators.
    pub fn denominator_primes(&self) -> BTreeSet<u64> {
        let mut out = BTreeSet::new();
        for c in self.terms.values() {
            out.extend(crate::rational::denominator_primes_of(c));
        }
        out
    }

    /// Terms sorted descending by (weighted degree, then reverse-lex), the
    /// order used for canonical printing.
    pub fn sorted_terms_desc(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| grevlex_cmp(b, a, &self.table));
        v
    }

    /// Substitute a single variable (by index) with a polynomial over the
    /// same table.
    pub fn substitute_var(&self, index: usize, image: &GradedPoly) -> GradedPoly {
        self.assert_same_table(image);
        let n = self.table.len();
        let mut out = Self::zero(&self.table);
        let mut powers: Vec<GradedPoly> = vec![Self::one(&self.table)];
        for (m, c) in &self.terms {
            let e = m.exp(index) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().mul(image);
                powers.push(next);
            }
            let mut rest = m.clone();
            rest.0[index] = 0;
            let _ = n;
            out = out.add(&powers[e].mul_term(&rest, c));
        }
        out
    }
}

/// Graded reverse lexicographic comparison (weighted degree first; ties by
/// reverse lex: the last position with differing exponent decides, larger
/// exponent there meaning smaller monomial).
pub fn grevlex_cmp(a: &Monomial, b: &Monomial, table: &VariableTable) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    let da = a.weighted_degree(table);
    let db = b.weighted_degree(table);
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Elementary symmetric polynomial sigma_j of the named variables; sigma_0 is
/// 1 and j beyond the variable count gives 0.
pub fn elementary_symmetric(
    table: &Arc<VariableTable>,
    j: usize,
    vars: &[&str],
) -> Result<GradedPoly, PolyError> {
    let mut idx = Vec::with_capacity(vars.len());
    for v in vars {
        idx.push(table.index_of(v)?);
    }
    Ok(elementary_symmetric_indices(table, j, &idx))
}

pub fn elementary_symmetric_indices(
    table: &Arc<VariableTable>,
    j: usize,
    idx: &[usize],
) -> GradedPoly {
    if j > idx.len() {
        return GradedPoly::zero(table);
    }
    // dynamic programming over prod (1 + x_i t), collecting the t^j coefficient
    let mut layers: Vec<GradedPoly> = (0..=j)
        .map(|l| {
            if l == 0 {
                GradedPoly::one(table)
            } else {
                GradedPoly::zero(table)
            }
        })
        .collect();
    for &i in idx {
        let x = GradedPoly::var_index(table, i);
        for l in (1..=j).rev() {
            let bumped = layers[l - 1].mul(&x);
            layers[l] = layers[l].add(&bumped);
        }
    }
    layers.pop().unwrap()
}
