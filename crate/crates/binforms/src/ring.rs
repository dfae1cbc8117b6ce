use crate::BinformsError;
use gradedpoly::{GradedPoly, Monomial, Rational, RingMap, VariableTable, WeightedDegree};
use num_traits::One;
use std::sync::Arc;

/// Internal working table for projective-ring classes: everything the
/// pushforward formulas produce lives in the subring generated by
/// tau = t0 - t1 and h0 = xi - N*t0.
pub fn tauh_table() -> Arc<VariableTable> {
    VariableTable::unweighted(&["tau", "h0"])
}

/// The ambient ring of P(A(N)): variables t0, t1, xi (all weight 1), with
/// the single relation p_N(xi) = h_0 h_1 ... h_N where h_i = xi-(N-i)t0-i*t1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveRing {
    n: u32,
    table: Arc<VariableTable>,
}

impl ProjectiveRing {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1, "projective dimension must be positive");
        ProjectiveRing {
            n,
            table: VariableTable::unweighted(&["t0", "t1", "xi"]),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    /// h_i = xi - (N-i) t0 - i t1.
    pub fn h_linear_form(&self, i: u32) -> Result<GradedPoly, BinformsError> {
        if i > self.n {
            return Err(BinformsError::Param(format!(
                "h index {i} exceeds N = {}",
                self.n
            )));
        }
        let t0 = GradedPoly::var(&self.table, "t0")?;
        let t1 = GradedPoly::var(&self.table, "t1")?;
        let xi = GradedPoly::var(&self.table, "xi")?;
        Ok(xi
            .sub(&t0.scale(&Rational::from_integer(((self.n - i) as i64).into())))
            .sub(&t1.scale(&Rational::from_integer((i as i64).into()))))
    }

    /// The defining relation p_N(xi) = prod_{i=0..N} h_i, monic of degree
    /// N+1 in xi.
    pub fn defining_polynomial(&self) -> GradedPoly {
        let mut out = GradedPoly::one(&self.table);
        for i in 0..=self.n {
            out = out.mul(&self.h_linear_form(i).expect("index in range"));
        }
        out
    }

    /// Reduce modulo p_N by univariate division in xi (p_N is monic, so the
    /// reduction is exact and canonical; the result has xi-degree <= N).
    pub fn normal_form(&self, p: &GradedPoly) -> GradedPoly {
        let xi_idx = self.table.index_of("xi").expect("xi in table");
        let pn = self.defining_polynomial();
        let mut work = p.clone();
        loop {
            // leading xi-degree
            let maxdeg = work.terms().map(|(m, _)| m.exp(xi_idx)).max().unwrap_or(0);
            if maxdeg <= self.n {
                return work;
            }
            // collect the xi^maxdeg slice as q(t) * xi^maxdeg
            let mut slice = GradedPoly::zero(&self.table);
            for (m, c) in work.terms() {
                if m.exp(xi_idx) == maxdeg {
                    let mut rest = m.clone();
                    rest.0[xi_idx] = 0;
                    slice.add_term(rest, c.clone());
                }
            }
            // work -= slice * xi^(maxdeg-N-1) * p_N
            let shift = Monomial::var(self.table.len(), xi_idx, maxdeg - self.n - 1);
            let sub = slice.mul(&pn).mul_term(&shift, &Rational::one());
            work = work.sub(&sub);
        }
    }

    /// Inject a (tau, h0) polynomial: tau -> t0 - t1, h0 -> xi - N t0.
    pub fn from_tauh(&self, p: &GradedPoly) -> Result<GradedPoly, BinformsError> {
        let th = tauh_table();
        if p.table() != &th {
            return Err(BinformsError::Poly(gradedpoly::PolyError::TableMismatch));
        }
        let t0 = GradedPoly::var(&self.table, "t0")?;
        let t1 = GradedPoly::var(&self.table, "t1")?;
        let xi = GradedPoly::var(&self.table, "xi")?;
        let map = RingMap::new(
            &th,
            &self.table,
            &[
                ("tau", t0.sub(&t1)),
                (
                    "h0",
                    xi.sub(&t0.scale(&Rational::from_integer((self.n as i64).into()))),
                ),
            ],
        )?;
        Ok(map.substitute(p)?)
    }
}

/// The Chow ring of (P^1)^n: variables tau, h_1..h_n with the relations
/// h_i^2 + tau h_i = 0; normal forms are square-free in the h's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalRing {
    n: u32,
    table: Arc<VariableTable>,
}

impl DiagonalRing {
    pub fn new(n: u32) -> Self {
        assert!(n >= 1);
        let mut names: Vec<String> = vec!["tau".to_string()];
        for i in 1..=n {
            names.push(format!("h{i}"));
        }
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        DiagonalRing {
            n,
            table: VariableTable::unweighted(&refs),
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn h_var(&self, i: u32) -> Result<GradedPoly, BinformsError> {
        if i == 0 || i > self.n {
            return Err(BinformsError::Param(format!(
                "h index {i} outside 1..={}",
                self.n
            )));
        }
        Ok(GradedPoly::var(&self.table, &format!("h{i}"))?)
    }

    pub fn tau(&self) -> GradedPoly {
        GradedPoly::var(&self.table, "tau").expect("tau in table")
    }

    /// Rewrite every h_i^e with e >= 2 as (-tau)^(e-1) h_i.
    pub fn normal_form(&self, p: &GradedPoly) -> GradedPoly {
        let tau_idx = self.table.index_of("tau").expect("tau");
        let mut out = GradedPoly::zero(&self.table);
        for (m, c) in p.terms() {
            let mut mono = Monomial(m.0.clone());
            let mut coef = c.clone();
            let mut tau_extra = 0u32;
            let mut flips = 0u32;
            for i in 0..mono.0.len() {
                if i == tau_idx {
                    continue;
                }
                let e = mono.0[i];
                if e >= 2 {
                    tau_extra += e - 1;
                    flips += e - 1;
                    mono.0[i] = 1;
                }
            }
            mono.0[tau_idx] += tau_extra;
            if flips % 2 == 1 {
                coef = -coef;
            }
            out.add_term(mono, coef);
        }
        out
    }
}

/// Ambient-ring tag for an equivariant class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingTag {
    Projective(u32),
    Diagonal(u32),
}

/// A cycle class in normal form, tagged with its ambient ring and recorded
/// (weighted) degree. Equality is term-map equality within the same ring.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivariantClass {
    pub ring: RingTag,
    pub value: GradedPoly,
    pub degree: u64,
}

impl EquivariantClass {
    pub fn projective(ring: &ProjectiveRing, raw: &GradedPoly) -> Result<Self, BinformsError> {
        let value = ring.normal_form(raw);
        let degree = match value.weighted_degree() {
            WeightedDegree::Homogeneous(d) => d,
            WeightedDegree::ZeroPolynomial => 0,
            WeightedDegree::Inhomogeneous(a, b) => {
                return Err(BinformsError::Param(format!(
                    "class is not homogeneous: {a:?} vs {b:?}"
                )))
            }
        };
        Ok(EquivariantClass {
            ring: RingTag::Projective(ring.n()),
            value,
            degree,
        })
    }

    pub fn diagonal(ring: &DiagonalRing, raw: &GradedPoly) -> Result<Self, BinformsError> {
        let value = ring.normal_form(raw);
        let degree = match value.weighted_degree() {
            WeightedDegree::Homogeneous(d) => d,
            WeightedDegree::ZeroPolynomial => 0,
            WeightedDegree::Inhomogeneous(a, b) => {
                return Err(BinformsError::Param(format!(
                    "class is not homogeneous: {a:?} vs {b:?}"
                )))
            }
        };
        Ok(EquivariantClass {
            ring: RingTag::Diagonal(ring.n()),
            value,
            degree,
        })
    }
}
