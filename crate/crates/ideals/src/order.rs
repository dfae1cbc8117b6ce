use gradedpoly::{Monomial, VariableTable};
use std::cmp::Ordering;

/// Total multiplicative monomial order tied to a variable table. Graded kinds
/// compare weighted degree first, so weighted gradings are respected natively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Weighted degree, ties by reverse lexicographic comparison.
    GradedRevLex,
    /// Pure lexicographic on positions.
    Lex,
    /// Two-block elimination order: compare the front block (by weighted
    /// degree then grevlex within it) before the rest. Monomials free of the
    /// front variables are smaller than any monomial involving them.
    Block { front: Vec<usize> },
}

impl MonomialOrder {
    pub fn block(table: &VariableTable, front_names: &[&str]) -> Result<Self, gradedpoly::PolyError> {
        let mut front = Vec::with_capacity(front_names.len());
        for n in front_names {
            front.push(table.index_of(n)?);
        }
        Ok(MonomialOrder::Block { front })
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial, table: &VariableTable) -> Ordering {
        match self {
            MonomialOrder::GradedRevLex => grevlex(a, b, table, None),
            MonomialOrder::Lex => {
                for i in 0..a.len() {
                    match a.exp(i).cmp(&b.exp(i)) {
                        Ordering::Equal => {}
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Block { front } => {
                let da: u64 = front.iter().map(|&i| a.exp(i) as u64 * table.weight(i)).sum();
                let db: u64 = front.iter().map(|&i| b.exp(i) as u64 * table.weight(i)).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    o => return o,
                }
                match revlex_on(a, b, front) {
                    Ordering::Equal => {}
                    o => return o,
                }
                grevlex(a, b, table, Some(front))
            }
        }
    }

    /// True when this order makes `front`-free monomials an initial segment,
    /// i.e. it is usable for eliminating exactly those variables.
    pub fn eliminates(&self, vars: &[usize]) -> bool {
        match self {
            MonomialOrder::Block { front } => {
                let mut a = front.clone();
                let mut b = vars.to_vec();
                a.sort_unstable();
                b.sort_unstable();
                a == b
            }
            _ => false,
        }
    }
}

fn revlex_on(a: &Monomial, b: &Monomial, positions: &[usize]) -> Ordering {
    for &i in positions.iter().rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

fn grevlex(a: &Monomial, b: &Monomial, table: &VariableTable, skip: Option<&[usize]>) -> Ordering {
    let deg = |m: &Monomial| -> u64 {
        (0..m.len())
            .filter(|i| skip.map_or(true, |s| !s.contains(i)))
            .map(|i| m.exp(i) as u64 * table.weight(i))
            .sum()
    };
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if skip.map_or(false, |s| s.contains(&i)) {
            continue;
        }
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => {}
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}
