use crate::PolyError;
use std::fmt;
use std::sync::Arc;

/// An ordered list of named variables with positive integer weights. The
/// order is part of the identity: monomial exponent vectors and monomial
/// orders refer to positions in this table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableTable {
    names: Vec<String>,
    weights: Vec<u64>,
}

impl VariableTable {
    /// Build a table from `(name, weight)` pairs. Names must be unique and
    /// weights positive.
    pub fn new(vars: &[(&str, u64)]) -> Arc<Self> {
        let mut names = Vec::with_capacity(vars.len());
        let mut weights = Vec::with_capacity(vars.len());
        for (n, w) in vars {
            assert!(*w > 0, "variable weight must be positive");
            assert!(
                !names.contains(&n.to_string()),
                "duplicate variable name `{n}`"
            );
            names.push(n.to_string());
            weights.push(*w);
        }
        Arc::new(VariableTable { names, weights })
    }

    /// All weights 1.
    pub fn unweighted(names: &[&str]) -> Arc<Self> {
        let vars: Vec<(&str, u64)> = names.iter().map(|n| (*n, 1)).collect();
        Self::new(&vars)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn index_of(&self, name: &str) -> Result<usize, PolyError> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }
}

impl fmt::Display for VariableTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .names
            .iter()
            .zip(&self.weights)
            .map(|(n, w)| {
                if *w == 1 {
                    n.clone()
                } else {
                    format!("{n}:{w}")
                }
            })
            .collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
