use crate::{GradedPoly, PolyError, VariableTable};
use std::sync::Arc;

/// A ring homomorphism determined by the images of the source variables.
#[derive(Debug, Clone, PartialEq)]
pub struct RingMap {
    source: Arc<VariableTable>,
    target: Arc<VariableTable>,
    images: Vec<GradedPoly>,
}

impl RingMap {
    /// Every source variable must receive an image over the target table.
    pub fn new(
        source: &Arc<VariableTable>,
        target: &Arc<VariableTable>,
        assignment: &[(&str, GradedPoly)],
    ) -> Result<Self, PolyError> {
        let mut images: Vec<Option<GradedPoly>> = vec![None; source.len()];
        for (name, img) in assignment {
            let i = source.index_of(name)?;
            if img.table() != target {
                return Err(PolyError::TableMismatch);
            }
            images[i] = Some(img.clone());
        }
        let mut out = Vec::with_capacity(source.len());
        for (i, img) in images.into_iter().enumerate() {
            match img {
                Some(p) => out.push(p),
                None => return Err(PolyError::MissingAssignment(source.name(i).to_string())),
            }
        }
        Ok(RingMap {
            source: source.clone(),
            target: target.clone(),
            images: out,
        })
    }

    /// The identity map of a table.
    pub fn identity(table: &Arc<VariableTable>) -> Self {
        let images = (0..table.len())
            .map(|i| GradedPoly::var_index(table, i))
            .collect();
        RingMap {
            source: table.clone(),
            target: table.clone(),
            images,
        }
    }

    pub fn source(&self) -> &Arc<VariableTable> {
        &self.source
    }

    pub fn target(&self) -> &Arc<VariableTable> {
        &self.target
    }

    pub fn image_of(&self, name: &str) -> Result<&GradedPoly, PolyError> {
        Ok(&self.images[self.source.index_of(name)?])
    }

    /// Apply the homomorphism.
    pub fn substitute(&self, p: &GradedPoly) -> Result<GradedPoly, PolyError> {
        if p.table() != &self.source {
            return Err(PolyError::TableMismatch);
        }
        let mut out = GradedPoly::zero(&self.target);
        // cache powers per variable to keep repeated exponents cheap
        let mut powers: Vec<Vec<GradedPoly>> = self
            .images
            .iter()
            .map(|_| vec![GradedPoly::one(&self.target)])
            .collect();
        for (m, c) in p.terms() {
            let mut term = GradedPoly::constant(&self.target, c.clone());
            for i in 0..self.source.len() {
                let e = m.exp(i) as usize;
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&self.images[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e]);
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Composition: (self ∘ first)(x) = self(first(x)).
    pub fn compose(&self, first: &RingMap) -> Result<RingMap, PolyError> {
        if first.target != self.source {
            return Err(PolyError::TableMismatch);
        }
        let images = first
            .images
            .iter()
            .map(|img| self.substitute(img))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RingMap {
            source: first.source.clone(),
            target: self.target.clone(),
            images,
        })
    }
}
