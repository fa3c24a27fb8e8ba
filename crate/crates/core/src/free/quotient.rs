use std::sync::Arc;

use super::word::FreeWord;
use crate::error::{Error, Result};
use crate::finite::FiniteGroup;

/// Homomorphism from a free group to a finite group, fixed by the images of
/// the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuotientHom {
    target: Arc<FiniteGroup>,
    images: Vec<usize>,
}

impl FiniteQuotientHom {
    pub fn new(target: Arc<FiniteGroup>, images: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = images.iter().find(|&&i| i >= target.order()) {
            return Err(Error::StructureMismatch(format!(
                "image {bad} is not an element of the target group"
            )));
        }
        Ok(FiniteQuotientHom { target, images })
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn eval(&self, w: &FreeWord) -> usize {
        let g = &self.target;
        w.letters().iter().fold(g.identity(), |acc, &l| {
            let img = self.images[l.unsigned_abs() as usize - 1];
            g.mul(acc, if l > 0 { img } else { g.inv(img) })
        })
    }

    /// The homomorphism `self ∘ φ⁻¹` for an automorphism `φ` given by
    /// generator images: the unique map `h'` with `h'(φ(aᵢ)) = self(aᵢ)`.
    pub fn precompose_inverse(&self, phi: &[FreeWord]) -> Result<Self> {
        let n = self.target.order();
        let rank = self.rank();
        let mut images = vec![0usize; rank];
        loop {
            let candidate = FiniteQuotientHom {
                target: self.target.clone(),
                images: images.clone(),
            };
            if (0..rank).all(|i| candidate.eval(&phi[i]) == self.images[i]) {
                return Ok(candidate);
            }
            let mut k = rank;
            loop {
                if k == 0 {
                    return Err(Error::InvalidAutomorphism(
                        "substitution is not invertible".into(),
                    ));
                }
                k -= 1;
                images[k] += 1;
                if images[k] < n {
                    break;
                }
                images[k] = 0;
            }
        }
    }
}

/// Builds the evaluator for generator targets in one finite group.
pub fn finite_quotient_hom(target: Arc<FiniteGroup>, images: Vec<usize>) -> Result<FiniteQuotientHom> {
    FiniteQuotientHom::new(target, images)
}
