//! Invariant complements of sublattices of a `ℤQ`-module `ℤʳ`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::normal_form::{hermite_coordinates, hnf_basis, rank, right_kernel};
use crate::error::{Error, Result};
use crate::finite::FiniteGroup;

/// A finite group acting on `ℤʳ` by integer matrices on column vectors.
#[derive(Clone, Debug)]
pub struct ZGModuleAction {
    group: Arc<FiniteGroup>,
    matrices: Vec<IntMatrix>,
}

impl ZGModuleAction {
    /// Checks that every matrix is `r×r` and nonsingular and that
    /// `M(pq) = M(p)·M(q)` on all pairs.
    pub fn new(group: Arc<FiniteGroup>, matrices: Vec<IntMatrix>) -> Result<Self> {
        if matrices.len() != group.order() {
            return Err(Error::Dimension(format!(
                "{} matrices for a group of order {}",
                matrices.len(),
                group.order()
            )));
        }
        let r = matrices[0].rows();
        for m in &matrices {
            if m.rows() != r || m.cols() != r || m.det()?.is_zero() {
                return Err(Error::InvalidAutomorphism(
                    "action matrices must be square, nonsingular and of one size".into(),
                ));
            }
        }
        for p in 0..group.order() {
            for q in 0..group.order() {
                if matrices[group.mul(p, q)] != matrices[p].mul(&matrices[q])? {
                    return Err(Error::InvalidAutomorphism(format!(
                        "action is not a homomorphism at ({p}, {q})"
                    )));
                }
            }
        }
        Ok(ZGModuleAction { group, matrices })
    }

    /// Extends matrices for the group's generators to the whole group.
    pub fn from_generators(group: Arc<FiniteGroup>, images: &[IntMatrix]) -> Result<Self> {
        let gens = group.generators().to_vec();
        if gens.len() != images.len() {
            return Err(Error::Dimension("one matrix per generator".into()));
        }
        let r = images.first().map_or(0, |m| m.rows());
        let mut mats: Vec<Option<IntMatrix>> = vec![None; group.order()];
        mats[group.identity()] = Some(IntMatrix::identity(r));
        let mut queue = vec![group.identity()];
        while let Some(x) = queue.pop() {
            for (g, img) in gens.iter().zip(images) {
                let y = group.mul(x, *g);
                if mats[y].is_none() {
                    mats[y] = Some(mats[x].as_ref().expect("visited").mul(img)?);
                    queue.push(y);
                }
            }
        }
        Self::new(group, mats.into_iter().map(|m| m.expect("closure")).collect())
    }

    pub fn rank(&self) -> usize {
        self.matrices[0].rows()
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn matrices(&self) -> &[IntMatrix] {
        &self.matrices
    }

    /// Whether the row lattice `w` is mapped into itself by every matrix.
    pub fn is_invariant(&self, w: &IntMatrix) -> bool {
        let h = hnf_basis(w);
        self.matrices.iter().all(|m| {
            (0..w.rows()).all(|i| {
                m.apply(w.row(i))
                    .map(|img| hermite_coordinates(&h, &img).is_some())
                    .unwrap_or(false)
            })
        })
    }
}

/// Result of [`maschke_complement`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complement {
    /// Hermite row basis of `U`.
    pub basis: IntMatrix,
    /// `|ℤʳ : U ⊕ W|`.
    pub index: BigInt,
}

type RatMatrix = Vec<Vec<BigRational>>;

fn to_rat(m: &IntMatrix) -> RatMatrix {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

fn rat_mul(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(BigRational::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

fn rat_inverse(a: &RatMatrix) -> Option<RatMatrix> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !m[i][col].is_zero())?;
        m.swap(col, pivot);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != col && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..2 * n {
                    let v = &f * &m[col][j];
                    m[i][j] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// An action-invariant sublattice `U` with `U ∩ W = 0` and `U ⊕ W` of finite
/// index in `ℤʳ`.
///
/// A rational projector onto `W⊗ℚ` is averaged over the group (the Reynolds
/// operator), which makes it equivariant; `U` is the integer kernel of the
/// averaged projector after clearing denominators, hence saturated.
pub fn maschke_complement(action: &ZGModuleAction, w: &IntMatrix) -> Result<Complement> {
    let r = action.rank();
    if w.cols() != r {
        return Err(Error::Dimension(format!("W has width {}, module has rank {r}", w.cols())));
    }
    if rank(w) != w.rows() {
        return Err(Error::Dimension("W basis is not independent".into()));
    }
    if !action.is_invariant(w) {
        return Err(Error::NotInvariant(format!("{w:?}")));
    }
    let k = w.rows();
    // basis of Q^r: W's vectors then greedily chosen unit vectors, as columns
    let mut cols: Vec<Vec<BigInt>> = w.row_vecs();
    for i in 0..r {
        if cols.len() == r {
            break;
        }
        let mut e = vec![BigInt::zero(); r];
        e[i] = BigInt::one();
        let mut trial = cols.clone();
        trial.push(e);
        let trial_m = IntMatrix::from_row_vecs(trial.clone(), r)?;
        if rank(&trial_m) == trial.len() {
            cols = trial;
        }
    }
    let b = IntMatrix::from_row_vecs(cols, r)?.transpose();
    let b_rat = to_rat(&b);
    let b_inv = rat_inverse(&b_rat).ok_or_else(|| Error::Internal("basis not invertible".into()))?;
    let mut diag = vec![vec![BigRational::zero(); r]; r];
    for (i, row) in diag.iter_mut().enumerate().take(k) {
        row[i] = BigRational::one();
    }
    let proj = rat_mul(&rat_mul(&b_rat, &diag), &b_inv);
    let mut avg = vec![vec![BigRational::zero(); r]; r];
    for m in action.matrices() {
        let m_rat = to_rat(m);
        let m_inv = rat_inverse(&m_rat).ok_or_else(|| Error::Internal("singular action".into()))?;
        let term = rat_mul(&rat_mul(&m_rat, &proj), &m_inv);
        for i in 0..r {
            for j in 0..r {
                avg[i][j] += &term[i][j];
            }
        }
    }
    // common multiple of the denominators
    let denom = avg
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut scaled = IntMatrix::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            scaled[(i, j)] = (&avg[i][j] * BigRational::from_integer(denom.clone())).to_integer();
        }
    }
    let basis = right_kernel(&scaled);
    let index = basis.stack(&hnf_basis(w))?.det()?.abs();
    Ok(Complement { basis, index })
}
