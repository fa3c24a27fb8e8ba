//! Linear Diophantine systems, sublattice intersection, congruence boxes and
//! the hyperplane-avoidance walk used for disequations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::normal_form::{hermite_coordinates, hnf_basis, left_kernel, snf};
use crate::error::{Error, Result};

/// `{ base + basis·z : z ∈ ℤˢ }` where the `s` columns of `basis` are
/// independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLattice {
    pub base: Vec<BigInt>,
    pub basis: IntMatrix,
}

impl AffineLattice {
    pub fn ambient_rank(&self) -> usize {
        self.base.len()
    }

    pub fn num_params(&self) -> usize {
        self.basis.cols()
    }

    pub fn point(&self, params: &[BigInt]) -> Result<Vec<BigInt>> {
        let offset = self.basis.apply(params)?;
        Ok(self.base.iter().zip(offset).map(|(a, b)| a + b).collect())
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        if x.len() != self.base.len() {
            return false;
        }
        let diff: Vec<BigInt> = x.iter().zip(&self.base).map(|(a, b)| a - b).collect();
        hermite_coordinates(&hnf_basis(&self.basis.transpose()), &diff).is_some()
    }
}

/// Exact solution set of `A·x = b`, or `None` when there is no integer
/// solution.
///
/// The direction basis is returned in Hermite form (as columns) and the base
/// point is reduced modulo it, so equal solution sets give equal results.
pub fn solve_diophantine(a: &IntMatrix, b: &[BigInt]) -> Result<Option<AffineLattice>> {
    if a.rows() != b.len() {
        return Err(Error::Dimension(format!(
            "{} equations but right-hand side of length {}",
            a.rows(),
            b.len()
        )));
    }
    let (s, u, v) = snf(a);
    let c = u.apply(b)?;
    let mut y = vec![BigInt::zero(); a.cols()];
    let mut rank = 0;
    for i in 0..a.rows() {
        let d = if i < a.cols() { &s[(i, i)] } else { &BigInt::zero() };
        if d.is_zero() {
            if !c[i].is_zero() {
                return Ok(None);
            }
        } else {
            let (q, r) = c[i].div_rem(d);
            if !r.is_zero() {
                return Ok(None);
            }
            y[i] = q;
            rank = i + 1;
        }
    }
    let base = v.apply(&y)?;
    let free: Vec<usize> = (rank..a.cols()).collect();
    let directions = hnf_basis(&v.select_cols(&free).transpose());
    let base = reduce_modulo(&base, &directions);
    Ok(Some(AffineLattice {
        base,
        basis: directions.transpose(),
    }))
}

/// Reduces `v` modulo the row lattice of a Hermite basis, bringing each pivot
/// coordinate into `[0, pivot)`.
pub fn reduce_modulo(v: &[BigInt], hermite: &IntMatrix) -> Vec<BigInt> {
    let mut out = v.to_vec();
    for i in 0..hermite.rows() {
        if let Some(j) = (0..hermite.cols()).find(|&j| !hermite[(i, j)].is_zero()) {
            let q = out[j].div_floor(&hermite[(i, j)]);
            for k in 0..hermite.cols() {
                out[k] -= &q * &hermite[(i, k)];
            }
        }
    }
    out
}

/// Row basis of the intersection of two sublattices given by row bases.
pub fn lattice_intersect(l1: &IntMatrix, l2: &IntMatrix) -> Result<IntMatrix> {
    if l1.cols() != l2.cols() {
        return Err(Error::Dimension(format!(
            "lattices of rank {} and {}",
            l1.cols(),
            l2.cols()
        )));
    }
    let mut neg = l2.clone();
    for i in 0..neg.rows() {
        neg.negate_row(i);
    }
    let kernel = left_kernel(&l1.stack(&neg)?);
    let first: Vec<usize> = (0..l1.rows()).collect();
    let coeffs = kernel.select_cols(&first);
    if coeffs.rows() == 0 {
        return Ok(IntMatrix::zeros(0, l1.cols()));
    }
    Ok(hnf_basis(&coeffs.mul(l1)?))
}

/// A coset `residue + L` of a full-rank sublattice `L ⊆ ℤʳ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CongruenceBox {
    residue: Vec<BigInt>,
    basis: IntMatrix,
}

impl CongruenceBox {
    /// `basis` rows generate the sublattice; it must have finite index.
    pub fn new(residue: Vec<BigInt>, basis: &IntMatrix) -> Result<Self> {
        if basis.cols() != residue.len() {
            return Err(Error::Dimension(format!(
                "residue of length {} with a basis of width {}",
                residue.len(),
                basis.cols()
            )));
        }
        let h = hnf_basis(basis);
        if h.rows() != h.cols() {
            return Err(Error::Dimension(
                "congruence sublattice must have finite index".into(),
            ));
        }
        let residue = reduce_modulo(&residue, &h);
        Ok(CongruenceBox { residue, basis: h })
    }

    /// The whole of `ℤʳ`.
    pub fn full(rank: usize) -> Self {
        CongruenceBox {
            residue: vec![BigInt::zero(); rank],
            basis: IntMatrix::identity(rank),
        }
    }

    /// `{x : xᵢ ≡ residueᵢ mod moduli[i]}` for positive moduli.
    pub fn modular(residue: &[i64], moduli: &[i64]) -> Result<Self> {
        Self::new(
            residue.iter().map(|&x| BigInt::from(x)).collect(),
            &IntMatrix::diagonal(moduli),
        )
    }

    pub fn rank(&self) -> usize {
        self.residue.len()
    }

    pub fn residue(&self) -> &[BigInt] {
        &self.residue
    }

    /// Hermite row basis of the sublattice.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn index(&self) -> BigInt {
        (0..self.basis.rows()).map(|i| self.basis[(i, i)].clone()).product()
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        if x.len() != self.rank() {
            return false;
        }
        let diff: Vec<BigInt> = x.iter().zip(&self.residue).map(|(a, b)| a - b).collect();
        hermite_coordinates(&self.basis, &diff).is_some()
    }

    /// Image under a unimodular matrix acting on column vectors.
    pub fn map_matrix(&self, m: &IntMatrix) -> Result<Self> {
        let residue = m.apply(&self.residue)?;
        let basis = self.basis.mul(&m.transpose())?;
        Self::new(residue, &basis)
    }

    pub fn translate(&self, by: &[BigInt]) -> Result<Self> {
        if by.len() != self.rank() {
            return Err(Error::Dimension("translation of the wrong length".into()));
        }
        let residue = self.residue.iter().zip(by).map(|(a, b)| a + b).collect();
        Self::new(residue, &self.basis)
    }
}

/// `{z : matrix·z = rhs}` in parameter space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExcludedSet {
    pub matrix: IntMatrix,
    pub rhs: Vec<BigInt>,
}

impl ExcludedSet {
    pub fn contains(&self, z: &[BigInt]) -> bool {
        self.matrix
            .apply(z)
            .map(|v| v == self.rhs)
            .unwrap_or(false)
    }

    fn is_everything(&self) -> bool {
        self.matrix.is_zero() && self.rhs.iter().all(Zero::is_zero)
    }
}

/// Finds `z ∈ ℤˢ` outside every excluded set by walking the moment curve
/// `(t, t², …, tˢ)` for `t = 0, 1, 2, …`.
///
/// Each excluded set lies in a hyperplane, which meets the curve in at most
/// `s` points, so at most `len·s + 1` steps are needed.
pub fn avoid_affine_subsets(num_params: usize, excluded: &[ExcludedSet]) -> Result<Vec<BigInt>> {
    for e in excluded {
        if e.matrix.cols() != num_params || e.matrix.rows() != e.rhs.len() {
            return Err(Error::Dimension("excluded set of the wrong shape".into()));
        }
        if e.is_everything() {
            return Err(Error::NotProper);
        }
    }
    let steps = excluded.len() * num_params.max(1) + 1;
    for t in 0..steps {
        let t = BigInt::from(t);
        let mut z = Vec::with_capacity(num_params);
        let mut power = BigInt::one();
        for _ in 0..num_params {
            power *= &t;
            z.push(power.clone());
        }
        if !excluded.iter().any(|e| e.contains(&z)) {
            return Ok(z);
        }
    }
    Err(Error::Internal("moment curve walk exceeded its bound".into()))
}
