//! Twisted equations and disequations over `ℤʳ` with congruence constraints.

use num_bigint::BigInt;
use num_traits::Zero;

use super::diophantine::{avoid_affine_subsets, solve_diophantine, CongruenceBox, ExcludedSet};
use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// `sign · T · x_var`, with `T` the identity when `matrix` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianTerm {
    pub var: usize,
    pub negated: bool,
    pub matrix: Option<IntMatrix>,
}

/// `Σ terms = rhs` (or `≠ rhs` when used as a disequation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianEquation {
    pub terms: Vec<AbelianTerm>,
    pub rhs: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianSystem {
    pub rank: usize,
    pub num_vars: usize,
    pub equations: Vec<AbelianEquation>,
    pub disequations: Vec<AbelianEquation>,
    /// Per variable: `None` for unconstrained, else a union of boxes.
    pub constraints: Vec<Option<Vec<CongruenceBox>>>,
}

impl AbelianSystem {
    pub fn new(rank: usize, num_vars: usize) -> Self {
        AbelianSystem {
            rank,
            num_vars,
            equations: Vec::new(),
            disequations: Vec::new(),
            constraints: vec![None; num_vars],
        }
    }

    fn validate(&self) -> Result<()> {
        let r = self.rank;
        for eq in self.equations.iter().chain(&self.disequations) {
            if eq.rhs.len() != r {
                return Err(Error::Dimension("right-hand side of the wrong rank".into()));
            }
            for t in &eq.terms {
                if t.var >= self.num_vars {
                    return Err(Error::Dimension(format!("variable slot {} out of range", t.var)));
                }
                if let Some(m) = &t.matrix {
                    if m.rows() != r || m.cols() != r || m.det()?.is_zero() {
                        return Err(Error::InvalidAutomorphism(
                            "twist matrices must be square and nonsingular".into(),
                        ));
                    }
                }
            }
        }
        if self.constraints.len() != self.num_vars {
            return Err(Error::Dimension("one constraint slot per variable".into()));
        }
        Ok(())
    }

    /// Writes `Σ terms` as `r` rows over the unknown vector of width `width`.
    fn rows_of(&self, eq: &AbelianEquation, width: usize) -> IntMatrix {
        let r = self.rank;
        let mut m = IntMatrix::zeros(r, width);
        for t in &eq.terms {
            for i in 0..r {
                for j in 0..r {
                    let coeff = match &t.matrix {
                        Some(mat) => mat[(i, j)].clone(),
                        None if i == j => BigInt::from(1),
                        None => continue,
                    };
                    let coeff = if t.negated { -coeff } else { coeff };
                    m[(i, t.var * r + j)] += coeff;
                }
            }
        }
        m
    }
}

/// Outcome of [`solve_abelian`]: a witness vector per variable, or `None`.
pub type AbelianOutcome = Option<Vec<Vec<BigInt>>>;

/// Decides an [`AbelianSystem`]. Never inconclusive.
///
/// For each choice of one congruence box per constrained variable, the
/// equations and the box memberships (as `x - Bᵀz = residue` with fresh
/// integer unknowns `z`) are solved together; each disequation then excludes
/// nothing, everything, or an affine subset of the parameter space lying in a
/// hyperplane, and a surviving parameter point is found on the moment curve.
pub fn solve_abelian(system: &AbelianSystem) -> Result<AbelianOutcome> {
    system.validate()?;
    let choices: Vec<Vec<Option<&CongruenceBox>>> = system
        .constraints
        .iter()
        .map(|c| match c {
            None => vec![None],
            Some(boxes) => boxes.iter().map(Some).collect(),
        })
        .collect();
    if choices.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }
    let mut pos = vec![0usize; choices.len()];
    loop {
        let pick: Vec<Option<&CongruenceBox>> =
            pos.iter().zip(&choices).map(|(&p, c)| c[p]).collect();
        if let Some(w) = solve_branch(system, &pick)? {
            return Ok(Some(w));
        }
        let mut i = choices.len();
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            pos[i] += 1;
            if pos[i] < choices[i].len() {
                break;
            }
            pos[i] = 0;
        }
    }
}

fn solve_branch(system: &AbelianSystem, boxes: &[Option<&CongruenceBox>]) -> Result<AbelianOutcome> {
    let r = system.rank;
    let main = system.num_vars * r;
    let constrained: Vec<usize> = (0..boxes.len()).filter(|&v| boxes[v].is_some()).collect();
    let width = main + constrained.len() * r;
    let mut a = IntMatrix::zeros(0, width);
    let mut b: Vec<BigInt> = Vec::new();
    for eq in &system.equations {
        a = a.stack(&system.rows_of(eq, width))?;
        b.extend(eq.rhs.iter().cloned());
    }
    for (k, &v) in constrained.iter().enumerate() {
        let bx = boxes[v].expect("constrained");
        let mut rows = IntMatrix::zeros(r, width);
        for i in 0..r {
            rows[(i, v * r + i)] = BigInt::from(1);
            for j in 0..r {
                // x_v - Σ_j z_j · basis_row_j = residue
                rows[(i, main + k * r + j)] = -bx.basis()[(j, i)].clone();
            }
        }
        a = a.stack(&rows)?;
        b.extend(bx.residue().iter().cloned());
    }
    let Some(solutions) = solve_diophantine(&a, &b)? else {
        return Ok(None);
    };
    let mut excluded = Vec::new();
    for dis in &system.disequations {
        let d = system.rows_of(dis, width);
        let c = d.mul(&solutions.basis)?;
        let dv = d.apply(&solutions.base)?;
        let e: Vec<BigInt> = dis.rhs.iter().zip(dv).map(|(x, y)| x - y).collect();
        if c.is_zero() {
            if e.iter().all(Zero::is_zero) {
                return Ok(None);
            }
            continue;
        }
        excluded.push(ExcludedSet { matrix: c, rhs: e });
    }
    let z = avoid_affine_subsets(solutions.num_params(), &excluded)?;
    let u = solutions.point(&z)?;
    Ok(Some(
        (0..system.num_vars)
            .map(|v| u[v * r..(v + 1) * r].to_vec())
            .collect(),
    ))
}
