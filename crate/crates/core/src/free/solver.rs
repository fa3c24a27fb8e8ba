//! Bounded search for solutions over a free group, with an abelianization
//! filter that refutes systems whose exponent sums are already inconsistent.

use num_bigint::BigInt;

use super::quotient::FiniteQuotientHom;
use super::stallings::is_automorphism;
use super::word::{abelianize, words_up_to, FreeWord};
use crate::error::{Error, Result};
use crate::lattice::{solve_abelian, AbelianEquation, AbelianSystem, AbelianTerm, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeToken {
    Const(FreeWord),
    Var {
        slot: usize,
        inverted: bool,
        /// Generator images of an automorphism applied before inversion.
        twist: Option<Vec<FreeWord>>,
    },
}

/// Recognisable box over a free group: preimage of `allowed` under `hom`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeBox {
    pub hom: FiniteQuotientHom,
    pub allowed: Vec<usize>,
}

impl FreeBox {
    pub fn contains(&self, w: &FreeWord) -> bool {
        self.allowed.contains(&self.hom.eval(w))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeSystem {
    pub rank: usize,
    pub num_vars: usize,
    pub equations: Vec<Vec<FreeToken>>,
    pub inequations: Vec<Vec<FreeToken>>,
    /// `None` for unconstrained, else a union of boxes.
    pub domains: Vec<Option<Vec<FreeBox>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreeOutcome {
    Sat(Vec<FreeWord>),
    Unsat,
    /// No witness with all words of length at most the bound.
    Exhausted,
}

impl FreeSystem {
    pub fn evaluate(&self, word: &[FreeToken], values: &[FreeWord]) -> FreeWord {
        word.iter().fold(FreeWord::identity(), |acc, tok| match tok {
            FreeToken::Const(c) => acc.mul(c),
            FreeToken::Var {
                slot,
                inverted,
                twist,
            } => {
                let x = match twist {
                    Some(images) => values[*slot].substitute(images),
                    None => values[*slot].clone(),
                };
                acc.mul(&if *inverted { x.inverse() } else { x })
            }
        })
    }

    fn validate(&self) -> Result<()> {
        for word in self.equations.iter().chain(&self.inequations) {
            for tok in word {
                match tok {
                    FreeToken::Const(c) if c.max_generator() > self.rank => {
                        return Err(Error::RankMismatch {
                            expected: self.rank,
                            found: c.max_generator(),
                        })
                    }
                    FreeToken::Var { slot, .. } if *slot >= self.num_vars => {
                        return Err(Error::Dimension(format!("variable slot {slot} out of range")))
                    }
                    FreeToken::Var {
                        twist: Some(images),
                        ..
                    } if !is_automorphism(self.rank, images) => {
                        return Err(Error::InvalidAutomorphism(format!(
                            "{images:?} is not an automorphism of F{}",
                            self.rank
                        )))
                    }
                    _ => {}
                }
            }
        }
        Ok(())
    }

    fn abelianized(&self) -> AbelianSystem {
        let mut ab = AbelianSystem::new(self.rank, self.num_vars);
        for word in &self.equations {
            let mut constant = vec![BigInt::from(0); self.rank];
            let mut terms = Vec::new();
            for tok in word {
                match tok {
                    FreeToken::Const(c) => {
                        for (acc, x) in constant.iter_mut().zip(abelianize(c, self.rank)) {
                            *acc += x;
                        }
                    }
                    FreeToken::Var {
                        slot,
                        inverted,
                        twist,
                    } => {
                        let matrix = twist.as_ref().map(|images| {
                            let cols: Vec<Vec<BigInt>> =
                                images.iter().map(|w| abelianize(w, self.rank)).collect();
                            IntMatrix::from_rows(&cols).transpose()
                        });
                        terms.push(AbelianTerm {
                            var: *slot,
                            negated: *inverted,
                            matrix,
                        });
                    }
                }
            }
            ab.equations.push(AbelianEquation {
                terms,
                rhs: constant.into_iter().map(|x| -x).collect(),
            });
        }
        ab
    }
}

/// Semi-decision over the free group of rank `system.rank`.
///
/// Answers UNSAT when the abelianized equations have no solution over
/// `ℤ^rank` (inequations and constraints are ignored there). Otherwise returns
/// the first witness in the order (longest word length, then length-lex per
/// variable) among words of length at most `bound`, or
/// [`FreeOutcome::Exhausted`].
pub fn solve_free_bounded(system: &FreeSystem, bound: usize) -> Result<FreeOutcome> {
    system.validate()?;
    if solve_abelian(&system.abelianized())?.is_none() {
        return Ok(FreeOutcome::Unsat);
    }
    let words = words_up_to(system.rank, bound);
    let m = system.num_vars;
    if m == 0 {
        let ok = holds_all(system, &[], &system.equations, &system.inequations);
        return Ok(if ok { FreeOutcome::Sat(vec![]) } else { FreeOutcome::Unsat });
    }
    let last_slot = |w: &[FreeToken]| {
        w.iter()
            .filter_map(|t| match t {
                FreeToken::Var { slot, .. } => Some(*slot),
                FreeToken::Const(_) => None,
            })
            .max()
            .unwrap_or(0)
    };
    let mut eq_at: Vec<Vec<Vec<FreeToken>>> = vec![Vec::new(); m];
    let mut neq_at: Vec<Vec<Vec<FreeToken>>> = vec![Vec::new(); m];
    for w in &system.equations {
        eq_at[last_slot(w)].push(w.clone());
    }
    for w in &system.inequations {
        neq_at[last_slot(w)].push(w.clone());
    }
    let allowed: Vec<Vec<usize>> = (0..m)
        .map(|s| {
            (0..words.len())
                .filter(|&k| match system.domains.get(s).and_then(|d| d.as_ref()) {
                    None => true,
                    Some(boxes) => boxes.iter().any(|b| b.contains(&words[k])),
                })
                .collect()
        })
        .collect();
    let mut values = vec![FreeWord::identity(); m];
    for stratum in 0..=bound {
        let limit = words.partition_point(|w| w.len() <= stratum);
        let cands: Vec<&[usize]> = allowed
            .iter()
            .map(|a| &a[..a.partition_point(|&k| k < limit)])
            .collect();
        if cands.iter().any(|c| c.is_empty()) {
            continue;
        }
        let mut pos = vec![0usize; m];
        let mut level = 0;
        loop {
            if pos[level] >= cands[level].len() {
                pos[level] = 0;
                if level == 0 {
                    break;
                }
                level -= 1;
                pos[level] += 1;
                continue;
            }
            values[level] = words[cands[level][pos[level]]].clone();
            let fits = holds_all(system, &values, &eq_at[level], &neq_at[level]);
            if fits && level + 1 == m {
                if values.iter().any(|v| v.len() == stratum) {
                    return Ok(FreeOutcome::Sat(values));
                }
                pos[level] += 1;
            } else if fits {
                level += 1;
            } else {
                pos[level] += 1;
            }
        }
    }
    Ok(FreeOutcome::Exhausted)
}

fn holds_all(
    system: &FreeSystem,
    values: &[FreeWord],
    eqs: &[Vec<FreeToken>],
    neqs: &[Vec<FreeToken>],
) -> bool {
    eqs.iter().all(|w| system.evaluate(w, values).is_empty())
        && neqs.iter().all(|w| !system.evaluate(w, values).is_empty())
}
