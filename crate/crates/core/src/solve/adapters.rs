//! Compilation of systems into the leaf solvers' slot-indexed forms.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::finite::{solve_compiled, FiniteGroup, FiniteSystem, FiniteToken};
use crate::free::{solve_free_bounded, FreeBox, FreeOutcome, FreeSystem, FreeToken};
use crate::lattice::{solve_abelian, AbelianEquation, AbelianSystem, AbelianTerm, CongruenceBox};
use crate::recset::{RecBox, RecSet};
use crate::structure::{Automorphism, GroupValue};
use crate::system::{Assignment, Occurrence, System, Token};
use crate::verdict::Verdict;

fn slots(system: &System) -> BTreeMap<&str, usize> {
    system
        .variables
        .iter()
        .enumerate()
        .map(|(i, v)| (v.as_str(), i))
        .collect()
}

fn assignment(system: &System, values: Vec<GroupValue>) -> Assignment {
    system.variables.iter().cloned().zip(values).collect()
}

fn bad_box(b: &RecBox, kind: &str) -> Error {
    Error::StructureMismatch(format!("box {b:?} in a {kind} constraint"))
}

fn bad_value(v: &GroupValue, kind: &str) -> Error {
    Error::StructureMismatch(format!("{v:?} is not a {kind} element"))
}

fn twist_map(o: &Occurrence) -> Option<&Automorphism> {
    o.twist.as_ref().map(|t| &t.map).filter(|m| !matches!(m, Automorphism::Identity))
}

pub fn solve_finite(g: &FiniteGroup, system: &System, cap: u128) -> Result<Verdict> {
    let slot = slots(system);
    let compile = |w: &crate::system::EqWord| -> Result<Vec<FiniteToken>> {
        w.tokens()
            .iter()
            .map(|t| match t {
                Token::Const(GroupValue::Finite(i)) => Ok(FiniteToken::Const(*i)),
                Token::Const(v) => Err(bad_value(v, "finite")),
                Token::Var(o) => Ok(FiniteToken::Var {
                    slot: slot[o.var.as_str()],
                    inverted: o.inverted,
                    twist: match twist_map(o) {
                        None => None,
                        Some(Automorphism::Finite(m)) => Some(m.clone()),
                        Some(other) => {
                            return Err(Error::UnresolvedTwist(format!("{other:?} on a finite group")))
                        }
                    },
                }),
            })
            .collect()
    };
    let mut sys = FiniteSystem {
        num_vars: system.variables.len(),
        domains: vec![None; system.variables.len()],
        ..Default::default()
    };
    for w in &system.equations {
        sys.equations.push(compile(w)?);
    }
    for w in &system.inequations {
        sys.inequations.push(compile(w)?);
    }
    for (var, set) in &system.constraints {
        sys.domains[slot[var.as_str()]] = finite_domain(set)?;
    }
    Ok(match solve_compiled(g, &sys, cap)? {
        Some(vals) => Verdict::Sat(assignment(system, vals.into_iter().map(GroupValue::Finite).collect())),
        None => Verdict::Unsat,
    })
}

fn finite_domain(set: &RecSet) -> Result<Option<Vec<usize>>> {
    let mut out = Vec::new();
    for b in &set.boxes {
        match b {
            RecBox::All => return Ok(None),
            RecBox::Subset(e) => out.extend_from_slice(e),
            other => return Err(bad_box(other, "finite")),
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(Some(out))
}

pub fn solve_free_abelian(rank: usize, system: &System) -> Result<Verdict> {
    let slot = slots(system);
    let compile = |w: &crate::system::EqWord| -> Result<AbelianEquation> {
        let mut rhs = vec![BigInt::from(0); rank];
        let mut terms = Vec::new();
        for t in w.tokens() {
            match t {
                Token::Const(GroupValue::Vector(v)) => {
                    for (r, x) in rhs.iter_mut().zip(v) {
                        *r -= x;
                    }
                }
                Token::Const(v) => return Err(bad_value(v, "free abelian")),
                Token::Var(o) => terms.push(AbelianTerm {
                    var: slot[o.var.as_str()],
                    negated: o.inverted,
                    matrix: match twist_map(o) {
                        None => None,
                        Some(Automorphism::Matrix(m)) => Some(m.clone()),
                        Some(other) => {
                            return Err(Error::UnresolvedTwist(format!("{other:?} on a free abelian group")))
                        }
                    },
                }),
            }
        }
        Ok(AbelianEquation { terms, rhs })
    };
    let mut sys = AbelianSystem::new(rank, system.variables.len());
    for w in &system.equations {
        sys.equations.push(compile(w)?);
    }
    for w in &system.inequations {
        sys.disequations.push(compile(w)?);
    }
    for (var, set) in &system.constraints {
        let mut boxes = Vec::new();
        for b in &set.boxes {
            match b {
                RecBox::All => boxes.push(CongruenceBox::full(rank)),
                RecBox::Congruence(c) => boxes.push(c.clone()),
                other => return Err(bad_box(other, "free abelian")),
            }
        }
        sys.constraints[slot[var.as_str()]] = Some(boxes);
    }
    Ok(match solve_abelian(&sys)? {
        Some(vals) => Verdict::Sat(assignment(system, vals.into_iter().map(GroupValue::Vector).collect())),
        None => Verdict::Unsat,
    })
}

pub fn solve_free(rank: usize, bound: usize, system: &System) -> Result<Verdict> {
    let slot = slots(system);
    let compile = |w: &crate::system::EqWord| -> Result<Vec<FreeToken>> {
        w.tokens()
            .iter()
            .map(|t| match t {
                Token::Const(GroupValue::Word(w)) => Ok(FreeToken::Const(w.clone())),
                Token::Const(v) => Err(bad_value(v, "free")),
                Token::Var(o) => Ok(FreeToken::Var {
                    slot: slot[o.var.as_str()],
                    inverted: o.inverted,
                    twist: match twist_map(o) {
                        None => None,
                        Some(Automorphism::Substitution(images)) => Some(images.clone()),
                        Some(other) => {
                            return Err(Error::UnresolvedTwist(format!("{other:?} on a free group")))
                        }
                    },
                }),
            })
            .collect()
    };
    let mut sys = FreeSystem {
        rank,
        num_vars: system.variables.len(),
        domains: vec![None; system.variables.len()],
        ..Default::default()
    };
    for w in &system.equations {
        sys.equations.push(compile(w)?);
    }
    for w in &system.inequations {
        sys.inequations.push(compile(w)?);
    }
    for (var, set) in &system.constraints {
        let mut boxes: Vec<FreeBox> = Vec::new();
        let mut all = false;
        for b in &set.boxes {
            match b {
                RecBox::All => all = true,
                RecBox::Quotient(fb) => boxes.push(fb.clone()),
                other => return Err(bad_box(other, "free")),
            }
        }
        sys.domains[slot[var.as_str()]] = if all { None } else { Some(boxes) };
    }
    Ok(match solve_free_bounded(&sys, bound)? {
        FreeOutcome::Sat(vals) => {
            Verdict::Sat(assignment(system, vals.into_iter().map(GroupValue::Word).collect::<Vec<_>>()))
        }
        FreeOutcome::Unsat => Verdict::Unsat,
        FreeOutcome::Exhausted => Verdict::Unknown(format!("bound B exhausted (B = {bound})")),
    })
}
