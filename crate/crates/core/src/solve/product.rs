//! Direct products, by flattening each variable into coordinate variables.
//!
//! Twists that permute factors tie coordinates together; factors are grouped
//! into orbits of those permutations and each orbit is solved as one
//! multi-variable system over its (common) factor.

use std::collections::HashMap;

use super::Solver;
use crate::error::{Error, Result};
use crate::recset::{RecBox, RecSet};
use crate::structure::{Automorphism, GroupStructure, GroupValue};
use crate::system::{Assignment, EqWord, Occurrence, System, Token, Twist};
use crate::verdict::Verdict;

pub fn reject_permuting_twists(system: &System) -> Result<()> {
    for w in system.words() {
        for t in w.tokens() {
            if let Token::Var(Occurrence { twist: Some(tw), .. }) = t {
                if let Automorphism::Product { source, .. } = &tw.map {
                    if source.iter().enumerate().any(|(i, &s)| i != s) {
                        return Err(Error::Unsupported(format!(
                            "factor-permuting twist `{}` in a direct product system",
                            tw.name
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

fn coordinate_var(var: &str, i: usize) -> String {
    format!("{var}#{i}")
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// Orbits of the factor permutations of all twists, each sorted, ordered
/// by least element.
fn orbits(n: usize, system: &System) -> Result<Vec<Vec<usize>>> {
    let mut parent: Vec<usize> = (0..n).collect();
    for w in system.words() {
        for t in w.tokens() {
            if let Token::Var(Occurrence { twist: Some(tw), .. }) = t {
                match &tw.map {
                    Automorphism::Identity => {}
                    Automorphism::Product { source, .. } if source.len() == n => {
                        for (i, &s) in source.iter().enumerate() {
                            let (a, b) = (find(&mut parent, i), find(&mut parent, s));
                            parent[a.max(b)] = a.min(b);
                        }
                    }
                    other => {
                        return Err(Error::UnresolvedTwist(format!(
                            "{other:?} on a product of {n} factors"
                        )))
                    }
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut index: HashMap<usize, usize> = HashMap::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        let k = *index.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[k].push(i);
    }
    Ok(groups)
}

fn project_word(w: &EqWord, i: usize) -> Result<EqWord> {
    w.tokens()
        .iter()
        .map(|t| {
            Ok(match t {
                Token::Const(c) => Token::Const(
                    c.as_tuple()?
                        .get(i)
                        .cloned()
                        .ok_or_else(|| Error::StructureMismatch(format!("constant has no coordinate {i}")))?,
                ),
                Token::Var(o) => {
                    let (var, twist) = match o.twist.as_ref().map(|t| (&t.name, &t.map)) {
                        None | Some((_, Automorphism::Identity)) => (coordinate_var(&o.var, i), None),
                        Some((name, Automorphism::Product { source, components })) => {
                            let comp = &components[i];
                            let twist = if matches!(comp, Automorphism::Identity) {
                                None
                            } else {
                                Some(Twist {
                                    name: format!("{name}.{i}"),
                                    map: comp.clone(),
                                })
                            };
                            (coordinate_var(&o.var, source[i]), twist)
                        }
                        Some((name, _)) => return Err(Error::UnresolvedTwist(name.clone())),
                    };
                    Token::Var(Occurrence {
                        var,
                        inverted: o.inverted,
                        twist,
                    })
                }
            })
        })
        .collect::<Result<_>>()
        .map(EqWord)
}

/// Odometer over `0..sizes[i]`, first position most significant.
pub(super) fn odometer(sizes: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let empty = sizes.iter().any(|&s| s == 0);
    let mut next = if empty { None } else { Some(vec![0; sizes.len()]) };
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        let mut k = sizes.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            succ[k] += 1;
            if succ[k] < sizes[k] {
                next = Some(succ);
                break;
            }
            succ[k] = 0;
        }
        Some(cur)
    })
}

impl Solver {
    pub(super) fn product(&self, factors: &[GroupStructure], system: &System) -> Result<Verdict> {
        let n = factors.len();
        let orbits = orbits(n, system)?;
        for orbit in &orbits {
            if orbit.iter().any(|&i| factors[i] != factors[orbit[0]]) {
                return Err(Error::Unsupported(
                    "twist permutes non-identical factors".into(),
                ));
            }
        }
        let constrained: Vec<(&String, Vec<Vec<RecBox>>)> = system
            .constraints
            .iter()
            .map(|(v, set)| {
                let comps = set
                    .boxes
                    .iter()
                    .map(|b| b.components(n))
                    .collect::<Result<Vec<_>>>()?;
                Ok((v, comps))
            })
            .collect::<Result<_>>()?;
        let choice_sizes: Vec<usize> = constrained.iter().map(|(_, c)| c.len()).collect();
        let cover_sizes = vec![n; system.inequations.len()];
        if n == 0 {
            return self.empty_product(system, &choice_sizes);
        }
        let orbit_of: Vec<usize> = {
            let mut o = vec![0; n];
            for (k, orbit) in orbits.iter().enumerate() {
                for &i in orbit {
                    o[i] = k;
                }
            }
            o
        };
        let projected_eqs: Vec<Vec<EqWord>> = (0..n)
            .map(|i| system.equations.iter().map(|w| project_word(w, i)).collect())
            .collect::<Result<_>>()?;
        let projected_neqs: Vec<Vec<EqWord>> = (0..n)
            .map(|i| system.inequations.iter().map(|w| project_word(w, i)).collect())
            .collect::<Result<_>>()?;

        let mut memo: HashMap<(usize, Vec<usize>, Vec<(usize, usize)>), Verdict> = HashMap::new();
        let mut unknown: Option<String> = None;
        for choice in odometer(&choice_sizes) {
            for cover in odometer(&cover_sizes) {
                if !self.tick() {
                    return Ok(Self::over_budget());
                }
                let mut parts = Vec::with_capacity(orbits.len());
                let mut branch = Verdict::Sat(Assignment::new());
                for (k, orbit) in orbits.iter().enumerate() {
                    let assigned: Vec<(usize, usize)> = cover
                        .iter()
                        .enumerate()
                        .filter(|&(_, &i)| orbit_of[i] == k)
                        .map(|(j, &i)| (j, i))
                        .collect();
                    let key = (k, choice.clone(), assigned.clone());
                    let v = match memo.get(&key) {
                        Some(v) => v.clone(),
                        None => {
                            let sub = self.orbit_system(system, orbit, &constrained, &choice, &assigned, &projected_eqs, &projected_neqs);
                            let v = self.dispatch(&factors[orbit[0]], &sub)?;
                            memo.insert(key, v.clone());
                            v
                        }
                    };
                    match v {
                        Verdict::Unsat => {
                            branch = Verdict::Unsat;
                            break;
                        }
                        Verdict::Unknown(r) => branch = Verdict::Unknown(r),
                        Verdict::Sat(w) => parts.push(w),
                    }
                }
                match branch {
                    Verdict::Sat(_) => {
                        self.trace(|| format!("product: box choice {choice:?}, cover {cover:?} satisfiable"));
                        return Ok(Verdict::Sat(assemble(system, factors, &parts)?));
                    }
                    Verdict::Unknown(r) => {
                        unknown.get_or_insert(r);
                    }
                    Verdict::Unsat => {}
                }
            }
        }
        Ok(match unknown {
            Some(r) => Verdict::Unknown(r),
            None => Verdict::Unsat,
        })
    }

    #[allow(clippy::too_many_arguments)]
    fn orbit_system(
        &self,
        system: &System,
        orbit: &[usize],
        constrained: &[(&String, Vec<Vec<RecBox>>)],
        choice: &[usize],
        assigned: &[(usize, usize)],
        eqs: &[Vec<EqWord>],
        neqs: &[Vec<EqWord>],
    ) -> System {
        let mut sub = System::new(
            system
                .variables
                .iter()
                .flat_map(|v| orbit.iter().map(move |&i| coordinate_var(v, i))),
        );
        for &i in orbit {
            sub.equations.extend(eqs[i].iter().filter(|w| !w.tokens().is_empty()).cloned());
        }
        for &(j, i) in assigned {
            sub.inequations.push(neqs[i][j].clone());
        }
        for ((var, boxes), &c) in constrained.iter().zip(choice) {
            for &i in orbit {
                let b = &boxes[c][i];
                if *b != RecBox::All {
                    sub.constraints
                        .insert(coordinate_var(var, i), RecSet::new(vec![b.clone()]));
                }
            }
        }
        sub
    }

    fn empty_product(&self, system: &System, choice_sizes: &[usize]) -> Result<Verdict> {
        if !system.inequations.is_empty() || choice_sizes.contains(&0) {
            return Ok(Verdict::Unsat);
        }
        Ok(Verdict::Sat(
            system
                .variables
                .iter()
                .map(|v| (v.clone(), GroupValue::Tuple(vec![])))
                .collect(),
        ))
    }
}

fn assemble(system: &System, factors: &[GroupStructure], parts: &[Assignment]) -> Result<Assignment> {
    let mut out = Assignment::new();
    for var in &system.variables {
        let coords = (0..factors.len())
            .map(|i| {
                let key = coordinate_var(var, i);
                parts
                    .iter()
                    .find_map(|p| p.get(&key).cloned())
                    .ok_or_else(|| Error::Internal(format!("missing coordinate {key}")))
            })
            .collect::<Result<_>>()?;
        out.insert(var.clone(), GroupValue::Tuple(coords));
    }
    Ok(out)
}
