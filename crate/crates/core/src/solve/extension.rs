//! Finite extensions: project to the quotient, then rewrite over the base.
//!
//! With `Y = t_q·X`, every word is moved into the form `t_P·W` using
//! `k·t_q = t_q·α_q⁻¹(k)` and `t_P·t_q = t_{Pq}·c(P,q)`. Occurrences of `X`
//! inside `W` pick up twists `α_s`; compositions of these collapse to a single
//! `α_{s'}` conjugated by a constant.

use crate::error::{Error, Result};
use crate::finite::{enumerate_assignments, FiniteSystem, FiniteToken};
use crate::recset::{RecBox, RecSet};
use crate::structure::{Extension, GroupStructure, GroupValue};
use crate::system::{Assignment, EqWord, Occurrence, System, Token, Twist};
use crate::verdict::Verdict;

use super::Solver;

#[derive(Clone, Debug)]
enum Item {
    Const(GroupValue),
    /// `α_s(X)^{±1}`
    Occ { var: String, inverted: bool, s: usize },
}

struct Rewriter<'a> {
    ext: &'a Extension,
    top: usize,
    items: Vec<Item>,
}

impl<'a> Rewriter<'a> {
    fn new(ext: &'a Extension) -> Self {
        Rewriter {
            ext,
            top: ext.quotient().identity(),
            items: Vec::new(),
        }
    }

    fn push_const(items: &mut Vec<Item>, base: &GroupStructure, k: GroupValue) -> Result<()> {
        if base.is_identity(&k) {
            return Ok(());
        }
        if let Some(Item::Const(prev)) = items.last_mut() {
            *prev = base.mul(prev, &k)?;
            if base.is_identity(prev) {
                items.pop();
            }
            return Ok(());
        }
        items.push(Item::Const(k));
        Ok(())
    }

    /// Moves `t_q` from the right end of the current word to the left.
    fn push_transversal(&mut self, q: usize) -> Result<()> {
        let ext = self.ext;
        let quot = ext.quotient();
        if q == quot.identity() {
            return Ok(());
        }
        let base = ext.base();
        let q_inv = quot.inv(q);
        let c_prime = ext.cocycle(q_inv, q);
        let c_prime_inv = base.inv(c_prime)?;
        let mut out = Vec::with_capacity(self.items.len() + 2);
        Self::push_const(&mut out, base, ext.cocycle(self.top, q).clone())?;
        for item in std::mem::take(&mut self.items) {
            match item {
                Item::Const(k) => Self::push_const(&mut out, base, ext.alpha_inv(q, &k)?)?,
                Item::Occ { var, inverted, s } => {
                    let s2 = quot.mul(q_inv, s);
                    let d = ext.cocycle(q_inv, s);
                    let u = base.mul(&c_prime_inv, &ext.alpha(s2, d)?)?;
                    let u_inv = base.inv(&u)?;
                    Self::push_const(&mut out, base, u)?;
                    out.push(Item::Occ { var, inverted, s: s2 });
                    Self::push_const(&mut out, base, u_inv)?;
                }
            }
        }
        self.items = out;
        self.top = quot.mul(self.top, q);
        Ok(())
    }

    fn push_token(&mut self, t: &Token, q_of: &dyn Fn(&str) -> usize) -> Result<()> {
        let ext = self.ext;
        let base = ext.base();
        match t {
            Token::Const(g) => {
                let (q, k) = g.as_pair()?;
                self.push_transversal(q)?;
                Self::push_const(&mut self.items, base, k.clone())?;
            }
            Token::Var(o) => {
                let qy = q_of(&o.var);
                let one = ext.quotient().identity();
                if !o.inverted {
                    self.push_transversal(qy)?;
                    self.items.push(Item::Occ {
                        var: o.var.clone(),
                        inverted: false,
                        s: one,
                    });
                } else {
                    let qy_inv = ext.quotient().inv(qy);
                    self.items.push(Item::Occ {
                        var: o.var.clone(),
                        inverted: true,
                        s: one,
                    });
                    let c = base.inv(ext.cocycle(qy_inv, qy))?;
                    Self::push_const(&mut self.items, base, c)?;
                    self.push_transversal(qy_inv)?;
                }
            }
        }
        Ok(())
    }

    fn finish(self) -> (usize, EqWord) {
        let ext = self.ext;
        let one = ext.quotient().identity();
        let tokens = self
            .items
            .into_iter()
            .map(|item| match item {
                Item::Const(k) => Token::Const(k),
                Item::Occ { var, inverted, s } => {
                    let twist = if s == one || ext.action(s).is_identity() {
                        None
                    } else {
                        Some(Twist {
                            name: format!("alpha[{}]", quotient_name(ext, s)),
                            map: ext.action(s).clone(),
                        })
                    };
                    Token::Var(Occurrence { var, inverted, twist })
                }
            })
            .collect();
        (self.top, EqWord(tokens))
    }
}

fn quotient_name(ext: &Extension, q: usize) -> String {
    let quot = ext.quotient();
    match (quot.label_of(q), quot.perm(q)) {
        (Some(l), _) => l.to_string(),
        (None, Some(p)) => p.to_string(),
        (None, None) => q.to_string(),
    }
}

/// Rewrites `word` under the quotient assignment `qs` into `(P, W)` with
/// `word = t_P · W` and `W` a twisted word over the base.
fn rewrite(ext: &Extension, word: &EqWord, q_of: &dyn Fn(&str) -> usize) -> Result<(usize, EqWord)> {
    let mut rw = Rewriter::new(ext);
    for t in word.tokens() {
        rw.push_token(t, q_of)?;
    }
    Ok(rw.finish())
}

fn q_project(word: &EqWord, slots: &dyn Fn(&str) -> usize) -> Result<Vec<FiniteToken>> {
    word.tokens()
        .iter()
        .map(|t| {
            Ok(match t {
                Token::Const(g) => FiniteToken::Const(g.as_pair()?.0),
                Token::Var(o) => FiniteToken::Var {
                    slot: slots(&o.var),
                    inverted: o.inverted,
                    twist: None,
                },
            })
        })
        .collect()
}

impl Solver {
    pub(super) fn extension(&self, ext: &Extension, system: &System) -> Result<Verdict> {
        for w in system.words() {
            for t in w.tokens() {
                if let Token::Var(Occurrence { twist: Some(tw), .. }) = t {
                    if !tw.map.is_identity() {
                        return Err(Error::Unsupported(format!(
                            "twisted occurrence `{}` over an extension",
                            tw.name
                        )));
                    }
                }
            }
        }
        let vars: Vec<&String> = system.variables.iter().collect();
        let slot_of = |v: &str| vars.iter().position(|x| x.as_str() == v).expect("declared variable");
        let quot = ext.quotient();

        let mut domains: Vec<Option<Vec<usize>>> = vec![None; vars.len()];
        for (var, set) in &system.constraints {
            let mut qs = Vec::new();
            let mut all = false;
            for b in &set.boxes {
                match b {
                    RecBox::All => all = true,
                    RecBox::Coset { q, .. } => qs.push(*q),
                    other => {
                        return Err(Error::StructureMismatch(format!(
                            "box {other:?} in an extension constraint"
                        )))
                    }
                }
            }
            qs.sort_unstable();
            qs.dedup();
            domains[slot_of(var)] = if all { None } else { Some(qs) };
        }
        let projected = FiniteSystem {
            num_vars: vars.len(),
            equations: system
                .equations
                .iter()
                .map(|w| q_project(w, &slot_of))
                .collect::<Result<_>>()?,
            inequations: Vec::new(),
            domains: domains.clone(),
        };

        let mut unknown: Option<String> = None;
        for qs in enumerate_assignments(quot, vars.len(), &domains) {
            if !projected
                .equations
                .iter()
                .all(|w| projected.evaluate(quot, w, &qs) == quot.identity())
            {
                continue;
            }
            if !self.tick() {
                return Ok(Self::over_budget());
            }
            let q_of = |v: &str| qs[slot_of(v)];
            let mut sub = System::new(system.variables.iter().cloned());
            for w in &system.equations {
                let (top, body) = rewrite(ext, w, &q_of)?;
                if top != quot.identity() {
                    return Err(Error::Internal("projected equation left a quotient part".into()));
                }
                if !body.tokens().is_empty() {
                    sub.equations.push(body);
                }
            }
            let mut refuted = false;
            for w in &system.inequations {
                let (top, body) = rewrite(ext, w, &q_of)?;
                if top == quot.identity() {
                    if body.tokens().is_empty() {
                        refuted = true;
                    }
                    sub.inequations.push(body);
                }
            }
            if refuted {
                continue;
            }
            for (var, set) in &system.constraints {
                let q = q_of(var);
                let boxes: Vec<RecBox> = set
                    .boxes
                    .iter()
                    .filter_map(|b| match b {
                        RecBox::All => Some(RecBox::All),
                        RecBox::Coset { q: bq, base } if *bq == q => Some((**base).clone()),
                        _ => None,
                    })
                    .collect();
                if !boxes.contains(&RecBox::All) {
                    sub.constraints.insert(var.clone(), RecSet::new(boxes));
                }
            }
            self.trace(|| format!("extension: quotient assignment {qs:?}"));
            let v = match ext.base() {
                GroupStructure::Product(fs) => self.product(fs, &sub)?,
                base => self.dispatch(base, &sub)?,
            };
            match v {
                Verdict::Sat(w) => {
                    let lifted: Assignment = w
                        .into_iter()
                        .map(|(var, k)| {
                            let q = q_of(&var);
                            (var, GroupValue::pair(q, k))
                        })
                        .collect();
                    return Ok(Verdict::Sat(lifted));
                }
                Verdict::Unknown(r) => {
                    unknown.get_or_insert(r);
                }
                Verdict::Unsat => {}
            }
        }
        Ok(match unknown {
            Some(r) => Verdict::Unknown(r),
            None => Verdict::Unsat,
        })
    }
}
