//! Systems of twisted equations and inequations, and the witness checker.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::recset::RecSet;
use crate::structure::{Automorphism, GroupStructure, GroupValue};

pub type Assignment = BTreeMap<String, GroupValue>;

/// A named automorphism attached to one occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Twist {
    pub name: String,
    pub map: Automorphism,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence {
    pub var: String,
    pub inverted: bool,
    pub twist: Option<Twist>,
}

impl Occurrence {
    pub fn new(var: impl Into<String>) -> Self {
        Occurrence {
            var: var.into(),
            inverted: false,
            twist: None,
        }
    }

    pub fn inverse(var: impl Into<String>) -> Self {
        Occurrence {
            inverted: true,
            ..Occurrence::new(var)
        }
    }

    pub fn twisted(var: impl Into<String>, twist: Twist, inverted: bool) -> Self {
        Occurrence {
            var: var.into(),
            inverted,
            twist: Some(twist),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    Const(GroupValue),
    Var(Occurrence),
}

/// A word in constants and variable occurrences; empty means the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EqWord(pub Vec<Token>);

impl EqWord {
    pub fn new(tokens: Vec<Token>) -> Self {
        EqWord(tokens)
    }

    pub fn tokens(&self) -> &[Token] {
        &self.0
    }

    pub fn concat(&self, other: &EqWord) -> EqWord {
        EqWord(self.0.iter().chain(&other.0).cloned().collect())
    }

    /// Reverses the word, flipping exponents and inverting constants.
    /// Twisted occurrences keep their twist.
    pub fn inverse(&self, s: &GroupStructure) -> Result<EqWord> {
        self.0
            .iter()
            .rev()
            .map(|t| {
                Ok(match t {
                    Token::Const(c) => Token::Const(s.inv(c)?),
                    Token::Var(o) => Token::Var(Occurrence {
                        inverted: !o.inverted,
                        ..o.clone()
                    }),
                })
            })
            .collect::<Result<_>>()
            .map(EqWord)
    }

    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.0.iter().filter_map(|t| match t {
            Token::Var(o) => Some(o.var.as_str()),
            Token::Const(_) => None,
        })
    }

    pub fn has_twists(&self) -> bool {
        self.0
            .iter()
            .any(|t| matches!(t, Token::Var(Occurrence { twist: Some(_), .. })))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct System {
    pub variables: BTreeSet<String>,
    pub equations: Vec<EqWord>,
    pub inequations: Vec<EqWord>,
    pub constraints: BTreeMap<String, RecSet>,
}

impl System {
    pub fn new<S: Into<String>>(variables: impl IntoIterator<Item = S>) -> Self {
        System {
            variables: variables.into_iter().map(Into::into).collect(),
            ..Default::default()
        }
    }

    pub fn equation(mut self, w: EqWord) -> Self {
        self.equations.push(w);
        self
    }

    pub fn inequation(mut self, w: EqWord) -> Self {
        self.inequations.push(w);
        self
    }

    pub fn constrain(mut self, var: impl Into<String>, set: RecSet) -> Self {
        self.constraints.insert(var.into(), set);
        self
    }

    pub fn words(&self) -> impl Iterator<Item = &EqWord> {
        self.equations.iter().chain(&self.inequations)
    }

    pub fn has_twists(&self) -> bool {
        self.words().any(EqWord::has_twists)
    }

    /// Checks declarations, constants, twists and constraints against `s`.
    pub fn validate(&self, s: &GroupStructure) -> Result<()> {
        for w in self.words() {
            for t in w.tokens() {
                match t {
                    Token::Const(c) => s.check(c)?,
                    Token::Var(o) => {
                        if !self.variables.contains(&o.var) {
                            return Err(Error::UnknownVariable(o.var.clone()));
                        }
                        if let Some(tw) = &o.twist {
                            s.validate_automorphism(&tw.map, false).map_err(|e| {
                                Error::UnresolvedTwist(format!("{}: {e}", tw.name))
                            })?;
                        }
                    }
                }
            }
        }
        for (var, set) in &self.constraints {
            if !self.variables.contains(var) {
                return Err(Error::UnknownVariable(var.clone()));
            }
            set.validate(s)?;
        }
        Ok(())
    }
}

/// Substitutes the assignment into `word` and multiplies out. Each twist is
/// applied to the assigned value before exponentiation.
pub fn evaluate(word: &EqWord, assignment: &Assignment, s: &GroupStructure) -> Result<GroupValue> {
    let mut acc = s.identity();
    for t in word.tokens() {
        let v = match t {
            Token::Const(c) => {
                s.check(c)?;
                c.clone()
            }
            Token::Var(o) => {
                let x = assignment
                    .get(&o.var)
                    .ok_or_else(|| Error::UnknownVariable(o.var.clone()))?;
                s.check(x)?;
                let x = match &o.twist {
                    Some(tw) => s
                        .apply(&tw.map, x)
                        .map_err(|e| Error::UnresolvedTwist(format!("{}: {e}", tw.name)))?,
                    None => x.clone(),
                };
                if o.inverted {
                    s.inv(&x)?
                } else {
                    x
                }
            }
        };
        acc = s.mul(&acc, &v)?;
    }
    Ok(acc)
}

/// Whether `assignment` satisfies every equation, inequation and constraint.
pub fn check_witness(system: &System, assignment: &Assignment, s: &GroupStructure) -> Result<bool> {
    for var in &system.variables {
        if !assignment.contains_key(var) {
            return Ok(false);
        }
    }
    for w in &system.equations {
        if !s.is_identity(&evaluate(w, assignment, s)?) {
            return Ok(false);
        }
    }
    for w in &system.inequations {
        if s.is_identity(&evaluate(w, assignment, s)?) {
            return Ok(false);
        }
    }
    for (var, set) in &system.constraints {
        if !crate::recset::recset_member(&assignment[var], set, s)? {
            return Ok(false);
        }
    }
    Ok(true)
}
