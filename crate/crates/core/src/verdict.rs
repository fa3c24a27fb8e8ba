//! Three-valued verdicts and their aggregation.

use crate::error::{Error, Result};
use crate::system::Assignment;

#[derive(Clone, Debug)]
pub enum Verdict {
    Sat(Assignment),
    Unsat,
    Unknown(String),
}

/// Reasons are ignored.
impl PartialEq for Verdict {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Verdict::Sat(a), Verdict::Sat(b)) => a == b,
            (Verdict::Unsat, Verdict::Unsat) | (Verdict::Unknown(_), Verdict::Unknown(_)) => true,
            _ => false,
        }
    }
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Sat(_) => "sat",
            Verdict::Unsat => "unsat",
            Verdict::Unknown(_) => "unknown",
        }
    }

    pub fn is_sat(&self) -> bool {
        matches!(self, Verdict::Sat(_))
    }

    pub fn is_unsat(&self) -> bool {
        matches!(self, Verdict::Unsat)
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Verdict::Unknown(_))
    }

    pub fn witness(&self) -> Option<&Assignment> {
        match self {
            Verdict::Sat(w) => Some(w),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Any,
    All,
}

/// Aggregates branch verdicts in order.
///
/// `Any`: the first SAT wins, then UNKNOWN, then UNSAT. `All`: UNSAT if any,
/// then UNKNOWN, else SAT with the witnesses merged.
pub fn combine_verdicts(verdicts: impl IntoIterator<Item = Verdict>, mode: Mode) -> Result<Verdict> {
    let mut unknown: Option<String> = None;
    let mut merged = Assignment::new();
    for v in verdicts {
        match (mode, v) {
            (Mode::Any, Verdict::Sat(w)) => return Ok(Verdict::Sat(w)),
            (Mode::All, Verdict::Unsat) => return Ok(Verdict::Unsat),
            (_, Verdict::Unknown(r)) => {
                unknown.get_or_insert(r);
            }
            (Mode::Any, Verdict::Unsat) => {}
            (Mode::All, Verdict::Sat(w)) => {
                for (var, val) in w {
                    match merged.get(&var) {
                        Some(old) if *old != val => return Err(Error::ConflictingAssignment(var)),
                        _ => {
                            merged.insert(var, val);
                        }
                    }
                }
            }
        }
    }
    Ok(match (unknown, mode) {
        (Some(r), _) => Verdict::Unknown(r),
        (None, Mode::Any) => Verdict::Unsat,
        (None, Mode::All) => Verdict::Sat(merged),
    })
}
