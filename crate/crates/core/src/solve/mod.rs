//! Solvers over structured groups and the reductions between them.

mod adapters;
mod embed;
mod extension;
mod product;
mod wreath;

use std::cell::{Cell, RefCell};

pub use embed::{gross_kovacs_embed, Embedding, OrbitEmbedding};
pub use wreath::{build_wreath, wreath_from_tuple, wreath_to_tuple};

use crate::error::{Error, Result};
use crate::finite::DEFAULT_ASSIGNMENT_CAP;
use crate::structure::{Extension, GroupStructure};
use crate::system::{check_witness, System};
use crate::verdict::Verdict;

pub const DEFAULT_BRANCH_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub branch_budget: u64,
    pub assignment_cap: u128,
    /// Overrides the search bound of every free group in the structure.
    pub free_bound: Option<usize>,
    pub trace: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            branch_budget: DEFAULT_BRANCH_BUDGET,
            assignment_cap: DEFAULT_ASSIGNMENT_CAP,
            free_bound: None,
            trace: false,
        }
    }
}

const BUDGET_REASON: &str = "branch budget";

/// Runs solvers with a shared branch budget and optional trace.
///
/// Branches are explored sequentially in a fixed order, so witnesses are
/// reproducible.
#[derive(Debug, Default)]
pub struct Solver {
    options: SolveOptions,
    branches: Cell<u64>,
    log: RefCell<Vec<String>>,
}

impl Solver {
    pub fn new(options: SolveOptions) -> Self {
        Solver {
            options,
            branches: Cell::new(0),
            log: RefCell::new(Vec::new()),
        }
    }

    pub fn options(&self) -> &SolveOptions {
        &self.options
    }

    pub fn branches_explored(&self) -> u64 {
        self.branches.get()
    }

    pub fn trace_lines(&self) -> Vec<String> {
        self.log.borrow().clone()
    }

    /// Counts one branch; false once the budget is spent.
    fn tick(&self) -> bool {
        let n = self.branches.get();
        if n >= self.options.branch_budget {
            return false;
        }
        self.branches.set(n + 1);
        true
    }

    fn trace(&self, line: impl FnOnce() -> String) {
        if self.options.trace {
            self.log.borrow_mut().push(line());
        }
    }

    fn over_budget() -> Verdict {
        Verdict::Unknown(BUDGET_REASON.into())
    }

    /// Solves `system` over `s`, dispatching on the kind of structure.
    pub fn solve(&self, s: &GroupStructure, system: &System) -> Result<Verdict> {
        system.validate(s)?;
        self.dispatch(s, system)
    }

    fn dispatch(&self, s: &GroupStructure, system: &System) -> Result<Verdict> {
        match s {
            GroupStructure::Finite(g) => self.finite(g, system),
            GroupStructure::FreeAbelian { rank } => adapters::solve_free_abelian(*rank, system),
            GroupStructure::Free { rank, bound, .. } => {
                if !self.tick() {
                    return Ok(Self::over_budget());
                }
                adapters::solve_free(*rank, self.options.free_bound.unwrap_or(*bound), system)
            }
            GroupStructure::Product(fs) => {
                product::reject_permuting_twists(system)?;
                self.product(fs, system)
            }
            GroupStructure::Extension(e) => self.extension(e, system),
        }
    }

    fn finite(&self, g: &crate::finite::FiniteGroup, system: &System) -> Result<Verdict> {
        if !self.tick() {
            return Ok(Self::over_budget());
        }
        adapters::solve_finite(g, system, self.options.assignment_cap)
    }

    /// Solves over a finite group by exhaustive search.
    pub fn solve_finite(&self, g: &crate::finite::FiniteGroup, system: &System) -> Result<Verdict> {
        system.validate(&GroupStructure::Finite(std::sync::Arc::new(g.clone())))?;
        self.finite(g, system)
    }

    /// Direct products: ANY over box choices and inequation covers, ALL
    /// over factors. Factor-permuting twists are rejected.
    pub fn solve_direct_product(&self, factors: &[GroupStructure], system: &System) -> Result<Verdict> {
        system.validate(&GroupStructure::Product(factors.to_vec()))?;
        product::reject_permuting_twists(system)?;
        self.product(factors, system)
    }

    /// Finite extensions: enumerate solutions of the projection to `Q`,
    /// rewrite each into a twisted system over the base, and solve there.
    pub fn solve_extension(&self, ext: &Extension, system: &System) -> Result<Verdict> {
        system.validate(&GroupStructure::Extension(std::sync::Arc::new(ext.clone())))?;
        self.extension(ext, system)
    }

    /// Routes an extension over a product through the embedding into a
    /// product of wreath products, and pulls the witness back.
    pub fn solve_virtually_direct_product(&self, ext: &std::sync::Arc<Extension>, system: &System) -> Result<Verdict> {
        system.validate(&GroupStructure::Extension(ext.clone()))?;
        self.virtually_direct(ext, system)
    }

    fn virtually_direct(&self, ext: &std::sync::Arc<Extension>, system: &System) -> Result<Verdict> {
        let emb = Embedding::new(ext.clone())?;
        let mapped = emb.map_system(system)?;
        self.trace(|| format!("embedded into a product of {} wreath products", emb.orbits().len()));
        match self.dispatch(emb.target(), &mapped)? {
            Verdict::Sat(w) => {
                let mut out = crate::system::Assignment::new();
                for (var, val) in w {
                    out.insert(var, emb.pull_back(&val)?);
                }
                Ok(Verdict::Sat(out))
            }
            other => Ok(other),
        }
    }

    /// Top-level decision: picks the embedding pipeline for extensions whose
    /// action permutes base factors, and re-checks every witness.
    pub fn decide(&self, s: &GroupStructure, system: &System) -> Result<Verdict> {
        system.validate(s)?;
        let verdict = match s {
            GroupStructure::Extension(e) if e.permutes_factors() && !system.has_twists() => {
                self.virtually_direct(e, system)?
            }
            _ => self.dispatch(s, system)?,
        };
        if let Verdict::Sat(w) = &verdict {
            if !check_witness(system, w, s)? {
                return Err(Error::Internal("witness failed the independent check".into()));
            }
        }
        Ok(verdict)
    }
}

/// [`Solver::decide`] with default options.
pub fn decide(s: &GroupStructure, system: &System) -> Result<Verdict> {
    Solver::default().decide(s, system)
}
