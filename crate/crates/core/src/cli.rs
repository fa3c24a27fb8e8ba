//! Command-line front end: solve a system file against a group file.

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use crate::dsl::parse_system;
use crate::error::{Error, Result};
use crate::solve::{SolveOptions, Solver, DEFAULT_BRANCH_BUDGET};
use crate::system::check_witness;
use crate::verdict::Verdict;
use crate::zoo::{load_group, write_json};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Json,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "groupeq", about = "Decide systems of equations over structured groups")]
pub struct Args {
    /// Group file (JSON).
    pub group: PathBuf,
    /// System file.
    pub system: PathBuf,
    /// Search bound for every free group.
    #[arg(long)]
    pub bound: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_BRANCH_BUDGET)]
    pub branch_budget: u64,
    /// Include the witness (default).
    #[arg(long, overrides_with = "no_witness")]
    pub witness: bool,
    #[arg(long)]
    pub no_witness: bool,
    /// Human-readable trace on stderr.
    #[arg(long)]
    pub trace: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Report `time_ms` as 0 so output is byte-identical across runs.
    #[arg(long)]
    pub stable: bool,
}

/// Exit code, JSON document and trace lines of one run.
#[derive(Clone, Debug)]
pub struct Outcome {
    pub code: i32,
    pub document: Value,
    pub trace: Vec<String>,
}

impl Outcome {
    pub fn render(&self) -> String {
        let mut out = String::new();
        write_json(&self.document, 0, &mut out);
        out.push('\n');
        out
    }
}

pub fn exit_code(v: &Verdict) -> i32 {
    match v {
        Verdict::Sat(_) => 0,
        Verdict::Unsat => 1,
        Verdict::Unknown(_) => 2,
    }
}

/// Solves from file contents.
pub fn run_text(group: &str, system: &str, args: &Args) -> Result<Outcome> {
    let start = Instant::now();
    let spec = load_group(group)?;
    let sys = parse_system(system, &spec)?;
    let solver = Solver::new(SolveOptions {
        branch_budget: args.branch_budget,
        free_bound: args.bound,
        trace: args.trace,
        ..SolveOptions::default()
    });
    let verdict = solver.decide(&spec.structure, &sys)?;
    let elapsed = if args.stable { 0 } else { start.elapsed().as_millis() as u64 };
    let mut doc = Map::new();
    doc.insert("verdict".into(), json!(verdict.kind()));
    match &verdict {
        Verdict::Sat(w) => {
            if !check_witness(&sys, w, &spec.structure)? {
                return Err(Error::Internal("witness failed the independent check".into()));
            }
            if !args.no_witness {
                doc.insert(
                    "witness".into(),
                    Value::Object(w.iter().map(|(k, v)| (k.clone(), spec.literal(v))).collect()),
                );
            }
        }
        Verdict::Unknown(r) => {
            doc.insert("reason".into(), json!(r));
        }
        Verdict::Unsat => {}
    }
    doc.insert("branches_explored".into(), json!(solver.branches_explored()));
    doc.insert("time_ms".into(), json!(elapsed));
    Ok(Outcome {
        code: exit_code(&verdict),
        document: Value::Object(doc),
        trace: solver.trace_lines(),
    })
}

/// Reads both files and solves; every failure becomes exit code 3.
pub fn run(args: &Args) -> Outcome {
    let result = std::fs::read_to_string(&args.group)
        .map_err(|e| Error::GroupFile(format!("{}: {e}", args.group.display())))
        .and_then(|g| {
            let s = std::fs::read_to_string(&args.system)
                .map_err(|e| Error::GroupFile(format!("{}: {e}", args.system.display())))?;
            run_text(&g, &s, args)
        });
    result.unwrap_or_else(|e| Outcome {
        code: 3,
        document: json!({"error": e.to_string()}),
        trace: Vec::new(),
    })
}
