//! The text format for systems: parse, print, parse again, and run through
//! the same path as the command-line tool.
//!
//! ```text
//! cargo run --example dsl_roundtrip
//! ```

use clap::Parser;
use groupeq::cli::{run_text, Args};
use groupeq::dsl::{parse_system, print_system};
use groupeq::zoo::load_group;

const SYSTEM: &str = "\
# a reflection X conjugating s to something that commutes with s
vars X Y
eq X s X^-1 = Y
eq Y s = s Y   # sugar for Y s Y^-1 s^-1
constrain X in reflections
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let group = include_str!("../data/groups/s3.json");
    let spec = load_group(group)?;
    let sys = parse_system(SYSTEM, &spec)?;
    let printed = print_system(&sys, &spec)?;
    assert_eq!(parse_system(&printed, &spec)?, sys);
    println!("canonical form:\n{printed}");

    let args = Args::parse_from(["groupeq", "s3.json", "system.eqs", "--stable"]);
    let out = run_text(group, SYSTEM, &args)?;
    print!("exit {}\n{}", out.code, out.render());
    Ok(())
}
