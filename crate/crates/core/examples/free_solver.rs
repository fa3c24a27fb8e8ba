//! Bounded search in a free group: SAT with a witness, UNSAT when the
//! abelianized system has no solution, UNKNOWN when the bound runs out.

use groupeq::dsl::parse_system;
use groupeq::solve::{SolveOptions, Solver};
use groupeq::verdict::Verdict;
use groupeq::zoo::load_group;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f2 = load_group(include_str!("../data/groups/f2.json"))?;
    let cases = [
        "vars X\neq X a X^-1 a^-1\nneq X\n",
        "vars X\neq X X a^-1\n",
        "vars X\neq X a X^-1 b^-1\n",
        "vars X\neq X X = a b a^-1 b^-1\n",
        "vars X Y\neq X Y = b a\nneq X\nneq Y\n",
    ];
    for bound in [1, 3] {
        println!("bound {bound}");
        let solver = Solver::new(SolveOptions { free_bound: Some(bound), ..SolveOptions::default() });
        for text in cases {
            let sys = parse_system(text, &f2)?;
            let v = solver.decide(&f2.structure, &sys)?;
            let detail = match &v {
                Verdict::Sat(w) => format!("{:?}", w.iter().map(|(x, g)| format!("{x} = {}", f2.literal(g))).collect::<Vec<_>>()),
                Verdict::Unknown(reason) => reason.clone(),
                Verdict::Unsat => String::new(),
            };
            println!("  {:36} {:7} {detail}", text.trim_end().replace('\n', "; "), v.kind());
        }
    }
    Ok(())
}
