//! Solves small systems over permutation groups by exhaustive search.

use groupeq::dsl::parse_system;
use groupeq::finite::closure;
use groupeq::perm::Perm;
use groupeq::solve::Solver;
use groupeq::zoo::{q8, s3, GroupSpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a5 = closure(
        5,
        &[
            Perm::from_cycles(5, &[&[1, 2, 3]])?,
            Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]])?,
        ],
    )?;
    println!("<(1 2 3), (1 2 3 4 5)> has order {}", a5.order());

    let solver = Solver::default();
    let group = s3();
    let s3 = GroupSpec::finite(group.clone());
    for text in [
        "vars X\neq X X X = r\n",
        "vars X\neq X X = r\n",
        "vars X Y\neq X Y X^-1 Y^-1 = r\nneq X\n",
    ] {
        let sys = parse_system(text, &s3)?;
        let v = solver.solve_finite(&group, &sys)?;
        println!("S3  {:32} -> {}", text.replace('\n', "; "), v.kind());
        if let Some(w) = v.witness() {
            for (x, g) in w {
                println!("      {x} = {}", s3.literal(g));
            }
        }
    }

    let q8 = GroupSpec::finite(q8());
    let sys = parse_system("vars X\neq X X = m\n", &q8)?;
    let v = solver.decide(&q8.structure, &sys)?;
    println!("Q8  X^2 = -1 -> {} after {} branches", v.kind(), solver.branches_explored());
    Ok(())
}
