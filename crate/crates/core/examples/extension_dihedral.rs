//! The infinite dihedral group as an extension of Z by C2: the solver branches
//! over the C2 part of each unknown and solves over Z in each branch.

use groupeq::dsl::parse_system;
use groupeq::solve::Solver;
use groupeq::structure::GroupStructure;
use groupeq::zoo::dihedral_infinite;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dinf = dihedral_infinite();
    let GroupStructure::Extension(ext) = &dinf.structure else {
        unreachable!();
    };
    let t = dinf.value("t")?;
    let z = dinf.value("z")?;
    let s = &dinf.structure;
    println!("t z t^-1 = {}", dinf.literal(&s.product([t, z, &s.inv(t)?])?));

    for k in 0..4 {
        let text = format!("vars X\neq X X = {}\n", vec!["z"; k].join(" "));
        let sys = parse_system(&text, &dinf)?;
        let solver = Solver::default();
        let v = solver.solve_extension(ext, &sys)?;
        let w = v.witness().map(|w| dinf.literal(&w["X"]).to_string()).unwrap_or_default();
        println!("X^2 = z^{k}: {:5} {w:24} ({} branches)", v.kind(), solver.branches_explored());
    }

    let sys = parse_system("vars X\neq X z X^-1 z\nneq X t^-1\n", &dinf)?;
    let v = Solver::default().decide(s, &sys)?;
    println!("X z X^-1 = z^-1, X != t: {} {}", v.kind(), dinf.literal(&v.witness().unwrap()["X"]));
    Ok(())
}
