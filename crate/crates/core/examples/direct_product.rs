//! Direct products: systems split into one subsystem per factor, inequations
//! are distributed over the factors.

use groupeq::dsl::parse_system;
use groupeq::solve::Solver;
use groupeq::structure::GroupStructure;
use groupeq::zoo::load_group;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let zxz = load_group(include_str!("../data/groups/zxz.json"))?;
    let GroupStructure::Product(factors) = &zxz.structure else {
        unreachable!("zxz.json is a product");
    };
    for text in [
        "vars X Y\neq X Y = x x y\nneq X y^-1\nconstrain X in even_odd\n",
        "vars X\neq X X = x y\n",
        "vars X\neq X X = x x y y\nneq X x^-1\n",
    ] {
        let sys = parse_system(text, &zxz)?;
        let solver = Solver::default();
        let v = solver.solve_direct_product(factors, &sys)?;
        print!("{:50} {}", text.trim_end().replace('\n', "; "), v.kind());
        if let Some(w) = v.witness() {
            for (x, g) in w {
                print!("  {x} = {}", zxz.literal(g));
            }
        }
        println!();
    }

    let c2xc2 = load_group(include_str!("../data/groups/c2xc2.json"))?;
    let sys = parse_system(include_str!("../data/systems/c2xc2.all_excluded.eqs"), &c2xc2)?;
    println!("C2 x C2, every element excluded: {}", Solver::default().decide(&c2xc2.structure, &sys)?.kind());
    Ok(())
}
