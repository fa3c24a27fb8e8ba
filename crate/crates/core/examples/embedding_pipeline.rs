//! An extension of Z x Z by C2 that swaps the factors is embedded into
//! Z wr C2; systems are solved there and witnesses pulled back.

use groupeq::dsl::parse_system;
use groupeq::solve::{Embedding, Solver};
use groupeq::structure::GroupStructure;
use groupeq::zoo::load_group;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = load_group(include_str!("../data/groups/swap_z.json"))?;
    let GroupStructure::Extension(ext) = &spec.structure else {
        unreachable!();
    };
    let emb = Embedding::new(ext.clone())?;
    println!("target kind {}, {} orbit(s)", emb.target().kind(), emb.orbits().len());
    let image = emb.image();
    for name in ["s", "u", "v"] {
        let g = spec.value(name)?;
        let m = emb.map(g)?;
        assert!(image.contains(emb.target(), &m)?);
        assert_eq!(&emb.pull_back(&m)?, g);
        println!("{name} -> {m:?}");
    }

    for text in [
        "vars Y\neq Y Y = u v\n",
        "vars Y\neq Y Y = u\n",
        "vars X\neq X u X^-1 = v\n",
    ] {
        let sys = parse_system(text, &spec)?;
        let solver = Solver::default();
        let via = solver.solve_virtually_direct_product(ext, &sys)?;
        let direct = Solver::default().solve_extension(ext, &sys)?;
        assert_eq!(via.kind(), direct.kind());
        let w = via.witness().map(|w| spec.literal(w.values().next().unwrap()).to_string()).unwrap_or_default();
        println!("{:28} {:5} {w}", text.trim_end().replace('\n', "; "), via.kind());
    }
    Ok(())
}
