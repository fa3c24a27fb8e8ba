//! Normal forms over the integers and the abelian solver they drive.

use groupeq::lattice::{
    hnf, int_vec, snf, solve_abelian, solve_diophantine, AbelianEquation, AbelianSystem, AbelianTerm,
    CongruenceBox, IntMatrix,
};

fn show(name: &str, m: &IntMatrix) {
    println!("{name}:");
    for row in m.row_vecs() {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>4}")).collect();
        println!("  [{}]", cells.join(""));
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    show("A", &a);
    let (h, u) = hnf(&a);
    show("H = U A", &h);
    show("U", &u);
    let (s, _, _) = snf(&a);
    show("S", &s);

    let b = int_vec(&[6, 0, 6]);
    match solve_diophantine(&a, &b)? {
        Some(l) => println!("A x = {b:?}: x = {:?} + lattice of rank {}", l.base, l.num_params()),
        None => println!("A x = {b:?}: no integer solution"),
    }
    let b = int_vec(&[1, 0, 0]);
    println!("A x = {b:?}: {}", if solve_diophantine(&a, &b)?.is_some() { "solvable" } else { "no integer solution" });

    // X + twist(X) = (4, 0) over Z² with twist the swap, X ≠ (2, 2), X ≡ (1, 1) mod (2, 2)
    let swap = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
    let mut sys = AbelianSystem::new(2, 1);
    sys.equations.push(AbelianEquation {
        terms: vec![
            AbelianTerm { var: 0, negated: false, matrix: None },
            AbelianTerm { var: 0, negated: false, matrix: Some(swap) },
        ],
        rhs: int_vec(&[4, 4]),
    });
    sys.disequations.push(AbelianEquation {
        terms: vec![AbelianTerm { var: 0, negated: false, matrix: None }],
        rhs: int_vec(&[2, 2]),
    });
    sys.constraints[0] = Some(vec![CongruenceBox::modular(&[1, 1], &[2, 2])?]);
    println!("X + swap(X) = (4, 4), X != (2, 2), X = (1, 1) mod 2: {:?}", solve_abelian(&sys)?);
    Ok(())
}
