//! Invariant complements in an integral representation of S3.

use std::sync::Arc;

use groupeq::lattice::{maschke_complement, IntMatrix, ZGModuleAction};
use groupeq::zoo::s3;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let group = Arc::new(s3());
    let matrices = (0..group.order())
        .map(|g| {
            let p = group.perm(g).expect("permutation group");
            let rows: Vec<Vec<i64>> = (0..3)
                .map(|i| (0..3).map(|j| i64::from(p.apply(j) == i)).collect())
                .collect();
            IntMatrix::from_rows(&rows)
        })
        .collect();
    let action = ZGModuleAction::new(group, matrices)?;

    let diagonal = IntMatrix::from_rows(&[vec![1, 1, 1]]);
    let sum_zero = IntMatrix::from_rows(&[vec![1, -1, 0], vec![0, 1, -1]]);
    for (name, w) in [("diagonal", &diagonal), ("sum zero", &sum_zero)] {
        assert!(action.is_invariant(w));
        let c = maschke_complement(&action, w)?;
        println!("W = {name}: complement basis {:?}, index {}", c.basis.row_vecs(), c.index);
    }
    Ok(())
}
