mod common;

use groupeq::lattice::{hnf, maschke_complement, snf, solve_diophantine, IntMatrix, ZGModuleAction};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

use common::lattice::{check_complement, check_hnf, check_snf, det, in_lattice, random_maschke, random_matrix};

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// gcd of all `k × k` minors.
fn determinantal_divisor(a: &IntMatrix, k: usize) -> BigInt {
    let mut g = BigInt::zero();
    for rows in combinations(a.rows(), k) {
        for cols in combinations(a.cols(), k) {
            g = g.gcd(&det(&a.select_rows(&rows).select_cols(&cols)));
        }
    }
    g
}

fn augmented(a: &IntMatrix, b: &[BigInt]) -> IntMatrix {
    let rows = (0..a.rows())
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    IntMatrix::from_row_vecs(rows, a.cols() + 1).unwrap()
}

fn matrix_strategy() -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4, any::<u64>()).prop_map(|(r, c, seed)| {
        let mut rng = common::rng(seed);
        random_matrix(&mut rng, r, c, 6)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn hnf_preserves_the_row_lattice(a in matrix_strategy()) {
        check_hnf(&a).map_err(TestCaseError::fail)?;
        let (h, _) = hnf(&a);
        let nonzero: Vec<usize> = (0..h.rows()).filter(|&i| !h.is_row_zero(i)).collect();
        let basis = h.select_rows(&nonzero);
        for i in 0..a.rows() {
            prop_assert!(in_lattice(&basis, a.row(i)));
        }
    }

    #[test]
    fn snf_factors_match_determinantal_divisors(a in matrix_strategy()) {
        check_snf(&a).map_err(TestCaseError::fail)?;
        let (s, _, _) = snf(&a);
        let mut product = BigInt::from(1);
        for k in 1..=a.rows().min(a.cols()) {
            product *= &s[(k - 1, k - 1)];
            prop_assert_eq!(product.abs(), determinantal_divisor(&a, k));
        }
    }

    #[test]
    fn diophantine_solutions_are_exact(a in matrix_strategy(), seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let b: Vec<BigInt> = if rng.gen_bool(0.5) {
            let x: Vec<BigInt> = (0..a.cols()).map(|_| BigInt::from(rng.gen_range(-5..=5))).collect();
            a.apply(&x).unwrap()
        } else {
            (0..a.rows()).map(|_| BigInt::from(rng.gen_range(-9..=9))).collect()
        };
        match solve_diophantine(&a, &b).unwrap() {
            Some(l) => {
                for _ in 0..8 {
                    let t: Vec<BigInt> = (0..l.num_params()).map(|_| BigInt::from(rng.gen_range(-4..=4))).collect();
                    let x = l.point(&t).unwrap();
                    prop_assert_eq!(a.apply(&x).unwrap(), b.clone());
                }
                prop_assert_eq!(l.num_params(), a.cols() - common::lattice::rank_of(&a));
            }
            None => {
                // solvable iff A and [A | b] share rank and every determinantal divisor
                let ab = augmented(&a, &b);
                let r = common::lattice::rank_of(&a);
                let consistent = common::lattice::rank_of(&ab) == r
                    && (1..=r).all(|k| determinantal_divisor(&a, k) == determinantal_divisor(&ab, k));
                prop_assert!(!consistent);
            }
        }
    }

    #[test]
    fn maschke_complements_are_invariant(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let case = random_maschke(&mut rng);
        let action = ZGModuleAction::new(case.group.clone(), case.matrices.clone()).unwrap();
        let c = maschke_complement(&action, &case.w).unwrap();
        check_complement(&case, &c.basis, &c.index).map_err(TestCaseError::fail)?;
    }
}
