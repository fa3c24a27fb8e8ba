mod common;

use groupeq::free::{abelianize, free_mul, words_up_to, FreeWord};
use groupeq::solve::Solver;
use groupeq::structure::GroupStructure;
use groupeq::verdict::Verdict;
use num_bigint::BigInt;
use proptest::prelude::*;

use common::free::{all_words, assignment_holds, brute_force, random_free_system, reduce};

const RANK: usize = 3;

fn word() -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((1..=RANK as i32, any::<bool>()), 0..10)
        .prop_map(|ls| FreeWord::new(ls.into_iter().map(|(g, neg)| if neg { -g } else { g })))
}

#[test]
fn enumeration_matches_reference() {
    for bound in 0..=3 {
        let mut ours: Vec<Vec<i32>> = words_up_to(2, bound).iter().map(|w| w.letters().to_vec()).collect();
        let mut reference = all_words(2, bound);
        ours.sort();
        reference.sort();
        assert_eq!(ours, reference);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn words_are_freely_reduced(w in word()) {
        prop_assert_eq!(w.letters().to_vec(), reduce(w.letters().iter().copied()));
    }

    #[test]
    fn multiplication_is_a_group_law(u in word(), v in word(), w in word()) {
        let uv = free_mul(RANK, &u, &v).unwrap();
        prop_assert_eq!(uv.letters().to_vec(), reduce(u.letters().iter().chain(v.letters()).copied()));
        prop_assert_eq!(
            free_mul(RANK, &uv, &w).unwrap(),
            free_mul(RANK, &u, &free_mul(RANK, &v, &w).unwrap()).unwrap()
        );
        prop_assert_eq!(free_mul(RANK, &u, &FreeWord::identity()).unwrap(), u.clone());
        prop_assert!(free_mul(RANK, &u, &u.inverse()).unwrap().is_empty());
    }

    #[test]
    fn abelianization_is_a_homomorphism(u in word(), v in word()) {
        let uv = abelianize(&free_mul(RANK, &u, &v).unwrap(), RANK);
        let sum: Vec<BigInt> = abelianize(&u, RANK).iter().zip(abelianize(&v, RANK)).map(|(a, b)| a + b).collect();
        prop_assert_eq!(uv, sum);
    }

    #[test]
    fn bounded_search_is_sound(seed in any::<u64>(), bound in 0usize..=3) {
        let mut rng = common::rng(seed);
        let sys = random_free_system(&mut rng);
        let v = Solver::default().decide(&GroupStructure::free(2, bound), &sys).unwrap();
        match &v {
            Verdict::Sat(w) => prop_assert!(assignment_holds(&sys, w)),
            Verdict::Unsat => prop_assert!(brute_force(&sys, 2, bound + 1).is_none()),
            Verdict::Unknown(_) => prop_assert!(brute_force(&sys, 2, bound).is_none()),
        }
    }

    #[test]
    fn raising_the_bound_only_resolves(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let sys = random_free_system(&mut rng);
        let mut last: Option<Verdict> = None;
        for bound in 0..=3 {
            let v = Solver::default().decide(&GroupStructure::free(2, bound), &sys).unwrap();
            if let Some(prev) = &last {
                if !prev.is_unknown() {
                    prop_assert_eq!(prev.kind(), v.kind());
                }
            }
            last = Some(v);
        }
    }
}
