mod common;

use groupeq::finite::{closure, FiniteGroup};
use groupeq::perm::Perm;
use groupeq::recset::{RecBox, RecSet};
use groupeq::solve::Solver;
use groupeq::structure::{Automorphism, GroupStructure, GroupValue};
use groupeq::system::{evaluate, EqWord, Occurrence, System, Token, Twist};
use groupeq::verdict::{combine_verdicts, Mode, Verdict};
use groupeq::zoo::{c2, c6, d4, q8, s3};
use proptest::prelude::*;
use rand::Rng;

use common::flat::{self, Flat};

fn finite_groups() -> Vec<FiniteGroup> {
    vec![c2(), c6(), s3(), d4(), q8()]
}

fn verdict_from(code: u8) -> Verdict {
    match code % 3 {
        0 => Verdict::Unsat,
        1 => Verdict::Sat(Default::default()),
        _ => Verdict::Unknown("open".into()),
    }
}

/// Applies an element map to every constant, constraint and twist.
fn relabel(sys: &System, phi: &[usize]) -> System {
    let inv: Vec<usize> = {
        let mut v = vec![0; phi.len()];
        for (i, &j) in phi.iter().enumerate() {
            v[j] = i;
        }
        v
    };
    let word = |w: &EqWord| {
        EqWord(
            w.tokens()
                .iter()
                .map(|t| match t {
                    Token::Const(GroupValue::Finite(c)) => Token::Const(GroupValue::Finite(phi[*c])),
                    Token::Var(o) => Token::Var(Occurrence {
                        twist: o.twist.as_ref().map(|tw| {
                            let Automorphism::Finite(m) = &tw.map else { unreachable!() };
                            Twist {
                                name: tw.name.clone(),
                                map: Automorphism::Finite((0..phi.len()).map(|x| phi[m[inv[x]]]).collect()),
                            }
                        }),
                        ..o.clone()
                    }),
                    other => other.clone(),
                })
                .collect(),
        )
    };
    let mut out = System::new(sys.variables.iter().cloned());
    out.equations = sys.equations.iter().map(word).collect();
    out.inequations = sys.inequations.iter().map(word).collect();
    for (v, set) in &sys.constraints {
        let boxes = set
            .boxes
            .iter()
            .map(|b| match b {
                RecBox::Subset(xs) => {
                    let mut ys: Vec<usize> = xs.iter().map(|&x| phi[x]).collect();
                    ys.sort_unstable();
                    RecBox::Subset(ys)
                }
                other => other.clone(),
            })
            .collect();
        out.constraints.insert(v.clone(), RecSet::new(boxes));
    }
    out
}

/// Some automorphism of `g`: an inner one, or for abelian groups inversion.
fn some_automorphism<R: Rng>(rng: &mut R, g: &FiniteGroup) -> Vec<usize> {
    let abelian = (0..g.order()).all(|a| (0..g.order()).all(|b| g.mul(a, b) == g.mul(b, a)));
    if abelian {
        (0..g.order()).map(|x| g.inv(x)).collect()
    } else {
        let c = rng.gen_range(0..g.order());
        (0..g.order()).map(|x| g.mul(g.mul(c, x), g.inv(c))).collect()
    }
}

#[test]
fn finite_tables_satisfy_the_axioms() {
    let mut tables: Vec<Vec<Vec<usize>>> = finite_groups()
        .iter()
        .map(|g| (0..g.order()).map(|a| (0..g.order()).map(|b| g.mul(a, b)).collect()).collect())
        .collect();
    tables.extend(common::finite_zoo().iter().map(|(_, s)| Flat::new(s).table));
    for t in tables {
        let n = t.len();
        let e = (0..n).find(|&e| (0..n).all(|x| t[e][x] == x && t[x][e] == x)).expect("identity");
        for a in 0..n {
            assert!((0..n).any(|b| t[a][b] == e), "inverse");
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(t[t[a][b]][c], t[a][t[b][c]]);
                }
            }
        }
    }
}

#[test]
fn closure_is_closed() {
    let gens = [
        Perm::from_cycles(5, &[&[1, 2, 3, 4, 5]]).unwrap(),
        Perm::from_cycles(5, &[&[1, 2]]).unwrap(),
    ];
    let g = closure(5, &gens).unwrap();
    assert_eq!(g.order(), 120);
    for p in &gens {
        assert!(g.index_of_perm(p).is_some());
    }
    let perms = g.perms().unwrap();
    for a in perms {
        assert!(g.index_of_perm(&a.inverse()).is_some());
        for b in perms.iter().step_by(7) {
            assert!(g.index_of_perm(&a.compose(b).unwrap()).is_some());
        }
    }
}

#[test]
fn composition_is_right_to_left() {
    let p = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
    let r = Perm::from_cycles(3, &[&[2, 3]]).unwrap();
    let pr = p.compose(&r).unwrap();
    for i in 0..3 {
        assert_eq!(pr.apply(i), p.apply(r.apply(i)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn any_combination_is_monotone(codes in prop::collection::vec(0u8..3, 0..6), flip in any::<prop::sample::Index>()) {
        let before: Vec<Verdict> = codes.iter().map(|&c| verdict_from(c)).collect();
        let a = combine_verdicts(before.clone(), Mode::Any).unwrap();
        let unsat: Vec<usize> = (0..before.len()).filter(|&i| before[i].is_unsat()).collect();
        if !unsat.is_empty() {
            let mut after = before.clone();
            after[unsat[flip.index(unsat.len())]] = Verdict::Sat(Default::default());
            let b = combine_verdicts(after, Mode::Any).unwrap();
            prop_assert!(!a.is_sat() || b.is_sat());
            prop_assert!(b.is_sat() || b.is_unknown());
        }
    }

    #[test]
    fn evaluate_is_a_homomorphism(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let zoo = common::finite_zoo();
        let (_, s) = &zoo[rng.gen_range(0..zoo.len())];
        let flat = Flat::new(s);
        let sys = common::random::random_system(&mut rng, s, &flat);
        let assignment = sys
            .variables
            .iter()
            .map(|v| (v.clone(), common::random::random_element(&mut rng, &flat)))
            .collect();
        let words: Vec<&EqWord> = sys.words().collect();
        let (u, v) = (words[0], words[rng.gen_range(0..words.len())]);
        let uv = evaluate(&u.concat(v), &assignment, s).unwrap();
        let split = s.mul(&evaluate(u, &assignment, s).unwrap(), &evaluate(v, &assignment, s).unwrap()).unwrap();
        prop_assert_eq!(uv, split);
        let inv = evaluate(&u.inverse(s).unwrap(), &assignment, s).unwrap();
        prop_assert_eq!(inv, s.inv(&evaluate(u, &assignment, s).unwrap()).unwrap());
    }

    #[test]
    fn solve_finite_matches_exhaustive_search(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let groups = finite_groups();
        let g = &groups[rng.gen_range(0..groups.len())];
        let s = GroupStructure::finite(g.clone());
        let flat = Flat::new(&s);
        let sys = common::random::random_system(&mut rng, &s, &flat);
        let v = Solver::default().solve_finite(g, &sys).unwrap();
        let expected = flat::brute_force(&flat, &flat::compile(&flat, &s, &sys)).is_some();
        prop_assert!(!v.is_unknown());
        prop_assert_eq!(v.is_sat(), expected);
    }

    #[test]
    fn solve_finite_is_invariant_under_automorphisms(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let groups = finite_groups();
        let g = &groups[rng.gen_range(0..groups.len())];
        let s = GroupStructure::finite(g.clone());
        let flat = Flat::new(&s);
        let sys = common::random::random_system(&mut rng, &s, &flat);
        let phi = some_automorphism(&mut rng, g);
        g.check_automorphism(&phi).unwrap();
        let a = Solver::default().solve_finite(g, &sys).unwrap();
        let b = Solver::default().solve_finite(g, &relabel(&sys, &phi)).unwrap();
        prop_assert_eq!(a.kind(), b.kind());
    }
}
