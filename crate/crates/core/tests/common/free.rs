//! Exhaustive enumeration over a free group, with its own word reduction.

use groupeq::free::FreeWord;
use groupeq::structure::GroupValue;
use groupeq::system::{Assignment, EqWord, Occurrence, System, Token};
use rand::Rng;

pub fn reduce(letters: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for l in letters {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

fn inverse(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|l| -l).collect()
}

/// All reduced words of length at most `bound`, shortest first.
pub fn all_words(rank: usize, bound: usize) -> Vec<Vec<i32>> {
    let letters: Vec<i32> = (1..=rank as i32).flat_map(|g| [g, -g]).collect();
    let mut out = vec![vec![]];
    let mut layer: Vec<Vec<i32>> = vec![vec![]];
    for _ in 0..bound {
        let mut next = Vec::new();
        for w in &layer {
            for &l in &letters {
                if w.last() != Some(&-l) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn letters_of(g: &GroupValue) -> Vec<i32> {
    match g {
        GroupValue::Word(w) => w.letters().to_vec(),
        other => panic!("not a word: {other:?}"),
    }
}

fn eval(w: &EqWord, vars: &[String], values: &[Vec<i32>]) -> Vec<i32> {
    let mut acc = Vec::new();
    for t in w.tokens() {
        match t {
            Token::Const(c) => acc.extend(letters_of(c)),
            Token::Var(o) => {
                assert!(o.twist.is_none());
                let v = &values[vars.iter().position(|x| *x == o.var).unwrap()];
                if o.inverted {
                    acc.extend(inverse(v));
                } else {
                    acc.extend(v.iter().copied());
                }
            }
        }
        acc = reduce(acc);
    }
    acc
}

pub fn holds(sys: &System, vars: &[String], values: &[Vec<i32>]) -> bool {
    sys.equations.iter().all(|w| eval(w, vars, values).is_empty())
        && sys.inequations.iter().all(|w| !eval(w, vars, values).is_empty())
}

pub fn assignment_holds(sys: &System, w: &Assignment) -> bool {
    let vars: Vec<String> = sys.variables.iter().cloned().collect();
    let values: Vec<Vec<i32>> = vars.iter().map(|v| reduce(letters_of(&w[v]))).collect();
    holds(sys, &vars, &values)
}

/// Any solution with every value of length at most `bound`.
pub fn brute_force(sys: &System, rank: usize, bound: usize) -> Option<Vec<Vec<i32>>> {
    let vars: Vec<String> = sys.variables.iter().cloned().collect();
    let words = all_words(rank, bound);
    let m = vars.len();
    let mut idx = vec![0usize; m];
    loop {
        let values: Vec<Vec<i32>> = idx.iter().map(|&i| words[i].clone()).collect();
        if holds(sys, &vars, &values) {
            return Some(values);
        }
        let mut i = 0;
        loop {
            if i == m {
                return None;
            }
            idx[i] += 1;
            if idx[i] < words.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

fn random_reduced<R: Rng>(rng: &mut R, rank: usize, max_len: usize) -> Vec<i32> {
    let len = rng.gen_range(0..=max_len);
    reduce((0..len).map(|_| {
        let g = rng.gen_range(1..=rank as i32);
        if rng.gen_bool(0.5) {
            g
        } else {
            -g
        }
    }))
}

fn word_value(letters: Vec<i32>) -> GroupValue {
    GroupValue::Word(FreeWord::new(letters))
}

/// One or two variables over `F₂`; planted equations have a solution of
/// length at most 2.
pub fn random_free_system<R: Rng>(rng: &mut R) -> System {
    let names = ["X", "Y"];
    let m = rng.gen_range(1..=2);
    let vars: Vec<String> = names[..m].iter().map(|s| s.to_string()).collect();
    let planted: Vec<Vec<i32>> = (0..m).map(|_| random_reduced(rng, 2, 2)).collect();
    let word = |rng: &mut R| {
        let mut toks = Vec::new();
        for _ in 0..rng.gen_range(1..=5) {
            if rng.gen_bool(0.55) {
                let v = &vars[rng.gen_range(0..m)];
                toks.push(Token::Var(if rng.gen_bool(0.4) {
                    Occurrence::inverse(v.clone())
                } else {
                    Occurrence::new(v.clone())
                }));
            } else {
                toks.push(Token::Const(word_value(random_reduced(rng, 2, 2))));
            }
        }
        EqWord::new(toks)
    };
    let mut sys = System::new(vars.clone());
    let w = word(rng);
    let w = if rng.gen_bool(0.5) {
        let v = eval(&w, &vars, &planted);
        let mut toks = w.0;
        toks.push(Token::Const(word_value(inverse(&v))));
        EqWord(toks)
    } else {
        w
    };
    sys = sys.equation(w);
    if rng.gen_bool(0.4) {
        sys = sys.inequation(word(rng));
    }
    sys
}
