//! Random systems over finite structures.

use groupeq::recset::{RecBox, RecSet};
use groupeq::structure::{Automorphism, GroupStructure, GroupValue};
use groupeq::system::{EqWord, Occurrence, System, Token, Twist};
use rand::seq::SliceRandom;
use rand::Rng;

use super::flat::Flat;

const VARS: [&str; 3] = ["X", "Y", "Z"];

pub fn random_box<R: Rng>(rng: &mut R, s: &GroupStructure) -> RecBox {
    match s {
        GroupStructure::Finite(g) => {
            if rng.gen_bool(0.25) {
                return RecBox::All;
            }
            let mut xs: Vec<usize> = (0..g.order()).filter(|_| rng.gen_bool(0.5)).collect();
            if xs.is_empty() {
                xs.push(rng.gen_range(0..g.order()));
            }
            RecBox::Subset(xs)
        }
        GroupStructure::Product(fs) => RecBox::Product(fs.iter().map(|f| random_box(rng, f)).collect()),
        GroupStructure::Extension(e) => RecBox::Coset {
            q: rng.gen_range(0..e.quotient().order()),
            base: Box::new(random_box(rng, e.base())),
        },
        _ => RecBox::All,
    }
}

/// Inner automorphism `x ↦ c x c⁻¹` in the representation the structure
/// expects, or `None` where twists are not supported.
pub fn random_twist<R: Rng>(rng: &mut R, s: &GroupStructure) -> Option<Automorphism> {
    match s {
        GroupStructure::Finite(g) => {
            let c = rng.gen_range(0..g.order());
            Some(Automorphism::Finite(
                (0..g.order()).map(|x| g.mul(g.mul(c, x), g.inv(c))).collect(),
            ))
        }
        GroupStructure::Product(fs) => {
            let components = fs.iter().map(|f| random_twist(rng, f)).collect::<Option<Vec<_>>>()?;
            Some(Automorphism::Product {
                source: (0..fs.len()).collect(),
                components,
            })
        }
        _ => None,
    }
}

fn random_word<R: Rng>(
    rng: &mut R,
    flat: &Flat,
    vars: &[&str],
    twists: &[Twist],
) -> EqWord {
    let len = rng.gen_range(1..=6);
    let mut toks = Vec::new();
    for _ in 0..len {
        if rng.gen_bool(0.6) {
            let var = *vars.choose(rng).unwrap();
            let inverted = rng.gen_bool(0.4);
            let occ = match twists.choose(rng) {
                Some(t) if rng.gen_bool(0.25) => Occurrence::twisted(var, t.clone(), inverted),
                _ if inverted => Occurrence::inverse(var),
                _ => Occurrence::new(var),
            };
            toks.push(Token::Var(occ));
        } else {
            toks.push(Token::Const(flat.elements[rng.gen_range(0..flat.order())].clone()));
        }
    }
    EqWord::new(toks)
}

/// Substitutes a planted assignment and appends the inverse of the value, so
/// the word evaluates to the identity there.
fn plant(s: &GroupStructure, w: EqWord, planted: &groupeq::system::Assignment) -> EqWord {
    let v = groupeq::system::evaluate(&w, planted, s).unwrap();
    let mut toks = w.0;
    toks.push(Token::Const(s.inv(&v).unwrap()));
    EqWord(toks)
}

/// At most 3 variables, words of at most 8 tokens, at most 2 inequations and
/// random subset constraints. Half of the equations are planted to hold at a
/// random assignment.
pub fn random_system<R: Rng>(rng: &mut R, s: &GroupStructure, flat: &Flat) -> System {
    let m = rng.gen_range(1..=3);
    let vars = &VARS[..m];
    let twists: Vec<Twist> = (0..2)
        .filter_map(|i| {
            random_twist(rng, s).map(|map| Twist {
                name: format!("t{i}"),
                map,
            })
        })
        .collect();
    let planted: groupeq::system::Assignment = vars
        .iter()
        .map(|v| (v.to_string(), flat.elements[rng.gen_range(0..flat.order())].clone()))
        .collect();
    let mut sys = System::new(vars.iter().copied());
    for _ in 0..rng.gen_range(1..=2) {
        let w = random_word(rng, flat, vars, &twists);
        let w = if rng.gen_bool(0.5) { plant(s, w, &planted) } else { w };
        sys = sys.equation(w);
    }
    for _ in 0..rng.gen_range(0..=2) {
        sys = sys.inequation(random_word(rng, flat, vars, &twists));
    }
    for v in vars {
        if rng.gen_bool(0.35) {
            let boxes = (0..rng.gen_range(1..=2)).map(|_| random_box(rng, s)).collect();
            sys = sys.constrain(*v, RecSet::new(boxes));
        }
    }
    sys
}

pub fn random_element<R: Rng>(rng: &mut R, flat: &Flat) -> GroupValue {
    flat.elements[rng.gen_range(0..flat.order())].clone()
}
