//! Whole-group brute force over a finite structure, flattened to a table.

use std::collections::HashMap;

use groupeq::recset::{RecBox, RecSet};
use groupeq::structure::{Automorphism, GroupStructure, GroupValue};
use groupeq::system::{Assignment, System, Token};

pub struct Flat {
    pub elements: Vec<GroupValue>,
    pub index: HashMap<GroupValue, usize>,
    pub table: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
    pub id: usize,
}

impl Flat {
    /// Closure of the generators under right multiplication.
    pub fn new(s: &GroupStructure) -> Flat {
        let gens = s.generators();
        let mut elements = vec![s.identity()];
        let mut index = HashMap::from([(s.identity(), 0)]);
        let mut i = 0;
        while i < elements.len() {
            for g in &gens {
                let y = s.mul(&elements[i], g).unwrap();
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            i += 1;
            assert!(elements.len() <= 4096, "structure too large to flatten");
        }
        let n = elements.len();
        let table: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| index[&s.mul(&elements[a], &elements[b]).unwrap()]).collect())
            .collect();
        let inv = (0..n).map(|a| table[a].iter().position(|&c| c == 0).unwrap()).collect();
        Flat {
            elements,
            index,
            table,
            inv,
            id: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn of(&self, g: &GroupValue) -> usize {
        self.index[g]
    }

    pub fn twist_map(&self, s: &GroupStructure, aut: &Automorphism) -> Vec<usize> {
        self.elements.iter().map(|g| self.of(&s.apply(aut, g).unwrap())).collect()
    }
}

pub fn box_contains(s: &GroupStructure, b: &RecBox, g: &GroupValue) -> bool {
    match (b, s, g) {
        (RecBox::All, _, _) => true,
        (RecBox::Subset(xs), GroupStructure::Finite(_), GroupValue::Finite(i)) => xs.contains(i),
        (RecBox::Product(bs), GroupStructure::Product(fs), GroupValue::Tuple(vs)) => {
            bs.len() == fs.len() && bs.iter().zip(fs).zip(vs).all(|((b, f), v)| box_contains(f, b, v))
        }
        (RecBox::Coset { q, base }, GroupStructure::Extension(e), GroupValue::Pair { q: p, k }) => {
            q == p && box_contains(e.base(), base, k)
        }
        (RecBox::Congruence(c), GroupStructure::FreeAbelian { .. }, GroupValue::Vector(v)) => c.contains(v),
        (RecBox::Quotient(fb), GroupStructure::Free { .. }, GroupValue::Word(w)) => fb.contains(w),
        _ => panic!("box {b:?} does not fit {g:?}"),
    }
}

pub fn set_contains(s: &GroupStructure, set: &RecSet, g: &GroupValue) -> bool {
    set.boxes.iter().any(|b| box_contains(s, b, g))
}

enum FlatToken {
    Const(usize),
    Var { slot: usize, inverted: bool, twist: Option<Vec<usize>> },
}

pub struct Compiled {
    vars: Vec<String>,
    equations: Vec<(usize, Vec<FlatToken>)>,
    inequations: Vec<(usize, Vec<FlatToken>)>,
    domains: Vec<Vec<usize>>,
}

/// Compiles a system against a flattening. Each word is tagged with the
/// largest variable slot it mentions so it can be checked as soon as that slot
/// is assigned.
pub fn compile(flat: &Flat, s: &GroupStructure, sys: &System) -> Compiled {
    let vars: Vec<String> = sys.variables.iter().cloned().collect();
    let slot = |v: &str| vars.iter().position(|x| x == v).unwrap();
    let word = |w: &groupeq::system::EqWord| {
        let toks: Vec<FlatToken> = w
            .tokens()
            .iter()
            .map(|t| match t {
                Token::Const(c) => FlatToken::Const(flat.of(c)),
                Token::Var(o) => FlatToken::Var {
                    slot: slot(&o.var),
                    inverted: o.inverted,
                    twist: o.twist.as_ref().map(|tw| flat.twist_map(s, &tw.map)),
                },
            })
            .collect();
        let last = toks
            .iter()
            .filter_map(|t| match t {
                FlatToken::Var { slot, .. } => Some(*slot),
                FlatToken::Const(_) => None,
            })
            .max()
            .unwrap_or(0);
        (last, toks)
    };
    let domains = vars
        .iter()
        .map(|v| match sys.constraints.get(v) {
            None => (0..flat.order()).collect(),
            Some(set) => (0..flat.order())
                .filter(|&i| set_contains(s, set, &flat.elements[i]))
                .collect(),
        })
        .collect();
    Compiled {
        equations: sys.equations.iter().map(word).collect(),
        inequations: sys.inequations.iter().map(word).collect(),
        vars,
        domains,
    }
}

fn eval(flat: &Flat, toks: &[FlatToken], values: &[usize]) -> usize {
    toks.iter().fold(flat.id, |acc, t| {
        let x = match t {
            FlatToken::Const(c) => *c,
            FlatToken::Var { slot, inverted, twist } => {
                let v = values[*slot];
                let v = twist.as_ref().map_or(v, |m| m[v]);
                if *inverted {
                    flat.inv[v]
                } else {
                    v
                }
            }
        };
        flat.table[acc][x]
    })
}

/// First solution in lexicographic order of element indices, if any.
pub fn brute_force(flat: &Flat, c: &Compiled) -> Option<Vec<usize>> {
    let m = c.vars.len();
    let ok_at = |level: usize, values: &[usize]| {
        c.equations
            .iter()
            .filter(|(l, _)| *l == level)
            .all(|(_, w)| eval(flat, w, values) == flat.id)
            && c.inequations
                .iter()
                .filter(|(l, _)| *l == level)
                .all(|(_, w)| eval(flat, w, values) != flat.id)
    };
    if m == 0 {
        return ok_at(0, &[]).then(Vec::new);
    }
    let mut values = vec![0; m];
    fn go(
        level: usize,
        m: usize,
        values: &mut Vec<usize>,
        c: &Compiled,
        ok_at: &dyn Fn(usize, &[usize]) -> bool,
    ) -> bool {
        for &x in &c.domains[level] {
            values[level] = x;
            if ok_at(level, values) && (level + 1 == m || go(level + 1, m, values, c, ok_at)) {
                return true;
            }
        }
        false
    }
    go(0, m, &mut values, c, &ok_at).then_some(values)
}

pub fn to_assignment(flat: &Flat, c: &Compiled, values: &[usize]) -> Assignment {
    c.vars
        .iter()
        .zip(values)
        .map(|(v, &i)| (v.clone(), flat.elements[i].clone()))
        .collect()
}

/// Independent witness check against the flattened table.
pub fn satisfies(flat: &Flat, c: &Compiled, w: &Assignment) -> bool {
    let Some(values) = c
        .vars
        .iter()
        .map(|v| w.get(v).and_then(|g| flat.index.get(g).copied()))
        .collect::<Option<Vec<usize>>>()
    else {
        return false;
    };
    c.equations.iter().all(|(_, t)| eval(flat, t, &values) == flat.id)
        && c.inequations.iter().all(|(_, t)| eval(flat, t, &values) != flat.id)
        && values.iter().zip(&c.domains).all(|(v, d)| d.contains(v))
}

/// The flattened table as a [`groupeq::finite::FiniteGroup`], with the system
/// transported along the indexing (constants, twists and constraints).
pub fn to_finite(flat: &Flat, s: &GroupStructure, sys: &System) -> (groupeq::finite::FiniteGroup, System) {
    use groupeq::system::{EqWord, Occurrence, Twist};
    let g = groupeq::finite::FiniteGroup::from_table(flat.table.clone()).unwrap();
    let word = |w: &EqWord| {
        EqWord(
            w.tokens()
                .iter()
                .map(|t| match t {
                    Token::Const(c) => Token::Const(GroupValue::Finite(flat.of(c))),
                    Token::Var(o) => Token::Var(Occurrence {
                        var: o.var.clone(),
                        inverted: o.inverted,
                        twist: o.twist.as_ref().map(|tw| Twist {
                            name: tw.name.clone(),
                            map: Automorphism::Finite(flat.twist_map(s, &tw.map)),
                        }),
                    }),
                })
                .collect(),
        )
    };
    let mut out = System::new(sys.variables.iter().cloned());
    out.equations = sys.equations.iter().map(word).collect();
    out.inequations = sys.inequations.iter().map(word).collect();
    for (v, set) in &sys.constraints {
        let members = (0..flat.order()).filter(|&i| set_contains(s, set, &flat.elements[i])).collect();
        out.constraints.insert(v.clone(), RecSet::new(vec![RecBox::Subset(members)]));
    }
    (g, out)
}
