//! Ready-made groups and the group file format.

mod format;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use format::{load_group, parse_value, save_group, value_literal, write_json};

use crate::error::{Error, Result};
use crate::finite::{closure, FiniteGroup};
use crate::free::FreeWord;
use crate::perm::Perm;
use crate::recset::RecSet;
use crate::solve::build_wreath;
use crate::structure::{Automorphism, Extension, GroupStructure, GroupValue};
use crate::lattice::IntMatrix;

/// A structure together with its named elements, automorphisms and
/// constraint sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub structure: GroupStructure,
    pub labels: BTreeMap<String, GroupValue>,
    pub automorphisms: BTreeMap<String, Automorphism>,
    pub recsets: BTreeMap<String, RecSet>,
}

impl GroupSpec {
    pub fn new(structure: GroupStructure) -> Self {
        GroupSpec {
            structure,
            labels: BTreeMap::new(),
            automorphisms: BTreeMap::new(),
            recsets: BTreeMap::new(),
        }
    }

    /// A finite group with its own element labels.
    pub fn finite(g: FiniteGroup) -> Self {
        let labels = g
            .labels()
            .iter()
            .map(|(k, &i)| (k.clone(), GroupValue::Finite(i)))
            .collect();
        GroupSpec {
            labels,
            ..GroupSpec::new(GroupStructure::finite(g))
        }
    }

    pub fn label(mut self, name: &str, value: GroupValue) -> Self {
        self.labels.insert(name.to_string(), value);
        self
    }

    pub fn automorphism(mut self, name: &str, aut: Automorphism) -> Self {
        self.automorphisms.insert(name.to_string(), aut);
        self
    }

    pub fn recset(mut self, name: &str, boxes: Vec<crate::recset::RecBox>) -> Self {
        self.recsets.insert(name.to_string(), RecSet::named(name, boxes));
        self
    }

    pub fn value(&self, name: &str) -> Result<&GroupValue> {
        self.labels
            .get(name)
            .ok_or_else(|| Error::StructureMismatch(format!("unknown label `{name}`")))
    }

    /// Checks labels, automorphisms and constraint sets against the structure.
    pub fn validate(&self) -> Result<()> {
        for v in self.labels.values() {
            self.structure.check(v)?;
        }
        for a in self.automorphisms.values() {
            self.structure.validate_automorphism(a, false)?;
        }
        for r in self.recsets.values() {
            r.validate(&self.structure)?;
        }
        Ok(())
    }
}

pub fn make_free_abelian(rank: usize) -> GroupStructure {
    GroupStructure::FreeAbelian { rank }
}

/// The permutation group generated by `gens`; trivial when `gens` is empty.
pub fn make_finite_from_perms(gens: &[Perm]) -> Result<GroupStructure> {
    let degree = gens.first().map_or(1, Perm::degree);
    Ok(GroupStructure::finite(closure(degree, gens)?))
}

pub fn make_free(rank: usize, bound: usize) -> GroupStructure {
    GroupStructure::free(rank, bound)
}

fn perm_group(degree: usize, gens: &[&[&[usize]]]) -> FiniteGroup {
    let gens: Vec<Perm> = gens
        .iter()
        .map(|c| Perm::from_cycles(degree, c).expect("valid cycles"))
        .collect();
    closure(degree, &gens).expect("closure")
}

fn labelled(g: FiniteGroup, labels: &[(&str, &[&[usize]])]) -> FiniteGroup {
    let degree = g.degree().expect("permutation group");
    let map = labels
        .iter()
        .map(|(name, cycles)| {
            let p = Perm::from_cycles(degree, cycles).expect("valid cycles");
            (name.to_string(), g.index_of_perm(&p).expect("element of the group"))
        })
        .collect();
    g.with_labels(map).expect("labels in range")
}

/// Cyclic group of order `n` generated by an `n`-cycle labelled `t`.
pub fn cyclic_perm_group(n: usize) -> FiniteGroup {
    if n <= 1 {
        return closure(1, &[]).expect("trivial group");
    }
    let cycle: Vec<usize> = (1..=n).collect();
    labelled(perm_group(n, &[&[&cycle]]), &[("t", &[&cycle])])
}

pub fn c2() -> FiniteGroup {
    labelled(perm_group(2, &[&[&[1, 2]]]), &[("a", &[&[1, 2]])])
}

pub fn c6() -> FiniteGroup {
    let c = [1, 2, 3, 4, 5, 6];
    labelled(perm_group(6, &[&[&c]]), &[("a", &[&c])])
}

pub fn s3() -> FiniteGroup {
    labelled(
        perm_group(3, &[&[&[1, 2, 3]], &[&[1, 2]]]),
        &[("r", &[&[1, 2, 3]]), ("s", &[&[1, 2]])],
    )
}

pub fn d4() -> FiniteGroup {
    labelled(
        perm_group(4, &[&[&[1, 2, 3, 4]], &[&[1, 3]]]),
        &[("r", &[&[1, 2, 3, 4]]), ("s", &[&[1, 3]])],
    )
}

/// Quaternion group in its regular representation on
/// `1, i, j, k, -1, -i, -j, -k` (points `1..8`).
pub fn q8() -> FiniteGroup {
    fn mul(a: usize, b: usize) -> usize {
        // units 0..4 = 1,i,j,k; sign bit is +4
        let (sa, ua) = (a / 4, a % 4);
        let (sb, ub) = (b / 4, b % 4);
        let (sign, unit) = match (ua, ub) {
            (0, u) | (u, 0) => (0, u),
            (x, y) if x == y => (1, 0),
            (1, 2) => (0, 3),
            (2, 3) => (0, 1),
            (3, 1) => (0, 2),
            (2, 1) => (1, 3),
            (3, 2) => (1, 1),
            (1, 3) => (1, 2),
            _ => unreachable!(),
        };
        ((sa + sb + sign) % 2) * 4 + unit
    }
    let left = |x: usize| Perm::from_images((0..8).map(|y| mul(x, y)).collect()).expect("bijection");
    let g = closure(8, &[left(1), left(2)]).expect("closure");
    let labels = [("i", 1), ("j", 2), ("k", 3), ("m", 4)]
        .iter()
        .map(|&(n, x)| (n.to_string(), g.index_of_perm(&left(x)).expect("element")))
        .collect();
    g.with_labels(labels).expect("labels in range")
}

fn negation(rank: usize) -> Automorphism {
    let rows: Vec<Vec<i64>> = (0..rank)
        .map(|i| (0..rank).map(|j| if i == j { -1 } else { 0 }).collect())
        .collect();
    Automorphism::Matrix(IntMatrix::from_rows(&rows))
}

/// `ℤ ⋊ C₂` with the generator of `C₂` acting by negation.
pub fn make_dihedral_infinite() -> GroupStructure {
    let q = Arc::new(cyclic_perm_group(2));
    let ext = Extension::split(make_free_abelian(1), q, vec![Automorphism::Identity, negation(1)])
        .expect("valid extension");
    GroupStructure::Extension(Arc::new(ext))
}

/// The infinite dihedral group with labels `z` (translation) and `t`
/// (reflection), and the negation automorphism of the translation subgroup.
pub fn dihedral_infinite() -> GroupSpec {
    GroupSpec::new(make_dihedral_infinite())
        .label("z", GroupValue::pair(0, GroupValue::vector(&[1])))
        .label("t", GroupValue::pair(1, GroupValue::vector(&[0])))
}

/// Dihedral Artin group of even index `m`, as an extension of `ℤ × F_{m/2}` by
/// `C_{m/2}`. The generator `t` fixes `ℤ` and cycles the free generators;
/// `t^{m/2} = z`.
pub fn make_dihedral_artin_even(m: usize, bound: usize) -> Result<GroupStructure> {
    if m < 2 || m % 2 != 0 {
        return Err(Error::Unsupported(format!(
            "dihedral Artin group of index {m}: only even m ≥ 2 is constructed"
        )));
    }
    let h = m / 2;
    let q = Arc::new(cyclic_perm_group(h));
    let free = GroupStructure::Free {
        rank: h,
        bound,
        names: (1..=h).map(|i| format!("a{i}")).collect(),
    };
    let base = GroupStructure::Product(vec![make_free_abelian(1), free]);
    let action = (0..h)
        .map(|i| {
            if i == 0 {
                Automorphism::Identity
            } else {
                Automorphism::Product {
                    source: vec![0, 1],
                    components: vec![
                        Automorphism::Identity,
                        Automorphism::Substitution(
                            (0..h).map(|j| FreeWord::generator((j + i) % h + 1)).collect(),
                        ),
                    ],
                }
            }
        })
        .collect();
    let element = |z: i64| GroupValue::Tuple(vec![GroupValue::vector(&[z]), GroupValue::Word(FreeWord::identity())]);
    let cocycle = (0..h)
        .map(|i| (0..h).map(|j| element(if i + j >= h { 1 } else { 0 })).collect())
        .collect();
    let ext = Extension::new(base, q, action, cocycle)?;
    Ok(GroupStructure::Extension(Arc::new(ext)))
}

/// [`make_dihedral_artin_even`] with labels `z`, `y1`, `y2` and `a1…`.
pub fn dihedral_artin_even(m: usize, bound: usize) -> Result<GroupSpec> {
    let s = make_dihedral_artin_even(m, bound)?;
    let h = m / 2;
    let k = |z: i64, w: FreeWord| GroupValue::pair(0, GroupValue::Tuple(vec![GroupValue::vector(&[z]), GroupValue::Word(w)]));
    let z = k(1, FreeWord::identity());
    let y2 = if h == 1 {
        z.clone()
    } else {
        GroupValue::pair(1, GroupValue::Tuple(vec![GroupValue::vector(&[0]), GroupValue::Word(FreeWord::identity())]))
    };
    let mut spec = GroupSpec::new(s)
        .label("z", z)
        .label("y1", k(0, FreeWord::generator(1)))
        .label("y2", y2);
    for i in 1..=h {
        spec = spec.label(&format!("a{i}"), k(0, FreeWord::generator(i)));
    }
    Ok(spec)
}

/// `(H × H) ⋊ C₂` with the coordinate swap.
pub fn make_swap_product(h: &GroupStructure) -> GroupStructure {
    let q = Arc::new(cyclic_perm_group(2));
    let swap = Automorphism::Product {
        source: vec![1, 0],
        components: vec![Automorphism::Identity, Automorphism::Identity],
    };
    let ext = Extension::split(
        GroupStructure::Product(vec![h.clone(), h.clone()]),
        q,
        vec![Automorphism::Identity, swap],
    )
    .expect("valid extension");
    GroupStructure::Extension(Arc::new(ext))
}

/// `J ≀ C₂`.
pub fn make_wreath_c2(j: &GroupStructure) -> GroupStructure {
    build_wreath(j, Arc::new(cyclic_perm_group(2))).expect("valid wreath")
}
