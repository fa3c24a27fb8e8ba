#![allow(dead_code)]

pub mod flat;
pub mod free;
pub mod lattice;
pub mod random;

use std::sync::Arc;

use groupeq::finite::FiniteGroup;
use groupeq::structure::{Automorphism, Extension, GroupStructure, GroupValue};
use groupeq::zoo::{c2, c6, cyclic_perm_group, d4, make_swap_product, make_wreath_c2, q8, s3};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fin(g: FiniteGroup) -> GroupStructure {
    GroupStructure::finite(g)
}

fn cyclic(n: usize) -> FiniteGroup {
    cyclic_perm_group(n)
}

fn inversion(g: &FiniteGroup) -> Automorphism {
    Automorphism::Finite((0..g.order()).map(|x| g.inv(x)).collect())
}

/// `C_{2n} . C₂` with inversion and `t² = x^n`; `n = 2` is `Q₈`, `n = 3` the
/// dicyclic group of order 12.
pub fn dicyclic(n: usize) -> GroupStructure {
    let base = cyclic(2 * n);
    let x = base.generators()[0];
    let top = base.pow(x, n as i64);
    let inv = inversion(&base);
    let q = Arc::new(cyclic(2));
    let e = GroupValue::Finite(base.identity());
    let cocycle = vec![vec![e.clone(), e.clone()], vec![e, GroupValue::Finite(top)]];
    let ext = Extension::new(fin(base), q, vec![Automorphism::Identity, inv], cocycle).unwrap();
    GroupStructure::Extension(Arc::new(ext))
}

/// `C_n ⋊ C₂` with inversion.
pub fn dihedral(n: usize) -> GroupStructure {
    let base = cyclic(n);
    let inv = inversion(&base);
    let ext = Extension::split(fin(base), Arc::new(cyclic(2)), vec![Automorphism::Identity, inv]).unwrap();
    GroupStructure::Extension(Arc::new(ext))
}

/// `H³ ⋊ S₃` permuting coordinates.
pub fn permuted_cube(h: &GroupStructure) -> GroupStructure {
    let q = Arc::new(s3());
    let try_build = |invert: bool| {
        let action = (0..q.order())
            .map(|x| {
                let p = q.perm(x).unwrap();
                let p = if invert { p.inverse() } else { p.clone() };
                Automorphism::Product {
                    source: p.images().to_vec(),
                    components: vec![Automorphism::Identity; 3],
                }
            })
            .collect();
        Extension::split(GroupStructure::Product(vec![h.clone(), h.clone(), h.clone()]), q.clone(), action)
    };
    let ext = try_build(false).or_else(|_| try_build(true)).unwrap();
    GroupStructure::Extension(Arc::new(ext))
}

/// `(C_n × C_n) ⋊ C₂` inverting both coordinates.
pub fn inverted_square(n: usize) -> GroupStructure {
    let base = cyclic(n);
    let inv = inversion(&base);
    let action = vec![
        Automorphism::Identity,
        Automorphism::Product {
            source: vec![0, 1],
            components: vec![inv.clone(), inv],
        },
    ];
    let ext = Extension::split(
        GroupStructure::Product(vec![fin(base.clone()), fin(base)]),
        Arc::new(cyclic(2)),
        action,
    )
    .unwrap();
    GroupStructure::Extension(Arc::new(ext))
}

/// Finite structures over `C₂, C₆, S₃, D₄, Q₈` of order at most 64.
pub fn finite_zoo() -> Vec<(&'static str, GroupStructure)> {
    let p = |v: Vec<GroupStructure>| GroupStructure::Product(v);
    vec![
        ("C2", fin(c2())),
        ("C6", fin(c6())),
        ("S3", fin(s3())),
        ("D4", fin(d4())),
        ("Q8", fin(q8())),
        ("C2xS3", p(vec![fin(c2()), fin(s3())])),
        ("C6xC2", p(vec![fin(c6()), fin(c2())])),
        ("D4xC2", p(vec![fin(d4()), fin(c2())])),
        ("S3xS3", p(vec![fin(s3()), fin(s3())])),
        ("Q8xC6", p(vec![fin(q8()), fin(c6())])),
        ("(C2xS3)xC2", p(vec![p(vec![fin(c2()), fin(s3())]), fin(c2())])),
        ("C6:C2", dihedral(6)),
        ("C4.C2", dicyclic(2)),
        ("C6.C2", dicyclic(3)),
        ("SwapProd(C2)", make_swap_product(&fin(c2()))),
        ("SwapProd(C2xC2)", make_swap_product(&p(vec![fin(c2()), fin(c2())]))),
        ("C2 wr C2", make_wreath_c2(&fin(c2()))),
        ("C4 wr C2", make_wreath_c2(&fin(cyclic(4)))),
        ("C3 wr C2", make_wreath_c2(&fin(cyclic(3)))),
        ("C2^3:S3", permuted_cube(&fin(c2()))),
        ("(C3xC3):C2", inverted_square(3)),
        ("C2xSwapProd(C2)", p(vec![fin(c2()), make_swap_product(&fin(c2()))])),
    ]
}
