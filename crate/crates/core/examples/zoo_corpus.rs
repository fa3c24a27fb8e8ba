//! Builds the shipped group corpus, checks each file round-trips through the
//! canonical printer, and optionally writes it.
//!
//! ```text
//! cargo run --example zoo_corpus -- crates/core/data/groups
//! ```

use std::path::PathBuf;
use std::sync::Arc;

use groupeq::free::{FiniteQuotientHom, FreeBox, FreeWord};
use groupeq::lattice::{int_vec, CongruenceBox, IntMatrix};
use groupeq::recset::RecBox;
use groupeq::structure::*;
use groupeq::zoo::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1).map(PathBuf::from);
    if let Some(dir) = &out {
        std::fs::create_dir_all(dir)?;
    }
    let put = |name: &str, spec: GroupSpec| -> Result<(), Box<dyn std::error::Error>> {
        spec.validate()?;
        let text = save_group(&spec);
        let back = load_group(&text)?;
        assert_eq!(save_group(&back), text);
        let order = spec.structure.order().map_or("infinite".to_string(), |n| n.to_string());
        println!("{name:10} {:13} order {order}", spec.structure.kind());
        if let Some(dir) = &out {
            std::fs::write(dir.join(format!("{name}.json")), text)?;
        }
        Ok(())
    };
    let cong = |r: &[i64], m: &[i64]| RecBox::Congruence(CongruenceBox::modular(r, m).unwrap());
    put("c2", GroupSpec::finite(c2()).recset("nontrivial", vec![RecBox::Subset(vec![1])]))?;
    let s3g = s3();
    let r = s3g.labels()["r"];
    let s = s3g.labels()["s"];
    let refl = vec![s, s3g.mul(r, s), s3g.mul(s, r)];
    let mut refl_sorted = refl.clone(); refl_sorted.sort();
    let conj = s3g.automorphism_from_images(&s3g.generators().iter().map(|&g| s3g.mul(s3g.mul(s, g), s)).collect::<Vec<_>>()).unwrap();
    put("s3", GroupSpec::finite(s3g.clone()).recset("reflections", vec![RecBox::Subset(refl_sorted)]).automorphism("conj_s", Automorphism::Finite(conj)))?;
    put("q8", GroupSpec::finite(q8()))?;
    put("d4", GroupSpec::finite(d4()))?;
    put("z", GroupSpec::new(make_free_abelian(1))
        .label("z", GroupValue::vector(&[1]))
        .automorphism("neg", Automorphism::Matrix(IntMatrix::from_rows(&[vec![-1]])))
        .recset("even", vec![cong(&[0], &[2])])
        .recset("odd", vec![cong(&[1], &[2])]))?;
    put("z2", GroupSpec::new(make_free_abelian(2))
        .label("e1", GroupValue::vector(&[1, 0]))
        .label("e2", GroupValue::vector(&[0, 1]))
        .automorphism("swap", Automorphism::Matrix(IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]])))
        .recset("even_sum", vec![RecBox::Congruence(CongruenceBox::new(int_vec(&[0, 0]), &IntMatrix::from_rows(&[vec![1, 1], vec![0, 2]])).unwrap())]))?;
    let c2a = Arc::new(c2());
    let parity = FiniteQuotientHom::new(c2a.clone(), vec![1, 1]).unwrap();
    let f2 = make_free(2, 3);
    put("f2", GroupSpec::new(f2.clone())
        .label("a", GroupValue::Word(FreeWord::generator(1)))
        .label("b", GroupValue::Word(FreeWord::generator(2)))
        .automorphism("swap", Automorphism::Substitution(vec![FreeWord::generator(2), FreeWord::generator(1)]))
        .recset("odd_length", vec![RecBox::Quotient(FreeBox { hom: parity, allowed: vec![1] })]))?;
    let c2s = GroupStructure::finite(c2());
    let p = GroupStructure::Product(vec![c2s.clone(), c2s.clone()]);
    put("c2xc2", GroupSpec::new(p.clone())
        .label("a", GroupValue::Tuple(vec![GroupValue::Finite(1), GroupValue::Finite(0)]))
        .label("b", GroupValue::Tuple(vec![GroupValue::Finite(0), GroupValue::Finite(1)]))
        .automorphism("flip", Automorphism::Product { source: vec![0, 1], components: vec![Automorphism::Identity, Automorphism::Identity] }))?;
    let zz = GroupStructure::Product(vec![make_free_abelian(1), make_free_abelian(1)]);
    put("zxz", GroupSpec::new(zz)
        .label("x", GroupValue::Tuple(vec![GroupValue::vector(&[1]), GroupValue::vector(&[0])]))
        .label("y", GroupValue::Tuple(vec![GroupValue::vector(&[0]), GroupValue::vector(&[1])]))
        .recset("even_odd", vec![RecBox::Product(vec![cong(&[0], &[2]), cong(&[1], &[2])])]))?;
    put("dinf", dihedral_infinite()
        .recset("rotations", vec![RecBox::Coset { q: 0, base: Box::new(RecBox::All) }])
        .recset("reflections", vec![RecBox::Coset { q: 1, base: Box::new(RecBox::All) }]))?;
    let sz = make_swap_product(&make_free_abelian(1));
    let pair = |q: usize, a: i64, b: i64| GroupValue::pair(q, GroupValue::Tuple(vec![GroupValue::vector(&[a]), GroupValue::vector(&[b])]));
    put("swap_z", GroupSpec::new(sz).label("u", pair(0, 1, 0)).label("v", pair(0, 0, 1)).label("s", pair(1, 0, 0))
        .recset("swapped", vec![RecBox::Coset { q: 1, base: Box::new(RecBox::All) }]))?;
    let sc2 = make_swap_product(&c2s);
    let fpair = |q: usize, a: usize, b: usize| GroupValue::pair(q, GroupValue::Tuple(vec![GroupValue::Finite(a), GroupValue::Finite(b)]));
    put("swap_c2", GroupSpec::new(sc2).label("u", fpair(0, 1, 0)).label("v", fpair(0, 0, 1)).label("s", fpair(1, 0, 0)))?;
    let w = make_wreath_c2(&make_free_abelian(1));
    put("z_wr_c2", GroupSpec::new(w).label("u", pair(0, 1, 0)).label("v", pair(0, 0, 1)).label("s", pair(1, 0, 0)))?;
    let ws3 = make_wreath_c2(&GroupStructure::finite(s3()));
    let sp = |q: usize, a: usize, b: usize| GroupValue::pair(q, GroupValue::Tuple(vec![GroupValue::Finite(a), GroupValue::Finite(b)]));
    put("s3_wr_c2", GroupSpec::new(ws3).label("r1", sp(0, r, 0)).label("s1", sp(0, s, 0)).label("w", sp(1, 0, 0)))?;
    put("da4", dihedral_artin_even(4, 2).unwrap())?;
    put("da6", dihedral_artin_even(6, 2).unwrap())?;
    Ok(())
}
