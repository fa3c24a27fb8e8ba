//! Wreath products `J wr P`: elements written as `(j, π)` multiply by
//! `(j, π)(k, ρ) = (i ↦ j_i k_{π⁻¹(i)}, πρ)`.

use std::sync::Arc;

use groupeq::solve::{build_wreath, wreath_from_tuple, wreath_to_tuple};
use groupeq::structure::{GroupStructure, GroupValue};
use groupeq::zoo::{make_free_abelian, s3};

fn show(w: &GroupStructure, g: &GroupValue) -> String {
    let (j, pi) = wreath_to_tuple(w, g).unwrap();
    let GroupStructure::Extension(e) = w else { unreachable!() };
    let coords: Vec<String> = j
        .iter()
        .map(|x| match x {
            GroupValue::Vector(v) => v[0].to_string(),
            other => format!("{other:?}"),
        })
        .collect();
    format!("(({}), {})", coords.join(", "), e.quotient().perm(pi).unwrap())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z = make_free_abelian(1);
    let p = Arc::new(s3());
    let w = build_wreath(&z, p.clone())?;
    let r = p.labels()["r"];
    let s = p.labels()["s"];
    let a = wreath_from_tuple(&w, vec![GroupValue::vector(&[1]), GroupValue::vector(&[2]), GroupValue::vector(&[3])], r)?;
    let b = wreath_from_tuple(&w, vec![GroupValue::vector(&[10]), GroupValue::vector(&[20]), GroupValue::vector(&[30])], s)?;
    println!("a    = {}", show(&w, &a));
    println!("b    = {}", show(&w, &b));
    println!("a b  = {}", show(&w, &w.mul(&a, &b)?));
    println!("b a  = {}", show(&w, &w.mul(&b, &a)?));
    println!("a^-1 = {}", show(&w, &w.inv(&a)?));
    println!("a^3  = {}", show(&w, &w.pow(&a, 3)?));
    Ok(())
}
