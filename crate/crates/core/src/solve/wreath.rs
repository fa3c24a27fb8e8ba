//! Permutational wreath products `J ≀ P`.
//!
//! Elements are stored as `(π, k)` meaning `t_π·k`. The usual tuple notation
//! `(j, π)` means `j·π`; the two are related by `kᵢ = j_{π(i)}`, and the
//! product of `(j, π)` and `(j', ρ)` is `(j_i·j'_{π⁻¹(i)}, πρ)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finite::FiniteGroup;
use crate::structure::{Automorphism, Extension, GroupStructure, GroupValue};

/// `J ≀ P` as an extension of `Jⁿ` by `P`, with `P` acting by permuting
/// coordinates and trivial cocycle.
pub fn build_wreath(j: &GroupStructure, p: Arc<FiniteGroup>) -> Result<GroupStructure> {
    let n = p
        .degree()
        .ok_or_else(|| Error::StructureMismatch("wreath top group must be a permutation group".into()))?;
    let base = GroupStructure::Product(vec![j.clone(); n]);
    let action = (0..p.order())
        .map(|pi| {
            let perm = p.perm(pi).expect("permutation group element");
            Automorphism::Product {
                source: perm.inverse().images().to_vec(),
                components: vec![Automorphism::Identity; n],
            }
        })
        .collect();
    Ok(GroupStructure::Extension(Arc::new(Extension::split(base, p, action)?)))
}

fn top_perm(ext: &Extension, pi: usize) -> Result<&crate::perm::Perm> {
    ext.quotient()
        .perm(pi)
        .ok_or_else(|| Error::StructureMismatch("wreath top group must be a permutation group".into()))
}

/// The element written `(j, π)`.
pub fn wreath_from_tuple(w: &GroupStructure, j: Vec<GroupValue>, pi: usize) -> Result<GroupValue> {
    let GroupStructure::Extension(ext) = w else {
        return Err(Error::StructureMismatch("not a wreath product".into()));
    };
    let perm = top_perm(ext, pi)?;
    if j.len() != perm.degree() {
        return Err(Error::DegreeMismatch(j.len(), perm.degree()));
    }
    let k = (0..j.len()).map(|i| j[perm.apply(i)].clone()).collect();
    Ok(GroupValue::pair(pi, GroupValue::Tuple(k)))
}

/// Inverse of [`wreath_from_tuple`]: returns `(j, π)`.
pub fn wreath_to_tuple(w: &GroupStructure, g: &GroupValue) -> Result<(Vec<GroupValue>, usize)> {
    let GroupStructure::Extension(ext) = w else {
        return Err(Error::StructureMismatch("not a wreath product".into()));
    };
    let (pi, k) = g.as_pair()?;
    let k = k.as_tuple()?;
    let inv = top_perm(ext, pi)?.inverse();
    Ok(((0..k.len()).map(|l| k[inv.apply(l)].clone()).collect(), pi))
}
