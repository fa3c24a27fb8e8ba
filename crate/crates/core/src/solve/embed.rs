//! Embedding an extension over `K₁×…×Kₙ` whose action permutes the factors
//! into a product of permutational wreath products, one per orbit.
//!
//! For an orbit with base point `b`, `Stab = {q : σ_q(b) = b}` and `J` is the
//! extension of `K_b` by `Stab` with the restricted action and cocycle. With
//! `r_i` the least `q` sending `b` to the `i`-th orbit point, an element `g`
//! with top permutation `π` has coordinate `i` equal to
//! `ν(r_i⁻¹·g·r_{π⁻¹(i)})`, where `ν` keeps the `b`-component.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::wreath::{build_wreath, wreath_from_tuple, wreath_to_tuple};
use crate::error::{Error, Result};
use crate::finite::closure;
use crate::perm::Perm;
use crate::recset::{RecBox, RecSet};
use crate::structure::{Automorphism, Extension, GroupStructure, GroupValue};
use crate::system::{EqWord, System, Token};

/// One orbit's map into `J ≀ P`.
#[derive(Clone, Debug)]
pub struct OrbitEmbedding {
    source: Arc<Extension>,
    points: Vec<usize>,
    reps: Vec<usize>,
    stab_of: Vec<Option<usize>>,
    top_of: Vec<usize>,
    j: GroupStructure,
    wreath: GroupStructure,
}

fn component_aut(aut: &Automorphism, i: usize) -> Automorphism {
    match aut {
        Automorphism::Product { components, .. } => components[i].clone(),
        other => other.clone(),
    }
}

/// Builds the embedding of `ext` into `J ≀ P` for one `σ(Q)`-orbit of factor
/// indices. Fails with [`Error::OrbitNotClosed`] unless `orbit` is exactly one
/// orbit.
pub fn gross_kovacs_embed(ext: &Arc<Extension>, orbit: &[usize]) -> Result<OrbitEmbedding> {
    let quot = ext.quotient();
    let n = ext.base().factors().len();
    let mut points = orbit.to_vec();
    points.sort_unstable();
    points.dedup();
    let Some(&base) = points.first() else {
        return Err(Error::OrbitNotClosed("empty orbit".into()));
    };
    if points.iter().any(|&p| p >= n) {
        return Err(Error::OrbitNotClosed(format!("{orbit:?} names a missing factor")));
    }
    let sigmas: Vec<Vec<usize>> = (0..quot.order()).map(|q| ext.sigma(q)).collect();
    let mut reached: Vec<usize> = sigmas.iter().map(|s| s[base]).collect();
    reached.sort_unstable();
    reached.dedup();
    if reached != points {
        return Err(Error::OrbitNotClosed(format!(
            "{orbit:?} is not the orbit {reached:?} of factor {base}"
        )));
    }
    let pos = |p: usize| points.binary_search(&p).expect("orbit point");
    let reps: Vec<usize> = points
        .iter()
        .map(|&p| (0..quot.order()).find(|&q| sigmas[q][base] == p).expect("reached point"))
        .collect();

    let stab: Vec<usize> = (0..quot.order()).filter(|&q| sigmas[q][base] == base).collect();
    let (stab_group, stab_parent) = quot.subgroup(&stab)?;
    let labels: BTreeMap<String, usize> = stab_parent
        .iter()
        .enumerate()
        .filter_map(|(i, &q)| quot.label_of(q).map(|l| (l.to_string(), i)))
        .collect();
    let stab_group = stab_group.with_labels(labels)?;
    let mut stab_of = vec![None; quot.order()];
    for (i, &q) in stab_parent.iter().enumerate() {
        stab_of[q] = Some(i);
    }
    let k_base = ext.base().factors()[base].clone();
    let action = stab_parent.iter().map(|&q| component_aut(ext.action(q), base)).collect();
    let cocycle = stab_parent
        .iter()
        .map(|&p| {
            stab_parent
                .iter()
                .map(|&q| ext.base().component(ext.cocycle(p, q), base))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let j = GroupStructure::Extension(Arc::new(Extension::new(
        k_base,
        Arc::new(stab_group),
        action,
        cocycle,
    )?));

    let degree = points.len();
    let top_perms: Vec<Perm> = sigmas
        .iter()
        .map(|s| Perm::from_images(points.iter().map(|&p| pos(s[p])).collect()))
        .collect::<Result<_>>()?;
    let top = Arc::new(closure(degree, &top_perms)?);
    let top_of = top_perms
        .iter()
        .map(|p| top.index_of_perm(p).expect("closure contains generators"))
        .collect();
    let wreath = build_wreath(&j, top)?;
    Ok(OrbitEmbedding {
        source: ext.clone(),
        points,
        reps,
        stab_of,
        top_of,
        j,
        wreath,
    })
}

impl OrbitEmbedding {
    pub fn wreath(&self) -> &GroupStructure {
        &self.wreath
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn coordinate_group(&self) -> &GroupStructure {
        &self.j
    }

    fn g(&self) -> GroupStructure {
        GroupStructure::Extension(self.source.clone())
    }

    /// `ν` on an element whose top fixes the base point.
    fn nu(&self, x: &GroupValue) -> Result<GroupValue> {
        let (s, k) = x.as_pair()?;
        let s = self.stab_of[s].ok_or_else(|| Error::Internal("element outside the stabilizer".into()))?;
        Ok(GroupValue::pair(s, self.source.base().component(k, self.points[0])?))
    }

    /// Coordinates `(j, π)` of the image of `g`.
    fn tuple_image(&self, g: &GroupValue) -> Result<(Vec<GroupValue>, usize)> {
        let gs = self.g();
        let (q, _) = g.as_pair()?;
        let pi = self.top_of[q];
        let GroupStructure::Extension(w) = &self.wreath else { unreachable!() };
        let perm = w.quotient().perm(pi).expect("permutation top").clone();
        let inv = perm.inverse();
        let j = (0..self.points.len())
            .map(|i| {
                let ri = self.source.transversal(self.reps[i]);
                let rk = self.source.transversal(self.reps[inv.apply(i)]);
                let x = gs.mul(&gs.mul(&gs.inv(&ri)?, g)?, &rk)?;
                self.nu(&x)
            })
            .collect::<Result<_>>()?;
        Ok((j, pi))
    }

    /// `μ(g)`
    pub fn map(&self, g: &GroupValue) -> Result<GroupValue> {
        let (j, pi) = self.tuple_image(g)?;
        wreath_from_tuple(&self.wreath, j, pi)
    }

    /// Image box of the coset `t_q·K`.
    fn coset_box(&self, q: usize) -> Result<RecBox> {
        self.box_of(q, &RecBox::All)
    }

    /// Image of the box `t_q·B` for a base box `B`.
    fn box_of(&self, q: usize, b: &RecBox) -> Result<RecBox> {
        let ext = &self.source;
        let k = ext.base();
        let n = k.factors().len();
        let base = self.points[0];
        let comps = match (k, b) {
            (GroupStructure::Product(_), b) => b.components(n)?,
            (_, b) => vec![b.clone()],
        };
        let (j, pi) = self.tuple_image(&ext.transversal(q))?;
        let GroupStructure::Extension(w) = &self.wreath else { unreachable!() };
        let perm = w.quotient().perm(pi).expect("permutation top").clone();
        let k_base = &k.factors()[base];
        let quot = ext.quotient();
        let coords = (0..self.points.len())
            .map(|i| {
                let (s, m) = j[perm.apply(i)].as_pair()?;
                let bi = &comps[self.points[i]];
                let inner = if *bi == RecBox::All {
                    RecBox::All
                } else {
                    let r = self.reps[i];
                    let r_inv = quot.inv(r);
                    let phi = component_aut(ext.action(r_inv), base);
                    let c = k.component(ext.cocycle(r_inv, r), base)?;
                    bi.map_automorphism(k_base, &phi)?
                        .conjugate(k_base, &c)?
                        .left_translate(k_base, m)?
                };
                Ok(RecBox::Coset {
                    q: s,
                    base: Box::new(inner),
                })
            })
            .collect::<Result<_>>()?;
        Ok(RecBox::Coset {
            q: pi,
            base: Box::new(RecBox::Product(coords)),
        })
    }

    /// Union of the image boxes of all cosets of the base.
    pub fn image(&self) -> Result<RecSet> {
        let boxes = (0..self.source.quotient().order())
            .map(|q| self.coset_box(q))
            .collect::<Result<_>>()?;
        Ok(RecSet::new(boxes))
    }
}

/// The product of the orbit embeddings, `G → W₁×…×W_k`.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Arc<Extension>,
    orbits: Vec<OrbitEmbedding>,
    target: GroupStructure,
    coset_boxes: Vec<RecBox>,
}

impl Embedding {
    /// Builds one orbit embedding per `σ(Q)`-orbit and checks `μ` on pairs of
    /// generators.
    pub fn new(source: Arc<Extension>) -> Result<Self> {
        let n = source.base().factors().len();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit: Vec<usize> = (0..source.quotient().order()).map(|q| source.sigma(q)[start]).collect();
            orbit.sort_unstable();
            orbit.dedup();
            for &p in &orbit {
                seen[p] = true;
            }
            orbits.push(gross_kovacs_embed(&source, &orbit)?);
        }
        let target = GroupStructure::Product(orbits.iter().map(|o| o.wreath.clone()).collect());
        let coset_boxes = (0..source.quotient().order())
            .map(|q| {
                Ok(RecBox::Product(
                    orbits.iter().map(|o| o.coset_box(q)).collect::<Result<_>>()?,
                ))
            })
            .collect::<Result<_>>()?;
        let emb = Embedding {
            source,
            orbits,
            target,
            coset_boxes,
        };
        emb.validate()?;
        Ok(emb)
    }

    fn validate(&self) -> Result<()> {
        let g = GroupStructure::Extension(self.source.clone());
        let gens = g.generators();
        for a in &gens {
            for b in &gens {
                let lhs = self.map(&g.mul(a, b)?)?;
                let rhs = self.target.mul(&self.map(a)?, &self.map(b)?)?;
                if lhs != rhs {
                    return Err(Error::Internal(format!(
                        "embedding is not multiplicative on {a:?}, {b:?}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<Extension> {
        &self.source
    }

    pub fn target(&self) -> &GroupStructure {
        &self.target
    }

    pub fn orbits(&self) -> &[OrbitEmbedding] {
        &self.orbits
    }

    pub fn map(&self, g: &GroupValue) -> Result<GroupValue> {
        Ok(GroupValue::Tuple(
            self.orbits.iter().map(|o| o.map(g)).collect::<Result<_>>()?,
        ))
    }

    /// The image `μ(G)` as a recognisable set.
    pub fn image(&self) -> RecSet {
        RecSet::new(self.coset_boxes.clone())
    }

    /// Image of a constraint set on `G`.
    pub fn map_recset(&self, set: &RecSet) -> Result<RecSet> {
        let mut boxes = Vec::new();
        for b in &set.boxes {
            match b {
                RecBox::All => boxes.extend(self.coset_boxes.iter().cloned()),
                RecBox::Coset { q, base } => boxes.push(RecBox::Product(
                    self.orbits.iter().map(|o| o.box_of(*q, base)).collect::<Result<_>>()?,
                )),
                other => {
                    return Err(Error::StructureMismatch(format!(
                        "box {other:?} in an extension constraint"
                    )))
                }
            }
        }
        Ok(RecSet {
            name: set.name.clone(),
            boxes,
        })
    }

    /// Transports a system on `G` to the target, constraining every variable
    /// to the image.
    pub fn map_system(&self, system: &System) -> Result<System> {
        let map_word = |w: &EqWord| -> Result<EqWord> {
            w.tokens()
                .iter()
                .map(|t| match t {
                    Token::Const(c) => Ok(Token::Const(self.map(c)?)),
                    Token::Var(o) => Ok(Token::Var(o.clone())),
                })
                .collect::<Result<_>>()
                .map(EqWord)
        };
        let mut out = System::new(system.variables.iter().cloned());
        out.equations = system.equations.iter().map(map_word).collect::<Result<_>>()?;
        out.inequations = system.inequations.iter().map(map_word).collect::<Result<_>>()?;
        for var in &system.variables {
            let set = match system.constraints.get(var) {
                Some(set) => self.map_recset(set)?,
                None => self.image(),
            };
            out.constraints.insert(var.clone(), set);
        }
        Ok(out)
    }

    /// The unique `g` with `μ(g) = w`, for `w` in the image.
    pub fn pull_back(&self, w: &GroupValue) -> Result<GroupValue> {
        let q = (0..self.coset_boxes.len())
            .find_map(|q| match self.coset_boxes[q].contains(&self.target, w) {
                Ok(true) => Some(Ok(q)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            })
            .transpose()?
            .ok_or_else(|| Error::Internal(format!("{w:?} is outside the image")))?;
        let ext = &self.source;
        let k_struct = ext.base();
        let h = self
            .target
            .mul(&self.target.inv(&self.map(&ext.transversal(q))?)?, w)?;
        let h = h.as_tuple()?;
        let mut coords: Vec<Option<GroupValue>> = vec![None; k_struct.factors().len()];
        for (o, ho) in self.orbits.iter().zip(h) {
            let (j, _) = wreath_to_tuple(&o.wreath, ho)?;
            let base = o.points[0];
            for (l, jl) in j.iter().enumerate() {
                let (_, v) = jl.as_pair()?;
                let moved = ext.alpha(o.reps[l], &k_struct.embed_factor(base, v.clone()))?;
                coords[o.points[l]] = Some(k_struct.component(&moved, o.points[l])?);
            }
        }
        let coords: Vec<GroupValue> = coords
            .into_iter()
            .map(|c| c.ok_or_else(|| Error::Internal("factor missing from every orbit".into())))
            .collect::<Result<_>>()?;
        let k = match k_struct {
            GroupStructure::Product(_) => GroupValue::Tuple(coords),
            _ => coords.into_iter().next().expect("one factor"),
        };
        let g = GroupValue::pair(q, k);
        if self.map(&g)? != *w {
            return Err(Error::Internal(format!("pull-back of {w:?} does not map back")));
        }
        Ok(g)
    }
}
