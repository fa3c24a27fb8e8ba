//! Recognisable constraint sets: finite unions of boxes aligned with the
//! structure of the ambient group.

use crate::error::{Error, Result};
use crate::free::FreeBox;
use crate::lattice::CongruenceBox;
use crate::structure::{Automorphism, GroupStructure, GroupValue};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecBox {
    /// The whole group.
    All,
    /// Explicit elements of a finite group.
    Subset(Vec<usize>),
    /// A congruence coset in `ℤʳ`.
    Congruence(CongruenceBox),
    /// Preimage of a subset of a finite quotient of a free group.
    Quotient(FreeBox),
    /// One box per factor of a product.
    Product(Vec<RecBox>),
    /// `t_q · B` in an extension, with `B` a box of the base.
    Coset { q: usize, base: Box<RecBox> },
}

/// A finite union of boxes, optionally carrying the name it was declared
/// under.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RecSet {
    pub name: Option<String>,
    pub boxes: Vec<RecBox>,
}

impl RecSet {
    pub fn new(boxes: Vec<RecBox>) -> Self {
        RecSet { name: None, boxes }
    }

    pub fn named(name: impl Into<String>, boxes: Vec<RecBox>) -> Self {
        RecSet {
            name: Some(name.into()),
            boxes,
        }
    }

    pub fn all() -> Self {
        RecSet::new(vec![RecBox::All])
    }

    pub fn contains(&self, s: &GroupStructure, g: &GroupValue) -> Result<bool> {
        for b in &self.boxes {
            if b.contains(s, g)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn validate(&self, s: &GroupStructure) -> Result<()> {
        self.boxes.iter().try_for_each(|b| b.validate(s))
    }
}

/// Membership of `g` in `set` over `s`.
pub fn recset_member(g: &GroupValue, set: &RecSet, s: &GroupStructure) -> Result<bool> {
    s.check(g)?;
    set.contains(s, g)
}

fn mismatch(b: &RecBox, s: &GroupStructure) -> Error {
    Error::StructureMismatch(format!("box {b:?} does not fit a {} group", s.kind()))
}

impl RecBox {
    pub fn contains(&self, s: &GroupStructure, g: &GroupValue) -> Result<bool> {
        match (self, s, g) {
            (RecBox::All, _, _) => Ok(true),
            (RecBox::Subset(elems), GroupStructure::Finite(_), GroupValue::Finite(i)) => {
                Ok(elems.contains(i))
            }
            (RecBox::Congruence(c), GroupStructure::FreeAbelian { .. }, GroupValue::Vector(v)) => {
                Ok(c.contains(v))
            }
            (RecBox::Quotient(fb), GroupStructure::Free { .. }, GroupValue::Word(w)) => Ok(fb.contains(w)),
            (RecBox::Product(bs), GroupStructure::Product(fs), GroupValue::Tuple(vs))
                if bs.len() == fs.len() && vs.len() == fs.len() =>
            {
                for ((b, f), v) in bs.iter().zip(fs).zip(vs) {
                    if !b.contains(f, v)? {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            (RecBox::Coset { q, base }, GroupStructure::Extension(e), GroupValue::Pair { q: gq, k }) => {
                Ok(q == gq && base.contains(e.base(), k)?)
            }
            _ => Err(mismatch(self, s)),
        }
    }

    pub fn validate(&self, s: &GroupStructure) -> Result<()> {
        match (self, s) {
            (RecBox::All, _) => Ok(()),
            (RecBox::Subset(elems), GroupStructure::Finite(g)) => {
                if elems.iter().all(|&i| i < g.order()) {
                    Ok(())
                } else {
                    Err(Error::StructureMismatch("subset element out of range".into()))
                }
            }
            (RecBox::Congruence(c), GroupStructure::FreeAbelian { rank }) if c.rank() == *rank => Ok(()),
            (RecBox::Quotient(fb), GroupStructure::Free { rank, .. }) if fb.hom.rank() == *rank => {
                if fb.allowed.iter().all(|&a| a < fb.hom.target().order()) {
                    Ok(())
                } else {
                    Err(Error::StructureMismatch("allowed quotient element out of range".into()))
                }
            }
            (RecBox::Product(bs), GroupStructure::Product(fs)) if bs.len() == fs.len() => {
                bs.iter().zip(fs).try_for_each(|(b, f)| b.validate(f))
            }
            (RecBox::Coset { q, base }, GroupStructure::Extension(e)) if *q < e.quotient().order() => {
                base.validate(e.base())
            }
            _ => Err(mismatch(self, s)),
        }
    }

    /// Box components over a product, expanding `All`.
    pub fn components(&self, n: usize) -> Result<Vec<RecBox>> {
        match self {
            RecBox::All => Ok(vec![RecBox::All; n]),
            RecBox::Product(bs) if bs.len() == n => Ok(bs.clone()),
            other => Err(Error::StructureMismatch(format!(
                "{other:?} is not a box over a product of {n} factors"
            ))),
        }
    }

    /// `{m·x : x ∈ self}`
    pub fn left_translate(&self, s: &GroupStructure, m: &GroupValue) -> Result<RecBox> {
        match (self, s) {
            (RecBox::All, _) => Ok(RecBox::All),
            (RecBox::Subset(elems), GroupStructure::Finite(g)) => {
                let i = finite_index(m)?;
                let mut out: Vec<usize> = elems.iter().map(|&x| g.mul(i, x)).collect();
                out.sort_unstable();
                Ok(RecBox::Subset(out))
            }
            (RecBox::Congruence(c), GroupStructure::FreeAbelian { .. }) => match m {
                GroupValue::Vector(v) => Ok(RecBox::Congruence(c.translate(v)?)),
                _ => Err(mismatch(self, s)),
            },
            (RecBox::Quotient(fb), GroupStructure::Free { .. }) => {
                let w = match m {
                    GroupValue::Word(w) => w,
                    _ => return Err(mismatch(self, s)),
                };
                let t = fb.hom.target();
                let hm = fb.hom.eval(w);
                let mut allowed: Vec<usize> = fb.allowed.iter().map(|&a| t.mul(hm, a)).collect();
                allowed.sort_unstable();
                Ok(RecBox::Quotient(FreeBox {
                    hom: fb.hom.clone(),
                    allowed,
                }))
            }
            (RecBox::Product(bs), GroupStructure::Product(fs)) => {
                let ms = m.as_tuple()?;
                Ok(RecBox::Product(
                    bs.iter()
                        .zip(fs)
                        .zip(ms)
                        .map(|((b, f), mi)| b.left_translate(f, mi))
                        .collect::<Result<_>>()?,
                ))
            }
            (RecBox::Coset { q, base }, GroupStructure::Extension(e)) => {
                let (p, mk) = m.as_pair()?;
                let shift = e.base().mul(e.cocycle(p, *q), &e.alpha_inv(*q, mk)?)?;
                Ok(RecBox::Coset {
                    q: e.quotient().mul(p, *q),
                    base: Box::new(base.left_translate(e.base(), &shift)?),
                })
            }
            _ => Err(mismatch(self, s)),
        }
    }

    /// `{φ(x) : x ∈ self}` for an automorphism `φ`.
    pub fn map_automorphism(&self, s: &GroupStructure, phi: &Automorphism) -> Result<RecBox> {
        match (self, s, phi) {
            (_, _, Automorphism::Identity) | (RecBox::All, _, _) => Ok(self.clone()),
            (RecBox::Subset(elems), GroupStructure::Finite(_), Automorphism::Finite(map)) => {
                let mut out: Vec<usize> = elems.iter().map(|&x| map[x]).collect();
                out.sort_unstable();
                Ok(RecBox::Subset(out))
            }
            (RecBox::Congruence(c), GroupStructure::FreeAbelian { .. }, Automorphism::Matrix(m)) => {
                Ok(RecBox::Congruence(c.map_matrix(m)?))
            }
            (RecBox::Quotient(fb), GroupStructure::Free { .. }, Automorphism::Substitution(images)) => {
                Ok(RecBox::Quotient(FreeBox {
                    hom: fb.hom.precompose_inverse(images)?,
                    allowed: fb.allowed.clone(),
                }))
            }
            (RecBox::Product(bs), GroupStructure::Product(fs), Automorphism::Product { source, components }) => {
                Ok(RecBox::Product(
                    (0..fs.len())
                        .map(|i| bs[source[i]].map_automorphism(&fs[i], &components[i]))
                        .collect::<Result<_>>()?,
                ))
            }
            _ => Err(Error::Unsupported(format!(
                "image of {self:?} under {phi:?} in a {} group",
                s.kind()
            ))),
        }
    }

    /// `{c⁻¹·x·c : x ∈ self}`
    pub fn conjugate(&self, s: &GroupStructure, c: &GroupValue) -> Result<RecBox> {
        if s.is_identity(c) {
            return Ok(self.clone());
        }
        match (self, s) {
            (RecBox::All, _) | (RecBox::Congruence(_), GroupStructure::FreeAbelian { .. }) => Ok(self.clone()),
            (RecBox::Subset(elems), GroupStructure::Finite(g)) => {
                let i = finite_index(c)?;
                let mut out: Vec<usize> = elems.iter().map(|&x| g.mul(g.mul(g.inv(i), x), i)).collect();
                out.sort_unstable();
                Ok(RecBox::Subset(out))
            }
            (RecBox::Quotient(fb), GroupStructure::Free { .. }) => {
                let w = match c {
                    GroupValue::Word(w) => w,
                    _ => return Err(mismatch(self, s)),
                };
                let t = fb.hom.target();
                let hc = fb.hom.eval(w);
                let mut allowed: Vec<usize> =
                    fb.allowed.iter().map(|&a| t.mul(t.mul(t.inv(hc), a), hc)).collect();
                allowed.sort_unstable();
                Ok(RecBox::Quotient(FreeBox {
                    hom: fb.hom.clone(),
                    allowed,
                }))
            }
            (RecBox::Product(bs), GroupStructure::Product(fs)) => {
                let cs = c.as_tuple()?;
                Ok(RecBox::Product(
                    bs.iter()
                        .zip(fs)
                        .zip(cs)
                        .map(|((b, f), ci)| b.conjugate(f, ci))
                        .collect::<Result<_>>()?,
                ))
            }
            (RecBox::Coset { .. }, GroupStructure::Extension(_)) => Err(Error::Unsupported(
                "conjugating an extension box by a nontrivial element".into(),
            )),
            _ => Err(mismatch(self, s)),
        }
    }
}

fn finite_index(g: &GroupValue) -> Result<usize> {
    match g {
        GroupValue::Finite(i) => Ok(*i),
        other => Err(Error::StructureMismatch(format!("expected a finite element, got {other:?}"))),
    }
}
