//! Compositional group structures and their elements.
//!
//! An [`Extension`] stores an element as a pair `(q, k)` meaning `t_q·k`,
//! where `t_q` is the transversal element for `q ∈ Q` and `k ∈ K`. The action
//! is `α_q(k) = t_q·k·t_q⁻¹` and the cocycle satisfies `t_p·t_q = t_{pq}·c(p,q)`,
//! so that
//!
//! ```text
//! (t_p k)(t_q k') = t_{pq} · c(p,q) · α_q⁻¹(k) · k'
//! ```
//!
//! with `α_q⁻¹(k) = c(q⁻¹,q)⁻¹ · α_{q⁻¹}(k) · c(q⁻¹,q)`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::finite::FiniteGroup;
use crate::free::{is_automorphism, FreeWord};
use crate::lattice::IntMatrix;
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupStructure {
    Finite(Arc<FiniteGroup>),
    FreeAbelian { rank: usize },
    /// Free group with a search bound for the semi-decision procedure.
    Free {
        rank: usize,
        bound: usize,
        names: Vec<String>,
    },
    Product(Vec<GroupStructure>),
    Extension(Arc<Extension>),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupValue {
    Finite(usize),
    Vector(Vec<BigInt>),
    Word(FreeWord),
    Tuple(Vec<GroupValue>),
    /// `t_q · k` in an extension.
    Pair { q: usize, k: Box<GroupValue> },
}

impl GroupValue {
    pub fn pair(q: usize, k: GroupValue) -> Self {
        GroupValue::Pair { q, k: Box::new(k) }
    }

    pub fn vector(v: &[i64]) -> Self {
        GroupValue::Vector(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn as_tuple(&self) -> Result<&[GroupValue]> {
        match self {
            GroupValue::Tuple(v) => Ok(v),
            other => Err(Error::StructureMismatch(format!("expected a tuple, got {other:?}"))),
        }
    }

    pub fn as_pair(&self) -> Result<(usize, &GroupValue)> {
        match self {
            GroupValue::Pair { q, k } => Ok((*q, k)),
            other => Err(Error::StructureMismatch(format!("expected a pair, got {other:?}"))),
        }
    }
}

/// Automorphisms, in the representation matching the structure they act on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Automorphism {
    Identity,
    /// Element map of a finite group.
    Finite(Vec<usize>),
    /// Integer matrix acting on column vectors.
    Matrix(IntMatrix),
    /// Generator images in a free group.
    Substitution(Vec<FreeWord>),
    /// On a direct product: output coordinate `i` is
    /// `components[i](input[source[i]])`.
    Product {
        source: Vec<usize>,
        components: Vec<Automorphism>,
    },
}

impl Automorphism {
    pub fn is_identity(&self) -> bool {
        match self {
            Automorphism::Identity => true,
            Automorphism::Finite(m) => m.iter().enumerate().all(|(i, &j)| i == j),
            Automorphism::Matrix(m) => *m == IntMatrix::identity(m.rows()),
            Automorphism::Substitution(images) => images
                .iter()
                .enumerate()
                .all(|(i, w)| *w == FreeWord::generator(i + 1)),
            Automorphism::Product { source, components } => {
                source.iter().enumerate().all(|(i, &j)| i == j)
                    && components.iter().all(Automorphism::is_identity)
            }
        }
    }

    /// Factor permutation `σ` with `σ(source[i]) = i`, for product
    /// automorphisms; the identity on `n` points otherwise.
    pub fn factor_permutation(&self, n: usize) -> Vec<usize> {
        match self {
            Automorphism::Product { source, .. } => {
                let mut sigma = vec![0; source.len()];
                for (i, &s) in source.iter().enumerate() {
                    sigma[s] = i;
                }
                sigma
            }
            _ => (0..n).collect(),
        }
    }
}

impl GroupStructure {
    pub fn finite(group: FiniteGroup) -> Self {
        GroupStructure::Finite(Arc::new(group))
    }

    pub fn free(rank: usize, bound: usize) -> Self {
        GroupStructure::Free {
            rank,
            bound,
            names: default_generator_names(rank),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            GroupStructure::Finite(_) => "finite",
            GroupStructure::FreeAbelian { .. } => "free_abelian",
            GroupStructure::Free { .. } => "free",
            GroupStructure::Product(_) => "product",
            GroupStructure::Extension(_) => "extension",
        }
    }

    pub fn identity(&self) -> GroupValue {
        match self {
            GroupStructure::Finite(g) => GroupValue::Finite(g.identity()),
            GroupStructure::FreeAbelian { rank } => GroupValue::Vector(vec![BigInt::zero(); *rank]),
            GroupStructure::Free { .. } => GroupValue::Word(FreeWord::identity()),
            GroupStructure::Product(fs) => GroupValue::Tuple(fs.iter().map(|f| f.identity()).collect()),
            GroupStructure::Extension(e) => e.identity(),
        }
    }

    pub fn is_identity(&self, g: &GroupValue) -> bool {
        *g == self.identity()
    }

    /// Checks that a value has the shape and ranges of this structure.
    pub fn check(&self, g: &GroupValue) -> Result<()> {
        let mismatch = || {
            Err(Error::StructureMismatch(format!(
                "{g:?} is not an element of this {} group",
                self.kind()
            )))
        };
        match (self, g) {
            (GroupStructure::Finite(group), GroupValue::Finite(i)) if *i < group.order() => Ok(()),
            (GroupStructure::FreeAbelian { rank }, GroupValue::Vector(v)) if v.len() == *rank => Ok(()),
            (GroupStructure::Free { rank, .. }, GroupValue::Word(w)) if w.max_generator() <= *rank => {
                Ok(())
            }
            (GroupStructure::Product(fs), GroupValue::Tuple(vs)) if fs.len() == vs.len() => {
                fs.iter().zip(vs).try_for_each(|(f, v)| f.check(v))
            }
            (GroupStructure::Extension(e), GroupValue::Pair { q, k }) if *q < e.quotient.order() => {
                e.base.check(k)
            }
            _ => mismatch(),
        }
    }

    pub fn mul(&self, a: &GroupValue, b: &GroupValue) -> Result<GroupValue> {
        match (self, a, b) {
            (GroupStructure::Finite(g), GroupValue::Finite(x), GroupValue::Finite(y))
                if *x < g.order() && *y < g.order() =>
            {
                Ok(GroupValue::Finite(g.mul(*x, *y)))
            }
            (GroupStructure::FreeAbelian { rank }, GroupValue::Vector(x), GroupValue::Vector(y))
                if x.len() == *rank && y.len() == *rank =>
            {
                Ok(GroupValue::Vector(x.iter().zip(y).map(|(a, b)| a + b).collect()))
            }
            (GroupStructure::Free { rank, .. }, GroupValue::Word(x), GroupValue::Word(y)) => {
                Ok(GroupValue::Word(crate::free::free_mul(*rank, x, y)?))
            }
            (GroupStructure::Product(fs), GroupValue::Tuple(x), GroupValue::Tuple(y))
                if fs.len() == x.len() && fs.len() == y.len() =>
            {
                let parts = fs
                    .iter()
                    .zip(x.iter().zip(y))
                    .map(|(f, (a, b))| f.mul(a, b))
                    .collect::<Result<_>>()?;
                Ok(GroupValue::Tuple(parts))
            }
            (GroupStructure::Extension(e), GroupValue::Pair { .. }, GroupValue::Pair { .. }) => {
                e.mul(a, b)
            }
            _ => Err(Error::StructureMismatch(format!(
                "cannot multiply {a:?} and {b:?} in a {} group",
                self.kind()
            ))),
        }
    }

    pub fn inv(&self, a: &GroupValue) -> Result<GroupValue> {
        match (self, a) {
            (GroupStructure::Finite(g), GroupValue::Finite(x)) if *x < g.order() => {
                Ok(GroupValue::Finite(g.inv(*x)))
            }
            (GroupStructure::FreeAbelian { rank }, GroupValue::Vector(x)) if x.len() == *rank => {
                Ok(GroupValue::Vector(x.iter().map(|v| -v).collect()))
            }
            (GroupStructure::Free { .. }, GroupValue::Word(w)) => Ok(GroupValue::Word(w.inverse())),
            (GroupStructure::Product(fs), GroupValue::Tuple(x)) if fs.len() == x.len() => Ok(
                GroupValue::Tuple(fs.iter().zip(x).map(|(f, v)| f.inv(v)).collect::<Result<_>>()?),
            ),
            (GroupStructure::Extension(e), GroupValue::Pair { .. }) => e.inv(a),
            _ => Err(Error::StructureMismatch(format!(
                "cannot invert {a:?} in a {} group",
                self.kind()
            ))),
        }
    }

    pub fn pow(&self, a: &GroupValue, exp: i64) -> Result<GroupValue> {
        let base = if exp < 0 { self.inv(a)? } else { a.clone() };
        let mut acc = self.identity();
        for _ in 0..exp.unsigned_abs() {
            acc = self.mul(&acc, &base)?;
        }
        Ok(acc)
    }

    /// `c · k · c⁻¹`
    pub fn conj(&self, c: &GroupValue, k: &GroupValue) -> Result<GroupValue> {
        self.mul(&self.mul(c, k)?, &self.inv(c)?)
    }

    /// Product of a sequence of elements.
    pub fn product<'a>(&self, items: impl IntoIterator<Item = &'a GroupValue>) -> Result<GroupValue> {
        items
            .into_iter()
            .try_fold(self.identity(), |acc, x| self.mul(&acc, x))
    }

    /// A generating set: all elements needed to check that two
    /// homomorphisms agree.
    pub fn generators(&self) -> Vec<GroupValue> {
        match self {
            GroupStructure::Finite(g) => g.generators().iter().map(|&i| GroupValue::Finite(i)).collect(),
            GroupStructure::FreeAbelian { rank } => (0..*rank)
                .map(|i| {
                    let mut v = vec![BigInt::zero(); *rank];
                    v[i] = BigInt::from(1);
                    GroupValue::Vector(v)
                })
                .collect(),
            GroupStructure::Free { rank, .. } => (1..=*rank)
                .map(|i| GroupValue::Word(FreeWord::generator(i)))
                .collect(),
            GroupStructure::Product(fs) => {
                let mut out = Vec::new();
                for (i, f) in fs.iter().enumerate() {
                    for g in f.generators() {
                        out.push(self.embed_factor(i, g));
                    }
                }
                out
            }
            GroupStructure::Extension(e) => {
                let mut out: Vec<GroupValue> = e
                    .base
                    .generators()
                    .into_iter()
                    .map(|k| GroupValue::pair(e.quotient.identity(), k))
                    .collect();
                for q in 0..e.quotient.order() {
                    if q != e.quotient.identity() {
                        out.push(e.transversal(q));
                    }
                }
                out
            }
        }
    }

    /// Places `g` in coordinate `i` of a product, identity elsewhere.
    pub fn embed_factor(&self, i: usize, g: GroupValue) -> GroupValue {
        match self {
            GroupStructure::Product(fs) => GroupValue::Tuple(
                fs.iter()
                    .enumerate()
                    .map(|(j, f)| if j == i { g.clone() } else { f.identity() })
                    .collect(),
            ),
            _ => g,
        }
    }

    /// Factor list: the factors of a product, or the structure itself.
    pub fn factors(&self) -> Vec<GroupStructure> {
        match self {
            GroupStructure::Product(fs) => fs.clone(),
            other => vec![other.clone()],
        }
    }

    /// Coordinate `i` of a value, matching [`factors`](Self::factors).
    pub fn component(&self, g: &GroupValue, i: usize) -> Result<GroupValue> {
        match self {
            GroupStructure::Product(_) => g
                .as_tuple()?
                .get(i)
                .cloned()
                .ok_or_else(|| Error::StructureMismatch(format!("no coordinate {i}"))),
            _ if i == 0 => Ok(g.clone()),
            _ => Err(Error::StructureMismatch(format!("no coordinate {i}"))),
        }
    }

    /// Order, if finite.
    pub fn order(&self) -> Option<u128> {
        match self {
            GroupStructure::Finite(g) => Some(g.order() as u128),
            GroupStructure::FreeAbelian { rank: 0 } => Some(1),
            GroupStructure::FreeAbelian { .. } => None,
            GroupStructure::Free { rank: 0, .. } => Some(1),
            GroupStructure::Free { .. } => None,
            GroupStructure::Product(fs) => fs
                .iter()
                .try_fold(1u128, |acc, f| f.order().and_then(|o| acc.checked_mul(o))),
            GroupStructure::Extension(e) => e
                .base
                .order()
                .and_then(|o| o.checked_mul(e.quotient.order() as u128)),
        }
    }

    /// All elements of a finite structure, in a fixed order.
    pub fn elements(&self) -> Option<Vec<GroupValue>> {
        self.order()?;
        Some(match self {
            GroupStructure::Finite(g) => (0..g.order()).map(GroupValue::Finite).collect(),
            GroupStructure::FreeAbelian { .. } | GroupStructure::Free { .. } => vec![self.identity()],
            GroupStructure::Product(fs) => {
                let mut out = vec![Vec::new()];
                for f in fs {
                    let elems = f.elements()?;
                    out = out
                        .into_iter()
                        .flat_map(|prefix| {
                            elems.iter().map(move |e| {
                                let mut p = prefix.clone();
                                p.push(e.clone());
                                p
                            })
                        })
                        .collect();
                }
                out.into_iter().map(GroupValue::Tuple).collect()
            }
            GroupStructure::Extension(e) => {
                let base = e.base.elements()?;
                (0..e.quotient.order())
                    .flat_map(|q| base.iter().map(move |k| GroupValue::pair(q, k.clone())))
                    .collect()
            }
        })
    }

    pub fn apply(&self, aut: &Automorphism, g: &GroupValue) -> Result<GroupValue> {
        match (self, aut, g) {
            (_, Automorphism::Identity, _) => Ok(g.clone()),
            (GroupStructure::Finite(group), Automorphism::Finite(map), GroupValue::Finite(i))
                if map.len() == group.order() && *i < map.len() =>
            {
                Ok(GroupValue::Finite(map[*i]))
            }
            (GroupStructure::FreeAbelian { .. }, Automorphism::Matrix(m), GroupValue::Vector(v)) => {
                Ok(GroupValue::Vector(m.apply(v)?))
            }
            (GroupStructure::Free { rank, .. }, Automorphism::Substitution(images), GroupValue::Word(w))
                if images.len() == *rank && w.max_generator() <= *rank =>
            {
                Ok(GroupValue::Word(w.substitute(images)))
            }
            (
                GroupStructure::Product(fs),
                Automorphism::Product { source, components },
                GroupValue::Tuple(vs),
            ) if source.len() == fs.len() && components.len() == fs.len() && vs.len() == fs.len() => {
                let parts = (0..fs.len())
                    .map(|i| fs[i].apply(&components[i], &vs[source[i]]))
                    .collect::<Result<_>>()?;
                Ok(GroupValue::Tuple(parts))
            }
            _ => Err(Error::InvalidAutomorphism(format!(
                "{aut:?} does not act on {g:?} in a {} group",
                self.kind()
            ))),
        }
    }

    /// Validates an automorphism of this structure. With `strict`, integer
    /// matrices must be unimodular; otherwise nonsingular is enough (an
    /// injective endomorphism, as allowed for twists over `ℤʳ`).
    pub fn validate_automorphism(&self, aut: &Automorphism, strict: bool) -> Result<()> {
        match (self, aut) {
            (_, Automorphism::Identity) => Ok(()),
            (GroupStructure::Finite(g), Automorphism::Finite(map)) => g.check_automorphism(map),
            (GroupStructure::FreeAbelian { rank }, Automorphism::Matrix(m)) => {
                if m.rows() != *rank || m.cols() != *rank {
                    return Err(Error::InvalidAutomorphism(format!(
                        "matrix of size {}x{} on rank {rank}",
                        m.rows(),
                        m.cols()
                    )));
                }
                let det = m.det()?;
                if det.is_zero() || (strict && det.abs() != BigInt::from(1)) {
                    return Err(Error::InvalidAutomorphism(format!(
                        "matrix determinant {det} is not invertible"
                    )));
                }
                Ok(())
            }
            (GroupStructure::Free { rank, .. }, Automorphism::Substitution(images)) => {
                if is_automorphism(*rank, images) {
                    Ok(())
                } else {
                    Err(Error::InvalidAutomorphism(format!(
                        "{images:?} is not an automorphism of F{rank}"
                    )))
                }
            }
            (GroupStructure::Product(fs), Automorphism::Product { source, components }) => {
                if source.len() != fs.len() || components.len() != fs.len() {
                    return Err(Error::InvalidAutomorphism("wrong number of coordinates".into()));
                }
                Perm::from_images(source.clone())
                    .map_err(|_| Error::InvalidAutomorphism("source is not a permutation".into()))?;
                for (i, &s) in source.iter().enumerate() {
                    if fs[s] != fs[i] {
                        return Err(Error::InvalidAutomorphism(format!(
                            "coordinate {s} sent to non-identical factor {i}"
                        )));
                    }
                    fs[i].validate_automorphism(&components[i], strict)?;
                }
                Ok(())
            }
            _ => Err(Error::InvalidAutomorphism(format!(
                "{aut:?} is not an automorphism representation for a {} group",
                self.kind()
            ))),
        }
    }
}

pub fn default_generator_names(rank: usize) -> Vec<String> {
    if rank <= 26 {
        (0..rank).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (1..=rank).map(|i| format!("a{i}")).collect()
    }
}

/// A group `G` with normal subgroup `K = base` and finite quotient `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    base: GroupStructure,
    quotient: Arc<FiniteGroup>,
    action: Vec<Automorphism>,
    cocycle: Vec<Vec<GroupValue>>,
}

impl Extension {
    /// Validates and builds an extension.
    ///
    /// Checks that each `α_q` is an automorphism of the base, that `α_1` and
    /// the cocycle are normalized, that `α_p∘α_q = α_{pq}∘conj(c(p,q))` on
    /// base generators, and that transversal products associate for every
    /// triple in `Q³`.
    pub fn new(
        base: GroupStructure,
        quotient: Arc<FiniteGroup>,
        action: Vec<Automorphism>,
        cocycle: Vec<Vec<GroupValue>>,
    ) -> Result<Self> {
        let n = quotient.order();
        if action.len() != n {
            return Err(Error::InvalidExtension(format!(
                "{} action entries for a quotient of order {n}",
                action.len()
            )));
        }
        if cocycle.len() != n || cocycle.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidExtension("cocycle table must be |Q| x |Q|".into()));
        }
        let ext = Extension {
            base,
            quotient,
            action,
            cocycle,
        };
        ext.validate()?;
        Ok(ext)
    }

    /// Extension with trivial cocycle (a semidirect product).
    pub fn split(base: GroupStructure, quotient: Arc<FiniteGroup>, action: Vec<Automorphism>) -> Result<Self> {
        let n = quotient.order();
        let e = base.identity();
        Self::new(base, quotient, action, vec![vec![e; n]; n])
    }

    fn q_name(&self, q: usize) -> String {
        match (self.quotient.label_of(q), self.quotient.perm(q)) {
            (Some(l), _) => l.to_string(),
            (None, Some(p)) => p.to_string(),
            (None, None) => format!("#{q}"),
        }
    }

    fn validate(&self) -> Result<()> {
        let q_group = &self.quotient;
        let one = q_group.identity();
        for (q, aut) in self.action.iter().enumerate() {
            self.base.validate_automorphism(aut, true).map_err(|e| {
                Error::InvalidExtension(format!("action of {}: {e}", self.q_name(q)))
            })?;
            if matches!(self.base, GroupStructure::Extension(_)) && !aut.is_identity() {
                return Err(Error::Unsupported(
                    "non-identity action on an extension base".into(),
                ));
            }
        }
        for row in &self.cocycle {
            for c in row {
                self.base.check(c).map_err(|e| Error::InvalidExtension(format!("cocycle value: {e}")))?;
            }
        }
        let gens = self.base.generators();
        for k in &gens {
            if self.base.apply(&self.action[one], k)? != *k {
                return Err(Error::InvalidExtension("action of the identity is not trivial".into()));
            }
        }
        for q in 0..q_group.order() {
            if !self.base.is_identity(&self.cocycle[one][q]) || !self.base.is_identity(&self.cocycle[q][one]) {
                return Err(Error::InvalidExtension(format!(
                    "cocycle not normalized at {}",
                    self.q_name(q)
                )));
            }
        }
        for p in 0..q_group.order() {
            for q in 0..q_group.order() {
                let pq = q_group.mul(p, q);
                let c = &self.cocycle[p][q];
                for k in &gens {
                    let lhs = self.alpha(p, &self.alpha(q, k)?)?;
                    let rhs = self.alpha(pq, &self.base.conj(c, k)?)?;
                    if lhs != rhs {
                        return Err(Error::InvalidExtension(format!(
                            "action is not multiplicative up to the cocycle at ({}, {})",
                            self.q_name(p),
                            self.q_name(q)
                        )));
                    }
                }
            }
        }
        for p in 0..q_group.order() {
            for q in 0..q_group.order() {
                for r in 0..q_group.order() {
                    let (tp, tq, tr) = (self.transversal(p), self.transversal(q), self.transversal(r));
                    let left = self.mul(&self.mul(&tp, &tq)?, &tr)?;
                    let right = self.mul(&tp, &self.mul(&tq, &tr)?)?;
                    if left != right {
                        return Err(Error::InvalidExtension(format!(
                            "cocycle identity fails at ({}, {}, {})",
                            self.q_name(p),
                            self.q_name(q),
                            self.q_name(r)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &GroupStructure {
        &self.base
    }

    pub fn quotient(&self) -> &Arc<FiniteGroup> {
        &self.quotient
    }

    pub fn action(&self, q: usize) -> &Automorphism {
        &self.action[q]
    }

    pub fn actions(&self) -> &[Automorphism] {
        &self.action
    }

    pub fn cocycle(&self, p: usize, q: usize) -> &GroupValue {
        &self.cocycle[p][q]
    }

    pub fn cocycle_table(&self) -> &[Vec<GroupValue>] {
        &self.cocycle
    }

    pub fn identity(&self) -> GroupValue {
        GroupValue::pair(self.quotient.identity(), self.base.identity())
    }

    /// `t_q`
    pub fn transversal(&self, q: usize) -> GroupValue {
        GroupValue::pair(q, self.base.identity())
    }

    /// `α_q(k) = t_q k t_q⁻¹`
    pub fn alpha(&self, q: usize, k: &GroupValue) -> Result<GroupValue> {
        self.base.apply(&self.action[q], k)
    }

    /// `α_q⁻¹(k) = t_q⁻¹ k t_q`
    pub fn alpha_inv(&self, q: usize, k: &GroupValue) -> Result<GroupValue> {
        let q_inv = self.quotient.inv(q);
        let c = &self.cocycle[q_inv][q];
        let moved = self.alpha(q_inv, k)?;
        self.base.conj(&self.base.inv(c)?, &moved)
    }

    pub fn mul(&self, a: &GroupValue, b: &GroupValue) -> Result<GroupValue> {
        let (p, k) = a.as_pair()?;
        let (q, k2) = b.as_pair()?;
        let pq = self.quotient.mul(p, q);
        let moved = self.alpha_inv(q, k)?;
        let base = self.base.mul(&self.base.mul(&self.cocycle[p][q], &moved)?, k2)?;
        Ok(GroupValue::pair(pq, base))
    }

    /// `(t_q k)⁻¹ = t_{q⁻¹} · c(q,q⁻¹)⁻¹ · α_q(k⁻¹)`
    pub fn inv(&self, a: &GroupValue) -> Result<GroupValue> {
        let (q, k) = a.as_pair()?;
        let q_inv = self.quotient.inv(q);
        let c_inv = self.base.inv(&self.cocycle[q][q_inv])?;
        let moved = self.alpha(q, &self.base.inv(k)?)?;
        Ok(GroupValue::pair(q_inv, self.base.mul(&c_inv, &moved)?))
    }

    /// Factor permutation `σ_q` induced on the base's factors.
    pub fn sigma(&self, q: usize) -> Vec<usize> {
        let n = self.base.factors().len();
        self.action[q].factor_permutation(n)
    }

    /// Whether some `α_q` moves factors of a product base.
    pub fn permutes_factors(&self) -> bool {
        (0..self.quotient.order()).any(|q| self.sigma(q).iter().enumerate().any(|(i, &j)| i != j))
    }
}
