//! JSON group files.
//!
//! Canonical form is the output of [`save_group`]: sorted keys, two-space
//! indentation, trailing newline.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use super::GroupSpec;
use crate::error::{Error, Result};
use crate::finite::{closure, FiniteGroup};
use crate::free::{FiniteQuotientHom, FreeBox, FreeWord};
use crate::lattice::{CongruenceBox, IntMatrix};
use crate::perm::Perm;
use crate::recset::{RecBox, RecSet};
use crate::structure::{default_generator_names, Automorphism, Extension, GroupStructure, GroupValue};

fn err(msg: impl Into<String>) -> Error {
    Error::GroupFile(msg.into())
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| err(format!("missing field `{key}`")))
}

fn as_object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object().ok_or_else(|| err(format!("expected an object, got {v}")))
}

fn as_array(v: &Value) -> Result<&Vec<Value>> {
    v.as_array().ok_or_else(|| err(format!("expected an array, got {v}")))
}

fn as_usize(v: &Value) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| err(format!("expected a non-negative integer, got {v}")))
}

fn as_str(v: &Value) -> Result<&str> {
    v.as_str().ok_or_else(|| err(format!("expected a string, got {v}")))
}

fn as_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| err(format!("expected an integer, got {v}"))),
        Value::String(s) => s.parse().map_err(|_| err(format!("expected an integer, got {v}"))),
        _ => Err(err(format!("expected an integer, got {v}"))),
    }
}

fn int_value(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(i) => json!(i),
        None => Value::String(x.to_string()),
    }
}

fn int_vector(v: &Value) -> Result<Vec<BigInt>> {
    as_array(v)?.iter().map(as_int).collect()
}

fn int_matrix(v: &Value, cols: usize) -> Result<IntMatrix> {
    let rows = as_array(v)?
        .iter()
        .map(int_vector)
        .collect::<Result<Vec<_>>>()?;
    IntMatrix::from_row_vecs(rows, cols)
}

fn matrix_value(m: &IntMatrix) -> Value {
    Value::Array(
        m.row_vecs()
            .iter()
            .map(|r| Value::Array(r.iter().map(int_value).collect()))
            .collect(),
    )
}

// ---- finite groups ----

fn parse_finite_group(obj: &Map<String, Value>) -> Result<FiniteGroup> {
    let g = if let Some(table) = obj.get("table") {
        let rows = as_array(table)?
            .iter()
            .map(|r| as_array(r)?.iter().map(as_usize).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::from_table(rows)?
    } else {
        let degree = as_usize(field(obj, "degree")?)?;
        let gens = as_array(field(obj, "generators")?)?
            .iter()
            .map(|g| {
                let images = as_array(g)?.iter().map(as_usize).collect::<Result<Vec<_>>>()?;
                Perm::from_one_based(&images)
            })
            .collect::<Result<Vec<_>>>()?;
        closure(degree, &gens)?
    };
    let mut labels = BTreeMap::new();
    if let Some(l) = obj.get("labels") {
        for (name, lit) in as_object(l)? {
            labels.insert(name.clone(), raw_finite_element(&g, lit)?);
        }
    }
    g.with_labels(labels)
}

fn raw_finite_element(g: &FiniteGroup, v: &Value) -> Result<usize> {
    match v {
        Value::Number(_) => {
            let i = as_usize(v)?;
            if i < g.order() {
                Ok(i)
            } else {
                Err(err(format!("element index {i} out of range")))
            }
        }
        Value::Array(_) => {
            let images = as_array(v)?.iter().map(as_usize).collect::<Result<Vec<_>>>()?;
            let p = Perm::from_one_based(&images)?;
            g.index_of_perm(&p)
                .ok_or_else(|| err(format!("{p} is not an element of the group")))
        }
        _ => Err(err(format!("expected an element index or permutation images, got {v}"))),
    }
}

fn raw_finite_value(g: &FiniteGroup, i: usize) -> Value {
    match g.perm(i) {
        Some(p) => json!(p.one_based()),
        None => json!(i),
    }
}

fn finite_element(g: &FiniteGroup, v: &Value) -> Result<usize> {
    match v {
        Value::String(s) => {
            let mut acc = g.identity();
            for tok in s.split_whitespace() {
                if tok == "1" {
                    continue;
                }
                let (name, inv) = match tok.strip_suffix("^-1") {
                    Some(n) => (n, true),
                    None => (tok, false),
                };
                let &x = g
                    .labels()
                    .get(name)
                    .ok_or_else(|| err(format!("unknown label `{name}`")))?;
                acc = g.mul(acc, if inv { g.inv(x) } else { x });
            }
            Ok(acc)
        }
        _ => raw_finite_element(g, v),
    }
}

fn finite_value(g: &FiniteGroup, i: usize) -> Value {
    match g.label_of(i) {
        Some(l) => json!(l),
        None if i == g.identity() => json!("1"),
        None => raw_finite_value(g, i),
    }
}

fn finite_node(g: &FiniteGroup, labels: Option<&BTreeMap<String, usize>>) -> Value {
    let mut obj = Map::new();
    obj.insert("kind".into(), json!("finite"));
    match (g.degree(), g.perms()) {
        (Some(degree), Some(perms)) => {
            obj.insert("degree".into(), json!(degree));
            obj.insert(
                "generators".into(),
                Value::Array(g.generators().iter().map(|&x| json!(perms[x].one_based())).collect()),
            );
        }
        _ => {
            let n = g.order();
            obj.insert(
                "table".into(),
                Value::Array((0..n).map(|a| json!((0..n).map(|b| g.mul(a, b)).collect::<Vec<_>>())).collect()),
            );
        }
    }
    let labels = labels.unwrap_or(g.labels());
    if !labels.is_empty() {
        obj.insert(
            "labels".into(),
            Value::Object(labels.iter().map(|(k, &v)| (k.clone(), raw_finite_value(g, v))).collect()),
        );
    }
    Value::Object(obj)
}

// ---- structures ----

fn parse_node(v: &Value) -> Result<GroupStructure> {
    let obj = as_object(v)?;
    let kind = as_str(field(obj, "kind")?)?;
    Ok(match kind {
        "finite" => GroupStructure::Finite(Arc::new(parse_finite_group(obj)?)),
        "free_abelian" => GroupStructure::FreeAbelian {
            rank: as_usize(field(obj, "rank")?)?,
        },
        "free" => {
            let rank = as_usize(field(obj, "rank")?)?;
            let bound = match obj.get("bound") {
                Some(b) => as_usize(b)?,
                None => 3,
            };
            let names = match obj.get("names") {
                Some(n) => as_array(n)?
                    .iter()
                    .map(|x| as_str(x).map(str::to_string))
                    .collect::<Result<Vec<_>>>()?,
                None => default_generator_names(rank),
            };
            if names.len() != rank {
                return Err(err(format!("{} generator names for rank {rank}", names.len())));
            }
            GroupStructure::Free { rank, bound, names }
        }
        "product" => GroupStructure::Product(
            as_array(field(obj, "factors")?)?
                .iter()
                .map(parse_node)
                .collect::<Result<_>>()?,
        ),
        "extension" => {
            let base = parse_node(field(obj, "base")?)?;
            let q_node = as_object(field(obj, "quotient")?)?;
            let quotient = Arc::new(parse_finite_group(q_node)?);
            let n = quotient.order();
            let mut action = vec![Automorphism::Identity; n];
            if let Some(a) = obj.get("action") {
                for entry in as_array(a)? {
                    let e = as_object(entry)?;
                    let q = finite_element(&quotient, field(e, "q")?)?;
                    action[q] = parse_automorphism(&base, field(e, "map")?)?;
                }
            }
            let mut cocycle = vec![vec![base.identity(); n]; n];
            if let Some(c) = obj.get("cocycle") {
                for entry in as_array(c)? {
                    let e = as_object(entry)?;
                    let p = finite_element(&quotient, field(e, "p")?)?;
                    let q = finite_element(&quotient, field(e, "q")?)?;
                    cocycle[p][q] = parse_value(&base, field(e, "value")?)?;
                }
            }
            GroupStructure::Extension(Arc::new(Extension::new(base, quotient, action, cocycle)?))
        }
        other => return Err(err(format!("unknown group kind `{other}`"))),
    })
}

fn node_value(s: &GroupStructure) -> Value {
    match s {
        GroupStructure::Finite(g) => finite_node(g, None),
        GroupStructure::FreeAbelian { rank } => json!({"kind": "free_abelian", "rank": rank}),
        GroupStructure::Free { rank, bound, names } => {
            json!({"kind": "free", "rank": rank, "bound": bound, "names": names})
        }
        GroupStructure::Product(fs) => {
            json!({"kind": "product", "factors": fs.iter().map(node_value).collect::<Vec<_>>()})
        }
        GroupStructure::Extension(e) => {
            let q = e.quotient();
            let action: Vec<Value> = (0..q.order())
                .filter(|&x| !matches!(e.action(x), Automorphism::Identity))
                .map(|x| json!({"q": finite_value(q, x), "map": automorphism_value(e.base(), e.action(x))}))
                .collect();
            let mut cocycle = Vec::new();
            for p in 0..q.order() {
                for r in 0..q.order() {
                    let c = e.cocycle(p, r);
                    if !e.base().is_identity(c) {
                        cocycle.push(json!({
                            "p": finite_value(q, p),
                            "q": finite_value(q, r),
                            "value": value_literal(e.base(), c),
                        }));
                    }
                }
            }
            json!({
                "kind": "extension",
                "base": node_value(e.base()),
                "quotient": finite_node(q, None),
                "action": action,
                "cocycle": cocycle,
            })
        }
    }
}

// ---- elements ----

/// Parses an element literal in the structure-aligned syntax.
pub fn parse_value(s: &GroupStructure, v: &Value) -> Result<GroupValue> {
    let g = match (s, v) {
        (GroupStructure::Finite(g), _) => GroupValue::Finite(finite_element(g, v)?),
        (GroupStructure::FreeAbelian { .. }, Value::Array(_)) => GroupValue::Vector(int_vector(v)?),
        (GroupStructure::Free { names, .. }, Value::String(text)) => {
            let text = if text.trim() == "1" { "" } else { text.as_str() };
            GroupValue::Word(FreeWord::parse(text, names)?)
        }
        (GroupStructure::Product(fs), Value::Array(items)) if items.len() == fs.len() => GroupValue::Tuple(
            fs.iter()
                .zip(items)
                .map(|(f, x)| parse_value(f, x))
                .collect::<Result<_>>()?,
        ),
        (GroupStructure::Extension(e), Value::Object(obj)) => GroupValue::pair(
            finite_element(e.quotient(), field(obj, "q")?)?,
            parse_value(e.base(), field(obj, "k")?)?,
        ),
        _ => {
            return Err(err(format!(
                "{v} is not an element literal for a {} group",
                s.kind()
            )))
        }
    };
    s.check(&g)?;
    Ok(g)
}

/// Prints an element in the structure-aligned syntax.
pub fn value_literal(s: &GroupStructure, g: &GroupValue) -> Value {
    match (s, g) {
        (GroupStructure::Finite(group), GroupValue::Finite(i)) => finite_value(group, *i),
        (_, GroupValue::Vector(v)) => Value::Array(v.iter().map(int_value).collect()),
        (GroupStructure::Free { names, .. }, GroupValue::Word(w)) => {
            if w.is_empty() {
                json!("1")
            } else {
                json!(w.render(names))
            }
        }
        (GroupStructure::Product(fs), GroupValue::Tuple(vs)) => {
            Value::Array(fs.iter().zip(vs).map(|(f, x)| value_literal(f, x)).collect())
        }
        (GroupStructure::Extension(e), GroupValue::Pair { q, k }) => {
            json!({"q": finite_value(e.quotient(), *q), "k": value_literal(e.base(), k)})
        }
        _ => Value::String(format!("{g:?}")),
    }
}

// ---- automorphisms ----

fn parse_automorphism(s: &GroupStructure, v: &Value) -> Result<Automorphism> {
    if v.is_null() {
        return Ok(Automorphism::Identity);
    }
    let obj = as_object(v)?;
    let aut = match s {
        GroupStructure::Finite(g) => {
            let images = as_array(field(obj, "images")?)?
                .iter()
                .map(|x| finite_element(g, x))
                .collect::<Result<Vec<_>>>()?;
            Automorphism::Finite(g.automorphism_from_images(&images)?)
        }
        GroupStructure::FreeAbelian { rank } => Automorphism::Matrix(int_matrix(field(obj, "matrix")?, *rank)?),
        GroupStructure::Free { names, .. } => Automorphism::Substitution(
            as_array(field(obj, "images")?)?
                .iter()
                .map(|x| {
                    let t = as_str(x)?;
                    FreeWord::parse(if t.trim() == "1" { "" } else { t }, names)
                })
                .collect::<Result<_>>()?,
        ),
        GroupStructure::Product(fs) => {
            let source = as_array(field(obj, "source")?)?
                .iter()
                .map(|x| {
                    let i = as_usize(x)?;
                    i.checked_sub(1).ok_or_else(|| err("factor positions are 1-based"))
                })
                .collect::<Result<Vec<_>>>()?;
            let comps = as_array(field(obj, "components")?)?;
            if comps.len() != fs.len() || source.len() != fs.len() {
                return Err(err("product automorphism needs one entry per factor"));
            }
            if source.iter().any(|&i| i >= fs.len()) {
                return Err(err("factor position out of range"));
            }
            Automorphism::Product {
                components: fs
                    .iter()
                    .zip(comps)
                    .map(|(f, c)| parse_automorphism(f, c))
                    .collect::<Result<_>>()?,
                source,
            }
        }
        GroupStructure::Extension(_) => return Err(Error::Unsupported("automorphisms of extensions".into())),
    };
    s.validate_automorphism(&aut, false)?;
    Ok(aut)
}

fn automorphism_value(s: &GroupStructure, a: &Automorphism) -> Value {
    match (s, a) {
        (_, Automorphism::Identity) => Value::Null,
        (GroupStructure::Finite(g), Automorphism::Finite(map)) => {
            json!({"images": g.generators().iter().map(|&x| finite_value(g, map[x])).collect::<Vec<_>>()})
        }
        (_, Automorphism::Matrix(m)) => json!({"matrix": matrix_value(m)}),
        (GroupStructure::Free { names, .. }, Automorphism::Substitution(images)) => json!({
            "images": images
                .iter()
                .map(|w| if w.is_empty() { "1".to_string() } else { w.render(names) })
                .collect::<Vec<_>>()
        }),
        (GroupStructure::Product(fs), Automorphism::Product { source, components }) => json!({
            "source": source.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "components": fs.iter().zip(components).map(|(f, c)| automorphism_value(f, c)).collect::<Vec<_>>(),
        }),
        _ => Value::String(format!("{a:?}")),
    }
}

// ---- boxes ----

fn parse_box(s: &GroupStructure, v: &Value) -> Result<RecBox> {
    if v.as_str() == Some("all") {
        return Ok(RecBox::All);
    }
    let obj = as_object(v)?;
    let b = match s {
        GroupStructure::Finite(g) => {
            let mut elems = as_array(field(obj, "elements")?)?
                .iter()
                .map(|x| finite_element(g, x))
                .collect::<Result<Vec<_>>>()?;
            elems.sort_unstable();
            elems.dedup();
            RecBox::Subset(elems)
        }
        GroupStructure::FreeAbelian { rank } => RecBox::Congruence(CongruenceBox::new(
            int_vector(field(obj, "residue")?)?,
            &int_matrix(field(obj, "basis")?, *rank)?,
        )?),
        GroupStructure::Free { rank, names, .. } => {
            let target = Arc::new(parse_finite_group(as_object(field(obj, "quotient")?)?)?);
            let images = as_array(field(obj, "images")?)?
                .iter()
                .map(|x| finite_element(&target, x))
                .collect::<Result<Vec<_>>>()?;
            if images.len() != *rank {
                return Err(err(format!("{} generator images for {:?}", images.len(), names)));
            }
            let mut allowed = as_array(field(obj, "allowed")?)?
                .iter()
                .map(|x| finite_element(&target, x))
                .collect::<Result<Vec<_>>>()?;
            allowed.sort_unstable();
            allowed.dedup();
            RecBox::Quotient(FreeBox {
                hom: FiniteQuotientHom::new(target, images)?,
                allowed,
            })
        }
        GroupStructure::Product(fs) => {
            let comps = as_array(field(obj, "components")?)?;
            if comps.len() != fs.len() {
                return Err(err("product box needs one component per factor"));
            }
            RecBox::Product(
                fs.iter()
                    .zip(comps)
                    .map(|(f, c)| parse_box(f, c))
                    .collect::<Result<_>>()?,
            )
        }
        GroupStructure::Extension(e) => RecBox::Coset {
            q: finite_element(e.quotient(), field(obj, "q")?)?,
            base: Box::new(parse_box(e.base(), field(obj, "k")?)?),
        },
    };
    b.validate(s)?;
    Ok(b)
}

fn box_value(s: &GroupStructure, b: &RecBox) -> Value {
    match (s, b) {
        (_, RecBox::All) => json!("all"),
        (GroupStructure::Finite(g), RecBox::Subset(elems)) => {
            json!({"elements": elems.iter().map(|&x| finite_value(g, x)).collect::<Vec<_>>()})
        }
        (_, RecBox::Congruence(c)) => json!({
            "residue": c.residue().iter().map(int_value).collect::<Vec<_>>(),
            "basis": matrix_value(c.basis()),
        }),
        (_, RecBox::Quotient(fb)) => {
            let t = fb.hom.target();
            json!({
                "quotient": finite_node(t, None),
                "images": fb.hom.images().iter().map(|&x| finite_value(t, x)).collect::<Vec<_>>(),
                "allowed": fb.allowed.iter().map(|&x| finite_value(t, x)).collect::<Vec<_>>(),
            })
        }
        (GroupStructure::Product(fs), RecBox::Product(bs)) => {
            json!({"components": fs.iter().zip(bs).map(|(f, x)| box_value(f, x)).collect::<Vec<_>>()})
        }
        (GroupStructure::Extension(e), RecBox::Coset { q, base }) => {
            json!({"q": finite_value(e.quotient(), *q), "k": box_value(e.base(), base)})
        }
        _ => Value::String(format!("{b:?}")),
    }
}

// ---- documents ----

impl GroupSpec {
    /// Parses an element literal; strings may also be products of the
    /// spec's labels.
    pub fn parse_literal(&self, v: &Value) -> Result<GroupValue> {
        if let Value::String(text) = v {
            if let Some(g) = self.label_product(text)? {
                return Ok(g);
            }
        }
        parse_value(&self.structure, v)
    }

    /// Product of whitespace-separated `label` / `label^-1` tokens, or `None`
    /// if some token is not a label.
    pub fn label_product(&self, text: &str) -> Result<Option<GroupValue>> {
        let s = &self.structure;
        let mut acc = s.identity();
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, inv) = match tok.strip_suffix("^-1") {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let Some(x) = self.labels.get(name) else {
                return Ok(None);
            };
            let x = if inv { s.inv(x)? } else { x.clone() };
            acc = s.mul(&acc, &x)?;
        }
        Ok(Some(acc))
    }

    /// Prints an element, preferring a label that names it.
    pub fn literal(&self, g: &GroupValue) -> Value {
        match self.labels.iter().find(|(_, v)| *v == g) {
            Some((name, _)) => json!(name),
            None => value_literal(&self.structure, g),
        }
    }

    pub fn to_json(&self) -> Value {
        let s = &self.structure;
        let mut obj = match node_value(s) {
            Value::Object(o) => o,
            _ => unreachable!(),
        };
        if let GroupStructure::Finite(g) = s {
            let labels: BTreeMap<String, usize> = self
                .labels
                .iter()
                .filter_map(|(k, v)| match v {
                    GroupValue::Finite(i) => Some((k.clone(), *i)),
                    _ => None,
                })
                .collect();
            obj = match finite_node(g, Some(&labels)) {
                Value::Object(o) => o,
                _ => unreachable!(),
            };
        } else if !self.labels.is_empty() {
            obj.insert(
                "labels".into(),
                Value::Object(
                    self.labels
                        .iter()
                        .map(|(k, v)| (k.clone(), value_literal(s, v)))
                        .collect(),
                ),
            );
        }
        if !self.automorphisms.is_empty() {
            obj.insert(
                "automorphisms".into(),
                Value::Object(
                    self.automorphisms
                        .iter()
                        .map(|(k, a)| (k.clone(), automorphism_value(s, a)))
                        .collect(),
                ),
            );
        }
        if !self.recsets.is_empty() {
            obj.insert(
                "recsets".into(),
                Value::Object(
                    self.recsets
                        .iter()
                        .map(|(k, r)| (k.clone(), Value::Array(r.boxes.iter().map(|b| box_value(s, b)).collect())))
                        .collect(),
                ),
            );
        }
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<GroupSpec> {
        let structure = parse_node(v)?;
        let obj = as_object(v)?;
        let mut spec = GroupSpec::new(structure);
        match &spec.structure {
            GroupStructure::Finite(g) => {
                spec.labels = g
                    .labels()
                    .iter()
                    .map(|(k, &i)| (k.clone(), GroupValue::Finite(i)))
                    .collect();
            }
            s => {
                if let Some(l) = obj.get("labels") {
                    for (name, lit) in as_object(l)? {
                        let value = parse_value(s, lit)?;
                        spec.labels.insert(name.clone(), value);
                    }
                }
            }
        }
        if let Some(a) = obj.get("automorphisms") {
            for (name, lit) in as_object(a)? {
                let aut = parse_automorphism(&spec.structure, lit)?;
                spec.automorphisms.insert(name.clone(), aut);
            }
        }
        if let Some(r) = obj.get("recsets") {
            for (name, lit) in as_object(r)? {
                let boxes = as_array(lit)?
                    .iter()
                    .map(|b| parse_box(&spec.structure, b))
                    .collect::<Result<_>>()?;
                spec.recsets.insert(name.clone(), RecSet::named(name.clone(), boxes));
            }
        }
        spec.validate()?;
        Ok(spec)
    }
}

/// Parses and validates a group file.
pub fn load_group(text: &str) -> Result<GroupSpec> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    GroupSpec::from_json(&v)
}

/// Canonical text of a group file.
pub fn save_group(spec: &GroupSpec) -> String {
    let mut out = String::new();
    write_json(&spec.to_json(), 0, &mut out);
    out.push('\n');
    out
}

const INLINE_WIDTH: usize = 72;

/// Pretty JSON with sorted keys; arrays without objects stay on one line
/// when short.
pub fn write_json(v: &Value, indent: usize, out: &mut String) {
    let pad = |n: usize| "  ".repeat(n);
    match v {
        Value::Array(items) if !items.is_empty() => {
            let compact = serde_json::to_string(v).expect("serializable");
            let has_object = compact.contains('{');
            if !has_object && compact.len() + 2 * indent <= INLINE_WIDTH {
                out.push_str(&compact.replace(',', ", "));
                return;
            }
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                write_json(item, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push(']');
        }
        Value::Object(obj) if !obj.is_empty() => {
            out.push_str("{\n");
            for (i, (k, item)) in obj.iter().enumerate() {
                out.push_str(&pad(indent + 1));
                out.push_str(&serde_json::to_string(k).expect("serializable"));
                out.push_str(": ");
                write_json(item, indent + 1, out);
                out.push_str(if i + 1 < obj.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(indent));
            out.push('}');
        }
        other => out.push_str(&serde_json::to_string(other).expect("serializable")),
    }
}
