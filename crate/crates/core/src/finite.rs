//! Finite groups given by multiplication tables, closure of permutation
//! generators, and the exhaustive constrained solver.

use std::collections::{BTreeMap, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Perm;

/// Default cap on the number of candidate assignments the brute-force solver
/// will consider.
pub const DEFAULT_ASSIGNMENT_CAP: u128 = 10_000_000;

/// A finite group with elements `0..order`, compared by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    identity: usize,
    generators: Vec<usize>,
    perms: Option<Vec<Perm>>,
    labels: BTreeMap<String, usize>,
}

impl FiniteGroup {
    /// Validates a Cayley table (`table[a][b]` is the index of `a·b`).
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::GroupAxiom("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::GroupAxiom(format!("row {a} has length {}", row.len())));
            }
            for &c in row {
                if c >= n {
                    return Err(Error::GroupAxiom(format!("entry {c} out of range in row {a}")));
                }
                flat.push(c);
            }
        }
        let mul = |a: usize, b: usize| flat[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| Error::GroupAxiom("no identity element".into()))?;
        let mut inverses = vec![usize::MAX; n];
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or_else(|| Error::GroupAxiom(format!("element {a} has no inverse")))?;
            inverses[a] = inv;
        }
        for (a, b, c) in associativity_triples(n) {
            if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                return Err(Error::GroupAxiom(format!(
                    "associativity fails for ({a}, {b}, {c})"
                )));
            }
        }
        let mut group = FiniteGroup {
            order: n,
            table: flat,
            inverses,
            identity,
            generators: Vec::new(),
            perms: None,
            labels: BTreeMap::new(),
        };
        group.generators = group.greedy_generators();
        Ok(group)
    }

    pub fn trivial() -> Self {
        closure(0, &[]).expect("trivial group")
    }

    /// Cyclic group of order `n` as the permutation group generated by an
    /// `n`-cycle.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let images: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let gen = Perm::from_images(images).expect("n-cycle");
        closure(n, &[gen]).expect("cyclic group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, exp: i64) -> usize {
        let base = if exp < 0 { self.inv(a) } else { a };
        let mut acc = self.identity;
        for _ in 0..exp.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn perm(&self, a: usize) -> Option<&Perm> {
        self.perms.as_ref().map(|p| &p[a])
    }

    pub fn perms(&self) -> Option<&[Perm]> {
        self.perms.as_deref()
    }

    pub fn degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|p| p[0].degree())
    }

    pub fn index_of_perm(&self, p: &Perm) -> Option<usize> {
        self.perms.as_ref()?.iter().position(|q| q == p)
    }

    pub fn labels(&self) -> &BTreeMap<String, usize> {
        &self.labels
    }

    pub fn with_labels(mut self, labels: BTreeMap<String, usize>) -> Result<Self> {
        if let Some((name, &i)) = labels.iter().find(|(_, &i)| i >= self.order) {
            return Err(Error::GroupAxiom(format!("label `{name}` names element {i}")));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Smallest label naming the element, if any.
    pub fn label_of(&self, a: usize) -> Option<&str> {
        self.labels
            .iter()
            .find(|(_, &i)| i == a)
            .map(|(name, _)| name.as_str())
    }

    /// Restricts the table to a subgroup given by parent indices. Returns the
    /// subgroup (elements in ascending parent order) and the map from subgroup
    /// index to parent index.
    pub fn subgroup(&self, members: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let mut parent: Vec<usize> = members.to_vec();
        parent.sort_unstable();
        parent.dedup();
        let position: HashMap<usize, usize> =
            parent.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut table = Vec::with_capacity(parent.len());
        for &a in &parent {
            let mut row = Vec::with_capacity(parent.len());
            for &b in &parent {
                let c = self.mul(a, b);
                let idx = position.get(&c).ok_or_else(|| {
                    Error::GroupAxiom(format!("subset not closed: {a}·{b} = {c}"))
                })?;
                row.push(*idx);
            }
            table.push(row);
        }
        let mut sub = FiniteGroup::from_table(table)?;
        if let Some(perms) = &self.perms {
            sub.perms = Some(parent.iter().map(|&p| perms[p].clone()).collect());
        }
        Ok((sub, parent))
    }

    /// Extends generator images to an automorphism, returned as the element map.
    pub fn automorphism_from_images(&self, images: &[usize]) -> Result<Vec<usize>> {
        if images.len() != self.generators.len() {
            return Err(Error::InvalidAutomorphism(format!(
                "expected {} generator images, got {}",
                self.generators.len(),
                images.len()
            )));
        }
        let mut map = vec![usize::MAX; self.order];
        map[self.identity] = self.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (g, &img) in self.generators.iter().zip(images) {
                if img >= self.order {
                    return Err(Error::InvalidAutomorphism(format!("image {img} out of range")));
                }
                let y = self.mul(x, *g);
                if map[y] == usize::MAX {
                    map[y] = self.mul(map[x], img);
                    queue.push_back(y);
                }
            }
        }
        self.check_automorphism(&map)?;
        Ok(map)
    }

    /// Checks that an element map is a bijective homomorphism.
    pub fn check_automorphism(&self, map: &[usize]) -> Result<()> {
        if map.len() != self.order {
            return Err(Error::InvalidAutomorphism(format!(
                "map has {} entries for a group of order {}",
                map.len(),
                self.order
            )));
        }
        let mut seen = vec![false; self.order];
        for &m in map {
            if m >= self.order || seen[m] {
                return Err(Error::InvalidAutomorphism("map is not a bijection".into()));
            }
            seen[m] = true;
        }
        for a in 0..self.order {
            for b in 0..self.order {
                if map[self.mul(a, b)] != self.mul(map[a], map[b]) {
                    return Err(Error::InvalidAutomorphism(format!(
                        "map is not multiplicative at ({a}, {b})"
                    )));
                }
            }
        }
        Ok(())
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[self.identity] = true;
        let mut span_size = 1;
        for a in 0..self.order {
            if span[a] {
                continue;
            }
            gens.push(a);
            // re-close under right multiplication by all generators
            let mut members: Vec<usize> = (0..self.order).filter(|&x| span[x]).collect();
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !span[y] {
                        span[y] = true;
                        members.push(y);
                    }
                }
                i += 1;
            }
            span_size = members.len();
            if span_size == self.order {
                break;
            }
        }
        debug_assert!(span_size == self.order || self.order == 1);
        gens
    }
}

/// Triples checked for associativity: all of them up to order 64, a fixed
/// pseudo-random sample above that.
fn associativity_triples(n: usize) -> Box<dyn Iterator<Item = (usize, usize, usize)>> {
    if n <= 64 {
        Box::new((0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))))
    } else {
        let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % n as u64) as usize
        };
        let samples: Vec<_> = (0..64 * 64 * 64).map(|_| (next(), next(), next())).collect();
        Box::new(samples.into_iter())
    }
}

/// Breadth-first closure of a set of permutations of the given degree. Elements
/// are numbered in discovery order starting from the identity, multiplying on
/// the right by the sorted generators.
pub fn closure(degree: usize, generators: &[Perm]) -> Result<FiniteGroup> {
    let mut gens: Vec<Perm> = generators.to_vec();
    for g in &gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
    }
    gens.sort();
    gens.dedup();
    let mut elements = vec![Perm::identity(degree)];
    let mut index: HashMap<Perm, usize> = HashMap::from([(Perm::identity(degree), 0)]);
    let mut i = 0;
    while i < elements.len() {
        for g in &gens {
            let y = elements[i].compose(g)?;
            if !index.contains_key(&y) {
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        i += 1;
    }
    let n = elements.len();
    let mut table = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = index[&elements[a].compose(&elements[b])?];
        }
    }
    let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
    let generators = gens.iter().map(|g| index[g]).filter(|&g| g != 0).collect();
    Ok(FiniteGroup {
        order: n,
        table,
        inverses,
        identity: 0,
        generators,
        perms: Some(elements),
        labels: BTreeMap::new(),
    })
}

/// A token of a system compiled against a finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiniteToken {
    Const(usize),
    Var {
        slot: usize,
        inverted: bool,
        twist: Option<Vec<usize>>,
    },
}

/// A system over a finite group with variables numbered `0..num_vars`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiniteSystem {
    pub num_vars: usize,
    pub equations: Vec<Vec<FiniteToken>>,
    pub inequations: Vec<Vec<FiniteToken>>,
    /// Allowed elements per variable; `None` means unconstrained.
    pub domains: Vec<Option<Vec<usize>>>,
}

impl FiniteSystem {
    fn domain(&self, group: &FiniteGroup, slot: usize) -> Vec<usize> {
        match self.domains.get(slot).and_then(|d| d.as_ref()) {
            Some(d) => {
                let mut d = d.clone();
                d.sort_unstable();
                d.dedup();
                d
            }
            None => (0..group.order()).collect(),
        }
    }

    pub fn evaluate(&self, group: &FiniteGroup, word: &[FiniteToken], values: &[usize]) -> usize {
        word.iter().fold(group.identity(), |acc, tok| {
            let v = match tok {
                FiniteToken::Const(c) => *c,
                FiniteToken::Var {
                    slot,
                    inverted,
                    twist,
                } => {
                    let mut x = values[*slot];
                    if let Some(map) = twist {
                        x = map[x];
                    }
                    if *inverted {
                        group.inv(x)
                    } else {
                        x
                    }
                }
            };
            group.mul(acc, v)
        })
    }
}

/// Every constraint-respecting assignment in lexicographic order (first
/// variable most significant, elements by index).
pub fn enumerate_assignments(
    group: &FiniteGroup,
    num_vars: usize,
    domains: &[Option<Vec<usize>>],
) -> impl Iterator<Item = Vec<usize>> {
    let sys = FiniteSystem {
        num_vars,
        domains: domains.to_vec(),
        ..Default::default()
    };
    let doms: Vec<Vec<usize>> = (0..num_vars).map(|s| sys.domain(group, s)).collect();
    Odometer::new(doms)
}

struct Odometer {
    domains: Vec<Vec<usize>>,
    pos: Vec<usize>,
    done: bool,
}

impl Odometer {
    fn new(domains: Vec<Vec<usize>>) -> Self {
        let done = domains.iter().any(|d| d.is_empty());
        Odometer {
            pos: vec![0; domains.len()],
            domains,
            done,
        }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self
            .pos
            .iter()
            .zip(&self.domains)
            .map(|(&p, d)| d[p])
            .collect();
        let mut i = self.domains.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.pos[i] += 1;
            if self.pos[i] < self.domains[i].len() {
                break;
            }
            self.pos[i] = 0;
        }
        Some(out)
    }
}

/// Exhaustive search for the lexicographically first satisfying assignment.
///
/// Backtracks in the same order as [`enumerate_assignments`], checking each
/// equation or inequation as soon as its last variable is fixed. Fails with
/// [`Error::AssignmentCap`] when the candidate space exceeds `cap`.
pub fn solve_compiled(
    group: &FiniteGroup,
    system: &FiniteSystem,
    cap: u128,
) -> Result<Option<Vec<usize>>> {
    let domains: Vec<Vec<usize>> = (0..system.num_vars)
        .map(|s| system.domain(group, s))
        .collect();
    let mut needed: u128 = 1;
    for d in &domains {
        needed = needed.saturating_mul(d.len() as u128);
    }
    if needed > cap {
        return Err(Error::AssignmentCap { needed, cap });
    }
    // checks[k] holds the words whose highest variable slot is k
    let mut checks: Vec<Vec<(&[FiniteToken], bool)>> = vec![Vec::new(); system.num_vars + 1];
    let last_slot = |w: &[FiniteToken]| {
        w.iter()
            .filter_map(|t| match t {
                FiniteToken::Var { slot, .. } => Some(slot + 1),
                FiniteToken::Const(_) => None,
            })
            .max()
            .unwrap_or(0)
    };
    for w in &system.equations {
        checks[last_slot(w)].push((w, true));
    }
    for w in &system.inequations {
        checks[last_slot(w)].push((w, false));
    }
    let holds = |values: &[usize], level: usize| {
        checks[level].iter().all(|(w, is_eq)| {
            let v = system.evaluate(group, w, values);
            (v == group.identity()) == *is_eq
        })
    };
    let mut values = vec![0; system.num_vars];
    if !holds(&values, 0) {
        return Ok(None);
    }
    if system.num_vars == 0 {
        return Ok(Some(values));
    }
    let mut pos = vec![0usize; system.num_vars];
    let mut level = 0usize;
    loop {
        if pos[level] >= domains[level].len() {
            pos[level] = 0;
            if level == 0 {
                return Ok(None);
            }
            level -= 1;
            pos[level] += 1;
            continue;
        }
        values[level] = domains[level][pos[level]];
        if holds(&values, level + 1) {
            if level + 1 == system.num_vars {
                return Ok(Some(values));
            }
            level += 1;
        } else {
            pos[level] += 1;
        }
    }
}
