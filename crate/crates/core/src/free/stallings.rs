//! Stallings foldings for finitely generated subgroups of free groups.

use std::collections::BTreeMap;

use super::word::FreeWord;

/// Folded core graph of the subgroup generated by a finite set of words.
#[derive(Clone, Debug)]
pub struct FoldedGraph {
    adj: Vec<BTreeMap<i32, usize>>,
    parent: Vec<usize>,
}

impl FoldedGraph {
    pub fn new(generators: &[FreeWord]) -> Self {
        let mut g = FoldedGraph {
            adj: vec![BTreeMap::new()],
            parent: vec![0],
        };
        let mut pending = Vec::new();
        for w in generators {
            let letters = w.letters();
            let mut current = 0;
            for (k, &l) in letters.iter().enumerate() {
                let next = if k + 1 == letters.len() { 0 } else { g.fresh() };
                pending.push((current, l, next));
                current = next;
            }
        }
        g.fold(pending);
        g
    }

    fn fresh(&mut self) -> usize {
        self.adj.push(BTreeMap::new());
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn fold(&mut self, mut pending: Vec<(usize, i32, usize)>) {
        while let Some((u, l, v)) = pending.pop() {
            let (u, v) = (self.find(u), self.find(v));
            let fwd = self.adj[u].get(&l).copied().map(|w| self.find(w));
            let bwd = self.adj[v].get(&-l).copied().map(|x| self.find(x));
            match (fwd, bwd) {
                (Some(w), _) if w != v => {
                    self.merge(v, w, &mut pending);
                    pending.push((u, l, v));
                }
                (_, Some(x)) if x != u => {
                    self.merge(u, x, &mut pending);
                    pending.push((u, l, v));
                }
                _ => {
                    self.adj[u].insert(l, v);
                    self.adj[v].insert(-l, u);
                }
            }
        }
    }

    fn merge(&mut self, a: usize, b: usize, pending: &mut Vec<(usize, i32, usize)>) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        self.parent[rb] = ra;
        let moved = std::mem::take(&mut self.adj[rb]);
        for (l, t) in moved {
            pending.push((ra, l, t));
        }
    }

    /// Whether the word reads a closed path at the base vertex.
    pub fn contains(&mut self, w: &FreeWord) -> bool {
        let mut v = self.find(0);
        for &l in w.letters() {
            match self.adj[v].get(&l).copied() {
                Some(t) => v = self.find(t),
                None => return false,
            }
        }
        v == self.find(0)
    }
}

/// Whether generator images define an automorphism of the free group of the
/// given rank. Free groups are Hopfian, so surjectivity suffices: every
/// generator must lie in the subgroup generated by the images.
pub fn is_automorphism(rank: usize, images: &[FreeWord]) -> bool {
    if images.len() != rank || images.iter().any(|w| w.max_generator() > rank) {
        return false;
    }
    let mut graph = FoldedGraph::new(images);
    (1..=rank).all(|i| graph.contains(&FreeWord::generator(i)))
}
