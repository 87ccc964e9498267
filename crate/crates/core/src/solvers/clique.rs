//! Maximum clique by branch and bound with a greedy-coloring bound.
//!
//! Vertices are renumbered by non-increasing degree (ties: smaller id first)
//! so that "first set bit" follows that order; colour classes are built
//! greedily in the same order and candidates are expanded from the highest
//! colour down. The search is deterministic.

use crate::bitset::VertexSet;
use crate::graph::Graph;

struct Search {
    adj: Vec<VertexSet>,
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search {
    fn expand(&mut self, mut candidates: VertexSet) {
        let (order, colors) = self.color(&candidates);
        for i in (0..order.len()).rev() {
            if self.current.len() + colors[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            self.current.push(v);
            let next = candidates.intersection(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.remove(v);
        }
    }

    /// Greedy sequential colouring; returns vertices sorted by colour and the
    /// colour (1-based) of each.
    fn color(&self, candidates: &VertexSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncolored = candidates.clone();
        let mut order = Vec::with_capacity(candidates.len());
        let mut colors = Vec::with_capacity(candidates.len());
        let mut k = 0;
        while !uncolored.is_empty() {
            k += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                uncolored.remove(v);
                q.remove(v);
                q.difference_with(&self.adj[v]);
                order.push(v);
                colors.push(k);
            }
        }
        (order, colors)
    }
}

/// A maximum clique of `g` restricted to `allowed`, ascending.
pub fn max_clique_within(g: &Graph, allowed: &VertexSet) -> Vec<usize> {
    let mut by_degree: Vec<usize> = allowed.iter().collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.neighbors(v).intersection_len(allowed)), v));
    let k = by_degree.len();
    let mut position = vec![usize::MAX; g.order()];
    for (i, &v) in by_degree.iter().enumerate() {
        position[v] = i;
    }
    let adj = by_degree
        .iter()
        .map(|&v| {
            VertexSet::from_iter_with_capacity(
                k,
                g.neighbors(v)
                    .iter()
                    .filter(|&w| position[w] != usize::MAX)
                    .map(|w| position[w]),
            )
        })
        .collect();

    let mut search = Search {
        adj,
        best: Vec::new(),
        current: Vec::new(),
    };
    if k > 0 {
        search.expand(VertexSet::full(k));
    }
    let mut clique: Vec<usize> = search.best.iter().map(|&i| by_degree[i]).collect();
    clique.sort_unstable();
    clique
}

/// A maximum clique of `g`, ascending. Empty only when `g` has no vertices.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    max_clique_within(g, &VertexSet::full(g.order()))
}

pub fn is_clique(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}
