//! Canonical labeling for small graphs, and enumeration of graphs up to
//! isomorphism.
//!
//! Vertices are first split by an equitable degree refinement; the canonical
//! order is then the lexicographically smallest adjacency code over all
//! orderings that respect the refined cells. The search prunes on code
//! prefixes and never branches on two interchangeable (twin) vertices.

use std::collections::HashSet;

use crate::error::{GraphError, Result};
use crate::graph::Graph;

/// Ordered partition refined until every vertex in a cell sees the same
/// number of neighbors in each cell.
fn equitable_partition(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut cell_of = vec![0usize; n];
    let mut cells = if n == 0 { Vec::new() } else { vec![(0..n).collect::<Vec<_>>()] };
    loop {
        let k = cells.len();
        let mut sigs: Vec<(Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut sig = Vec::with_capacity(k + 1);
                sig.push(cell_of[v]);
                let mut counts = vec![0usize; k];
                for w in g.neighbors(v).iter() {
                    counts[cell_of[w]] += 1;
                }
                sig.extend(counts);
                (sig, v)
            })
            .collect();
        sigs.sort();
        let mut next: Vec<Vec<usize>> = Vec::new();
        for (i, (sig, v)) in sigs.iter().enumerate() {
            if i == 0 || *sig != sigs[i - 1].0 {
                next.push(Vec::new());
            }
            next.last_mut().expect("pushed above").push(*v);
        }
        for (c, cell) in next.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let stable = next.len() == cells.len();
        cells = next;
        if stable {
            return cells;
        }
    }
}

/// `u` and `v` can be swapped by an automorphism fixing everything else.
fn interchangeable(g: &Graph, u: usize, v: usize) -> bool {
    let mut a = g.neighbors(u).clone();
    let mut b = g.neighbors(v).clone();
    a.remove(v);
    b.remove(u);
    a == b
}

struct Search<'a> {
    g: &'a Graph,
    slot_cell: Vec<usize>,
    cells: Vec<Vec<usize>>,
    order: Vec<usize>,
    used: Vec<bool>,
    code: Vec<u8>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    leaves: usize,
    leaf_limit: usize,
}

impl Search<'_> {
    fn run(&mut self, pos: usize) -> bool {
        if pos == self.g.order() {
            self.leaves += 1;
            if self.best.as_ref().is_none_or(|(b, _)| self.code < *b) {
                self.best = Some((self.code.clone(), self.order.clone()));
            }
            return self.leaves <= self.leaf_limit;
        }
        let cell = self.cells[self.slot_cell[pos]].clone();
        let mut tried: Vec<usize> = Vec::new();
        for v in cell {
            if self.used[v] || tried.iter().any(|&t| interchangeable(self.g, t, v)) {
                continue;
            }
            tried.push(v);
            let mark = self.code.len();
            for j in 0..pos {
                self.code.push(self.g.has_edge(self.order[j], v) as u8);
            }
            let worse = self
                .best
                .as_ref()
                .is_some_and(|(b, _)| self.code[..] > b[..self.code.len()]);
            if !worse {
                self.used[v] = true;
                self.order.push(v);
                let keep_going = self.run(pos + 1);
                self.order.pop();
                self.used[v] = false;
                if !keep_going {
                    self.code.truncate(mark);
                    return false;
                }
            }
            self.code.truncate(mark);
        }
        true
    }
}

/// Canonical adjacency code and the ordering realising it
/// (`order[new_id] = old_id`). `None` if the search exceeds `leaf_limit`.
fn canonical_with_limit(g: &Graph, leaf_limit: usize) -> Option<(Vec<u8>, Vec<usize>)> {
    let cells = equitable_partition(g);
    let slot_cell = cells
        .iter()
        .enumerate()
        .flat_map(|(c, cell)| std::iter::repeat_n(c, cell.len()))
        .collect();
    let mut s = Search {
        g,
        slot_cell,
        cells,
        order: Vec::with_capacity(g.order()),
        used: vec![false; g.order()],
        code: Vec::with_capacity(g.order() * g.order() / 2),
        best: None,
        leaves: 0,
        leaf_limit,
    };
    if s.run(0) {
        s.best
    } else {
        None
    }
}

/// The canonical relabeling of `g`: isomorphic graphs map to equal graphs.
pub fn canonical_form(g: &Graph) -> Graph {
    let (_, order) = canonical_with_limit(g, usize::MAX).expect("unbounded search finishes");
    let mut perm = vec![0; g.order()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    g.relabel(&perm).expect("permutation of a valid graph")
}

/// Exact isomorphism test; `None` when the search budget runs out.
pub fn are_isomorphic(g: &Graph, h: &Graph, leaf_limit: usize) -> Option<bool> {
    if g.order() != h.order() || g.size() != h.size() {
        return Some(false);
    }
    let mut dg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = h.vertices().map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Some(false);
    }
    let (cg, _) = canonical_with_limit(g, leaf_limit)?;
    let (ch, _) = canonical_with_limit(h, leaf_limit)?;
    Some(cg == ch)
}

/// One representative (in canonical form) of every isomorphism class of
/// graphs of order `n`, built by vertex extension from order `n - 1`.
pub fn unlabeled_graphs(n: usize) -> Result<Vec<Graph>> {
    const LIMIT: usize = 9;
    if n > LIMIT {
        return Err(GraphError::Guard {
            what: "order for unlabeled enumeration",
            value: n,
            limit: LIMIT,
        });
    }
    let mut level = vec![Graph::empty(0)?];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..1 << (k - 1) {
                let edges = g
                    .edges()
                    .chain((0..k - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, k - 1)));
                let cand = canonical_form(&Graph::from_edges(k, edges)?);
                if seen.insert(cand.clone()) {
                    next.push(cand);
                }
            }
        }
        next.sort_by_key(|g| (g.size(), g.edges().collect::<Vec<_>>()));
        level = next;
    }
    Ok(level)
}

pub fn unlabeled_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(unlabeled_graphs(n)?
        .into_iter()
        .filter(Graph::is_connected)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_graphs_share_a_canonical_form() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let other = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&p4), canonical_form(&other));
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4), canonical_form(&star));
        assert_eq!(are_isomorphic(&p4, &p4.complement(), 1000), Some(true));
        assert_eq!(are_isomorphic(&p4, &star, 1000), Some(false));
    }

    #[test]
    fn class_counts_match_known_values() {
        // Graphs on n unlabeled vertices: 1, 1, 2, 4, 11, 34, 156.
        let all = [1, 1, 2, 4, 11, 34, 156];
        let connected = [1, 1, 1, 2, 6, 21, 112];
        for n in 0..=6 {
            let gs = unlabeled_graphs(n).unwrap();
            assert_eq!(gs.len(), all[n], "n = {n}");
            assert_eq!(gs.iter().filter(|g| g.is_connected()).count(), connected[n], "n = {n}");
        }
    }
}
