//! Independent sets and vertex covers.
//!
//! [`vertex_cover_number`] goes through Gallai (`beta = n - alpha`) and the
//! clique solver on the complement. [`vertex_cover_branching`] is a separate
//! search that never touches cliques, so the two can check each other.

use crate::bitset::VertexSet;
use crate::graph::Graph;

use super::clique::max_clique;

/// A maximum independent set, ascending.
pub fn maximum_independent_set(g: &Graph) -> Vec<usize> {
    max_clique(&g.complement())
}

pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

/// A minimum vertex cover: the complement of a maximum independent set.
pub fn minimum_vertex_cover(g: &Graph) -> Vec<usize> {
    let independent = VertexSet::from_iter_with_capacity(g.order(), maximum_independent_set(g));
    independent.complement().to_vec()
}

pub fn vertex_cover_number(g: &Graph) -> usize {
    g.order() - independence_number(g)
}

pub fn is_vertex_cover(g: &Graph, set: &[usize]) -> bool {
    let s = VertexSet::from_iter_with_capacity(g.order(), set.iter().copied());
    g.edges().all(|(u, v)| s.contains(u) || s.contains(v))
}

pub fn is_independent_set(g: &Graph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &u)| set[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

struct Branching<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl Branching<'_> {
    fn run(&mut self, active: VertexSet) {
        let mut pick = None;
        let mut max_deg = 0;
        let mut twice_edges = 0;
        for v in active.iter() {
            let d = self.g.neighbors(v).intersection_len(&active);
            twice_edges += d;
            if d > max_deg {
                max_deg = d;
                pick = Some(v);
            }
        }
        let Some(v) = pick else {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        };
        // Each cover vertex covers at most max_deg of the remaining edges.
        let edges = twice_edges / 2;
        if self.chosen.len() + edges.div_ceil(max_deg) >= self.best.len() {
            return;
        }

        let neighbors = self.g.neighbors(v).intersection(&active);

        // v stays out: all of its neighbors go in.
        let before = self.chosen.len();
        self.chosen.extend(neighbors.iter());
        if self.chosen.len() < self.best.len() {
            let mut rest = active.difference(&neighbors);
            rest.remove(v);
            self.run(rest);
        }
        self.chosen.truncate(before);

        // v goes in. With max degree 1 the first branch already covered it.
        if max_deg > 1 {
            self.chosen.push(v);
            let mut rest = active;
            rest.remove(v);
            self.run(rest);
            self.chosen.pop();
        }
    }
}

/// Minimum vertex cover by branching on a maximum-degree vertex
/// (take it, or take all its neighbors).
pub fn vertex_cover_branching(g: &Graph) -> Vec<usize> {
    let mut b = Branching {
        g,
        best: (0..g.order()).collect(),
        chosen: Vec::new(),
    };
    b.run(VertexSet::full(g.order()));
    let mut best = b.best;
    best.sort_unstable();
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_vertex_cover(g: &Graph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|&mask| g.edges().all(|(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1))
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn independence_examples() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        assert_eq!(independence_number(&c6), 3);
        assert_eq!(independence_number(&Graph::complete(5).unwrap()), 1);
        assert_eq!(independence_number(&Graph::empty(0).unwrap()), 0);
    }

    #[test]
    fn vertex_cover_examples() {
        assert_eq!(brute_vertex_cover(&path(4)), 2);
        assert_eq!(vertex_cover_number(&path(4)), 2);
        assert_eq!(vertex_cover_number(&Graph::complete(5).unwrap()), 4);
        assert_eq!(vertex_cover_branching(&Graph::complete(5).unwrap()).len(), 4);
        assert!(vertex_cover_branching(&Graph::empty(3).unwrap()).is_empty());
    }

    proptest! {
        #[test]
        fn solvers_agree_with_subsets(n in 1usize..12, bits in proptest::collection::vec(any::<bool>(), 66)) {
            let mut it = bits.into_iter().cycle();
            let g = Graph::from_fn(n, |_, _| it.next().unwrap()).unwrap();
            let brute = brute_vertex_cover(&g);
            let cover = minimum_vertex_cover(&g);
            let branching = vertex_cover_branching(&g);
            prop_assert!(is_vertex_cover(&g, &cover));
            prop_assert!(is_vertex_cover(&g, &branching));
            prop_assert!(is_independent_set(&g, &maximum_independent_set(&g)));
            prop_assert_eq!(cover.len(), brute);
            prop_assert_eq!(branching.len(), brute);
            prop_assert_eq!(independence_number(&g) + vertex_cover_number(&g), n);
        }
    }
}
