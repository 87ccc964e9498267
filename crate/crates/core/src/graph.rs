//! Immutable simple graphs over dense vertex ids `0..n`.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Add;

use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{GraphError, Result};
use crate::guards::MAX_ORDER;

/// A distance that may be infinite (vertices in different components).
///
/// The derived order puts every finite value below `Infinite` and makes
/// `Infinite <= Infinite` hold, which is exactly what the maximally-distant
/// test needs on disconnected graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtDist {
    Finite(u32),
    Infinite,
}

impl ExtDist {
    pub fn finite(self) -> Option<u32> {
        match self {
            ExtDist::Finite(d) => Some(d),
            ExtDist::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == ExtDist::Infinite
    }
}

impl Add for ExtDist {
    type Output = ExtDist;

    fn add(self, rhs: ExtDist) -> ExtDist {
        match (self, rhs) {
            (ExtDist::Finite(a), ExtDist::Finite(b)) => ExtDist::Finite(a + b),
            _ => ExtDist::Infinite,
        }
    }
}

impl fmt::Display for ExtDist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtDist::Finite(d) => write!(f, "{d}"),
            ExtDist::Infinite => f.write_str("infinity"),
        }
    }
}

/// Finite distances serialize as numbers, infinity as the string `"infinity"`.
impl Serialize for ExtDist {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtDist::Finite(d) => s.serialize_u32(*d),
            ExtDist::Infinite => s.serialize_str("infinity"),
        }
    }
}

/// All-pairs distances, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<ExtDist>,
}

impl DistanceMatrix {
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> ExtDist {
        self.d[u * self.n + v]
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn row(&self, u: usize) -> &[ExtDist] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Largest entry; `None` on the empty graph.
    pub fn max(&self) -> Option<ExtDist> {
        self.d.iter().copied().max()
    }
}

/// Simple undirected graph: symmetric, irreflexive adjacency stored as one
/// bitset row per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph `N_n` (also the graph with no vertices when `n = 0`).
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(GraphError::TooLarge {
                order: n,
                limit: MAX_ORDER,
            });
        }
        Ok(Self {
            n,
            rows: vec![VertexSet::new(n); n],
        })
    }

    /// Builds a graph from an edge list. Duplicate and reversed edges are
    /// tolerated; loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph by evaluating `adjacent(u, v)` once for every `u < v`.
    pub fn from_fn<F>(n: usize, mut adjacent: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut g = Self::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.link(u, v);
                }
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::from_fn(n, |_, _| true)
    }

    fn link(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let rows = (0..self.n)
            .map(|v| {
                let mut r = full.difference(&self.rows[v]);
                r.remove(v);
                r
            })
            .collect();
        Graph { n: self.n, rows }
    }

    /// Breadth-first distances from `source`.
    pub fn distances_from(&self, source: usize) -> Vec<ExtDist> {
        let mut dist = vec![ExtDist::Infinite; self.n];
        let mut queue = VecDeque::new();
        dist[source] = ExtDist::Finite(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = match dist[u] {
                ExtDist::Finite(d) => ExtDist::Finite(d + 1),
                ExtDist::Infinite => unreachable!(),
            };
            for w in self.rows[u].iter() {
                if dist[w].is_infinite() {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance_matrix(&self) -> DistanceMatrix {
        let mut d = Vec::with_capacity(self.n * self.n);
        for u in 0..self.n {
            d.extend(self.distances_from(u));
        }
        DistanceMatrix { n: self.n, d }
    }

    /// `max d(u, v)`; infinite iff the graph is disconnected.
    pub fn diameter(&self) -> Result<ExtDist> {
        self.distance_matrix()
            .max()
            .ok_or(GraphError::NoVertices("diameter"))
    }

    /// `N[u] == N[v]`.
    pub fn true_twins(&self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        Ok(self.twins_unchecked(u, v))
    }

    #[inline]
    pub(crate) fn twins_unchecked(&self, u: usize, v: usize) -> bool {
        self.has_edge(u, v) && {
            let mut a = self.rows[u].clone();
            let mut b = self.rows[v].clone();
            a.remove(v);
            b.remove(u);
            a == b
        }
    }

    /// True when no two distinct vertices are true twins.
    pub fn is_twin_free(&self) -> bool {
        self.edges().all(|(u, v)| !self.twins_unchecked(u, v))
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.rows[u].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The graph with no vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    /// No edges. An "empty graph" in the non-trivial sense also needs order >= 2,
    /// see [`Graph::is_empty_nontrivial`].
    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(VertexSet::is_empty)
    }

    /// Edgeless with at least two vertices.
    pub fn is_empty_nontrivial(&self) -> bool {
        self.n >= 2 && self.is_edgeless()
    }

    pub fn is_nontrivial(&self) -> bool {
        self.n >= 2
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.rows[v].is_empty()).collect()
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.rows.iter().any(VertexSet::is_empty)
    }

    /// Vertices of degree `n - 1`.
    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&v| self.degree(v) + 1 == self.n)
            .collect()
    }

    /// Subgraph induced by `keep`, vertices renumbered in the given order.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let k = keep.len();
        let mut g = Graph {
            n: k,
            rows: vec![VertexSet::new(k); k],
        };
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(keep[i], keep[j]) {
                    g.link(i, j);
                }
            }
        }
        g
    }

    /// Drops vertices of degree zero.
    pub fn remove_isolated(&self) -> DerivedGraph {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !self.rows[v].is_empty()).collect();
        DerivedGraph {
            graph: self.induced_subgraph(&keep),
            vertex_map: keep,
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let shifted = other.edges().map(|(u, v)| (u + self.n, v + self.n));
        Graph::from_edges(n, self.edges().chain(shifted))
    }

    /// Applies `perm` (old id -> new id).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(a, b)| a.is_subset(b))
    }
}

/// A graph derived from a parent, with the parent id of every new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedGraph {
    pub graph: Graph,
    /// `vertex_map[new] = old`, strictly increasing.
    pub vertex_map: Vec<usize>,
}

impl DerivedGraph {
    pub fn identity(graph: Graph) -> Self {
        let vertex_map = (0..graph.order()).collect();
        Self { graph, vertex_map }
    }

    /// Maps a set of new ids back to parent ids.
    pub fn lift(&self, vertices: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = vertices.iter().map(|&v| self.vertex_map[v]).collect();
        out.sort_unstable();
        out
    }
}
