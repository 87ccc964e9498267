//! Mutually maximally distant pairs and the graphs built from them.
//!
//! `G_SR` here has vertex set `boundary(G)` only (isolated vertices of the
//! all-vertex construction dropped). Vertex cover numbers are the same for
//! both variants.
//!
//! On disconnected graphs every cross-component pair comes out mutually
//! maximally distant. That is not special-cased: it falls out of the
//! [`ExtDist`] order, where `Infinite <= Infinite`.

use crate::bitset::VertexSet;
use crate::error::{GraphError, Result};
use crate::graph::{DerivedGraph, DistanceMatrix, ExtDist, Graph};

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    for w in [u, v] {
        if w >= g.order() {
            return Err(GraphError::VertexOutOfRange {
                vertex: w,
                order: g.order(),
            });
        }
    }
    if u == v {
        return Err(GraphError::SameVertex(u));
    }
    Ok(())
}

/// Whether `u` is maximally distant from `v`: no neighbor of `u` is farther
/// from `v` than `u` is.
pub fn is_maximally_distant(g: &Graph, u: usize, v: usize) -> Result<bool> {
    check_pair(g, u, v)?;
    let from_v = g.distances_from(v);
    let duv = from_v[u];
    Ok(g.neighbors(u).iter().all(|w| from_v[w] <= duv))
}

#[inline]
pub(crate) fn maximally_distant_with(g: &Graph, d: &DistanceMatrix, u: usize, v: usize) -> bool {
    let duv = d.get(u, v);
    let row = d.row(v);
    g.neighbors(u).iter().all(|w| row[w] <= duv)
}

#[inline]
pub(crate) fn mutually_maximally_distant_with(
    g: &Graph,
    d: &DistanceMatrix,
    u: usize,
    v: usize,
) -> bool {
    maximally_distant_with(g, d, u, v) && maximally_distant_with(g, d, v, u)
}

/// All unordered mutually maximally distant pairs `(u, v)`, `u < v`, sorted.
pub fn mmd_pairs(g: &Graph) -> Vec<(usize, usize)> {
    mmd_pairs_with(g, &g.distance_matrix())
}

pub fn mmd_pairs_with(g: &Graph, d: &DistanceMatrix) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mutually_maximally_distant_with(g, d, u, v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Vertices taking part in at least one mutually maximally distant pair.
pub fn boundary(g: &Graph) -> Vec<usize> {
    let mut s = VertexSet::new(g.order());
    for (u, v) in mmd_pairs(g) {
        s.insert(u);
        s.insert(v);
    }
    s.to_vec()
}

fn graph_on_pairs(n: usize, pairs: &[(usize, usize)]) -> DerivedGraph {
    let mut present = VertexSet::new(n);
    for &(u, v) in pairs {
        present.insert(u);
        present.insert(v);
    }
    let vertex_map = present.to_vec();
    let mut new_id = vec![usize::MAX; n];
    for (i, &old) in vertex_map.iter().enumerate() {
        new_id[old] = i;
    }
    let graph = Graph::from_edges(
        vertex_map.len(),
        pairs.iter().map(|&(u, v)| (new_id[u], new_id[v])),
    )
    .expect("pairs are distinct in-range vertices");
    DerivedGraph { graph, vertex_map }
}

/// The strong resolving graph `G_SR`: vertices `boundary(G)`, edges the
/// mutually maximally distant pairs.
pub fn strong_resolving_graph(g: &Graph) -> DerivedGraph {
    strong_resolving_graph_with(g, &g.distance_matrix())
}

pub fn strong_resolving_graph_with(g: &Graph, d: &DistanceMatrix) -> DerivedGraph {
    graph_on_pairs(g.order(), &mmd_pairs_with(g, d))
}

/// The strong resolving TF-graph `G_SRS`: mutually maximally distant pairs
/// that are not true twins. Complete graphs give the graph with no vertices.
pub fn tf_strong_resolving_graph(g: &Graph) -> DerivedGraph {
    let pairs: Vec<_> = mmd_pairs(g)
        .into_iter()
        .filter(|&(u, v)| !g.twins_unchecked(u, v))
        .collect();
    graph_on_pairs(g.order(), &pairs)
}

/// `G*`: same vertices, `u ~ v` iff `d(u, v) >= 2` (infinite included) or
/// `u, v` are true twins.
pub fn star_closure(g: &Graph) -> Graph {
    let d = g.distance_matrix();
    Graph::from_fn(g.order(), |u, v| {
        d.get(u, v) >= ExtDist::Finite(2) || g.twins_unchecked(u, v)
    })
    .expect("same order as an existing graph")
}

/// Whether `set` contains a vertex of degree `n - 1`.
pub fn contains_universal_vertex(g: &Graph, set: &[usize]) -> bool {
    let n = g.order();
    set.iter().any(|&v| g.degree(v) + 1 == n)
}
