//! Exact combinatorial invariants.
//!
//! All solvers are single-threaded and deterministic; witnesses come back in
//! ascending vertex order.

pub mod clique;
pub mod coloring;
pub mod cover;
pub mod dims;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{GraphError, Result};
use crate::graph::{ExtDist, Graph};

pub use clique::{is_clique, max_clique, max_clique_within};
pub use coloring::{chromatic_number, clique_cover_number, k_coloring};
pub use cover::{
    independence_number, is_independent_set, is_vertex_cover, maximum_independent_set,
    minimum_vertex_cover, vertex_cover_branching, vertex_cover_number,
};
pub use dims::{
    is_strong_metric_generator, strong_metric_dimension, strong_metric_dimension_bruteforce,
    strong_metric_dimension_bruteforce_with_limit, StrongMetricBasis,
};

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// `G` with every edge between true twins deleted. A vertex set is a
/// twins-free clique of `G` exactly when it is a clique here.
pub fn twin_edge_deleted(g: &Graph) -> Graph {
    Graph::from_edges(
        g.order(),
        g.edges().filter(|&(u, v)| !g.twins_unchecked(u, v)),
    )
    .expect("subgraph of a valid graph")
}

pub fn is_twins_free_clique(g: &Graph, set: &[usize]) -> bool {
    is_clique(g, set)
        && set
            .iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !g.twins_unchecked(u, v)))
}

/// A maximum twins-free clique (a `varpi(G)`-set).
pub fn max_twins_free_clique(g: &Graph) -> Result<Vec<usize>> {
    if g.order() == 0 {
        return Err(GraphError::NoVertices("twins-free clique number"));
    }
    Ok(max_clique(&twin_edge_deleted(g)))
}

pub fn twins_free_clique_number(g: &Graph) -> Result<usize> {
    max_twins_free_clique(g).map(|c| c.len())
}

/// A `varpi(G)`-set containing no vertex of degree `n - 1`, if one exists.
///
/// Such a set exists iff the largest twins-free clique avoiding universal
/// vertices still has `varpi(G)` vertices.
pub fn varpi_set_avoiding_universal(g: &Graph) -> Result<Option<Vec<usize>>> {
    let varpi = twins_free_clique_number(g)?;
    let n = g.order();
    let allowed = VertexSet::from_iter_with_capacity(n, (0..n).filter(|&v| g.degree(v) + 1 < n));
    let best = max_clique_within(&twin_edge_deleted(g), &allowed);
    Ok((best.len() == varpi).then_some(best))
}

/// A C-graph's vertex set splits into `alpha(G)` cliques. Since every clique
/// cover needs at least `alpha(G)` cliques, this is an `alpha`-colouring test
/// on the complement.
pub fn is_c_graph(g: &Graph) -> bool {
    let alpha = independence_number(g);
    k_coloring(&g.complement(), alpha).is_some()
}

/// Invariants of one graph. `dim_s` is `None` for graphs that are
/// disconnected or have fewer than two vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantBundle {
    pub alpha: usize,
    pub beta: usize,
    pub omega: usize,
    pub varpi: usize,
    pub diameter: ExtDist,
    pub dim_s: Option<usize>,
}

impl InvariantBundle {
    pub fn compute(g: &Graph) -> Result<Self> {
        let alpha = independence_number(g);
        let beta = vertex_cover_number(g);
        debug_assert_eq!(alpha + beta, g.order());
        let dim_s = match strong_metric_dimension(g) {
            Ok(b) => Some(b.dimension),
            Err(GraphError::Disconnected | GraphError::TooSmall { .. }) => None,
            Err(e) => return Err(e),
        };
        Ok(Self {
            alpha,
            beta,
            omega: clique_number(g),
            varpi: twins_free_clique_number(g)?,
            diameter: g.diameter()?,
            dim_s,
        })
    }
}
