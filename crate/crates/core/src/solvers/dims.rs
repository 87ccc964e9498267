//! Strong metric dimension.
//!
//! The fast route is `dim_s(G) = beta(G_SR)`; [`strong_metric_dimension_bruteforce`]
//! searches subsets straight from the definition and is kept as its oracle.

use itertools::Itertools;

use crate::error::{GraphError, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::guards;
use crate::resolving::strong_resolving_graph_with;

use super::cover::minimum_vertex_cover;

/// `w` strongly resolves `u, v` when one of them lies on a shortest path
/// from `w` to the other.
#[inline]
fn strongly_resolves(d: &DistanceMatrix, w: usize, u: usize, v: usize) -> bool {
    d.get(w, u) == d.get(w, v) + d.get(v, u) || d.get(w, v) == d.get(w, u) + d.get(u, v)
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(GraphError::Disconnected)
    }
}

pub fn is_strong_metric_generator(g: &Graph, set: &[usize]) -> Result<bool> {
    require_connected(g)?;
    if let Some(&v) = set.iter().find(|&&v| v >= g.order()) {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    let d = g.distance_matrix();
    Ok(is_generator_with(&d, set))
}

fn is_generator_with(d: &DistanceMatrix, set: &[usize]) -> bool {
    let n = d.order();
    (0..n).all(|u| (u + 1..n).all(|v| set.iter().any(|&w| strongly_resolves(d, w, u, v))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongMetricBasis {
    pub dimension: usize,
    /// Original vertex ids, ascending.
    pub witness: Vec<usize>,
}

/// `dim_s(G)` as the vertex cover number of the strong resolving graph.
pub fn strong_metric_dimension(g: &Graph) -> Result<StrongMetricBasis> {
    if g.order() < 2 {
        return Err(GraphError::TooSmall {
            order: g.order(),
            min: 2,
        });
    }
    require_connected(g)?;
    let d = g.distance_matrix();
    Ok(basis_with(g, &d))
}

pub(crate) fn basis_with(g: &Graph, d: &DistanceMatrix) -> StrongMetricBasis {
    let sr = strong_resolving_graph_with(g, d);
    let cover = minimum_vertex_cover(&sr.graph);
    StrongMetricBasis {
        dimension: cover.len(),
        witness: sr.lift(&cover),
    }
}

/// Smallest strong metric generator by enumerating subsets in order of size.
/// Guarded at [`guards::brute_force_dims_limit`] vertices.
pub fn strong_metric_dimension_bruteforce(g: &Graph) -> Result<StrongMetricBasis> {
    strong_metric_dimension_bruteforce_with_limit(g, guards::brute_force_dims_limit())
}

pub fn strong_metric_dimension_bruteforce_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<StrongMetricBasis> {
    let n = g.order();
    let limit = limit.min(guards::BRUTE_FORCE_CEILING);
    if n > limit {
        return Err(GraphError::Guard {
            what: "order for brute-force dim_s",
            value: n,
            limit,
        });
    }
    if n < 2 {
        return Err(GraphError::TooSmall { order: n, min: 2 });
    }
    require_connected(g)?;
    let d = g.distance_matrix();

    // For each pair, the mask of vertices that strongly resolve it.
    let mut pair_masks: Vec<u64> = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in u + 1..n {
            let mask = (0..n)
                .filter(|&w| strongly_resolves(&d, w, u, v))
                .fold(0u64, |m, w| m | 1 << w);
            pair_masks.push(mask);
        }
    }
    // Pairs with the fewest resolvers fail fastest.
    pair_masks.sort_by_key(|m| m.count_ones());

    for k in 1..=n {
        for combo in (0..n).combinations(k) {
            let s = combo.iter().fold(0u64, |m, &w| m | 1 << w);
            if pair_masks.iter().all(|&m| m & s != 0) {
                debug_assert!(is_generator_with(&d, &combo));
                return Ok(StrongMetricBasis {
                    dimension: k,
                    witness: combo,
                });
            }
        }
    }
    unreachable!("the full vertex set is always a strong metric generator")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn generator_examples() {
        assert_eq!(is_strong_metric_generator(&path(4), &[0]), Ok(true));
        assert_eq!(is_strong_metric_generator(&cycle(4), &[0]), Ok(false));
        let c5 = cycle(5);
        assert_eq!(is_strong_metric_generator(&c5, &[0, 1, 2, 3, 4]), Ok(true));
        assert_eq!(
            is_strong_metric_generator(&Graph::empty(2).unwrap(), &[0]),
            Err(GraphError::Disconnected)
        );
    }

    #[test]
    fn dimension_examples() {
        for n in 2..8 {
            let b = strong_metric_dimension(&path(n)).unwrap();
            assert_eq!(b.dimension, 1);
            assert!(b.witness == vec![0] || b.witness == vec![n - 1]);
            assert_eq!(strong_metric_dimension_bruteforce(&path(n)).unwrap().dimension, 1);
        }
        for n in 2..=6 {
            let k = Graph::complete(n).unwrap();
            assert_eq!(strong_metric_dimension(&k).unwrap().dimension, n - 1);
            assert_eq!(strong_metric_dimension_bruteforce(&k).unwrap().dimension, n - 1);
        }
        assert_eq!(strong_metric_dimension_bruteforce(&cycle(4)).unwrap().dimension, 2);
    }

    #[test]
    fn witness_is_a_generator() {
        for g in [cycle(7), path(5), cycle(6)] {
            let b = strong_metric_dimension(&g).unwrap();
            assert_eq!(is_strong_metric_generator(&g, &b.witness), Ok(true));
        }
    }

    #[test]
    fn errors() {
        assert_eq!(
            strong_metric_dimension(&Graph::empty(3).unwrap()),
            Err(GraphError::Disconnected)
        );
        assert!(matches!(
            strong_metric_dimension(&Graph::empty(1).unwrap()),
            Err(GraphError::TooSmall { .. })
        ));
        assert!(matches!(
            strong_metric_dimension_bruteforce_with_limit(&path(15), 14),
            Err(GraphError::Guard { .. })
        ));
    }
}
