//! Graph products on a shared row-major labeling.
//!
//! Product vertex `(u, v)` has flat id `u * n2 + v` where `n2` is the order of
//! the second factor. Using one labeling everywhere makes identities such as
//! `(G + H)^c = G^c x H^c` hold as equalities of labeled graphs.

use crate::error::{GraphError, Result};
use crate::graph::Graph;
use crate::guards::MAX_ORDER;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductLabel {
    pub u: usize,
    pub v: usize,
    pub flat: usize,
}

impl ProductLabel {
    pub fn new(u: usize, v: usize, n2: usize) -> Self {
        Self { u, v, flat: u * n2 + v }
    }

    pub fn from_flat(flat: usize, n2: usize) -> Self {
        Self {
            u: flat / n2,
            v: flat % n2,
            flat,
        }
    }
}

/// Which product to build; used by the CLI and the claim checker.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductKind {
    CartesianSum,
    Strong,
    Lexicographic,
    Cartesian,
    Join,
}

impl ProductKind {
    pub fn apply(self, g: &Graph, h: &Graph) -> Result<Graph> {
        match self {
            ProductKind::CartesianSum => cartesian_sum(g, h),
            ProductKind::Strong => strong_product(g, h),
            ProductKind::Lexicographic => lexicographic_product(g, h),
            ProductKind::Cartesian => cartesian_product(g, h),
            ProductKind::Join => join(g, h),
        }
    }
}

fn product<F>(g: &Graph, h: &Graph, adjacent: F) -> Result<Graph>
where
    F: Fn(usize, usize, usize, usize) -> bool,
{
    let (n1, n2) = (g.order(), h.order());
    if n1 == 0 || n2 == 0 {
        return Err(GraphError::EmptyFactor);
    }
    let n = n1.checked_mul(n2).filter(|&n| n <= MAX_ORDER).ok_or(GraphError::TooLarge {
        order: n1.saturating_mul(n2),
        limit: MAX_ORDER,
    })?;
    Graph::from_fn(n, |x, y| {
        let (a, b) = (x / n2, x % n2);
        let (c, d) = (y / n2, y % n2);
        adjacent(a, b, c, d)
    })
}

/// Cartesian sum (disjunctive product): `ac` in `E(G)` or `bd` in `E(H)`.
pub fn cartesian_sum(g: &Graph, h: &Graph) -> Result<Graph> {
    product(g, h, |a, b, c, d| g.has_edge(a, c) || h.has_edge(b, d))
}

pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(g, h, |a, b, c, d| {
        let ga = g.has_edge(a, c);
        let hb = h.has_edge(b, d);
        (a == c && hb) || (b == d && ga) || (ga && hb)
    })
}

/// `G o H`: `ac` in `E(G)`, or `a = c` and `bd` in `E(H)`. Not commutative.
pub fn lexicographic_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(g, h, |a, b, c, d| g.has_edge(a, c) || (a == c && h.has_edge(b, d)))
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    product(g, h, |a, b, c, d| {
        (a == c && h.has_edge(b, d)) || (b == d && g.has_edge(a, c))
    })
}

/// Disjoint union plus every edge between the two sides. Vertices of `h`
/// follow those of `g`.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let n1 = g.order();
    let n = n1 + h.order();
    Graph::from_fn(n, |x, y| match (x < n1, y < n1) {
        (true, true) => g.has_edge(x, y),
        (false, false) => h.has_edge(x - n1, y - n1),
        _ => true,
    })
}

/// The flat-label transposition `(u, v) -> (v, u)` taking `G * H` to `H * G`,
/// as a permutation of `0..n1*n2` (old id -> new id).
pub fn transposition(n1: usize, n2: usize) -> Vec<usize> {
    (0..n1 * n2)
        .map(|flat| {
            let l = ProductLabel::from_flat(flat, n2);
            ProductLabel::new(l.v, l.u, n1).flat
        })
        .collect()
}
