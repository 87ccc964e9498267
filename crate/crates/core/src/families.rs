//! Graph family generators.
//!
//! Labeling conventions: paths and cycles are numbered in walk order; the hub
//! of a star, fan or wheel is vertex 0; grids are row-major. Random families
//! draw from ChaCha8 seeded with `seed`, so output is identical on every
//! platform.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon;
use crate::error::{GraphError, Result};
use crate::graph::Graph;
use crate::guards;
use crate::products::{cartesian_product, join};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Path,
    Cycle,
    Complete,
    Empty,
    Star,
    Fan,
    Wheel,
    Grid,
    RandomTree,
    RandomGraph,
    AllGraphs,
}

impl FamilyKind {
    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Path => "path",
            FamilyKind::Cycle => "cycle",
            FamilyKind::Complete => "complete",
            FamilyKind::Empty => "empty",
            FamilyKind::Star => "star",
            FamilyKind::Fan => "fan",
            FamilyKind::Wheel => "wheel",
            FamilyKind::Grid => "grid",
            FamilyKind::RandomTree => "random_tree",
            FamilyKind::RandomGraph => "random_graph",
            FamilyKind::AllGraphs => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "path" => FamilyKind::Path,
            "cycle" => FamilyKind::Cycle,
            "complete" => FamilyKind::Complete,
            "empty" => FamilyKind::Empty,
            "star" => FamilyKind::Star,
            "fan" => FamilyKind::Fan,
            "wheel" => FamilyKind::Wheel,
            "grid" => FamilyKind::Grid,
            "random_tree" | "tree" => FamilyKind::RandomTree,
            "random_graph" | "random" => FamilyKind::RandomGraph,
            "all" | "all_graphs" => FamilyKind::AllGraphs,
            _ => return None,
        })
    }

    /// Trees (paths and stars included).
    pub fn is_tree_family(self) -> bool {
        matches!(self, FamilyKind::Path | FamilyKind::Star | FamilyKind::RandomTree)
    }
}

/// One family member, or a whole stream for `AllGraphs`.
///
/// `n` is the family's own parameter: the order for paths, cycles, complete,
/// empty, random graphs and trees; the number of leaves / rim vertices for
/// `K_{1,n}`, `F_{1,n}` and `W_{1,n}` (order `n + 1`).
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Empty { n: usize },
    Star { n: usize },
    Fan { n: usize },
    Wheel { n: usize },
    Grid { rows: usize, cols: usize },
    RandomTree { n: usize, seed: u64 },
    RandomGraph { n: usize, p: f64, seed: u64 },
    AllGraphs { n: usize },
}

impl FamilySpec {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilySpec::Path { .. } => FamilyKind::Path,
            FamilySpec::Cycle { .. } => FamilyKind::Cycle,
            FamilySpec::Complete { .. } => FamilyKind::Complete,
            FamilySpec::Empty { .. } => FamilyKind::Empty,
            FamilySpec::Star { .. } => FamilyKind::Star,
            FamilySpec::Fan { .. } => FamilyKind::Fan,
            FamilySpec::Wheel { .. } => FamilyKind::Wheel,
            FamilySpec::Grid { .. } => FamilyKind::Grid,
            FamilySpec::RandomTree { .. } => FamilyKind::RandomTree,
            FamilySpec::RandomGraph { .. } => FamilyKind::RandomGraph,
            FamilySpec::AllGraphs { .. } => FamilyKind::AllGraphs,
        }
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(GraphError::InvalidParameter(msg.to_string()));
        match *self {
            FamilySpec::Path { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Empty { n }
            | FamilySpec::RandomTree { n, .. }
                if n < 1 =>
            {
                bad("order n must be >= 1")
            }
            FamilySpec::Cycle { n } if n < 3 => bad("cycle needs n >= 3"),
            FamilySpec::Star { n } | FamilySpec::Fan { n } if n < 1 => bad("star and fan need n >= 1"),
            FamilySpec::Wheel { n } if n < 3 => bad("wheel needs n >= 3 rim vertices"),
            FamilySpec::Grid { rows, cols } if rows < 1 || cols < 1 => bad("grid needs rows, cols >= 1"),
            FamilySpec::RandomGraph { n, .. } if n < 1 => bad("order n must be >= 1"),
            FamilySpec::RandomGraph { p, .. } if !(0.0..=1.0).contains(&p) => {
                bad("edge probability p must lie in [0, 1]")
            }
            FamilySpec::AllGraphs { n } if n > guards::labeled_enumeration_limit() => {
                Err(GraphError::Guard {
                    what: "order for labeled enumeration",
                    value: n,
                    limit: guards::labeled_enumeration_limit(),
                })
            }
            _ => Ok(()),
        }
    }

    /// Short human-readable name, e.g. `P4`, `W1,5`, `P2xP3`.
    pub fn label(&self) -> String {
        match *self {
            FamilySpec::Path { n } => format!("P{n}"),
            FamilySpec::Cycle { n } => format!("C{n}"),
            FamilySpec::Complete { n } => format!("K{n}"),
            FamilySpec::Empty { n } => format!("N{n}"),
            FamilySpec::Star { n } => format!("K1,{n}"),
            FamilySpec::Fan { n } => format!("F1,{n}"),
            FamilySpec::Wheel { n } => format!("W1,{n}"),
            FamilySpec::Grid { rows, cols } => format!("P{rows}xP{cols}"),
            FamilySpec::RandomTree { n, seed } => format!("T{n}(seed={seed})"),
            FamilySpec::RandomGraph { n, p, seed } => format!("G({n},{p:.2},seed={seed})"),
            FamilySpec::AllGraphs { n } => format!("all{n}"),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    FamilySpec::Cycle { n }.validate()?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// `K_{1,n}`, hub 0.
pub fn star(n: usize) -> Result<Graph> {
    join(&Graph::empty(1)?, &Graph::empty(n)?)
}

/// `F_{1,n} = K_1 + P_n`, hub 0.
pub fn fan(n: usize) -> Result<Graph> {
    join(&Graph::complete(1)?, &path(n)?)
}

/// `W_{1,n} = K_1 + C_n`, hub 0.
pub fn wheel(n: usize) -> Result<Graph> {
    join(&Graph::complete(1)?, &cycle(n)?)
}

pub fn grid(rows: usize, cols: usize) -> Result<Graph> {
    cartesian_product(&path(rows)?, &path(cols)?)
}

/// Decodes a Prüfer sequence over `0..len + 2` into a labeled tree.
pub fn tree_from_pruefer(seq: &[usize]) -> Result<Graph> {
    let n = seq.len() + 2;
    if let Some(&bad) = seq.iter().find(|&&a| a >= n) {
        return Err(GraphError::VertexOutOfRange { vertex: bad, order: n });
    }
    let mut degree = vec![1usize; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let leaf = leaves.pop_first().expect("a tree always has a leaf");
        edges.push((leaf, a));
        degree[a] -= 1;
        if degree[a] == 1 {
            leaves.insert(a);
        }
    }
    let u = leaves.pop_first().expect("two leaves remain");
    let v = leaves.pop_first().expect("two leaves remain");
    edges.push((u, v));
    Graph::from_edges(n, edges)
}

/// Uniform random labeled tree on `n` vertices via a random Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    FamilySpec::RandomTree { n, seed }.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_tree_with(n, &mut rng)
}

fn random_tree_with(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    match n {
        0 | 1 => Graph::empty(n),
        2 => Graph::complete(2),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            tree_from_pruefer(&seq)
        }
    }
}

/// `G(n, p)`: every pair `u < v`, in lexicographic order, is an edge with
/// probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    FamilySpec::RandomGraph { n, p, seed }.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

/// A random spanning tree overlaid with `G(n, p)` edges, so always connected.
pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    FamilySpec::RandomGraph { n, p, seed }.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = random_tree_with(n, &mut rng)?;
    Graph::from_fn(n, |u, v| {
        let extra = rng.gen_bool(p);
        tree.has_edge(u, v) || extra
    })
}

/// Every labeled graph on `n` vertices; graph number `mask` has pair `k`
/// (pairs `u < v` in lexicographic order) as an edge iff bit `k` of `mask` is set.
pub fn all_labeled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    FamilySpec::AllGraphs { n }.validate()?;
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    Ok((0..count).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e),
        )
        .expect("pairs are in range")
    }))
}

/// One graph per isomorphism class (canonical labeling), order `n <= 9`.
pub fn all_unlabeled_graphs(n: usize) -> Result<Vec<Graph>> {
    canon::unlabeled_graphs(n)
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match *spec {
        FamilySpec::Path { n } => path(n),
        FamilySpec::Cycle { n } => cycle(n),
        FamilySpec::Complete { n } => Graph::complete(n),
        FamilySpec::Empty { n } => Graph::empty(n),
        FamilySpec::Star { n } => star(n),
        FamilySpec::Fan { n } => fan(n),
        FamilySpec::Wheel { n } => wheel(n),
        FamilySpec::Grid { rows, cols } => grid(rows, cols),
        FamilySpec::RandomTree { n, seed } => random_tree(n, seed),
        FamilySpec::RandomGraph { n, p, seed } => random_graph(n, p, seed),
        FamilySpec::AllGraphs { n } => Err(GraphError::InvalidParameter(format!(
            "all{n} is a stream; use generate_all"
        ))),
    }
}

/// Like [`generate`], but expands `AllGraphs` into every labeled graph.
pub fn generate_all(spec: &FamilySpec) -> Result<Vec<Graph>> {
    match *spec {
        FamilySpec::AllGraphs { n } => Ok(all_labeled_graphs(n)?.collect()),
        _ => generate(spec).map(|g| vec![g]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solvers::{clique_number, twins_free_clique_number};

    fn is_acyclic_connected(g: &Graph) -> bool {
        g.is_connected() && g.size() + 1 == g.order()
    }

    #[test]
    fn wheel_and_grid() {
        let w4 = generate(&FamilySpec::Wheel { n: 4 }).unwrap();
        assert_eq!((w4.order(), w4.size()), (5, 8));
        assert_eq!(w4.degree(0), 4);
        let g = generate(&FamilySpec::Grid { rows: 2, cols: 2 }).unwrap();
        assert_eq!(g, Graph::from_edges(4, [(0, 1), (1, 3), (3, 2), (2, 0)]).unwrap());
        assert_eq!(g.complement().size(), 2);
    }

    #[test]
    fn trees() {
        for seed in 0..20 {
            let t = random_tree(9, seed).unwrap();
            assert!(is_acyclic_connected(&t));
            assert_eq!(t.size(), 8);
        }
        assert_eq!(random_tree(1, 7).unwrap(), Graph::empty(1).unwrap());
        assert_eq!(random_tree(2, 7).unwrap(), Graph::complete(2).unwrap());
        assert_eq!(random_tree(12, 3).unwrap(), random_tree(12, 3).unwrap());
        // Prüfer sequence [3, 3, 3] is the star centred at 3.
        let s = tree_from_pruefer(&[3, 3, 3]).unwrap();
        assert_eq!(s.degree(3), 4);
    }

    #[test]
    fn family_predicates() {
        for n in 3..9 {
            let c = cycle(n).unwrap();
            assert!(c.is_connected() && c.vertices().all(|v| c.degree(v) == 2));
            let s = star(n).unwrap();
            assert_eq!(s.degree(0), n);
            assert!((1..=n).all(|v| s.degree(v) == 1));
            assert!(is_acyclic_connected(&path(n).unwrap()));
        }
    }

    #[test]
    fn clique_numbers_of_twin_free_families() {
        for n in 3..8 {
            let t = random_tree(n, n as u64).unwrap();
            assert_eq!(twins_free_clique_number(&t), Ok(2));
            assert_eq!(clique_number(&t), 2);
            assert_eq!(clique_number(&fan(n).unwrap()), 3);
        }
        // C_3 = K_3, whose vertices are pairwise twins.
        assert_eq!(twins_free_clique_number(&cycle(3).unwrap()), Ok(1));
        for n in 4..8 {
            assert_eq!(twins_free_clique_number(&cycle(n).unwrap()), Ok(2));
            assert_eq!(twins_free_clique_number(&fan(n).unwrap()), Ok(3));
        }
        // F_{1,3}: hub and middle path vertex are true twins.
        assert_eq!(twins_free_clique_number(&fan(3).unwrap()), Ok(2));
        for n in 4..8 {
            assert_eq!(twins_free_clique_number(&wheel(n).unwrap()), Ok(3));
            assert_eq!(clique_number(&wheel(n).unwrap()), 3);
        }
        for (r, c) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
            let g = grid(r, c).unwrap();
            assert_eq!(clique_number(&g), 2);
            assert_eq!(twins_free_clique_number(&g), Ok(2));
        }
        // The n = 2 tree is K_2, whose two vertices are true twins.
        assert_eq!(twins_free_clique_number(&path(2).unwrap()), Ok(1));
    }

    #[test]
    fn invalid_parameters() {
        assert!(matches!(
            generate(&FamilySpec::Wheel { n: 2 }),
            Err(GraphError::InvalidParameter(_))
        ));
        assert!(generate(&FamilySpec::Cycle { n: 2 }).is_err());
        assert!(generate(&FamilySpec::RandomGraph { n: 4, p: 1.5, seed: 0 }).is_err());
        assert!(matches!(
            generate_all(&FamilySpec::AllGraphs { n: 7 }),
            Err(GraphError::Guard { .. })
        ));
    }

    #[test]
    fn labeled_enumeration_counts() {
        assert_eq!(all_labeled_graphs(4).unwrap().count(), 64);
        assert_eq!(all_labeled_graphs(1).unwrap().count(), 1);
        let distinct: std::collections::HashSet<_> = all_labeled_graphs(3).unwrap().collect();
        assert_eq!(distinct.len(), 8);
    }

    #[test]
    fn random_connected_graphs_are_connected() {
        for seed in 0..30 {
            let g = random_connected_graph(10, 0.1, seed).unwrap();
            assert!(g.is_connected());
        }
    }
}
