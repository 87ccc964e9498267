//! Definitional oracles shared by the integration tests. They use only
//! `has_edge`, so they share no code path with the library solvers.
#![allow(dead_code)]

use std::collections::VecDeque;

use strongdim::Graph;

pub const INF: u32 = u32::MAX;

pub fn distances(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    (0..n)
        .map(|s| {
            let mut d = vec![INF; n];
            d[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in 0..n {
                    if d[v] == INF && g.has_edge(u, v) {
                        d[v] = d[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            d
        })
        .collect()
}

fn add(a: u32, b: u32) -> u32 {
    a.checked_add(b).filter(|&s| s != INF).unwrap_or(INF)
}

/// Smallest strong metric generator size of a connected graph, by trying
/// vertex masks in order of popcount.
pub fn dims(g: &Graph) -> usize {
    let n = g.order();
    assert!((2..64).contains(&n));
    let d = distances(g);
    let mut pair_masks = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let mut m = 0u64;
            for w in 0..n {
                if d[w][u] == add(d[w][v], d[v][u]) || d[w][v] == add(d[w][u], d[u][v]) {
                    m |= 1 << w;
                }
            }
            pair_masks.push(m);
        }
    }
    pair_masks.sort_by_key(|m| m.count_ones());
    for k in 1..=n {
        // Gosper's hack: every n-bit mask with k bits set.
        let mut s: u64 = (1 << k) - 1;
        while s < 1 << n {
            if pair_masks.iter().all(|&m| m & s != 0) {
                return k;
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    unreachable!("all vertices resolve every pair")
}

/// Largest clique, by extending every clique with larger-numbered vertices.
pub fn clique_number(g: &Graph) -> usize {
    fn grow(g: &Graph, clique: &mut Vec<usize>, from: usize) -> usize {
        let mut best = clique.len();
        for v in from..g.order() {
            if clique.iter().all(|&u| g.has_edge(u, v)) {
                clique.push(v);
                best = best.max(grow(g, clique, v + 1));
                clique.pop();
            }
        }
        best
    }
    grow(g, &mut Vec::new(), 0)
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

/// `K_1 + rim`, hub 0.
pub fn hub_over(rim: &Graph) -> Graph {
    let n = rim.order() + 1;
    Graph::from_fn(n, |u, v| u == 0 || rim.has_edge(u - 1, v - 1)).unwrap()
}

/// Cartesian sum on the row-major labeling, straight from the definition.
pub fn sum(g: &Graph, h: &Graph) -> Graph {
    let m = h.order();
    Graph::from_fn(g.order() * m, |x, y| {
        g.has_edge(x / m, y / m) || h.has_edge(x % m, y % m)
    })
    .unwrap()
}
