//! Exact vertex colouring, used for clique-cover numbers.

use crate::graph::Graph;

use super::clique::max_clique;

struct Colorer<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<Option<usize>>,
}

impl Colorer<'_> {
    /// Next vertex by DSATUR: most distinct neighbor colours, then degree,
    /// then smallest id.
    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize, usize)> = None;
        for v in self.g.vertices().filter(|&v| self.color[v].is_none()) {
            let mut seen = vec![false; self.k];
            for w in self.g.neighbors(v).iter() {
                if let Some(c) = self.color[w] {
                    seen[c] = true;
                }
            }
            let sat = seen.iter().filter(|&&b| b).count();
            let key = (sat, self.g.degree(v), v);
            if best.is_none_or(|(s, d, _)| (sat, self.g.degree(v)) > (s, d)) {
                best = Some(key);
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn solve(&mut self, used: usize) -> bool {
        let Some(v) = self.pick() else {
            return true;
        };
        // Colours above `used` are interchangeable, so only one new colour is tried.
        for c in 0..self.k.min(used + 1) {
            if self.g.neighbors(v).iter().any(|w| self.color[w] == Some(c)) {
                continue;
            }
            self.color[v] = Some(c);
            if self.solve(used.max(c + 1)) {
                return true;
            }
            self.color[v] = None;
        }
        false
    }
}

/// A proper colouring with at most `k` colours, if one exists.
pub fn k_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if g.order() == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut c = Colorer {
        g,
        k,
        color: vec![None; g.order()],
    };
    c.solve(0)
        .then(|| c.color.into_iter().map(|c| c.expect("all coloured")).collect())
}

pub fn chromatic_number(g: &Graph) -> usize {
    let mut k = max_clique(g).len();
    while k_coloring(g, k).is_none() {
        k += 1;
    }
    k
}

/// Fewest cliques partitioning the vertex set.
pub fn clique_cover_number(g: &Graph) -> usize {
    chromatic_number(&g.complement())
}
