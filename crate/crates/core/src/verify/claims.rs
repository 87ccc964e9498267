//! The claim registry.

use std::fmt::Display;

use rayon::prelude::*;

use crate::canon::are_isomorphic;
use crate::families::FamilySpec;
use crate::graph::{ExtDist, Graph};
use crate::guards;
use crate::products::{cartesian_sum, lexicographic_product, strong_product};
use crate::resolving::{star_closure, strong_resolving_graph_with, tf_strong_resolving_graph};
use crate::solvers::{
    independence_number, is_strong_metric_generator, strong_metric_dimension,
    strong_metric_dimension_bruteforce, vertex_cover_branching, vertex_cover_number,
};

use super::{Corpus, Facts, Failure, Outcome, Pair};

/// One registered result: a hypothesis gate and an assertion, applied to
/// every suitable instance of a corpus.
pub struct ClaimCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub(crate) run: fn(&Corpus) -> Vec<Outcome>,
}

struct Mismatch {
    expected: String,
    got: String,
}

/// `Ok(Some(note))` passes and attaches a note to the report.
type Check = Result<Option<String>, Mismatch>;

fn eq<T: PartialEq + Display>(what: &str, expected: T, got: T) -> Check {
    if expected == got {
        Ok(None)
    } else {
        Err(Mismatch {
            expected: format!("{what} = {expected}"),
            got: format!("{what} = {got}"),
        })
    }
}

fn at_least<T: PartialOrd + Display>(what: &str, bound: T, got: T) -> Check {
    if got >= bound {
        Ok(None)
    } else {
        Err(Mismatch {
            expected: format!("{what} >= {bound}"),
            got: format!("{what} = {got}"),
        })
    }
}

fn at_most<T: PartialOrd + Display>(what: &str, bound: T, got: T) -> Check {
    if got <= bound {
        Ok(None)
    } else {
        Err(Mismatch {
            expected: format!("{what} <= {bound}"),
            got: format!("{what} = {got}"),
        })
    }
}

fn holds(what: &str, ok: bool) -> Check {
    if ok {
        Ok(None)
    } else {
        Err(Mismatch {
            expected: what.to_string(),
            got: "violated".to_string(),
        })
    }
}

/// Evaluates `assertion` only when `hypothesis` holds.
fn gate(hypothesis: bool, instance: impl FnOnce() -> String, assertion: impl FnOnce() -> Check) -> Outcome {
    if !hypothesis {
        return Outcome::Skipped;
    }
    match assertion() {
        Ok(note) => Outcome::Passed(note),
        Err(m) => Outcome::Failed(Failure {
            instance: instance(),
            expected: m.expected,
            got: m.got,
        }),
    }
}

fn over_pairs<F>(corpus: &Corpus, f: F) -> Vec<Outcome>
where
    F: Fn(&Facts, &Facts, &Facts) -> Outcome + Sync + Send,
{
    corpus
        .pairs
        .par_iter()
        .map(|p: &Pair| {
            let (g, h, sum) = corpus.factors(p);
            f(g, h, sum)
        })
        .collect()
}

fn over_everything<F>(corpus: &Corpus, f: F) -> Vec<Outcome>
where
    F: Fn(&Facts) -> Outcome + Sync + Send,
{
    corpus.all_graphs().into_par_iter().map(f).collect()
}

fn pair_name(g: &Facts, h: &Facts) -> String {
    format!("{} ⊕ {}", g.label, h.label)
}

fn dim_of(sum: &Facts) -> usize {
    sum.dim_s().expect("hypothesis ensures a connected sum")
}

/// Both factors non-trivial and at least one of them non-complete.
fn proper(g: &Facts, h: &Facts) -> bool {
    g.is_nontrivial() && h.is_nontrivial() && !(g.graph.is_complete() && h.graph.is_complete())
}

/// `D(G) <= 2`, or neither factor has an isolated vertex.
fn short_or_no_isolated(g: &Facts, h: &Facts) -> bool {
    g.diameter() <= ExtDist::Finite(2) || (!g.graph.has_isolated_vertex() && !h.graph.has_isolated_vertex())
}

fn empty_graph(n: usize) -> Graph {
    Graph::empty(n).expect("small order")
}

fn gallai(c: &Corpus) -> Vec<Outcome> {
    over_everything(c, |f| {
        gate(true, || f.label.clone(), || {
            eq("alpha + beta", f.order(), f.alpha() + f.beta())?;
            eq("beta by branching", f.beta(), vertex_cover_branching(&f.graph).len())
        })
    })
}

fn oellermann(c: &Corpus) -> Vec<Outcome> {
    let limit = guards::brute_force_dims_limit();
    over_everything(c, |f| {
        let hyp = f.is_nontrivial() && f.order() <= limit && f.graph.is_connected();
        gate(hyp, || f.label.clone(), || {
            let basis = f.basis().expect("connected");
            let brute = strong_metric_dimension_bruteforce(&f.graph).expect("within guard");
            eq("dim_s", brute.dimension, basis.dimension)?;
            holds(
                "witness is a strong metric generator",
                is_strong_metric_generator(&f.graph, &basis.witness) == Ok(true),
            )
        })
    })
}

fn cart_lex(c: &Corpus) -> Vec<Outcome> {
    c.graphs
        .par_iter()
        .flat_map_iter(|f| {
            (1..=3).map(move |n| {
                gate(true, || format!("{} with N{n}", f.label), || {
                    let empty = empty_graph(n);
                    let sum = cartesian_sum(&f.graph, &empty).expect("small");
                    let lex = lexicographic_product(&f.graph, &empty).expect("small");
                    holds("identical labeled graphs", sum == lex)
                })
            })
        })
        .collect()
}

fn lex_empty(c: &Corpus) -> Vec<Outcome> {
    c.graphs
        .par_iter()
        .flat_map_iter(|f| {
            [2, 3].into_iter().map(move |m| {
                let n = f.order();
                let hyp = n >= 2 && f.graph.is_connected();
                gate(hyp, || format!("{} ∘ N{m}", f.label), || {
                    let lex = lexicographic_product(&f.graph, &empty_graph(m)).expect("small");
                    let got = strong_metric_dimension(&lex).expect("connected").dimension;
                    let base = n * (m - 1);
                    if f.graph.is_complete() {
                        return eq("dim_s", base, got);
                    }
                    let tf = tf_strong_resolving_graph(&f.graph);
                    eq("dim_s", base + vertex_cover_number(&tf.graph), got)?;
                    if f.graph.is_twin_free() {
                        eq("dim_s", base + f.dim_s().expect("connected"), got)?;
                    }
                    Ok(None)
                })
            })
        })
        .collect()
}

fn complete_iff(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        gate(true, || pair_name(g, h), || {
            eq(
                "sum is complete",
                g.graph.is_complete() && h.graph.is_complete(),
                sum.graph.is_complete(),
            )
        })
    })
}

fn diam_i(c: &Corpus) -> Vec<Outcome> {
    c.graphs
        .par_iter()
        .flat_map_iter(|f| {
            [2, 3].into_iter().map(move |n| {
                gate(f.is_nontrivial(), || format!("{} ⊕ N{n}", f.label), || {
                    let sum = cartesian_sum(&f.graph, &empty_graph(n)).expect("small");
                    let d = sum.diameter().expect("has vertices");
                    eq("diameter", f.diameter().max(ExtDist::Finite(2)), d)
                })
            })
        })
        .collect()
}

fn diam_ii(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        let hyp = proper(g, h) && g.graph.has_isolated_vertex() && h.graph.has_isolated_vertex();
        gate(hyp, || pair_name(g, h), || eq("diameter", ExtDist::Infinite, sum.diameter()))
    })
}

fn diam_iii(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        let hyp = proper(g, h) && !g.graph.has_isolated_vertex() && !h.graph.has_isolated_vertex();
        gate(hyp, || pair_name(g, h), || eq("diameter", ExtDist::Finite(2), sum.diameter()))
    })
}

fn diam_iv(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        let hyp = proper(g, h) && h.diameter() <= ExtDist::Finite(2);
        gate(hyp, || pair_name(g, h), || eq("diameter", ExtDist::Finite(2), sum.diameter()))
    })
}

fn diam_v(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        let hyp = proper(g, h)
            && h.diameter() > ExtDist::Finite(2)
            && !h.graph.has_isolated_vertex()
            && !g.graph.is_edgeless()
            && g.graph.has_isolated_vertex();
        gate(hyp, || pair_name(g, h), || eq("diameter", ExtDist::Finite(3), sum.diameter()))
    })
}

fn connectivity(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        let hyp = g.is_nontrivial() && h.is_nontrivial();
        gate(hyp, || pair_name(g, h), || {
            let (gg, hh) = (&g.graph, &h.graph);
            let predicted = (gg.has_isolated_vertex() && hh.has_isolated_vertex())
                || (gg.is_edgeless() && !hh.is_connected())
                || (hh.is_edgeless() && !gg.is_connected());
            eq("sum is disconnected", predicted, !sum.graph.is_connected())
        })
    })
}

fn sr_iso(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        let hyp = proper(g, h) && short_or_no_isolated(g, h);
        gate(hyp, || pair_name(g, h), || {
            let sr = strong_resolving_graph_with(&sum.graph, sum.distances());
            let star = star_closure(&sum.graph).remove_isolated();
            if sr == star {
                return Ok(None);
            }
            match are_isomorphic(&sr.graph, &star.graph, 1 << 20) {
                Some(true) => Ok(Some(format!(
                    "warning: {} not equal under the shared labeling, isomorphic by search",
                    pair_name(g, h)
                ))),
                verdict => Err(Mismatch {
                    expected: "strong resolving graph isomorphic to the star closure minus isolated vertices"
                        .to_string(),
                    got: match verdict {
                        Some(_) => "not isomorphic".to_string(),
                        None => "isomorphism search exhausted its budget".to_string(),
                    },
                }),
            }
        })
    })
}

fn dims_beta_star(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        let hyp = proper(g, h) && short_or_no_isolated(g, h);
        gate(hyp, || pair_name(g, h), || {
            let star = star_closure(&sum.graph).remove_isolated();
            eq("dim_s", vertex_cover_number(&star.graph), dim_of(sum))
        })
    })
}

fn complement_law(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        gate(true, || pair_name(g, h), || {
            let law = strong_product(&g.graph.complement(), &h.graph.complement()).expect("small");
            holds("complement of the sum equals the strong product of complements", sum.graph.complement() == law)
        })
    })
}

fn dims_cover_complement(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        let hyp = g.is_nontrivial()
            && h.is_nontrivial()
            && g.graph.is_twin_free()
            && h.graph.is_twin_free()
            && short_or_no_isolated(g, h);
        gate(hyp, || pair_name(g, h), || {
            let product = strong_product(&g.graph.complement(), &h.graph.complement()).expect("small");
            eq("dim_s", vertex_cover_number(&product), dim_of(sum))
        })
    })
}

fn cgraph_alpha(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, _| {
        gate(g.is_c_graph(), || format!("{} ⊠ {}", g.label, h.label), || {
            let product = strong_product(&g.graph, &h.graph).expect("small");
            eq("alpha", g.alpha() * h.alpha(), independence_number(&product))
        })
    })
}

fn cgraph_dims(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        let hyp = g.is_nontrivial()
            && h.is_nontrivial()
            && g.graph.is_twin_free()
            && h.graph.is_twin_free()
            && short_or_no_isolated(g, h)
            && g.complement_is_c_graph();
        gate(hyp, || pair_name(g, h), || {
            eq("dim_s", sum.order() - g.omega() * h.omega(), dim_of(sum))
        })
    })
}

fn th_d2(c: &Corpus) -> Vec<Outcome> {
    over_everything(c, |f| {
        let hyp = f.is_nontrivial() && f.graph.is_connected();
        gate(hyp, || f.label.clone(), || {
            let bound = f.order() - f.varpi();
            let dim = f.dim_s().expect("connected");
            at_most("dim_s", bound, dim)?;
            if f.diameter() == ExtDist::Finite(2) {
                eq("dim_s", bound, dim)?;
            }
            Ok(None)
        })
    })
}

fn varpi_product(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        gate(true, || pair_name(g, h), || at_least("varpi", g.varpi() * h.varpi(), sum.varpi()))
    })
}

fn omega_product(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        gate(true, || pair_name(g, h), || eq("omega", g.omega() * h.omega(), sum.omega()))
    })
}

fn bounds_cartsum(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        let hyp = sum.order() >= 2 && sum.graph.is_connected();
        gate(hyp, || pair_name(g, h), || {
            let nn = sum.order();
            let dim = dim_of(sum);
            at_most("dim_s", nn - g.varpi() * h.varpi(), dim)?;
            if g.is_nontrivial() && h.is_nontrivial() && short_or_no_isolated(g, h) {
                at_least("dim_s", nn - g.omega() * h.omega(), dim)?;
            }
            Ok(None)
        })
    })
}

fn both_cliques_equal(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        let hyp = g.is_nontrivial()
            && h.is_nontrivial()
            && short_or_no_isolated(g, h)
            && g.omega() == g.varpi()
            && h.omega() == h.varpi();
        gate(hyp, || pair_name(g, h), || {
            eq("dim_s", sum.order() - g.omega() * h.omega(), dim_of(sum))
        })
    })
}

/// Twin-free families with clique number 2 or 3, as used by the closed formulae.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Shape {
    /// Trees of order >= 3, cycles of order >= 4, grids: clique number 2.
    Sparse,
    /// Fans and wheels with at least 4 path or rim vertices: clique number 3.
    Hub,
}

fn shape(f: &Facts) -> Option<Shape> {
    let g = &f.graph;
    let n = g.order();
    let tree = n >= 3 && g.is_connected() && g.size() + 1 == n;
    let cycle = n >= 4 && g.is_connected() && g.vertices().all(|v| g.degree(v) == 2);
    match f.spec {
        _ if tree || cycle => Some(Shape::Sparse),
        Some(FamilySpec::Grid { rows, cols }) if rows >= 2 && cols >= 2 => Some(Shape::Sparse),
        Some(FamilySpec::Fan { n } | FamilySpec::Wheel { n }) if n >= 4 => Some(Shape::Hub),
        _ => None,
    }
}

fn remark_examples(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        let (sg, sh) = (shape(g), shape(h));
        let hyp = sg.is_some() && sh.is_some();
        let tag = match (sg, sh) {
            (Some(Shape::Sparse), Some(Shape::Sparse)) => "i",
            (Some(Shape::Hub), Some(Shape::Hub)) => "ii",
            _ => "iii",
        };
        gate(hyp, || format!("remark-examples-{tag}: {}", pair_name(g, h)), || {
            let (n, m) = (g.order() as i64, h.order() as i64);
            let expected = match (sg, sh) {
                (Some(Shape::Sparse), Some(Shape::Sparse)) => n * m - 4,
                // Hub families of order n + 1 and m + 1.
                (Some(Shape::Hub), Some(Shape::Hub)) => (n - 1) * (m - 1) + (n - 1) + (m - 1) - 8,
                (Some(Shape::Sparse), _) => n * (m - 1) + n - 6,
                _ => m * (n - 1) + m - 6,
            };
            eq("dim_s", expected, dim_of(sum) as i64)
        })
    })
}

/// Lower bounds on `varpi(G ⊕ H)` shared by the two twins-free clique claims.
fn varpi_floor_general(g: &Facts, h: &Facts) -> usize {
    ((g.varpi() - 1) * h.omega()).max(g.omega() * (h.varpi() - 1)) + 1
}

fn varpi_cases(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        gate(g.is_nontrivial() && h.is_nontrivial(), || pair_name(g, h), || {
            at_least("varpi", varpi_floor_general(g, h), sum.varpi())?;
            if g.varpi_set_avoids_universal() {
                at_least("varpi", g.varpi() * h.omega(), sum.varpi())?;
            }
            Ok(None)
        })
    })
}

fn cor_varpi_cases(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        gate(g.is_nontrivial() && h.is_nontrivial(), || pair_name(g, h), || {
            let mut floors = vec![varpi_floor_general(g, h)];
            if g.varpi_set_avoids_universal() && h.varpi_set_avoids_universal() {
                floors.push((g.varpi() * h.omega()).max(g.omega() * h.varpi()));
            }
            if g.varpi_set_avoids_universal() {
                floors.push((g.varpi() * h.omega()).max(g.omega() * (h.varpi() - 1) + 1));
            }
            let connected = sum.graph.is_connected();
            for floor in floors {
                at_least("varpi", floor, sum.varpi())?;
                if connected {
                    at_most("dim_s", sum.order() - floor, dim_of(sum))?;
                }
            }
            Ok(None)
        })
    })
}

fn cor_complete(c: &Corpus) -> Vec<Outcome> {
    over_pairs(c, |g, h, sum| {
        let n = g.order();
        let hyp = g.is_nontrivial()
            && g.graph.is_twin_free()
            && g.graph.max_degree() + 2 <= n
            && h.graph.is_complete()
            && h.is_nontrivial();
        gate(hyp, || pair_name(g, h), || {
            eq("dim_s", sum.order() - h.order() * g.omega(), dim_of(sum))
        })
    })
}

fn is_star(g: &Graph) -> bool {
    let n = g.order();
    n >= 3 && g.is_connected() && g.size() + 1 == n && g.max_degree() + 1 == n
}

fn cor_star(c: &Corpus) -> Vec<Outcome> {
    let limit = guards::brute_force_dims_limit();
    over_pairs(c, |g, h, sum| {
        let hyp = is_star(&g.graph) && h.graph.is_complete() && h.is_nontrivial();
        gate(hyp, || pair_name(g, h), || {
            let (leaves, m) = (g.order() - 1, h.order());
            let dim = dim_of(sum);
            at_least("dim_s", (leaves + 1) * m - 2 * m, dim)?;
            at_most("dim_s", (leaves + 1) * m - m - 1, dim)?;
            if sum.order() > limit {
                return Ok(None);
            }
            let brute = strong_metric_dimension_bruteforce(&sum.graph).expect("within guard");
            eq("dim_s by brute force", brute.dimension, dim)?;
            Ok(Some(format!("dim_s({}) = {dim}, brute force agrees", pair_name(g, h))))
        })
    })
}

pub fn claim_registry() -> Vec<ClaimCheck> {
    macro_rules! claim {
        ($id:literal, $statement:literal, $run:path) => {
            ClaimCheck {
                id: $id,
                statement: $statement,
                run: $run,
            }
        };
    }
    vec![
        claim!("gallai", "alpha(G) + beta(G) = n", gallai),
        claim!("oellermann", "dim_s(G) = beta(G_SR), against subset search", oellermann),
        claim!("cart-lex", "G ⊕ N_n = G ∘ N_n as labeled graphs", cart_lex),
        claim!(
            "lex-empty",
            "dim_s(G ∘ N_m) = n(m-1) + beta(G_SRS); n(m-1) + dim_s(G) without twins; n(m-1) for K_n",
            lex_empty
        ),
        claim!("complete-iff", "G ⊕ H is complete iff G and H are complete", complete_iff),
        claim!("diam-i", "D(G ⊕ N_n) = max{2, D(G)}", diam_i),
        claim!("diam-ii", "both factors with isolated vertices: D(G ⊕ H) = infinity", diam_ii),
        claim!("diam-iii", "no isolated vertices in either factor: D(G ⊕ H) = 2", diam_iii),
        claim!("diam-iv", "D(H) <= 2: D(G ⊕ H) = 2", diam_iv),
        claim!(
            "diam-v",
            "D(H) > 2, H without isolated vertices, G non-empty with an isolated vertex: D(G ⊕ H) = 3",
            diam_v
        ),
        claim!(
            "connectivity",
            "G ⊕ H disconnected iff both have isolated vertices or one is empty and the other disconnected",
            connectivity
        ),
        claim!("sr-iso", "(G ⊕ H)_SR = (G ⊕ H)*_-", sr_iso),
        claim!("dims-beta-star", "dim_s(G ⊕ H) = beta((G ⊕ H)*_-)", dims_beta_star),
        claim!("complement-law", "(G ⊕ H)^c = G^c ⊠ H^c", complement_law),
        claim!(
            "dims-cover-complement",
            "twin-free factors: dim_s(G ⊕ H) = beta(G^c ⊠ H^c)",
            dims_cover_complement
        ),
        claim!("cgraph-alpha", "C-graph G: alpha(G ⊠ H) = alpha(G) alpha(H)", cgraph_alpha),
        claim!("cgraph-dims", "G^c a C-graph: dim_s(G ⊕ H) = nn' - omega(G) omega(H)", cgraph_dims),
        claim!("thD2", "dim_s(G) <= n - varpi(G), with equality when D(G) = 2", th_d2),
        claim!("varpi-product", "varpi(G ⊕ H) >= varpi(G) varpi(H)", varpi_product),
        claim!("omega-product", "omega(G ⊕ H) = omega(G) omega(H)", omega_product),
        claim!(
            "bounds-cartsum",
            "nn' - omega(G) omega(H) <= dim_s(G ⊕ H) <= nn' - varpi(G) varpi(H)",
            bounds_cartsum
        ),
        claim!(
            "both-cliques-equal",
            "omega = varpi in both factors: dim_s(G ⊕ H) = nn' - omega(G) omega(H)",
            both_cliques_equal
        ),
        claim!(
            "remark-examples",
            "closed formulae nn' - 4, nn' + n + n' - 8, nn' + n - 6",
            remark_examples
        ),
        claim!("varpi-cases", "varpi(G ⊕ H) lower bounds from omega of the other factor", varpi_cases),
        claim!(
            "cor-varpi-cases",
            "symmetric varpi(G ⊕ H) lower bounds and the matching dim_s upper bounds",
            cor_varpi_cases
        ),
        claim!("cor-complete", "dim_s(G ⊕ K_m) = nm - m omega(G)", cor_complete),
        claim!(
            "cor-star",
            "(n+1)m - 2m <= dim_s(K_{1,n} ⊕ K_m) <= (n+1)m - m - 1",
            cor_star
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_ids_are_unique() {
        let r = claim_registry();
        assert_eq!(r.len(), 27);
        let mut ids: Vec<&str> = r.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), 27);
    }
}
