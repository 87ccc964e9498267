//! Acceptance criteria, one line each. Run with `cargo test --test acceptance`.
//!
//! Every quantity is an integer compared exactly. A criterion that cannot
//! pass prints FAIL; the process still exits 0 when such a failure is exactly
//! the known one (see `KNOWN_FAILURES`), and 1 on anything unexpected.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use strongdim::canon::unlabeled_connected_graphs;
use strongdim::families::{self, all_labeled_graphs, FamilySpec};
use strongdim::products::{cartesian_sum, lexicographic_product, strong_product};
use strongdim::resolving::{strong_resolving_graph, tf_strong_resolving_graph};
use strongdim::solvers::{
    independence_number, is_strong_metric_generator, strong_metric_dimension, vertex_cover_branching,
};
use strongdim::verify::{self, Corpus, CorpusConfig, Facts};
use strongdim::Graph;

/// Claims that fail on the default corpus because the clique number of a
/// Cartesian sum can exceed the product of the factors' clique numbers
/// (C5 ⊕ C5 has a clique of size 5).
const KNOWN_FAILURES: [&str; 4] = ["both-cliques-equal", "bounds-cartsum", "omega-product", "remark-examples"];

struct Outcome {
    pass: bool,
    /// A FAIL that matches the documented analysis.
    expected_failure: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: String) -> Self {
        Self {
            pass,
            expected_failure: false,
            detail,
        }
    }
}

fn dims(g: &Graph) -> usize {
    strong_metric_dimension(g).unwrap().dimension
}

fn named(spec: FamilySpec) -> Facts {
    let g = families::generate(&spec).unwrap();
    Facts::new(spec.label(), Some(spec), g)
}

fn oracle_equivalence() -> Outcome {
    let mut graphs: Vec<Graph> = Vec::new();
    for n in 2..=8 {
        graphs.extend(unlabeled_connected_graphs(n).unwrap());
    }
    let classes = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(verify::DEFAULT_SEED);
    for _ in 0..100 {
        let n = rng.gen_range(9..=12);
        let p = rng.gen_range(0.1..0.6);
        graphs.push(families::random_connected_graph(n, p, rng.gen()).unwrap());
    }
    let bad = graphs.par_iter().filter(|g| dims(g) != common::dims(g)).count();
    Outcome::new(
        bad == 0,
        format!("reduction = subset search on {classes} connected classes n<=8 and 100 random n=9..12, {bad} mismatches"),
    )
}

fn closed_formulae() -> Outcome {
    let p = common::path;
    let c = common::cycle;
    let w4 = common::hub_over(&c(4));
    let w5 = common::hub_over(&c(5));
    let cases = [
        ("P4+P4", common::sum(&p(4), &p(4)), 12),
        ("P4+P5", common::sum(&p(4), &p(5)), 16),
        ("C6+C6", common::sum(&c(6), &c(6)), 32),
        ("W1,4+W1,5", common::sum(&w4, &w5), 4 * 5 + 4 + 5 - 8),
        ("P3+W1,4", common::sum(&p(3), &w4), 3 * 4 + 3 - 6),
    ];
    let mut parts = Vec::new();
    let mut ok = true;
    for (name, g, want) in cases {
        let got = dims(&g);
        let mut part = format!("{name}={got}");
        ok &= got == want;
        if g.order() <= 20 {
            let brute = common::dims(&g);
            ok &= brute == want;
            part += " (brute)";
        }
        parts.push(part);
    }
    Outcome::new(ok, parts.join(", "))
}

fn lexicographic() -> Outcome {
    let n2 = Graph::empty(2).unwrap();
    let k3 = lexicographic_product(&Graph::complete(3).unwrap(), &n2).unwrap();
    let p4 = lexicographic_product(&common::path(4), &n2).unwrap();
    let (a, b) = (dims(&k3), dims(&p4));
    let formula = 4 * (2 - 1) + dims(&common::path(4));
    Outcome::new(
        a == 3 && b == 5 && formula == 5 && common::dims(&k3) == 3 && common::dims(&p4) == 5,
        format!("K3∘N2={a}, P4∘N2={b}"),
    )
}

fn exhaustive_identities() -> Outcome {
    let mut graphs = Vec::new();
    for n in 1..=4 {
        graphs.extend(all_labeled_graphs(n).unwrap());
    }
    let mut pairs = Vec::new();
    for g in &graphs {
        for h in &graphs {
            pairs.push((
                Facts::new(format!("{:?}", g.edges().collect::<Vec<_>>()), None, g.clone()),
                Facts::new(format!("{:?}", h.edges().collect::<Vec<_>>()), None, h.clone()),
            ));
        }
    }
    let count = pairs.len();
    let corpus = Corpus::from_pairs(pairs);
    let ids: Vec<String> = [
        "complement-law",
        "cart-lex",
        "omega-product",
        "varpi-product",
        "diam-i",
        "diam-ii",
        "diam-iii",
        "diam-iv",
        "diam-v",
        "connectivity",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let report = verify::run_claims(&corpus, Some(&ids)).unwrap();
    // The complement law once more, from the adjacency definitions alone.
    let direct_bad = corpus
        .pairs
        .par_iter()
        .filter(|p| {
            let (g, h, _) = corpus.factors(p);
            let (g, h) = (&g.graph, &h.graph);
            let m = h.order();
            let law = strong_product(&g.complement(), &h.complement()).unwrap();
            let s = common::sum(g, h);
            (0..s.order()).any(|x| {
                (x + 1..s.order()).any(|y| {
                    let expect = (x / m == y / m || !g.has_edge(x / m, y / m))
                        && (x % m == y % m || !h.has_edge(x % m, y % m));
                    law.has_edge(x, y) != expect || s.has_edge(x, y) == expect
                })
            })
        })
        .count();
    let failures: usize = report.claims.iter().map(|c| c.failures.len()).sum();
    let vacuous: Vec<&str> = report.claims.iter().filter(|c| c.checked == 0).map(|c| c.id.as_str()).collect();
    Outcome::new(
        report.pass && direct_bad == 0,
        format!(
            "{count} labeled pairs, {} claims, {failures} violations, {direct_bad} direct complement mismatches, vacuous {vacuous:?}",
            report.claims.len()
        ),
    )
}

fn twin_free_classes(n: usize) -> Vec<Graph> {
    strongdim::canon::unlabeled_graphs(n)
        .unwrap()
        .into_iter()
        .filter(|g| g.is_twin_free())
        .collect()
}

fn cover_complement() -> Outcome {
    let by_order: Vec<Vec<Graph>> = (0..=8).map(twin_free_classes).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(verify::DEFAULT_SEED);
    let mut sampled = Vec::new();
    for n in [9, 10] {
        while sampled.iter().filter(|g: &&Graph| g.order() == n).count() < 25 {
            let g = families::random_graph(n, rng.gen_range(0.2..0.8), rng.gen()).unwrap();
            if g.is_twin_free() {
                sampled.push(g);
            }
        }
    }
    let mut pairs: Vec<(&Graph, &Graph)> = Vec::new();
    for n1 in 2..=8 {
        for n2 in 2..=8 {
            if n1 * n2 <= 20 {
                for g in &by_order[n1] {
                    for h in &by_order[n2] {
                        pairs.push((g, h));
                    }
                }
            }
        }
    }
    for g in &sampled {
        for h in &by_order[2] {
            pairs.push((g, h));
            pairs.push((h, g));
        }
    }
    let hypothesis = |g: &Graph, h: &Graph| {
        g.diameter().unwrap() <= strongdim::ExtDist::Finite(2)
            || (!g.has_isolated_vertex() && !h.has_isolated_vertex())
    };
    let checked: Vec<_> = pairs.into_iter().filter(|(g, h)| hypothesis(g, h)).collect();
    let bad = checked
        .par_iter()
        .filter(|(g, h)| {
            let s = cartesian_sum(g, h).unwrap();
            let product = strong_product(&g.complement(), &h.complement()).unwrap();
            dims(&s) != vertex_cover_branching(&product).len()
        })
        .count();
    let p4 = common::path(4);
    let spot_sum = dims(&common::sum(&p4, &p4));
    let spot_cover = vertex_cover_branching(&strong_product(&p4.complement(), &p4.complement()).unwrap()).len();
    Outcome::new(
        bad == 0 && !checked.is_empty() && spot_sum == 12 && spot_cover == 12,
        format!(
            "{} twin-free pairs with n1*n2<=20 meeting the hypothesis, {bad} mismatches; P4+P4: {spot_sum} = {spot_cover}",
            checked.len()
        ),
    )
}

fn corollaries() -> Outcome {
    let p4k3 = common::sum(&common::path(4), &Graph::complete(3).unwrap());
    let a = dims(&p4k3);
    let a_brute = common::dims(&p4k3);
    let star = Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
    let sk = common::sum(&star, &Graph::complete(2).unwrap());
    let b = dims(&sk);
    let b_brute = common::dims(&sk);
    let corpus = Corpus::from_pairs(vec![(
        named(FamilySpec::Star { n: 2 }),
        named(FamilySpec::Complete { n: 2 }),
    )]);
    let report = verify::run_claims(&corpus, Some(&["cor-star".to_string()])).unwrap();
    let claim = report.claim("cor-star").unwrap();
    let recorded = claim.notes.iter().any(|n| n.contains(&format!("= {b_brute}, brute force")));
    Outcome::new(
        a == 6 && a_brute == 6 && (2..=3).contains(&b) && b == b_brute && claim.passed() && recorded,
        format!("P4+K3={a} (brute {a_brute}); K1,2+K2={b} (brute {b_brute}, in [2,3], recorded: {recorded})"),
    )
}

fn property_suite() -> Outcome {
    let start = Instant::now();
    let corpus = Corpus::build(&CorpusConfig::default()).unwrap();
    let all = corpus.all_graphs();
    let broken: Vec<String> = all
        .par_iter()
        .filter_map(|f| {
            let g = &f.graph;
            let n = g.order();
            let mut why = Vec::new();
            if independence_number(g) + vertex_cover_branching(g).len() != n {
                why.push("gallai");
            }
            if !(f.omega() >= f.varpi() && f.varpi() >= 1) {
                why.push("omega >= varpi >= 1");
            }
            let sr = strong_resolving_graph(g);
            let tf = tf_strong_resolving_graph(g);
            let sr_edges: BTreeSet<(usize, usize)> =
                sr.graph.edges().map(|(u, v)| (sr.vertex_map[u], sr.vertex_map[v])).collect();
            if !tf.graph.edges().all(|(u, v)| sr_edges.contains(&(tf.vertex_map[u], tf.vertex_map[v]))) {
                why.push("G_SRS in G_SR");
            }
            if let Some(b) = f.basis() {
                if is_strong_metric_generator(g, &b.witness) != Ok(true) {
                    why.push("witness");
                }
                if b.dimension > n - f.varpi()
                    || (f.diameter() == strongdim::ExtDist::Finite(2) && b.dimension != n - f.varpi())
                {
                    why.push("dim_s vs n - varpi");
                }
            }
            (!why.is_empty()).then(|| format!("{}: {why:?}", f.label))
        })
        .collect();
    let report = verify::run_claims(&corpus, None).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let vacuous: Vec<&str> = report.claims.iter().filter(|c| c.checked == 0).map(|c| c.id.as_str()).collect();
    let failing: Vec<&str> = report.claims.iter().filter(|c| !c.failures.is_empty()).map(|c| c.id.as_str()).collect();

    // Every reported failure must be a pair whose sum has a clique larger
    // than the product of the factors' clique numbers, and every such pair
    // must show up in the clique-product claim.
    let excess: BTreeSet<String> = corpus
        .pairs
        .iter()
        .filter_map(|p| {
            let (g, h, s) = corpus.factors(p);
            (s.omega() != g.omega() * h.omega()).then(|| s.label.clone())
        })
        .collect();
    let failed_instances: BTreeSet<String> = report
        .claims
        .iter()
        .flat_map(|c| c.failures.iter())
        .map(|f| f.instance.split_once(": ").map_or(f.instance.clone(), |(_, rest)| rest.to_string()))
        .collect();
    let omega_failures: BTreeSet<String> = report
        .claim("omega-product")
        .map(|c| c.failures.iter().map(|f| f.instance.clone()).collect())
        .unwrap_or_default();
    let explained = failing.iter().all(|id| KNOWN_FAILURES.contains(id))
        && failed_instances.is_subset(&excess)
        && omega_failures == excess
        && excess.contains("C5 ⊕ C5")
        && common::clique_number(&common::sum(&common::cycle(5), &common::cycle(5))) == 5;

    let pass = broken.is_empty() && report.pass && report.claims.len() == 27 && vacuous.is_empty() && secs < 300.0;
    Outcome {
        pass,
        expected_failure: !pass && broken.is_empty() && vacuous.is_empty() && report.claims.len() == 27 && explained,
        detail: format!(
            "{} graphs, property violations {:?}; verify: {} claims, vacuous {vacuous:?}, failing {failing:?} on {:?}",
            all.len(),
            broken,
            report.claims.len(),
            excess
        ),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("oracle equivalence", oracle_equivalence),
        ("closed formulae", closed_formulae),
        ("lexicographic with empty graphs", lexicographic),
        ("exhaustive identities n<=4", exhaustive_identities),
        ("cover of complement product", cover_complement),
        ("corollaries with complete graphs", corollaries),
        ("property suite and default verify", property_suite),
    ];
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        let status = if o.pass { "PASS" } else { "FAIL" };
        let tag = if o.expected_failure {
            " [known: clique number of a Cartesian sum is not multiplicative]"
        } else {
            ""
        };
        println!(
            "criterion {} {status} {name}: {} ({:.1}s){tag}",
            i + 1,
            o.detail,
            start.elapsed().as_secs_f64()
        );
        if !o.pass && !o.expected_failure {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}
