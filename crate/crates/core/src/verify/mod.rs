//! Mechanical checks of identities and bounds for Cartesian sums.
//!
//! A [`Corpus`] holds factor graphs and ordered factor pairs. Every claim in
//! [`claim_registry`] tests its hypothesis on each instance first; instances
//! where the hypothesis fails are skipped, never counted as passes. Expensive
//! invariants are computed at most once per graph and shared between claims.

mod claims;

use std::ops::RangeInclusive;
use std::sync::OnceLock;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{GraphError, Result};
use crate::families::{self, FamilySpec};
use crate::graph::{DistanceMatrix, ExtDist, Graph};
use crate::guards;
use crate::products::cartesian_sum;
use crate::solvers::{self, dims, StrongMetricBasis};

pub use claims::{claim_registry, ClaimCheck};

/// Seed of the default random pairs.
pub const DEFAULT_SEED: u64 = 2015;

/// At most this many failures are listed per claim.
const FAILURE_LIST_CAP: usize = 25;

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusConfig {
    /// Every labeled graph up to this order, paired with every other.
    pub max_order: usize,
    /// Orders of the named families (paths, cycles, stars, fans, wheels, ...).
    pub family_orders: RangeInclusive<usize>,
    pub random_pairs: usize,
    pub random_orders: RangeInclusive<usize>,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        Self {
            max_order: 4,
            family_orders: 3..=7,
            random_pairs: 100,
            random_orders: 5..=8,
            seed: DEFAULT_SEED,
        }
    }
}

impl CorpusConfig {
    fn family_specs(&self) -> Vec<FamilySpec> {
        let (lo, hi) = (*self.family_orders.start(), *self.family_orders.end());
        let mut specs = Vec::new();
        for n in lo.max(1)..=hi {
            specs.push(FamilySpec::Path { n });
            if n >= 3 {
                specs.push(FamilySpec::Cycle { n });
            }
            specs.push(FamilySpec::Empty { n });
            specs.push(FamilySpec::RandomTree {
                n,
                seed: self.seed.wrapping_add(n as u64),
            });
        }
        // K_2 is always included so that stars meet a complete graph of order 2.
        for n in 2..=hi {
            specs.push(FamilySpec::Complete { n });
        }
        for k in lo.saturating_sub(1).max(2)..hi {
            specs.push(FamilySpec::Star { n: k });
            specs.push(FamilySpec::Fan { n: k });
            if k >= 3 {
                specs.push(FamilySpec::Wheel { n: k });
            }
        }
        if hi >= 4 {
            for (rows, cols) in [(2, 2), (2, 3), (3, 3)] {
                specs.push(FamilySpec::Grid { rows, cols });
            }
        }
        specs
    }

    fn check_guards(&self) -> Result<()> {
        let enumerate = guards::labeled_enumeration_limit();
        if self.max_order > enumerate {
            return Err(GraphError::Guard {
                what: "max order for labeled pairs",
                value: self.max_order,
                limit: enumerate,
            });
        }
        for (what, range) in [
            ("family order", &self.family_orders),
            ("random pair order", &self.random_orders),
        ] {
            if range.is_empty() || *range.start() == 0 {
                return Err(GraphError::InvalidParameter(format!(
                    "{what} range must be non-empty and start at 1 or more"
                )));
            }
            if *range.end() > guards::VERIFY_FACTOR_ORDER {
                return Err(GraphError::Guard {
                    what,
                    value: *range.end(),
                    limit: guards::VERIFY_FACTOR_ORDER,
                });
            }
        }
        let labeled: usize = (1..=self.max_order).map(|n| 1usize << (n * (n - 1) / 2)).sum();
        let named = self.family_specs().len();
        let pairs = labeled * labeled + named * named + self.random_pairs;
        if pairs > guards::VERIFY_PAIRS {
            return Err(GraphError::Guard {
                what: "factor pairs in corpus",
                value: pairs,
                limit: guards::VERIFY_PAIRS,
            });
        }
        Ok(())
    }
}

/// A graph with lazily computed invariants.
pub struct Facts {
    pub label: String,
    /// The family the graph was generated from, if any.
    pub spec: Option<FamilySpec>,
    pub graph: Graph,
    dist: OnceLock<DistanceMatrix>,
    alpha: OnceLock<usize>,
    omega: OnceLock<usize>,
    varpi: OnceLock<usize>,
    varpi_avoids: OnceLock<bool>,
    c_graph: OnceLock<bool>,
    co_c_graph: OnceLock<bool>,
    basis: OnceLock<Option<StrongMetricBasis>>,
}

impl Facts {
    pub fn new(label: impl Into<String>, spec: Option<FamilySpec>, graph: Graph) -> Self {
        Self {
            label: label.into(),
            spec,
            graph,
            dist: OnceLock::new(),
            alpha: OnceLock::new(),
            omega: OnceLock::new(),
            varpi: OnceLock::new(),
            varpi_avoids: OnceLock::new(),
            c_graph: OnceLock::new(),
            co_c_graph: OnceLock::new(),
            basis: OnceLock::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    pub fn distances(&self) -> &DistanceMatrix {
        self.dist.get_or_init(|| self.graph.distance_matrix())
    }

    pub fn diameter(&self) -> ExtDist {
        self.distances().max().unwrap_or(ExtDist::Finite(0))
    }

    pub fn alpha(&self) -> usize {
        *self.alpha.get_or_init(|| solvers::independence_number(&self.graph))
    }

    pub fn beta(&self) -> usize {
        self.order() - self.alpha()
    }

    pub fn omega(&self) -> usize {
        *self.omega.get_or_init(|| solvers::clique_number(&self.graph))
    }

    pub fn varpi(&self) -> usize {
        *self.varpi.get_or_init(|| {
            solvers::twins_free_clique_number(&self.graph).expect("corpus graphs have vertices")
        })
    }

    /// Some maximum twins-free clique has no vertex of degree `n - 1`.
    pub fn varpi_set_avoids_universal(&self) -> bool {
        *self.varpi_avoids.get_or_init(|| {
            solvers::varpi_set_avoiding_universal(&self.graph)
                .expect("corpus graphs have vertices")
                .is_some()
        })
    }

    pub fn is_c_graph(&self) -> bool {
        *self.c_graph.get_or_init(|| solvers::is_c_graph(&self.graph))
    }

    pub fn complement_is_c_graph(&self) -> bool {
        *self.co_c_graph.get_or_init(|| solvers::is_c_graph(&self.graph.complement()))
    }

    /// `None` when the graph is disconnected or has fewer than two vertices.
    pub fn basis(&self) -> Option<&StrongMetricBasis> {
        self.basis
            .get_or_init(|| {
                (self.order() >= 2 && self.graph.is_connected())
                    .then(|| dims::basis_with(&self.graph, self.distances()))
            })
            .as_ref()
    }

    pub fn dim_s(&self) -> Option<usize> {
        self.basis().map(|b| b.dimension)
    }

    pub fn is_nontrivial(&self) -> bool {
        self.order() >= 2
    }
}

/// An ordered pair of corpus graphs and their Cartesian sum.
pub struct Pair {
    pub left: usize,
    pub right: usize,
    sum: OnceLock<Facts>,
}

pub struct Corpus {
    pub graphs: Vec<Facts>,
    pub pairs: Vec<Pair>,
}

fn edge_label(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("n{}{{{}}}", g.order(), edges.join(","))
}

impl Corpus {
    /// Builds the corpus for `config`; guard violations are reported before
    /// any graph is generated.
    pub fn build(config: &CorpusConfig) -> Result<Self> {
        config.check_guards()?;
        let mut corpus = Corpus {
            graphs: Vec::new(),
            pairs: Vec::new(),
        };

        let mut labeled = Vec::new();
        for n in 1..=config.max_order {
            for g in families::all_labeled_graphs(n)? {
                labeled.push(corpus.push(Facts::new(edge_label(&g), None, g)));
            }
        }
        corpus.pair_up(&labeled);

        let mut named = Vec::new();
        for spec in config.family_specs() {
            let g = families::generate(&spec)?;
            named.push(corpus.push(Facts::new(spec.label(), Some(spec), g)));
        }
        corpus.pair_up(&named);

        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        for i in 0..config.random_pairs {
            let mut side = || -> Result<usize> {
                let n = rng.gen_range(config.random_orders.clone());
                let p = (rng.gen_range(0.15..0.85f64) * 100.0).round() / 100.0;
                let seed = rng.gen::<u64>();
                let spec = FamilySpec::RandomGraph { n, p, seed };
                // Every other pair uses connected factors.
                let g = if i % 2 == 0 {
                    families::random_graph(n, p, seed)?
                } else {
                    families::random_connected_graph(n, p, seed)?
                };
                let label = if i % 2 == 0 {
                    spec.label()
                } else {
                    format!("connected {}", spec.label())
                };
                Ok(corpus.push(Facts::new(label, Some(spec), g)))
            };
            let left = side()?;
            let right = side()?;
            corpus.add_pair(left, right);
        }
        Ok(corpus)
    }

    /// A corpus of exactly the given ordered pairs.
    pub fn from_pairs(pairs: Vec<(Facts, Facts)>) -> Self {
        let mut corpus = Corpus {
            graphs: Vec::new(),
            pairs: Vec::new(),
        };
        for (g, h) in pairs {
            let left = corpus.push(g);
            let right = corpus.push(h);
            corpus.add_pair(left, right);
        }
        corpus
    }

    fn push(&mut self, facts: Facts) -> usize {
        self.graphs.push(facts);
        self.graphs.len() - 1
    }

    fn add_pair(&mut self, left: usize, right: usize) {
        self.pairs.push(Pair {
            left,
            right,
            sum: OnceLock::new(),
        });
    }

    fn pair_up(&mut self, ids: &[usize]) {
        for &left in ids {
            for &right in ids {
                self.add_pair(left, right);
            }
        }
    }

    /// The two factors and their Cartesian sum.
    pub fn factors<'a>(&'a self, pair: &'a Pair) -> (&'a Facts, &'a Facts, &'a Facts) {
        let g = &self.graphs[pair.left];
        let h = &self.graphs[pair.right];
        let sum = pair.sum.get_or_init(|| {
            let graph = cartesian_sum(&g.graph, &h.graph).expect("corpus factors are small and non-empty");
            Facts::new(format!("{} ⊕ {}", g.label, h.label), None, graph)
        });
        (g, h, sum)
    }

    /// Every factor graph followed by every Cartesian sum.
    pub fn all_graphs(&self) -> Vec<&Facts> {
        let sums: Vec<&Facts> = self.pairs.par_iter().map(|p| self.factors(p).2).collect();
        self.graphs.iter().chain(sums).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub claims: Vec<ClaimReport>,
    pub pass: bool,
    pub runtime_ms: u128,
}

impl VerifyReport {
    pub fn claim(&self, id: &str) -> Option<&ClaimReport> {
        self.claims.iter().find(|c| c.id == id)
    }

    /// Pretty JSON with object keys in sorted order.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report is plain data");
        serde_json::to_string_pretty(&value).expect("report is plain data")
    }
}

/// Per-instance result of a claim.
pub(crate) enum Outcome {
    Skipped,
    Passed(Option<String>),
    Failed(Failure),
}

fn tally(id: &str, outcomes: Vec<Outcome>) -> ClaimReport {
    let mut report = ClaimReport {
        id: id.to_string(),
        checked: 0,
        skipped: 0,
        failures: Vec::new(),
        notes: Vec::new(),
    };
    let mut failed = 0;
    for o in outcomes {
        match o {
            Outcome::Skipped => report.skipped += 1,
            Outcome::Passed(note) => {
                report.checked += 1;
                report.notes.extend(note);
            }
            Outcome::Failed(f) => {
                report.checked += 1;
                failed += 1;
                if report.failures.len() < FAILURE_LIST_CAP {
                    report.failures.push(f);
                }
            }
        }
    }
    if failed > report.failures.len() {
        report
            .notes
            .push(format!("{} further failures not listed", failed - report.failures.len()));
    }
    report
}

/// Runs the selected claims (all when `ids` is `None`) over `corpus`.
pub fn run_claims(corpus: &Corpus, ids: Option<&[String]>) -> Result<VerifyReport> {
    let start = Instant::now();
    let registry = claim_registry();
    let selected: Vec<&ClaimCheck> = match ids {
        None => registry.iter().collect(),
        Some(ids) => {
            let mut out = Vec::new();
            for id in ids {
                let c = registry
                    .iter()
                    .find(|c| c.id == id.as_str())
                    .ok_or_else(|| GraphError::InvalidParameter(format!("unknown claim id {id:?}")))?;
                out.push(c);
            }
            out
        }
    };
    let mut claims: Vec<ClaimReport> = selected
        .par_iter()
        .map(|c| tally(c.id, (c.run)(corpus)))
        .collect();
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    let pass = !claims.is_empty() && claims.iter().all(ClaimReport::passed);
    Ok(VerifyReport {
        claims,
        pass,
        runtime_ms: start.elapsed().as_millis(),
    })
}

/// Builds the corpus for `config` and runs the selected claims over it.
pub fn run_suite(config: &CorpusConfig, ids: Option<&[String]>) -> Result<VerifyReport> {
    if let Some(ids) = ids {
        let known: Vec<&str> = claim_registry().iter().map(|c| c.id).collect();
        if let Some(bad) = ids.iter().find(|id| !known.contains(&id.as_str())) {
            return Err(GraphError::InvalidParameter(format!("unknown claim id {bad:?}")));
        }
    }
    let start = Instant::now();
    let corpus = Corpus::build(config)?;
    let mut report = run_claims(&corpus, ids)?;
    report.runtime_ms = start.elapsed().as_millis();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn facts(spec: FamilySpec) -> Facts {
        let g = families::generate(&spec).unwrap();
        Facts::new(spec.label(), Some(spec), g)
    }

    fn ids(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn single_instance_closed_formula() {
        let corpus = Corpus::from_pairs(vec![(
            facts(FamilySpec::Path { n: 4 }),
            facts(FamilySpec::Path { n: 4 }),
        )]);
        let report = run_claims(&corpus, Some(&ids(&["remark-examples"]))).unwrap();
        let claim = report.claim("remark-examples").unwrap();
        assert_eq!((claim.checked, claim.failures.len()), (1, 0));
        assert!(report.pass);
        let (_, _, sum) = corpus.factors(&corpus.pairs[0]);
        assert_eq!(sum.dim_s(), Some(12));
    }

    #[test]
    fn vacuous_claims_fail_the_run() {
        // Two complete graphs: no closed formula applies.
        let corpus = Corpus::from_pairs(vec![(
            facts(FamilySpec::Complete { n: 2 }),
            facts(FamilySpec::Complete { n: 3 }),
        )]);
        let report = run_claims(&corpus, Some(&ids(&["remark-examples", "omega-product"]))).unwrap();
        assert_eq!(report.claim("remark-examples").unwrap().checked, 0);
        assert!(report.claim("omega-product").unwrap().passed());
        assert!(!report.pass);
    }

    #[test]
    fn guards_fire_before_building() {
        let config = CorpusConfig {
            max_order: 7,
            ..CorpusConfig::default()
        };
        assert!(matches!(run_suite(&config, None), Err(GraphError::Guard { .. })));
        let config = CorpusConfig {
            random_orders: 5..=40,
            ..CorpusConfig::default()
        };
        assert!(matches!(Corpus::build(&config), Err(GraphError::Guard { .. })));
        assert!(matches!(
            run_suite(&CorpusConfig::default(), Some(&ids(&["no-such-claim"]))),
            Err(GraphError::InvalidParameter(_))
        ));
    }

    #[test]
    fn small_run_passes() {
        // Orders below 5 keep C_5 out; see the clique-product counterexample.
        let config = CorpusConfig {
            max_order: 4,
            family_orders: 3..=4,
            random_pairs: 10,
            random_orders: 3..=4,
            seed: 9,
        };
        let report = run_suite(&config, None).unwrap();
        let failing: Vec<_> = report.claims.iter().filter(|c| !c.passed()).collect();
        assert!(failing.is_empty(), "{failing:#?}");
        assert_eq!(report.claims.len(), 27);
        assert!(report.pass);
    }

    #[test]
    fn c5_breaks_the_clique_product() {
        let c5 = facts(FamilySpec::Cycle { n: 5 });
        let corpus = Corpus::from_pairs(vec![(c5, facts(FamilySpec::Cycle { n: 5 }))]);
        let report = run_claims(&corpus, Some(&ids(&["omega-product", "dims-cover-complement"]))).unwrap();
        let omega = report.claim("omega-product").unwrap();
        assert_eq!(omega.failures[0].got, "omega = 5");
        assert!(report.claim("dims-cover-complement").unwrap().passed());
    }

    #[test]
    fn json_keys_are_sorted() {
        let report = VerifyReport {
            claims: vec![ClaimReport {
                id: "gallai".into(),
                checked: 1,
                skipped: 0,
                failures: vec![],
                notes: vec![],
            }],
            pass: true,
            runtime_ms: 3,
        };
        let json = report.to_json();
        let pos = |k: &str| json.find(k).unwrap();
        assert!(pos("\"checked\"") < pos("\"failures\"") && pos("\"failures\"") < pos("\"id\""));
        assert!(pos("\"claims\"") < pos("\"pass\"") && pos("\"pass\"") < pos("\"runtime_ms\""));
    }
}
