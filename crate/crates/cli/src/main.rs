//! `strongdim`: generation, products, strong resolving graphs, invariants and
//! the verification suite from the command line.
//!
//! Exit codes: 0 success (or a passing `verify`), 1 a failing `verify`,
//! 2 usage or input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use strongdim::families::{self, FamilyKind, FamilySpec};
use strongdim::io::{parse_edge_list, parse_graph6_corpus, write_edge_list};
use strongdim::products::ProductKind;
use strongdim::resolving::{strong_resolving_graph, tf_strong_resolving_graph};
use strongdim::solvers::{strong_metric_dimension, strong_metric_dimension_bruteforce, InvariantBundle};
use strongdim::verify::{self, CorpusConfig};
use strongdim::Graph;

#[derive(Parser)]
#[command(name = "strongdim", version, about = "Strong metric dimension of graphs and Cartesian sums")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, size, connectivity, diameter and twins of a graph.
    Info { file: PathBuf },
    /// Generate a family member, every labeled graph of an order, or convert a graph6 corpus.
    Gen(GenArgs),
    /// Product of two graphs.
    Product {
        #[arg(long, value_enum)]
        op: Op,
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Strong resolving graph (or its twin-free variant) with the vertex map.
    Srgraph {
        file: PathBuf,
        /// Drop mutually maximally distant pairs of true twins.
        #[arg(long)]
        tf: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write "new old" vertex pairs here.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// alpha, beta, omega, varpi, diameter and dim_s.
    Invariants {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Strong metric dimension and a basis.
    Dims {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "sr-cover")]
        method: Method,
    },
    /// Run the claim suite; exits 1 if any claim fails or is never checked.
    Verify(VerifyArgs),
}

#[derive(clap::Args)]
struct GenArgs {
    /// path, cycle, complete, empty, star, fan, wheel, grid, random_tree, random_graph, all.
    #[arg(long, required_unless_present = "graph6")]
    family: Option<String>,
    /// Order, or number of leaves / rim vertices for star, fan and wheel.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    /// Edge probability for random_graph.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Convert every graph of a graph6 file into edge-list blocks.
    #[arg(long, conflicts_with = "family")]
    graph6: Option<PathBuf>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// `all` or a comma-separated list of claim ids.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 4)]
    max_order: usize,
    /// Number of random factor pairs.
    #[arg(long, default_value_t = 100)]
    random: usize,
    #[arg(long, default_value_t = verify::DEFAULT_SEED)]
    seed: u64,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// List claim ids and statements, then exit.
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Sum,
    Strong,
    Lex,
    Cartesian,
    Join,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    SrCover,
    Bruteforce,
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        return Ok(s);
    }
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = read_text(path)?;
    parse_edge_list(&text).with_context(|| path.display().to_string())
}

fn emit(output: Option<&Path>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn set_string(vs: &[usize]) -> String {
    let parts: Vec<String> = vs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn info(file: &Path) -> Result<()> {
    let g = read_graph(file)?;
    let mut out = format!("order = {}\nsize = {}\n", g.order(), g.size());
    out += &format!("connected = {}\ncomponents = {}\n", g.is_connected(), g.components().len());
    if g.order() > 0 {
        out += &format!("diameter = {}\n", g.diameter()?);
    }
    out += &format!(
        "max_degree = {}\nisolated = {}\nuniversal = {}\ntwin_free = {}\n",
        if g.order() > 0 { g.max_degree() } else { 0 },
        set_string(&g.isolated_vertices()),
        set_string(&g.universal_vertices()),
        g.is_twin_free()
    );
    emit(None, &out)
}

fn gen(args: &GenArgs) -> Result<()> {
    if let Some(path) = &args.graph6 {
        let graphs = parse_graph6_corpus(&read_text(path)?).with_context(|| path.display().to_string())?;
        return emit(args.output.as_deref(), &blocks(&graphs));
    }
    let name = args.family.as_deref().expect("clap requires --family without --graph6");
    let kind = FamilyKind::parse(name).with_context(|| format!("unknown family `{name}`"))?;
    let need_n = || args.n.with_context(|| format!("family `{name}` needs --n"));
    let spec = match kind {
        FamilyKind::Path => FamilySpec::Path { n: need_n()? },
        FamilyKind::Cycle => FamilySpec::Cycle { n: need_n()? },
        FamilyKind::Complete => FamilySpec::Complete { n: need_n()? },
        FamilyKind::Empty => FamilySpec::Empty { n: need_n()? },
        FamilyKind::Star => FamilySpec::Star { n: need_n()? },
        FamilyKind::Fan => FamilySpec::Fan { n: need_n()? },
        FamilyKind::Wheel => FamilySpec::Wheel { n: need_n()? },
        FamilyKind::Grid => match (args.rows, args.cols) {
            (Some(rows), Some(cols)) => FamilySpec::Grid { rows, cols },
            _ => bail!("family `grid` needs --rows and --cols"),
        },
        FamilyKind::RandomTree => FamilySpec::RandomTree {
            n: need_n()?,
            seed: args.seed,
        },
        FamilyKind::RandomGraph => FamilySpec::RandomGraph {
            n: need_n()?,
            p: args.p,
            seed: args.seed,
        },
        FamilyKind::AllGraphs => FamilySpec::AllGraphs { n: need_n()? },
    };
    if let FamilySpec::AllGraphs { n } = spec {
        // Stream: up to 2^15 graphs at n = 6.
        let mut out: Box<dyn Write> = match &args.output {
            Some(p) => Box::new(io::BufWriter::new(
                fs::File::create(p).with_context(|| format!("cannot write {}", p.display()))?,
            )),
            None => Box::new(io::BufWriter::new(io::stdout().lock())),
        };
        for (i, g) in families::all_labeled_graphs(n)?.enumerate() {
            if i > 0 {
                out.write_all(b"\n")?;
            }
            out.write_all(write_edge_list(&g).as_bytes())?;
        }
        out.flush()?;
        return Ok(());
    }
    emit(args.output.as_deref(), &write_edge_list(&families::generate(&spec)?))
}

fn blocks(graphs: &[Graph]) -> String {
    graphs.iter().map(write_edge_list).collect::<Vec<_>>().join("\n")
}

fn product(op: Op, a: &Path, b: &Path, output: Option<&Path>) -> Result<()> {
    let (g, h) = (read_graph(a)?, read_graph(b)?);
    let kind = match op {
        Op::Sum => ProductKind::CartesianSum,
        Op::Strong => ProductKind::Strong,
        Op::Lex => ProductKind::Lexicographic,
        Op::Cartesian => ProductKind::Cartesian,
        Op::Join => ProductKind::Join,
    };
    emit(output, &write_edge_list(&kind.apply(&g, &h)?))
}

fn srgraph(file: &Path, tf: bool, output: Option<&Path>, map: Option<&Path>) -> Result<()> {
    let g = read_graph(file)?;
    let derived = if tf {
        tf_strong_resolving_graph(&g)
    } else {
        strong_resolving_graph(&g)
    };
    emit(output, &write_edge_list(&derived.graph))?;
    if let Some(map) = map {
        let text: String = derived
            .vertex_map
            .iter()
            .enumerate()
            .map(|(new, old)| format!("{new} {old}\n"))
            .collect();
        fs::write(map, text).with_context(|| format!("cannot write {}", map.display()))?;
    }
    Ok(())
}

fn invariants(file: &Path, json: bool) -> Result<()> {
    let g = read_graph(file)?;
    let bundle = InvariantBundle::compute(&g)?;
    if json {
        // Through `Value` so keys come out sorted.
        let value = serde_json::to_value(&bundle)?;
        return emit(None, &format!("{value}\n"));
    }
    let dim = bundle
        .dim_s
        .map_or_else(|| "undefined".to_string(), |d| d.to_string());
    emit(
        None,
        &format!(
            "alpha = {}\nbeta = {}\nomega = {}\nvarpi = {}\ndiameter = {}\ndim_s = {dim}\n",
            bundle.alpha, bundle.beta, bundle.omega, bundle.varpi, bundle.diameter
        ),
    )
}

fn dims(file: &Path, method: Method) -> Result<()> {
    let g = read_graph(file)?;
    let basis = match method {
        Method::SrCover => strong_metric_dimension(&g)?,
        Method::Bruteforce => strong_metric_dimension_bruteforce(&g)?,
    };
    emit(
        None,
        &format!("dim_s = {}\nwitness = {}\n", basis.dimension, set_string(&basis.witness)),
    )
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode> {
    if args.list {
        let mut out = String::new();
        for c in verify::claim_registry() {
            out += &format!("{:24} {}\n", c.id, c.statement);
        }
        emit(None, &out)?;
        return Ok(ExitCode::SUCCESS);
    }
    let ids: Option<Vec<String>> = match args.suite.as_str() {
        "all" => None,
        list => Some(list.split(',').map(|s| s.trim().to_string()).collect()),
    };
    let config = CorpusConfig {
        max_order: args.max_order,
        random_pairs: args.random,
        seed: args.seed,
        ..CorpusConfig::default()
    };
    let report = verify::run_suite(&config, ids.as_deref())?;
    let mut out = String::new();
    for c in &report.claims {
        out += &format!(
            "{} {:24} checked {:6} skipped {:6} failures {}\n",
            if c.passed() { "ok  " } else { "FAIL" },
            c.id,
            c.checked,
            c.skipped,
            c.failures.len()
        );
        for f in &c.failures {
            out += &format!("       {}: expected {}, got {}\n", f.instance, f.expected, f.got);
        }
    }
    out += &format!(
        "{} ({} claims, {} ms)\n",
        if report.pass { "PASS" } else { "FAIL" },
        report.claims.len(),
        report.runtime_ms
    );
    emit(None, &out)?;
    if let Some(path) = &args.json {
        fs::write(path, report.to_json() + "\n").with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Info { file } => info(file)?,
        Command::Gen(args) => gen(args)?,
        Command::Product { op, a, b, output } => product(*op, a, b, output.as_deref())?,
        Command::Srgraph { file, tf, output, map } => srgraph(file, *tf, output.as_deref(), map.as_deref())?,
        Command::Invariants { file, json } => invariants(file, *json)?,
        Command::Dims { file, method } => dims(file, *method)?,
        Command::Verify(args) => return run_verify(args),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
