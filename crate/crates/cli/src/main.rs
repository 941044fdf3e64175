//! Command-line front end: build and export token graphs, compute
//! automorphism groups, run the verification harness, and query path
//! distances.
//!
//! Exit codes: 0 success, 1 a theorem check was refuted, 2 invalid input,
//! 3 capacity exceeded.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::process::ExitCode;

use tokenaut::distance::{bfs_distance, token_path_distance, SortedTuple};
use tokenaut::error::Error;
use tokenaut::graph::{make_family, FamilySpec, Graph, MAX_VERTICES};
use tokenaut::io::{from_graph6, to_dot, to_graph6};
use tokenaut::search::{find_automorphism_group, AutReport, SearchConfig};
use tokenaut::theorems::{
    check_conjecture, check_cycle_structure, check_cycle_theorem, check_fan_theorem,
    check_grid_counterexample, check_johnson, check_path_theorem, check_star_theorem,
    check_wheel_theorem, CheckContext, ConjectureFamily, Verdict,
};
use tokenaut::token::TokenGraph;

/// Capacity override: the maximum number of token vertices a run may build.
const CAPACITY_ENV: &str = "TOKENAUT_CAPACITY";

#[derive(Parser)]
#[command(
    name = "tokenaut",
    about = "Token graphs and their exact automorphism groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build F_k of a base graph and export it (graph6 / DOT)
    Build(BuildArgs),
    /// Compute the automorphism group of a graph or its token graph
    Aut(AutArgs),
    /// Run theorem/conjecture checks and report verdicts as JSON
    Verify(VerifyArgs),
    /// Distance between two token vertices of F_k(P_n)
    Distance(DistanceArgs),
}

/// Base-graph selection shared by `build` and `aut`.
///
/// Size conventions: path/cycle/complete take the vertex count; star takes
/// the total vertex count (center plus leaves); fan and wheel take the rim
/// size, so the graph has n+1 vertices; grids take rows x cols.
#[derive(Args, Clone)]
struct GraphInput {
    /// Family name: path, cycle, star, fan, wheel, complete, grid
    #[arg(long)]
    family: Option<String>,
    /// Size parameter of the family (see the family conventions above)
    #[arg(long)]
    n: Option<usize>,
    /// Grid rows (with --family grid)
    #[arg(long)]
    rows: Option<usize>,
    /// Grid columns (with --family grid)
    #[arg(long)]
    cols: Option<usize>,
    /// A graph6 string instead of a family
    #[arg(long, value_name = "G6")]
    graph6: Option<String>,
}

impl GraphInput {
    fn resolve(&self) -> Result<(Graph, String), Error> {
        match (&self.family, &self.graph6) {
            (Some(_), Some(_)) => Err(Error::Input(
                "give either --family or --graph6, not both".into(),
            )),
            (None, Some(g6)) => Ok((from_graph6(g6)?, format!("graph6:{g6}"))),
            (Some(name), None) => {
                let spec = self.family_spec(name)?;
                Ok((make_family(spec)?, describe_spec(&spec)))
            }
            (None, None) => Err(Error::Input("missing --family or --graph6".into())),
        }
    }

    fn family_spec(&self, name: &str) -> Result<FamilySpec, Error> {
        let need_n = || {
            self.n
                .ok_or_else(|| Error::Input(format!("--family {name} needs --n")))
        };
        match name {
            "path" => Ok(FamilySpec::Path { n: need_n()? }),
            "cycle" => Ok(FamilySpec::Cycle { n: need_n()? }),
            "star" => Ok(FamilySpec::Star { total: need_n()? }),
            "fan" => Ok(FamilySpec::Fan { rim: need_n()? }),
            "wheel" => Ok(FamilySpec::Wheel { rim: need_n()? }),
            "complete" => Ok(FamilySpec::Complete { n: need_n()? }),
            "grid" => {
                let rows = self
                    .rows
                    .ok_or_else(|| Error::Input("--family grid needs --rows".into()))?;
                let cols = self
                    .cols
                    .ok_or_else(|| Error::Input("--family grid needs --cols".into()))?;
                Ok(FamilySpec::Grid { rows, cols })
            }
            other => Err(Error::Input(format!("unknown family {other:?}"))),
        }
    }
}

fn describe_spec(spec: &FamilySpec) -> String {
    match *spec {
        FamilySpec::Path { n } => format!("P_{n}"),
        FamilySpec::Cycle { n } => format!("C_{n}"),
        FamilySpec::Star { total } => format!("K_{{1,{}}}", total - 1),
        FamilySpec::Fan { rim } => format!("A_{{1,{rim}}}"),
        FamilySpec::Wheel { rim } => format!("W_{{1,{rim}}}"),
        FamilySpec::Complete { n } => format!("K_{n}"),
        FamilySpec::Grid { rows, cols } => format!("G_{{{rows},{cols}}}"),
    }
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Token count; the output is F_k of the base graph
    #[arg(long)]
    k: usize,
    /// Write the token graph as DOT (token vertices labeled as subsets)
    #[arg(long, value_name = "PATH")]
    dot: Option<String>,
    /// Write the token graph as graph6
    #[arg(long, value_name = "PATH")]
    graph6_out: Option<String>,
}

#[derive(Args)]
struct AutArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Token count; without it the base graph itself is analyzed
    #[arg(long)]
    k: Option<usize>,
    /// Explore top-level search branches concurrently
    #[arg(long)]
    parallel: bool,
    /// Include wall-clock timings in the JSON (off by default so reports
    /// are byte-identical)
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id: thm-cycle, prop-cycle-structure, thm-star, thm-fan,
    /// thm-wheel, thm-path, thm-johnson, grid-counterexample, conj-cycle,
    /// conj-star, conj-fan, conj-wheel, conj-path
    #[arg(long, conflicts_with = "all")]
    claim: Option<String>,
    /// Run the whole default suite
    #[arg(long)]
    all: bool,
    /// Parameter range for n: N, A..B, or A..=B (both inclusive)
    #[arg(long)]
    n: Option<String>,
    /// Parameter range for k
    #[arg(long)]
    k: Option<String>,
    /// Skip instances whose token graph would exceed this many vertices
    #[arg(long, value_name = "N")]
    max_size: Option<usize>,
    /// Include per-verdict runtimes in the JSON
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct DistanceArgs {
    /// Path length (the base graph is P_n)
    #[arg(long)]
    n: usize,
    /// Token count
    #[arg(long)]
    k: usize,
    /// First token vertex, comma-separated 1-based labels
    #[arg(long)]
    u: String,
    /// Second token vertex
    #[arg(long)]
    v: String,
    /// Also run BFS on F_k(P_n) and assert it matches the formula
    #[arg(long)]
    oracle: bool,
}

/// Run facts echoed into every JSON report.
#[derive(Serialize)]
struct RunManifest {
    command: String,
    flags: BTreeMap<String, String>,
    determinism: &'static str,
    outputs: Vec<String>,
}

impl RunManifest {
    fn new(command: &str) -> Self {
        RunManifest {
            command: command.to_string(),
            flags: BTreeMap::new(),
            determinism: "seed-free; identical invocations produce byte-identical reports",
            outputs: Vec::new(),
        }
    }

    fn flag(mut self, key: &str, value: impl ToString) -> Self {
        self.flags.insert(key.to_string(), value.to_string());
        self
    }

    fn flag_opt(self, key: &str, value: Option<impl ToString>) -> Self {
        match value {
            Some(v) => self.flag(key, v),
            None => self,
        }
    }
}

fn capacity_from_env() -> Result<usize, Error> {
    match std::env::var(CAPACITY_ENV) {
        Ok(s) => s
            .parse::<usize>()
            .map_err(|_| Error::Input(format!("{CAPACITY_ENV} must be an integer, got {s:?}"))),
        Err(_) => Ok(MAX_VERTICES),
    }
}

/// Inclusive range syntax: `7`, `3..12`, or `3..=12`.
fn parse_range(s: &str) -> Result<RangeInclusive<usize>, Error> {
    let bad = || Error::Input(format!("bad range {s:?}; use N, A..B, or A..=B (inclusive)"));
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let lo: usize = a.trim().parse().map_err(|_| bad())?;
        let hi: usize = b.trim().parse().map_err(|_| bad())?;
        if lo > hi {
            return Err(bad());
        }
        Ok(lo..=hi)
    } else {
        let v: usize = s.trim().parse().map_err(|_| bad())?;
        Ok(v..=v)
    }
}

fn parse_labels(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::Input(format!("bad label {part:?}")))
        })
        .collect()
}

fn cmd_build(args: &BuildArgs) -> Result<(), Error> {
    let capacity = capacity_from_env()?;
    let (base, desc) = args.input.resolve()?;
    let tg = TokenGraph::with_capacity(&base, args.k, capacity)?;
    let g = tg.graph();
    println!(
        "base: {desc}  (|V|={}, |E|={})",
        base.vertex_count(),
        base.edge_count()
    );
    println!("token graph: F_{}({desc})", args.k);
    println!("vertices: {}", g.vertex_count());
    println!("edges: {}", g.edge_count());
    let hist: Vec<String> = g
        .degree_histogram()
        .iter()
        .map(|(d, c)| format!("{d}:{c}"))
        .collect();
    println!("degree histogram: {}", hist.join(" "));
    if let Some(path) = &args.dot {
        std::fs::write(path, to_dot(g, Some(&tg.labels())))
            .map_err(|e| Error::Input(format!("cannot write {path}: {e}")))?;
        println!("wrote DOT: {path}");
    }
    if let Some(path) = &args.graph6_out {
        std::fs::write(path, format!("{}\n", to_graph6(g)))
            .map_err(|e| Error::Input(format!("cannot write {path}: {e}")))?;
        println!("wrote graph6: {path}");
    }
    Ok(())
}

#[derive(Serialize)]
struct AutOutput {
    manifest: RunManifest,
    graph: String,
    report: AutReport,
}

fn cmd_aut(args: &AutArgs) -> Result<(), Error> {
    let capacity = capacity_from_env()?;
    let (base, desc) = args.input.resolve()?;
    let cfg = SearchConfig {
        parallel: args.parallel,
        ..Default::default()
    };
    let (graph, label) = match args.k {
        Some(k) => {
            let tg = TokenGraph::with_capacity(&base, k, capacity)?;
            (tg.graph().clone(), format!("F_{k}({desc})"))
        }
        None => (base, desc),
    };
    let started = std::time::Instant::now();
    let group = find_automorphism_group(&graph, &cfg)?;
    let wall = args.timings.then(|| started.elapsed().as_millis() as u64);
    let report = AutReport::new(&graph, &group, wall);
    let manifest = RunManifest::new("aut")
        .flag("input", &label)
        .flag("parallel", args.parallel)
        .flag_opt("k", args.k);
    let out = AutOutput {
        manifest,
        graph: label,
        report,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&out).expect("report serializes")
    );
    Ok(())
}

fn sweep<F>(n_range: RangeInclusive<usize>, mut run: F) -> Result<Vec<Verdict>, Error>
where
    F: FnMut(usize) -> Result<Vec<Verdict>, Error>,
{
    let mut out = Vec::new();
    for n in n_range {
        out.extend(run(n)?);
    }
    Ok(out)
}

fn run_claim(args: &VerifyArgs, ctx: &CheckContext) -> Result<Vec<Verdict>, Error> {
    let claim = args.claim.as_deref().unwrap_or("all");
    let n_range = |default: RangeInclusive<usize>| -> Result<RangeInclusive<usize>, Error> {
        match &args.n {
            Some(s) => parse_range(s),
            None => Ok(default),
        }
    };
    let k_range = |default: RangeInclusive<usize>| -> Result<RangeInclusive<usize>, Error> {
        match &args.k {
            Some(s) => parse_range(s),
            None => Ok(default),
        }
    };

    let conj = |family: ConjectureFamily| -> Result<Vec<Verdict>, Error> {
        let mut out = Vec::new();
        for n in n_range(6..=8)? {
            for k in k_range(3..=(n / 2).max(3))? {
                out.push(check_conjecture(family, n, k, ctx)?);
            }
        }
        Ok(out)
    };

    match claim {
        "all" => {
            let mut verdicts = tokenaut::theorems::run_default_suite(ctx)?;
            verdicts.retain(|v| v.claim_id != "capacity");
            Ok(verdicts)
        }
        "thm-cycle" => sweep(n_range(3..=14)?, |n| Ok(vec![check_cycle_theorem(n, ctx)?])),
        "prop-cycle-structure" => sweep(n_range(3..=12)?, |n| check_cycle_structure(n, ctx)),
        "thm-star" => sweep(n_range(3..=9)?, |n| Ok(vec![check_star_theorem(n, ctx)?])),
        "thm-fan" => sweep(n_range(3..=10)?, |n| Ok(vec![check_fan_theorem(n, ctx)?])),
        "thm-wheel" => sweep(n_range(3..=10)?, |n| Ok(vec![check_wheel_theorem(n, ctx)?])),
        "thm-path" => {
            let mut out = Vec::new();
            for n in n_range(2..=10)? {
                for k in k_range(1..=n.saturating_sub(1))? {
                    if (1..n).contains(&k) {
                        out.push(check_path_theorem(n, k, ctx)?);
                    }
                }
            }
            Ok(out)
        }
        "thm-johnson" => {
            if args.n.is_none() && args.k.is_none() {
                let mut out = Vec::new();
                for (n, k) in [(4, 2), (5, 2), (6, 2), (6, 3), (7, 3)] {
                    out.push(check_johnson(n, k, ctx)?);
                }
                Ok(out)
            } else {
                let mut out = Vec::new();
                for n in n_range(4..=7)? {
                    for k in k_range(2..=n.saturating_sub(2))? {
                        if (2..=n.saturating_sub(2)).contains(&k) {
                            out.push(check_johnson(n, k, ctx)?);
                        }
                    }
                }
                Ok(out)
            }
        }
        "grid-counterexample" => Ok(vec![check_grid_counterexample(ctx)?]),
        "conj-cycle" => conj(ConjectureFamily::Cycle),
        "conj-star" => conj(ConjectureFamily::Star),
        "conj-fan" => conj(ConjectureFamily::Fan),
        "conj-wheel" => conj(ConjectureFamily::Wheel),
        "conj-path" => conj(ConjectureFamily::Path),
        other => Err(Error::Input(format!(
            "unknown claim {other:?}; see --help for the claim list"
        ))),
    }
}

#[derive(Serialize)]
struct VerifyOutput {
    manifest: RunManifest,
    summary: BTreeMap<String, usize>,
    theorem_refutations: usize,
    verdicts: Vec<Verdict>,
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, Error> {
    if args.claim.is_none() && !args.all {
        return Err(Error::Input("give --claim <id> or --all".into()));
    }
    let capacity = match args.max_size {
        Some(m) => m,
        None => capacity_from_env()?,
    };
    let ctx = CheckContext {
        capacity,
        cfg: SearchConfig::default(),
    };
    let mut verdicts = run_claim(args, &ctx)?;
    if !args.timings {
        for v in &mut verdicts {
            v.runtime_ms = None;
        }
    }

    let mut summary: BTreeMap<String, usize> = BTreeMap::new();
    for v in &verdicts {
        *summary.entry(v.label.clone()).or_insert(0) += 1;
    }
    let refutations = verdicts.iter().filter(|v| v.is_refuted_theorem()).count();

    let manifest = RunManifest::new("verify")
        .flag_opt("claim", args.claim.as_ref())
        .flag("all", args.all)
        .flag_opt("n", args.n.as_ref())
        .flag_opt("k", args.k.as_ref())
        .flag("max_size", capacity);
    let out = VerifyOutput {
        manifest,
        summary,
        theorem_refutations: refutations,
        verdicts,
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&out).expect("report serializes")
    );

    // human-readable table on stderr, one line per verdict
    for v in &out.verdicts {
        eprintln!("{}", v.summary_line());
    }
    eprintln!(
        "summary: {} verdicts, {} theorem refutation(s)",
        out.verdicts.len(),
        refutations
    );
    Ok(if refutations > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_distance(args: &DistanceArgs) -> Result<(), Error> {
    let capacity = capacity_from_env()?;
    let u = SortedTuple::new(&parse_labels(&args.u)?, args.n)?;
    let v = SortedTuple::new(&parse_labels(&args.v)?, args.n)?;
    if u.k() != args.k || v.k() != args.k {
        return Err(Error::Input(format!(
            "tuples must have k={} labels, got {} and {}",
            args.k,
            u.k(),
            v.k()
        )));
    }
    let formula = token_path_distance(&u, &v)?;
    println!("distance: {formula}");
    if args.oracle {
        let base = make_family(FamilySpec::Path { n: args.n })?;
        let tg = TokenGraph::with_capacity(&base, args.k, capacity)?;
        let a = tg.rank_of_labels(u.values())?;
        let b = tg.rank_of_labels(v.values())?;
        let bfs = bfs_distance(&tg, a, b)?;
        if bfs != formula {
            return Err(Error::Input(format!(
                "oracle mismatch: formula {formula}, BFS {bfs}"
            )));
        }
        println!("oracle: agree (BFS = {bfs})");
    }
    Ok(())
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::Capacity(_) => ExitCode::from(3),
        _ => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<ExitCode, Error> = match &cli.command {
        Command::Build(args) => cmd_build(args).map(|()| ExitCode::SUCCESS),
        Command::Aut(args) => cmd_aut(args).map(|()| ExitCode::SUCCESS),
        Command::Verify(args) => cmd_verify(args),
        Command::Distance(args) => cmd_distance(args).map(|()| ExitCode::SUCCESS),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}
