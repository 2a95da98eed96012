use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tempeuler::exact::{solve_exact, two_trail_cover_exact, SearchStats, SolveOptions, SolveStatus};
use tempeuler::io::{
    gen_random, parse_ddg, parse_dimacs, parse_tg_document, parse_witness, serialize_names_jsonl,
    serialize_tg, serialize_tg_document, serialize_witness, TgDocument, WitnessDocument,
};
use tempeuler::poly::{
    chain_to_walk, orlin_check, solve_dynamic_trail, solve_dynamic_walk, solve_walk_fixed_tau_with, ChainOptions,
};
use tempeuler::reductions::{
    hexagon_ring, lift_localtour_to_localtrail, reduce_3sat_to_walk, reduce_3sat_to_walk_forest,
    reduce_nae3sat_to_localtour, reduce_nae3sat_to_trail, reduce_to_two_trail_cover, ReductionArtifact,
};
use tempeuler::{verify, ProblemVariant, TemporalGraph, TemporalWalk, TimeOrder, WalkKind};

const EXIT_INFEASIBLE: u8 = 1;
const EXIT_BUDGET: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

/// The component-chain search enumerates up to n^(tau-1) handoff sequences.
const CHAIN_WORK_LIMIT: u128 = 1_000_000;

#[derive(Parser)]
#[command(name = "tempeuler", version, about = "Eulerian walks, local trails and trails in temporal graphs")]
struct Cli {
    /// Print a JSON result object on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for solver-internal parallelism.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
    threads: u16,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide an Eulerian problem and optionally write a witness.
    Solve(SolveArgs),
    /// Check a witness file against a graph.
    Verify(VerifyArgs),
    /// Build a hardness-reduction instance from a DIMACS formula.
    Reduce(ReduceArgs),
    /// Decide whether a dynamic digraph has an Eulerian circuit.
    Orlin { input: PathBuf },
    /// Decide whether two trails cover the underlying static graph.
    Cover {
        input: PathBuf,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Write a seeded random temporal graph.
    Gen(GenArgs),
    /// Write a named fixture graph.
    Fixture {
        #[command(subcommand)]
        family: Fixture,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Walk,
    ClosedWalk,
    LocalTrail,
    LocalTour,
    Trail,
    Tour,
}

impl Problem {
    fn kind(self) -> WalkKind {
        match self {
            Problem::Walk => WalkKind::Walk,
            Problem::ClosedWalk => WalkKind::ClosedWalk,
            Problem::LocalTrail => WalkKind::LocalTrail,
            Problem::LocalTour => WalkKind::LocalTour,
            Problem::Trail => WalkKind::Trail,
            Problem::Tour => WalkKind::Tour,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Poly,
    Exact,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    problem: Problem,
    #[arg(long, value_enum, default_value = "auto")]
    method: Method,
    /// Require strictly increasing times.
    #[arg(long)]
    strict: bool,
    /// Only consider walks starting at this vertex.
    #[arg(long)]
    start: Option<usize>,
    /// Override the exact solver's size budget.
    #[arg(long)]
    budget: Option<usize>,
    input: PathBuf,
    #[arg(long)]
    witness: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    problem: Problem,
    #[arg(long)]
    strict: bool,
    input: PathBuf,
    witness: PathBuf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConstructionArg {
    #[value(name = "3sat-walk")]
    SatWalk,
    #[value(name = "nae3sat-localtour")]
    NaeLocalTour,
    #[value(name = "nae3sat-localtrail")]
    NaeLocalTrail,
    #[value(name = "nae3sat-trail")]
    NaeTrail,
    #[value(name = "two-trail-cover")]
    TwoTrailCover,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    construction: ConstructionArg,
    /// Lifetime for the local-trail and trail constructions.
    #[arg(long)]
    tau: Option<u32>,
    /// Start vertex (id or name) of the local-tour instance to lift.
    #[arg(long)]
    pin: Option<String>,
    /// Build the closed variant.
    #[arg(long)]
    closed: bool,
    /// Three-round layout whose odd snapshots are forests.
    #[arg(long)]
    forest: bool,
    input: PathBuf,
    /// Output graph; vertex names go to the same path with extension `names.jsonl`.
    output: PathBuf,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    tau: u32,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Fixture {
    /// Ring of K hexagons sharing consecutive edges.
    Hexring {
        k: usize,
        #[arg(long, default_value_t = 2)]
        tau: u32,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Data(String),
}

type Outcome = Result<u8, Failure>;

fn data(e: impl std::fmt::Display) -> Failure {
    Failure::Data(e.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read_graph(path: &Path) -> Result<TemporalGraph, Failure> {
    let text = read(path)?;
    parse_tg_document(&text)
        .map(|d| d.graph)
        .map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn walk_json(w: &TemporalWalk) -> Value {
    let steps: Vec<[u64; 3]> = w.steps.iter().map(|s| [s.from as u64, s.to as u64, s.time as u64]).collect();
    json!({ "start": w.start, "steps": steps })
}

fn stats_json(s: &SearchStats, started: Instant) -> Value {
    json!({
        "nodes": s.nodes,
        "peak_states": s.peak_states,
        "starts": s.starts,
        "time_ms": started.elapsed().as_secs_f64() * 1000.0,
    })
}

fn exit_for(status: SolveStatus) -> u8 {
    match status {
        SolveStatus::Feasible => 0,
        SolveStatus::Infeasible => EXIT_INFEASIBLE,
        SolveStatus::BudgetExceeded => EXIT_BUDGET,
    }
}

/// Which polynomial algorithm covers a variant on a given graph, if any.
fn poly_method(g: &TemporalGraph, variant: ProblemVariant) -> Option<&'static str> {
    if variant.order == TimeOrder::Strict {
        return None;
    }
    let dynamic = g.is_dynamic_based();
    match variant.kind {
        WalkKind::Walk | WalkKind::ClosedWalk if dynamic => Some("dynamic-walk"),
        WalkKind::Trail | WalkKind::Tour if dynamic => Some("dynamic-trail"),
        WalkKind::Walk => {
            let n = g.vertex_count().max(1) as u128;
            let snapshots = g.active_times().len() as u32;
            let work = n.checked_pow(snapshots.saturating_sub(1)).unwrap_or(u128::MAX);
            (work <= CHAIN_WORK_LIMIT).then_some("component-chain")
        }
        _ => None,
    }
}

fn solve_poly(g: &TemporalGraph, variant: ProblemVariant, method: &str, threads: usize) -> Option<TemporalWalk> {
    let closed = variant.kind.is_closed();
    match method {
        "dynamic-walk" => solve_dynamic_walk(g).expect("checked dynamic-based"),
        "dynamic-trail" => solve_dynamic_trail(g, closed).expect("checked dynamic-based"),
        _ => solve_walk_fixed_tau_with(g, ChainOptions { threads })
            .map(|c| chain_to_walk(g, &c).expect("solver chains are valid")),
    }
}

fn cmd_solve(a: SolveArgs, json_out: bool, threads: usize) -> Outcome {
    let g = read_graph(&a.input)?;
    let order = if a.strict { TimeOrder::Strict } else { TimeOrder::NonDecreasing };
    let variant = ProblemVariant { kind: a.problem.kind(), order };
    if let Some(s) = a.start {
        if s >= g.vertex_count() {
            return Err(Failure::Data(format!("start vertex {s} out of range")));
        }
    }
    let started = Instant::now();
    let poly = poly_method(&g, variant);
    let use_poly = match a.method {
        Method::Exact => false,
        Method::Poly => {
            if a.start.is_some() {
                return Err(Failure::Usage("--start requires --method exact or auto".into()));
            }
            if poly.is_none() {
                return Err(Failure::Data(format!("no polynomial method applies to {} on this graph", variant.kind)));
            }
            true
        }
        Method::Auto => poly.is_some() && a.start.is_none(),
    };

    let (method, status, witness, stats) = if use_poly {
        let method = poly.expect("checked");
        let w = solve_poly(&g, variant, method, threads);
        let status = if w.is_some() { SolveStatus::Feasible } else { SolveStatus::Infeasible };
        (method, status, w, SearchStats::default())
    } else {
        let opts = SolveOptions { start: a.start, budget: a.budget, threads, ..SolveOptions::default() };
        let r = solve_exact(&g, variant, &opts);
        ("exact", r.status, r.witness, r.stats)
    };

    if let Some(w) = &witness {
        if let Err(v) = verify(&g, w, variant) {
            return Err(Failure::Data(format!("internal error: witness failed verification: {v:?}")));
        }
        if let Some(path) = &a.witness {
            write(path, &serialize_witness(&WitnessDocument { variant, walk: w.clone() }))?;
        }
    }

    if json_out {
        let out = json!({
            "v": 1,
            "command": "solve",
            "problem": variant.kind.as_str(),
            "ordering": order.as_str(),
            "method": method,
            "status": status.as_str(),
            "witness": witness.as_ref().map(walk_json),
            "stats": stats_json(&stats, started),
        });
        println!("{out}");
    } else {
        println!("{} ({method})", status.as_str());
        if let (Some(w), None) = (&witness, &a.witness) {
            print!("{}", serialize_witness(&WitnessDocument { variant, walk: w.clone() }));
        }
    }
    Ok(exit_for(status))
}

fn cmd_verify(a: VerifyArgs, json_out: bool) -> Outcome {
    let g = read_graph(&a.input)?;
    let doc = parse_witness(&read(&a.witness)?).map_err(|e| Failure::Data(format!("{}: {e}", a.witness.display())))?;
    let order = if a.strict { TimeOrder::Strict } else { TimeOrder::NonDecreasing };
    let variant = ProblemVariant { kind: a.problem.kind(), order };
    if doc.variant != variant {
        return Err(Failure::Data(format!(
            "witness is for {} {}, not {} {}",
            doc.variant.kind,
            doc.variant.order.as_str(),
            variant.kind,
            order.as_str()
        )));
    }
    let violations = verify(&g, &doc.walk, variant).err().unwrap_or_default();
    if json_out {
        let list: Vec<Value> = violations.iter().map(|v| json!({ "code": v.code.as_str(), "message": v.to_string() })).collect();
        println!("{}", json!({ "v": 1, "command": "verify", "valid": violations.is_empty(), "violations": list }));
    } else if violations.is_empty() {
        println!("valid");
    } else {
        for v in &violations {
            println!("{v}");
        }
    }
    Ok(if violations.is_empty() { 0 } else { EXIT_INFEASIBLE })
}

fn names_path(output: &Path) -> PathBuf {
    output.with_extension("names.jsonl")
}

fn cmd_reduce(a: ReduceArgs, json_out: bool) -> Outcome {
    let formula = parse_dimacs(&read(&a.input)?).map_err(|e| Failure::Data(format!("{}: {e}", a.input.display())))?;
    let need_tau = || a.tau.ok_or_else(|| Failure::Usage("this construction needs --tau".into()));
    let art: ReductionArtifact = match a.construction {
        ConstructionArg::SatWalk if a.forest => reduce_3sat_to_walk_forest(&formula),
        ConstructionArg::SatWalk => reduce_3sat_to_walk(&formula),
        ConstructionArg::NaeLocalTour => reduce_nae3sat_to_localtour(&formula),
        ConstructionArg::NaeLocalTrail => {
            let tau = need_tau()?;
            let pin = a.pin.as_deref().ok_or_else(|| Failure::Usage("nae3sat-localtrail needs --pin".into()))?;
            let base = reduce_nae3sat_to_localtour(&formula).map_err(data)?;
            let s = match pin.parse::<usize>() {
                Ok(id) => id,
                Err(_) => base.vertex(pin).ok_or_else(|| Failure::Data(format!("no vertex named {pin}")))?,
            };
            lift_localtour_to_localtrail(&base, s, tau, a.closed)
        }
        ConstructionArg::NaeTrail => reduce_nae3sat_to_trail(&formula, need_tau()?, a.closed),
        ConstructionArg::TwoTrailCover => reduce_to_two_trail_cover(&formula),
    }
    .map_err(data)?;
    write(&a.output, &serialize_tg(&art.graph))?;
    let names = names_path(&a.output);
    write(&names, &serialize_names_jsonl(&art.names))?;
    let g = &art.graph;
    if json_out {
        println!(
            "{}",
            json!({
                "v": 1,
                "command": "reduce",
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "lifetime": g.lifetime(),
                "graph": a.output.display().to_string(),
                "names": names.display().to_string(),
            })
        );
    } else {
        println!("{} vertices, {} edges, lifetime {}", g.vertex_count(), g.edge_count(), g.lifetime());
    }
    Ok(0)
}

fn cmd_orlin(input: &Path, json_out: bool) -> Outcome {
    let d = parse_ddg(&read(input)?).map_err(|e| Failure::Data(format!("{}: {e}", input.display())))?;
    let result = orlin_check(&d);
    if json_out {
        let out = match &result {
            Ok(()) => json!({ "v": 1, "command": "orlin", "eulerian": true }),
            Err(f) => json!({
                "v": 1,
                "command": "orlin",
                "eulerian": false,
                "condition": f.condition(),
                "reason": f.to_string(),
            }),
        };
        println!("{out}");
    } else {
        match &result {
            Ok(()) => println!("eulerian"),
            Err(f) => println!("not eulerian: {f}"),
        }
    }
    Ok(if result.is_ok() { 0 } else { EXIT_INFEASIBLE })
}

fn cmd_cover(input: &Path, budget: Option<usize>, json_out: bool) -> Outcome {
    let g = read_graph(input)?;
    let started = Instant::now();
    let r = two_trail_cover_exact(&g.base_graph(), budget);
    if json_out {
        let cover = r.cover.as_ref().map(|c| json!({ "first": c.first, "second": c.second }));
        println!(
            "{}",
            json!({
                "v": 1,
                "command": "cover",
                "status": r.status.as_str(),
                "cover": cover,
                "stats": stats_json(&r.stats, started),
            })
        );
    } else {
        println!("{}", r.status.as_str());
        if let Some(c) = &r.cover {
            let line = |t: &[usize]| t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
            println!("{}\n{}", line(&c.first), line(&c.second));
        }
    }
    Ok(exit_for(r.status))
}

fn cmd_gen(a: GenArgs) -> Outcome {
    let g = gen_random(a.n, a.m, a.tau, a.density, a.seed).map_err(data)?;
    emit(a.output.as_deref(), &serialize_tg(&g))?;
    Ok(0)
}

fn cmd_fixture(f: Fixture) -> Outcome {
    match f {
        Fixture::Hexring { k, tau, output } => {
            let (graph, names) =
                hexagon_ring(k, tau).ok_or_else(|| Failure::Usage("hexring needs K >= 3 and --tau >= 1".into()))?;
            emit(output.as_deref(), &serialize_tg_document(&TgDocument { graph, names: Some(names) }))?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let threads = cli.threads as usize;
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a, cli.json, threads),
        Command::Verify(a) => cmd_verify(a, cli.json),
        Command::Reduce(a) => cmd_reduce(a, cli.json),
        Command::Orlin { input } => cmd_orlin(&input, cli.json),
        Command::Cover { input, budget } => cmd_cover(&input, budget, cli.json),
        Command::Gen(a) => cmd_gen(a),
        Command::Fixture { family } => cmd_fixture(family),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DATA)
        }
    }
}
