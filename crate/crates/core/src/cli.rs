//! The `majq` command line.
//!
//! Every subcommand prints a short human-readable report, or JSON with
//! `--json`. Graph arguments accept a file in the edge-list format or an
//! instance spec such as `path:15` or `random-tree:25:7`.

use std::io::{BufRead, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::adversary::{
    eventrees_coloring, CoveringAdversary, Lefogo2Adversary, TreeLemmaAdversary,
};
use crate::bounds::{
    best_lower_bound, certify_lower_bound, count_balanced, dectree_bound, is_hard, mu,
};
use crate::constructions::{build_minedge_graph, verify_querier, MinedgeQuerier};
use crate::error::{Error, Result};
use crate::generate::InstanceSpec;
use crate::graph::{Coloring, Graph};
use crate::nondet::{self, m_nd_witness, nondet_query_set_with_case, path_cert};
use crate::solver::{
    forced_search, GraphSolver, KeyMode, OptimalAdversary, OptimalQuerier, DEFAULT_TABLE_CAP,
};
use crate::state::{Answer, QueryState};
use crate::strategy::{
    play, Adversary, ColoringAdversary, OrderQuerier, Querier, RandomQuerier, Transcript,
};
use crate::suite::{run_suite, Suite};
use crate::weighted::{WeightVector, WeightedSolver};

#[derive(Debug, Parser)]
#[command(
    name = "majq",
    version,
    about = "Majority-query game solver and toolkit"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for parallel searches.
    #[arg(long, global = true, env = "MAJQ_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact value of the weighted-ball game, e.g. `3,3,7,8,9`.
    SolveWeighted { weights: WeightVector },
    /// Exact value of the game on a graph.
    SolveGraph {
        graph: String,
        #[arg(long, value_enum)]
        canonical: Option<Canonical>,
        #[arg(long, default_value_t = DEFAULT_TABLE_CAP)]
        table_cap: usize,
        /// Also print an optimal play against the optimal adversary.
        #[arg(long)]
        transcript: bool,
    },
    /// Counting bounds for a weight vector.
    Bounds { weights: WeightVector },
    /// Every lower-bound certificate that applies to a weight vector.
    Certify { weights: WeightVector },
    /// Play an adversary strategy against a querier.
    Adversary(AdversaryArgs),
    /// Sparse graphs with the smallest possible query count.
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        n: usize,
        #[arg(long, value_enum, default_value_t = Emit::Graph)]
        emit: Emit,
    },
    /// Check a transcript, or check a querier on every answer sequence.
    Verify {
        graph: String,
        /// Transcript file; without one, the querier is checked exhaustively.
        transcript: Option<String>,
        #[arg(long, value_enum, default_value_t = QuerierKind::Optimal)]
        querier: QuerierKind,
        /// Query budget; defaults to the exact value of the graph.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Non-deterministic (certificate) complexity.
    #[command(subcommand)]
    Nondet(NondetCommand),
    /// Print the graphs of an instance spec.
    Generate { spec: InstanceSpec },
    /// Type queries `u v` against an adversary and watch the weights.
    Play(PlayArgs),
    /// Run a named batch of checks; exits nonzero on any failure.
    RunSuite {
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Canonical {
    Path,
    Generic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ConstructKind {
    Minedge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Graph,
    Strategy,
    Verify,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum QuerierKind {
    Optimal,
    Spanning,
    Minedge,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum AdversaryName {
    Treelemma,
    Eventrees,
    Lefogo1,
    Lefogo2,
    Oddpath,
}

#[derive(Debug, Args)]
pub struct StrategyArgs {
    #[arg(value_enum)]
    pub name: AdversaryName,
    pub graph: String,
    /// Band width for the odd-path adversary.
    #[arg(long, default_value_t = 8)]
    pub stride: usize,
    /// Part size for the odd-tree adversary.
    #[arg(long, default_value_t = crate::adversary::LEFOGO2_P)]
    pub p: usize,
    /// Cover set for lefogo1, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub cover: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct AdversaryArgs {
    #[command(flatten)]
    pub strategy: StrategyArgs,
    /// `optimal`, `spanning` or `random:<seed>`.
    #[arg(long, default_value = "optimal")]
    pub vs: String,
    /// Instead of one play, find the fewest queries any querier needs.
    #[arg(long)]
    pub forced: bool,
}

#[derive(Debug, Args)]
pub struct PlayArgs {
    #[command(flatten)]
    pub strategy: StrategyArgs,
}

#[derive(Debug, Subcommand)]
pub enum NondetCommand {
    /// Smallest certificate for one coloring.
    Cert { graph: String, coloring: Coloring },
    /// Largest smallest certificate over all colorings.
    Mnd { graph: String },
    /// TSV of n, m_nd(P_n) and the gap for odd paths.
    PathTable {
        #[arg(long, default_value = "3..13")]
        odd_n: String,
    },
    /// Explicit certifying query set for a path coloring.
    QuerySet { coloring: Coloring },
}

/// Parses the arguments, runs the command and returns the exit code.
pub fn run<I, T>(args: I, input: &mut dyn BufRead, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(out, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    match execute(&cli, input, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            1
        }
    }
}

/// Entry point of the `majq` binary.
pub fn main() {
    let stdin = std::io::stdin();
    let mut input = stdin.lock();
    let mut out = std::io::stdout();
    let code = run(std::env::args_os(), &mut input, &mut out);
    let _ = out.flush();
    std::process::exit(code);
}

/// Reads the graphs of a file path or an instance spec.
pub fn load_graphs(arg: &str) -> Result<Vec<Graph>> {
    if Path::new(arg).is_file() {
        return InstanceSpec::File(arg.to_string()).generate();
    }
    arg.parse::<InstanceSpec>()?.generate()
}

/// As [`load_graphs`], requiring exactly one graph.
pub fn load_graph(arg: &str) -> Result<Graph> {
    let mut graphs = load_graphs(arg)?;
    match graphs.len() {
        1 => Ok(graphs.remove(0)),
        k => Err(Error::InvalidArgument(format!(
            "{arg} names {k} graphs, expected one"
        ))),
    }
}

fn io(e: std::io::Error) -> Error {
    Error::InvalidArgument(format!("i/o: {e}"))
}

fn emit_json(out: &mut dyn Write, v: &impl Serialize) -> Result<()> {
    writeln!(out, "{}", serde_json::to_string(v).expect("plain data")).map_err(io)
}

fn build_adversary(a: &StrategyArgs, g: &Graph) -> Result<Box<dyn Adversary>> {
    Ok(match a.name {
        AdversaryName::Treelemma => Box::new(TreeLemmaAdversary::new(g)),
        AdversaryName::Eventrees => Box::new(ColoringAdversary::new(eventrees_coloring(g)?)),
        AdversaryName::Lefogo1 => {
            if a.cover.is_empty() {
                return Err(Error::InvalidArgument("lefogo1 needs --cover".into()));
            }
            Box::new(CoveringAdversary::lefogo1(g, &a.cover)?)
        }
        AdversaryName::Lefogo2 => Box::new(Lefogo2Adversary::with_p(g, a.p)?),
        AdversaryName::Oddpath => {
            if *g != Graph::path(g.n()) {
                return Err(Error::InvalidArgument("oddpath needs a path graph".into()));
            }
            Box::new(CoveringAdversary::oddpath(g.n(), a.stride)?)
        }
    })
}

fn build_querier(vs: &str, g: &Graph) -> Result<Box<dyn Querier>> {
    Ok(match vs {
        "optimal" => Box::new(OptimalQuerier::new(g)?),
        "spanning" => Box::new(OrderQuerier::spanning(g)),
        "minedge" => Box::new(MinedgeQuerier::for_graph(g)?),
        _ => match vs.strip_prefix("random:").map(str::parse::<u64>) {
            Some(Ok(seed)) => Box::new(RandomQuerier::new(g, seed)),
            _ => return Err(Error::InvalidArgument(format!("unknown querier {vs:?}"))),
        },
    })
}

fn transcript_json(t: &Transcript) -> serde_json::Value {
    let steps: Vec<_> = t
        .steps
        .iter()
        .map(|((u, v), a)| json!({"u": u, "v": v, "answer": a.as_str()}))
        .collect();
    json!({"steps": steps, "outcome": t.outcome.to_string()})
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let bad = || Error::Parse(format!("bad range {s:?}, expected a..b"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let b = b.strip_prefix('=').unwrap_or(b);
    Ok(a.parse().map_err(|_| bad())?..=b.parse().map_err(|_| bad())?)
}

fn execute(cli: &Cli, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    let json = cli.json;
    match &cli.command {
        Command::SolveWeighted { weights } => {
            let mut s = WeightedSolver::new();
            let value = s.value(weights);
            let query = s.optimal_query(weights);
            if json {
                emit_json(
                    out,
                    &json!({"weights": weights, "value": value, "first_query": query}),
                )?;
            } else {
                writeln!(out, "m({weights}) = {value}").map_err(io)?;
                if let Some((i, j)) = query {
                    writeln!(out, "first query: balls {i} and {j}").map_err(io)?;
                }
            }
        }
        Command::SolveGraph {
            graph,
            canonical,
            table_cap,
            transcript,
        } => {
            for g in load_graphs(graph)? {
                let mut s = match canonical {
                    None => GraphSolver::new(&g)?,
                    Some(Canonical::Path) => GraphSolver::with_mode(&g, KeyMode::Path)?,
                    Some(Canonical::Generic) => GraphSolver::with_mode(&g, KeyMode::Generic)?,
                };
                s.set_table_cap(*table_cap);
                let report = s.report();
                let t = if *transcript {
                    let mut q = OptimalQuerier::from_solver(s);
                    let mut a = OptimalAdversary::sharing(&q);
                    Some(play(&g, &mut q, &mut a)?)
                } else {
                    None
                };
                if json {
                    let mut v = serde_json::to_value(&report).expect("plain data");
                    if let Some(t) = &t {
                        v["transcript"] = transcript_json(t);
                    }
                    emit_json(out, &v)?;
                } else {
                    writeln!(
                        out,
                        "n={} m={} value={} nodes_expanded={} runtime_ms={}",
                        report.n, report.m, report.value, report.nodes_expanded, report.runtime_ms
                    )
                    .map_err(io)?;
                    if let Some(t) = &t {
                        write!(out, "{t}").map_err(io)?;
                    }
                }
            }
        }
        Command::Bounds { weights } => {
            let count = count_balanced(weights);
            let valuation = mu(&count);
            let d = dectree_bound(weights);
            let best = best_lower_bound(weights);
            let hard = is_hard(weights);
            if json {
                emit_json(
                    out,
                    &json!({
                        "weights": weights,
                        "balanced_colorings": count.to_string(),
                        "mu": valuation,
                        "dectree_bound": d,
                        "best_lower_bound": best,
                        "upper_bound": weights.trivial_upper_bound(),
                        "hard": hard,
                    }),
                )?;
            } else {
                writeln!(out, "weights            {weights}").map_err(io)?;
                writeln!(out, "balanced colorings {count} (mu = {valuation})").map_err(io)?;
                writeln!(out, "counting bound     {} ({})", d.bound, d.source).map_err(io)?;
                writeln!(out, "best lower bound   {best}").map_err(io)?;
                writeln!(out, "upper bound        {}", weights.trivial_upper_bound())
                    .map_err(io)?;
                writeln!(out, "hard               {hard}").map_err(io)?;
            }
        }
        Command::Certify { weights } => {
            for c in certify_lower_bound(weights) {
                if json {
                    emit_json(out, &c)?;
                } else {
                    let w = serde_json::to_string(&c.witness).expect("plain data");
                    writeln!(out, "{:>3}  {:<14} {w}", c.bound, c.source.to_string())
                        .map_err(io)?;
                }
            }
        }
        Command::Adversary(a) => {
            let g = load_graph(&a.strategy.graph)?;
            let adv = build_adversary(&a.strategy, &g)?;
            if a.forced {
                let r = forced_search(&g, adv.as_ref())?;
                if json {
                    emit_json(out, &r)?;
                } else {
                    writeln!(
                        out,
                        "forced queries {} over {} positions",
                        r.value, r.positions
                    )
                    .map_err(io)?;
                    report_violations(out, &r.violations)?;
                }
                return Ok(i32::from(!r.violations.is_empty()));
            }
            let mut q = build_querier(&a.vs, &g)?;
            let mut adv = adv;
            let t = play(&g, q.as_mut(), adv.as_mut())?;
            let violations = adv.violations().to_vec();
            if json {
                emit_json(
                    out,
                    &json!({"transcript": transcript_json(&t), "queries": t.len(), "violations": violations}),
                )?;
            } else {
                write!(out, "{t}").map_err(io)?;
                writeln!(out, "queries {}", t.len()).map_err(io)?;
                report_violations(out, &violations)?;
            }
            return Ok(i32::from(!violations.is_empty()));
        }
        Command::Construct {
            kind: ConstructKind::Minedge,
            n,
            emit,
        } => {
            let c = build_minedge_graph(*n)?;
            match emit {
                Emit::Graph if json => emit_json(out, &c)?,
                Emit::Graph => write!(out, "{}", c.graph.to_text()).map_err(io)?,
                Emit::Strategy => {
                    let mut q = MinedgeQuerier::new(&c);
                    let mut a = crate::strategy::ConstantAdversary(Answer::Same);
                    let t = play(&c.graph, &mut q, &mut a)?;
                    if json {
                        emit_json(
                            out,
                            &json!({"answers": "SAME", "transcript": transcript_json(&t)}),
                        )?;
                    } else {
                        write!(out, "{t}").map_err(io)?;
                    }
                }
                Emit::Verify => {
                    let budget = n - crate::bounds::b(*n as u64) as usize;
                    let r = verify_querier(&c.graph, &MinedgeQuerier::new(&c), budget)?;
                    let v = json!({
                        "max_queries": r.max_queries,
                        "budget": r.budget,
                        "pass": r.pass,
                        "leaves_checked": r.leaves_checked,
                    });
                    if json {
                        emit_json(out, &v)?;
                    } else {
                        writeln!(out, "{v}").map_err(io)?;
                        if let Some(f) = &r.failure {
                            writeln!(out, "failure: {f}").map_err(io)?;
                        }
                    }
                    return Ok(i32::from(!r.pass));
                }
            }
        }
        Command::Verify {
            graph,
            transcript,
            querier,
            budget,
        } => {
            let g = load_graph(graph)?;
            if let Some(path) = transcript {
                let text = std::fs::read_to_string(path).map_err(io)?;
                let t: Transcript = text.parse()?;
                let res = t.replay(&g);
                let ok = res.is_ok();
                if json {
                    emit_json(
                        out,
                        &json!({"queries": t.len(), "valid": ok, "error": res.err().map(|e| e.to_string())}),
                    )?;
                } else {
                    match res {
                        Ok(_) => writeln!(out, "valid transcript, {} queries", t.len()),
                        Err(e) => writeln!(out, "invalid transcript: {e}"),
                    }
                    .map_err(io)?;
                }
                return Ok(i32::from(!ok));
            }
            let name = match querier {
                QuerierKind::Optimal => "optimal",
                QuerierKind::Spanning => "spanning",
                QuerierKind::Minedge => "minedge",
            };
            let q = build_querier(name, &g)?;
            let budget = match budget {
                Some(b) => *b,
                None => GraphSolver::new(&g)?.solve() as usize,
            };
            let r = verify_querier(&g, q.as_ref(), budget)?;
            if json {
                emit_json(out, &r)?;
            } else {
                writeln!(
                    out,
                    "{}: worst case {} queries, budget {budget}, {} leaves checked",
                    if r.pass { "pass" } else { "FAIL" },
                    r.max_queries,
                    r.leaves_checked
                )
                .map_err(io)?;
                if let Some(f) = &r.failure {
                    writeln!(out, "failure: {f}").map_err(io)?;
                }
            }
            return Ok(i32::from(!r.pass));
        }
        Command::Nondet(cmd) => nondet_command(cmd, json, out)?,
        Command::Generate { spec } => {
            let graphs = spec.generate()?;
            for (i, g) in graphs.iter().enumerate() {
                if json {
                    emit_json(out, g)?;
                } else {
                    if i > 0 {
                        writeln!(out).map_err(io)?;
                    }
                    write!(out, "{}", g.to_text()).map_err(io)?;
                }
            }
        }
        Command::Play(p) => return repl(p, json, input, out),
        Command::RunSuite { suite, seed } => {
            let r = run_suite(*suite, *seed);
            if json {
                write!(out, "{}", r.json_lines()).map_err(io)?;
            } else {
                write!(out, "{}", r.table()).map_err(io)?;
            }
            return Ok(i32::from(!r.ok()));
        }
    }
    Ok(0)
}

fn report_violations(out: &mut dyn Write, v: &[String]) -> Result<()> {
    if v.is_empty() {
        writeln!(out, "invariant violations: none").map_err(io)
    } else {
        writeln!(out, "invariant violations: {}", v.len()).map_err(io)?;
        for x in v {
            writeln!(out, "  {x}").map_err(io)?;
        }
        Ok(())
    }
}

fn nondet_command(cmd: &NondetCommand, json: bool, out: &mut dyn Write) -> Result<()> {
    match cmd {
        NondetCommand::Cert { graph, coloring } => {
            let g = load_graph(graph)?;
            coloring.check_len(g.n())?;
            let r = if g.edge_count() > nondet::CERT_MAX_EDGES && g == Graph::path(g.n()) {
                path_cert(coloring)?
            } else {
                nondet::cert(&g, coloring)?
            };
            if json {
                emit_json(out, &r)?;
            } else {
                writeln!(out, "certificate size {} ({})", r.size, r.outcome).map_err(io)?;
                let qs: Vec<String> = r.queries.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                writeln!(out, "queries {}", qs.join(" ")).map_err(io)?;
            }
        }
        NondetCommand::Mnd { graph } => {
            let g = load_graph(graph)?;
            let (v, c) = m_nd_witness(&g)?;
            if json {
                emit_json(
                    out,
                    &json!({"n": g.n(), "m_nd": v, "witness": c.to_string()}),
                )?;
            } else {
                writeln!(out, "m_nd = {v}, attained by {c}").map_err(io)?;
            }
        }
        NondetCommand::PathTable { odd_n } => {
            let rows: Vec<(usize, usize)> = parse_range(odd_n)?
                .filter(|n| n % 2 == 1)
                .map(|n| m_nd_witness(&Graph::path(n)).map(|(v, _)| (n, v)))
                .collect::<Result<_>>()?;
            if !json {
                writeln!(out, "n\tm_nd\tgap").map_err(io)?;
            }
            for (n, v) in rows {
                if json {
                    emit_json(out, &json!({"n": n, "m_nd": v, "gap": n - v}))?;
                } else {
                    writeln!(out, "{n}\t{v}\t{}", n - v).map_err(io)?;
                }
            }
        }
        NondetCommand::QuerySet { coloring } => {
            let (queries, case) = nondet_query_set_with_case(coloring)?;
            let size = queries.len();
            nondet::certify(&Graph::path(coloring.len()), coloring, queries.clone())?;
            if json {
                emit_json(
                    out,
                    &json!({"case": case, "size": size, "queries": queries}),
                )?;
            } else {
                writeln!(
                    out,
                    "{size} queries ({})",
                    serde_json::to_value(case).expect("enum")
                )
                .map_err(io)?;
                let qs: Vec<String> = queries.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                writeln!(out, "{}", qs.join(" ")).map_err(io)?;
            }
        }
    }
    Ok(())
}

fn repl(p: &PlayArgs, json: bool, input: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    let g = load_graph(&p.strategy.graph)?;
    g.check_solvable()?;
    let mut adv = build_adversary(&p.strategy, &g)?;
    let mut state = QueryState::new(g.n());
    let mut steps = Vec::new();
    if !json {
        writeln!(
            out,
            "{} vertices; type `u v` to compare, `quit` to stop",
            g.n()
        )
        .map_err(io)?;
    }
    let mut line = String::new();
    while state.terminal_outcome().is_none() {
        line.clear();
        if input.read_line(&mut line).map_err(io)? == 0 {
            break;
        }
        let words: Vec<&str> = line.split_whitespace().collect();
        let parsed = match words.as_slice() {
            [] => continue,
            ["quit"] | ["q"] => break,
            [u, v] => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
            _ => None,
        };
        let Some((u, v)) = parsed else {
            writeln!(out, "expected two vertex numbers").map_err(io)?;
            continue;
        };
        let e = crate::graph::edge(u, v);
        let next = adv
            .answer(&state, e)
            .and_then(|a| state.apply_query(&g, e, a).map(|s| (a, s)));
        match next {
            Ok((a, s)) => {
                state = s;
                steps.push((e, a));
                if json {
                    emit_json(
                        out,
                        &json!({"u": e.0, "v": e.1, "answer": a.as_str(), "weights": state.weights()}),
                    )?;
                } else {
                    writeln!(out, "{a}  weights {:?}", state.weights()).map_err(io)?;
                }
            }
            Err(err) => writeln!(out, "rejected: {err}").map_err(io)?,
        }
    }
    match state.terminal_outcome() {
        Some(o) => {
            if json {
                emit_json(
                    out,
                    &json!({"queries": steps.len(), "outcome": o.to_string()}),
                )?;
            } else {
                writeln!(out, "OUTCOME {o} after {} queries", steps.len()).map_err(io)?;
            }
        }
        None if !json => writeln!(out, "stopped after {} queries", steps.len()).map_err(io)?,
        None => {}
    }
    report_violations(out, adv.violations())?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String) {
        let mut out = Vec::new();
        let mut input = stdin.as_bytes();
        let code = run(
            std::iter::once("majq").chain(args.iter().copied()),
            &mut input,
            &mut out,
        );
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn solve_weighted_text_and_json() {
        let (code, text) = call(&["solve-weighted", "3,3,7,8,9"], "");
        assert_eq!(code, 0);
        assert!(text.starts_with("m(9,8,7,3,3) = 4"), "{text}");
        let (_, j) = call(&["--json", "solve-weighted", "1,1,1"], "");
        let v: serde_json::Value = serde_json::from_str(j.trim()).unwrap();
        assert_eq!(v["value"], 1);
    }

    #[test]
    fn solve_graph_reports_fields() {
        let (code, j) = call(
            &["solve-graph", "path:6", "--json", "--canonical", "generic"],
            "",
        );
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(j.trim()).unwrap();
        for k in ["n", "m", "value", "nodes_expanded", "runtime_ms"] {
            assert!(v.get(k).is_some(), "{k} missing in {j}");
        }
        assert_eq!(v["value"], 5);
        assert_eq!(v["m"], 5);
    }

    #[test]
    fn graph_files_are_read() {
        let dir = std::env::temp_dir().join(format!("majq-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("p4.txt");
        std::fs::write(&path, "4 3\n0 1\n1 2\n2 3\n").unwrap();
        let (code, text) = call(&["solve-graph", path.to_str().unwrap()], "");
        assert_eq!(code, 0);
        assert!(text.contains("value=3"), "{text}");
        std::fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn certificates_as_json_records() {
        let (_, j) = call(&["--json", "certify", "3,3,7,8,9"], "");
        let recs: Vec<serde_json::Value> = j
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert!(recs
            .iter()
            .all(|r| r.get("bound").is_some() && r.get("witness").is_some()));
        assert!(recs
            .iter()
            .any(|r| r["source"] == "SULY1FORMA_I" && r["bound"] == 4));
    }

    #[test]
    fn construction_verifies() {
        let (code, j) = call(&["construct", "minedge", "10", "--emit", "verify"], "");
        assert_eq!(code, 0, "{j}");
        let v: serde_json::Value = serde_json::from_str(j.trim()).unwrap();
        assert_eq!(v["pass"], true);
        assert_eq!(v["budget"], 8);
        let (_, g) = call(&["construct", "minedge", "5"], "");
        assert!(g.starts_with("5 "), "{g}");
    }

    #[test]
    fn adversary_play_has_no_violations() {
        let (code, text) = call(
            &["adversary", "treelemma", "path:6", "--vs", "spanning"],
            "",
        );
        assert_eq!(code, 0, "{text}");
        assert!(text.contains("queries 5"), "{text}");
        assert!(text.contains("invariant violations: none"));
        let (code, _) = call(
            &["adversary", "lefogo1", "star:5", "--cover", "0", "--forced"],
            "",
        );
        assert_eq!(code, 0);
    }

    #[test]
    fn nondet_commands() {
        let (_, t) = call(&["nondet", "path-table", "--odd-n", "3..7"], "");
        assert_eq!(t, "n\tm_nd\tgap\n3\t1\t2\n5\t2\t3\n7\t4\t3\n");
        let (_, c) = call(&["--json", "nondet", "cert", "path:5", "RRBRR"], "");
        let v: serde_json::Value = serde_json::from_str(c.trim()).unwrap();
        assert_eq!(v["size"], 2);
        let (code, _) = call(&["nondet", "query-set", "RBRBRRBBRRR"], "");
        assert_eq!(code, 0);
    }

    #[test]
    fn play_reads_queries() {
        let (code, text) = call(
            &["play", "treelemma", "path:4"],
            "0 1\nnonsense\n1 2\n2 3\n",
        );
        assert_eq!(code, 0);
        assert!(text.contains("expected two vertex numbers"));
        assert!(text.contains("OUTCOME"), "{text}");
    }

    #[test]
    fn verify_transcripts_and_queriers() {
        let dir = std::env::temp_dir().join(format!("majq-verify-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let good = dir.join("good.txt");
        std::fs::write(&good, "QUERY 0 1 -> DIFF\nOUTCOME MAJORITY 2\n").unwrap();
        let bad = dir.join("bad.txt");
        std::fs::write(&bad, "QUERY 0 1 -> SAME\nOUTCOME NONE\n").unwrap();
        assert_eq!(call(&["verify", "path:3", good.to_str().unwrap()], "").0, 0);
        assert_eq!(call(&["verify", "path:3", bad.to_str().unwrap()], "").0, 1);
        assert_eq!(call(&["verify", "complete:5"], "").0, 0);
        assert_eq!(
            call(
                &["verify", "path:6", "--querier", "spanning", "--budget", "4"],
                ""
            )
            .0,
            1
        );
        std::fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn generate_and_errors() {
        let (_, t) = call(&["generate", "path:5"], "");
        assert_eq!(t, "5 4\n0 1\n1 2\n2 3\n3 4\n");
        let (_, t) = call(&["--json", "generate", "free-trees:6"], "");
        assert_eq!(t.lines().count(), 6);
        let (_, t) = call(&["solve-graph", "free-trees:6"], "");
        assert_eq!(t.matches("value=5").count(), 6);
        let (code, t) = call(&["nondet", "mnd", "free-trees:6"], "");
        assert_eq!(code, 1);
        assert!(t.starts_with("error:"));
        assert_eq!(call(&["run-suite", "bogus"], "").0, 2);
    }
}
