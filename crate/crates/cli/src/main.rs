mod report;

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use semitotal::blocker::{characterize_ct_with, ct_exact_with, ContractionCertificate, CtVerdict};
use semitotal::classes::{classify_h, is_h_free, poly_dispatch, Verdict};
use semitotal::domination::{is_feasible, solve_with, Budget, DominationKind, SolveOptions};
use semitotal::graph::{encode_graph6, parse_graphs, Graph, PatternGraph, VertexSet};
use semitotal::reductions::{
    reduce_2p3free, reduce_chordal, reduce_clawfree, reduce_tree, validate_reduction_with, SatInstance,
};
use semitotal::verify::{run_suite, Suite, SuiteConfig};
use semitotal::Error;

use report::{Diagnostic, Failure, Inputs, Report, Timing, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, SCHEMA_VERSION};

/// Semitotal domination, edge contraction blockers and hardness gadgets.
///
/// Every command prints one JSON report on stdout. Exit codes: 0 success,
/// 1 usage error, 2 malformed input, 3 failed verification, 4 search budget
/// exceeded. SEMITOTAL_BUDGET sets the search node limit.
#[derive(Parser, Debug)]
#[command(name = "semitotal", version, args_conflicts_with_subcommands = true)]
struct Cli {
    /// Re-validate every certificate in a report written by this tool.
    #[arg(long, value_name = "REPORT")]
    check_certificate: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Args, Debug, Serialize, Default)]
struct GraphInput {
    /// Graph file: graph6 lines or an edge list.
    #[arg(long, value_name = "FILE", conflicts_with = "graph6")]
    #[serde(skip_serializing_if = "Option::is_none")]
    input: Option<PathBuf>,

    /// A single graph in graph6 format.
    #[arg(long, value_name = "STRING")]
    #[serde(skip_serializing_if = "Option::is_none")]
    graph6: Option<String>,
}

impl GraphInput {
    fn given(&self) -> bool {
        self.input.is_some() || self.graph6.is_some()
    }

    /// Reads the graphs from the file, the inline string or stdin.
    fn read(&self, inputs: &mut Inputs) -> Result<Vec<Graph>, Failure> {
        let text = match (&self.input, &self.graph6) {
            (Some(path), _) => read_file(path)?,
            (None, Some(s)) => s.clone(),
            (None, None) => {
                let mut s = String::new();
                std::io::stdin()
                    .read_to_string(&mut s)
                    .map_err(|e| Failure::input(format!("cannot read stdin: {e}")))?;
                s
            }
        };
        inputs.absorb(text.as_bytes());
        let graphs = parse_graphs(&text)?;
        if graphs.is_empty() {
            return Err(Failure::input("no graph in the input"));
        }
        Ok(graphs)
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn parse_kind(s: &str) -> Result<DominationKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(ValueEnum, Clone, Copy, Debug, Serialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum TargetArg {
    Tree,
    Chordal,
    Clawfree,
    #[value(name = "2p3free")]
    #[serde(rename = "2p3free")]
    TwoP3Free,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
enum Command {
    /// Exact domination numbers with an optimal set.
    Solve {
        #[arg(long, value_parser = parse_kind, default_value = "semitotal")]
        kind: DominationKind,
        /// List every optimal set.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        #[serde(flatten)]
        graph: GraphInput,
    },
    /// Fewest edge contractions that lower the parameter, with the edges.
    Blocker {
        #[arg(long, value_parser = parse_kind, default_value = "semitotal")]
        kind: DominationKind,
        #[arg(long, default_value_t = 3)]
        max_k: usize,
        #[command(flatten)]
        #[serde(flatten)]
        graph: GraphInput,
    },
    /// Contraction number for semitotal domination from set structure.
    Characterize {
        #[command(flatten)]
        #[serde(flatten)]
        graph: GraphInput,
    },
    /// Builds a hardness gadget from a graph or a 1-in-3 formula.
    Reduce {
        #[arg(long, value_enum)]
        target: TargetArg,
        /// Number of extra copies for the chordal target.
        #[arg(long, default_value_t = 2)]
        ell: usize,
        /// Formula file for the clawfree and 2p3free targets.
        #[arg(long, value_name = "FILE")]
        sat: Option<PathBuf>,
        /// Also run the validator on each output.
        #[arg(long)]
        validate: bool,
        #[command(flatten)]
        #[serde(flatten)]
        graph: GraphInput,
    },
    /// Complexity of one-edge contraction on H-free graphs.
    Classify {
        #[arg(long, value_name = "NAME")]
        pattern: String,
        /// Graphs to test for H-freeness and, when tractable, to decide.
        #[command(flatten)]
        #[serde(flatten)]
        graph: GraphInput,
    },
    /// Runs a seeded or exhaustive cross-check suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        count: usize,
        /// Exhaustive instead of sampled where that is slow.
        #[arg(long)]
        deep: bool,
        /// Seconds allowed for the claw-free identity.
        #[arg(long, default_value_t = 600)]
        slow_secs: u64,
    },
}

struct Outcome {
    results: Vec<Value>,
    diagnostics: Vec<Diagnostic>,
    exit: u8,
}

impl Outcome {
    fn ok(results: Vec<Value>) -> Self {
        Outcome {
            results,
            diagnostics: Vec::new(),
            exit: EXIT_OK,
        }
    }
}

fn budget() -> Result<Budget, Failure> {
    match std::env::var("SEMITOTAL_BUDGET") {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(Budget::nodes)
            .map_err(|_| Failure::usage(format!("SEMITOTAL_BUDGET must be a node count, got `{v}`"))),
        Err(_) => Ok(Budget::default()),
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn run(cmd: &Command, inputs: &mut Inputs) -> Result<Outcome, Failure> {
    let b = budget()?;
    match cmd {
        Command::Solve { kind, all, graph } => {
            let opts = SolveOptions {
                budget: b,
                all: *all,
                ..SolveOptions::default()
            };
            let mut results = Vec::new();
            for g in graph.read(inputs)? {
                let r = solve_with(&g, *kind, &opts)?;
                let mut v = json!({
                    "graph6": encode_graph6(&g),
                    "kind": kind,
                    "value": r.value,
                    "set": r.witness_set,
                });
                if let Some(all) = r.all_optima {
                    v["all_optima"] = to_value(&all);
                }
                results.push(v);
            }
            Ok(Outcome::ok(results))
        }
        Command::Blocker { kind, max_k, graph } => {
            let mut results = Vec::new();
            for g in graph.read(inputs)? {
                let value = solve_with(&g, *kind, &SolveOptions::with_budget(b))?.value;
                let cert = ct_exact_with(&g, *kind, *max_k, &b)?;
                results.push(json!({
                    "graph6": encode_graph6(&g),
                    "kind": kind,
                    "value": value,
                    "max_k": max_k,
                    "ct": cert.as_ref().map(|c| c.k()),
                    "certificate": cert,
                }));
            }
            Ok(Outcome::ok(results))
        }
        Command::Characterize { graph } => {
            let mut results = Vec::new();
            for g in graph.read(inputs)? {
                let verdict = characterize_ct_with(&g, &b)?;
                let mut v = json!({ "graph6": encode_graph6(&g) });
                if let Value::Object(fields) = to_value(&verdict) {
                    v.as_object_mut().expect("object").extend(fields);
                }
                results.push(v);
            }
            Ok(Outcome::ok(results))
        }
        Command::Reduce {
            target,
            ell,
            sat,
            validate,
            graph,
        } => {
            let outputs = match target {
                TargetArg::Tree | TargetArg::Chordal => {
                    if sat.is_some() {
                        return Err(Failure::usage("--sat applies only to the clawfree and 2p3free targets"));
                    }
                    graph
                        .read(inputs)?
                        .iter()
                        .map(|g| match target {
                            TargetArg::Tree => reduce_tree(g),
                            _ => reduce_chordal(g, *ell),
                        })
                        .collect::<Result<Vec<_>, _>>()?
                }
                TargetArg::Clawfree | TargetArg::TwoP3Free => {
                    let Some(path) = sat else {
                        return Err(Failure::usage("--sat FILE is required for this target"));
                    };
                    if graph.given() {
                        return Err(Failure::usage("this target reads a formula, not a graph"));
                    }
                    let text = read_file(path)?;
                    inputs.absorb(text.as_bytes());
                    let phi: SatInstance = text.parse()?;
                    vec![match target {
                        TargetArg::Clawfree => reduce_clawfree(&phi)?,
                        _ => reduce_2p3free(&phi),
                    }]
                }
            };
            let mut out = Outcome::ok(Vec::new());
            for o in outputs {
                let mut v = json!({
                    "graph6": encode_graph6(&o.graph),
                    "order": o.graph.order(),
                    "size": o.graph.edge_count(),
                    "output": o,
                });
                if *validate {
                    let report = validate_reduction_with(&o, &b);
                    if !report.ok() {
                        out.exit = EXIT_VERIFY;
                        out.diagnostics
                            .push(Diagnostic::error("validation-failed", report.to_string()));
                    }
                    v["validation"] = to_value(&report);
                }
                out.results.push(v);
            }
            Ok(out)
        }
        Command::Classify { pattern, graph } => {
            let h = PatternGraph::parse(pattern)?;
            let class = classify_h(&h);
            let mut v = json!({ "pattern": h.name() });
            if let Value::Object(fields) = to_value(&class) {
                v.as_object_mut().expect("object").extend(fields);
            }
            if graph.given() {
                let mut rows = Vec::new();
                for g in graph.read(inputs)? {
                    let free = is_h_free(&g, &h)?;
                    let decided = if free && class.verdict == Verdict::PolyTime && g.is_connected() {
                        Some(poly_dispatch(&g, &h)?)
                    } else {
                        None
                    };
                    rows.push(json!({
                        "graph6": encode_graph6(&g),
                        "h_free": free,
                        "one_edge_lowers_gamma_t2": decided,
                    }));
                }
                v["graphs"] = Value::Array(rows);
            }
            Ok(Outcome::ok(vec![v]))
        }
        Command::Verify {
            suite,
            max_n,
            seed,
            count,
            deep,
            slow_secs,
        } => {
            if *max_n > 10 {
                return Err(Failure::usage("--max-n above 10 is not supported"));
            }
            let cfg = SuiteConfig {
                max_n: *max_n,
                seed: *seed,
                count: *count,
                budget: b,
                deep: *deep,
                slow_check_time: Duration::from_secs(*slow_secs),
            };
            let r = run_suite(*suite, &cfg);
            let mut out = Outcome::ok(Vec::new());
            if !r.passed() {
                out.exit = EXIT_VERIFY;
                out.diagnostics.push(Diagnostic::error(
                    "suite-failed",
                    format!("{} of {} cases failed", r.failures.len(), r.cases),
                ));
            }
            if !r.skipped.is_empty() {
                out.diagnostics.push(Diagnostic::warning(
                    "scale-limit",
                    format!("{} checks exceeded the search budget", r.skipped.len()),
                ));
            }
            out.results.push(json!({
                "suite": r.suite,
                "passed": r.passed(),
                "cases": r.cases,
                "failures": r.failures,
                "skipped": r.skipped,
                "notes": r.notes,
            }));
            Ok(out)
        }
    }
}

/// Re-validates the certificates of a saved report: optimal sets from
/// `solve`, contraction certificates from `blocker` and verdicts from
/// `characterize`.
fn check_certificates(path: &Path, inputs: &mut Inputs) -> Result<Outcome, Failure> {
    let text = read_file(path)?;
    inputs.absorb(text.as_bytes());
    let report: Value =
        serde_json::from_str(&text).map_err(|e| Failure::input(format!("report is not JSON: {e}")))?;
    let command = report["command"]["name"].as_str().unwrap_or_default().to_string();
    let results = report["results"]
        .as_array()
        .ok_or_else(|| Failure::input("report has no results array"))?;
    let mut out = Outcome::ok(Vec::new());
    for (i, r) in results.iter().enumerate() {
        let g6 = r["graph6"]
            .as_str()
            .ok_or_else(|| Failure::input(format!("result {i} has no graph6 field")))?;
        let g = semitotal::graph::decode_graph6(g6)?;
        let checked = match command.as_str() {
            "solve" => Some(check_solve(&g, r)),
            "blocker" => match &r["certificate"] {
                Value::Null => None,
                c => Some(
                    serde_json::from_value::<ContractionCertificate>(c.clone())
                        .map_err(|e| Error::CertificateRejected(format!("unreadable certificate: {e}")))
                        .and_then(|c| c.validate(&g)),
                ),
            },
            "characterize" => Some(
                serde_json::from_value::<CtVerdict>(r.clone())
                    .map_err(|e| Error::CertificateRejected(format!("unreadable verdict: {e}")))
                    .and_then(|v| v.validate(&g)),
            ),
            other => return Err(Failure::input(format!("`{other}` reports carry no certificates"))),
        };
        let status = match checked {
            None => json!({ "index": i, "graph6": g6, "status": "none" }),
            Some(Ok(())) => json!({ "index": i, "graph6": g6, "status": "valid" }),
            Some(Err(Error::ScaleLimit(m))) => {
                out.diagnostics.push(Diagnostic::warning("scale-limit", format!("result {i}: {m}")));
                json!({ "index": i, "graph6": g6, "status": "skipped", "detail": m })
            }
            Some(Err(e)) => {
                out.exit = EXIT_VERIFY;
                out.diagnostics
                    .push(Diagnostic::error("certificate-rejected", format!("result {i}: {e}")));
                json!({ "index": i, "graph6": g6, "status": "rejected", "detail": e.to_string() })
            }
        };
        out.results.push(status);
    }
    Ok(out)
}

fn check_solve(g: &Graph, r: &Value) -> Result<(), Error> {
    let reject = |m: String| Err(Error::CertificateRejected(m));
    let kind: DominationKind = serde_json::from_value(r["kind"].clone())
        .map_err(|e| Error::CertificateRejected(format!("unreadable kind: {e}")))?;
    let value = r["value"].as_u64().unwrap_or(u64::MAX) as usize;
    let mut sets: Vec<Vec<usize>> = vec![serde_json::from_value(r["set"].clone())
        .map_err(|e| Error::CertificateRejected(format!("unreadable set: {e}")))?];
    if let Some(all) = r.get("all_optima").filter(|a| !a.is_null()) {
        sets.extend(
            serde_json::from_value::<Vec<Vec<usize>>>(all.clone())
                .map_err(|e| Error::CertificateRejected(format!("unreadable optima: {e}")))?,
        );
    }
    for s in sets {
        if s.iter().any(|&v| v >= g.order()) {
            return reject(format!("set {s:?} names a vertex outside the graph"));
        }
        let set = VertexSet::from_iter_with(g.order(), s.iter().copied());
        if set.len() != value || !is_feasible(g, &set, kind)? {
            return reject(format!("{s:?} is not a {kind} dominating set of size {value}"));
        }
    }
    let best = solve_with(g, kind, &SolveOptions::with_budget(budget().unwrap_or_default()))?.value;
    if best != value {
        return reject(format!("claimed optimum {value}, actual {best}"));
    }
    Ok(())
}

fn emit(command: Value, digest: String, outcome: Outcome, start: Instant) -> ExitCode {
    let report = Report {
        schema_version: SCHEMA_VERSION,
        command,
        inputs_digest: digest,
        results: outcome.results,
        diagnostics: outcome.diagnostics,
        timing: Timing {
            elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
        },
    };
    // a closed pipe is not worth a panic
    let _ = writeln!(
        std::io::stdout().lock(),
        "{}",
        serde_json::to_string_pretty(&report).expect("report serializes")
    );
    ExitCode::from(outcome.exit)
}

fn failed(f: Failure) -> Outcome {
    Outcome {
        results: Vec::new(),
        diagnostics: vec![f.diagnostic],
        exit: f.exit,
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::*;
            if matches!(e.kind(), DisplayHelp | DisplayVersion | DisplayHelpOnMissingArgumentOrSubcommand) {
                let _ = e.print();
                return ExitCode::from(if e.kind() == DisplayHelpOnMissingArgumentOrSubcommand {
                    EXIT_USAGE
                } else {
                    EXIT_OK
                });
            }
            eprintln!("{e}");
            let msg = e.kind().to_string();
            return emit(Value::Null, Inputs::default().digest(), failed(Failure::usage(msg)), start);
        }
    };
    let mut inputs = Inputs::default();
    let (command, outcome) = match (&cli.check_certificate, &cli.command) {
        (Some(path), _) => (
            json!({ "name": "check-certificate", "report": path }),
            check_certificates(path, &mut inputs),
        ),
        (None, Some(cmd)) => (to_value(cmd), run(cmd, &mut inputs)),
        (None, None) => (
            Value::Null,
            Err(Failure::usage("expected a subcommand or --check-certificate")),
        ),
    };
    let outcome = outcome.unwrap_or_else(failed);
    emit(command, inputs.digest(), outcome, start)
}
