mod args;

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::Parser;
use hanoi_core::graphs::{classify, enumerate_graphs, strongly_connected_graphs};
use hanoi_core::model::MAX_DISCS;
use hanoi_core::oracle::{
    bfs_distance, conjecture_probe, verify_optimality, GoalPredicate, OracleError, SearchConfig,
    DEFAULT_MAX_STATES,
};
use hanoi_core::recurrence::{conjecture_values, eval_move_counts, q_lengths};
use hanoi_core::report::{ab_table, ab_to_csv, ab_to_json, table_report};
use hanoi_core::solvers::{a_symmetric, classical_solve, directed_move, q_sequence, zeta};
use hanoi_core::verify::{claim_harness, HarnessReport, Suite};
use hanoi_core::{Model, MoveGraph, MoveSequence, Peg, State};
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use args::{
    Cli, Command, ConjectureArgs, Format, GraphsAction, Method, ModelKind, SolveArgs, TableArgs,
    VerifyArgs, VerifySuite,
};

/// Longest sequence `solve` will materialize.
const MAX_MOVES: u64 = 1 << 24;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or flag combination; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// A check or replay failed; exit code 1.
    #[error("verification failed: {0}")]
    Verification(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Oracle(OracleError::TooManyDiscs { .. }) => 2,
            CliError::Verification(_) | CliError::Oracle(_) => 1,
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => solve(&a),
        Command::Table(a) => table(&a),
        Command::Verify(a) => verify(&a),
        Command::Conjecture(a) => conjecture(&a),
        Command::Graphs {
            action: GraphsAction::Enumerate { format },
        } => graphs(format),
    };
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::Verification(report) = &e {
                // the report itself goes to stdout, the verdict to stderr
                print!("{report}");
                eprintln!("error: verification failed");
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn search_config(max_states: Option<usize>) -> Result<SearchConfig, CliError> {
    match max_states {
        Some(0) => usage("--max-states must be positive"),
        m => Ok(SearchConfig::default().with_max_states(m.unwrap_or(DEFAULT_MAX_STATES))),
    }
}

#[derive(Serialize)]
struct SolveOutput<'a> {
    model: &'a Model,
    n: usize,
    from: Peg,
    to: Peg,
    method: &'static str,
    length: usize,
    moves: &'a MoveSequence,
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Classical => "classical",
        Method::Directed => "directed",
        Method::Zeta => "zeta",
        Method::ASymmetric => "a-symmetric",
        Method::Q => "q",
        Method::Bfs => "bfs",
    }
}

fn solve(a: &SolveArgs) -> Result<String, CliError> {
    let model = a.model.resolve()?;
    if a.from == a.to {
        return usage("--from and --to must differ");
    }
    if a.n > MAX_DISCS {
        return usage(format!("--n is limited to {MAX_DISCS}"));
    }
    if a.format == Format::Csv {
        return usage("solve supports --format plain or json");
    }
    let method = a.method.unwrap_or(match a.model.model {
        ModelKind::Classical => Method::Classical,
        ModelKind::Digraph => Method::Directed,
        ModelKind::Relaxed => Method::ASymmetric,
        ModelKind::Custom => Method::Bfs,
    });
    let cfg = search_config(a.max_states)?;
    let complete = model.graph == MoveGraph::complete();
    let (n, from, to) = (a.n, a.from, a.to);
    let predicted: Option<u64> = match method {
        Method::Classical if complete && model.distance == 0 => {
            Some(if n >= 64 { u64::MAX } else { (1u64 << n) - 1 })
        }
        Method::Classical => return usage("--method classical needs --model classical"),
        Method::Directed if model.distance != 0 => {
            return usage("--method directed needs distance 0")
        }
        Method::Directed if !model.graph.is_strongly_connected() => {
            return usage(format!(
                "move graph {} is not strongly connected",
                model.graph
            ))
        }
        Method::Directed => Some(to_u64(
            eval_move_counts(model.graph, n)
                .expect("checked")
                .get(from, to, n),
        )),
        Method::Zeta | Method::ASymmetric | Method::Q if !complete || model.distance == 0 => {
            return usage(format!(
                "--method {} needs --model relaxed",
                method_name(method)
            ))
        }
        Method::Zeta => Some(to_u64(
            &conjecture_values(n, model.distance).expect("checked").b[n],
        )),
        Method::ASymmetric => Some(to_u64(
            &conjecture_values(n, model.distance).expect("checked").a[n],
        )),
        Method::Q => Some(to_u64(&q_lengths(n, model.distance).expect("checked")[n])),
        Method::Bfs => None,
    };
    if let Some(len) = predicted.filter(|&l| l > MAX_MOVES) {
        return usage(format!(
            "sequence would have {len} moves; the limit is {MAX_MOVES}"
        ));
    }
    let unreachable = || {
        CliError::Verification(format!(
            "no legal sequence from standard({n},{from}) to standard({n},{to})\n"
        ))
    };
    let seq = match method {
        Method::Classical => classical_solve(n, from, to),
        Method::Directed => directed_move(model.graph, from, to, n),
        Method::Zeta => zeta(n, model.distance, from, to),
        Method::ASymmetric => a_symmetric(n, model.distance, from, to),
        Method::Q => q_sequence(n, model.distance, from, to),
        Method::Bfs => {
            let r = bfs_distance(
                &model,
                &State::standard(n, from),
                &GoalPredicate::StandardOn(to),
                cfg,
            )?;
            Ok(r.witness.ok_or_else(unreachable)?)
        }
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;

    // replay before printing
    let end = model
        .apply_all(&State::standard(n, from), &seq)
        .map_err(|e| CliError::Verification(format!("{e}\n")))?;
    let landed = if method == Method::Zeta {
        end.all_on(to)
    } else {
        end.is_standard_on(to)
    };
    if !landed {
        return Err(CliError::Verification(format!("sequence ends at {end}\n")));
    }
    Ok(match a.format {
        Format::Json => {
            let out = SolveOutput {
                model: &model,
                n,
                from,
                to,
                method: method_name(method),
                length: seq.len(),
                moves: &seq,
            };
            serde_json::to_string(&out).expect("serializable") + "\n"
        }
        _ => format!("{}length {}\n", seq.to_lines(), seq.len()),
    })
}

fn to_u64(v: &num_bigint::BigUint) -> u64 {
    v.to_u64().unwrap_or(u64::MAX)
}

fn table(a: &TableArgs) -> Result<String, CliError> {
    let model = a.model.resolve()?;
    match a.model.model {
        ModelKind::Classical | ModelKind::Digraph => {
            if !model.graph.is_strongly_connected() {
                return usage(format!(
                    "move graph {} is not strongly connected",
                    model.graph
                ));
            }
            let report = table_report(model.graph, a.n).expect("strongly connected");
            let out = match a.format {
                Format::Plain => report.to_plain(),
                Format::Csv => report.to_csv(),
                Format::Json => report.to_json() + "\n",
            };
            if report.closed_forms_ok() {
                Ok(out)
            } else {
                Err(CliError::Verification(out))
            }
        }
        ModelKind::Relaxed => {
            let values = ab_table(a.n, model.distance).expect("distance >= 1");
            Ok(match a.format {
                Format::Json => ab_to_json(&values) + "\n",
                Format::Csv => ab_to_csv(&values),
                Format::Plain => {
                    let mut out = format!(
                        "distance {}\n{:>4} {:>12} {:>12}\n",
                        values.distance, "n", "a", "b"
                    );
                    for (n, (x, y)) in values.a.iter().zip(&values.b).enumerate() {
                        let _ = writeln!(out, "{n:>4} {x:>12} {y:>12}");
                    }
                    out
                }
            })
        }
        ModelKind::Custom => usage("table supports classical, digraph and relaxed models"),
    }
}

#[derive(Serialize)]
struct GraphCheck {
    graph: MoveGraph,
    class: String,
    n_max: usize,
    oracle_ok: bool,
    closed_form_ok: bool,
    mismatches: Vec<String>,
}

fn verify(a: &VerifyArgs) -> Result<String, CliError> {
    let cfg = search_config(a.max_states)?;
    if a.format == Format::Csv && a.suite != VerifySuite::Relaxed {
        return usage("--format csv is only available for --suite relaxed");
    }
    match a.suite {
        VerifySuite::Graphs => {
            if a.distance.is_some() {
                return usage("--suite graphs does not take --distance");
            }
            let n_max = a.n.unwrap_or(6);
            let mut checks = Vec::new();
            for g in strongly_connected_graphs() {
                let mut mismatches = Vec::new();
                for n in 0..=n_max {
                    let r = verify_optimality(g, n, cfg)?;
                    mismatches.extend(r.mismatches().map(|p| {
                        format!(
                            "n={n} {}>{}: bfs {:?}, construction {}, recurrence {}",
                            p.from, p.to, p.bfs, p.directed_move, p.recurrence
                        )
                    }));
                }
                let closed_form_ok = table_report(g, n_max.max(30))
                    .expect("strongly connected")
                    .closed_forms_ok();
                let class = classify(g).map(|(c, _)| c.to_string()).unwrap_or_default();
                checks.push(GraphCheck {
                    graph: g,
                    class,
                    n_max,
                    oracle_ok: mismatches.is_empty(),
                    closed_form_ok,
                    mismatches,
                });
            }
            let pass = checks.iter().all(|c| c.oracle_ok && c.closed_form_ok);
            let out = if a.format == Format::Json {
                serde_json::to_string_pretty(&checks).expect("serializable") + "\n"
            } else {
                let mut out = String::new();
                for c in &checks {
                    let verdict = if c.oracle_ok && c.closed_form_ok {
                        "PASS"
                    } else {
                        "FAIL"
                    };
                    let _ = writeln!(
                        out,
                        "{verdict} {:<10} {:<24} n<={}",
                        c.class,
                        c.graph.to_string(),
                        c.n_max
                    );
                    for m in &c.mismatches {
                        let _ = writeln!(out, "    {m}");
                    }
                }
                let _ = writeln!(
                    out,
                    "{} graphs, {}",
                    checks.len(),
                    if pass { "all pass" } else { "FAILURES" }
                );
                out
            };
            finish(pass, out)
        }
        VerifySuite::Relaxed => {
            let distance = a.distance.unwrap_or(1);
            if distance == 0 {
                return usage("--distance must be at least 1");
            }
            let report = conjecture_probe(distance, a.n.unwrap_or(8), cfg)?;
            let out = match a.format {
                Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
                _ => report.to_csv(),
            };
            finish(report.all_match() && report.consistent(), out)
        }
        VerifySuite::Claims => {
            let mut reports: Vec<HarnessReport> = Vec::new();
            for suite in Suite::ALL {
                let mut params = suite.default_params();
                params.max_states = cfg.max_states;
                if let Some(n) = a.n {
                    params.n_max = n;
                }
                if let Some(c) = a.distance {
                    if c == 0 {
                        return usage("--distance must be at least 1");
                    }
                    params.distance = c;
                }
                reports.push(claim_harness(suite, params).map_err(|e| match e {
                    hanoi_core::verify::HarnessError::Oracle(o) => CliError::Oracle(o),
                    other => CliError::Usage(other.to_string()),
                })?);
            }
            let pass = reports.iter().all(|r| r.pass);
            let out = if a.format == Format::Json {
                serde_json::to_string_pretty(&reports).expect("serializable") + "\n"
            } else {
                let mut out = String::new();
                for r in &reports {
                    let _ = writeln!(
                        out,
                        "{} {:<20} checks={}",
                        if r.pass { "PASS" } else { "FAIL" },
                        r.suite.id(),
                        r.checked
                    );
                    for c in &r.counterexamples {
                        let _ = writeln!(out, "    n={} {}", c.n, c.detail);
                    }
                }
                out
            };
            finish(pass, out)
        }
    }
}

fn finish(pass: bool, out: String) -> Result<String, CliError> {
    if pass {
        Ok(out)
    } else {
        Err(CliError::Verification(out))
    }
}

fn conjecture(a: &ConjectureArgs) -> Result<String, CliError> {
    if a.distance == 0 {
        return usage("--distance must be at least 1");
    }
    if a.n_max == 0 {
        return usage("--n-max must be at least 1");
    }
    let report = conjecture_probe(a.distance, a.n_max, search_config(a.max_states)?)?;
    Ok(match a.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("serializable") + "\n",
        _ => report.to_csv(),
    })
}

fn graphs(format: Format) -> Result<String, CliError> {
    let classes = enumerate_graphs();
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&classes).expect("serializable") + "\n",
        Format::Csv => return usage("graphs enumerate supports --format plain or json"),
        Format::Plain => {
            let mut out = String::new();
            for c in &classes {
                let _ = writeln!(
                    out,
                    "{}: {} members, representative {}",
                    c.class,
                    c.members.len(),
                    c.representative
                );
                for m in &c.members {
                    let _ = writeln!(out, "    {m}");
                }
            }
            out
        }
    })
}
