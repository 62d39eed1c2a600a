use clap::{Args, Parser, Subcommand, ValueEnum};
use hanoi_core::{Model, MoveGraph, Peg};

use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "hanoi",
    version,
    about = "Generalized Tower of Hanoi laboratory"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a move sequence for a standard tower transfer.
    Solve(SolveArgs),
    /// Print exact move counts for a digraph, or a_n/b_n for a distance.
    Table(TableArgs),
    /// Run a verification suite against the exhaustive oracle.
    Verify(VerifyArgs),
    /// Compare conjectured optimal lengths with the oracle.
    Conjecture(ConjectureArgs),
    /// Strongly connected move digraphs.
    Graphs {
        #[command(subcommand)]
        action: GraphsAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum GraphsAction {
    /// List all strongly connected digraphs grouped by isomorphism class.
    Enumerate {
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    /// Complete graph, no inversions.
    Classical,
    /// Restricted moves (--edges), no inversions.
    Digraph,
    /// Complete graph with placement distance --distance >= 1.
    Relaxed,
    /// Both --edges and --distance.
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Recursive classical solution.
    Classical,
    /// Recursive transfer along the move digraph.
    Directed,
    /// Fast transfer onto a peg in some legal order.
    Zeta,
    /// Symmetric standard transfer.
    ASymmetric,
    /// Five-step standard transfer.
    Q,
    /// Shortest sequence from the exhaustive oracle.
    Bfs,
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    #[arg(long, value_enum, default_value_t = ModelKind::Classical)]
    pub model: ModelKind,
    /// Edge list such as `1>2,2>3,3>1`, or one of cycle, linear, chord,
    /// five-edge, complete.
    #[arg(long)]
    pub edges: Option<String>,
    /// Placement distance C.
    #[arg(long)]
    pub distance: Option<u32>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "1")]
    pub from: Peg,
    #[arg(long, default_value = "2")]
    pub to: Peg,
    /// Defaults to the natural construction for the model.
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    #[arg(long)]
    pub max_states: Option<usize>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifySuite {
    /// Every strongly connected digraph: construction, recurrence, oracle
    /// and closed forms.
    Graphs,
    /// Conjectured a_n, b_n against the oracle for one distance.
    Relaxed,
    /// All claim harnesses.
    Claims,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: VerifySuite,
    /// Largest disc count (suite-specific default).
    #[arg(long)]
    pub n: Option<usize>,
    /// Placement distance for `relaxed` and the oracle claim suites.
    #[arg(long)]
    pub distance: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    pub format: Format,
    #[arg(long)]
    pub max_states: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    #[arg(long)]
    pub distance: u32,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long)]
    pub max_states: Option<usize>,
}

pub fn parse_graph(text: &str) -> Result<MoveGraph, CliError> {
    Ok(match text {
        "cycle" => MoveGraph::cycle(),
        "linear" => MoveGraph::linear(),
        "chord" => MoveGraph::chord(),
        "five-edge" => MoveGraph::five_edge(),
        "complete" => MoveGraph::complete(),
        _ => text
            .parse()
            .map_err(|e| CliError::Usage(format!("--edges: {e}")))?,
    })
}

impl ModelArgs {
    /// Checks the flag combination and builds the model.
    pub fn resolve(&self) -> Result<Model, CliError> {
        let usage = |msg: &str| Err(CliError::Usage(msg.to_string()));
        match (self.model, &self.edges, self.distance) {
            (ModelKind::Classical, None, None) => Ok(Model::classical()),
            (ModelKind::Classical, _, _) => {
                usage("--model classical takes neither --edges nor --distance")
            }
            (ModelKind::Digraph, Some(e), None) => Ok(Model::digraph(parse_graph(e)?)),
            (ModelKind::Digraph, None, _) => usage("--model digraph requires --edges"),
            (ModelKind::Digraph, _, Some(_)) => {
                usage("--model digraph does not take --distance (use --model custom)")
            }
            (ModelKind::Relaxed, None, Some(0)) => {
                usage("--model relaxed requires --distance >= 1")
            }
            (ModelKind::Relaxed, None, Some(c)) => Ok(Model::relaxed(c)),
            (ModelKind::Relaxed, Some(_), _) => {
                usage("--model relaxed does not take --edges (use --model custom)")
            }
            (ModelKind::Relaxed, None, None) => usage("--model relaxed requires --distance"),
            (ModelKind::Custom, Some(e), Some(c)) => Ok(Model::new(parse_graph(e)?, c)),
            (ModelKind::Custom, _, _) => {
                usage("--model custom requires both --edges and --distance")
            }
        }
    }
}
