mod commands;
mod outcome;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use matchcover::{CrossvalConfig, Suite, VerifyMode};

use commands::SearchMode;
use outcome::{CliError, CommandOutcome, EXIT_OK, EXIT_USAGE};

#[derive(Parser, Debug)]
#[command(
    name = "matchcover",
    version,
    about = "Perfect-matching structure of graphs"
)]
struct Cli {
    /// Render a readable report instead of JSON.
    #[arg(long, global = true)]
    human: bool,

    /// Cap on perfect matchings enumerated by any one query.
    #[arg(long, global = true)]
    limit: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Auto,
    Enumeration,
    Structural,
}

impl From<ModeArg> for VerifyMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Auto => VerifyMode::Auto,
            ModeArg::Enumeration => VerifyMode::Enumeration,
            ModeArg::Structural => VerifyMode::Structural,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Every family predicate with witnesses.
    Classify {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Feasibility and parity spectrum of an edge set.
    Feasible {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated `u-v` pairs.
        #[arg(long)]
        edges: String,
    },
    /// Switching equivalence of an edge set to `empty`, `full`, or a second edge list.
    SwitchEquiv {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        edges: String,
        #[arg(long, default_value = "empty")]
        target: String,
    },
    /// Partition of the edges into equivalence classes.
    EquivClasses {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Removable and non-removable edges.
    Removable {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Dulmage-Mendelsohn parts, their digraph, directed cuts and `ell`.
    Dm {
        #[arg(long)]
        graph: PathBuf,
        /// Count only cuts whose sides are both weakly connected.
        #[arg(long)]
        strict_cuts: bool,
    },
    /// Add `ell` edges to reach a matching-covered supergraph.
    Augment {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and verify G(k,m).
    Generate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "auto")]
        mode: ModeArg,
    },
    /// Verify an annotated construction file.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        mode: ModeArg,
    },
    /// Run a cross-validation suite: main2, main3, lr, lovasz, augmentation or acyclic.
    Crossvalidate {
        #[arg(long)]
        suite: String,
        /// Largest order of exhaustively generated graphs.
        #[arg(long, default_value_t = 10)]
        bound: usize,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        /// Largest order of random instances.
        #[arg(long, default_value_t = 14)]
        random_bound: usize,
        /// Edge subsets per graph in the lr suite.
        #[arg(long, default_value_t = 100)]
        subsets: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Exhaustive and exploratory searches.
    Search {
        #[arg(long, value_enum)]
        mode: SearchMode,
        /// Graph for the subset scan (Petersen when omitted).
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Largest order searched.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
        /// Minimum vertex connectivity in the large-class search.
        #[arg(long, default_value_t = 3)]
        connectivity: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Feasible { .. } => "feasible",
            Command::SwitchEquiv { .. } => "switch-equiv",
            Command::EquivClasses { .. } => "equiv-classes",
            Command::Removable { .. } => "removable",
            Command::Dm { .. } => "dm",
            Command::Augment { .. } => "augment",
            Command::Generate { .. } => "generate",
            Command::Verify { .. } => "verify",
            Command::Crossvalidate { .. } => "crossvalidate",
            Command::Search { .. } => "search",
        }
    }
}

fn run(cli: &Cli) -> commands::CmdResult {
    use commands::*;
    match &cli.command {
        Command::Classify { graph } => classify_cmd(&read_graph(graph)?),
        Command::Feasible { graph, edges } => feasible_cmd(&read_graph(graph)?, edges, cli.limit),
        Command::SwitchEquiv {
            graph,
            edges,
            target,
        } => switch_equiv_cmd(&read_graph(graph)?, edges, target),
        Command::EquivClasses { graph } => equiv_classes_cmd(&read_graph(graph)?),
        Command::Removable { graph } => removable_cmd(&read_graph(graph)?),
        Command::Dm { graph, strict_cuts } => dm_cmd(&read_graph(graph)?, *strict_cuts),
        Command::Augment { graph, out } => augment_cmd(&read_graph(graph)?, out.as_deref()),
        Command::Generate { k, m, out, mode } => {
            generate_cmd(*k, *m, out.as_deref(), (*mode).into())
        }
        Command::Verify { graph, mode } => verify_cmd(graph, (*mode).into()),
        Command::Crossvalidate {
            suite,
            bound,
            samples,
            random_bound,
            subsets,
            seed,
        } => {
            let suite: Suite = suite
                .parse()
                .map_err(|e: matchcover::Error| CliError::usage(e.to_string()))?;
            let cfg = CrossvalConfig {
                bound: *bound,
                samples: *samples,
                random_bound: *random_bound,
                subsets: *subsets,
                seed: *seed,
            };
            crossvalidate_cmd(suite, &cfg)
        }
        Command::Search {
            mode,
            graph,
            bound,
            samples,
            seed,
            connectivity,
        } => {
            let g = graph.as_deref().map(read_graph).transpose()?;
            search_cmd(
                *mode,
                SearchArgs {
                    graph: g.as_ref(),
                    bound: *bound,
                    samples: *samples,
                    seed: *seed,
                    connectivity: *connectivity,
                },
            )
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::from(EXIT_OK);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let name = cli.command.name();
    let (outcome, code) = match run(&cli) {
        Ok((payload, diagnostics)) => (CommandOutcome::ok(name, payload, diagnostics), EXIT_OK),
        Err(err) => (CommandOutcome::error(name, &err), err.code),
    };
    let text = if cli.human {
        outcome.to_human()
    } else {
        outcome.to_json() + "\n"
    };
    // A closed pipe (e.g. `| head`) is not an error worth a panic.
    let _ = std::io::stdout().write_all(text.as_bytes());
    ExitCode::from(code)
}
