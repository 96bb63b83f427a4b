use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kuratowski_cli::{embedded_config, execute, write_atomic, Budgets, CliError, CorpusSource, FiniteSource, ModelSpec, RunConfig};

/// Operator monoids of closure, interior, complement, boundary and friends.
#[derive(Debug, Parser)]
#[command(name = "kuratowski", version)]
struct Cli {
    /// Print the JSON report on stdout instead of the summary.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct ModelArgs {
    /// Model selectors, e.g. `finite:3,realline` (overrides --max-n/--spaces/--corpus).
    #[arg(long)]
    models: Option<String>,
    /// Use every topology on up to this many points.
    #[arg(long, default_value_t = 3)]
    max_n: usize,
    /// Use the spaces listed in a file written by `spaces`.
    #[arg(long)]
    spaces: Option<PathBuf>,
    /// Real-line probes: `builtin`, `none` or a file with one literal per line.
    #[arg(long, default_value = "builtin")]
    corpus: String,
}

impl ModelArgs {
    fn spec(&self) -> Result<ModelSpec, CliError> {
        if let Some(sel) = &self.models {
            return ModelSpec::parse(sel).map_err(CliError::Usage);
        }
        let finite = match &self.spaces {
            Some(path) => FiniteSource::File(path.clone()),
            None if self.max_n == 0 => FiniteSource::None,
            None => FiniteSource::UpTo(self.max_n),
        };
        Ok(ModelSpec { finite, corpus: corpus_source(&self.corpus), corpus_first: false })
    }
}

fn corpus_source(text: &str) -> CorpusSource {
    match text {
        "builtin" => CorpusSource::Builtin,
        "none" => CorpusSource::None,
        path => CorpusSource::File(path.into()),
    }
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Longest word length explored.
    #[arg(long, default_value_t = 10)]
    max_len: usize,
    /// Stop after this many classes and flag the report truncated.
    #[arg(long)]
    class_cap: Option<usize>,
    /// Stop after this many seconds and flag the report truncated.
    #[arg(long)]
    time_cap: Option<u64>,
}

impl BudgetArgs {
    fn budgets(&self) -> Budgets {
        Budgets { max_len: self.max_len, class_cap: self.class_cap, time_cap_secs: self.time_cap }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rewrite a word to normal form.
    Normalize {
        word: String,
        /// Print each rewrite step as a JSON line.
        #[arg(long)]
        trace: bool,
    },
    /// Enumerate all labeled topologies on N points.
    Spaces {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the monoid generated by some operators.
    Monoid {
        #[arg(long, default_value = "c,i,n")]
        gens: String,
        #[command(flatten)]
        models: ModelArgs,
        #[command(flatten)]
        budgets: BudgetArgs,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Find a model input on which two words differ.
    Separate {
        left: String,
        right: String,
        #[arg(long, default_value = "realline,finite:3")]
        models: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Inclusion order of the monoid elements and its cover diagram.
    Poset {
        #[arg(long, default_value = "c,i")]
        gens: String,
        #[command(flatten)]
        models: ModelArgs,
        #[command(flatten)]
        budgets: BudgetArgs,
        /// Write the cover diagram as DOT (`-` for stdout).
        #[arg(long)]
        dot: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Per-space and aggregated growth of the monoid.
    Experiment {
        #[arg(long, default_value = "c,i,n,b")]
        gens: String,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value = "builtin")]
        corpus: String,
        #[command(flatten)]
        budgets: BudgetArgs,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check operator identities pointwise; exits 1 on any violation.
    Verify {
        #[command(flatten)]
        models: ModelArgs,
        /// Extra random real-line sets.
        #[arg(long, default_value_t = 200)]
        random_sets: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Re-run the config embedded in a report.
    Replay {
        from: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

struct Plan {
    config: RunConfig,
    report: Option<PathBuf>,
    dot: Option<PathBuf>,
}

fn plan(command: Command) -> Result<Plan, CliError> {
    let simple = |config| Plan { config, report: None, dot: None };
    Ok(match command {
        Command::Normalize { word, trace } => simple(RunConfig::Normalize { word, trace }),
        Command::Spaces { n, out } => Plan { config: RunConfig::Spaces { n }, report: out, dot: None },
        Command::Monoid { gens, models, budgets, report } => Plan {
            config: RunConfig::Monoid { generators: gens, models: models.spec()?, budgets: budgets.budgets() },
            report,
            dot: None,
        },
        Command::Separate { left, right, models, report } => Plan {
            config: RunConfig::Separate { left, right, models: ModelSpec::parse(&models).map_err(CliError::Usage)? },
            report,
            dot: None,
        },
        Command::Poset { gens, models, budgets, dot, report } => Plan {
            config: RunConfig::Poset { generators: gens, models: models.spec()?, budgets: budgets.budgets() },
            report,
            dot,
        },
        Command::Experiment { gens, n_max, corpus, budgets, report } => Plan {
            config: RunConfig::Experiment {
                generators: gens,
                n_max,
                corpus: corpus_source(&corpus),
                budgets: budgets.budgets(),
            },
            report,
            dot: None,
        },
        Command::Verify { models, random_sets, seed, report } => Plan {
            config: RunConfig::Verify { models: models.spec()?, random_sets, seed },
            report,
            dot: None,
        },
        Command::Replay { from, report } => Plan { config: embedded_config(&from)?, report, dot: None },
    })
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let plan = plan(cli.command)?;
    let out = execute(&plan.config)?;
    let report_text = out.report_text();
    if let Some(path) = &plan.report {
        write_atomic(path, &report_text)?;
    }
    let mut dot_on_stdout = false;
    if let (Some(path), Some(dot)) = (&plan.dot, &out.dot) {
        if path.as_os_str() == "-" {
            dot_on_stdout = true;
        } else {
            write_atomic(path, dot)?;
        }
    }
    if cli.json {
        print!("{report_text}");
    } else if dot_on_stdout {
        print!("{}", out.dot.as_deref().unwrap_or_default());
    } else if matches!(plan.config, RunConfig::Spaces { .. }) && plan.report.is_none() {
        print!("{report_text}");
    } else {
        print!("{}", out.summary);
    }
    Ok(out.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
