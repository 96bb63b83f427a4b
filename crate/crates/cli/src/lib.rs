//! Command-line front end: configs, execution and report writing.

pub mod config;
pub mod run;

pub use config::{Budgets, CorpusSource, FiniteSource, ModelSpec, RunConfig};
pub use run::{embedded_config, execute, write_atomic, CliError, Execution};
