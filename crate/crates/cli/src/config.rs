//! Run configurations. Every report embeds the config that produced it.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

/// Which models a command evaluates words on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub finite: FiniteSource,
    pub corpus: CorpusSource,
    /// Scan real-line probes before finite spaces when looking for witnesses.
    pub corpus_first: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FiniteSource {
    None,
    /// Every labeled topology on `1..=n` points.
    UpTo(usize),
    /// A spaces file written by the `spaces` command.
    File(PathBuf),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorpusSource {
    None,
    Builtin,
    /// One set literal per line; `#` starts a comment.
    File(PathBuf),
}

impl Default for ModelSpec {
    fn default() -> Self {
        ModelSpec { finite: FiniteSource::UpTo(3), corpus: CorpusSource::Builtin, corpus_first: false }
    }
}

impl ModelSpec {
    /// Parses selectors such as `finite:3,realline` or `spaces:FILE,realline:FILE`.
    /// The first selector decides the witness scan order.
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut spec = ModelSpec { finite: FiniteSource::None, corpus: CorpusSource::None, corpus_first: false };
        for (idx, sel) in text.split(',').map(str::trim).filter(|s| !s.is_empty()).enumerate() {
            let (kind, arg) = match sel.split_once(':') {
                Some((k, a)) => (k, Some(a)),
                None => (sel, None),
            };
            match (kind, arg) {
                ("finite", Some(n)) => {
                    let n: usize = n.parse().map_err(|_| format!("bad point count in model selector {sel:?}"))?;
                    spec.finite = FiniteSource::UpTo(n);
                }
                ("spaces", Some(path)) => spec.finite = FiniteSource::File(path.into()),
                ("realline", None) => {
                    spec.corpus = CorpusSource::Builtin;
                    spec.corpus_first |= idx == 0;
                }
                ("realline", Some(path)) => {
                    spec.corpus = CorpusSource::File(path.into());
                    spec.corpus_first |= idx == 0;
                }
                _ => {
                    return Err(format!(
                        "unknown model selector {sel:?}; use finite:N, spaces:FILE, realline or realline:FILE"
                    ))
                }
            }
        }
        if spec.finite == FiniteSource::None && spec.corpus == CorpusSource::None {
            return Err("no models selected".into());
        }
        Ok(spec)
    }
}

/// Resource limits for monoid enumeration.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budgets {
    pub max_len: usize,
    pub class_cap: Option<usize>,
    pub time_cap_secs: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum RunConfig {
    Normalize { word: String, trace: bool },
    Spaces { n: usize },
    Monoid { generators: String, models: ModelSpec, budgets: Budgets },
    Separate { left: String, right: String, models: ModelSpec },
    Poset { generators: String, models: ModelSpec, budgets: Budgets },
    Experiment { generators: String, n_max: usize, corpus: CorpusSource, budgets: Budgets },
    Verify { models: ModelSpec, random_sets: usize, seed: u64 },
}

impl RunConfig {
    pub fn name(&self) -> &'static str {
        match self {
            RunConfig::Normalize { .. } => "normalize",
            RunConfig::Spaces { .. } => "spaces",
            RunConfig::Monoid { .. } => "monoid",
            RunConfig::Separate { .. } => "separate",
            RunConfig::Poset { .. } => "poset",
            RunConfig::Experiment { .. } => "experiment",
            RunConfig::Verify { .. } => "verify",
        }
    }
}
