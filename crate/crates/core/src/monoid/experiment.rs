use serde::Serialize;

use super::{enumerate_monoid, Budget, Models, MonoidSummary};
use crate::error::{MonoidError, SpaceError};
use crate::finitetop::enumerate_topologies;
use crate::realline::RealLineSet;
use crate::terms::Generator;

pub const DISCLAIMER: &str = "Empirical evidence only: classes are identified by agreement on the \
supplied finite spaces and real-line probes, so counts are lower bounds on the monoid over all \
topological spaces. Saturation within the word-length budget is not a proof of finiteness.";

/// Class counts of the monoid computed on each space of one size separately.
#[derive(Debug, Clone, Serialize)]
pub struct SpaceCountSummary {
    pub n: usize,
    pub spaces: usize,
    pub class_counts: Vec<usize>,
    pub min: usize,
    pub max: usize,
    /// Number of spaces whose enumeration saturated within the length budget.
    pub saturated: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentReport {
    pub generators: Vec<Generator>,
    pub n_max: usize,
    pub max_len: usize,
    pub per_size: Vec<SpaceCountSummary>,
    /// All spaces with at most `n_max` points together with the probes.
    pub aggregated: MonoidSummary,
    pub disclaimer: &'static str,
}

#[derive(Debug, thiserror::Error)]
pub enum ExperimentError {
    #[error(transparent)]
    Space(#[from] SpaceError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

/// Growth experiment on the monoid generated by `generators`: per-space
/// class counts for every space on up to `n_max` points, and the
/// class count when words must agree on all of them and on `corpus`.
pub fn open_problem_experiment(
    n_max: usize,
    generators: &[Generator],
    max_len: usize,
    corpus: &[RealLineSet],
    budget: Budget,
) -> Result<ExperimentReport, ExperimentError> {
    let mut all_spaces = Vec::new();
    let mut per_size = Vec::new();
    for n in 1..=n_max {
        let spaces = enumerate_topologies(n)?;
        let mut class_counts = Vec::with_capacity(spaces.len());
        let mut saturated = 0;
        for s in &spaces {
            let r = enumerate_monoid(generators, &Models::new(vec![s.clone()], vec![]), max_len, budget)?;
            class_counts.push(r.len());
            saturated += usize::from(r.saturated);
        }
        per_size.push(SpaceCountSummary {
            n,
            spaces: spaces.len(),
            min: class_counts.iter().copied().min().unwrap_or(0),
            max: class_counts.iter().copied().max().unwrap_or(0),
            class_counts,
            saturated,
        });
        all_spaces.extend(spaces);
    }
    let aggregated = enumerate_monoid(generators, &Models::new(all_spaces, corpus.to_vec()), max_len, budget)?;
    let mut generators = generators.to_vec();
    generators.sort();
    generators.dedup();
    Ok(ExperimentReport {
        generators,
        n_max,
        max_len,
        per_size,
        aggregated: aggregated.summary(),
        disclaimer: DISCLAIMER,
    })
}
