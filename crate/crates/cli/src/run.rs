use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use kuratowski::finitetop::{enumerate_topologies, spaces_up_to, FiniteSpace, SpacesFile};
use kuratowski::laws;
use kuratowski::monoid::{open_problem_experiment, separate_in, SearchOrder};
use kuratowski::realline::{default_corpus, make_set, Density, Rational};
use kuratowski::terms::parse_generators;
use kuratowski::{compute_poset, emit_hasse_dot, enumerate_monoid, normalize, parse_word, Budget, Models, RealLineSet, Witness};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::config::{Budgets, CorpusSource, FiniteSource, ModelSpec, RunConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Result of running one config.
#[derive(Debug, Clone)]
pub struct Execution {
    /// Human-readable summary.
    pub summary: String,
    /// JSON report with the config embedded under `"config"`.
    pub report: Value,
    pub dot: Option<String>,
    /// False when a verification found a counterexample.
    pub verified: bool,
}

impl Execution {
    pub fn report_text(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.report).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn exit_code(&self) -> i32 {
        if self.verified {
            0
        } else {
            1
        }
    }
}

fn embed(config: &RunConfig, body: impl Serialize) -> Value {
    let mut value = serde_json::to_value(body).expect("report serializes");
    let config = serde_json::to_value(config).expect("config serializes");
    match &mut value {
        Value::Object(map) => {
            map.insert("config".into(), config);
            value
        }
        _ => json!({ "config": config, "result": value }),
    }
}

fn load_corpus(source: &CorpusSource) -> Result<Vec<RealLineSet>, CliError> {
    match source {
        CorpusSource::None => Ok(Vec::new()),
        CorpusSource::Builtin => Ok(default_corpus()),
        CorpusSource::File(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read corpus file {}: {e}", path.display())))?;
            text.lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .filter(|l| !l.is_empty())
                .map(|l| make_set(l).map_err(|e| usage(format!("in corpus file {}: {l:?}: {e}", path.display()))))
                .collect()
        }
    }
}

fn load_spaces(source: &FiniteSource) -> Result<Vec<FiniteSpace>, CliError> {
    match source {
        FiniteSource::None => Ok(Vec::new()),
        FiniteSource::UpTo(n) => spaces_up_to(*n).map_err(usage),
        FiniteSource::File(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| usage(format!("cannot read spaces file {}: {e}", path.display())))?;
            let file: SpacesFile = serde_json::from_str(&text)
                .map_err(|e| usage(format!("malformed spaces file {}: {e}", path.display())))?;
            file.to_spaces().map_err(usage)
        }
    }
}

fn load_models(spec: &ModelSpec) -> Result<Models, CliError> {
    Ok(Models::new(load_spaces(&spec.finite)?, load_corpus(&spec.corpus)?))
}

fn budget(b: &Budgets) -> Budget {
    Budget { class_cap: b.class_cap, time_cap: b.time_cap_secs.map(Duration::from_secs) }
}

fn generators(text: &str) -> Result<Vec<kuratowski::Generator>, CliError> {
    let gens = parse_generators(text).map_err(|e| usage(format!("bad generator list {text:?}: {e}")))?;
    if gens.is_empty() {
        return Err(usage("empty generator list"));
    }
    Ok(gens)
}

/// Executes a config without touching the filesystem except for inputs.
pub fn execute(config: &RunConfig) -> Result<Execution, CliError> {
    match config {
        RunConfig::Normalize { word, trace } => run_normalize(config, word, *trace),
        RunConfig::Spaces { n } => {
            let spaces = enumerate_topologies(*n).map_err(usage)?;
            let file = SpacesFile::from_spaces(*n, &spaces);
            let summary = format!("{} labeled topologies on {n} points\n", spaces.len());
            let mut report = serde_json::to_value(&file).expect("serializes");
            report["config"] = serde_json::to_value(config).expect("serializes");
            Ok(Execution { summary, report, dot: None, verified: true })
        }
        RunConfig::Monoid { generators: gens, models, budgets } => {
            let m = load_models(models)?;
            let r = enumerate_monoid(&generators(gens)?, &m, budgets.max_len, budget(budgets)).map_err(usage)?;
            let summary = r.summary();
            let mut text = format!(
                "{} classes over {} finite spaces and {} probe sets\ngrowth by length: {:?}\nsaturated: {}  truncated: {}\n",
                summary.class_count,
                m.spaces.len(),
                m.corpus.len(),
                summary.growth,
                summary.saturated,
                summary.truncated
            );
            for c in &summary.classes {
                let _ = writeln!(text, "  {:<16} normal form {}", c.representative.to_string(), c.normal_form);
            }
            Ok(Execution { summary: text, report: embed(config, &summary), dot: None, verified: true })
        }
        RunConfig::Separate { left, right, models } => run_separate(config, left, right, models),
        RunConfig::Poset { generators: gens, models, budgets } => {
            let m = load_models(models)?;
            let r = enumerate_monoid(&generators(gens)?, &m, budgets.max_len, budget(budgets)).map_err(usage)?;
            let p = compute_poset(&r).map_err(|e| CliError::Failure(e.to_string()))?;
            let mut text = format!("{} elements, {} cover edges\n", p.elements.len(), p.hasse.len());
            for ((lo, hi), wit) in p.hasse_words().iter().zip(&p.strictness) {
                let _ = writeln!(text, "  {lo} -> {hi}    strict at {}", wit.describe());
            }
            for pair in &p.incomparable {
                let _ = writeln!(text, "  {} || {}", p.elements[pair.a], p.elements[pair.b]);
            }
            let dot = emit_hasse_dot(&p);
            Ok(Execution { summary: text, report: embed(config, &p), dot: Some(dot), verified: true })
        }
        RunConfig::Experiment { generators: gens, n_max, corpus, budgets } => {
            let corpus = load_corpus(corpus)?;
            let r = open_problem_experiment(*n_max, &generators(gens)?, budgets.max_len, &corpus, budget(budgets))
                .map_err(usage)?;
            let mut text = String::new();
            for s in &r.per_size {
                let _ = writeln!(
                    text,
                    "n={}: {} spaces, per-space classes min {} max {} ({} saturated)",
                    s.n, s.spaces, s.min, s.max, s.saturated
                );
            }
            let _ = writeln!(
                text,
                "aggregated: {} classes, growth {:?}, saturated {}, truncated {}\n{}",
                r.aggregated.class_count, r.aggregated.growth, r.aggregated.saturated, r.aggregated.truncated, r.disclaimer
            );
            Ok(Execution { summary: text, report: embed(config, &r), dot: None, verified: true })
        }
        RunConfig::Verify { models, random_sets, seed } => {
            let m = load_models(models)?;
            let mut sets = m.corpus.clone();
            sets.extend(random_sets_from_seed(*seed, *random_sets));
            let report = laws::sweep(&m.spaces, &sets);
            let mut text = String::new();
            for c in &report.checks {
                let status = if c.violations == 0 { "ok  " } else { "FAIL" };
                let _ = writeln!(text, "{status} {:<48} {:>8} instances  {} violations", c.law, c.instances, c.violations);
                if let Some(ce) = &c.first_counterexample {
                    let _ = writeln!(text, "     first counterexample: {ce}");
                }
            }
            let verified = report.passed();
            Ok(Execution { summary: text, report: embed(config, &report), dot: None, verified })
        }
    }
}

fn run_normalize(config: &RunConfig, word: &str, trace: bool) -> Result<Execution, CliError> {
    let w = parse_word(word).map_err(|e| usage(format!("cannot parse word {word:?}: {e}")))?;
    let nf = normalize(&w);
    let mut text = format!("{}\n", nf.word);
    if trace {
        for step in &nf.trace {
            text.push_str(&serde_json::to_string(step).expect("serializes"));
            text.push('\n');
        }
    }
    let report = embed(config, json!({ "input": w, "normal_form": nf.word, "trace": nf.trace }));
    Ok(Execution { summary: text, report, dot: None, verified: true })
}

fn run_separate(config: &RunConfig, left: &str, right: &str, models: &ModelSpec) -> Result<Execution, CliError> {
    let l = parse_word(left).map_err(|e| usage(format!("cannot parse word {left:?}: {e}")))?;
    let r = parse_word(right).map_err(|e| usage(format!("cannot parse word {right:?}: {e}")))?;
    let m = load_models(models)?;
    let order = if models.corpus_first { SearchOrder::CorpusFirst } else { SearchOrder::FiniteFirst };
    let witness = separate_in(&l, &r, &m, order);
    let text = match &witness {
        Some(Witness::Realline { set, left: lv, right: rv, .. }) => {
            format!("witness {set}\n  {l}(A) = {lv}\n  {r}(A) = {rv}\n")
        }
        Some(Witness::Finite { points, opens, subset, left: lv, right: rv, .. }) => format!(
            "witness A={subset} in the {points}-point space with opens {opens:?}\n  {l}(A) = {lv}\n  {r}(A) = {rv}\n"
        ),
        None => format!("no witness: {l} and {r} agree on every supplied model\n"),
    };
    let report = embed(config, json!({ "left": l, "right": r, "witness": witness }));
    Ok(Execution { summary: text, report, dot: None, verified: true })
}

/// Random sets on a half-integer grid, reproducible from `seed`.
pub fn random_sets_from_seed(seed: u64, count: usize) -> Vec<RealLineSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let densities = [Density::Empty, Density::Full, Density::Rationals, Density::Irrationals];
    (0..count)
        .map(|_| {
            let k = rng.gen_range(0..=5);
            let mut grid: Vec<i64> = (0..k).map(|_| rng.gen_range(-8..8)).collect();
            grid.sort();
            grid.dedup();
            let bps: Vec<Rational> = grid.into_iter().map(|g| Rational::new(g, 2)).collect();
            let points = bps.iter().map(|_| rng.gen_bool(0.5)).collect();
            let cells = (0..=bps.len()).map(|_| densities[rng.gen_range(0..4)]).collect();
            RealLineSet::from_parts(bps, points, cells).expect("sorted grid")
        })
        .collect()
}

/// Writes `contents` to `path` via a temporary file in the same directory.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), CliError> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    let fail = |e: std::io::Error| CliError::Failure(format!("cannot write {}: {e}", path.display()));
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(fail)?;
    tmp.write_all(contents.as_bytes()).map_err(fail)?;
    tmp.persist(path).map_err(|e| fail(e.error))?;
    Ok(())
}

/// Reads the config embedded in a report file.
pub fn embedded_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let value: Value =
        serde_json::from_str(&text).map_err(|e| usage(format!("{} is not JSON: {e}", path.display())))?;
    let config = value
        .get("config")
        .ok_or_else(|| usage(format!("{} has no embedded config", path.display())))?;
    serde_json::from_value(config.clone()).map_err(|e| usage(format!("bad embedded config in {}: {e}", path.display())))
}
