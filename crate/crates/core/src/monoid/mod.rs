//! Transformation monoids generated by operators over a set of models.
//!
//! Two words are identified when they act identically on every supplied
//! model: every subset of every finite space and every probe set on the
//! real line. This approximates "equal in all spaces" from below, so a
//! class count is a lower bound on the true number of distinct operators.

mod experiment;
mod poset;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::MonoidError;
use crate::finitetop::{FiniteSpace, Subset, TransformTable};
use crate::realline::RealLineSet;
use crate::rewrite::normalize;
use crate::terms::{Generator, Word};

pub use experiment::{open_problem_experiment, ExperimentReport, SpaceCountSummary, DISCLAIMER};
pub use poset::{compute_poset, emit_hasse_dot, IncomparablePair, Poset};

/// The semantic models words are evaluated on.
#[derive(Debug, Clone, Default)]
pub struct Models {
    pub spaces: Vec<FiniteSpace>,
    pub corpus: Vec<RealLineSet>,
}

impl Models {
    pub fn new(spaces: Vec<FiniteSpace>, corpus: Vec<RealLineSet>) -> Self {
        Models { spaces, corpus }
    }

    pub fn is_empty(&self) -> bool {
        self.spaces.is_empty() && self.corpus.is_empty()
    }

    fn finite_len(&self) -> usize {
        self.spaces.iter().map(|s| s.subset_count()).sum()
    }

    pub fn identity_fingerprint(&self) -> Fingerprint {
        let mut finite = Vec::with_capacity(self.finite_len());
        for s in &self.spaces {
            finite.extend((0..s.subset_count() as Subset).map(|a| a as u8));
        }
        Fingerprint { finite, probes: self.corpus.clone() }
    }

    /// Fingerprint of `g ∘ w` from the fingerprint of `w`.
    pub fn extend(&self, fp: &Fingerprint, g: Generator) -> Fingerprint {
        let mut finite = Vec::with_capacity(fp.finite.len());
        let mut offset = 0;
        for s in &self.spaces {
            let size = s.subset_count();
            finite.extend(fp.finite[offset..offset + size].iter().map(|&a| s.apply(g, a as Subset) as u8));
            offset += size;
        }
        let probes = fp.probes.iter().map(|p| p.apply(g)).collect();
        Fingerprint { finite, probes }
    }

    pub fn fingerprint(&self, w: &Word) -> Fingerprint {
        w.application_order()
            .fold(self.identity_fingerprint(), |fp, g| self.extend(&fp, g))
    }

    fn space_offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.spaces.len());
        let mut offset = 0;
        for s in &self.spaces {
            out.push(offset);
            offset += s.subset_count();
        }
        out
    }
}

/// The images of every model input under one transform.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    finite: Vec<u8>,
    probes: Vec<RealLineSet>,
}

impl Fingerprint {
    pub fn finite_images(&self) -> &[u8] {
        &self.finite
    }

    pub fn probe_images(&self) -> &[RealLineSet] {
        &self.probes
    }

    /// Pointwise inclusion on every model input.
    pub fn below(&self, other: &Fingerprint) -> bool {
        self.finite.iter().zip(&other.finite).all(|(&a, &b)| a & !b == 0)
            && self.probes.iter().zip(&other.probes).all(|(a, b)| a.subset_of(b))
    }
}

/// An observed element of the monoid.
#[derive(Debug, Clone)]
pub struct ElementClass {
    /// Shortest, then lexicographically least, word found in the class.
    pub representative: Word,
    pub fingerprint: Fingerprint,
}

impl ElementClass {
    pub fn table(&self, models: &Models, space: usize) -> TransformTable {
        let offset = models.space_offsets()[space];
        let size = models.spaces[space].subset_count();
        TransformTable {
            table: self.fingerprint.finite[offset..offset + size].iter().map(|&a| a as Subset).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct Budget {
    /// Stop once this many classes exist.
    pub class_cap: Option<usize>,
    /// Stop before starting a new word length once this much time has passed.
    pub time_cap: Option<Duration>,
}

#[derive(Debug, Clone)]
pub struct MonoidReport {
    pub generators: Vec<Generator>,
    pub max_word_length: usize,
    pub classes: Vec<ElementClass>,
    /// `growth[len]` is the number of classes first reached at word length `len`.
    pub growth: Vec<usize>,
    pub saturated: bool,
    pub truncated: bool,
    pub models: Models,
    index: HashMap<Fingerprint, usize>,
}

/// Enumerates the monoid generated by `generators` breadth-first by word length.
///
/// Each level prepends every generator to the representatives first found
/// at the previous level, so every class is represented by its shortlex
/// least word.
pub fn enumerate_monoid(
    generators: &[Generator],
    models: &Models,
    max_len: usize,
    budget: Budget,
) -> Result<MonoidReport, MonoidError> {
    if models.is_empty() {
        return Err(MonoidError::NoModels);
    }
    if max_len == 0 {
        return Err(MonoidError::MaxLength);
    }
    let mut generators = generators.to_vec();
    generators.sort();
    generators.dedup();

    let started = Instant::now();
    let identity = ElementClass { representative: Word::identity(), fingerprint: models.identity_fingerprint() };
    let mut index = HashMap::from([(identity.fingerprint.clone(), 0)]);
    let mut classes = vec![identity];
    let mut growth = vec![1];
    let mut frontier = vec![0usize];
    let mut truncated = false;

    'levels: for _len in 1..=max_len {
        if budget.time_cap.is_some_and(|cap| started.elapsed() > cap) {
            truncated = true;
            break;
        }
        let mut candidates: Vec<(Word, usize, Generator)> = frontier
            .iter()
            .flat_map(|&c| generators.iter().map(move |&g| (c, g)))
            .map(|(c, g)| (classes[c].representative.prepend(g), c, g))
            .collect();
        candidates.sort_by(|a, b| a.0.cmp(&b.0));

        let fingerprints = extend_all(models, &classes, &candidates);

        let mut next = Vec::new();
        for ((word, _, _), fp) in candidates.into_iter().zip(fingerprints) {
            if index.contains_key(&fp) {
                continue;
            }
            if budget.class_cap.is_some_and(|cap| classes.len() >= cap) {
                truncated = true;
                growth.push(next.len());
                break 'levels;
            }
            index.insert(fp.clone(), classes.len());
            next.push(classes.len());
            classes.push(ElementClass { representative: word, fingerprint: fp });
        }
        growth.push(next.len());
        frontier = next;
    }
    while !truncated && growth.len() < max_len + 1 {
        growth.push(0);
    }

    let saturated = !truncated && max_len >= 2 && growth[max_len] == 0 && growth[max_len - 1] == 0;
    Ok(MonoidReport {
        generators,
        max_word_length: max_len,
        classes,
        growth,
        saturated,
        truncated,
        models: models.clone(),
        index,
    })
}

#[cfg(feature = "parallel")]
fn extend_all(models: &Models, classes: &[ElementClass], candidates: &[(Word, usize, Generator)]) -> Vec<Fingerprint> {
    use rayon::prelude::*;
    candidates
        .par_iter()
        .map(|(_, c, g)| models.extend(&classes[*c].fingerprint, *g))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn extend_all(models: &Models, classes: &[ElementClass], candidates: &[(Word, usize, Generator)]) -> Vec<Fingerprint> {
    candidates
        .iter()
        .map(|(_, c, g)| models.extend(&classes[*c].fingerprint, *g))
        .collect()
}

impl MonoidReport {
    /// Builds a report whose classes are the distinct transforms of `words`,
    /// keeping the shortlex least word of each.
    pub fn from_words(words: &[Word], models: &Models) -> Result<MonoidReport, MonoidError> {
        if models.is_empty() {
            return Err(MonoidError::NoModels);
        }
        let mut sorted = words.to_vec();
        sorted.sort_by(|a, b| a.shortlex_cmp(b));
        let mut index = HashMap::new();
        let mut classes = Vec::new();
        let mut generators: Vec<Generator> = Vec::new();
        for w in sorted {
            generators.extend(w.gens());
            let fp = models.fingerprint(&w);
            if !index.contains_key(&fp) {
                index.insert(fp.clone(), classes.len());
                classes.push(ElementClass { representative: w, fingerprint: fp });
            }
        }
        generators.sort();
        generators.dedup();
        let max_word_length = classes.iter().map(|c| c.representative.len()).max().unwrap_or(0);
        let mut growth = vec![0; max_word_length + 1];
        for c in &classes {
            growth[c.representative.len()] += 1;
        }
        Ok(MonoidReport {
            generators,
            max_word_length,
            classes,
            growth,
            saturated: false,
            truncated: false,
            models: models.clone(),
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// The class containing `w`, if it was enumerated.
    pub fn class_of(&self, w: &Word) -> Option<usize> {
        self.index.get(&self.models.fingerprint(w)).copied()
    }

    pub fn representatives(&self) -> Vec<Word> {
        self.classes.iter().map(|c| c.representative.clone()).collect()
    }

    /// Serializable summary.
    pub fn summary(&self) -> MonoidSummary {
        MonoidSummary {
            generators: self.generators.clone(),
            max_word_length: self.max_word_length,
            finite_spaces: self.models.spaces.len(),
            corpus: self.models.corpus.iter().map(|s| s.to_string()).collect(),
            class_count: self.classes.len(),
            growth: self.growth.clone(),
            classes: self
                .classes
                .iter()
                .enumerate()
                .map(|(idx, c)| ClassSummary {
                    representative: c.representative.clone(),
                    normal_form: normalize(&c.representative).word,
                    sizes: (0..self.models.spaces.len())
                        .map(|s| c.table(&self.models, s).range_size())
                        .collect(),
                    probe_images: c.fingerprint.probes.iter().map(|p| p.to_string()).collect(),
                    index: idx,
                })
                .collect(),
            saturated: self.saturated,
            truncated: self.truncated,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassSummary {
    pub index: usize,
    pub representative: Word,
    /// Result of the rewrite system on the representative.
    pub normal_form: Word,
    /// Number of distinct images of the transform on each finite space.
    pub sizes: Vec<usize>,
    pub probe_images: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonoidSummary {
    pub generators: Vec<Generator>,
    pub max_word_length: usize,
    pub finite_spaces: usize,
    pub corpus: Vec<String>,
    pub class_count: usize,
    pub growth: Vec<usize>,
    pub classes: Vec<ClassSummary>,
    pub saturated: bool,
    pub truncated: bool,
}

/// A model input on which two transforms differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum Witness {
    Finite {
        /// Index of the space in the model list.
        space: usize,
        points: usize,
        opens: Vec<Subset>,
        subset: Subset,
        left: Subset,
        right: Subset,
    },
    Realline {
        probe: usize,
        set: RealLineSet,
        left: RealLineSet,
        right: RealLineSet,
    },
}

impl Witness {
    pub fn describe(&self) -> String {
        match self {
            Witness::Finite { points, opens, subset, left, right, .. } => format!(
                "finite space on {points} points with opens {opens:?}: A={subset:#b} gives {left:#b} vs {right:#b}"
            ),
            Witness::Realline { set, left, right, .. } => format!("A={set}: {left} vs {right}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchOrder {
    FiniteFirst,
    CorpusFirst,
}

fn finite_witness(
    models: &Models,
    left: &Fingerprint,
    right: &Fingerprint,
    fails: impl Fn(Subset, Subset) -> bool,
) -> Option<Witness> {
    let mut offset = 0;
    for (space, s) in models.spaces.iter().enumerate() {
        for a in 0..s.subset_count() {
            let (l, r) = (left.finite[offset + a] as Subset, right.finite[offset + a] as Subset);
            if fails(l, r) {
                return Some(Witness::Finite {
                    space,
                    points: s.points(),
                    opens: s.opens().to_vec(),
                    subset: a as Subset,
                    left: l,
                    right: r,
                });
            }
        }
        offset += s.subset_count();
    }
    None
}

fn probe_witness(
    models: &Models,
    left: &Fingerprint,
    right: &Fingerprint,
    fails: impl Fn(&RealLineSet, &RealLineSet) -> bool,
) -> Option<Witness> {
    left.probes
        .iter()
        .zip(&right.probes)
        .enumerate()
        .find(|(_, (l, r))| fails(l, r))
        .map(|(probe, (l, r))| Witness::Realline {
            probe,
            set: models.corpus[probe].clone(),
            left: l.clone(),
            right: r.clone(),
        })
}

/// First model input where `left` and `right` differ.
pub fn find_difference(models: &Models, left: &Fingerprint, right: &Fingerprint, order: SearchOrder) -> Option<Witness> {
    let finite = || finite_witness(models, left, right, |l, r| l != r);
    let probe = || probe_witness(models, left, right, |l, r| l != r);
    match order {
        SearchOrder::FiniteFirst => finite().or_else(probe),
        SearchOrder::CorpusFirst => probe().or_else(finite),
    }
}

/// First model input where `left(A) ⊆ right(A)` fails.
pub fn find_non_inclusion(models: &Models, left: &Fingerprint, right: &Fingerprint, order: SearchOrder) -> Option<Witness> {
    let finite = || finite_witness(models, left, right, |l, r| l & !r != 0);
    let probe = || probe_witness(models, left, right, |l, r| !l.subset_of(r));
    match order {
        SearchOrder::FiniteFirst => finite().or_else(probe),
        SearchOrder::CorpusFirst => probe().or_else(finite),
    }
}

/// First finite space and subset, then first corpus set, on which the two
/// words disagree. `None` only means the supplied models cannot tell them apart.
pub fn separate(w1: &Word, w2: &Word, spaces: &[FiniteSpace], corpus: &[RealLineSet]) -> Option<Witness> {
    separate_in(w1, w2, &Models::new(spaces.to_vec(), corpus.to_vec()), SearchOrder::FiniteFirst)
}

pub fn separate_in(w1: &Word, w2: &Word, models: &Models, order: SearchOrder) -> Option<Witness> {
    find_difference(models, &models.fingerprint(w1), &models.fingerprint(w2), order)
}
