use std::fmt::Write as _;

use serde::Serialize;

use super::{find_difference, find_non_inclusion, MonoidReport, SearchOrder, Witness};
use crate::error::MonoidError;
use crate::terms::Word;

/// Pointwise inclusion order `α → β` (α(A) ⊆ β(A) for every model input)
/// on the classes of a report, with its cover relation.
#[derive(Debug, Clone, Serialize)]
pub struct Poset {
    pub elements: Vec<Word>,
    /// `leq[a][b]` iff class `a` is pointwise below class `b`.
    pub leq: Vec<Vec<bool>>,
    /// Cover edges `(lower, upper)` of the transitive reduction.
    pub hasse: Vec<(usize, usize)>,
    /// One input per cover edge where the lower image is strictly smaller.
    pub strictness: Vec<Witness>,
    pub incomparable: Vec<IncomparablePair>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IncomparablePair {
    pub a: usize,
    pub b: usize,
    /// Input where `a(A) ⊆ b(A)` fails.
    pub a_not_below_b: Witness,
    /// Input where `b(A) ⊆ a(A)` fails.
    pub b_not_below_a: Witness,
}

/// Computes the order, its cover edges and witnesses.
///
/// Witnesses are searched on the real-line probes first, then on finite
/// spaces in model order.
pub fn compute_poset(report: &MonoidReport) -> Result<Poset, MonoidError> {
    if report.truncated {
        return Err(MonoidError::Truncated);
    }
    let classes = &report.classes;
    let k = classes.len();
    let leq: Vec<Vec<bool>> = classes
        .iter()
        .map(|a| classes.iter().map(|b| a.fingerprint.below(&b.fingerprint)).collect())
        .collect();
    for a in 0..k {
        for b in (a + 1)..k {
            if leq[a][b] && leq[b][a] {
                return Err(MonoidError::Antisymmetry(
                    classes[a].representative.to_string(),
                    classes[b].representative.to_string(),
                ));
            }
        }
    }
    let hasse = transitive_reduction(&leq);
    let order = SearchOrder::CorpusFirst;
    let strictness = hasse
        .iter()
        .map(|&(lo, hi)| {
            find_difference(&report.models, &classes[lo].fingerprint, &classes[hi].fingerprint, order)
                .expect("distinct classes differ somewhere")
        })
        .collect();
    let mut incomparable = Vec::new();
    for a in 0..k {
        for b in (a + 1)..k {
            if !leq[a][b] && !leq[b][a] {
                let fa = &classes[a].fingerprint;
                let fb = &classes[b].fingerprint;
                incomparable.push(IncomparablePair {
                    a,
                    b,
                    a_not_below_b: find_non_inclusion(&report.models, fa, fb, order).expect("not below"),
                    b_not_below_a: find_non_inclusion(&report.models, fb, fa, order).expect("not below"),
                });
            }
        }
    }
    Ok(Poset {
        elements: report.representatives(),
        leq,
        hasse,
        strictness,
        incomparable,
    })
}

/// Cover pairs of a partial order given as a reflexive relation matrix.
pub fn transitive_reduction(leq: &[Vec<bool>]) -> Vec<(usize, usize)> {
    let k = leq.len();
    let mut edges = Vec::new();
    for a in 0..k {
        for b in 0..k {
            if a == b || !leq[a][b] {
                continue;
            }
            let between = (0..k).any(|c| c != a && c != b && leq[a][c] && leq[c][b]);
            if !between {
                edges.push((a, b));
            }
        }
    }
    edges
}

impl Poset {
    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.elements.iter().position(|e| e == w)
    }

    pub fn below(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Cover edges as word pairs.
    pub fn hasse_words(&self) -> Vec<(Word, Word)> {
        self.hasse
            .iter()
            .map(|&(a, b)| (self.elements[a].clone(), self.elements[b].clone()))
            .collect()
    }

    pub fn incomparable_pair(&self, a: usize, b: usize) -> Option<&IncomparablePair> {
        self.incomparable
            .iter()
            .find(|p| (p.a, p.b) == (a, b) || (p.a, p.b) == (b, a))
    }
}

/// Renders the cover relation as a DOT digraph, lower elements at the bottom.
pub fn emit_hasse_dot(p: &Poset) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    for (idx, w) in p.elements.iter().enumerate() {
        let _ = writeln!(out, "  n{idx} [label=\"{w}\"];");
    }
    for &(a, b) in &p.hasse {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}
