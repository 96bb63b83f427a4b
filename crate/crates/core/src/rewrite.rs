//! String rewriting of operator words by relations valid in every space.
//!
//! The rules are oriented so that complements migrate to the left and
//! alternating closure/interior runs collapse to length at most three.
//! On words over `{c, i, n, e, id}` the system is terminating and
//! confluent, and its normal forms are the fourteen words
//! `[n] · {id, c, i, ci, ic, cic, ici}`. Words that mention the boundary
//! family or the derived set are only partially normalized: nothing
//! beyond `b.n → b` is known to hold for them universally.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::terms::{Generator, Word};

/// A directed relation `lhs → rhs` applied to contiguous subwords.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Word,
    /// Name of the law the rule orients.
    pub source: &'static str,
}

impl RewriteRule {
    fn new(lhs: &[Generator], rhs: &[Generator], source: &'static str) -> Self {
        RewriteRule { lhs: Word::new(lhs.to_vec()), rhs: Word::new(rhs.to_vec()), source }
    }

    /// Printable form such as `c.n -> n.i`.
    pub fn label(&self) -> String {
        let rhs = if self.rhs.is_empty() { "ε".to_string() } else { self.rhs.to_string() };
        format!("{} -> {}", self.lhs, rhs)
    }
}

fn symbols(side: &Word) -> BTreeSet<Generator> {
    side.gens().iter().copied().collect()
}

/// The complete rule list in application priority order.
pub fn all_rules() -> Vec<RewriteRule> {
    use Generator::*;
    vec![
        RewriteRule::new(&[Closure, Closure], &[Closure], "closure idempotence"),
        RewriteRule::new(&[Interior, Interior], &[Interior], "interior idempotence"),
        RewriteRule::new(&[Complement, Complement], &[Id], "complement involution"),
        RewriteRule::new(&[Closure, Complement], &[Complement, Interior], "closure/interior duality"),
        RewriteRule::new(&[Interior, Complement], &[Complement, Closure], "interior/closure duality"),
        RewriteRule::new(&[Closure, Interior, Closure, Interior], &[Closure, Interior], "alternation collapse"),
        RewriteRule::new(&[Interior, Closure, Interior, Closure], &[Interior, Closure], "alternation collapse"),
        RewriteRule::new(&[Exterior], &[Interior, Complement], "exterior definition"),
        RewriteRule::new(&[Boundary, Complement], &[Boundary], "boundary complement invariance"),
        RewriteRule::new(&[Id], &[], "identity elimination"),
    ]
}

/// Rules relevant to words over `alphabet`.
///
/// The alphabet is first closed under rewriting (a rule whose left side
/// is expressible contributes the symbols of its right side, so `e`
/// pulls in `i`, `n` and then `c`). Identity elimination is always present.
pub fn rule_set(alphabet: &[Generator]) -> Vec<RewriteRule> {
    let rules = all_rules();
    let mut closure: BTreeSet<Generator> = alphabet.iter().copied().collect();
    closure.insert(Generator::Id);
    loop {
        let before = closure.len();
        for r in &rules {
            if symbols(&r.lhs).is_subset(&closure) {
                closure.extend(symbols(&r.rhs));
            }
        }
        if closure.len() == before {
            break;
        }
    }
    rules
        .into_iter()
        .filter(|r| symbols(&r.lhs).is_subset(&closure))
        .collect()
}

/// One rewrite step in a normalization trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RewriteStep {
    pub rule: String,
    pub position: usize,
    pub before: Word,
    pub after: Word,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalForm {
    pub word: Word,
    pub trace: Vec<RewriteStep>,
}

#[derive(Debug, Clone, Copy)]
struct Redex {
    position: usize,
    len: usize,
    rule: usize,
}

impl Redex {
    fn strictly_contains(&self, other: &Redex) -> bool {
        self.position <= other.position
            && other.position + other.len <= self.position + self.len
            && (self.position, self.len) != (other.position, other.len)
    }
}

fn find_redexes(gens: &[Generator], rules: &[RewriteRule]) -> Vec<Redex> {
    let mut out = Vec::new();
    for position in 0..gens.len() {
        for (rule, r) in rules.iter().enumerate() {
            let lhs = r.lhs.gens();
            if gens[position..].starts_with(lhs) {
                out.push(Redex { position, len: lhs.len(), rule });
            }
        }
    }
    out
}

/// Picks the leftmost redex that contains no other redex; ties at one
/// position go to the earlier rule.
fn select_redex(redexes: &[Redex]) -> Option<Redex> {
    redexes
        .iter()
        .filter(|r| !redexes.iter().any(|o| r.strictly_contains(o)))
        .min_by_key(|r| (r.position, r.rule))
        .copied()
}

/// Rewrites `w` with [`all_rules`] until no rule applies.
pub fn normalize(w: &Word) -> NormalForm {
    normalize_with(w, &all_rules())
}

pub fn normalize_with(w: &Word, rules: &[RewriteRule]) -> NormalForm {
    let mut gens = w.gens().to_vec();
    let mut trace = Vec::new();
    while let Some(redex) = select_redex(&find_redexes(&gens, rules)) {
        let rule = &rules[redex.rule];
        let before = Word::new(gens.clone());
        gens.splice(
            redex.position..redex.position + redex.len,
            rule.rhs.gens().iter().copied(),
        );
        trace.push(RewriteStep {
            rule: rule.label(),
            position: redex.position,
            before,
            after: Word::new(gens.clone()),
        });
    }
    NormalForm { word: Word::new(gens), trace }
}

/// Equality of normal forms. Sound everywhere, complete on `{c, i, n, e, id}`.
pub fn syntactically_equal(w1: &Word, w2: &Word) -> bool {
    normalize(w1).word == normalize(w2).word
}

/// The seven closure/interior normal forms.
pub fn closure_interior_forms() -> Vec<Word> {
    use Generator::*;
    vec![
        Word::identity(),
        Word::new(vec![Closure]),
        Word::new(vec![Interior]),
        Word::new(vec![Closure, Interior]),
        Word::new(vec![Interior, Closure]),
        Word::new(vec![Interior, Closure, Interior]),
        Word::new(vec![Closure, Interior, Closure]),
    ]
}

/// The fourteen closure/interior/complement normal forms: the seven
/// closure/interior forms, each optionally preceded by one complement.
pub fn closure_complement_forms() -> Vec<Word> {
    let base = closure_interior_forms();
    let negated: Vec<Word> = base.iter().map(|w| w.prepend(Generator::Complement)).collect();
    base.into_iter().chain(negated).collect()
}
