//! Pointwise checks of operator identities over whole model families.

use serde::Serialize;

use crate::finitetop::{FiniteSpace, Subset};
use crate::realline::{eval_word_real, RealLineSet};
use crate::rewrite::all_rules;
use crate::terms::{parse_word, Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: String,
    pub instances: usize,
    pub violations: usize,
    pub first_counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub spaces: usize,
    pub probes: usize,
    pub checks: Vec<LawCheck>,
}

impl SweepReport {
    pub fn total_violations(&self) -> usize {
        self.checks.iter().map(|c| c.violations).sum()
    }

    pub fn passed(&self) -> bool {
        self.total_violations() == 0
    }
}

struct Tally {
    check: LawCheck,
}

impl Tally {
    fn new(law: impl Into<String>) -> Self {
        Tally {
            check: LawCheck { law: law.into(), instances: 0, violations: 0, first_counterexample: None },
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.check.instances += 1;
        if !ok {
            self.check.violations += 1;
            if self.check.first_counterexample.is_none() {
                self.check.first_counterexample = Some(describe());
            }
        }
    }
}

fn w(text: &str) -> Word {
    parse_word(text).expect("built-in word")
}

/// Pairs of words asserted equal as operators.
fn word_identities() -> Vec<(String, Word, Word)> {
    let mut out: Vec<(String, Word, Word)> = all_rules()
        .into_iter()
        .map(|r| (format!("rule {}", r.label()), r.lhs, r.rhs))
        .collect();
    for (name, l, r) in [
        ("closure idempotence c.c = c", "c.c", "c"),
        ("interior idempotence i.i = i", "i.i", "i"),
        ("duality c.n = n.i", "c.n", "n.i"),
        ("duality i.n = n.c", "i.n", "n.c"),
        ("exterior e = i.n", "e", "i.n"),
        ("boundary complement b.n = b", "b.n", "b"),
        ("alternation c.i.c.i = c.i", "c.i.c.i", "c.i"),
        ("alternation i.c.i.c = i.c", "i.c.i.c", "i.c"),
    ] {
        out.push((name.to_string(), w(l), w(r)));
    }
    out
}

fn describe_space(s: &FiniteSpace) -> String {
    format!("space n={} opens={:?}", s.points(), s.opens())
}

/// Checks every identity on every subset of every space.
pub fn sweep_finite(spaces: &[FiniteSpace]) -> Vec<LawCheck> {
    let identities = word_identities();
    let mut word_tallies: Vec<Tally> = identities.iter().map(|(n, _, _)| Tally::new(n.clone())).collect();
    let mut extensive = Tally::new("interior(A) ⊆ A ⊆ closure(A)");
    let mut boundary_formula = Tally::new("b = n(i ∪ i.n)");
    let mut boundary_split = Tally::new("b = bi ∪ be, bi ∩ be = ∅");
    let mut boundary_closures = Tally::new("b = c ∩ c.n");
    let mut closure_derived = Tally::new("c = id ∪ d");
    let mut monotone = Tally::new("A ⊆ B ⇒ c(A) ⊆ c(B) and i(A) ⊆ i(B)");

    for s in spaces {
        let full = s.full();
        for a in 0..s.subset_count() as Subset {
            let at = || format!("{} A={a:#b}", describe_space(s));
            for ((_, l, r), t) in identities.iter().zip(word_tallies.iter_mut()) {
                let (lv, rv) = (s.eval_word(l, a), s.eval_word(r, a));
                t.record(lv == rv, || format!("{} gives {lv:#b} vs {rv:#b}", at()));
            }
            extensive.record(s.interior(a) & !a == 0 && a & !s.closure(a) == 0, at);
            let b = s.apply(Generator::Boundary, a);
            boundary_formula.record(b == full & !(s.interior(a) | s.interior(full & !a)), at);
            let (bi, be) = (s.apply(Generator::BoundaryInt, a), s.apply(Generator::BoundaryExt, a));
            boundary_split.record(b == bi | be && bi & be == 0, at);
            boundary_closures.record(b == s.closure(a) & s.closure(full & !a), at);
            closure_derived.record(s.closure(a) == a | s.derived(a), at);
            for bset in 0..s.subset_count() as Subset {
                if a & !bset != 0 {
                    continue;
                }
                let ok = s.closure(a) & !s.closure(bset) == 0 && s.interior(a) & !s.interior(bset) == 0;
                monotone.record(ok, || format!("{} B={bset:#b}", at()));
            }
        }
    }
    word_tallies
        .into_iter()
        .chain([extensive, boundary_formula, boundary_split, boundary_closures, closure_derived, monotone])
        .map(|t| t.check)
        .collect()
}

/// Checks the same identities on real-line sets.
pub fn sweep_realline(sets: &[RealLineSet]) -> Vec<LawCheck> {
    let identities = word_identities();
    let mut word_tallies: Vec<Tally> = identities.iter().map(|(n, _, _)| Tally::new(n.clone())).collect();
    let mut extensive = Tally::new("interior(A) ⊆ A ⊆ closure(A)");
    let mut boundary_split = Tally::new("b = bi ∪ be, bi ∩ be = ∅");
    let mut boundary_closures = Tally::new("b = c ∩ c.n");
    let mut closure_derived = Tally::new("c = id ∪ d");
    let mut monotone = Tally::new("A ⊆ B ⇒ c(A) ⊆ c(B) and i(A) ⊆ i(B)");
    for a in sets {
        let at = || format!("A={a}");
        for ((_, l, r), t) in identities.iter().zip(word_tallies.iter_mut()) {
            let (lv, rv) = (eval_word_real(l, a), eval_word_real(r, a));
            t.record(lv == rv, || format!("{} gives {lv} vs {rv}", at()));
        }
        extensive.record(a.interior().subset_of(a) && a.subset_of(&a.closure()), at);
        let b = a.boundary();
        let (bi, be) = (a.apply(Generator::BoundaryInt), a.apply(Generator::BoundaryExt));
        boundary_split.record(b == bi.union(&be) && bi.intersection(&be).is_empty(), at);
        boundary_closures.record(b == a.closure().intersection(&a.complement().closure()), at);
        closure_derived.record(a.closure() == a.union(&a.derived()), at);
        for bset in sets {
            if a.subset_of(bset) {
                let ok = a.closure().subset_of(&bset.closure()) && a.interior().subset_of(&bset.interior());
                monotone.record(ok, || format!("{} B={bset}", at()));
            }
        }
    }
    word_tallies
        .into_iter()
        .chain([extensive, boundary_split, boundary_closures, closure_derived, monotone])
        .map(|t| t.check)
        .collect()
}

pub fn sweep(spaces: &[FiniteSpace], sets: &[RealLineSet]) -> SweepReport {
    let mut checks = sweep_finite(spaces);
    for mut c in sweep_realline(sets) {
        c.law = format!("{} [real line]", c.law);
        checks.push(c);
    }
    SweepReport { spaces: spaces.len(), probes: sets.len(), checks }
}
