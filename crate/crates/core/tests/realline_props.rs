//! Real-line set algebra: laws on random sets and a pointwise membership oracle.

use kuratowski::realline::{default_corpus, eval_word_real, make_set, Density, RealLineSet, Rational};
use kuratowski::rewrite::normalize;
use kuratowski::terms::{words_up_to, Generator};
use kuratowski::Word;
use proptest::prelude::*;

fn density() -> impl Strategy<Value = Density> {
    prop_oneof![
        Just(Density::Empty),
        Just(Density::Full),
        Just(Density::Rationals),
        Just(Density::Irrationals),
    ]
}

/// Random sets with up to five breakpoints on a half-integer grid.
fn real_set() -> impl Strategy<Value = RealLineSet> {
    proptest::collection::btree_set(-8i64..8, 0..=5).prop_flat_map(|grid| {
        let bps: Vec<Rational> = grid.into_iter().map(|k| Rational::new(k, 2)).collect();
        let k = bps.len();
        (
            Just(bps),
            proptest::collection::vec(any::<bool>(), k),
            proptest::collection::vec(density(), k + 1),
        )
            .prop_map(|(b, p, c)| RealLineSet::from_parts(b, p, c).unwrap())
    })
}

/// Probe points: every grid point and the rational midpoints between them.
fn probes() -> Vec<Rational> {
    (-40i64..=40).map(|k| Rational::new(k, 4)).collect()
}

fn golden_corpus() -> Vec<RealLineSet> {
    let mut out = default_corpus();
    for lit in [
        "[0,1]I",
        "(0,1)+(1,2)+{3}+[4,5]Q",
        "(-inf,0)+{1/2}+(1,inf)Q",
        "[-1,1)Q+(1,2]I+{5}",
        "(-inf,inf)Q",
        "{}",
    ] {
        out.push(make_set(lit).unwrap());
    }
    out
}

fn is_canonical(s: &RealLineSet) -> bool {
    let rebuilt = RealLineSet::from_parts(
        s.breakpoints().to_vec(),
        s.point_membership().to_vec(),
        s.cells().to_vec(),
    )
    .unwrap();
    rebuilt.breakpoints() == s.breakpoints()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closure_duality(a in real_set()) {
        prop_assert_eq!(a.closure(), a.complement().interior().complement());
        prop_assert_eq!(a.complement().closure(), a.interior().complement());
    }

    #[test]
    fn idempotence(a in real_set()) {
        prop_assert_eq!(a.closure().closure(), a.closure());
        prop_assert_eq!(a.interior().interior(), a.interior());
    }

    #[test]
    fn alternation_collapse(a in real_set()) {
        prop_assert_eq!(a.closure().interior().closure().interior(), a.closure().interior());
        prop_assert_eq!(a.interior().closure().interior().closure(), a.interior().closure());
    }

    #[test]
    fn every_generator_preserves_canonical_form(a in real_set()) {
        for g in Generator::ALL {
            prop_assert!(is_canonical(&a.apply(g)));
        }
    }

    #[test]
    fn literal_round_trip(a in real_set()) {
        prop_assert_eq!(make_set(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn boolean_ops_match_membership(a in real_set(), b in real_set()) {
        let (u, i, c) = (a.union(&b), a.intersection(&b), a.complement());
        for x in probes() {
            prop_assert_eq!(u.contains(&x), a.contains(&x) || b.contains(&x));
            prop_assert_eq!(i.contains(&x), a.contains(&x) && b.contains(&x));
            prop_assert_eq!(c.contains(&x), !a.contains(&x));
        }
    }

    #[test]
    fn subset_order(a in real_set(), b in real_set()) {
        prop_assert!(a.subset_of(&a));
        prop_assert!(a.intersection(&b).subset_of(&a));
        prop_assert!(a.subset_of(&a.union(&b)));
        if a.subset_of(&b) && b.subset_of(&a) {
            prop_assert_eq!(&a, &b);
        }
    }

    #[test]
    fn boundary_identities(a in real_set()) {
        prop_assert_eq!(a.boundary(), a.complement().boundary());
        prop_assert_eq!(a.boundary(), a.closure().intersection(&a.complement().closure()));
        prop_assert_eq!(a.closure(), a.union(&a.derived()));
    }
}

#[test]
fn words_agree_with_normal_forms_on_corpus() {
    let corpus = golden_corpus();
    let alphabet = [Generator::Closure, Generator::Interior, Generator::Complement];
    for w in words_up_to(&alphabet, 8) {
        let nf: Word = normalize(&w).word;
        for s in &corpus {
            assert_eq!(eval_word_real(&w, s), eval_word_real(&nf, s), "{w} vs {nf} on {s}");
        }
    }
}

#[test]
fn classical_fourteen_set() {
    let a = make_set("(0,1)+(1,2)+{3}+[4,5]Q").unwrap();
    let alphabet = [Generator::Closure, Generator::Complement];
    let mut images: Vec<RealLineSet> = words_up_to(&alphabet, 10).iter().map(|w| eval_word_real(w, &a)).collect();
    images.sort_by_key(|s| s.to_string());
    images.dedup();
    assert_eq!(images.len(), 14);
}
