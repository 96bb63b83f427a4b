//! Finite topological spaces on points `{0, …, n-1}`.
//!
//! Subsets are bitmasks (bit `j` is point `j`) and a family of subsets is
//! itself a bitmask over the `2^n` subset masks, so for `n ≤ 5` a whole
//! topology fits in a `u32`. Every operator is tabulated over the
//! powerset when the space is built.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::SpaceError;
use crate::terms::{Generator, Word};

pub type Subset = u32;

/// Largest point count handled by the generation strategy.
pub const MAX_POINTS: usize = 5;
/// Largest point count handled by the exhaustive axiom filter.
pub const MAX_FILTER_POINTS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSpace {
    n: usize,
    opens: Vec<Subset>,
    closure: Vec<Subset>,
    interior: Vec<Subset>,
    derived: Vec<Subset>,
}

fn full_mask(n: usize) -> Subset {
    (1u32 << n) - 1
}

fn family_has(family: u32, set: Subset) -> bool {
    family >> set & 1 == 1
}

fn is_lattice_closed(family: u32, size: usize) -> bool {
    for a in 0..size as Subset {
        if !family_has(family, a) {
            continue;
        }
        for b in (a + 1)..size as Subset {
            if family_has(family, b) && !(family_has(family, a | b) && family_has(family, a & b)) {
                return false;
            }
        }
    }
    true
}

fn family_members(family: u32, size: usize) -> Vec<Subset> {
    (0..size as Subset).filter(|&s| family_has(family, s)).collect()
}

impl FiniteSpace {
    /// Builds a space from its open sets, checking the topology axioms.
    pub fn from_opens(n: usize, opens: &[Subset]) -> Result<Self, SpaceError> {
        if n == 0 || n > MAX_POINTS {
            return Err(SpaceError::PointCount { n, min: 1, max: MAX_POINTS });
        }
        let size = 1usize << n;
        let mut family = 0u32;
        for &o in opens {
            if o as usize >= size {
                return Err(SpaceError::MaskOutOfRange { mask: o, n });
            }
            family |= 1 << o;
        }
        if !family_has(family, 0) || !family_has(family, full_mask(n)) {
            return Err(SpaceError::NotATopology("missing empty set or whole space".into()));
        }
        if !is_lattice_closed(family, size) {
            return Err(SpaceError::NotATopology("not closed under union and intersection".into()));
        }
        Ok(Self::from_family(n, family))
    }

    fn from_family(n: usize, family: u32) -> Self {
        let size = 1usize << n;
        let full = full_mask(n);
        let opens = family_members(family, size);
        let interior: Vec<Subset> = (0..size as Subset)
            .map(|a| opens.iter().filter(|&&o| o & !a == 0).fold(0, |acc, &o| acc | o))
            .collect();
        let closure: Vec<Subset> = (0..size as Subset)
            .map(|a| {
                opens
                    .iter()
                    .map(|&o| full & !o)
                    .filter(|&closed| a & !closed == 0)
                    .fold(full, |acc, closed| acc & closed)
            })
            .collect();
        let derived: Vec<Subset> = (0..size as Subset)
            .map(|a| {
                (0..n)
                    .filter(|&x| {
                        let bit = 1 << x;
                        opens
                            .iter()
                            .filter(|&&g| g & bit != 0)
                            .all(|&g| a & g & !bit != 0)
                    })
                    .fold(0, |acc, x| acc | 1 << x)
            })
            .collect();
        FiniteSpace { n, opens, closure, interior, derived }
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> Subset {
        full_mask(self.n)
    }

    /// Number of subsets, `2^n`.
    pub fn subset_count(&self) -> usize {
        1 << self.n
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn closure(&self, a: Subset) -> Subset {
        self.closure[a as usize]
    }

    pub fn interior(&self, a: Subset) -> Subset {
        self.interior[a as usize]
    }

    pub fn derived(&self, a: Subset) -> Subset {
        self.derived[a as usize]
    }

    pub fn complement(&self, a: Subset) -> Subset {
        self.full() & !a
    }

    pub fn boundary(&self, a: Subset) -> Subset {
        self.complement(self.interior(a) | self.interior(self.complement(a)))
    }

    /// Applies one generator. `a` must be below `2^n`.
    pub fn apply(&self, g: Generator, a: Subset) -> Subset {
        match g {
            Generator::Id => a,
            Generator::Closure => self.closure(a),
            Generator::Interior => self.interior(a),
            Generator::Complement => self.complement(a),
            Generator::Exterior => self.interior(self.complement(a)),
            Generator::Boundary => self.boundary(a),
            Generator::BoundaryInt => self.boundary(a) & a,
            Generator::BoundaryExt => self.boundary(a) & self.complement(a),
            Generator::Derived => self.derived(a),
        }
    }

    pub fn apply_generator(&self, g: Generator, a: Subset) -> Result<Subset, SpaceError> {
        if a as usize >= self.subset_count() {
            return Err(SpaceError::MaskOutOfRange { mask: a, n: self.n });
        }
        Ok(self.apply(g, a))
    }

    /// Applies a word, rightmost generator first.
    pub fn eval_word(&self, w: &Word, a: Subset) -> Subset {
        w.application_order().fold(a, |acc, g| self.apply(g, acc))
    }

    pub fn transform_of_word(&self, w: &Word) -> TransformTable {
        TransformTable {
            table: (0..self.subset_count() as Subset).map(|a| self.eval_word(w, a)).collect(),
        }
    }

    pub fn generator_table(&self, g: Generator) -> TransformTable {
        TransformTable {
            table: (0..self.subset_count() as Subset).map(|a| self.apply(g, a)).collect(),
        }
    }
}

/// The action of a word on the powerset of one space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransformTable {
    pub table: Vec<Subset>,
}

impl TransformTable {
    pub fn identity(space: &FiniteSpace) -> Self {
        TransformTable { table: (0..space.subset_count() as Subset).collect() }
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn after(&self, inner: &TransformTable) -> TransformTable {
        TransformTable { table: inner.table.iter().map(|&a| self.table[a as usize]).collect() }
    }

    pub fn image(&self, a: Subset) -> Subset {
        self.table[a as usize]
    }

    /// Pointwise inclusion `self(A) ⊆ other(A)` for all `A`.
    pub fn below(&self, other: &TransformTable) -> bool {
        self.table.iter().zip(&other.table).all(|(&a, &b)| a & !b == 0)
    }

    /// Number of distinct images.
    pub fn range_size(&self) -> usize {
        let mut seen: Vec<Subset> = self.table.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

fn check_points(n: usize, max: usize) -> Result<(), SpaceError> {
    if n == 0 || n > max {
        Err(SpaceError::PointCount { n, min: 1, max })
    } else {
        Ok(())
    }
}

fn sort_families(n: usize, families: impl IntoIterator<Item = u32>) -> Vec<Vec<Subset>> {
    let size = 1usize << n;
    let mut out: Vec<Vec<Subset>> =
        families.into_iter().map(|f| family_members(f, size)).collect();
    out.sort();
    out
}

/// All topologies found by testing every family of proper nonempty
/// subsets (plus `∅` and `X`) against the lattice axioms.
pub fn topologies_by_filter(n: usize) -> Result<Vec<Vec<Subset>>, SpaceError> {
    check_points(n, MAX_FILTER_POINTS)?;
    let size = 1usize << n;
    let inner_bits = size - 2;
    let fixed = 1u32 | 1u32 << (size - 1);
    let candidates = 0..(1u64 << inner_bits);
    let check = |bits: u64| {
        let family = fixed | (bits as u32) << 1;
        is_lattice_closed(family, size).then_some(family)
    };
    #[cfg(feature = "parallel")]
    let families: Vec<u32> = {
        use rayon::prelude::*;
        candidates.into_par_iter().filter_map(check).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let families: Vec<u32> = candidates.filter_map(check).collect();
    Ok(sort_families(n, families))
}

fn close_family(mut family: u32, size: usize) -> u32 {
    loop {
        let mut next = family;
        for a in 0..size as Subset {
            if !family_has(family, a) {
                continue;
            }
            for b in (a + 1)..size as Subset {
                if family_has(family, b) {
                    next |= 1 << (a | b);
                    next |= 1 << (a & b);
                }
            }
        }
        if next == family {
            return family;
        }
        family = next;
    }
}

/// All topologies reached from the indiscrete one by repeatedly adding a
/// subset and closing under pairwise union and intersection.
pub fn topologies_by_generation(n: usize) -> Result<Vec<Vec<Subset>>, SpaceError> {
    check_points(n, MAX_POINTS)?;
    let size = 1usize << n;
    let start = 1u32 | 1u32 << (size - 1);
    let mut seen = HashSet::from([start]);
    let mut stack = vec![start];
    while let Some(family) = stack.pop() {
        for s in 1..(size - 1) as Subset {
            if family_has(family, s) {
                continue;
            }
            let next = close_family(family | 1 << s, size);
            if seen.insert(next) {
                stack.push(next);
            }
        }
    }
    Ok(sort_families(n, seen))
}

/// All labeled topologies on `n` points in lexicographic order of their
/// sorted open-set masks. Uses the axiom filter for `n ≤ 4` and the
/// generation strategy for `n = 5`.
pub fn enumerate_topologies(n: usize) -> Result<Vec<FiniteSpace>, SpaceError> {
    check_points(n, MAX_POINTS)?;
    let families = if n <= MAX_FILTER_POINTS {
        topologies_by_filter(n)?
    } else {
        topologies_by_generation(n)?
    };
    families.iter().map(|opens| FiniteSpace::from_opens(n, opens)).collect()
}

/// Every topology on `1..=max_n` points, smallest spaces first.
pub fn spaces_up_to(max_n: usize) -> Result<Vec<FiniteSpace>, SpaceError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_topologies(n)?);
    }
    Ok(out)
}

/// Interchange format: `{n, spaces: [{opens: [masks]}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpacesFile {
    pub n: usize,
    pub spaces: Vec<SpaceEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceEntry {
    pub opens: Vec<Subset>,
}

impl SpacesFile {
    pub fn from_spaces(n: usize, spaces: &[FiniteSpace]) -> Self {
        SpacesFile {
            n,
            spaces: spaces.iter().map(|s| SpaceEntry { opens: s.opens().to_vec() }).collect(),
        }
    }

    pub fn to_spaces(&self) -> Result<Vec<FiniteSpace>, SpaceError> {
        self.spaces.iter().map(|e| FiniteSpace::from_opens(self.n, &e.opens)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::parse_word;

    fn sierpinski() -> FiniteSpace {
        FiniteSpace::from_opens(2, &[0b00, 0b10, 0b11]).unwrap()
    }

    fn discrete(n: usize) -> FiniteSpace {
        let opens: Vec<Subset> = (0..1u32 << n).collect();
        FiniteSpace::from_opens(n, &opens).unwrap()
    }

    fn indiscrete(n: usize) -> FiniteSpace {
        FiniteSpace::from_opens(n, &[0, full_mask(n)]).unwrap()
    }

    #[test]
    fn sierpinski_closures() {
        let s = sierpinski();
        assert_eq!(s.closure(0b10), 0b11);
        assert_eq!(s.closure(0b01), 0b01);
        assert_eq!(s.interior(0b01), 0);
        assert_eq!(s.interior(0b10), 0b10);
    }

    #[test]
    fn discrete_has_no_accumulation_points() {
        let s = discrete(3);
        for a in 0..8 {
            assert_eq!(s.derived(a), 0);
            assert_eq!(s.closure(a), a);
        }
    }

    #[test]
    fn indiscrete_derived_set() {
        let s = indiscrete(2);
        assert_eq!(s.derived(0b01), 0b10);
        assert_eq!(s.derived(0b11), 0b11);
        assert_eq!(s.derived(0), 0);
    }

    #[test]
    fn rejects_non_topologies() {
        assert!(matches!(
            FiniteSpace::from_opens(2, &[0b11, 0b01]),
            Err(SpaceError::NotATopology(_))
        ));
        assert!(matches!(
            FiniteSpace::from_opens(3, &[0, 0b001, 0b010, 0b111]),
            Err(SpaceError::NotATopology(_))
        ));
        assert!(matches!(
            FiniteSpace::from_opens(2, &[0, 7]),
            Err(SpaceError::MaskOutOfRange { mask: 7, n: 2 })
        ));
        assert!(matches!(FiniteSpace::from_opens(6, &[]), Err(SpaceError::PointCount { .. })));
    }

    #[test]
    fn apply_generator_checks_range() {
        let s = sierpinski();
        assert_eq!(s.apply_generator(Generator::Closure, 0b10), Ok(0b11));
        assert_eq!(
            s.apply_generator(Generator::Closure, 4),
            Err(SpaceError::MaskOutOfRange { mask: 4, n: 2 })
        );
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_topologies(1).unwrap().len(), 1);
        assert_eq!(enumerate_topologies(2).unwrap().len(), 4);
        assert_eq!(enumerate_topologies(3).unwrap().len(), 29);
    }

    #[test]
    fn enumeration_bounds() {
        assert_eq!(
            enumerate_topologies(0),
            Err(SpaceError::PointCount { n: 0, min: 1, max: 5 })
        );
        assert_eq!(
            enumerate_topologies(6),
            Err(SpaceError::PointCount { n: 6, min: 1, max: 5 })
        );
        assert_eq!(
            topologies_by_filter(5),
            Err(SpaceError::PointCount { n: 5, min: 1, max: 4 })
        );
    }

    #[test]
    fn enumeration_is_sorted() {
        let spaces = enumerate_topologies(3).unwrap();
        for pair in spaces.windows(2) {
            assert!(pair[0].opens() < pair[1].opens());
        }
        assert_eq!(spaces[0].opens(), &[0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(spaces.last().unwrap().opens(), &[0, 7]);
    }

    #[test]
    fn word_tables_compose() {
        for s in enumerate_topologies(3).unwrap() {
            let ci = s.transform_of_word(&parse_word("c.i").unwrap());
            let c = s.transform_of_word(&parse_word("c").unwrap());
            let i = s.transform_of_word(&parse_word("i").unwrap());
            assert_eq!(ci, c.after(&i));
            assert_eq!(s.transform_of_word(&Word::identity()), TransformTable::identity(&s));
            assert_eq!(s.transform_of_word(&parse_word("c.c").unwrap()), c);
            assert_eq!(
                s.transform_of_word(&parse_word("c.n").unwrap()),
                s.transform_of_word(&parse_word("n.i").unwrap())
            );
        }
    }

    #[test]
    fn interchange_round_trip() {
        let spaces = enumerate_topologies(2).unwrap();
        let file = SpacesFile::from_spaces(2, &spaces);
        assert_eq!(file.to_spaces().unwrap(), spaces);
    }
}
