//! Exact set algebra on the real line.
//!
//! A [`RealLineSet`] cuts ℝ at finitely many rational breakpoints. Each
//! breakpoint is either in or out of the set, and each open cell between
//! consecutive breakpoints (including the two unbounded ones) carries a
//! [`Density`]: empty, full, the rationals of the cell, or its
//! irrationals. This family contains `[0,1] ∩ ℚ` and is closed under
//! boolean operations, closure, interior and the derived set.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::ParseSetError;
use crate::terms::{Generator, Word};

pub type Rational = Ratio<i64>;

/// What part of an open cell belongs to the set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Density {
    Empty,
    Rationals,
    Irrationals,
    Full,
}

impl Density {
    fn from_bits(rationals: bool, irrationals: bool) -> Self {
        match (rationals, irrationals) {
            (false, false) => Density::Empty,
            (true, false) => Density::Rationals,
            (false, true) => Density::Irrationals,
            (true, true) => Density::Full,
        }
    }

    pub fn has_rationals(self) -> bool {
        matches!(self, Density::Rationals | Density::Full)
    }

    pub fn has_irrationals(self) -> bool {
        matches!(self, Density::Irrationals | Density::Full)
    }

    pub fn complement(self) -> Self {
        Density::from_bits(!self.has_rationals(), !self.has_irrationals())
    }

    pub fn union(self, other: Self) -> Self {
        Density::from_bits(
            self.has_rationals() || other.has_rationals(),
            self.has_irrationals() || other.has_irrationals(),
        )
    }

    pub fn intersection(self, other: Self) -> Self {
        Density::from_bits(
            self.has_rationals() && other.has_rationals(),
            self.has_irrationals() && other.has_irrationals(),
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Density::Empty => "EMPTY",
            Density::Rationals => "RATIONALS",
            Density::Irrationals => "IRRATIONALS",
            Density::Full => "FULL",
        }
    }

    fn suffix(self) -> &'static str {
        match self {
            Density::Rationals => "Q",
            Density::Irrationals => "I",
            _ => "",
        }
    }
}

/// A subset of ℝ in canonical cell form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RealLineSet {
    breakpoints: Vec<Rational>,
    points: Vec<bool>,
    cells: Vec<Density>,
}

impl RealLineSet {
    pub fn empty() -> Self {
        RealLineSet { breakpoints: Vec::new(), points: Vec::new(), cells: vec![Density::Empty] }
    }

    pub fn full() -> Self {
        RealLineSet { breakpoints: Vec::new(), points: Vec::new(), cells: vec![Density::Full] }
    }

    /// Builds a set from raw parts and canonicalizes it. Returns `None`
    /// unless breakpoints are strictly increasing and the lengths agree
    /// (`cells` has one more entry than `breakpoints`).
    pub fn from_parts(
        breakpoints: Vec<Rational>,
        points: Vec<bool>,
        cells: Vec<Density>,
    ) -> Option<Self> {
        if points.len() != breakpoints.len() || cells.len() != breakpoints.len() + 1 {
            return None;
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        Some(RealLineSet { breakpoints, points, cells }.canonical())
    }

    /// Interval from `lo` to `hi` (`None` for an infinite end) with the
    /// given density; closed ends include the endpoint when the density
    /// contains rationals.
    pub fn interval(
        lo: Option<Rational>,
        lo_closed: bool,
        hi: Option<Rational>,
        hi_closed: bool,
        density: Density,
    ) -> Self {
        let mut breakpoints = Vec::new();
        let mut points = Vec::new();
        let mut cells = Vec::new();
        if let Some(lo) = lo {
            breakpoints.push(lo);
            points.push(lo_closed && density.has_rationals());
            cells.push(Density::Empty);
        }
        cells.push(density);
        if let Some(hi) = hi {
            breakpoints.push(hi);
            points.push(hi_closed && density.has_rationals());
            cells.push(Density::Empty);
        }
        RealLineSet { breakpoints, points, cells }.canonical()
    }

    pub fn singleton(q: Rational) -> Self {
        RealLineSet {
            breakpoints: vec![q],
            points: vec![true],
            cells: vec![Density::Empty, Density::Empty],
        }
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn point_membership(&self) -> &[bool] {
        &self.points
    }

    pub fn cells(&self) -> &[Density] {
        &self.cells
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(|&c| c == Density::Empty) && self.points.iter().all(|&p| !p)
    }

    fn canonical(mut self) -> Self {
        let mut j = 0;
        while j < self.breakpoints.len() {
            let (left, right) = (self.cells[j], self.cells[j + 1]);
            if left == right && self.points[j] == left.has_rationals() {
                self.breakpoints.remove(j);
                self.points.remove(j);
                self.cells.remove(j + 1);
            } else {
                j += 1;
            }
        }
        self
    }

    /// Index of the open cell containing the non-breakpoint `x`.
    fn cell_index(&self, x: &Rational) -> usize {
        self.breakpoints.partition_point(|b| b < x)
    }

    /// Membership of the rational `x`.
    pub fn contains(&self, x: &Rational) -> bool {
        match self.breakpoints.binary_search(x) {
            Ok(j) => self.points[j],
            Err(j) => self.cells[j].has_rationals(),
        }
    }

    /// Combines two sets cellwise on their common refinement.
    fn combine(
        &self,
        other: &Self,
        cell_op: impl Fn(Density, Density) -> Density,
        point_op: impl Fn(bool, bool) -> bool,
    ) -> Self {
        let mut merged: Vec<Rational> =
            self.breakpoints.iter().chain(&other.breakpoints).copied().collect();
        merged.sort();
        merged.dedup();
        let mut cells = Vec::with_capacity(merged.len() + 1);
        let mut points = Vec::with_capacity(merged.len());
        for x in &merged {
            // the cell left of x lies in the same original cell as x's left neighborhood
            let a = self.cells[self.cell_index(x)];
            let b = other.cells[other.cell_index(x)];
            cells.push(cell_op(a, b));
            points.push(point_op(self.contains(x), other.contains(x)));
        }
        let last_a = *self.cells.last().expect("at least one cell");
        let last_b = *other.cells.last().expect("at least one cell");
        cells.push(cell_op(last_a, last_b));
        RealLineSet { breakpoints: merged, points, cells }.canonical()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, Density::union, |a, b| a || b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.combine(other, Density::intersection, |a, b| a && b)
    }

    pub fn complement(&self) -> Self {
        RealLineSet {
            breakpoints: self.breakpoints.clone(),
            points: self.points.iter().map(|p| !p).collect(),
            cells: self.cells.iter().map(|c| c.complement()).collect(),
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn interior(&self) -> Self {
        let cells: Vec<Density> = self
            .cells
            .iter()
            .map(|&c| if c == Density::Full { Density::Full } else { Density::Empty })
            .collect();
        let points = (0..self.breakpoints.len())
            .map(|j| {
                self.points[j] && self.cells[j] == Density::Full && self.cells[j + 1] == Density::Full
            })
            .collect();
        RealLineSet { breakpoints: self.breakpoints.clone(), points, cells }.canonical()
    }

    pub fn closure(&self) -> Self {
        self.complement().interior().complement()
    }

    /// Accumulation points: the closed hull of every nonempty cell.
    pub fn derived(&self) -> Self {
        let cells: Vec<Density> = self
            .cells
            .iter()
            .map(|&c| if c == Density::Empty { Density::Empty } else { Density::Full })
            .collect();
        let points = (0..self.breakpoints.len())
            .map(|j| self.cells[j] != Density::Empty || self.cells[j + 1] != Density::Empty)
            .collect();
        RealLineSet { breakpoints: self.breakpoints.clone(), points, cells }.canonical()
    }

    pub fn exterior(&self) -> Self {
        self.complement().interior()
    }

    pub fn boundary(&self) -> Self {
        self.interior().union(&self.exterior()).complement()
    }

    pub fn subset_of(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    pub fn apply(&self, g: Generator) -> Self {
        match g {
            Generator::Id => self.clone(),
            Generator::Closure => self.closure(),
            Generator::Interior => self.interior(),
            Generator::Complement => self.complement(),
            Generator::Exterior => self.exterior(),
            Generator::Boundary => self.boundary(),
            Generator::BoundaryInt => self.boundary().intersection(self),
            Generator::BoundaryExt => self.boundary().difference(self),
            Generator::Derived => self.derived(),
        }
    }

    /// Set-literal text, parseable by [`make_set`].
    pub fn literal(&self) -> String {
        self.to_string()
    }
}

pub fn apply_generator_real(g: Generator, s: &RealLineSet) -> RealLineSet {
    s.apply(g)
}

/// Applies `w` to `s`, rightmost generator first.
pub fn eval_word_real(w: &Word, s: &RealLineSet) -> RealLineSet {
    w.application_order().fold(s.clone(), |acc, g| acc.apply(g))
}

pub fn subset_of(a: &RealLineSet, b: &RealLineSet) -> bool {
    a.subset_of(b)
}

fn format_bound(q: Option<&Rational>, lower: bool) -> String {
    match q {
        Some(q) => q.to_string(),
        None if lower => "-inf".to_string(),
        None => "inf".to_string(),
    }
}

impl fmt::Display for RealLineSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        let k = self.breakpoints.len();
        let mut emitted = vec![false; k];
        // atoms keyed by position: cell j at 2j, breakpoint j at 2j+1
        let mut atoms: Vec<(usize, String)> = Vec::new();
        for (j, &cell) in self.cells.iter().enumerate() {
            if cell == Density::Empty {
                continue;
            }
            let absorbs = cell.has_rationals();
            let lo = j.checked_sub(1);
            let hi = (j < k).then_some(j);
            let open = match lo {
                Some(l) if absorbs && self.points[l] && !emitted[l] => {
                    emitted[l] = true;
                    '['
                }
                _ => '(',
            };
            let close = match hi {
                Some(h) if absorbs && self.points[h] => {
                    emitted[h] = true;
                    ']'
                }
                _ => ')',
            };
            atoms.push((
                2 * j,
                format!(
                    "{open}{},{}{close}{}",
                    format_bound(lo.map(|l| &self.breakpoints[l]), true),
                    format_bound(hi.map(|h| &self.breakpoints[h]), false),
                    cell.suffix()
                ),
            ));
        }
        for (j, q) in self.breakpoints.iter().enumerate() {
            if self.points[j] && !emitted[j] {
                atoms.push((2 * j + 1, format!("{{{q}}}")));
            }
        }
        atoms.sort_by_key(|(key, _)| *key);
        let parts: Vec<String> = atoms.into_iter().map(|(_, s)| s).collect();
        f.write_str(&parts.join("+"))
    }
}

impl Serialize for RealLineSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RealLineSet", 4)?;
        st.serialize_field("literal", &self.to_string())?;
        let bps: Vec<String> = self.breakpoints.iter().map(|q| q.to_string()).collect();
        st.serialize_field("breakpoints", &bps)?;
        st.serialize_field("points", &self.points)?;
        let cells: Vec<&str> = self.cells.iter().map(|c| c.name()).collect();
        st.serialize_field("cells", &cells)?;
        st.end()
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn error(&self, reason: impl Into<String>) -> ParseSetError {
        ParseSetError::Malformed { position: self.pos, reason: reason.into() }
    }

    fn expect(&mut self, ch: char) -> Result<(), ParseSetError> {
        if self.peek() == Some(ch) {
            self.pos += ch.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected '{ch}'")))
        }
    }

    fn eat(&mut self, ch: char) -> bool {
        if self.peek() == Some(ch) {
            self.pos += ch.len_utf8();
            true
        } else {
            false
        }
    }

    /// A rational, or `None` for `inf` / `-inf` (returned with its sign).
    fn bound(&mut self) -> Result<Bound, ParseSetError> {
        self.skip_ws();
        let rest = &self.text[self.pos..];
        for (lit, b) in [("-inf", Bound::NegInf), ("+inf", Bound::PosInf), ("inf", Bound::PosInf)] {
            if rest.starts_with(lit) {
                self.pos += lit.len();
                return Ok(b);
            }
        }
        Ok(Bound::Finite(self.rational()?))
    }

    fn rational(&mut self) -> Result<Rational, ParseSetError> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        let mut end = start;
        if end < bytes.len() && bytes[end] == b'-' {
            end += 1;
        }
        let digits = |mut i: usize| {
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            i
        };
        let num_end = digits(end);
        if num_end == end {
            return Err(self.error("expected a rational number"));
        }
        let numer: i64 = self.text[start..num_end]
            .parse()
            .map_err(|_| self.error("numerator out of range"))?;
        self.pos = num_end;
        if num_end < bytes.len() && bytes[num_end] == b'/' {
            let den_end = digits(num_end + 1);
            if den_end == num_end + 1 {
                return Err(self.error("expected a denominator"));
            }
            let denom: i64 = self.text[num_end + 1..den_end]
                .parse()
                .map_err(|_| self.error("denominator out of range"))?;
            if denom == 0 {
                return Err(self.error("zero denominator"));
            }
            self.pos = den_end;
            Ok(Rational::new(numer, denom))
        } else {
            Ok(Rational::from_integer(numer))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Bound {
    NegInf,
    PosInf,
    Finite(Rational),
}

impl Bound {
    fn describe(self) -> String {
        match self {
            Bound::NegInf => "-inf".into(),
            Bound::PosInf => "inf".into(),
            Bound::Finite(q) => q.to_string(),
        }
    }
}

fn parse_atom(cur: &mut Cursor<'_>) -> Result<RealLineSet, ParseSetError> {
    match cur.peek() {
        Some('{') => {
            cur.expect('{')?;
            if cur.eat('}') {
                return Ok(RealLineSet::empty());
            }
            let q = cur.rational()?;
            cur.expect('}')?;
            Ok(RealLineSet::singleton(q))
        }
        Some(open @ ('(' | '[')) => {
            cur.pos += 1;
            let lo = cur.bound()?;
            cur.expect(',')?;
            let hi = cur.bound()?;
            let close = match cur.peek() {
                Some(c @ (')' | ']')) => {
                    cur.pos += 1;
                    c
                }
                _ => return Err(cur.error("expected ')' or ']'")),
            };
            let density = if cur.eat('Q') {
                Density::Rationals
            } else if cur.eat('I') {
                Density::Irrationals
            } else {
                Density::Full
            };
            let ordered = match (lo, hi) {
                (Bound::NegInf, Bound::PosInf) => true,
                (Bound::NegInf, Bound::Finite(_)) | (Bound::Finite(_), Bound::PosInf) => true,
                (Bound::Finite(a), Bound::Finite(b)) => a < b,
                _ => false,
            };
            if !ordered {
                return Err(ParseSetError::EmptyInterval { lower: lo.describe(), upper: hi.describe() });
            }
            let lo_closed = open == '[';
            let hi_closed = close == ']';
            if (lo_closed && lo == Bound::NegInf) || (hi_closed && hi == Bound::PosInf) {
                return Err(cur.error("infinite bounds must be open"));
            }
            let finite = |b: Bound| match b {
                Bound::Finite(q) => Some(q),
                _ => None,
            };
            Ok(RealLineSet::interval(finite(lo), lo_closed, finite(hi), hi_closed, density))
        }
        _ => Err(cur.error("expected '(', '[' or '{'")),
    }
}

/// Parses a `+`-separated union of atoms: intervals such as `[0,1]`,
/// `(0,1/2]Q`, `(-inf,0)I`, singletons `{3}` and the empty set `{}`.
pub fn make_set(spec: &str) -> Result<RealLineSet, ParseSetError> {
    let mut cur = Cursor { text: spec, pos: 0 };
    let mut acc = parse_atom(&mut cur)?;
    while cur.eat('+') {
        acc = acc.union(&parse_atom(&mut cur)?);
    }
    if cur.peek().is_some() {
        return Err(cur.error("trailing input"));
    }
    Ok(acc)
}

impl FromStr for RealLineSet {
    type Err = ParseSetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        make_set(s)
    }
}

/// The built-in probe sets: `[0,1]Q`, `[0,1]` and `(0,1)+(1,2)+{3}`.
pub fn default_corpus() -> Vec<RealLineSet> {
    ["[0,1]Q", "[0,1]", "(0,1)+(1,2)+{3}"]
        .iter()
        .map(|s| make_set(s).expect("built-in literal"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::parse_word;

    fn s(text: &str) -> RealLineSet {
        make_set(text).unwrap()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }

    #[test]
    fn rationals_in_unit_interval() {
        let a = s("[0,1]Q");
        assert_eq!(a.breakpoints(), &[q(0), q(1)]);
        assert_eq!(a.point_membership(), &[true, true]);
        assert_eq!(a.cells(), &[Density::Empty, Density::Rationals, Density::Empty]);
    }

    #[test]
    fn closed_unit_interval() {
        let a = s("[0,1]");
        assert_eq!(a.point_membership(), &[true, true]);
        assert_eq!(a.cells()[1], Density::Full);
    }

    #[test]
    fn punctured_interval() {
        let a = s("(0,1)+(1,2)");
        assert_eq!(a.breakpoints(), &[q(0), q(1), q(2)]);
        assert_eq!(a.point_membership(), &[false, false, false]);
        assert_eq!(a.cells(), &[Density::Empty, Density::Full, Density::Full, Density::Empty]);
        assert_eq!(s("(0,1)+[1,2)"), s("(0,2)"));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(make_set("[1,0]"), Err(ParseSetError::EmptyInterval { .. })));
        assert!(matches!(make_set("[1,1]"), Err(ParseSetError::EmptyInterval { .. })));
        assert!(matches!(make_set("[0,1"), Err(ParseSetError::Malformed { .. })));
        assert!(matches!(make_set("[0,1]X"), Err(ParseSetError::Malformed { .. })));
        assert!(matches!(make_set("0,1"), Err(ParseSetError::Malformed { .. })));
        assert!(matches!(make_set("{1/0}"), Err(ParseSetError::Malformed { .. })));
        assert!(matches!(make_set("[-inf,0]"), Err(ParseSetError::Malformed { .. })));
        assert!(matches!(make_set(""), Err(ParseSetError::Malformed { .. })));
    }

    #[test]
    fn interior_of_dense_codense_is_empty() {
        assert!(s("[0,1]Q").interior().is_empty());
    }

    #[test]
    fn operator_examples() {
        let a = s("[0,1]Q");
        assert_eq!(a.closure().interior(), s("(0,1)"));
        assert_eq!(s("[0,1]").interior().closure(), s("[0,1]"));
        assert_eq!(a.derived(), s("[0,1]"));
        assert_eq!(s("(0,1)").boundary(), s("{0}+{1}"));
        assert_eq!(s("(0,1)").exterior(), s("(-inf,0)+(1,inf)"));
        assert_eq!(s("[0,1]").apply(Generator::BoundaryInt), s("{0}+{1}"));
        assert!(s("[0,1]").apply(Generator::BoundaryExt).is_empty());
        assert_eq!(s("(0,1)+{3}").derived(), s("[0,1]"));
    }

    #[test]
    fn word_evaluation() {
        let a = s("[0,1]Q");
        let ev = |w: &str| eval_word_real(&parse_word(w).unwrap(), &a);
        assert!(ev("c.i").is_empty());
        assert_eq!(ev("c.i.c"), s("[0,1]"));
        assert!(ev("i.c.i").is_empty());
        assert_eq!(ev("id"), a);
        assert_eq!(ev(""), a);
    }

    #[test]
    fn subset_examples() {
        assert!(s("(0,1)").subset_of(&s("[0,1]")));
        assert!(!s("[0,1]Q").subset_of(&s("[0,1]I")));
        assert!(RealLineSet::empty().subset_of(&s("[0,1]Q")));
        assert!(!s("[0,1]").subset_of(&s("(0,1)")));
    }

    #[test]
    fn formatting() {
        for lit in ["[0,1]Q", "[0,1]", "(0,1)+(1,2)+{3}", "{0}+{1}", "(0,1)I", "(-inf,0)+(1,inf)", "{}", "(-inf,inf)", "[0,1]+(1,2]Q", "[-1/2,3/4)"] {
            assert_eq!(s(lit).to_string(), lit);
        }
        assert_eq!(s("[0,1]I").to_string(), "(0,1)I");
        assert_eq!(s("[0,1]Q+(0,1)I").to_string(), "[0,1]");
    }

    #[test]
    fn json_rendering() {
        let v = serde_json::to_value(s("[0,1]Q")).unwrap();
        assert_eq!(v["literal"], "[0,1]Q");
        assert_eq!(v["breakpoints"], serde_json::json!(["0", "1"]));
        assert_eq!(v["points"], serde_json::json!([true, true]));
        assert_eq!(v["cells"], serde_json::json!(["EMPTY", "RATIONALS", "EMPTY"]));
    }

    #[test]
    fn from_parts_validates() {
        assert!(RealLineSet::from_parts(vec![q(1), q(0)], vec![false, false], vec![Density::Empty; 3]).is_none());
        assert!(RealLineSet::from_parts(vec![q(0)], vec![false], vec![Density::Empty]).is_none());
        let whole = RealLineSet::from_parts(vec![q(0)], vec![true], vec![Density::Full; 2]).unwrap();
        assert_eq!(whole, RealLineSet::full());
    }
}
