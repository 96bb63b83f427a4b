//! The operator alphabet and operator words.
//!
//! A [`Word`] stores its generators leftmost-outermost: the word `c.i`
//! denotes `A ↦ c(i(A))`, so the rightmost generator is applied first.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ParseWordError;

/// One of the nine basic operators on the powerset of a space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Id,
    Closure,
    Interior,
    Complement,
    Exterior,
    Boundary,
    BoundaryInt,
    BoundaryExt,
    Derived,
}

impl Generator {
    pub const ALL: [Generator; 9] = [
        Generator::Id,
        Generator::Closure,
        Generator::Interior,
        Generator::Complement,
        Generator::Exterior,
        Generator::Boundary,
        Generator::BoundaryInt,
        Generator::BoundaryExt,
        Generator::Derived,
    ];

    /// The textual token used by the word grammar.
    pub fn token(self) -> &'static str {
        match self {
            Generator::Id => "id",
            Generator::Closure => "c",
            Generator::Interior => "i",
            Generator::Complement => "n",
            Generator::Exterior => "e",
            Generator::Boundary => "b",
            Generator::BoundaryInt => "bi",
            Generator::BoundaryExt => "be",
            Generator::Derived => "d",
        }
    }

    pub fn from_token(token: &str) -> Option<Generator> {
        Generator::ALL.iter().copied().find(|g| g.token() == token)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for Generator {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Generator::from_token(s.trim()).ok_or_else(|| ParseWordError::UnknownToken {
            position: 0,
            found: s.trim().to_string(),
        })
    }
}

/// A finite composition of generators. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    gens: Vec<Generator>,
}

impl Word {
    pub fn identity() -> Self {
        Word { gens: Vec::new() }
    }

    pub fn new(gens: Vec<Generator>) -> Self {
        Word { gens }
    }

    pub fn single(g: Generator) -> Self {
        Word { gens: vec![g] }
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Generator> {
        self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Generators in application order (innermost first).
    pub fn application_order(&self) -> impl Iterator<Item = Generator> + '_ {
        self.gens.iter().rev().copied()
    }

    /// Prepends `g` as the new outermost operator.
    pub fn prepend(&self, g: Generator) -> Word {
        let mut gens = Vec::with_capacity(self.gens.len() + 1);
        gens.push(g);
        gens.extend_from_slice(&self.gens);
        Word { gens }
    }

    /// Shortest first, then lexicographic by generator.
    pub fn shortlex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.gens.cmp(&other.gens))
    }
}

impl From<Vec<Generator>> for Word {
    fn from(gens: Vec<Generator>) -> Self {
        Word { gens }
    }
}

/// Parses the dotted/spaced token syntax, e.g. `"ci"`, `"b.i"`, `"c n c"`.
///
/// Tokenization is greedy longest-match, so `"bi"` is the internal
/// boundary while `"b.i"` is boundary after interior. The empty string
/// parses to the identity.
pub fn parse_word(text: &str) -> Result<Word, ParseWordError> {
    let bytes = text.as_bytes();
    let mut gens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let ch = bytes[pos];
        if ch == b'.' || ch == b' ' {
            pos += 1;
            continue;
        }
        let rest = &text[pos..];
        let (g, len) = if rest.starts_with("id") {
            (Generator::Id, 2)
        } else if rest.starts_with("bi") {
            (Generator::BoundaryInt, 2)
        } else if rest.starts_with("be") {
            (Generator::BoundaryExt, 2)
        } else {
            let g = match ch {
                b'c' => Generator::Closure,
                b'i' => Generator::Interior,
                b'n' => Generator::Complement,
                b'e' => Generator::Exterior,
                b'b' => Generator::Boundary,
                b'd' => Generator::Derived,
                _ => {
                    let found = rest.chars().next().map(String::from).unwrap_or_default();
                    return Err(ParseWordError::UnknownToken { position: pos, found });
                }
            };
            (g, 1)
        };
        gens.push(g);
        pos += len;
    }
    Ok(Word { gens })
}

/// Dot-separated tokens; the identity prints as `id`.
pub fn format_word(w: &Word) -> String {
    if w.gens.is_empty() {
        return "id".to_string();
    }
    let tokens: Vec<&str> = w.gens.iter().map(|g| g.token()).collect();
    tokens.join(".")
}

/// `outer` after `inner`: the result applied to `A` is `outer(inner(A))`.
pub fn compose(outer: &Word, inner: &Word) -> Word {
    let mut gens = Vec::with_capacity(outer.len() + inner.len());
    gens.extend_from_slice(&outer.gens);
    gens.extend_from_slice(&inner.gens);
    Word { gens }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self))
    }
}

impl FromStr for Word {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_word(self))
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_word(&s).map_err(serde::de::Error::custom)
    }
}

impl Serialize for Generator {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.token())
    }
}

impl<'de> Deserialize<'de> for Generator {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Parses a generator list such as `"c,i,n,b"` (commas or word syntax).
pub fn parse_generators(text: &str) -> Result<Vec<Generator>, ParseWordError> {
    let mut gens = parse_word(&text.replace(',', "."))?.into_gens();
    gens.sort();
    gens.dedup();
    Ok(gens)
}

/// Every word of exactly `len` generators over `alphabet`, in lexicographic order.
pub fn words_of_length(alphabet: &[Generator], len: usize) -> Vec<Word> {
    let mut out = vec![Word::identity()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * alphabet.len());
        for w in &out {
            for &g in alphabet {
                let mut gens = w.gens.clone();
                gens.push(g);
                next.push(Word { gens });
            }
        }
        out = next;
    }
    out
}

/// Every word of length at most `max_len` over `alphabet`.
pub fn words_up_to(alphabet: &[Generator], max_len: usize) -> Vec<Word> {
    (0..=max_len)
        .flat_map(|len| words_of_length(alphabet, len))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn parses_juxtaposition() {
        assert_eq!(w("ci").gens(), &[Closure, Interior]);
        assert_eq!(w("bi").gens(), &[BoundaryInt]);
        assert_eq!(w("b.i").gens(), &[Boundary, Interior]);
        assert_eq!(w("b i").gens(), &[Boundary, Interior]);
        assert_eq!(w("be").gens(), &[BoundaryExt]);
        assert_eq!(w("idc").gens(), &[Id, Closure]);
    }

    #[test]
    fn empty_text_is_identity() {
        assert_eq!(w(""), Word::identity());
        assert_eq!(w(" . "), Word::identity());
    }

    #[test]
    fn unknown_token_reports_position() {
        let err = parse_word("c.z").unwrap_err();
        assert_eq!(
            err,
            ParseWordError::UnknownToken { position: 2, found: "z".into() }
        );
        assert!(parse_word("C").is_err());
    }

    #[test]
    fn formats_dotted() {
        assert_eq!(format_word(&Word::new(vec![Closure, Interior, Closure])), "c.i.c");
        assert_eq!(format_word(&Word::identity()), "id");
        assert_eq!(format_word(&Word::new(vec![BoundaryInt, Complement])), "bi.n");
    }

    #[test]
    fn compose_concatenates() {
        assert_eq!(format_word(&compose(&w("c"), &w("i"))), "c.i");
        assert_eq!(format_word(&compose(&w("ci"), &w("ci"))), "c.i.c.i");
        // explicit id token survives composition; normalization removes it
        assert_eq!(compose(&w("id"), &w("ic")).gens(), &[Id, Interior, Closure]);
        assert_eq!(compose(&Word::identity(), &w("ic")), w("ic"));
    }

    #[test]
    fn round_trip_exhaustive_to_length_6() {
        for len in 0..=6 {
            for word in words_of_length(&Generator::ALL, len) {
                let text = format_word(&word);
                let back = parse_word(&text).unwrap();
                // the lone `id` token prints the same as the empty word
                if word.gens() == [Id] {
                    assert_eq!(back, word);
                } else if word.is_empty() {
                    assert_eq!(back.gens(), &[Id]);
                } else {
                    assert_eq!(back, word, "{text}");
                }
            }
        }
    }

    #[test]
    fn compose_is_associative_on_short_words() {
        let alphabet = [Closure, Interior, Complement];
        let words = words_up_to(&alphabet, 3);
        for a in &words {
            for b in &words {
                for c in &words {
                    assert_eq!(compose(&compose(a, b), c), compose(a, &compose(b, c)));
                }
            }
        }
    }

    #[test]
    fn tokens_are_unique() {
        for g in Generator::ALL {
            assert_eq!(Generator::from_token(g.token()), Some(g));
            assert_eq!(g.token().parse::<Generator>().unwrap(), g);
        }
    }

    #[test]
    fn generator_lists() {
        assert_eq!(parse_generators("c,i,n,b").unwrap(), vec![Closure, Interior, Complement, Boundary]);
        assert_eq!(parse_generators("i,c,c").unwrap(), vec![Closure, Interior]);
    }
}
