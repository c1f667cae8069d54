//! Freely reduced words over named generators.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Interned generator name such as `a1`, `d2`, `s3`, `x1`.
pub type Gen = Arc<str>;

pub fn gen(name: &str) -> Gen {
    Arc::from(name)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("undeclared generator `{0}`")]
    UndeclaredGenerator(String),
    #[error("no image given for generator `{0}`")]
    MissingImage(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Ordered set of generator names with optional tags.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<Gen>,
    tags: BTreeMap<Gen, String>,
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out = Alphabet::default();
        for n in names {
            let n = n.as_ref();
            if n.is_empty() || out.contains(n) {
                return Err(WordError::Parse(format!("bad or duplicate generator name `{n}`")));
            }
            out.names.push(gen(n));
        }
        Ok(out)
    }

    pub fn with_tag(mut self, name: &str, tag: &str) -> Self {
        if let Some(g) = self.names.iter().find(|g| &***g == name) {
            self.tags.insert(g.clone(), tag.to_string());
        }
        self
    }

    pub fn contains(&self, name: &str) -> bool {
        self.names.iter().any(|g| &**g == name)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|g| &**g == name)
    }

    pub fn names(&self) -> &[Gen] {
        &self.names
    }

    pub fn tag(&self, name: &str) -> Option<&str> {
        self.tags.iter().find(|(g, _)| &***g == name).map(|(_, t)| t.as_str())
    }

    /// Reduce a raw letter sequence, rejecting undeclared generators.
    pub fn reduce<I>(&self, raw: I) -> Result<Word, WordError>
    where
        I: IntoIterator<Item = (Gen, BigInt)>,
    {
        let raw: Vec<_> = raw.into_iter().collect();
        for (g, _) in &raw {
            if !self.contains(g) {
                return Err(WordError::UndeclaredGenerator(g.to_string()));
            }
        }
        Ok(Word::from_letters(raw))
    }

    pub fn check(&self, w: &Word) -> Result<(), WordError> {
        for (g, _) in w.letters() {
            if !self.contains(g) {
                return Err(WordError::UndeclaredGenerator(g.to_string()));
            }
        }
        Ok(())
    }
}

/// A freely reduced word. Construction always reduces.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Word {
    letters: Vec<(Gen, BigInt)>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn letter(name: &str, exp: i64) -> Self {
        Word::from_letters([(gen(name), BigInt::from(exp))])
    }

    pub fn from_letters<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = (Gen, BigInt)>,
    {
        let mut out: Vec<(Gen, BigInt)> = Vec::new();
        for (g, e) in raw {
            push_letter(&mut out, g, e);
        }
        Word { letters: out }
    }

    /// Build from small signed exponents, e.g. `[("a1", 2), ("a2", -1)]`.
    pub fn from_pairs(pairs: &[(&str, i64)]) -> Self {
        Word::from_letters(pairs.iter().map(|(g, e)| (gen(g), BigInt::from(*e))))
    }

    pub fn letters(&self) -> &[(Gen, BigInt)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of syllables.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Sum of absolute exponents.
    pub fn length(&self) -> BigInt {
        self.letters.iter().map(|(_, e)| e.abs()).sum()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|(g, e)| (g.clone(), -e)).collect() }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.letters.clone();
        for (g, e) in &other.letters {
            push_letter(&mut out, g.clone(), e.clone());
        }
        Word { letters: out }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn conj_by(&self, c: &Word) -> Word {
        c.inverse().mul(self).mul(c)
    }

    pub fn generators(&self) -> impl Iterator<Item = &Gen> {
        self.letters.iter().map(|(g, _)| g)
    }

    /// Expand into unit letters (generator, ±1). Panics on absurd exponents.
    pub fn unit_letters(&self) -> Vec<(Gen, i8)> {
        let mut out = Vec::new();
        for (g, e) in &self.letters {
            let k = e.abs().to_usize().expect("exponent too large to expand");
            let s = if e.is_positive() { 1 } else { -1 };
            out.extend(std::iter::repeat((g.clone(), s)).take(k));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Word, WordError> {
        parse_word(text)
    }
}

fn push_letter(out: &mut Vec<(Gen, BigInt)>, g: Gen, e: BigInt) {
    if e.is_zero() {
        return;
    }
    if let Some((last, le)) = out.last_mut() {
        if *last == g {
            *le += e;
            if le.is_zero() {
                out.pop();
            }
            return;
        }
    }
    out.push((g, e));
}

/// Free reduction of a raw sequence over an alphabet.
pub fn reduce<I>(alphabet: &Alphabet, raw: I) -> Result<Word, WordError>
where
    I: IntoIterator<Item = (Gen, BigInt)>,
{
    alphabet.reduce(raw)
}

/// Apply a homomorphism given by generator images.
pub fn apply_hom(images: &BTreeMap<Gen, Word>, w: &Word) -> Result<Word, WordError> {
    let mut out = Word::empty();
    for (g, e) in w.letters() {
        let img = images.get(g).ok_or_else(|| WordError::MissingImage(g.to_string()))?;
        let k = e.to_i64().ok_or_else(|| WordError::Parse("exponent out of range".into()))?;
        out = out.mul(&img.pow(k));
    }
    Ok(out)
}

pub fn exponent_sum(w: &Word, g: &str) -> BigInt {
    w.letters().iter().filter(|(h, _)| &**h == g).map(|(_, e)| e.clone()).sum()
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, (g, e)) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if e.is_one() {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.to_string()
    }
}

impl TryFrom<String> for Word {
    type Error = WordError;
    fn try_from(s: String) -> Result<Self, Self::Error> {
        parse_word(&s)
    }
}

/// Strip a `#` comment.
pub fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Split a token `base^exp` at the first `^` outside brackets.
pub fn split_power(tok: &str) -> (&str, Option<&str>) {
    let mut depth = 0i32;
    for (i, c) in tok.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            '^' if depth == 0 => return (&tok[..i], Some(&tok[i + 1..])),
            _ => {}
        }
    }
    (tok, None)
}

/// Tokenize on whitespace, keeping bracketed groups together.
pub fn tokens(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for c in strip_comment(text).chars() {
        match c {
            '(' | '[' => {
                depth += 1;
                cur.push(c)
            }
            ')' | ']' => {
                depth -= 1;
                cur.push(c)
            }
            c if c.is_whitespace() && depth <= 0 => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn valid_name(s: &str) -> bool {
    !s.is_empty()
        && s.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
        && s.chars().all(|c| c.is_ascii_alphanumeric() || "_'()[].,".contains(c))
}

/// Parse `g`, `g^-1`, `g^k` letters separated by whitespace. `1` is the empty word.
pub fn parse_word(text: &str) -> Result<Word, WordError> {
    let mut raw = Vec::new();
    for tok in tokens(text) {
        if tok == "1" {
            continue;
        }
        if tok.starts_with('(') {
            raw.extend(parse_group(&tok)?.letters().iter().cloned());
            continue;
        }
        let (base, exp) = split_power(&tok);
        if !valid_name(base) {
            return Err(WordError::Parse(format!("bad letter `{tok}`")));
        }
        let e = match exp {
            None => BigInt::one(),
            Some(x) => x
                .parse::<BigInt>()
                .map_err(|_| WordError::Parse(format!("bad exponent in `{tok}`")))?,
        };
        raw.push((gen(base), e));
    }
    Ok(Word::from_letters(raw))
}

/// `(w)^k` with `k` an integer, possibly negative.
fn parse_group(tok: &str) -> Result<Word, WordError> {
    let close = tok.rfind(')').ok_or_else(|| WordError::Parse(format!("unbalanced `{tok}`")))?;
    let inner = parse_word(&tok[1..close])?;
    let k = match tok[close + 1..].strip_prefix('^') {
        Some(x) => x.parse::<i64>().map_err(|_| WordError::Parse(format!("bad exponent in `{tok}`")))?,
        None if close + 1 == tok.len() => 1,
        None => return Err(WordError::Parse(format!("bad group `{tok}`"))),
    };
    Ok(inner.pow(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_and_cancel() {
        assert!(parse_word("a1 a1^-1").unwrap().is_empty());
        assert_eq!(parse_word("a1^2 a1^3").unwrap().to_string(), "a1^5");
        assert_eq!(parse_word("a2 a1 a1^-1 a2^-1 a3").unwrap().to_string(), "a3");
    }

    #[test]
    fn undeclared() {
        let al = Alphabet::new(["a1", "a2"]).unwrap();
        let err = al.reduce(parse_word("a1 a3").unwrap().letters().to_vec()).unwrap_err();
        assert_eq!(err, WordError::UndeclaredGenerator("a3".into()));
    }

    #[test]
    fn comments_and_macros() {
        let w = parse_word("eta(3)^2 T[1..4] # tail").unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w.letters()[0].0.as_ref(), "eta(3)");
    }

    #[test]
    fn hom_swap() {
        let mut m = BTreeMap::new();
        m.insert(gen("a1"), Word::letter("a2", 1));
        m.insert(gen("a2"), Word::letter("a1", 1));
        let w = parse_word("a1 a2^-1").unwrap();
        assert_eq!(apply_hom(&m, &w).unwrap().to_string(), "a2 a1^-1");
        assert!(matches!(apply_hom(&BTreeMap::new(), &w), Err(WordError::MissingImage(_))));
    }
}
