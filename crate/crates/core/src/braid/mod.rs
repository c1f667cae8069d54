//! Artin braid groups: words, named elements, the Garside word problem.

mod garside;
pub mod suite;

use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{self, Word, WordError};

pub use garside::{normal_form_letters, GarsideNormalForm, Perm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("strand mismatch: B{0} vs B{1}")]
    StrandMismatch(usize, usize),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A braid word over `s1..s{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Braid {
    pub strands: usize,
    pub word: Word,
}

impl Braid {
    pub fn new(strands: usize, word: Word) -> Result<Braid, BraidError> {
        if strands < 2 {
            return Err(BraidError::IndexOutOfRange(format!("B{strands} needs n >= 2")));
        }
        for g in word.generators() {
            let i = sigma_index(g)
                .ok_or_else(|| BraidError::Word(WordError::UndeclaredGenerator(g.to_string())))?;
            if i == 0 || i >= strands {
                return Err(BraidError::IndexOutOfRange(format!("{g} in B{strands}")));
            }
        }
        Ok(Braid { strands, word })
    }

    pub fn from_letters(strands: usize, letters: &[i32]) -> Braid {
        let w = Word::from_letters(
            letters.iter().map(|&l| (word::gen(&format!("s{}", l.abs())), l.signum().into())),
        );
        Braid { strands, word: w }
    }

    /// Signed unit letters, `+i` for σ_i.
    pub fn letters(&self) -> Vec<i32> {
        let mut out = Vec::new();
        for (g, e) in self.word.letters() {
            let i = sigma_index(g).expect("validated") as i32;
            let k = e.to_i64().expect("exponent fits");
            let l = if k > 0 { i } else { -i };
            out.extend(std::iter::repeat(l).take(k.unsigned_abs() as usize));
        }
        out
    }

    pub fn mul(&self, other: &Braid) -> Braid {
        Braid { strands: self.strands, word: self.word.mul(&other.word) }
    }

    pub fn inverse(&self) -> Braid {
        Braid { strands: self.strands, word: self.word.inverse() }
    }

    pub fn pow(&self, k: i64) -> Braid {
        Braid { strands: self.strands, word: self.word.pow(k) }
    }

    pub fn parse(text: &str) -> Result<Braid, BraidError> {
        parse_braid(text)
    }
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}: {}", self.strands, self.word)
    }
}

fn sigma_index(g: &str) -> Option<usize> {
    g.strip_prefix('s')?.parse().ok()
}

pub fn normal_form(b: &Braid) -> GarsideNormalForm {
    normal_form_letters(b.strands, &b.letters())
}

pub fn braid_equal(u: &Braid, v: &Braid) -> Result<bool, BraidError> {
    if u.strands != v.strands {
        return Err(BraidError::StrandMismatch(u.strands, v.strands));
    }
    if permutation(u) != permutation(v) {
        return Ok(false);
    }
    Ok(normal_form(&u.mul(&v.inverse())) == normal_form(&Braid::from_letters(u.strands, &[])))
}

pub fn permutation(b: &Braid) -> Perm {
    let mut p = Perm::identity(b.strands);
    for l in b.letters() {
        let i = l.unsigned_abs() as usize;
        let mut s = Perm::identity(b.strands);
        s.0.swap(i - 1, i);
        p = p.then(&s);
    }
    p
}

/// The paper's named braids.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NamedBraid {
    Sigma(usize),
    Eta(usize),
    Omega(usize),
    Tau(usize),
    FullTwist(usize, usize),
    /// Flat crossing of the packets `[i, i+k)` and `[i+k, i+2k)`.
    FlatCross(usize, usize),
    Y(usize),
    W(usize),
}

fn run(from: usize, to: usize) -> Vec<i32> {
    // s_from ... s_to, either direction
    if from <= to {
        (from..=to).map(|i| i as i32).collect()
    } else {
        (to..=from).rev().map(|i| i as i32).collect()
    }
}

fn pow_letters(w: &[i32], k: usize) -> Vec<i32> {
    w.iter().copied().cycle().take(w.len() * k).collect()
}

fn named_letters(spec: NamedBraid, n: usize) -> Result<Vec<i32>, BraidError> {
    let bad = || BraidError::IndexOutOfRange(format!("{spec:?} in B{n}"));
    Ok(match spec {
        NamedBraid::Sigma(i) => {
            if i == 0 || i >= n {
                return Err(bad());
            }
            vec![i as i32]
        }
        NamedBraid::Eta(1) | NamedBraid::Omega(1) | NamedBraid::Y(1) | NamedBraid::W(0 | 1) => vec![],
        NamedBraid::Eta(i) => {
            if i < 2 || i > n {
                return Err(bad());
            }
            let mut w = run(i - 1, 1);
            w.extend(run(1, i - 1));
            w
        }
        NamedBraid::Omega(i) => {
            if i < 2 || i > n {
                return Err(bad());
            }
            pow_letters(&run(1, i - 1), i)
        }
        NamedBraid::Tau(i) => named_letters(NamedBraid::FlatCross(2 * i - 1, 2), n)?,
        NamedBraid::FullTwist(i, j) => {
            if i == 0 || j <= i || j > n {
                return Err(bad());
            }
            pow_letters(&run(i, j - 1), j - i + 1)
        }
        NamedBraid::FlatCross(i, k) => {
            if i == 0 || k == 0 || i + 2 * k - 1 > n {
                return Err(bad());
            }
            // strand block [i, i+k) passes over [i+k, i+2k): rows of a k×k grid
            let mut w = Vec::new();
            for r in 0..k {
                let top = i + k - 1 + r;
                w.extend(run(top, top + 1 - k));
            }
            w
        }
        NamedBraid::Y(k) => {
            if k < 2 || 2 * k > n {
                return Err(bad());
            }
            let mut w = Vec::new();
            for j in (1..k).rev() {
                w.extend(named_letters(NamedBraid::Tau(j), n)?);
            }
            for j in 1..k {
                w.extend(named_letters(NamedBraid::Tau(j), n)?);
            }
            w
        }
        NamedBraid::W(k) => {
            if k < 2 || 2 * k > n {
                return Err(bad());
            }
            let mut base = Vec::new();
            for j in 1..k {
                base.extend(named_letters(NamedBraid::Tau(j), n)?);
            }
            pow_letters(&base, k)
        }
    })
}

pub fn named_braid(spec: NamedBraid, n: usize) -> Result<Braid, BraidError> {
    Ok(Braid::from_letters(n, &named_letters(spec, n)?))
}

/// Parse a macro symbol like `eta(3)`, `T[1..4]` or a plain `s2`.
pub fn parse_named(sym: &str) -> Option<NamedBraid> {
    if let Some(i) = sigma_index(sym) {
        return Some(NamedBraid::Sigma(i));
    }
    if let Some(rest) = sym.strip_prefix("T[").and_then(|r| r.strip_suffix(']')) {
        let (a, b) = rest.split_once("..")?;
        return Some(NamedBraid::FullTwist(a.trim().parse().ok()?, b.trim().parse().ok()?));
    }
    let open = sym.find('(')?;
    let name = &sym[..open];
    let args: Vec<usize> = sym[open + 1..]
        .strip_suffix(')')?
        .split(',')
        .map(|s| s.trim().parse().ok())
        .collect::<Option<_>>()?;
    match (name, args.as_slice()) {
        ("sigma", [i]) => Some(NamedBraid::Sigma(*i)),
        ("eta" | "y", [i]) => Some(NamedBraid::Eta(*i)),
        ("omega" | "w", [i]) => Some(NamedBraid::Omega(*i)),
        ("tau" | "t", [i]) => Some(NamedBraid::Tau(*i)),
        ("flat", [i, k]) => Some(NamedBraid::FlatCross(*i, *k)),
        ("Y", [k]) => Some(NamedBraid::Y(*k)),
        ("W", [k]) => Some(NamedBraid::W(*k)),
        _ => None,
    }
}

/// Expand all macros of a word into `s`-letters for `n` strands.
pub fn expand(word: &Word, n: usize) -> Result<Braid, BraidError> {
    let mut out = Word::empty();
    for (g, e) in word.letters() {
        let spec = parse_named(g)
            .ok_or_else(|| BraidError::Word(WordError::UndeclaredGenerator(g.to_string())))?;
        let k = e.to_i64().ok_or_else(|| BraidError::IndexOutOfRange("exponent".into()))?;
        out = out.mul(&named_braid(spec, n)?.word.pow(k));
    }
    Braid::new(n, out)
}

/// Parse `B<n>: <word>`.
pub fn parse_braid(text: &str) -> Result<Braid, BraidError> {
    let text = word::strip_comment(text).trim();
    let (head, body) = text
        .split_once(':')
        .ok_or_else(|| WordError::Parse(format!("expected `B<n>: <word>`, got `{text}`")))?;
    let n: usize = head
        .trim()
        .strip_prefix('B')
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| WordError::Parse(format!("bad strand count `{head}`")))?;
    expand(&word::parse_word(body)?, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_one() {
        let b = named_braid(NamedBraid::Tau(1), 8).unwrap();
        assert_eq!(b.word.to_string(), "s2 s1 s3 s2");
        let b = named_braid(NamedBraid::Tau(3), 8).unwrap();
        assert_eq!(b.word.to_string(), "s6 s5 s7 s6");
    }

    #[test]
    fn full_twist_pair() {
        assert_eq!(named_braid(NamedBraid::FullTwist(1, 2), 4).unwrap().word.to_string(), "s1^2");
        assert_eq!(named_braid(NamedBraid::Eta(2), 4).unwrap().word.to_string(), "s1^2");
    }

    #[test]
    fn braid_relation() {
        let u = parse_braid("B3: s1 s2 s1").unwrap();
        let v = parse_braid("B3: s2 s1 s2").unwrap();
        assert!(braid_equal(&u, &v).unwrap());
        assert_eq!(normal_form(&u), normal_form(&v));
        let s1 = parse_braid("B3: s1").unwrap();
        let s2 = parse_braid("B3: s2").unwrap();
        assert!(!braid_equal(&s1, &s2).unwrap());
        assert!(braid_equal(&s1, &parse_braid("B4: s1").unwrap()).is_err());
    }

    #[test]
    fn single_factor() {
        let nf = normal_form(&parse_braid("B3: s1").unwrap());
        assert_eq!(nf.delta_power, 0);
        assert_eq!(nf.factors.len(), 1);
        assert_eq!(nf.factors[0].cycles(), "(1 2)");
    }

    #[test]
    fn perms() {
        let t = named_braid(NamedBraid::Tau(1), 8).unwrap();
        assert_eq!(permutation(&t).cycles(), "(1 3)(2 4)");
        let ft = named_braid(NamedBraid::FullTwist(1, 4), 8).unwrap();
        assert!(permutation(&ft).is_identity());
    }

    #[test]
    fn macros_parse() {
        let b = parse_braid("B4: omega(4)").unwrap();
        let c = parse_braid("B4: eta(2) eta(3) eta(4)").unwrap();
        assert!(braid_equal(&b, &c).unwrap());
    }
}
