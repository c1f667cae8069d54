//! Formal GT words: plain letters, λ-affine powers, uninterpreted `f(U;V)`
//! symbols and pending action applications, plus the rewrite kernel and the
//! proof-script checker.

pub mod concrete;
pub mod env;
pub mod exp;
pub mod models;
pub mod rules;
pub mod script;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{self, Word};

pub use concrete::{verify_concrete_automorphism, GtElementSpec};
pub use env::{Context, Env};
pub use exp::LambdaExp;
pub use rules::{rewrite_step, Justification, RuleApplication};
pub use script::{check_script, Corpus, ProofScript, ScriptReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GtError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
    #[error("pattern mismatch: {0}")]
    PatternMismatch(String),
    #[error("unjustified side condition: {0}")]
    UnjustifiedSideCondition(String),
    #[error("oracle refuted: {0}")]
    OracleRefuted(String),
    #[error("specialization needs a concrete λ in {{1,-1}} and trivial f")]
    NonConcreteSpec,
    #[error("context: {0}")]
    Context(String),
}

impl From<word::WordError> for GtError {
    fn from(e: word::WordError) -> GtError {
        GtError::Parse(e.to_string())
    }
}

/// Which automorphism a pending application refers to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ActKind {
    /// Drinfeld's standard action `F`.
    Standard,
    /// `F_B` for a named bracketing, or the context's default one.
    Bracketed(Option<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Atom {
    /// `base^exp`; a plain letter is a one-letter base with integer exponent.
    Gen { base: Word, exp: LambdaExp },
    /// `f(u;v)`.
    F { u: Word, v: Word },
    /// `F(target)` or `FB(target)`, not yet expanded.
    Act { kind: ActKind, target: Word },
}

impl Atom {
    pub fn gen(name: &str, exp: LambdaExp) -> Atom {
        Atom::Gen { base: Word::letter(name, 1), exp }
    }

    pub fn f(u: Word, v: Word) -> Atom {
        Atom::F { u, v }
    }

    pub fn is_plain(&self) -> bool {
        matches!(self, Atom::Gen { exp, .. } if exp.is_integer())
    }

    pub fn inverse(&self) -> Atom {
        match self {
            Atom::Gen { base, exp } => Atom::Gen { base: base.clone(), exp: -*exp },
            // rule I
            Atom::F { u, v } => Atom::F { u: v.clone(), v: u.clone() },
            Atom::Act { kind, target } => Atom::Act { kind: kind.clone(), target: target.inverse() },
        }
    }

    /// Words whose commutation with `x` implies commutation of the atom with `x`.
    pub fn support(&self) -> Vec<Word> {
        match self {
            Atom::Gen { base, exp } => {
                // e = (p+q)/2 + q·m, so base^e lies in the closure of <base^c>
                let c = gcd(((exp.p + exp.q) / 2).abs(), exp.q.abs());
                if c == 0 {
                    vec![]
                } else {
                    vec![base.pow(c)]
                }
            }
            Atom::F { u, v } => vec![u.clone(), v.clone()],
            Atom::Act { target, .. } => vec![target.clone()],
        }
    }

    /// Apply `h` to every word inside the atom.
    pub fn map_words(&self, h: impl Fn(&Word) -> Word) -> Atom {
        match self {
            Atom::Gen { base, exp } => Atom::Gen { base: h(base), exp: *exp },
            Atom::F { u, v } => Atom::F { u: h(u), v: h(v) },
            Atom::Act { kind, target } => Atom::Act { kind: kind.clone(), target: h(target) },
        }
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn write_base(f: &mut fmt::Formatter<'_>, base: &Word) -> fmt::Result {
    match base.letters() {
        [(g, e)] if *e == 1.into() => write!(f, "{g}"),
        _ => write!(f, "({base})"),
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Gen { base, exp } => {
                if *exp == LambdaExp::ONE {
                    if let [(g, e)] = base.letters() {
                        return if *e == 1.into() { write!(f, "{g}") } else { write!(f, "{g}^{e}") };
                    }
                }
                write_base(f, base)?;
                write!(f, "^{exp}")
            }
            Atom::F { u, v } => write!(f, "f({u};{v})"),
            Atom::Act { kind, target } => {
                match kind {
                    ActKind::Standard => f.write_str("F")?,
                    ActKind::Bracketed(None) => f.write_str("FB")?,
                    ActKind::Bracketed(Some(n)) => write!(f, "FB:{n}")?,
                }
                write!(f, "({target})")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GTWord {
    pub atoms: Vec<Atom>,
}

impl GTWord {
    pub fn new(atoms: Vec<Atom>) -> GTWord {
        GTWord { atoms }
    }

    pub fn plain(w: &Word) -> GTWord {
        GTWord::new(w.letters().iter().map(|(g, e)| Atom::gen(g, LambdaExp::int(e.try_into().expect("small exponent")))).collect())
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn inverse(&self) -> GTWord {
        GTWord::new(self.atoms.iter().rev().map(Atom::inverse).collect())
    }

    pub fn concat(&self, o: &GTWord) -> GTWord {
        let mut atoms = self.atoms.clone();
        atoms.extend(o.atoms.iter().cloned());
        GTWord::new(atoms)
    }

    pub fn pow(&self, k: i64) -> GTWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut atoms = Vec::new();
        for _ in 0..k.unsigned_abs() {
            atoms.extend(base.atoms.iter().cloned());
        }
        GTWord::new(atoms)
    }

    /// The plain word, if every atom is a plain letter.
    pub fn as_plain(&self) -> Option<Word> {
        plain_of(&self.atoms)
    }

    pub fn is_plain(&self) -> bool {
        self.atoms.iter().all(Atom::is_plain)
    }

    /// Canonical form: integer powers of composite bases are spelled out,
    /// single-syllable bases absorb their exponent, equal adjacent bases
    /// merge, and trivial atoms vanish (`f(1;v) = 1` since f is a commutator).
    pub fn canonical(&self) -> GTWord {
        let mut out: Vec<Atom> = Vec::new();
        for a in &self.atoms {
            match a {
                Atom::Gen { base, exp } => {
                    if base.is_empty() || exp.is_zero() {
                        continue;
                    }
                    if let [(g, k)] = base.letters() {
                        let k: i64 = k.try_into().expect("small exponent");
                        push_gen(&mut out, Word::letter(g, 1), exp.scale(k));
                    } else if let Some(k) = exp.as_integer() {
                        for (g, e) in base.pow(k).letters() {
                            push_gen(&mut out, Word::letter(g, 1), LambdaExp::int(e.try_into().expect("small exponent")));
                        }
                    } else {
                        push_gen(&mut out, base.clone(), *exp);
                    }
                }
                Atom::F { u, v } => {
                    if !u.is_empty() && !v.is_empty() {
                        out.push(a.clone());
                    }
                }
                Atom::Act { target, .. } => {
                    if !target.is_empty() {
                        out.push(a.clone());
                    }
                }
            }
        }
        GTWord::new(out)
    }

    /// Parse with formal `let` macros inlined.
    pub fn parse_with(text: &str, macros: &BTreeMap<String, GTWord>) -> Result<GTWord, GtError> {
        parse_gtword(text, macros)
    }

    pub fn parse(text: &str) -> Result<GTWord, GtError> {
        parse_gtword(text, &BTreeMap::new())
    }
}

fn push_gen(out: &mut Vec<Atom>, base: Word, exp: LambdaExp) {
    if let Some(Atom::Gen { base: b, exp: e }) = out.last_mut() {
        if *b == base {
            *e = *e + exp;
            if e.is_zero() {
                out.pop();
            }
            return;
        }
    }
    if !exp.is_zero() {
        out.push(Atom::Gen { base, exp });
    }
}

pub fn plain_of(atoms: &[Atom]) -> Option<Word> {
    let mut w = Word::empty();
    for a in atoms {
        match a {
            Atom::Gen { base, exp } => w = w.mul(&base.pow(exp.as_integer()?)),
            _ => return None,
        }
    }
    Some(w)
}

impl GTWord {
    /// `0:x 1:y ...`, for locating step ranges.
    pub fn indexed(&self) -> String {
        self.atoms.iter().enumerate().map(|(i, a)| format!("{i}:{a}")).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Display for GTWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("1");
        }
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for GTWord {
    type Err = GtError;
    fn from_str(s: &str) -> Result<GTWord, GtError> {
        GTWord::parse(s)
    }
}

/// Position of the bracket closing the one at `open`.
fn matching(s: &str, open: usize) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices().skip_while(|(i, _)| *i < open) {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Split at the first `sep` outside brackets.
fn split_top(s: &str, sep: char) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

fn int_power(tail: &str, tok: &str) -> Result<i64, GtError> {
    if tail.is_empty() {
        return Ok(1);
    }
    tail.strip_prefix('^')
        .and_then(|e| e.parse().ok())
        .ok_or_else(|| GtError::Parse(format!("expected an integer power after `{tok}`")))
}

fn plain_arg(s: &str) -> Result<Word, GtError> {
    let w = word::parse_word(s)?;
    if w.is_empty() && !s.trim().is_empty() && s.trim() != "1" {
        return Err(GtError::Parse(format!("bad word `{s}`")));
    }
    Ok(w)
}

fn parse_gtword(text: &str, macros: &BTreeMap<String, GTWord>) -> Result<GTWord, GtError> {
    let mut atoms = Vec::new();
    let toks = word::tokens(text);
    let mut i = 0;
    while i < toks.len() {
        let tok = toks[i].as_str();
        i += 1;
        if tok == "1" {
            continue;
        }
        let mut swap = false;
        let tok = if tok == "inv" {
            swap = true;
            let t = toks.get(i).ok_or_else(|| GtError::Parse("`inv` needs an f-term".into()))?;
            i += 1;
            if !t.starts_with("f(") {
                return Err(GtError::Parse(format!("`inv` applies to f-terms, got `{t}`")));
            }
            t.as_str()
        } else {
            tok
        };
        if let Some(rest) = tok.strip_prefix("f(") {
            let close = matching(tok, 1).ok_or_else(|| GtError::Parse(format!("unbalanced `{tok}`")))?;
            let inner = &rest[..close - 2];
            let (u, v) = split_top(inner, ';').ok_or_else(|| GtError::Parse(format!("f-term needs `;` in `{tok}`")))?;
            let (u, v) = (plain_arg(u)?, plain_arg(v)?);
            if u.is_empty() || v.is_empty() {
                return Err(GtError::Parse(format!("empty f-argument in `{tok}`")));
            }
            let k = int_power(&tok[close + 1..], tok)?;
            let a = if swap { Atom::f(v, u) } else { Atom::f(u, v) };
            atoms.extend(GTWord::new(vec![a]).pow(k).atoms);
            continue;
        }
        if let Some((kind, open)) = act_head(tok) {
            let close = matching(tok, open).ok_or_else(|| GtError::Parse(format!("unbalanced `{tok}`")))?;
            let target = plain_arg(&tok[open + 1..close])?;
            let k = int_power(&tok[close + 1..], tok)?;
            atoms.push(Atom::Act { kind, target: target.pow(k) });
            continue;
        }
        let (base, exp) = word::split_power(tok);
        let exp: LambdaExp = match exp {
            None => LambdaExp::ONE,
            Some(e) => e.parse()?,
        };
        if base.starts_with('(') {
            let close = matching(base, 0).ok_or_else(|| GtError::Parse(format!("unbalanced `{tok}`")))?;
            if close + 1 != base.len() {
                return Err(GtError::Parse(format!("bad group `{tok}`")));
            }
            let inner = parse_gtword(&base[1..close], macros)?;
            match exp.as_integer() {
                Some(k) => atoms.extend(inner.pow(k).atoms),
                None => {
                    let b = inner
                        .as_plain()
                        .ok_or_else(|| GtError::Parse(format!("formal power of a non-plain group `{tok}`")))?;
                    atoms.push(Atom::Gen { base: b, exp });
                }
            }
            continue;
        }
        if let Some(m) = macros.get(base) {
            let k = exp.as_integer().ok_or_else(|| GtError::Parse(format!("formal power of the formal macro `{base}`")))?;
            atoms.extend(m.pow(k).atoms);
            continue;
        }
        let w = plain_arg(base)?;
        if w.len() != 1 {
            return Err(GtError::Parse(format!("bad letter `{tok}`")));
        }
        atoms.push(Atom::Gen { base: w, exp });
    }
    Ok(GTWord::new(atoms))
}

/// `F(`, `F[`, `FB(`, `FB:name[` and so on.
fn act_head(tok: &str) -> Option<(ActKind, usize)> {
    let open = tok.find(['(', '['])?;
    let head = &tok[..open];
    let kind = match head {
        "F" => ActKind::Standard,
        "FB" => ActKind::Bracketed(None),
        _ => ActKind::Bracketed(Some(head.strip_prefix("FB:")?.to_string())),
    };
    Some((kind, open))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_print_round_trip() {
        for s in [
            "f(a2^2;y(2)) a2^L f(y(2);a2^2)",
            "(g2 g1 d)^M",
            "t1^(-2,2) FB(t(2)) F(d3)",
            "FB:B1(s3) 1",
        ] {
            let w = GTWord::parse(s).unwrap();
            let again = GTWord::parse(&w.to_string()).unwrap();
            assert_eq!(w, again, "{s}");
        }
    }

    #[test]
    fn inv_swaps_arguments() {
        assert_eq!(GTWord::parse("inv f(x;y)").unwrap(), GTWord::parse("f(y;x)").unwrap());
        assert_eq!(GTWord::parse("f(x;y)^-1").unwrap(), GTWord::parse("f(y;x)").unwrap());
    }

    #[test]
    fn canonical_merges() {
        let w = GTWord::parse("a1^M a1 a1^M a2 a2^-1").unwrap().canonical();
        assert_eq!(w.to_string(), "a1^L");
        let w = GTWord::parse("(t1^2)^M").unwrap().canonical();
        assert_eq!(w.to_string(), "t1^2M");
        let w = GTWord::parse("(a b)^2").unwrap().canonical();
        assert_eq!(w.to_string(), "a b a b");
    }

    #[test]
    fn canonical_keeps_order() {
        let w = GTWord::parse("x^L y^L x^-L").unwrap().canonical();
        assert_eq!(w.len(), 3);
    }

    #[test]
    fn rejects_empty_f_argument() {
        assert!(GTWord::parse("f(1;x)").is_err());
        assert!(GTWord::parse("f(x y)").is_err());
    }
}
