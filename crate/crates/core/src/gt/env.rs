//! The ambient group of a derivation: oracle, named elements, the standard
//! action's formulas and the bracketed conjugators.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{ActKind, Atom, GTWord, GtError, LambdaExp};
use crate::braid::{self, Braid, NamedBraid};
use crate::bracketing::{self, Bracketing};
use crate::surface::suite::Surface;
use crate::surface::{gen_name, named, Mcg, SurfaceError};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Context {
    Braid { n: usize },
    Mcg { g: usize, surface: Surface },
    /// Free group on whatever symbols occur.
    Free,
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Context::Braid { n } => write!(f, "braid n={n}"),
            Context::Mcg { g, surface } => {
                let s = match surface {
                    Surface::G0 => "g0",
                    Surface::G1 => "g1",
                };
                write!(f, "mcg g={g} surface={s}")
            }
            Context::Free => f.write_str("free"),
        }
    }
}

impl std::str::FromStr for Context {
    type Err = GtError;

    /// `braid n=8`, `mcg g=4 surface=g1`, `free`.
    fn from_str(s: &str) -> Result<Context, GtError> {
        let bad = || GtError::Parse(format!("bad context `{s}`"));
        let mut it = s.split_whitespace();
        let kind = it.next().ok_or_else(bad)?;
        let mut kv = BTreeMap::new();
        for t in it {
            let (k, v) = t.split_once('=').ok_or_else(bad)?;
            kv.insert(k, v);
        }
        match kind {
            "braid" => {
                let n: usize = kv.get("n").and_then(|v| v.parse().ok()).ok_or_else(bad)?;
                if !(2..=64).contains(&n) {
                    return Err(bad());
                }
                Ok(Context::Braid { n })
            }
            "mcg" => {
                let g: usize = kv.get("g").and_then(|v| v.parse().ok()).ok_or_else(bad)?;
                if g < 2 {
                    return Err(bad());
                }
                let surface = match kv.get("surface") {
                    None => Surface::G1,
                    Some(v) => v.parse().map_err(GtError::Parse)?,
                };
                Ok(Context::Mcg { g, surface })
            }
            "free" => Ok(Context::Free),
            _ => Err(bad()),
        }
    }
}

/// A context plus the `let` names and bracketings declared by a script.
#[derive(Debug, Clone)]
pub struct Env {
    pub context: Context,
    mcg: Option<Arc<Mcg>>,
    /// Plain `let` bindings, usable as symbols.
    pub lets: BTreeMap<String, Word>,
    /// Formal `let` bindings, inlined at parse time.
    pub macros: BTreeMap<String, GTWord>,
    pub bracketings: BTreeMap<String, Bracketing>,
}

fn surf(e: SurfaceError) -> GtError {
    GtError::Context(e.to_string())
}

fn br(e: braid::BraidError) -> GtError {
    GtError::Context(e.to_string())
}

impl Env {
    pub fn new(context: Context) -> Result<Env, GtError> {
        let mcg = match context {
            Context::Mcg { g, .. } => Some(Arc::new(Mcg::new(g).map_err(surf)?)),
            _ => None,
        };
        Ok(Env { context, mcg, lets: BTreeMap::new(), macros: BTreeMap::new(), bracketings: BTreeMap::new() })
    }

    pub fn parse(&self, text: &str) -> Result<GTWord, GtError> {
        GTWord::parse_with(text, &self.macros)
    }

    pub fn parse_plain(&self, text: &str) -> Result<Word, GtError> {
        self.parse(text)?
            .canonical()
            .as_plain()
            .ok_or_else(|| GtError::Parse(format!("expected a plain word, got `{text}`")))
    }

    /// Substitute `let` names until only context symbols remain.
    pub fn resolve(&self, w: &Word) -> Word {
        let mut out = Word::empty();
        for (g, e) in w.letters() {
            let k = e.to_i64().expect("small exponent");
            match self.lets.get(&**g) {
                Some(def) => out = out.mul(&self.resolve(def).pow(k)),
                None => out = out.mul(&Word::letter(g, k)),
            }
        }
        out
    }

    /// The word spelled in the context's generators (`s_i`, or `a_i`/`d2`).
    pub fn generator_letters(&self, w: &Word) -> Result<Word, GtError> {
        let w = self.resolve(w);
        match self.context {
            Context::Braid { n } => {
                let b = braid::expand(&w, n).map_err(br)?;
                Ok(Word::from_letters(
                    b.letters().iter().map(|&s| (crate::word::gen(&format!("s{}", s.abs())), s.signum().into())),
                ))
            }
            Context::Mcg { g, .. } => {
                let m = named::expand(g, &w).map_err(surf)?;
                let ids = m.ids();
                Ok(Word::from_letters(ids.iter().map(|&x| (crate::word::gen(&gen_name(g, x.abs())), x.signum().into()))))
            }
            Context::Free => Ok(w),
        }
    }

    fn is_generator(&self, sym: &str) -> bool {
        match self.context {
            Context::Braid { n } => {
                sym.strip_prefix('s').and_then(|s| s.parse::<usize>().ok()).is_some_and(|i| i >= 1 && i < n)
            }
            Context::Mcg { g, .. } => crate::surface::gen_id(g, sym).is_ok(),
            Context::Free => !self.lets.contains_key(sym),
        }
    }

    /// Exact equality in the ambient group.
    pub fn equal(&self, u: &Word, v: &Word) -> Result<bool, GtError> {
        let (u, v) = (self.resolve(u), self.resolve(v));
        if u == v {
            return Ok(true);
        }
        match self.context {
            Context::Braid { n } => {
                let (a, b) = (braid::expand(&u, n).map_err(br)?, braid::expand(&v, n).map_err(br)?);
                braid::braid_equal(&a, &b).map_err(br)
            }
            Context::Mcg { g, surface } => {
                let mcg = self.mcg.as_ref().expect("mcg context has an oracle");
                let (a, b) = (named::expand(g, &u).map_err(surf)?, named::expand(g, &v).map_err(surf)?);
                match surface {
                    Surface::G1 => mcg.mcg_equal_g1(&a, &b).map_err(surf),
                    Surface::G0 => mcg.mcg_equal_g0(&a, &b).map_err(surf),
                }
            }
            Context::Free => Ok(false),
        }
    }

    pub fn commute(&self, u: &Word, v: &Word) -> Result<bool, GtError> {
        self.equal(&u.mul(v), &v.mul(u))
    }

    /// Check that every support word of `left` commutes with every one of `right`.
    pub fn segments_commute(&self, left: &[Atom], right: &[Atom]) -> Result<(), GtError> {
        for a in left {
            for b in right {
                if matches!(a, Atom::Act { .. }) || matches!(b, Atom::Act { .. }) {
                    return Err(GtError::UnjustifiedSideCondition(format!(
                        "commutation of a pending application ({a} / {b}) needs a lemma"
                    )));
                }
                for x in a.support() {
                    for y in b.support() {
                        if !self.commute(&x, &y)? {
                            return Err(GtError::OracleRefuted(format!("{x} does not commute with {y}")));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn require_equal(&self, u: &Word, v: &Word) -> Result<(), GtError> {
        if self.equal(u, v)? {
            Ok(())
        } else {
            Err(GtError::OracleRefuted(format!("{u} != {v}")))
        }
    }

    pub fn require_commute(&self, u: &Word, v: &Word) -> Result<(), GtError> {
        if self.commute(u, v)? {
            Ok(())
        } else {
            Err(GtError::OracleRefuted(format!("{u} does not commute with {v}")))
        }
    }

    /// The standard action on a single symbol, when a closed formula is known.
    pub fn formula(&self, sym: &str) -> Option<GTWord> {
        let pow_l = |s: &str| GTWord::new(vec![Atom::gen(s, LambdaExp::LAMBDA)]);
        let drinfeld = |x: &str, y: &str| {
            let x2 = Word::letter(x, 2);
            let y = Word::letter(y, 1);
            GTWord::new(vec![Atom::f(x2.clone(), y.clone()), Atom::gen(x, LambdaExp::LAMBDA), Atom::f(y, x2)])
        };
        match self.context {
            Context::Braid { n } => match braid::parse_named(sym)? {
                NamedBraid::Sigma(1) if n > 1 => Some(pow_l(sym)),
                NamedBraid::Sigma(i) if i < n => Some(drinfeld(sym, &format!("eta({i})"))),
                NamedBraid::Eta(i) | NamedBraid::Omega(i) if i <= n => Some(pow_l(sym)),
                NamedBraid::FullTwist(1, j) if j <= n => Some(pow_l(sym)),
                _ => None,
            },
            Context::Mcg { g, .. } => {
                if sym == "d2" || sym == "d" || sym == "a1" {
                    return Some(pow_l(sym));
                }
                if let Ok(i) = crate::surface::gen_id(g, sym) {
                    return Some(drinfeld(sym, &format!("y({i})")));
                }
                match named::parse_named(sym)? {
                    named::NamedMcg::Y(k) | named::NamedMcg::W(k) if k <= 2 * g + 1 => Some(pow_l(sym)),
                    _ => None,
                }
            }
            Context::Free => None,
        }
    }

    /// Conjugator `P` with `F_B = inn(P) ∘ F`.
    pub fn conjugator(&self, name: Option<&str>) -> Result<GTWord, GtError> {
        match self.context {
            Context::Braid { n } => {
                let b = self.bracketing(name)?;
                let path = bracketing::amove_path(&Bracketing::standard(n).map_err(|e| GtError::Context(e.to_string()))?, b)
                    .map_err(|e| GtError::Context(e.to_string()))?;
                Ok(bracketing::path_conjugator(&path))
            }
            Context::Mcg { g, .. } => {
                if name.is_some() {
                    return Err(GtError::Context("named bracketings live in braid contexts".into()));
                }
                Ok(GTWord::new(
                    (1..g)
                        .map(|j| Atom::f(Word::letter(&format!("y({})", 2 * j + 1), 1), Word::letter(&format!("a{}", 2 * j + 1), 2)))
                        .collect(),
                ))
            }
            Context::Free => Err(GtError::Context("no bracketed action in a free context".into())),
        }
    }

    pub fn bracketing(&self, name: Option<&str>) -> Result<&Bracketing, GtError> {
        match name {
            Some(n) => self.bracketings.get(n).ok_or_else(|| GtError::Context(format!("no bracketing named `{n}`"))),
            None if self.bracketings.len() == 1 => Ok(self.bracketings.values().next().expect("one entry")),
            None => Err(GtError::Context("FB needs a bracketing name here".into())),
        }
    }

    /// One expansion step of a pending application: `FB(x)` becomes
    /// `P F(x) P^-1`; `F(x)` of a symbol with a known formula becomes the
    /// formula; anything else is unfolded one level and distributed. With
    /// `hom` set, only the distribution step is taken.
    pub fn act(&self, kind: &ActKind, target: &Word, hom: bool) -> Result<GTWord, GtError> {
        if let (ActKind::Bracketed(name), false) = (kind, hom) {
            let p = self.conjugator(name.as_deref())?;
            let inner = Atom::Act { kind: ActKind::Standard, target: target.clone() };
            return Ok(p.concat(&GTWord::new(vec![inner])).concat(&p.inverse()));
        }
        let (g, neg) = match target.letters() {
            [(g, e)] if e.magnitude() == &1u32.into() => (g.clone(), e.sign() == num_bigint::Sign::Minus),
            _ => return Ok(distribute(kind, target)),
        };
        if !hom {
            if let Some(f) = self.formula(&g) {
                return Ok(if neg { f.inverse() } else { f });
            }
        }
        let def = match self.lets.get(&*g) {
            Some(d) => d.clone(),
            None if self.is_generator(&g) => return Err(GtError::UnknownTarget(g.to_string())),
            None => self.generator_letters(&Word::letter(&g, 1))?,
        };
        let def = if neg { def.inverse() } else { def };
        Ok(distribute(kind, &def))
    }

    /// Image of a word under the concrete action with this λ and trivial f.
    pub fn mirror(&self, w: &Word, lambda: i64) -> Result<Word, GtError> {
        if lambda == 1 {
            return Ok(w.clone());
        }
        let letters = self.generator_letters(w)?;
        Ok(Word::from_letters(letters.letters().iter().map(|(g, e)| (g.clone(), -e))))
    }

    /// Erase f-terms and evaluate exponents at `lambda`.
    pub fn specialize(&self, w: &GTWord, lambda: i64) -> Result<Word, GtError> {
        if lambda != 1 && lambda != -1 {
            return Err(GtError::NonConcreteSpec);
        }
        let mut out = Word::empty();
        for a in &w.atoms {
            match a {
                Atom::Gen { base, exp } => out = out.mul(&base.pow(exp.eval(lambda))),
                Atom::F { .. } => {}
                Atom::Act { target, .. } => out = out.mul(&self.mirror(target, lambda)?),
            }
        }
        Ok(out)
    }

    /// Both specializations agree in the oracle.
    pub fn specializations_agree(&self, a: &GTWord, b: &GTWord) -> Result<bool, GtError> {
        for lambda in [1, -1] {
            if !self.equal(&self.specialize(a, lambda)?, &self.specialize(b, lambda)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The braid for a word in a braid context.
    pub fn braid(&self, w: &Word) -> Result<Braid, GtError> {
        match self.context {
            Context::Braid { n } => braid::expand(&self.resolve(w), n).map_err(br),
            _ => Err(GtError::Context("not a braid context".into())),
        }
    }
}

/// `F(x1^e1 x2^e2 ...) = F(x1)^e1 F(x2)^e2 ...` as one application per unit letter.
fn distribute(kind: &ActKind, w: &Word) -> GTWord {
    GTWord::new(
        w.unit_letters()
            .into_iter()
            .map(|(g, s)| Atom::Act { kind: kind.clone(), target: Word::letter(&g, s as i64) })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_action_formulas() {
        let env = Env::new("mcg g=2".parse().unwrap()).unwrap();
        let a2 = env.act(&ActKind::Standard, &Word::letter("a2", 1), false).unwrap();
        assert_eq!(a2.to_string(), "f(a2^2;y(2)) a2^L f(y(2);a2^2)");
        let a1 = env.act(&ActKind::Standard, &Word::letter("a1", 1), false).unwrap();
        assert_eq!(a1.to_string(), "a1^L");
    }

    #[test]
    fn specialization_inverts_generators() {
        let env = Env::new("braid n=4".parse().unwrap()).unwrap();
        for i in 1..4 {
            let s = format!("s{i}");
            let w = env.act(&ActKind::Standard, &Word::letter(&s, 1), false).unwrap();
            assert_eq!(env.specialize(&w, -1).unwrap(), Word::letter(&s, -1));
        }
    }

    #[test]
    fn composite_targets_distribute() {
        let env = Env::new("mcg g=3".parse().unwrap()).unwrap();
        let w = env.act(&ActKind::Standard, &Word::letter("t(1)", 1), false).unwrap();
        assert_eq!(w.to_string(), "F(a2) F(a1) F(a3) F(a2)");
    }
}
