//! The rewrite kernel. Each rule rewrites the atoms `start..end` of a word
//! and discharges its side conditions with the context oracle or a cited
//! equation.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::env::Env;
use super::{ActKind, Atom, GTWord, GtError, LambdaExp};
use crate::braid::{self, Braid};
use crate::bracketing::flat_crossing_letters;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Justification {
    Oracle,
    Lemma(String),
    Hyp(String),
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Oracle => f.write_str("oracle"),
            Justification::Lemma(id) => write!(f, "lemma:{id}"),
            Justification::Hyp(id) => write!(f, "hyp:{id}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleApplication {
    pub rule: String,
    pub params: BTreeMap<String, String>,
    pub start: usize,
    pub end: usize,
    pub by: Justification,
}

/// `lhs = rhs`, already stated in the current context.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equation {
    pub lhs: GTWord,
    pub rhs: GTWord,
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

pub const RULES: &[&str] = &[
    "norm", "exp", "exp-arith", "pow", "insert", "inv", "oracle", "oracle-eq", "unfold", "subst-named", "arg", "comm", "conj",
    "haiku-i", "haiku-ii", "abelian-drop", "haiku-iii", "hex", "pent", "use", "act", "amove", "bracket",
];

struct Ctx<'a> {
    env: &'a Env,
    app: &'a RuleApplication,
    lemmas: &'a BTreeMap<String, Equation>,
}

impl Ctx<'_> {
    fn param(&self, k: &str) -> Result<&str, GtError> {
        self.app
            .params
            .get(k)
            .map(String::as_str)
            .ok_or_else(|| GtError::PatternMismatch(format!("rule `{}` needs parameter `{k}`", self.app.rule)))
    }

    fn word(&self, k: &str) -> Result<Word, GtError> {
        self.env.parse_plain(self.param(k)?)
    }

    fn flag(&self, k: &str) -> bool {
        self.app.params.get(k).is_some_and(|v| v == "1" || v == "true" || v == "yes")
    }

    fn equation(&self) -> Result<&Equation, GtError> {
        let key = self.app.by.to_string();
        match self.app.by {
            Justification::Oracle => Err(GtError::UnjustifiedSideCondition(format!("rule `{}` needs a cited equation", self.app.rule))),
            _ => self.lemmas.get(&key).ok_or_else(|| GtError::UnjustifiedSideCondition(format!("unknown citation `{key}`"))),
        }
    }
}

fn single<'a>(seg: &'a [Atom], rule: &str) -> Result<&'a Atom, GtError> {
    match seg {
        [a] => Ok(a),
        _ => Err(GtError::PatternMismatch(format!("`{rule}` applies to exactly one atom, got {}", seg.len()))),
    }
}

fn single_f<'a>(seg: &'a [Atom], rule: &str) -> Result<(&'a Word, &'a Word), GtError> {
    match single(seg, rule)? {
        Atom::F { u, v } => Ok((u, v)),
        a => Err(GtError::PatternMismatch(format!("`{rule}` needs an f-term, got {a}"))),
    }
}

/// `k` with `a = k b`, for nonzero `b`.
fn multiple(a: LambdaExp, b: LambdaExp) -> Option<i64> {
    if b.is_zero() {
        return None;
    }
    let k = if b.q != 0 { a.q / b.q } else { a.p / b.p };
    (k != 0 && b.scale(k) == a).then_some(k)
}

fn canon(atoms: &[Atom]) -> Vec<Atom> {
    GTWord::new(atoms.to_vec()).canonical().atoms
}

/// Replace a cyclic subword of the relator (or its inverse) by the inverse of
/// the complementary subword. An empty segment inserts the relator.
fn relator_replace(seg: &[Atom], rel: &GTWord) -> Option<GTWord> {
    let s = canon(seg);
    if s.is_empty() {
        return Some(rel.clone());
    }
    for r in [rel.canonical(), rel.inverse().canonical()] {
        let n = r.atoms.len();
        for k in 0..n {
            let rot: Vec<Atom> = r.atoms[k..].iter().chain(&r.atoms[..k]).cloned().collect();
            if rot.len() >= s.len() && canon(&rot[..s.len()]) == s {
                return Some(GTWord::new(rot[s.len()..].to_vec()).inverse());
            }
        }
    }
    None
}

fn plain_seg(seg: &[Atom]) -> Result<Word, GtError> {
    super::plain_of(seg).ok_or_else(|| GtError::PatternMismatch("segment is not a plain word".into()))
}

/// Rewrite `w` by one rule application; returns the new word and a detail line.
pub fn rewrite_step(
    env: &Env,
    w: &GTWord,
    app: &RuleApplication,
    lemmas: &BTreeMap<String, Equation>,
) -> Result<(GTWord, String), GtError> {
    let (start, end) = (app.start, app.end);
    if start > end || end > w.atoms.len() {
        return Err(GtError::PatternMismatch(format!("range {start}..{end} outside 0..{}", w.atoms.len())));
    }
    let seg = &w.atoms[start..end];
    let cx = Ctx { env, app, lemmas };
    let (repl, detail) = apply(&cx, seg, w, start, end)?;
    let mut atoms = w.atoms[..start].to_vec();
    atoms.extend(repl.atoms);
    atoms.extend(w.atoms[end..].iter().cloned());
    Ok((GTWord::new(atoms), detail))
}

fn apply(cx: &Ctx, seg: &[Atom], w: &GTWord, start: usize, end: usize) -> Result<(GTWord, String), GtError> {
    let env = cx.env;
    let rule = cx.app.rule.as_str();
    match rule {
        "norm" => Ok((GTWord::new(canon(seg)), "merged".into())),
        "exp" | "exp-arith" => {
            let (base, exp) = match single(seg, rule)? {
                Atom::Gen { base, exp } => (base, *exp),
                a => return Err(GtError::PatternMismatch(format!("`exp` needs a power, got {a}"))),
            };
            let e: LambdaExp = cx.param("e")?.parse()?;
            let parts = vec![Atom::Gen { base: base.clone(), exp: e }, Atom::Gen { base: base.clone(), exp: exp - e }];
            Ok((GTWord::new(parts), format!("{exp} = {e} + ({})", exp - e)))
        }
        "pow" => match seg {
            // (xy)^e = x^e y^e for commuting x, y
            [Atom::Gen { base, exp }] => {
                let x = cx.word("x")?;
                let y = x.inverse().mul(base);
                env.require_commute(&x, &y)?;
                let out = vec![Atom::Gen { base: x.clone(), exp: *exp }, Atom::Gen { base: y.clone(), exp: *exp }];
                Ok((GTWord::new(out), format!("({base})^{exp} = ({x})^{exp} ({y})^{exp}")))
            }
            // x^e y^(ke) = (x y^k)^e, and symmetrically
            [Atom::Gen { base: x, exp: e1 }, Atom::Gen { base: y, exp: e2 }] => {
                let (x, y, e) = match (multiple(*e2, *e1), multiple(*e1, *e2)) {
                    (Some(k), _) => (x.clone(), y.pow(k), *e1),
                    (None, Some(k)) => (x.pow(k), y.clone(), *e2),
                    _ => return Err(GtError::PatternMismatch(format!("{e1} and {e2} are not integer multiples"))),
                };
                env.require_commute(&x, &y)?;
                Ok((GTWord::new(vec![Atom::Gen { base: x.mul(&y), exp: e }]), format!("({x})^{e} ({y})^{e} = ({x} {y})^{e}")))
            }
            _ => Err(GtError::PatternMismatch("`pow` needs one or two powers".into())),
        },
        "insert" => {
            if !seg.is_empty() {
                return Err(GtError::PatternMismatch("`insert` takes an empty range".into()));
            }
            let x = env.parse(cx.param("w")?)?;
            Ok((x.concat(&x.inverse()), format!("inserted ({x})({x})^-1")))
        }
        "inv" => {
            if seg.is_empty() {
                let (u, v) = (cx.word("u")?, cx.word("v")?);
                return Ok((GTWord::new(vec![Atom::f(u.clone(), v.clone()), Atom::f(v, u)]), "inserted f(u;v)f(v;u)".into()));
            }
            match seg {
                [Atom::F { u, v }, Atom::F { u: u2, v: v2 }] if u == v2 && v == u2 => Ok((GTWord::default(), "f(x;y)f(y;x) = 1".into())),
                _ => Err(GtError::PatternMismatch("`inv` needs f(x;y) f(y;x)".into())),
            }
        }
        "oracle" | "oracle-eq" => {
            let old = plain_seg(seg)?;
            let new = env.parse(cx.param("to")?)?;
            let new_w = new.as_plain().ok_or_else(|| GtError::PatternMismatch("replacement must be plain".into()))?;
            env.require_equal(&old, &new_w)?;
            Ok((new, format!("{old} = {new_w}")))
        }
        "unfold" | "subst-named" => {
            let sym = cx.param("sym")?;
            let def = match env.lets.get(sym) {
                Some(d) => d.clone(),
                None => env.generator_letters(&Word::letter(sym, 1))?,
            };
            let sub = |x: &Word| -> Word {
                let mut out = Word::empty();
                for (g, e) in x.letters() {
                    let k: i64 = e.try_into().expect("small exponent");
                    out = out.mul(&if &**g == sym { def.pow(k) } else { Word::letter(g, k) });
                }
                out
            };
            Ok((GTWord::new(seg.iter().map(|a| a.map_words(sub)).collect()), format!("{sym} := {def}")))
        }
        "arg" => {
            let which = cx.param("which")?;
            let to = cx.word("to")?;
            let a = single(seg, rule)?;
            let (old, new) = match (a, which) {
                (Atom::F { u, v }, "u") => (u.clone(), Atom::f(to.clone(), v.clone())),
                (Atom::F { u, v }, "v") => (v.clone(), Atom::f(u.clone(), to.clone())),
                // with k, b^e = (b^k)^(e/k)
                (Atom::Gen { base, exp }, "base") => match cx.app.params.get("k") {
                    Some(k) => {
                        let k: i64 = k.parse().map_err(|_| GtError::Parse(format!("bad k `{k}`")))?;
                        let e = exp.div(k).ok_or_else(|| GtError::PatternMismatch(format!("{exp} is not divisible by {k}")))?;
                        (base.pow(k), Atom::Gen { base: to.clone(), exp: e })
                    }
                    None => (base.clone(), Atom::Gen { base: to.clone(), exp: *exp }),
                },
                (Atom::Act { kind, target }, "target") => (target.clone(), Atom::Act { kind: kind.clone(), target: to.clone() }),
                _ => return Err(GtError::PatternMismatch(format!("`arg which={which}` does not fit {a}"))),
            };
            env.require_equal(&old, &to)?;
            Ok((GTWord::new(vec![new]), format!("{old} = {to}")))
        }
        "comm" => {
            let k = split_point(cx, start, end)?;
            let (l, r) = (&seg[..k - start], &seg[k - start..]);
            let swapped: Vec<Atom> = r.iter().chain(l).cloned().collect();
            match cx.app.by {
                Justification::Oracle => {
                    env.segments_commute(l, r)?;
                }
                _ => {
                    let eq = cx.equation()?;
                    if !cited_commutation(eq, l, r) {
                        return Err(GtError::PatternMismatch(format!("cited equation {eq} is not this commutation")));
                    }
                }
            }
            Ok((GTWord::new(swapped), format!("swapped {} | {}", GTWord::new(l.to_vec()), GTWord::new(r.to_vec()))))
        }
        "conj" => {
            let k = split_point(cx, start, end)?;
            let (l, r) = (&seg[..k - start], &seg[k - start..]);
            if seg.iter().any(|a| matches!(a, Atom::Act { .. })) {
                return Err(GtError::PatternMismatch("cannot move a pending application".into()));
            }
            if let Some(x) = super::plain_of(r) {
                // L X = X (X^-1 L X)
                let moved: Vec<Atom> = l.iter().map(|a| a.map_words(|u| x.inverse().mul(u).mul(&x))).collect();
                let mut out = r.to_vec();
                out.extend(moved);
                Ok((GTWord::new(out), format!("moved {x} left")))
            } else if let Some(x) = super::plain_of(l) {
                // X R = (X R X^-1) X
                let mut out: Vec<Atom> = r.iter().map(|a| a.map_words(|u| x.mul(u).mul(&x.inverse()))).collect();
                out.extend(l.iter().cloned());
                Ok((GTWord::new(out), format!("moved {x} right")))
            } else {
                Err(GtError::PatternMismatch("`conj` needs a plain part on one side".into()))
            }
        }
        "haiku-i" => match seg {
            [Atom::F { u: a, v: b }, Atom::F { u: a2, v: b2 }] => {
                for x in [a, b] {
                    for y in [a2, b2] {
                        env.require_commute(x, y)?;
                    }
                }
                Ok((GTWord::new(vec![Atom::f(a.mul(a2), b.mul(b2))]), "f(a;b)f(A;B) = f(aA;bB)".into()))
            }
            [Atom::F { u, v }] => {
                let (a, b) = (cx.word("a")?, cx.word("b")?);
                let (a2, b2) = (a.inverse().mul(u), b.inverse().mul(v));
                for x in [&a, &b] {
                    for y in [&a2, &b2] {
                        env.require_commute(x, y)?;
                    }
                }
                Ok((GTWord::new(vec![Atom::f(a, b), Atom::f(a2, b2)]), "f(aA;bB) = f(a;b)f(A;B)".into()))
            }
            _ => Err(GtError::PatternMismatch("`haiku-i` needs one or two f-terms".into())),
        },
        "haiku-ii" | "abelian-drop" | "haiku-iii" => {
            let (u, v) = single_f(seg, rule)?;
            let which = cx.param("which")?;
            let g = cx.word("g")?;
            let right = cx.app.params.get("side").is_some_and(|s| s == "right");
            let (arg, other) = match which {
                "u" => (u, v),
                "v" => (v, u),
                _ => return Err(GtError::PatternMismatch("`which` must be u or v".into())),
            };
            let new = match (cx.flag("rev"), right) {
                (false, false) => g.inverse().mul(arg),
                (false, true) => arg.mul(&g.inverse()),
                (true, false) => g.mul(arg),
                (true, true) => arg.mul(&g),
            };
            if rule == "haiku-iii" {
                // g commutes with the other argument and inverts under the stripped one
                if right {
                    return Err(GtError::PatternMismatch("`haiku-iii` strips g on the left".into()));
                }
                let b = if cx.flag("rev") { arg } else { &new };
                env.require_commute(&g, other)?;
                env.require_equal(&g.mul(b), &b.mul(&g.inverse()))?;
            } else {
                env.require_commute(&g, u)?;
                env.require_commute(&g, v)?;
            }
            let atom = if which == "u" { Atom::f(new.clone(), other.clone()) } else { Atom::f(other.clone(), new.clone()) };
            Ok((GTWord::new(vec![atom]), format!("{arg} -> {new}")))
        }
        "hex" => {
            let (x, y, z) = (cx.word("x")?, cx.word("y")?, cx.word("z")?);
            let xyz = x.mul(&y).mul(&z);
            let omega = match cx.app.params.get("w") {
                Some(t) => {
                    let o = env.parse_plain(t)?;
                    env.require_equal(&o, &xyz)?;
                    o
                }
                None => xyz,
            };
            for e in [&x, &y, &z] {
                env.require_commute(e, &omega)?;
            }
            let m = match cx.app.params.get("sign").map(String::as_str) {
                None | Some("+") => LambdaExp::M,
                Some("-") => -LambdaExp::M - LambdaExp::ONE,
                Some(s) => return Err(GtError::PatternMismatch(format!("bad sign `{s}`"))),
            };
            let p = |b: &Word, e: LambdaExp| Atom::Gen { base: b.clone(), exp: e };
            let rel = GTWord::new(vec![
                Atom::f(x.clone(), y.clone()),
                p(&x, m),
                Atom::f(z.clone(), x.clone()),
                p(&z, m),
                Atom::f(y.clone(), z.clone()),
                p(&y, m),
                p(&omega, -m),
            ]);
            let out = relator_replace(seg, &rel).ok_or_else(|| GtError::PatternMismatch(format!("segment is not part of the hexagon {rel} = 1")))?;
            Ok((out, format!("hexagon {rel} = 1")))
        }
        "pent" => {
            let e: Vec<Word> = (1..=5).map(|i| cx.word(&format!("e{i}"))).collect::<Result<_, _>>()?;
            for i in 0..5 {
                for d in [2, 3] {
                    env.require_commute(&e[i], &e[(i + d) % 5])?;
                }
            }
            let f = |i: usize, j: usize| Atom::f(e[i].clone(), e[j].clone());
            let rel = GTWord::new(vec![f(0, 1), f(2, 3), f(4, 0), f(1, 2), f(3, 4)]);
            let out = relator_replace(seg, &rel).ok_or_else(|| GtError::PatternMismatch(format!("segment is not part of the pentagon {rel} = 1")))?;
            Ok((out, format!("pentagon {rel} = 1")))
        }
        "use" => {
            let eq = cx.equation()?;
            let rel = eq.lhs.concat(&eq.rhs.inverse());
            let out = relator_replace(seg, &rel).ok_or_else(|| GtError::PatternMismatch(format!("segment does not match {eq}")))?;
            Ok((out, format!("by {eq}")))
        }
        "act" => match single(seg, rule)? {
            Atom::Act { kind, target } => Ok((env.act(kind, target, cx.flag("hom"))?, format!("expanded {}", seg[0]))),
            a => Err(GtError::PatternMismatch(format!("`act` needs F(..) or FB(..), got {a}"))),
        },
        "amove" => {
            let (name, target) = match single(seg, rule)? {
                Atom::Act { kind: ActKind::Bracketed(n), target } => (n.clone(), target),
                a => return Err(GtError::PatternMismatch(format!("`amove` needs FB(..), got {a}"))),
            };
            let to = cx.param("to")?;
            let b = env.bracketing(name.as_deref())?;
            let b2 = env.bracketing(Some(to))?;
            let m = b
                .moves()
                .into_iter()
                .find(|m| b.apply(m).ok().as_ref() == Some(b2))
                .ok_or_else(|| GtError::PatternMismatch(format!("{b} and {b2} are not one A-move apart")))?;
            let (tl, tg) = (Word::letter(&m.lost.twist(), 1), Word::letter(&m.gained.twist(), 1));
            // F_{B'} = inn f(T_lost;T_gained) ∘ F_B, solved for F_B
            let out = GTWord::new(vec![
                Atom::f(tg.clone(), tl.clone()),
                Atom::Act { kind: ActKind::Bracketed(Some(to.to_string())), target: target.clone() },
                Atom::f(tl, tg),
            ]);
            Ok((out, format!("A-move {m}")))
        }
        "bracket" => {
            let (name, target) = match single(seg, rule)? {
                Atom::Act { kind: ActKind::Bracketed(n), target } => (n.clone(), target),
                a => return Err(GtError::PatternMismatch(format!("`bracket` needs FB(..), got {a}"))),
            };
            let b = env.bracketing(name.as_deref())?;
            let (sym, sign) = match target.letters() {
                [(g, e)] if e.magnitude() == &1u32.into() => (Word::letter(g, 1), if e > &0.into() { 1 } else { -1 }),
                _ => return Err(GtError::PatternMismatch("`bracket` needs a single twist or crossing".into())),
            };
            let t = env.braid(&sym)?;
            let n = t.strands;
            let mut found = None;
            for node in b.nodes() {
                let tw = braid::expand(&Word::letter(&node.twist(), 1), n).map_err(|e| GtError::Context(e.to_string()))?;
                if braid::braid_equal(&t, &tw).unwrap_or(false) {
                    found = Some(format!("twist of {node}"));
                    break;
                }
            }
            if found.is_none() {
                for (x1, x2) in b.configurations() {
                    let fc = Braid::from_letters(n, &flat_crossing_letters(x1, x2));
                    if braid::braid_equal(&t, &fc).unwrap_or(false) {
                        found = Some(format!("flat crossing of {x1},{x2}"));
                        break;
                    }
                }
            }
            let why = found.ok_or_else(|| GtError::PatternMismatch(format!("{sym} is neither a twist nor a flat crossing of {b}")))?;
            Ok((GTWord::new(vec![Atom::Gen { base: sym, exp: LambdaExp::LAMBDA.scale(sign) }]), why))
        }
        _ => {
            let _ = (w, end);
            Err(GtError::PatternMismatch(format!("unknown rule `{rule}`")))
        }
    }
}

/// A single power `x^e` stands for `x`: whatever commutes with `x` commutes
/// with every formal power of it.
fn unpowered(atoms: &[Atom]) -> Vec<Atom> {
    match atoms {
        [Atom::Gen { base, .. }] => canon(&[Atom::Gen { base: base.clone(), exp: LambdaExp::ONE }]),
        _ => canon(atoms),
    }
}

/// `eq` reads `A B = B A` for the parts `l`, `r` in either order.
fn cited_commutation(eq: &Equation, l: &[Atom], r: &[Atom]) -> bool {
    let (x, y) = (eq.lhs.canonical().atoms, eq.rhs.canonical().atoms);
    let (l, r) = (unpowered(l), unpowered(r));
    (1..x.len()).any(|k| {
        let (a, b) = (&x[..k], &x[k..]);
        let ba: Vec<Atom> = b.iter().chain(a).cloned().collect();
        canon(&ba) == y && ((l == a && r == b) || (l == b && r == a))
    })
}

fn split_point(cx: &Ctx, start: usize, end: usize) -> Result<usize, GtError> {
    let k = match cx.app.params.get("k") {
        Some(k) => k.parse().map_err(|_| GtError::Parse(format!("bad split `{k}`")))?,
        None => start + 1,
    };
    if k <= start || k >= end {
        return Err(GtError::PatternMismatch(format!("split {k} must lie strictly inside {start}..{end}")));
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn app(rule: &str, start: usize, end: usize, params: &[(&str, &str)]) -> RuleApplication {
        RuleApplication {
            rule: rule.into(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
            start,
            end,
            by: Justification::Oracle,
        }
    }

    fn env() -> Env {
        Env::new("mcg g=3".parse().unwrap()).unwrap()
    }

    #[test]
    fn inverse_pair_cancels() {
        let e = env();
        let w = e.parse("a1 f(a1;a2) f(a2;a1)").unwrap();
        let (out, _) = rewrite_step(&e, &w, &app("inv", 1, 3, &[]), &BTreeMap::new()).unwrap();
        assert_eq!(out.to_string(), "a1");
    }

    #[test]
    fn comm_needs_commuting_supports() {
        let e = env();
        let w = e.parse("a1^L a3^L").unwrap();
        assert!(rewrite_step(&e, &w, &app("comm", 0, 2, &[]), &BTreeMap::new()).is_ok());
        let w = e.parse("a1^L a2^L").unwrap();
        assert!(matches!(rewrite_step(&e, &w, &app("comm", 0, 2, &[]), &BTreeMap::new()), Err(GtError::OracleRefuted(_))));
    }

    #[test]
    fn hexagon_instance() {
        // x=d, y=g2, z=g1 with ω = g2 g1 d
        let mut e = env();
        e.lets.insert("d".into(), Word::letter("d2", 1));
        e.lets.insert("g1".into(), Word::parse("g1(2)").unwrap());
        e.lets.insert("g2".into(), Word::parse("g2(2)").unwrap());
        let w = e.parse("f(d;g2) d^M f(g1;d) g1^M f(g2;g1) g2^M").unwrap();
        let a = app("hex", 0, 6, &[("x", "d"), ("y", "g2"), ("z", "g1"), ("w", "g2 g1 d")]);
        let (out, _) = rewrite_step(&e, &w, &a, &BTreeMap::new()).unwrap();
        assert_eq!(out.canonical().to_string(), "(g2 g1 d)^M");
    }

    #[test]
    fn haiku_i_both_ways() {
        let e = env();
        let w = e.parse("f(a1;a3) f(a5;d2)").unwrap();
        let (out, _) = rewrite_step(&e, &w, &app("haiku-i", 0, 2, &[]), &BTreeMap::new()).unwrap();
        assert_eq!(out.to_string(), "f(a1 a5;a3 d2)");
        let (back, _) = rewrite_step(&e, &out, &app("haiku-i", 0, 1, &[("a", "a1"), ("b", "a3")]), &BTreeMap::new()).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn abelian_drop_requires_commutation() {
        let e = env();
        let w = e.parse("f(a1 a3^2;a1^2)").unwrap();
        let ok = app("haiku-ii", 0, 1, &[("which", "u"), ("g", "a3^2"), ("side", "right")]);
        assert_eq!(rewrite_step(&e, &w, &ok, &BTreeMap::new()).unwrap().0.to_string(), "f(a1;a1^2)");
        let bad = app("haiku-ii", 0, 1, &[("which", "u"), ("g", "a1"), ("side", "left")]);
        let w2 = e.parse("f(a1 a2;a3)").unwrap();
        assert!(rewrite_step(&e, &w2, &bad, &BTreeMap::new()).is_err());
    }
}
