//! Line-oriented proof scripts and their checker.
//!
//! ```text
//! context mcg g=4 surface=g1
//! bracketing B = (((1,2),(3,4)),(5,6)),(7,8)
//! let d = d2
//! hyp NAME: <gtword> = <gtword>
//! goal [NAME:] <gtword> = <gtword>
//! step <rule> [k=v ...] at <start>..<end> [on=rhs] [by oracle|by lemma:<id>|by hyp:<id>]
//! qed
//! ```
//!
//! Parameter values containing spaces are wrapped in braces: `to={a1 a2}`.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::env::{Context, Env};
use super::rules::{rewrite_step, Equation, Justification, RuleApplication};
use super::{ActKind, Atom, GTWord, GtError};
use crate::braid::{self, NamedBraid};
use crate::bracketing::{Bracketing, Interval};
use crate::report::Status;
use crate::word::{self, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Line {
    Context(String),
    Bracketing { name: String, text: String },
    Let { name: String, value: String },
    Hyp { name: String, lhs: String, rhs: String },
    Goal { name: Option<String>, lhs: String, rhs: String },
    Step { app: RuleApplication, rhs_side: bool },
    Qed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofScript {
    pub id: String,
    /// Free-text `note` lines.
    pub notes: Vec<String>,
    /// `(line number, line)`.
    pub lines: Vec<(usize, Line)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub line: usize,
    pub goal: String,
    pub rule: String,
    pub by: String,
    pub status: Status,
    pub detail: String,
    /// The rewritten side with atom positions.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoalReport {
    pub name: String,
    pub statement: String,
    pub status: Status,
    /// Both sides agree at λ = ±1 with f trivial.
    pub specializes: bool,
    /// Canonical sides at `qed` when they differ.
    pub residual: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScriptReport {
    pub script: String,
    pub context: String,
    pub steps: Vec<StepReport>,
    pub goals: Vec<GoalReport>,
    pub hypotheses: Vec<String>,
    pub status: Status,
    /// Errors outside any step (parse errors, bad citations).
    pub errors: Vec<String>,
}

impl ScriptReport {
    pub fn unjustified(&self) -> usize {
        self.steps.iter().filter(|s| s.status != Status::Pass).count()
    }

    /// The last goal as `lhs = rhs`.
    pub fn final_line(&self) -> String {
        self.goals.last().map(|g| g.statement.clone()).unwrap_or_default()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("script {} ({})\n", self.script, self.context);
        for h in &self.hypotheses {
            s.push_str(&format!("  hyp {h}\n"));
        }
        for e in &self.errors {
            s.push_str(&format!("  error: {e}\n"));
        }
        for st in &self.steps {
            s.push_str(&format!("  {:>4} {:<5} {:<12} {:<24} {}\n", st.line, st.status, st.rule, st.by, st.detail));
        }
        for g in &self.goals {
            s.push_str(&format!("  goal {} {}: {}\n", g.name, g.status, g.statement));
            if let Some(r) = &g.residual {
                s.push_str(&format!("    residual {r}\n"));
            }
        }
        s.push_str(&format!("{}\n{}\n", self.status, self.final_line()));
        s
    }
}

/// Split on whitespace outside brackets and braces; `k={a b}` keeps `a b`.
fn step_tokens(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' | '[' | '{' => {
                depth += 1;
                cur.push(c)
            }
            ')' | ']' | '}' => {
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

fn unbrace(v: &str) -> String {
    v.strip_prefix('{').and_then(|x| x.strip_suffix('}')).unwrap_or(v).to_string()
}

fn parse_step(body: &str) -> Result<(RuleApplication, bool), GtError> {
    let toks = step_tokens(body);
    let rule = toks.first().ok_or_else(|| GtError::Parse("empty step".into()))?.clone();
    let mut params = BTreeMap::new();
    let mut range = None;
    let mut by = Justification::Oracle;
    let mut rhs = false;
    let mut i = 1;
    while i < toks.len() {
        let t = &toks[i];
        if t == "at" {
            let r = toks.get(i + 1).ok_or_else(|| GtError::Parse("`at` needs a range".into()))?;
            let (a, b) = r.split_once("..").ok_or_else(|| GtError::Parse(format!("bad range `{r}`")))?;
            let a: usize = a.parse().map_err(|_| GtError::Parse(format!("bad range `{r}`")))?;
            let b: usize = b.parse().map_err(|_| GtError::Parse(format!("bad range `{r}`")))?;
            range = Some((a, b));
            i += 2;
        } else if t == "by" {
            let j = toks.get(i + 1).ok_or_else(|| GtError::Parse("`by` needs a justification".into()))?;
            by = if j == "oracle" {
                Justification::Oracle
            } else if let Some(id) = j.strip_prefix("lemma:") {
                Justification::Lemma(id.to_string())
            } else if let Some(id) = j.strip_prefix("hyp:") {
                Justification::Hyp(id.to_string())
            } else {
                return Err(GtError::Parse(format!("bad justification `{j}`")));
            };
            i += 2;
        } else if let Some((k, v)) = t.split_once('=') {
            if k == "on" {
                rhs = match v {
                    "lhs" => false,
                    "rhs" => true,
                    _ => return Err(GtError::Parse(format!("bad `on={v}`, expected lhs or rhs"))),
                };
            } else {
                params.insert(k.to_string(), unbrace(v));
            }
            i += 1;
        } else {
            return Err(GtError::Parse(format!("unexpected `{t}` in step")));
        }
    }
    let (start, end) = range.ok_or_else(|| GtError::Parse("step needs `at <start>..<end>`".into()))?;
    Ok((RuleApplication { rule, params, start, end, by }, rhs))
}

fn split_eq(s: &str) -> Result<(String, String), GtError> {
    let (l, r) = s.split_once(" = ").ok_or_else(|| GtError::Parse(format!("expected `lhs = rhs`, got `{s}`")))?;
    Ok((l.trim().to_string(), r.trim().to_string()))
}

fn named(body: &str) -> (Option<String>, &str) {
    // `NAME: rest` where NAME has no spaces or brackets
    if let Some((n, rest)) = body.split_once(": ") {
        if !n.is_empty() && n.chars().all(|c| c.is_ascii_alphanumeric() || "-_".contains(c)) {
            return (Some(n.to_string()), rest);
        }
    }
    (None, body)
}

impl ProofScript {
    pub fn parse(id: &str, text: &str) -> Result<ProofScript, GtError> {
        let mut lines = Vec::new();
        let mut notes = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let n = k + 1;
            if let Some(note) = raw.trim().strip_prefix("note ") {
                notes.push(note.trim().to_string());
                continue;
            }
            let l = word::strip_comment(raw).trim();
            if l.is_empty() {
                continue;
            }
            let (kw, body) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
            let body = body.trim();
            let err = |e: GtError| GtError::Parse(format!("line {n}: {e}"));
            let line = match kw {
                "context" => Line::Context(body.to_string()),
                "bracketing" => {
                    let (name, text) = body.split_once('=').ok_or_else(|| err(GtError::Parse("bracketing NAME = ...".into())))?;
                    Line::Bracketing { name: name.trim().to_string(), text: text.trim().to_string() }
                }
                "let" => {
                    let (name, value) = body.split_once('=').ok_or_else(|| err(GtError::Parse("let NAME = ...".into())))?;
                    Line::Let { name: name.trim().to_string(), value: value.trim().to_string() }
                }
                "hyp" => {
                    let (name, rest) = named(body);
                    let name = name.ok_or_else(|| err(GtError::Parse("hyp needs a name".into())))?;
                    let (lhs, rhs) = split_eq(rest).map_err(err)?;
                    Line::Hyp { name, lhs, rhs }
                }
                "goal" => {
                    let (name, rest) = named(body);
                    let (lhs, rhs) = split_eq(rest).map_err(err)?;
                    Line::Goal { name, lhs, rhs }
                }
                "step" => {
                    let (app, rhs_side) = parse_step(body).map_err(err)?;
                    Line::Step { app, rhs_side }
                }
                "qed" => Line::Qed,
                _ => return Err(err(GtError::Parse(format!("unknown keyword `{kw}`")))),
            };
            lines.push((n, line));
        }
        if !matches!(lines.first(), Some((_, Line::Context(_)))) {
            return Err(GtError::Parse("a script starts with a `context` line".into()));
        }
        Ok(ProofScript { id: id.to_string(), notes, lines })
    }

    pub fn load(path: &Path) -> Result<ProofScript, GtError> {
        let text = std::fs::read_to_string(path).map_err(|e| GtError::Parse(format!("{}: {e}", path.display())))?;
        let id = path.file_stem().and_then(|s| s.to_str()).unwrap_or("script");
        ProofScript::parse(id, &text)
    }

    pub fn context(&self) -> &str {
        match &self.lines[0].1 {
            Line::Context(c) => c,
            _ => unreachable!("checked at parse time"),
        }
    }

    /// Scripts cited through `lemma:<script>` or `lemma:<script>/<goal>`.
    pub fn dependencies(&self) -> BTreeSet<String> {
        let local: BTreeSet<String> = self
            .lines
            .iter()
            .filter_map(|(_, l)| match l {
                Line::Goal { name: Some(n), .. } => Some(n.clone()),
                _ => None,
            })
            .collect();
        self.lines
            .iter()
            .filter_map(|(_, l)| match l {
                Line::Step { app: RuleApplication { by: Justification::Lemma(id), .. }, .. } if !local.contains(id) => {
                    Some(id.split('/').next().unwrap_or(id).to_string())
                }
                _ => None,
            })
            .collect()
    }
}

/// A set of scripts that may cite each other.
#[derive(Debug, Default)]
pub struct Corpus {
    pub scripts: BTreeMap<String, ProofScript>,
    cache: RefCell<BTreeMap<String, ScriptReport>>,
}

impl Corpus {
    pub fn new(scripts: impl IntoIterator<Item = ProofScript>) -> Corpus {
        Corpus { scripts: scripts.into_iter().map(|s| (s.id.clone(), s)).collect(), cache: RefCell::default() }
    }

    /// Every `*.gts` file in a directory.
    pub fn load_dir(dir: &Path) -> Result<Corpus, GtError> {
        let mut v = Vec::new();
        let rd = std::fs::read_dir(dir).map_err(|e| GtError::Parse(format!("{}: {e}", dir.display())))?;
        let mut paths: Vec<_> = rd.filter_map(|e| e.ok().map(|e| e.path())).filter(|p| p.extension().is_some_and(|x| x == "gts")).collect();
        paths.sort();
        for p in paths {
            v.push(ProofScript::load(&p)?);
        }
        Ok(Corpus::new(v))
    }

    pub fn check(&self, id: &str) -> Option<ScriptReport> {
        let s = self.scripts.get(id)?;
        Some(self.check_inner(s, &mut Vec::new()))
    }

    pub fn check_all(&self) -> Vec<ScriptReport> {
        self.scripts.keys().map(|k| self.check(k).expect("present")).collect()
    }

    fn check_inner(&self, s: &ProofScript, stack: &mut Vec<String>) -> ScriptReport {
        if let Some(r) = self.cache.borrow().get(&s.id) {
            return r.clone();
        }
        stack.push(s.id.clone());
        let r = run(s, Some(self), stack);
        stack.pop();
        self.cache.borrow_mut().insert(s.id.clone(), r.clone());
        r
    }

    /// The proved equation `id` or `id/goal`, with the script's own environment.
    fn proved(&self, cite: &str, stack: &mut Vec<String>) -> Result<(Equation, Env), GtError> {
        let (sid, goal) = match cite.split_once('/') {
            Some((a, b)) => (a, Some(b)),
            None => (cite, None),
        };
        if stack.iter().any(|x| x == sid) {
            return Err(GtError::UnjustifiedSideCondition(format!("circular citation of `{sid}`")));
        }
        let s = self.scripts.get(sid).ok_or_else(|| GtError::UnjustifiedSideCondition(format!("no script `{sid}` in the corpus")))?;
        let rep = self.check_inner(s, stack);
        let g = match goal {
            Some(name) => rep.goals.iter().find(|g| g.name == name),
            None => rep.goals.last(),
        }
        .ok_or_else(|| GtError::UnjustifiedSideCondition(format!("`{cite}` names no goal")))?;
        if g.status != Status::Pass {
            return Err(GtError::UnjustifiedSideCondition(format!("cited `{cite}` does not check")));
        }
        let env = build_env(s)?;
        let (lhs, rhs) = match s.lines.iter().find_map(|(_, l)| match l {
            Line::Goal { name, lhs, rhs } if goal_name(name, s, l) == g.name => Some((lhs.clone(), rhs.clone())),
            _ => None,
        }) {
            Some(x) => x,
            None => return Err(GtError::UnjustifiedSideCondition(format!("`{cite}` not found"))),
        };
        Ok((Equation { lhs: env.parse(&lhs)?, rhs: env.parse(&rhs)? }, env))
    }
}

fn goal_name(name: &Option<String>, s: &ProofScript, line: &Line) -> String {
    match name {
        Some(n) => n.clone(),
        None => {
            let k = s.lines.iter().filter(|(_, l)| matches!(l, Line::Goal { .. })).position(|(_, l)| l == line).unwrap_or(0);
            format!("goal{}", k + 1)
        }
    }
}

/// The environment after all `context`, `bracketing` and `let` lines.
fn build_env(s: &ProofScript) -> Result<Env, GtError> {
    let mut env = Env::new(s.context().parse()?)?;
    for (_, l) in &s.lines {
        declare(&mut env, l)?;
    }
    Ok(env)
}

fn declare(env: &mut Env, l: &Line) -> Result<(), GtError> {
    match l {
        Line::Bracketing { name, text } => {
            let b: Bracketing = text.parse().map_err(|e: crate::bracketing::BracketingError| GtError::Parse(e.to_string()))?;
            if let Context::Braid { n } = env.context {
                if b.n != n {
                    return Err(GtError::Parse(format!("bracketing `{name}` has {} points, context has {n}", b.n)));
                }
            }
            env.bracketings.insert(name.clone(), b);
        }
        Line::Let { name, value } => {
            let v = env.parse(value)?;
            match v.canonical().as_plain() {
                Some(p) => {
                    env.lets.insert(name.clone(), p);
                }
                None => {
                    env.macros.insert(name.clone(), v);
                }
            }
        }
        _ => {}
    }
    Ok(())
}

/// Check one script; citations of other scripts need a corpus.
pub fn check_script(s: &ProofScript, corpus: Option<&Corpus>) -> ScriptReport {
    match corpus {
        Some(c) => c.check_inner(s, &mut Vec::new()),
        None => run(s, None, &mut Vec::new()),
    }
}

/// Map an equation from another script's context into `to`.
fn translate(eq: &Equation, from: &Env, to: &Env) -> Result<Equation, GtError> {
    // names both scripts define alike survive a same-context citation
    let shared = |sym: &str| match (from.lets.get(sym), to.lets.get(sym)) {
        (Some(a), Some(b)) => from.resolve(a) == to.resolve(b),
        _ => false,
    };
    let map_word = |w: &Word| -> Result<Word, GtError> {
        if from.context == to.context {
            let mut out = Word::empty();
            for (sym, e) in w.letters() {
                let k: i64 = e.try_into().expect("small exponent");
                let x = Word::letter(sym, 1);
                out = out.mul(&if shared(sym) { x } else { from.resolve(&x) }.pow(k));
            }
            return Ok(out);
        }
        let w = from.resolve(w);
        match (from.context, to.context) {
            (Context::Braid { n }, Context::Mcg { g, .. }) if n <= 2 * g + 1 => {
                let mut out = Word::empty();
                for (sym, e) in w.letters() {
                    let k: i64 = e.try_into().expect("small exponent");
                    let img = match braid::parse_named(sym) {
                        Some(NamedBraid::Sigma(i)) => Word::letter(&format!("a{i}"), 1),
                        Some(NamedBraid::Eta(k)) => Word::letter(&format!("y({k})"), 1),
                        Some(NamedBraid::Omega(k)) | Some(NamedBraid::FullTwist(1, k)) => Word::letter(&format!("w({k})"), 1),
                        Some(NamedBraid::Tau(k)) => Word::letter(&format!("t({k})"), 1),
                        _ => {
                            let letters = from.generator_letters(&Word::letter(sym, 1))?;
                            Word::from_letters(letters.letters().iter().map(|(s, e)| (word::gen(&format!("a{}", &s[1..])), e.clone())))
                        }
                    };
                    out = out.mul(&img.pow(k));
                }
                Ok(out)
            }
            (a, b) => Err(GtError::Context(format!("cannot carry an equation from `{a}` to `{b}`"))),
        }
    };
    let map_kind = |k: &ActKind| -> Result<ActKind, GtError> {
        match (k, from.context, to.context) {
            (ActKind::Standard, ..) => Ok(ActKind::Standard),
            (ActKind::Bracketed(None), Context::Mcg { .. }, Context::Mcg { .. }) if from.context == to.context => Ok(ActKind::Bracketed(None)),
            (ActKind::Bracketed(name), a, b) if a == b => {
                let src = from.bracketing(name.as_deref())?;
                let hit = to.bracketings.iter().find(|(_, v)| *v == src).map(|(k, _)| k.clone());
                match hit {
                    Some(h) => Ok(ActKind::Bracketed(Some(h))),
                    None if matches!(a, Context::Mcg { .. }) => Ok(ActKind::Bracketed(None)),
                    None => Err(GtError::Context(format!("bracketing {src} is not declared here"))),
                }
            }
            (ActKind::Bracketed(name), Context::Braid { n }, Context::Mcg { g, .. }) => {
                // only the bracketing whose conjugator maps onto the Γ_{g,1} one
                let src = from.bracketing(name.as_deref())?;
                if n != 2 * g || *src != pairs_bracketing(n)? {
                    return Err(GtError::Context(format!("bracketing {src} has no Γ_{g},1 counterpart")));
                }
                Ok(ActKind::Bracketed(None))
            }
            _ => Err(GtError::Context("unsupported bracketed translation".into())),
        }
    };
    let map = |w: &GTWord| -> Result<GTWord, GtError> {
        let mut atoms = Vec::new();
        for a in &w.atoms {
            atoms.push(match a {
                Atom::Gen { base, exp } => Atom::Gen { base: map_word(base)?, exp: *exp },
                Atom::F { u, v } => Atom::f(map_word(u)?, map_word(v)?),
                Atom::Act { kind, target } => Atom::Act { kind: map_kind(kind)?, target: map_word(target)? },
            });
        }
        Ok(GTWord::new(atoms))
    };
    Ok(Equation { lhs: map(&eq.lhs)?, rhs: map(&eq.rhs)? })
}

/// `(...((1,2),(3,4)),...),(n-1,n)`.
pub fn pairs_bracketing(n: usize) -> Result<Bracketing, GtError> {
    let mut pairs: Vec<Interval> = (1..=n / 2).map(|i| Interval::new(2 * i - 1, 2 * i)).collect();
    pairs.extend((2..n / 2).map(|k| Interval::new(1, 2 * k)));
    Bracketing::new(n, pairs).map_err(|e| GtError::Context(e.to_string()))
}

fn run(s: &ProofScript, corpus: Option<&Corpus>, stack: &mut Vec<String>) -> ScriptReport {
    let mut rep = ScriptReport {
        script: s.id.clone(),
        context: s.context().to_string(),
        steps: Vec::new(),
        goals: Vec::new(),
        hypotheses: Vec::new(),
        status: Status::Fail,
        errors: Vec::new(),
    };
    let mut env = match s.context().parse().and_then(Env::new) {
        Ok(e) => e,
        Err(e) => {
            rep.errors.push(e.to_string());
            return rep;
        }
    };
    let mut lemmas: BTreeMap<String, Equation> = BTreeMap::new();
    // current goal: name, statement, lhs, rhs, still ok
    let mut cur: Option<(String, String, GTWord, GTWord, bool, bool)> = None;
    let mut goal_count = 0;
    for (n, l) in &s.lines {
        let res: Result<(), GtError> = (|| {
            match l {
                Line::Context(_) => {}
                Line::Bracketing { .. } | Line::Let { .. } => declare(&mut env, l)?,
                Line::Hyp { name, lhs, rhs } => {
                    let eq = Equation { lhs: env.parse(lhs)?, rhs: env.parse(rhs)? };
                    if !env.specializations_agree(&eq.lhs, &eq.rhs)? {
                        return Err(GtError::OracleRefuted(format!("hypothesis `{name}` fails at λ = ±1")));
                    }
                    rep.hypotheses.push(format!("{name}: {eq}"));
                    lemmas.insert(format!("hyp:{name}"), eq);
                }
                Line::Goal { name, lhs, rhs } => {
                    if cur.is_some() {
                        return Err(GtError::Parse("previous goal lacks `qed`".into()));
                    }
                    goal_count += 1;
                    let name = name.clone().unwrap_or(format!("goal{goal_count}"));
                    let (a, b) = (env.parse(lhs)?, env.parse(rhs)?);
                    let spec = env.specializations_agree(&a, &b).unwrap_or(false);
                    cur = Some((name, format!("{a} = {b}"), a, b, true, spec));
                }
                Line::Step { app, rhs_side } => {
                    let (gname, _, lhs, rhs, ok, _) = cur.as_mut().ok_or_else(|| GtError::Parse("step outside a goal".into()))?;
                    let mut sr = StepReport {
                        line: *n,
                        goal: gname.clone(),
                        rule: app.rule.clone(),
                        by: app.by.to_string(),
                        status: Status::Fail,
                        detail: String::new(),
                        result: None,
                    };
                    if !*ok {
                        sr.detail = "not reached".into();
                        rep.steps.push(sr);
                        return Ok(());
                    }
                    if let Justification::Lemma(id) = &app.by {
                        let key = app.by.to_string();
                        if !lemmas.contains_key(&key) {
                            let got = match corpus {
                                Some(c) => c.proved(id, stack).and_then(|(eq, from)| translate(&eq, &from, &env)),
                                None => Err(GtError::UnjustifiedSideCondition(format!("`{id}` needs the corpus"))),
                            };
                            match got {
                                Ok(eq) => {
                                    lemmas.insert(key, eq);
                                }
                                Err(e) => {
                                    sr.detail = e.to_string();
                                    *ok = false;
                                    rep.steps.push(sr);
                                    return Ok(());
                                }
                            }
                        }
                    }
                    let side = if *rhs_side { rhs } else { lhs };
                    match rewrite_step(&env, side, app, &lemmas) {
                        Ok((next, detail)) => match env.specializations_agree(side, &next) {
                            Ok(true) => {
                                sr.status = Status::Pass;
                                sr.detail = detail;
                                sr.result = Some(next.indexed());
                                *side = next;
                            }
                            Ok(false) => {
                                sr.detail = format!("{detail}; specializations disagree");
                                *ok = false;
                            }
                            Err(e) => {
                                sr.detail = e.to_string();
                                *ok = false;
                            }
                        },
                        Err(e) => {
                            sr.detail = e.to_string();
                            *ok = false;
                        }
                    }
                    rep.steps.push(sr);
                }
                Line::Qed => {
                    let (name, statement, lhs, rhs, ok, spec) = cur.take().ok_or_else(|| GtError::Parse("`qed` without a goal".into()))?;
                    let (a, b) = (lhs.canonical(), rhs.canonical());
                    let pass = ok && a == b && spec;
                    rep.goals.push(GoalReport {
                        name: name.clone(),
                        statement: statement.clone(),
                        status: if pass { Status::Pass } else { Status::Fail },
                        specializes: spec,
                        residual: (a != b).then(|| format!("{a}  vs  {b}")),
                    });
                    if pass {
                        let (l, r) = split_eq(&statement)?;
                        lemmas.insert(format!("lemma:{name}"), Equation { lhs: env.parse(&l)?, rhs: env.parse(&r)? });
                    }
                }
            }
            Ok(())
        })();
        if let Err(e) = res {
            rep.errors.push(format!("line {n}: {e}"));
        }
    }
    if let Some((name, statement, ..)) = cur {
        rep.errors.push(format!("goal `{name}` has no `qed`"));
        rep.goals.push(GoalReport { name, statement, status: Status::Fail, specializes: false, residual: None });
    }
    let pass = rep.errors.is_empty() && !rep.goals.is_empty() && rep.goals.iter().all(|g| g.status == Status::Pass) && rep.unjustified() == 0;
    rep.status = if pass { Status::Pass } else { Status::Fail };
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    const TOY: &str = "
context mcg g=2 surface=g1
let d = d2
goal F(a1) F(d) = a1^L d^L
step act at 0..1
step act at 1..2
qed
";

    #[test]
    fn toy_script_passes() {
        let s = ProofScript::parse("toy", TOY).unwrap();
        let r = check_script(&s, None);
        assert_eq!(r.status, Status::Pass, "{}", r.to_text());
    }

    #[test]
    fn wrong_goal_fails() {
        let s = ProofScript::parse("bad", &TOY.replace("a1^L d^L", "d^L a1^L")).unwrap();
        assert_eq!(check_script(&s, None).status, Status::Fail);
    }

    #[test]
    fn pairs_bracketing_shape() {
        assert_eq!(pairs_bracketing(8).unwrap().to_string(), "(((1,2),(3,4)),(5,6)),(7,8)");
    }

    #[test]
    fn braced_parameters() {
        let (app, rhs) = parse_step("oracle to={a1 a2} at 0..2 on=rhs by oracle").unwrap();
        assert_eq!(app.params["to"], "a1 a2");
        assert!(rhs);
    }
}
