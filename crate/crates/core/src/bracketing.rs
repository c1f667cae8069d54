//! Bracketings of `n` points as laminar interval families, A-moves between
//! them, and shortest A-move paths.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gt::{Atom, GTWord};
use crate::word::Word;

pub const MAX_POINTS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BracketingError {
    #[error("n = {0} is out of range (2..=10)")]
    Size(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a bracketing: {0}")]
    Invalid(String),
    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),
    #[error("bracketings have different n ({0} vs {1})")]
    SizeMismatch(usize, usize),
}

/// Closed interval `[start..end]` of points, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
}

impl Interval {
    pub fn new(start: usize, end: usize) -> Interval {
        Interval { start, end }
    }

    pub fn contains(&self, o: &Interval) -> bool {
        self.start <= o.start && o.end <= self.end
    }

    fn disjoint(&self, o: &Interval) -> bool {
        self.end < o.start || o.end < self.start
    }

    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The full twist `T[i..j]` on these strands, as a word token.
    pub fn twist(&self) -> String {
        format!("T[{}..{}]", self.start, self.end)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.start, self.end)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bracketing {
    pub n: usize,
    pub pairs: BTreeSet<Interval>,
}

/// Replace the pair `lost` by `gained`: `(X1,X2),X3 ↔ X1,(X2,X3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct AMove {
    pub lost: Interval,
    pub gained: Interval,
}

impl AMove {
    pub fn reverse(&self) -> AMove {
        AMove { lost: self.gained, gained: self.lost }
    }
}

impl fmt::Display for AMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.lost, self.gained)
    }
}

fn check_n(n: usize) -> Result<(), BracketingError> {
    if (2..=MAX_POINTS).contains(&n) {
        Ok(())
    } else {
        Err(BracketingError::Size(n))
    }
}

impl Bracketing {
    pub fn new(n: usize, pairs: impl IntoIterator<Item = Interval>) -> Result<Bracketing, BracketingError> {
        check_n(n)?;
        let pairs: BTreeSet<Interval> = pairs.into_iter().collect();
        for p in &pairs {
            if p.start < 1 || p.end > n || p.len() < 2 {
                return Err(BracketingError::Invalid(format!("pair {p} in n = {n}")));
            }
            if p.len() == n {
                return Err(BracketingError::Invalid(format!("pair {p} contains every point")));
            }
        }
        for a in &pairs {
            for b in &pairs {
                if !(a.contains(b) || b.contains(a) || a.disjoint(b)) {
                    return Err(BracketingError::Invalid(format!("pairs {a} and {b} overlap")));
                }
            }
        }
        Ok(Bracketing { n, pairs })
    }

    /// `((((x1,x2),x3),...),x_{n-1}),x_n`.
    pub fn standard(n: usize) -> Result<Bracketing, BracketingError> {
        Bracketing::new(n, (2..n).map(|j| Interval::new(1, j)))
    }

    pub fn is_maximal(&self) -> bool {
        self.pairs.len() + 2 == self.n
    }

    pub fn whole(&self) -> Interval {
        Interval::new(1, self.n)
    }

    /// Maximal proper sub-blocks of `iv`: pairs and single points.
    pub fn children(&self, iv: Interval) -> Vec<Interval> {
        let mut out = Vec::new();
        let mut i = iv.start;
        while i <= iv.end {
            let block = self
                .pairs
                .iter()
                .filter(|p| p.start == i && iv.contains(p) && **p != iv)
                .max_by_key(|p| p.end)
                .copied()
                .unwrap_or(Interval::new(i, i));
            out.push(block);
            i = block.end + 1;
        }
        out
    }

    /// Smallest pair strictly containing `iv`, or the whole set.
    fn parent(&self, iv: Interval) -> Interval {
        self.pairs
            .iter()
            .filter(|p| p.contains(&iv) && **p != iv)
            .min_by_key(|p| p.len())
            .copied()
            .unwrap_or(self.whole())
    }

    /// All applicable A-moves, sorted.
    pub fn moves(&self) -> Vec<AMove> {
        let mut out = Vec::new();
        for &p in &self.pairs {
            let ch = self.children(p);
            if ch.len() != 2 {
                continue;
            }
            let sibs = self.children(self.parent(p));
            let k = sibs.iter().position(|s| *s == p).expect("p is a child of its parent");
            // (X1,X2),X3 -> X1,(X2,X3)
            if let Some(x3) = sibs.get(k + 1) {
                let gained = Interval::new(ch[1].start, x3.end);
                if gained.len() < self.n {
                    out.push(AMove { lost: p, gained });
                }
            }
            // X1,(X2,X3) -> (X1,X2),X3
            if k > 0 {
                let gained = Interval::new(sibs[k - 1].start, ch[0].end);
                if gained.len() < self.n {
                    out.push(AMove { lost: p, gained });
                }
            }
        }
        out.sort();
        out
    }

    pub fn apply(&self, m: &AMove) -> Result<Bracketing, BracketingError> {
        if !self.moves().contains(m) {
            return Err(BracketingError::MoveNotApplicable(format!("{m} on {self}")));
        }
        let mut pairs = self.pairs.clone();
        pairs.remove(&m.lost);
        pairs.insert(m.gained);
        Bracketing::new(self.n, pairs)
    }

    fn render(&self, iv: Interval, out: &mut String) {
        let ch = self.children(iv);
        for (i, c) in ch.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            if c.len() == 1 {
                out.push_str(&c.start.to_string());
            } else {
                out.push('(');
                self.render(*c, out);
                out.push(')');
            }
        }
    }
}

impl fmt::Display for Bracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(self.whole(), &mut s);
        f.write_str(&s)
    }
}

impl FromStr for Bracketing {
    type Err = BracketingError;

    /// The parenthesis notation, with points written `3` or `x3`.
    fn from_str(text: &str) -> Result<Bracketing, BracketingError> {
        let bad = |m: &str| BracketingError::Parse(format!("{m} in `{text}`"));
        let mut stack: Vec<Option<(usize, usize)>> = vec![None];
        let mut pairs = Vec::new();
        let mut next = 1;
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        let extend = |slot: &mut Option<(usize, usize)>, a: usize, b: usize| {
            *slot = Some(match *slot {
                None => (a, b),
                Some((s, _)) => (s, b),
            });
        };
        while i < chars.len() {
            let c = chars[i];
            match c {
                '(' => stack.push(None),
                ')' => {
                    let (a, b) = stack.pop().flatten().ok_or_else(|| bad("empty bracket"))?;
                    let top = stack.last_mut().ok_or_else(|| bad("unbalanced `)`"))?;
                    if b > a {
                        pairs.push(Interval::new(a, b));
                    }
                    extend(top, a, b);
                }
                ',' | ' ' => {}
                'x' | '0'..='9' => {
                    let start = if c == 'x' { i + 1 } else { i };
                    let mut j = start;
                    while j < chars.len() && chars[j].is_ascii_digit() {
                        j += 1;
                    }
                    let k: usize = chars[start..j].iter().collect::<String>().parse().map_err(|_| bad("bad point"))?;
                    if k != next {
                        return Err(bad(&format!("expected point {next}, found {k}")));
                    }
                    next += 1;
                    extend(stack.last_mut().expect("nonempty"), k, k);
                    i = j;
                    continue;
                }
                _ => return Err(bad(&format!("unexpected `{c}`"))),
            }
            i += 1;
        }
        if stack.len() != 1 {
            return Err(bad("unbalanced `(`"));
        }
        let n = next - 1;
        check_n(n)?;
        // a bracket around everything is implicit
        pairs.retain(|p| p.len() < n);
        Bracketing::new(n, pairs)
    }
}

/// Every maximal bracketing of `n` points, sorted.
pub fn enumerate_maximal(n: usize) -> Result<Vec<Bracketing>, BracketingError> {
    check_n(n)?;
    fn trees(a: usize, b: usize, memo: &mut HashMap<(usize, usize), Vec<Vec<Interval>>>) -> Vec<Vec<Interval>> {
        if let Some(v) = memo.get(&(a, b)) {
            return v.clone();
        }
        let mut out = Vec::new();
        if a == b {
            out.push(vec![]);
        } else {
            for s in a..b {
                for l in trees(a, s, memo) {
                    for r in trees(s + 1, b, memo) {
                        let mut v = l.clone();
                        v.extend(r);
                        if s > a {
                            v.push(Interval::new(a, s));
                        }
                        if b > s + 1 {
                            v.push(Interval::new(s + 1, b));
                        }
                        out.push(v);
                    }
                }
            }
        }
        memo.insert((a, b), out.clone());
        out
    }
    let mut all: Vec<Bracketing> = trees(1, n, &mut HashMap::new())
        .into_iter()
        .map(|v| Bracketing::new(n, v))
        .collect::<Result<_, _>>()?;
    all.sort();
    Ok(all)
}

/// Breadth-first shortest path; among shortest paths the lexicographically
/// least sequence of moves.
pub fn amove_path(b1: &Bracketing, b2: &Bracketing) -> Result<Vec<AMove>, BracketingError> {
    if b1.n != b2.n {
        return Err(BracketingError::SizeMismatch(b1.n, b2.n));
    }
    if !b1.is_maximal() || !b2.is_maximal() {
        return Err(BracketingError::Invalid("amove_path needs maximal bracketings".into()));
    }
    // distances to the target, then a greedy walk from the source
    let mut dist: HashMap<Bracketing, usize> = HashMap::new();
    dist.insert(b2.clone(), 0);
    let mut queue = VecDeque::from([b2.clone()]);
    while let Some(b) = queue.pop_front() {
        if b == *b1 {
            break;
        }
        let d = dist[&b];
        for m in b.moves() {
            let c = b.apply(&m)?;
            if !dist.contains_key(&c) {
                dist.insert(c.clone(), d + 1);
                queue.push_back(c);
            }
        }
    }
    let mut cur = b1.clone();
    let mut path = Vec::new();
    while cur != *b2 {
        let d = *dist.get(&cur).ok_or_else(|| BracketingError::Invalid("disconnected".into()))?;
        let (m, next) = cur
            .moves()
            .into_iter()
            .map(|m| {
                let c = cur.apply(&m).expect("listed move applies");
                (m, c)
            })
            .find(|(_, c)| dist.get(c).is_some_and(|&e| e + 1 == d))
            .expect("a distance-decreasing move exists");
        path.push(m);
        cur = next;
    }
    Ok(path)
}

/// The pairs `(T_lost, T_gained)` of the moves, in path order.
pub fn path_twists(path: &[AMove]) -> Vec<(String, String)> {
    path.iter().map(|m| (m.lost.twist(), m.gained.twist())).collect()
}

/// `P` with `F_{B_k} = inn(P) ∘ F_{B_0}` along the path `B_0 → ... → B_k`.
/// Each move contributes `h = f(T_lost;T_gained)` and
/// `F_{B'} = inn(h) ∘ F_B`, so the last move ends up leftmost:
/// `P = h_k ⋯ h_1`.
pub fn path_conjugator(path: &[AMove]) -> GTWord {
    GTWord::new(
        path.iter()
            .rev()
            .map(|m| Atom::f(Word::letter(&m.lost.twist(), 1), Word::letter(&m.gained.twist(), 1)))
            .collect(),
    )
}

/// Flat crossing `σ_{X1,X2}` of adjacent blocks as `s`-letters: the strands of
/// `x1` pass over those of `x2`.
pub fn flat_crossing_letters(x1: Interval, x2: Interval) -> Vec<i32> {
    let mut w = Vec::new();
    for r in 0..x1.len() {
        let p = x1.end - r;
        w.extend((p..p + x2.len()).map(|i| i as i32));
    }
    w
}

impl Bracketing {
    /// Every pair together with the whole set.
    pub fn nodes(&self) -> Vec<Interval> {
        let mut v: Vec<Interval> = self.pairs.iter().copied().collect();
        v.push(self.whole());
        v
    }

    /// Adjacent sibling blocks `(X1, X2)`, whose flat crossings `F_B` fixes up to λ.
    pub fn configurations(&self) -> Vec<(Interval, Interval)> {
        let mut out = Vec::new();
        for node in self.nodes() {
            let ch = self.children(node);
            for w in ch.windows(2) {
                out.push((w[0], w[1]));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let b: Bracketing = "((1,2),(3,4)),(5,6)".parse().unwrap();
        assert_eq!(b.to_string(), "((1,2),(3,4)),(5,6)");
        assert!(b.is_maximal());
        let c: Bracketing = "(((x1,x2),x3),x4)".parse().unwrap();
        assert_eq!(c, Bracketing::standard(4).unwrap());
        assert!("(1,2),(4,3)".parse::<Bracketing>().is_err());
    }

    #[test]
    fn smallest_move() {
        let b: Bracketing = "(1,2),3".parse().unwrap();
        let m = AMove { lost: Interval::new(1, 2), gained: Interval::new(2, 3) };
        assert_eq!(b.apply(&m).unwrap().to_string(), "1,(2,3)");
    }

    #[test]
    fn overlapping_pairs_rejected() {
        assert!(Bracketing::new(4, [Interval::new(1, 2), Interval::new(2, 3)]).is_err());
    }
}
