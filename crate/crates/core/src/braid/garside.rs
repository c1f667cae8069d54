//! Left normal form in the classical Garside structure of B_n.
//!
//! A simple element is stored as the permutation `p` with `p[j]` the end
//! position of the strand starting at position `j` (0-based).

use serde::{Deserialize, Serialize};

/// A permutation of `0..n`, read as "start position to end position".
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    pub fn delta(n: usize) -> Perm {
        Perm((0..n as u8).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.n();
        self.0.iter().enumerate().all(|(i, &p)| p as usize == n - 1 - i)
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0u8; self.n()];
        for (i, &p) in self.0.iter().enumerate() {
            out[p as usize] = i as u8;
        }
        Perm(out)
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&p| other.0[p as usize]).collect())
    }

    /// Swap the end positions `i-1` and `i` (right multiplication by σ_i).
    fn swap_ends(&mut self, i: usize) {
        for p in self.0.iter_mut() {
            if *p as usize == i - 1 {
                *p = i as u8;
            } else if *p as usize == i {
                *p = (i - 1) as u8;
            }
        }
    }

    /// Swap the start positions (left division by σ_i).
    fn swap_starts(&mut self, i: usize) {
        self.0.swap(i - 1, i);
    }

    /// σ_i is a left divisor.
    pub fn starts_with(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// σ_i is a right divisor.
    pub fn ends_with(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i - 1] > inv.0[i]
    }

    /// Conjugation by Δ.
    pub fn tau(&self) -> Perm {
        let n = self.n();
        Perm((0..n).map(|j| (n - 1 - self.0[n - 1 - j] as usize) as u8).collect())
    }

    /// A positive word for the permutation braid (bubble sort on end positions).
    pub fn word(&self) -> Vec<usize> {
        let mut p = self.clone();
        let mut out = Vec::new();
        // peel left divisors until identity
        'outer: loop {
            for i in 1..p.n() {
                if p.starts_with(i) {
                    out.push(i);
                    p.swap_starts(i);
                    continue 'outer;
                }
            }
            break;
        }
        out
    }

    /// Cycle notation with 1-based points, `()` for the identity.
    pub fn cycles(&self) -> String {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for s in 0..n {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            let mut cyc = vec![];
            let mut j = s;
            while !seen[j] {
                seen[j] = true;
                cyc.push((j + 1).to_string());
                j = self.0[j] as usize;
            }
            out.push_str(&format!("({})", cyc.join(" ")));
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Δ^p · A_1 ⋯ A_k with every (A_j, A_{j+1}) left-weighted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GarsideNormalForm {
    pub n: usize,
    pub delta_power: i64,
    pub factors: Vec<Perm>,
}

impl GarsideNormalForm {
    /// Expand back to a signed generator word.
    pub fn to_letters(&self) -> Vec<i32> {
        let mut out = Vec::new();
        let d = Perm::delta(self.n).word();
        for _ in 0..self.delta_power.max(0) {
            out.extend(d.iter().map(|&i| i as i32));
        }
        for _ in 0..(-self.delta_power).max(0) {
            out.extend(d.iter().rev().map(|&i| -(i as i32)));
        }
        for f in &self.factors {
            out.extend(f.word().into_iter().map(|i| i as i32));
        }
        out
    }
}

/// `D^p | s1 s2 | s1`, each simple factor as its positive word.
impl std::fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "D^{}", self.delta_power)?;
        for a in &self.factors {
            let w: Vec<String> = a.word().iter().map(|i| format!("s{i}")).collect();
            write!(f, " | {}", w.join(" "))?;
        }
        Ok(())
    }
}

/// Make (a, b) left-weighted. Returns true if anything moved.
fn weight(a: &mut Perm, b: &mut Perm) -> bool {
    let n = a.n();
    let mut moved = false;
    loop {
        let ainv = a.inverse();
        let i = (1..n).find(|&i| b.0[i - 1] > b.0[i] && ainv.0[i - 1] < ainv.0[i]);
        match i {
            Some(i) => {
                a.swap_ends(i);
                b.swap_starts(i);
                moved = true;
            }
            None => return moved,
        }
    }
}

/// Normal form of a signed letter sequence (`+i` is σ_i, `-i` its inverse).
pub fn normal_form_letters(n: usize, letters: &[i32]) -> GarsideNormalForm {
    let negs = letters.iter().filter(|&&l| l < 0).count();
    let mut after = negs;
    let mut pieces: Vec<Perm> = Vec::with_capacity(letters.len());
    let delta = Perm::delta(n);
    for &l in letters {
        let i = l.unsigned_abs() as usize;
        let mut p = if l > 0 {
            let mut p = Perm::identity(n);
            p.swap_ends(i);
            p
        } else {
            after -= 1;
            let mut p = delta.clone();
            p.swap_ends(i);
            p
        };
        // τ^c with c = negative letters strictly after this one (at the time of
        // the left move); a negative letter's own Δ^{-1} sits left of its piece.
        let c = after;
        if c % 2 == 1 {
            p = p.tau();
        }
        pieces.push(p);
    }
    let mut nf = GarsideNormalForm { n, delta_power: -(negs as i64), factors: Vec::new() };
    for p in pieces {
        push_simple(&mut nf, p);
    }
    nf
}

fn push_simple(nf: &mut GarsideNormalForm, p: Perm) {
    if p.is_identity() {
        return;
    }
    nf.factors.push(p);
    let mut j = nf.factors.len() - 1;
    while j > 0 {
        let (l, r) = nf.factors.split_at_mut(j);
        if !weight(&mut l[j - 1], &mut r[0]) {
            break;
        }
        j -= 1;
    }
    // absorb leading Δ's, drop trailing identities
    let lead = nf.factors.iter().take_while(|f| f.is_delta()).count();
    if lead > 0 {
        nf.factors.drain(..lead);
        // Δ^k A = τ^k(A) Δ^k, but here the Δ's are already leftmost
        nf.delta_power += lead as i64;
    }
    while nf.factors.last().is_some_and(|f| f.is_identity()) {
        nf.factors.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_squared_b3() {
        let w = [1, 2, 1, 2, 1, 2];
        let nf = normal_form_letters(3, &w);
        assert_eq!(nf.delta_power, 2);
        assert!(nf.factors.is_empty());
    }

    #[test]
    fn inverse_cancels() {
        let nf = normal_form_letters(4, &[1, 3, -2, 2, -3, -1]);
        assert_eq!(nf.delta_power, 0);
        assert!(nf.factors.is_empty());
    }

    #[test]
    fn roundtrip_word() {
        let w = [1, -2, 3, 3, -1, 2];
        let nf = normal_form_letters(4, &w);
        assert_eq!(normal_form_letters(4, &nf.to_letters()), nf);
    }
}
