//! Model groups for the three absorption identities.
//!
//! `f` is a word in two letters `X = 1`, `Y = 2`; evaluating it at a pair of
//! model elements substitutes them for `X` and `Y`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::surface::group::{free_reduce, inverse};
use crate::word::Word;

pub type Letters = Vec<i32>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelReport {
    pub rule: String,
    pub trials: usize,
    pub counterexamples: Vec<String>,
}

impl ModelReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.trials > 0
    }
}

fn random_word<R: Rng>(rng: &mut R, letters: &[i32], max_len: usize) -> Letters {
    let n = rng.gen_range(1..=max_len);
    free_reduce(&(0..n).map(|_| letters[rng.gen_range(0..letters.len())] * if rng.gen() { 1 } else { -1 }).collect::<Vec<_>>())
}

/// A nontrivial element of [F2, F2] of length at most `max_len`.
pub fn random_derived<R: Rng>(rng: &mut R, max_len: usize) -> Letters {
    loop {
        let u = random_word(rng, &[1, 2], 3);
        let v = random_word(rng, &[1, 2], 3);
        let mut w = free_reduce(&[u.clone(), v.clone(), inverse(&u), inverse(&v)].concat());
        if rng.gen_bool(0.3) {
            let c = random_word(rng, &[1, 2], 2);
            w = free_reduce(&[c.clone(), w, inverse(&c)].concat());
        }
        if !w.is_empty() && w.len() <= max_len {
            return w;
        }
    }
}

/// A word of length at most `max_len` whose `Y` exponent sum has the given parity.
pub fn random_with_parity<R: Rng>(rng: &mut R, max_len: usize, odd: bool) -> Letters {
    loop {
        let w = random_word(rng, &[1, 2], max_len);
        if (exponent_sum(&w, 2).rem_euclid(2) == 1) == odd {
            return w;
        }
    }
}

pub fn exponent_sum(w: &[i32], letter: i32) -> i64 {
    w.iter().filter(|x| x.abs() == letter).map(|x| x.signum() as i64).sum()
}

/// Group structure needed to evaluate `f`.
pub trait Model {
    type Elt: Clone + PartialEq + std::fmt::Debug;
    fn one(&self) -> Self::Elt;
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt;
    fn inv(&self, a: &Self::Elt) -> Self::Elt;

    fn eval(&self, f: &[i32], x: &Self::Elt, y: &Self::Elt) -> Self::Elt {
        let (xi, yi) = (self.inv(x), self.inv(y));
        f.iter().fold(self.one(), |acc, &l| {
            let e = match l {
                1 => x,
                -1 => &xi,
                2 => y,
                -2 => &yi,
                _ => unreachable!("f has two letters"),
            };
            self.mul(&acc, e)
        })
    }
}

/// `F2 × F2`.
pub struct FreeSquared;

impl Model for FreeSquared {
    type Elt = (Letters, Letters);
    fn one(&self) -> Self::Elt {
        (vec![], vec![])
    }
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        (free_reduce(&[a.0.clone(), b.0.clone()].concat()), free_reduce(&[a.1.clone(), b.1.clone()].concat()))
    }
    fn inv(&self, a: &Self::Elt) -> Self::Elt {
        (inverse(&a.0), inverse(&a.1))
    }
}

/// `F2 × Z`, the second factor central.
pub struct FreeTimesZ;

impl Model for FreeTimesZ {
    type Elt = (Letters, i64);
    fn one(&self) -> Self::Elt {
        (vec![], 0)
    }
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        (free_reduce(&[a.0.clone(), b.0.clone()].concat()), a.1 + b.1)
    }
    fn inv(&self, a: &Self::Elt) -> Self::Elt {
        (inverse(&a.0), -a.1)
    }
}

/// `⟨a, b, g | ga = ag, gb = bg⁻¹⟩` in the normal form `w g^k`: moving `g^k`
/// right across `w` flips its sign once per `b`.
pub struct FlipModel;

impl Model for FlipModel {
    type Elt = (Letters, i64);
    fn one(&self) -> Self::Elt {
        (vec![], 0)
    }
    fn mul(&self, a: &Self::Elt, b: &Self::Elt) -> Self::Elt {
        let flips = exponent_sum(&b.0, 2).rem_euclid(2) == 1;
        let k = if flips { -a.1 } else { a.1 };
        (free_reduce(&[a.0.clone(), b.0.clone()].concat()), k + b.1)
    }
    fn inv(&self, a: &Self::Elt) -> Self::Elt {
        let w = inverse(&a.0);
        let flips = exponent_sum(&w, 2).rem_euclid(2) == 1;
        (w, if flips { a.1 } else { -a.1 })
    }
}

fn show(w: &[i32]) -> String {
    let names = ["X", "Y"];
    let ws = Word::from_pairs(&w.iter().map(|&l| (names[(l.unsigned_abs() - 1) as usize], l.signum() as i64)).collect::<Vec<_>>());
    ws.to_string()
}

/// `f(a,b) f(A,B) = f(aA, bB)` with `{a,b}` commuting with `{A,B}`.
pub fn haiku_i<R: Rng>(rng: &mut R, trials: usize) -> ModelReport {
    let m = FreeSquared;
    let mut bad = Vec::new();
    for _ in 0..trials {
        let f = random_derived(rng, 12);
        let a = (random_word(rng, &[1, 2], 4), vec![]);
        let b = (random_word(rng, &[1, 2], 4), vec![]);
        let aa = (vec![], random_word(rng, &[1, 2], 4));
        let bb = (vec![], random_word(rng, &[1, 2], 4));
        let lhs = m.mul(&m.eval(&f, &a, &b), &m.eval(&f, &aa, &bb));
        let rhs = m.eval(&f, &m.mul(&a, &aa), &m.mul(&b, &bb));
        if lhs != rhs {
            bad.push(format!("f = {}", show(&f)));
        }
    }
    ModelReport { rule: "haiku-i".into(), trials, counterexamples: bad }
}

/// `f(a, gb) = f(a,b) g^s` with `g` central and `s` the `Y` exponent sum;
/// `derived` draws `f` from the commutator subgroup, where `s = 0`.
pub fn haiku_ii<R: Rng>(rng: &mut R, trials: usize, derived: bool) -> ModelReport {
    let m = FreeTimesZ;
    let mut bad = Vec::new();
    for k in 0..trials {
        let f = if derived { random_derived(rng, 12) } else { random_with_parity(rng, 12, k % 2 == 1) };
        let s = exponent_sum(&f, 2);
        let a = (random_word(rng, &[1, 2], 4), 0);
        let b = (random_word(rng, &[1, 2], 4), 0);
        let g = (vec![], rng.gen_range(1..4));
        let lhs = m.eval(&f, &a, &m.mul(&g, &b));
        let gs = (vec![], g.1 * s);
        let rhs = m.mul(&m.eval(&f, &a, &b), &gs);
        if lhs != rhs {
            bad.push(format!("f = {}", show(&f)));
        }
    }
    ModelReport { rule: "haiku-ii".into(), trials, counterexamples: bad }
}

/// `f(a, gb) = f(a,b) g^e` with `ga = ag`, `gb = bg⁻¹`; `e = 0` for even `s`
/// and `e = -1` for odd `s`. Half the trials use each parity.
pub fn haiku_iii<R: Rng>(rng: &mut R, trials: usize) -> ModelReport {
    let m = FlipModel;
    let mut bad = Vec::new();
    for k in 0..trials {
        let f = random_with_parity(rng, 12, k % 2 == 1);
        let s = exponent_sum(&f, 2);
        let e = if s.rem_euclid(2) == 0 { 0 } else { -1 };
        // a and b are the model's own letters
        let a = (vec![1], 0);
        let b = (vec![2], 0);
        let g = (vec![], 1);
        let lhs = m.eval(&f, &a, &m.mul(&g, &b));
        let rhs = m.mul(&m.eval(&f, &a, &b), &(vec![], e));
        if lhs != rhs {
            bad.push(format!("f = {} (s = {s})", show(&f)));
        }
    }
    ModelReport { rule: "haiku-iii".into(), trials, counterexamples: bad }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn flip_model_relations() {
        let m = FlipModel;
        let (a, b, g) = ((vec![1], 0), (vec![2], 0), (vec![], 1));
        assert_eq!(m.mul(&g, &a), m.mul(&a, &g));
        assert_eq!(m.mul(&g, &b), m.mul(&b, &m.inv(&g)));
        assert_eq!(m.mul(&b, &m.inv(&b)), m.one());
    }

    #[test]
    fn small_runs() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(haiku_i(&mut rng, 20).passed());
        assert!(haiku_ii(&mut rng, 20, false).passed());
        assert!(haiku_iii(&mut rng, 20).passed());
    }

    #[test]
    fn derived_words_abelianize_to_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let w = random_derived(&mut rng, 12);
            assert_eq!((exponent_sum(&w, 1), exponent_sum(&w, 2)), (0, 0));
        }
    }
}
