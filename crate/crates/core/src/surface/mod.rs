//! Mapping class groups Γ_{g,1} and Γ_{g,0} through their action on the
//! closed surface group.

pub mod group;
pub mod named;
pub mod ribbon;
pub mod suite;
pub mod symplectic;

use std::collections::HashSet;
use std::fmt;

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::word::{self, Word, WordError};
use group::{concat, inverse, Letters, SurfaceGroup};
use ribbon::{BandModel, Traversal};

pub use named::{named_mcg, NamedMcg};
pub use symplectic::{symplectic_image, SymplecticMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("genus {0} is too small (need g >= 2)")]
    GenusTooSmall(usize),
    #[error("genus mismatch: {0} vs {1}")]
    GenusMismatch(usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("conjugator search exhausted its budget ({0})")]
    SearchBudgetExceeded(usize),
    #[error(transparent)]
    Word(#[from] WordError),
}

/// A word in the twists `a1..a{2g}` and `d2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct McgWord {
    pub genus: usize,
    pub word: Word,
}

impl McgWord {
    pub fn new(genus: usize, word: Word) -> Result<McgWord, SurfaceError> {
        if genus < 2 {
            return Err(SurfaceError::GenusTooSmall(genus));
        }
        for g in word.generators() {
            gen_id(genus, g)?;
        }
        Ok(McgWord { genus, word })
    }

    pub fn from_ids(genus: usize, ids: &[i32]) -> McgWord {
        let w = Word::from_letters(ids.iter().map(|&x| (word::gen(&gen_name(genus, x.abs())), x.signum().into())));
        McgWord { genus, word: w }
    }

    /// Signed generator ids: `a_i` is `i`, `d2` is `2g+1`.
    pub fn ids(&self) -> Vec<i32> {
        let mut out = Vec::new();
        for (g, e) in self.word.letters() {
            let id = gen_id(self.genus, g).expect("validated");
            let k = e.to_i64().expect("exponent fits");
            out.extend(std::iter::repeat(if k > 0 { id } else { -id }).take(k.unsigned_abs() as usize));
        }
        out
    }

    pub fn mul(&self, o: &McgWord) -> McgWord {
        McgWord { genus: self.genus, word: self.word.mul(&o.word) }
    }

    pub fn inverse(&self) -> McgWord {
        McgWord { genus: self.genus, word: self.word.inverse() }
    }

    /// Parse a word with macros such as `y(5)`, `d(3)`, `t(1)`.
    pub fn parse(genus: usize, text: &str) -> Result<McgWord, SurfaceError> {
        named::expand(genus, &word::parse_word(text)?)
    }
}

impl fmt::Display for McgWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word)
    }
}

pub fn gen_id(genus: usize, g: &str) -> Result<i32, SurfaceError> {
    if g == "d2" || g == "d" {
        return Ok(2 * genus as i32 + 1);
    }
    let i: usize = g
        .strip_prefix('a')
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| SurfaceError::Word(WordError::UndeclaredGenerator(g.to_string())))?;
    if i == 0 || i > 2 * genus {
        return Err(SurfaceError::IndexOutOfRange(format!("{g} in genus {genus}")));
    }
    Ok(i as i32)
}

pub fn gen_name(genus: usize, id: i32) -> String {
    if id as usize == 2 * genus + 1 {
        "d2".to_string()
    } else {
        format!("a{id}")
    }
}

/// Images of `x_1..x_2g`, each a surface-group word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiOneAction {
    pub genus: usize,
    pub images: Vec<Letters>,
}

impl PiOneAction {
    pub fn identity(genus: usize) -> PiOneAction {
        PiOneAction { genus, images: (1..=2 * genus as i32).map(|j| vec![j]).collect() }
    }

    /// Image of an arbitrary word.
    pub fn apply(&self, w: &[i32]) -> Letters {
        let mut out = Vec::new();
        for &x in w {
            let img = &self.images[x.unsigned_abs() as usize - 1];
            if x > 0 {
                out = concat(&[&out, img]);
            } else {
                out = concat(&[&out, &inverse(img)]);
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &PiOneAction, group: &SurfaceGroup) -> PiOneAction {
        PiOneAction {
            genus: self.genus,
            images: other.images.iter().map(|w| group.reduce(&self.apply(w))).collect(),
        }
    }

    pub fn equals(&self, other: &PiOneAction, group: &SurfaceGroup) -> bool {
        self.images.iter().zip(&other.images).all(|(u, v)| group.equal(u, v))
    }

    pub fn is_identity(&self, group: &SurfaceGroup) -> bool {
        self.equals(&PiOneAction::identity(self.genus), group)
    }

    pub fn image_words(&self) -> Vec<Word> {
        self.images.iter().map(|w| letters_to_word(w)).collect()
    }
}

pub fn letters_to_word(w: &[i32]) -> Word {
    Word::from_letters(w.iter().map(|&x| (word::gen(&format!("x{}", x.abs())), x.signum().into())))
}

pub fn word_to_letters(w: &Word) -> Result<Letters, SurfaceError> {
    let mut out = Vec::new();
    for (g, e) in w.letters() {
        let j: i32 = g
            .strip_prefix('x')
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| SurfaceError::Word(WordError::UndeclaredGenerator(g.to_string())))?;
        let k = e.to_i64().expect("exponent fits");
        out.extend(std::iter::repeat(if k > 0 { j } else { -j }).take(k.unsigned_abs() as usize));
    }
    Ok(group::free_reduce(&out))
}

/// Band traversals of the curve carrying generator `id`.
pub fn generator_curve(genus: usize, id: i32) -> Vec<Traversal> {
    let id = id as usize;
    if id == 2 * genus + 1 {
        return vec![(3, 1)];
    }
    if id == 1 || id % 2 == 0 {
        return vec![(id, 1)];
    }
    let i = (id - 1) / 2;
    vec![(2 * i - 1, 1), (2 * i, -1), (2 * i + 1, -1), (2 * i, 1)]
}

/// The genus-g oracle: generator actions plus the surface group.
#[derive(Debug, Clone)]
pub struct Mcg {
    genus: usize,
    group: SurfaceGroup,
    /// `table[id] = (twist, inverse twist)` for ids `1..=2g+1`.
    table: Vec<(PiOneAction, PiOneAction)>,
}

impl Mcg {
    pub fn new(genus: usize) -> Result<Mcg, SurfaceError> {
        let group = SurfaceGroup::new(genus)?;
        let model = BandModel::new(genus);
        let mut table = vec![(PiOneAction::identity(genus), PiOneAction::identity(genus))];
        for id in 1..=2 * genus as i32 + 1 {
            let curve = generator_curve(genus, id);
            let fwd = model.twist(&curve, -1).expect("generator curves are simple");
            let bwd = model.twist(&curve, 1).expect("generator curves are simple");
            table.push((PiOneAction { genus, images: fwd }, PiOneAction { genus, images: bwd }));
        }
        Ok(Mcg { genus, group, table })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn group(&self) -> &SurfaceGroup {
        &self.group
    }

    /// Actions of `a1..a{2g}` and `d2`, keyed by generator name.
    pub fn generator_actions(&self) -> Vec<(String, PiOneAction)> {
        (1..=2 * self.genus as i32 + 1).map(|id| (gen_name(self.genus, id), self.table[id as usize].0.clone())).collect()
    }

    pub fn induced_ids(&self, ids: &[i32]) -> PiOneAction {
        let mut f = PiOneAction::identity(self.genus);
        for &x in ids {
            let (fwd, bwd) = &self.table[x.unsigned_abs() as usize];
            f = f.compose(if x > 0 { fwd } else { bwd }, &self.group);
        }
        f
    }

    pub fn induced_automorphism(&self, m: &McgWord) -> Result<PiOneAction, SurfaceError> {
        self.check_genus(m)?;
        Ok(self.induced_ids(&m.ids()))
    }

    fn check_genus(&self, m: &McgWord) -> Result<(), SurfaceError> {
        if m.genus != self.genus {
            return Err(SurfaceError::GenusMismatch(self.genus, m.genus));
        }
        Ok(())
    }

    pub fn equal_ids(&self, u: &[i32], v: &[i32]) -> bool {
        let w: Vec<i32> = u.iter().copied().chain(v.iter().rev().map(|x| -x)).collect();
        self.induced_ids(&w).is_identity(&self.group)
    }

    pub fn mcg_equal_g1(&self, u: &McgWord, v: &McgWord) -> Result<bool, SurfaceError> {
        self.check_genus(u)?;
        self.check_genus(v)?;
        Ok(self.equal_ids(&u.ids(), &v.ids()))
    }

    /// A verified `c` with `φ(x_i) = c x_i c^{-1}` for all `i`.
    pub fn is_inner(&self, phi: &PiOneAction) -> Option<Letters> {
        self.find_conjugator(phi, budget_from_env()).ok().flatten()
    }

    /// `Ok(None)` means provably not inner; `Err` means the search gave up.
    pub fn find_conjugator(&self, phi: &PiOneAction, budget: usize) -> Result<Option<Letters>, SurfaceError> {
        let g = &self.group;
        let verify = |c: &[i32]| {
            phi.images.iter().enumerate().all(|(i, img)| {
                let x = [(i + 1) as i32];
                g.equal(img, &concat(&[c, &x, &inverse(c)]))
            })
        };
        // inner automorphisms act trivially on homology
        let m = symplectic::abelianized(phi);
        if !m.is_identity() {
            return Ok(None);
        }
        let mut tried = HashSet::new();
        let mut candidates: Vec<Letters> = Vec::new();
        for (i, img) in phi.images.iter().enumerate() {
            let x = (i + 1) as i32;
            let w = g.reduce(img);
            for k in 0..=w.len() {
                for j in -2..=2i32 {
                    let mut c = w[..k].to_vec();
                    let p: Letters = std::iter::repeat(if j > 0 { x } else { -x }).take(j.unsigned_abs() as usize).collect();
                    c = g.reduce(&concat(&[&c, &p]));
                    candidates.push(c);
                }
            }
        }
        for c in candidates {
            if tried.insert(c.clone()) && verify(&c) {
                return Ok(Some(c));
            }
        }
        // fallback: candidates times a short correction
        let gens: Vec<i32> = (1..=2 * self.genus as i32).flat_map(|x| [x, -x]).collect();
        let base: Vec<Letters> = tried.iter().cloned().collect();
        let mut layer: Vec<Letters> = vec![vec![]];
        for _ in 0..budget {
            let mut next = Vec::new();
            for w in &layer {
                for &x in &gens {
                    if w.last() == Some(&-x) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(x);
                    next.push(v);
                }
            }
            for corr in &next {
                for b in &base {
                    let c = g.reduce(&concat(&[b, corr]));
                    if verify(&c) {
                        return Ok(Some(c));
                    }
                }
            }
            layer = next;
        }
        Err(SurfaceError::SearchBudgetExceeded(budget))
    }

    /// Equality in Γ_{g,0}: `u v^{-1}` acts by an inner automorphism.
    pub fn mcg_equal_g0(&self, u: &McgWord, v: &McgWord) -> Result<bool, SurfaceError> {
        Ok(self.g0_witness(u, v)?.is_some())
    }

    /// The verified conjugator, if any.
    pub fn g0_witness(&self, u: &McgWord, v: &McgWord) -> Result<Option<Letters>, SurfaceError> {
        self.check_genus(u)?;
        self.check_genus(v)?;
        let w: Vec<i32> = u.ids().into_iter().chain(v.ids().into_iter().rev().map(|x| -x)).collect();
        let phi = self.induced_ids(&w);
        self.find_conjugator(&phi, budget_from_env())
    }
}

/// Ball radius for the conjugator fallback, from `TWISTLAB_BUDGET` (default 2).
pub fn budget_from_env() -> usize {
    std::env::var("TWISTLAB_BUDGET").ok().and_then(|s| s.parse().ok()).unwrap_or(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(g: usize, s: &str) -> McgWord {
        McgWord::parse(g, s).unwrap()
    }

    #[test]
    fn relation_a_genus_two() {
        let m = Mcg::new(2).unwrap();
        assert!(m.mcg_equal_g1(&w(2, "a1 a2 a1"), &w(2, "a2 a1 a2")).unwrap());
        assert!(m.mcg_equal_g1(&w(2, "d2 a4 d2"), &w(2, "a4 d2 a4")).unwrap());
        assert!(!m.mcg_equal_g1(&w(2, "d2"), &w(2, "a1")).unwrap());
    }

    #[test]
    fn identity_is_inner() {
        let m = Mcg::new(2).unwrap();
        assert_eq!(m.is_inner(&PiOneAction::identity(2)), Some(vec![]));
        let conj = PiOneAction { genus: 2, images: (1..=4).map(|j| concat(&[&[1], &[j], &[-1]])).collect() };
        assert_eq!(m.is_inner(&conj), Some(vec![1]));
    }

    #[test]
    fn genus_mismatch() {
        let m = Mcg::new(2).unwrap();
        assert!(matches!(m.mcg_equal_g1(&w(2, "a1"), &w(3, "a1")), Err(SurfaceError::GenusMismatch(2, 3))));
    }
}
