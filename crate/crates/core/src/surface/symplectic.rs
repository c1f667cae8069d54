//! Action on first homology: twists become symplectic transvections.

use serde::{Deserialize, Serialize};

use super::{generator_curve, McgWord, PiOneAction};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymplecticMatrix {
    pub dim: usize,
    /// Row-major.
    pub entries: Vec<i128>,
    pub modulus: Option<i128>,
}

impl SymplecticMatrix {
    pub fn identity(dim: usize, modulus: Option<i128>) -> SymplecticMatrix {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        SymplecticMatrix { dim, entries, modulus }
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.entries[i * self.dim + j]
    }

    fn norm(&self, x: i128) -> i128 {
        match self.modulus {
            Some(n) => x.rem_euclid(n),
            None => x,
        }
    }

    pub fn mul(&self, o: &SymplecticMatrix) -> SymplecticMatrix {
        let n = self.dim;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * o.get(k, j);
                }
            }
        }
        let mut m = SymplecticMatrix { dim: n, entries, modulus: self.modulus };
        m.entries = m.entries.iter().map(|&x| m.norm(x)).collect();
        m
    }

    pub fn is_identity(&self) -> bool {
        *self == SymplecticMatrix::identity(self.dim, self.modulus)
    }

    /// `Mᵀ J M = J`.
    pub fn is_symplectic(&self) -> bool {
        let j = form(self.dim / 2, self.modulus);
        let mut t = self.clone();
        for i in 0..self.dim {
            for k in 0..self.dim {
                t.entries[i * self.dim + k] = self.get(k, i);
            }
        }
        t.mul(&j).mul(self) == j
    }
}

/// The intersection form with `ω(x_{2i-1}, x_{2i}) = 1`.
pub fn form(genus: usize, modulus: Option<i128>) -> SymplecticMatrix {
    let n = 2 * genus;
    let mut m = SymplecticMatrix { dim: n, entries: vec![0; n * n], modulus };
    for i in 0..genus {
        m.entries[2 * i * n + 2 * i + 1] = 1;
        m.entries[(2 * i + 1) * n + 2 * i] = m.norm(-1);
    }
    m
}

/// `v ↦ v + s·ω(c, v)·c`.
pub fn transvection(genus: usize, c: &[i128], s: i128, modulus: Option<i128>) -> SymplecticMatrix {
    let n = 2 * genus;
    let j = form(genus, None);
    // row vector cᵀJ
    let cj: Vec<i128> = (0..n).map(|col| (0..n).map(|k| c[k] * j.get(k, col)).sum()).collect();
    let mut m = SymplecticMatrix::identity(n, modulus);
    for r in 0..n {
        for col in 0..n {
            let v = m.get(r, col) + s * c[r] * cj[col];
            m.entries[r * n + col] = m.norm(v);
        }
    }
    m
}

/// Homology class of a generator's curve.
pub fn generator_class(genus: usize, id: i32) -> Vec<i128> {
    let mut c = vec![0; 2 * genus];
    for (b, d) in generator_curve(genus, id) {
        c[b - 1] += d as i128;
    }
    c
}

pub fn symplectic_image(m: &McgWord, modulus: Option<i128>) -> SymplecticMatrix {
    let g = m.genus;
    let mut out = SymplecticMatrix::identity(2 * g, modulus);
    for x in m.ids() {
        // the presentation twists are transvections with s = -1
        let s = if x > 0 { -1 } else { 1 };
        out = out.mul(&transvection(g, &generator_class(g, x.abs()), s, modulus));
    }
    out
}

/// The homology action read off from a π1 action (column j = class of φ(x_j)).
pub fn abelianized(phi: &PiOneAction) -> SymplecticMatrix {
    let n = 2 * phi.genus;
    let mut m = SymplecticMatrix { dim: n, entries: vec![0; n * n], modulus: None };
    for (j, img) in phi.images.iter().enumerate() {
        for &x in img {
            m.entries[(x.unsigned_abs() as usize - 1) * n + j] += x.signum() as i128;
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::Mcg;

    #[test]
    fn transvections_match_pi_one() {
        for g in 2..=3 {
            let mcg = Mcg::new(g).unwrap();
            for id in 1..=2 * g as i32 + 1 {
                let w = McgWord::from_ids(g, &[id]);
                let s = symplectic_image(&w, None);
                assert!(s.is_symplectic());
                assert_eq!(s, abelianized(&mcg.induced_ids(&[id])), "generator {id}");
            }
        }
    }

    #[test]
    fn empty_word_identity() {
        assert!(symplectic_image(&McgWord::from_ids(2, &[]), Some(7)).is_identity());
    }
}
