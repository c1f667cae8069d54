//! Dehn twist actions computed in a disk-with-bands model.
//!
//! The surface with one boundary circle is a disk with `2g` bands. Band `x_j`
//! leaves the disk at slot `P_j` and comes back at slot `Q_j`; the base point
//! sits at slot 0. With `P/Q = (4i+1, 4i+3)` for `x_{2i+1}` and
//! `(4i+4, 4i+2)` for `x_{2i+2}` the boundary reads `∏[x_{2i-1}, x_{2i}]`.
//!
//! A simple closed curve is a cyclic list of band traversals. Inside the disk
//! it is a family of chords. The twist image of `x_j` inserts a rotation of the
//! curve word at every crossing between those chords and the two chords of
//! `x_j`, in the order met when walking from the base point.

use super::group::{free_reduce, inverse, Letters};

const SLOT: i64 = 1000;

/// A traversal of band `band` in direction `dir` (±1).
pub type Traversal = (usize, i32);

#[derive(Debug, Clone)]
pub struct BandModel {
    genus: usize,
    p: Vec<i64>,
    q: Vec<i64>,
}

#[derive(Debug, Clone, Copy)]
struct Chord {
    from: i64,
    to: i64,
    strand: usize,
}

impl BandModel {
    pub fn new(genus: usize) -> BandModel {
        let mut p = vec![0; 2 * genus + 1];
        let mut q = vec![0; 2 * genus + 1];
        for i in 0..genus {
            let b = 4 * i as i64 + 1;
            p[2 * i + 1] = b;
            q[2 * i + 1] = b + 2;
            p[2 * i + 2] = b + 3;
            q[2 * i + 2] = b + 1;
        }
        BandModel { genus, p, q }
    }

    fn modulus(&self) -> i64 {
        (4 * self.genus as i64 + 1) * SLOT
    }

    fn chords(&self, curve: &[Traversal], offs: &[i64]) -> Vec<Chord> {
        let ends: Vec<(i64, i64)> = curve
            .iter()
            .zip(offs)
            .map(|(&(b, d), &s)| {
                let (p, q) = (self.p[b] * SLOT, self.q[b] * SLOT);
                if d > 0 {
                    (p + s, q - s)
                } else {
                    (q - s, p + s)
                }
            })
            .collect();
        let k = curve.len();
        (0..k).map(|i| Chord { from: ends[i].1, to: ends[(i + 1) % k].0, strand: i }).collect()
    }

    /// Strictly inside the counterclockwise arc from `a` to `b`.
    fn inside(&self, a: i64, b: i64, x: i64) -> bool {
        let m = self.modulus();
        let d = (x - a).rem_euclid(m);
        d != 0 && d < (b - a).rem_euclid(m)
    }

    fn cross(&self, c: &Chord, a: i64, b: i64) -> bool {
        self.inside(a, b, c.from) != self.inside(a, b, c.to)
    }

    fn self_crossings(&self, chords: &[Chord]) -> usize {
        let mut n = 0;
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                if self.cross(&chords[j], chords[i].from, chords[i].to) {
                    n += 1;
                }
            }
        }
        n
    }

    /// Strand offsets realizing `curve` without self-crossings.
    pub fn simple_offsets(&self, curve: &[Traversal]) -> Option<Vec<i64>> {
        let k = curve.len();
        for mask in 0..(1u32 << k) {
            let offs: Vec<i64> = (0..k)
                .map(|i| {
                    let mag = 30 + 10 * i as i64;
                    if mask >> i & 1 == 0 {
                        mag
                    } else {
                        -mag
                    }
                })
                .collect();
            if self.self_crossings(&self.chords(curve, &offs)) == 0 {
                return Some(offs);
            }
        }
        None
    }

    /// Images of `x_1..x_2g` under the twist along `curve`; `sign = -1` is
    /// the handedness used for the presentation generators.
    pub fn twist(&self, curve: &[Traversal], sign: i32) -> Option<Vec<Letters>> {
        let offs = self.simple_offsets(curve)?;
        let chords = self.chords(curve, &offs);
        let k = curve.len();
        let word: Letters = curve.iter().map(|&(b, d)| b as i32 * d).collect();
        let mut images = Vec::with_capacity(2 * self.genus);
        for j in 1..=2 * self.genus {
            let segs = [(0, self.p[j] * SLOT), (self.q[j] * SLOT, 0)];
            let mut img: Letters = Vec::new();
            for (si, &(a, b)) in segs.iter().enumerate() {
                let mut hits: Vec<&Chord> = chords.iter().filter(|c| self.cross(c, a, b)).collect();
                // c1 comes first iff the rest of the segment lies on c2's side of c1
                hits.sort_by(|c1, c2| {
                    if c1.strand == c2.strand {
                        return std::cmp::Ordering::Equal;
                    }
                    let b_side = self.inside(c1.from, c1.to, b);
                    let c2_side = self.inside(c1.from, c1.to, c2.from);
                    if b_side == c2_side {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    }
                });
                for c in hits {
                    let rot: Letters = (0..k).map(|m| word[(c.strand + 1 + m) % k]).collect();
                    let e = if self.inside(a, b, c.from) { sign } else { -sign };
                    if e > 0 {
                        img.extend(rot);
                    } else {
                        img.extend(inverse(&rot));
                    }
                }
                if si == 0 {
                    img.push(j as i32);
                }
            }
            images.push(free_reduce(&img));
        }
        Some(images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_word_fixed() {
        let m = BandModel::new(2);
        let t = m.twist(&[(1, 1)], -1).unwrap();
        let bd = super::super::group::relator(2);
        let mut img = Vec::new();
        for &x in &bd {
            let w = &t[x.unsigned_abs() as usize - 1];
            if x > 0 {
                img.extend(w.iter().copied());
            } else {
                img.extend(inverse(w));
            }
        }
        assert_eq!(free_reduce(&img), bd);
    }

    #[test]
    fn twist_along_x1_moves_x2_only() {
        let m = BandModel::new(2);
        let t = m.twist(&[(1, 1)], -1).unwrap();
        assert_eq!(t[0], vec![1]);
        assert_ne!(t[1], vec![2]);
        assert_eq!(t[2], vec![3]);
        assert_eq!(t[3], vec![4]);
    }
}
