//! The closed surface group and Dehn's algorithm.
//!
//! Letters are signed integers: `j` is `x_j`, `-j` its inverse.

use std::collections::HashMap;

use super::SurfaceError;

pub type Letters = Vec<i32>;

pub fn free_reduce(w: &[i32]) -> Letters {
    let mut out = Vec::with_capacity(w.len());
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn inverse(w: &[i32]) -> Letters {
    w.iter().rev().map(|x| -x).collect()
}

pub fn concat(parts: &[&[i32]]) -> Letters {
    let mut out = Vec::new();
    for p in parts {
        for &x in p.iter() {
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
    }
    out
}

/// `⟨x1..x2g | [x1,x2]⋯[x2g-1,x2g]⟩`.
#[derive(Debug, Clone)]
pub struct SurfaceGroup {
    genus: usize,
    /// Long relator pieces keyed by length, mapped to their shorter complement.
    pieces: Vec<HashMap<Letters, Letters>>,
}

impl SurfaceGroup {
    pub fn new(genus: usize) -> Result<SurfaceGroup, SurfaceError> {
        if genus < 2 {
            return Err(SurfaceError::GenusTooSmall(genus));
        }
        let r = relator(genus);
        let n = r.len();
        let mut pieces = vec![HashMap::new(); n + 1];
        for rel in [r.clone(), inverse(&r)] {
            for s in 0..n {
                let rot: Letters = (0..n).map(|k| rel[(s + k) % n]).collect();
                for k in n / 2 + 1..=n {
                    pieces[k].insert(rot[..k].to_vec(), inverse(&rot[k..]));
                }
            }
        }
        Ok(SurfaceGroup { genus, pieces })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn relator(&self) -> Letters {
        relator(self.genus)
    }

    /// Dehn's algorithm: the result is empty iff `w` is trivial.
    pub fn reduce(&self, w: &[i32]) -> Letters {
        let mut out: Letters = Vec::with_capacity(w.len());
        let mut todo: Vec<i32> = w.iter().rev().copied().collect();
        let n = self.pieces.len() - 1;
        while let Some(x) = todo.pop() {
            if out.last() == Some(&-x) {
                out.pop();
                continue;
            }
            out.push(x);
            for k in (n / 2 + 1..=n.min(out.len())).rev() {
                let tail = &out[out.len() - k..];
                if let Some(rep) = self.pieces[k].get(tail) {
                    let rep = rep.clone();
                    out.truncate(out.len() - k);
                    // replay the shorter side through the same checks
                    todo.extend(rep.iter().rev());
                    break;
                }
            }
        }
        out
    }

    pub fn is_trivial(&self, w: &[i32]) -> bool {
        self.reduce(w).is_empty()
    }

    pub fn equal(&self, u: &[i32], v: &[i32]) -> bool {
        self.is_trivial(&concat(&[u, &inverse(v)]))
    }
}

pub fn relator(genus: usize) -> Letters {
    let mut r = Vec::with_capacity(4 * genus);
    for i in 0..genus as i32 {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        r.extend([a, b, -a, -b]);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relator_dies() {
        let s = SurfaceGroup::new(2).unwrap();
        assert!(s.reduce(&relator(2)).is_empty());
        assert_eq!(s.reduce(&[1]), vec![1]);
        let r = relator(2);
        let conj = concat(&[&[3, 1], &r, &[-1, -3]]);
        assert!(s.is_trivial(&conj));
    }

    #[test]
    fn genus_one_rejected() {
        assert!(SurfaceGroup::new(1).is_err());
    }

    #[test]
    fn long_piece_shortens() {
        let s = SurfaceGroup::new(2).unwrap();
        // five letters of the relator become the inverse of the other three
        let w = [1, 2, -1, -2, 3];
        assert_eq!(s.reduce(&w), vec![4, 3, -4]);
    }
}
