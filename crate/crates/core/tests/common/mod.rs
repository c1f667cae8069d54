//! Independent braid oracles shared by the integration tests: relation-move
//! closure in B_3 and Artin's action on the free group.
#![allow(dead_code)]

use std::collections::HashMap;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use twistlab::braid::normal_form_letters;

pub fn free_reduce(w: &[i32]) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for &x in w {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

pub fn inv(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|x| -x).collect()
}

/// Half-relator substitutions: for every cyclic word r of a relator (and its
/// inverse), any piece p with r = p q may be replaced by q^-1.
pub fn substitutions(relators: &[Vec<i32>]) -> Vec<(Vec<i32>, Vec<i32>)> {
    let mut out = Vec::new();
    for r in relators {
        for r in [r.clone(), inv(r)] {
            let n = r.len();
            for s in 0..n {
                let rot: Vec<i32> = (0..n).map(|k| r[(s + k) % n]).collect();
                for k in 1..n {
                    out.push((rot[..k].to_vec(), inv(&rot[k..])));
                }
            }
        }
    }
    out
}

pub fn find(p: &mut Vec<usize>, x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let n = p[y];
        p[y] = r;
        y = n;
    }
    r
}

pub fn words_up_to(gens: i32, len: usize) -> Vec<Vec<i32>> {
    let mut all = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for g in (1..=gens).flat_map(|g| [g, -g]) {
                if w.last() == Some(&-g) {
                    continue;
                }
                let mut v: Vec<i32> = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

/// Artin's faithful action of B_n on the free group F_n.
pub fn artin_images(n: usize, w: &[i32]) -> Vec<Vec<i32>> {
    let mut img: Vec<Vec<i32>> = (1..=n as i32).map(|x| vec![x]).collect();
    for &l in w {
        let i = l.unsigned_abs() as usize;
        let (a, b) = (img[i - 1].clone(), img[i].clone());
        if l > 0 {
            img[i - 1] = free_reduce(&[a.clone(), b, inv(&a)].concat());
            img[i] = a;
        } else {
            img[i - 1] = b.clone();
            img[i] = free_reduce(&[inv(&b), a, b].concat());
        }
    }
    img
}

pub fn random_word(rng: &mut ChaCha8Rng, gens: i32, max: usize) -> Vec<i32> {
    let len = rng.gen_range(0..=max);
    (0..len).map(|_| rng.gen_range(1..=gens) * if rng.gen_bool(0.5) { 1 } else { -1 }).collect()
}

/// Unordered pairs of words of length <= 6 in B_3 on which Garside equality
/// and the relation-move closure (explored up to length `bound`) disagree.
pub fn b3_disagreements(bound: usize) -> (usize, usize) {
    let words = words_up_to(2, bound);
    let index: HashMap<Vec<i32>, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let subs = substitutions(&[vec![1, 2, 1, -2, -1, -2]]);
    let mut parent: Vec<usize> = (0..words.len()).collect();
    for (i, w) in words.iter().enumerate() {
        for (p, q) in &subs {
            if p.len() > w.len() {
                continue;
            }
            for s in 0..=w.len() - p.len() {
                if &w[s..s + p.len()] == p.as_slice() {
                    let mut v = w[..s].to_vec();
                    v.extend(q);
                    v.extend(&w[s + p.len()..]);
                    let v = free_reduce(&v);
                    if let Some(&j) = index.get(&v) {
                        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                        parent[a] = b;
                    }
                }
            }
        }
    }
    let short: Vec<usize> = (0..words.len()).filter(|&i| words[i].len() <= 6).collect();
    let nfs: Vec<_> = short.iter().map(|&i| normal_form_letters(3, &words[i])).collect();
    let mut disagreements = 0;
    let mut pairs = 0;
    for a in 0..short.len() {
        for b in a + 1..short.len() {
            pairs += 1;
            let same_nf = nfs[a] == nfs[b];
            let same_cls = find(&mut parent, short[a]) == find(&mut parent, short[b]);
            if same_nf != same_cls {
                disagreements += 1;
            }
        }
    }
    (disagreements, pairs)
}

/// `count` random pairs of length <= 8 in B_4, every other one related by
/// random relator moves. Returns (disagreements, equal pairs).
pub fn b4_disagreements(rng: &mut ChaCha8Rng, count: usize) -> (usize, usize) {
    let rels = vec![vec![1, 2, 1, -2, -1, -2], vec![2, 3, 2, -3, -2, -3], vec![1, 3, -1, -3]];
    let subs = substitutions(&rels);
    let (mut bad, mut equal) = (0, 0);
    for k in 0..count {
        let u = random_word(rng, 3, 8);
        let v = if k % 2 == 0 {
            let mut v = u.clone();
            for _ in 0..40 {
                let (p, q) = &subs[rng.gen_range(0..subs.len())];
                if p.len() > v.len() {
                    continue;
                }
                let s = rng.gen_range(0..=v.len() - p.len());
                if &v[s..s + p.len()] != p.as_slice() {
                    continue;
                }
                let mut x = v[..s].to_vec();
                x.extend(q);
                x.extend(&v[s + p.len()..]);
                let x = free_reduce(&x);
                if x.len() <= 8 {
                    v = x;
                }
            }
            v
        } else {
            random_word(rng, 3, 8)
        };
        let nf_eq = normal_form_letters(4, &u) == normal_form_letters(4, &v);
        let act_eq = artin_images(4, &u) == artin_images(4, &v);
        bad += (nf_eq != act_eq) as usize;
        equal += nf_eq as usize;
    }
    (bad, equal)
}
