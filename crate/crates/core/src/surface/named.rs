//! Named elements of Γ_{g,1} as words in `a1..a{2g}`, `d2`.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use super::{gen_id, McgWord, SurfaceError};
use crate::word::{Word, WordError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum NamedMcg {
    /// `a_{k-1}⋯a_1²⋯a_{k-1}` (palindromic).
    Y(usize),
    /// `a_{k-1}⋯a_1²⋯a_{k-1}a_k` (trailing-letter variant).
    YAlt(usize),
    /// `a_{2g}⋯a_1²⋯a_{2g}`, the long `y_g` of relation (D).
    YBar,
    W(usize),
    T(usize),
    TPrime(usize),
    D(usize),
    DPrime(usize),
    G1(usize),
    G2(usize),
    G1Prime(usize),
    G2Prime(usize),
    V(usize),
    /// `u_i` exactly as printed: three letters on the left.
    U(usize),
    /// `u_i` with `a_{2i-1}` prepended.
    USym(usize),
    YCap(usize),
    WCap(usize),
    /// `(u_1⋯u_{k-1})^{-1} a_1 (u_1⋯u_{k-1})`.
    DU(usize),
    Dg,
    DgPrime,
    DgSym,
    DgSymPrime,
}

fn inv(w: &[i32]) -> Vec<i32> {
    w.iter().rev().map(|x| -x).collect()
}

fn conj(x: &[i32], c: &[i32]) -> Vec<i32> {
    // c x c^{-1}
    [c, x, &inv(c)].concat()
}

fn seq(parts: &[Vec<i32>]) -> Vec<i32> {
    parts.concat()
}

pub fn named_ids(g: usize, spec: NamedMcg) -> Result<Vec<i32>, SurfaceError> {
    let bad = || SurfaceError::IndexOutOfRange(format!("{spec:?} in genus {g}"));
    let top = 2 * g;
    let a = |i: usize| i as i32;
    let d2 = 2 * g as i32 + 1;
    let tk = |k: usize| -> Result<Vec<i32>, SurfaceError> {
        if k == 0 || k + 1 > g {
            return Err(bad());
        }
        Ok(vec![a(2 * k), a(2 * k - 1), a(2 * k + 1), a(2 * k)])
    };
    Ok(match spec {
        NamedMcg::Y(k) => {
            if k == 0 || k > top + 1 {
                return Err(bad());
            }
            let mut w: Vec<i32> = (1..k).rev().map(a).collect();
            w.extend((1..k).map(a));
            w
        }
        NamedMcg::YAlt(k) => {
            if k > top {
                return Err(bad());
            }
            let mut w = named_ids(g, NamedMcg::Y(k))?;
            w.push(a(k));
            w
        }
        NamedMcg::YBar => named_ids(g, NamedMcg::Y(top + 1))?,
        NamedMcg::W(k) => {
            if k == 0 || k > top + 1 {
                return Err(bad());
            }
            let base: Vec<i32> = (1..k).map(a).collect();
            base.repeat(k)
        }
        NamedMcg::T(k) => tk(k)?,
        NamedMcg::TPrime(k) => {
            let dk = named_ids(g, NamedMcg::D(k))?;
            tk(k)?;
            seq(&[vec![a(2 * k)], dk, vec![a(2 * k + 1), a(2 * k)]])
        }
        NamedMcg::D(k) => match k {
            1 => vec![a(1)],
            2 => vec![d2],
            _ if k > g => return Err(bad()),
            _ => {
                let i = k - 1;
                let g2 = named_ids(g, NamedMcg::G2(i))?;
                let g1 = named_ids(g, NamedMcg::G1(i))?;
                let di = named_ids(g, NamedMcg::D(i))?;
                let dm = named_ids(g, NamedMcg::D(i - 1))?;
                seq(&[g2, g1, di, inv(&dm), vec![-a(2 * i - 1), -a(2 * i + 1)]])
            }
        },
        NamedMcg::DPrime(k) => {
            let y = named_ids(g, NamedMcg::Y(2 * k + 1))?;
            conj(&named_ids(g, NamedMcg::D(k))?, &y)
        }
        NamedMcg::G1(i) | NamedMcg::G1Prime(i) => {
            let t = tk(i)?;
            let d = if matches!(spec, NamedMcg::G1(_)) {
                named_ids(g, NamedMcg::D(i))?
            } else {
                named_ids(g, NamedMcg::DPrime(i))?
            };
            conj(&d, &inv(&t))
        }
        NamedMcg::G2(i) | NamedMcg::G2Prime(i) => {
            if i < 2 {
                return Err(bad());
            }
            let mut c = Vec::new();
            for j in 2..=i {
                c.extend(tk(j)?);
            }
            for j in 1..i {
                c.extend(tk(j)?);
            }
            let d = if matches!(spec, NamedMcg::G2(_)) { vec![d2] } else { named_ids(g, NamedMcg::DPrime(2))? };
            conj(&d, &inv(&c))
        }
        NamedMcg::V(i) => {
            if i == 0 || i + 1 > g {
                return Err(bad());
            }
            if i == 1 {
                named_ids(g, NamedMcg::DPrime(2))?
            } else {
                let c = seq(&[tk(i - 1)?, tk(i)?]);
                conj(&named_ids(g, NamedMcg::V(i - 1))?, &c)
            }
        }
        NamedMcg::U(i) | NamedMcg::USym(i) => {
            let v = named_ids(g, NamedMcg::V(i))?;
            let mut left = vec![a(2 * i), a(2 * i + 1), a(2 * i + 2)];
            if matches!(spec, NamedMcg::USym(_)) {
                left.insert(0, a(2 * i - 1));
            }
            let right = vec![a(2 * i + 2), a(2 * i + 1), a(2 * i), a(2 * i - 1)];
            seq(&[left, v, inv(&right)])
        }
        NamedMcg::YCap(k) => {
            if k < 2 || k > g {
                return Err(bad());
            }
            let mut w = Vec::new();
            for j in (1..k).rev() {
                w.extend(tk(j)?);
            }
            for j in 1..k {
                w.extend(tk(j)?);
            }
            w
        }
        NamedMcg::WCap(k) => {
            if k < 2 || k > g {
                return Err(bad());
            }
            let mut base = Vec::new();
            for j in 1..k {
                base.extend(tk(j)?);
            }
            base.repeat(k)
        }
        NamedMcg::DU(k) => du(g, k, false)?,
        NamedMcg::Dg => du(g, g, false)?,
        NamedMcg::DgSym => du(g, g, true)?,
        NamedMcg::DgPrime | NamedMcg::DgSymPrime => {
            let sym = matches!(spec, NamedMcg::DgSymPrime);
            let y = named_ids(g, NamedMcg::Y(top + 1))?;
            conj(&du(g, g, sym)?, &y)
        }
    })
}

fn du(g: usize, k: usize, sym: bool) -> Result<Vec<i32>, SurfaceError> {
    if k < 2 || k > g {
        return Err(SurfaceError::IndexOutOfRange(format!("d_{k} via u in genus {g}")));
    }
    let mut u = Vec::new();
    for i in 1..k {
        u.extend(named_ids(g, if sym { NamedMcg::USym(i) } else { NamedMcg::U(i) })?);
    }
    Ok(seq(&[inv(&u), vec![1], u]))
}

pub fn named_mcg(spec: NamedMcg, g: usize) -> Result<McgWord, SurfaceError> {
    Ok(McgWord::from_ids(g, &named_ids(g, spec)?))
}

pub fn parse_named(sym: &str) -> Option<NamedMcg> {
    match sym {
        "ybar" => return Some(NamedMcg::YBar),
        "dg" => return Some(NamedMcg::Dg),
        "dgp" => return Some(NamedMcg::DgPrime),
        "dgs" => return Some(NamedMcg::DgSym),
        "dgsp" => return Some(NamedMcg::DgSymPrime),
        _ => {}
    }
    let open = sym.find('(')?;
    let k: usize = sym[open + 1..].strip_suffix(')')?.trim().parse().ok()?;
    Some(match &sym[..open] {
        "y" => NamedMcg::Y(k),
        "yalt" => NamedMcg::YAlt(k),
        "w" => NamedMcg::W(k),
        "t" => NamedMcg::T(k),
        "tp" => NamedMcg::TPrime(k),
        "d" => NamedMcg::D(k),
        "dp" => NamedMcg::DPrime(k),
        "g1" => NamedMcg::G1(k),
        "g2" => NamedMcg::G2(k),
        "g1p" => NamedMcg::G1Prime(k),
        "g2p" => NamedMcg::G2Prime(k),
        "v" => NamedMcg::V(k),
        "u" => NamedMcg::U(k),
        "us" => NamedMcg::USym(k),
        "Ycap" => NamedMcg::YCap(k),
        "Wcap" => NamedMcg::WCap(k),
        "du" => NamedMcg::DU(k),
        _ => return None,
    })
}

/// Expand generators and macros into an [`McgWord`].
pub fn expand(g: usize, w: &Word) -> Result<McgWord, SurfaceError> {
    let mut ids = Vec::new();
    for (sym, e) in w.letters() {
        let base = match parse_named(sym) {
            Some(spec) => named_ids(g, spec)?,
            None => vec![gen_id(g, sym)?],
        };
        let k = e.to_i64().ok_or_else(|| SurfaceError::Word(WordError::Parse("exponent".into())))?;
        let piece = if k < 0 { inv(&base) } else { base };
        for _ in 0..k.unsigned_abs() {
            ids.extend(&piece);
        }
    }
    Ok(McgWord::from_ids(g, &ids))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn y5_palindromic() {
        assert_eq!(named_mcg(NamedMcg::Y(5), 3).unwrap().to_string(), "a4 a3 a2 a1^2 a2 a3 a4");
    }

    #[test]
    fn d3_as_printed() {
        let d3 = named_mcg(NamedMcg::D(3), 3).unwrap();
        let printed = McgWord::parse(3, "t(1)^-1 t(2)^-1 d2 t(2) t(1) t(2)^-1 d2 t(2) d2 a1^-1 a3^-1 a5^-1").unwrap();
        assert_eq!(d3, printed);
    }

    #[test]
    fn v1_is_dprime() {
        assert_eq!(named_mcg(NamedMcg::V(1), 3).unwrap(), named_mcg(NamedMcg::DPrime(2), 3).unwrap());
    }

    #[test]
    fn ranges() {
        assert!(named_mcg(NamedMcg::T(2), 2).is_err());
        assert!(named_mcg(NamedMcg::D(4), 3).is_err());
    }
}
