//! λ-affine exponents `(p + qλ)/2`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::GtError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LambdaExp {
    pub p: i64,
    pub q: i64,
}

impl LambdaExp {
    pub const ZERO: LambdaExp = LambdaExp { p: 0, q: 0 };
    pub const ONE: LambdaExp = LambdaExp { p: 2, q: 0 };
    pub const LAMBDA: LambdaExp = LambdaExp { p: 0, q: 2 };
    /// `m = (λ-1)/2`.
    pub const M: LambdaExp = LambdaExp { p: -1, q: 1 };

    pub fn new(p: i64, q: i64) -> Result<LambdaExp, GtError> {
        if (p - q).rem_euclid(2) != 0 {
            return Err(GtError::Parse(format!("exponent ({p},{q}) needs p and q of equal parity")));
        }
        Ok(LambdaExp { p, q })
    }

    pub fn int(k: i64) -> LambdaExp {
        LambdaExp { p: 2 * k, q: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.p == 0 && self.q == 0
    }

    pub fn is_integer(&self) -> bool {
        self.q == 0
    }

    pub fn as_integer(&self) -> Option<i64> {
        (self.q == 0).then_some(self.p / 2)
    }

    pub fn scale(&self, k: i64) -> LambdaExp {
        LambdaExp { p: self.p * k, q: self.q * k }
    }

    /// Value at an odd λ.
    pub fn eval(&self, lambda: i64) -> i64 {
        (self.p + self.q * lambda) / 2
    }

    /// `self / k` when exact.
    pub fn div(&self, k: i64) -> Option<LambdaExp> {
        if k == 0 {
            return None;
        }
        // (p + qλ)/2 / k = (p/k + (q/k)λ)/2
        if self.p % k == 0 && self.q % k == 0 {
            LambdaExp::new(self.p / k, self.q / k).ok()
        } else {
            None
        }
    }
}

impl Add for LambdaExp {
    type Output = LambdaExp;
    fn add(self, o: LambdaExp) -> LambdaExp {
        LambdaExp { p: self.p + o.p, q: self.q + o.q }
    }
}

impl Sub for LambdaExp {
    type Output = LambdaExp;
    fn sub(self, o: LambdaExp) -> LambdaExp {
        self + (-o)
    }
}

impl Neg for LambdaExp {
    type Output = LambdaExp;
    fn neg(self) -> LambdaExp {
        LambdaExp { p: -self.p, q: -self.q }
    }
}

fn coeff(k: i64, sym: &str) -> String {
    match k {
        1 => sym.to_string(),
        -1 => format!("-{sym}"),
        _ => format!("{k}{sym}"),
    }
}

impl fmt::Display for LambdaExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = (self.p, self.q);
        if q == 0 {
            write!(f, "{}", p / 2)
        } else if p == 0 && q % 2 == 0 {
            f.write_str(&coeff(q / 2, "L"))
        } else if p == -q {
            f.write_str(&coeff(q, "M"))
        } else {
            write!(f, "({p},{q})")
        }
    }
}

impl FromStr for LambdaExp {
    type Err = GtError;

    /// `3`, `L`, `-2M`, `(p,q)`.
    fn from_str(s: &str) -> Result<LambdaExp, GtError> {
        let s = s.trim();
        let bad = || GtError::Parse(format!("bad exponent `{s}`"));
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let (a, b) = inner.split_once(',').ok_or_else(bad)?;
            return LambdaExp::new(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
        }
        if let Ok(k) = s.parse::<i64>() {
            return Ok(LambdaExp::int(k));
        }
        let (num, unit) = if let Some(n) = s.strip_suffix('L') {
            (n, LambdaExp::LAMBDA)
        } else if let Some(n) = s.strip_suffix('M') {
            (n, LambdaExp::M)
        } else {
            return Err(bad());
        };
        let k = match num {
            "" | "+" => 1,
            "-" => -1,
            n => n.parse::<i64>().map_err(|_| bad())?,
        };
        Ok(unit.scale(k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in ["L", "-L", "M", "-M", "2M", "3", "-1", "(1,3)", "2L"] {
            let e: LambdaExp = s.parse().unwrap();
            assert_eq!(e.to_string(), s);
        }
        assert!("(1,2)".parse::<LambdaExp>().is_err());
    }

    #[test]
    fn lambda_is_two_m_plus_one() {
        let m = LambdaExp::M;
        assert_eq!(m + m + LambdaExp::ONE, LambdaExp::LAMBDA);
        assert_eq!(m.eval(-1), -1);
        assert_eq!(LambdaExp::LAMBDA.eval(-1), -1);
    }
}
