//! Braid-level identities used throughout the paper's arguments.

use std::time::Instant;

use super::{braid_equal, expand, BraidError};
use crate::report::{CaseReport, Status, SuiteReport};
use crate::word::parse_word;

/// One identity `lhs = rhs` in `B_n`; `holds = false` marks an asserted inequality.
#[derive(Debug, Clone)]
pub struct BraidCase {
    pub id: String,
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

fn case(id: impl Into<String>, n: usize, lhs: impl Into<String>, rhs: impl Into<String>) -> BraidCase {
    BraidCase { id: id.into(), n, lhs: lhs.into(), rhs: rhs.into(), holds: true }
}

fn commutes(id: impl Into<String>, n: usize, x: &str, y: &str) -> BraidCase {
    case(id, n, format!("{x} {y}"), format!("{y} {x}"))
}

fn join(parts: impl IntoIterator<Item = String>) -> String {
    parts.into_iter().collect::<Vec<_>>().join(" ")
}

pub fn braid_cases() -> Vec<BraidCase> {
    let mut v = Vec::new();
    for i in 3..=8 {
        v.push(case(format!("omega-eta-product:{i}"), 8, format!("omega({i})"), join((2..=i).map(|j| format!("eta({j})")))));
    }
    for k in 1..=4 {
        v.push(case(
            format!("omega-even-step:{k}"),
            8,
            format!("omega({})", 2 * k),
            format!("omega({}) eta({})", 2 * k - 1, 2 * k),
        ));
    }
    for k in 2..=4 {
        let s = 2 * k - 1;
        v.push(case(format!("eta-even-conj:{k}"), 8, format!("eta({})", 2 * k), format!("s{s} eta({s}) s{s}")));
    }
    v.push(case("tausigmas-T1234", 8, "T[1..4]", "tau(1)^2 s1^2 s3^2"));
    v.push(case("tausigmas-T3456", 8, "T[3..6]", "tau(2)^2 s3^2 s5^2"));
    v.push(case("tausigmas-T5678", 8, "T[5..8]", "tau(3)^2 s5^2 s7^2"));
    v.push(BraidCase { holds: false, ..case("tausigmas-T5678-erratum", 8, "T[5..8]", "tau(3)^2 s5^2 s6^2") });
    v.push(case("T5678-restated", 8, "T[5..8]", "s5^2 s7^2 tau(3)^2"));
    v.push(case("T123456-expansion", 8, "T[1..6]", "tau(1)^2 tau(2) tau(1)^2 tau(2) s1^2 s3^2 s5^2"));
    v.push(case("goodform", 8, "tau(2) tau(1)^2 tau(2)", "Y(3)"));
    v.push(case("w4-factorization", 4, "s1^2 s3^2 tau(1)^2", "(s1 s2 s3)^4"));
    v.push(case("half-twist", 4, "s1 s2 s1 s3 s2 s1", "(s2 s1 s3)^2"));
    for j in 2..=6 {
        for i in 1..=5 {
            if i != j {
                v.push(commutes(format!("exLemma-i:W{j}-t{i}"), 12, &format!("W({j})"), &format!("tau({i})")));
            }
        }
    }
    for i in 1..=4 {
        v.push(case(
            format!("exLemma-iii:{i}"),
            12,
            format!("tau({i}) W({i}) tau({i}) W({i})"),
            format!("W({}) W({})", i + 1, i - 1),
        ));
        v.push(case(
            format!("exLemma-iv:{i}"),
            12,
            format!("tau({i}) eta({}) eta({}) tau({i})", 2 * i, 2 * i - 1),
            format!("eta({}) eta({})", 2 * i + 2, 2 * i + 1),
        ));
        v.push(case(
            format!("exLemma-iv-ribbon:{i}"),
            12,
            format!("eta({}) eta({})", 2 * i + 2, 2 * i + 1),
            format!("Y({}) s{}^2", i + 1, 2 * i + 1),
        ));
    }
    for k in 2..=6 {
        v.push(case(format!("W-as-Y-product:{k}"), 12, format!("W({k})"), join((2..=k).map(|j| format!("Y({j})")))));
    }
    for i in 1..=4 {
        v.push(case(
            format!("ribbon-braid:{i}"),
            12,
            format!("tau({i}) tau({}) tau({i})", i + 1),
            format!("tau({}) tau({i}) tau({})", i + 1, i + 1),
        ));
    }
    for i in 1..=5 {
        for j in i + 2..=5 {
            v.push(commutes(format!("ribbon-commute:{i}-{j}"), 12, &format!("tau({i})"), &format!("tau({j})")));
        }
    }
    // the three A-moves of the n = 8 path: lost/gained twists commute across moves
    let moves = [("T[1..3]", "T[3..4]"), ("T[1..5]", "T[5..6]"), ("T[1..7]", "T[7..8]")];
    for (a, (la, ga)) in moves.iter().enumerate() {
        for (b, (lb, gb)) in moves.iter().enumerate() {
            if a < b {
                for (x, y) in [(la, gb), (ga, lb), (ga, gb)] {
                    v.push(commutes(format!("amove-commute:{}-{}:{x}-{y}", a + 1, b + 1), 8, x, y));
                }
            }
        }
    }
    for (i, (l, _)) in moves.iter().enumerate() {
        let j = 2 * i + 3;
        v.push(case(format!("amove-reduction:{j}"), 8, l.to_string(), format!("omega({}) eta({j})", j - 1)));
    }
    v.sort_by(|a, b| a.id.cmp(&b.id));
    v
}

/// Expand `(x y)^k` groups, then macros.
fn parse_side(text: &str, n: usize) -> Result<super::Braid, BraidError> {
    let mut out = String::new();
    let mut rest = text.trim();
    while let Some(open) = rest.find("(s") {
        out.push_str(&rest[..open]);
        let close = rest[open..].find(')').map(|c| c + open).expect("balanced");
        let inner = &rest[open + 1..close];
        let after = &rest[close + 1..];
        let (k, tail) = match after.strip_prefix('^') {
            Some(t) => {
                let end = t.find(|c: char| !c.is_ascii_digit()).unwrap_or(t.len());
                (t[..end].parse::<usize>().expect("power"), &t[end..])
            }
            None => (1, after),
        };
        for _ in 0..k {
            out.push(' ');
            out.push_str(inner);
        }
        rest = tail;
    }
    out.push_str(rest);
    expand(&parse_word(&out)?, n)
}

pub fn check_case(c: &BraidCase) -> CaseReport {
    let t0 = Instant::now();
    let res = parse_side(&c.lhs, c.n)
        .and_then(|l| parse_side(&c.rhs, c.n).and_then(|r| braid_equal(&l, &r)));
    let (status, detail) = match res {
        Ok(eq) if eq == c.holds => (Status::Pass, String::new()),
        Ok(eq) => (Status::Fail, format!("expected equal={} got {}", c.holds, eq)),
        Err(e) => (Status::Fail, e.to_string()),
    };
    let rel = if c.holds { "=" } else { "!=" };
    CaseReport {
        case: c.id.clone(),
        genus: None,
        strands: Some(c.n),
        status,
        witness: Some(format!("{} {rel} {}", c.lhs, c.rhs)),
        detail: if detail.is_empty() { format!("{:.1} ms", t0.elapsed().as_secs_f64() * 1e3) } else { detail },
    }
}

/// Run every case, or only those whose id starts with `filter`.
pub fn verify_braid_suite(filter: Option<&str>) -> SuiteReport {
    let cases = braid_cases()
        .iter()
        .filter(|c| filter.is_none_or(|f| c.id.starts_with(f)))
        .map(check_case)
        .collect();
    SuiteReport::new("braid", cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_groups() {
        let b = parse_side("(s1 s2)^3", 3).unwrap();
        assert_eq!(b.letters(), vec![1, 2, 1, 2, 1, 2]);
    }
}
