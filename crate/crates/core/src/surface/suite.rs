//! Identity suites for Γ_{g,1} and Γ_{g,0}: the presentation, the lanterns,
//! the ι-kernel and the named-element identities.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{group, letters_to_word, Mcg, McgWord, SurfaceError};
use crate::braid::{named_braid, NamedBraid};
use crate::report::{CaseReport, Status, SuiteReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Surface {
    G0,
    G1,
}

impl std::str::FromStr for Surface {
    type Err = String;
    fn from_str(s: &str) -> Result<Surface, String> {
        match s {
            "g0" => Ok(Surface::G0),
            "g1" => Ok(Surface::G1),
            _ => Err(format!("unknown surface {s:?} (expected g0 or g1)")),
        }
    }
}

/// `lhs = rhs` in Γ_{g,1}, or in Γ_{g,0} when `surface` is `G0`.
#[derive(Debug, Clone)]
pub struct McgCase {
    pub id: String,
    pub genus: usize,
    pub lhs: String,
    pub rhs: String,
    pub surface: Surface,
}

fn eq(id: impl Into<String>, g: usize, lhs: impl Into<String>, rhs: impl Into<String>) -> McgCase {
    McgCase { id: id.into(), genus: g, lhs: lhs.into(), rhs: rhs.into(), surface: Surface::G1 }
}

fn commutes(id: impl Into<String>, g: usize, x: &str, y: &str) -> McgCase {
    eq(id, g, format!("{x} {y}"), format!("{y} {x}"))
}

fn inv(x: &str) -> String {
    format!("({x})^-1")
}

/// Relations (A), (B), (C), (C′) of the presentation.
pub fn presentation_cases(g: usize) -> Vec<McgCase> {
    let mut v = Vec::new();
    let top = 2 * g;
    for i in 1..top {
        let (x, y) = (format!("a{i}"), format!("a{}", i + 1));
        v.push(eq(format!("A:braid:a{i}"), g, format!("{x} {y} {x}"), format!("{y} {x} {y}")));
    }
    for i in 1..=top {
        for j in i + 2..=top {
            v.push(commutes(format!("A:commute:a{i}-a{j}"), g, &format!("a{i}"), &format!("a{j}")));
        }
    }
    v.push(eq("A:braid:d-a4", g, "d2 a4 d2", "a4 d2 a4"));
    for j in (1..=top).filter(|&j| j != 4) {
        v.push(commutes(format!("A:commute:d-a{j}"), g, "d2", &format!("a{j}")));
    }
    v.push(eq("B", g, "d2 dp(2)", "(a1 a2 a3)^4"));
    if g >= 3 {
        v.push(eq("C", g, "d(3) a6 d(3)", "a6 d(3) a6"));
    }
    if g >= 4 {
        let c = "t(2) t(1) t(3) t(2) d2 (t(2) t(1) t(3) t(2))^-1";
        v.push(commutes("Cprime", g, "dp(2)", c));
    }
    v
}

/// The lantern relations, with `d_{i+1}` taken from its independent
/// expression through the `u_j` so that the recursion is not circular.
pub fn lantern_cases(g: usize) -> Vec<McgCase> {
    let mut v = Vec::new();
    if g >= 3 {
        v.push(eq("lantern", g, "g2(2) g1(2) d2", "a1 a3 a5 du(3)"));
    }
    for i in 3..g {
        v.push(eq(
            format!("lantern-i:{i}"),
            g,
            format!("g2({i}) g1({i}) d({i})"),
            format!("d({}) a{} a{} du({})", i - 1, 2 * i - 1, 2 * i + 1, i + 1),
        ));
    }
    for k in 2..=g {
        v.push(eq(format!("d-via-u:{k}"), g, format!("d({k})"), format!("du({k})")));
    }
    v
}

/// `ι_k(ω_{2k-1}) = ι_k(η_{2k})` for `3 <= k <= g+1`.
pub fn iota_kernel_cases(g: usize) -> Vec<McgCase> {
    let mut v = Vec::new();
    for k in 3..=g + 1 {
        let n = 2 * k;
        let image = |spec: NamedBraid| -> String {
            let b = named_braid(spec, n).expect("in range");
            b.letters()
                .iter()
                .map(|&s| {
                    let name = if s.unsigned_abs() as usize == n - 1 { format!("d({})", k - 1) } else { format!("a{}", s.abs()) };
                    if s > 0 {
                        name
                    } else {
                        inv(&name)
                    }
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        v.push(eq(format!("iota-kernel:{k}"), g, image(NamedBraid::Omega(n - 1)), image(NamedBraid::Eta(n))));
    }
    v
}

/// Named-element identities used by the GT arguments.
pub fn identity_cases(g: usize) -> Vec<McgCase> {
    let mut v = Vec::new();
    for i in 1..=g {
        v.push(eq(format!("dd-prime:{i}"), g, format!("d({i}) dp({i})"), format!("w({})", 2 * i)));
    }
    for i in 2..=4 {
        v.push(commutes(format!("y-commute:{i}-d"), g, &format!("y({i})"), "d2"));
        v.push(commutes(format!("y-commute:{i}-dp"), g, &format!("y({i})"), "dp(2)"));
    }
    for i in 5..=2 * g + 1 {
        v.push(commutes(format!("y-commute:{i}-d"), g, &format!("y({i})^2"), "d2"));
        v.push(commutes(format!("y-commute:{i}-dp"), g, &format!("y({i})^2"), "dp(2)"));
        v.push(eq(format!("y-conj:{i}"), g, format!("y({i}) d2 y({i})^-1"), "dp(2)"));
        v.push(eq(format!("y-conj-inv:{i}"), g, format!("y({i})^-1 d2 y({i})"), "dp(2)"));
        v.push(eq(format!("anti-commute:{i}"), g, format!("y({i}) d2^-1 dp(2)"), format!("d2 dp(2)^-1 y({i})")));
    }
    for i in 2..=g {
        let odd: Vec<String> = (1..=i).map(|j| format!("a{}^2", 2 * j - 1)).collect();
        v.push(eq(format!("prop-w:{i}"), g, format!("w({})", 2 * i), format!("Wcap({i}) {}", odd.join(" "))));
    }
    for i in 2..g {
        v.push(eq(format!("prop-g1:{i}"), g, format!("g1({i}) g1p({i})"), format!("t({i})^-1 w({}) t({i})", 2 * i)));
        v.push(eq(
            format!("prop-g2:{i}"),
            g,
            format!("g2({i}) g2p({i})"),
            format!("t({i})^2 a{}^2 a{}^2", 2 * i - 1, 2 * i + 1),
        ));
    }
    for i in 2..g {
        for j in (1..=g).filter(|&j| j != i) {
            for gi in ["g1", "g2"] {
                v.push(commutes(format!("exlemma-ii:d{j}-{gi}({i})"), g, &format!("d({j})"), &format!("{gi}({i})")));
                v.push(commutes(format!("exlemma-ii:w{}-{gi}({i})", 2 * j), g, &format!("w({})", 2 * j), &format!("{gi}({i})")));
            }
        }
    }
    if g >= 3 {
        v.push(eq("w6-conj:d", g, "w(6) d2 w(6)^-1", "d2"));
        v.push(eq("w6-conj:dp", g, "w(6) dp(2) w(6)^-1", "dp(2)"));
        v.push(eq("w6-factor", g, "w(6)", "y(6) y(5) y(4) y(3) y(2)"));
    }
    v
}

/// Relation (D) with both readings of `u_i`; only the printed one is required.
pub fn relation_d_cases(g: usize) -> Vec<McgCase> {
    let g0 = |id: &str, l: &str, r: &str| McgCase { id: id.into(), genus: g, lhs: l.into(), rhs: r.into(), surface: Surface::G0 };
    vec![g0("D", "dgp", "dg"), g0("D-symmetric-u", "dgsp", "dgs")]
}

pub fn mcg_cases(g: usize, surface: Surface) -> Vec<McgCase> {
    let mut v = presentation_cases(g);
    v.extend(lantern_cases(g));
    v.extend(iota_kernel_cases(g));
    v.extend(identity_cases(g));
    if surface == Surface::G0 {
        v.extend(relation_d_cases(g));
    }
    v
}

fn check(mcg: &Mcg, c: &McgCase) -> Result<(bool, Option<String>), SurfaceError> {
    let l = McgWord::parse(c.genus, &c.lhs)?;
    let r = McgWord::parse(c.genus, &c.rhs)?;
    match c.surface {
        Surface::G1 => Ok((mcg.mcg_equal_g1(&l, &r)?, None)),
        Surface::G0 => match mcg.g0_witness(&l, &r)? {
            Some(conj) => {
                // recheck the conjugator independently of the search
                let phi = mcg.induced_ids(&[l.ids(), r.inverse().ids()].concat());
                let grp = mcg.group();
                let ok = phi.images.iter().enumerate().all(|(i, img)| {
                    let x = [(i + 1) as i32];
                    grp.equal(img, &group::concat(&[&conj, &x, &group::inverse(&conj)]))
                });
                Ok((ok, Some(letters_to_word(&conj).to_string())))
            }
            None => Ok((false, None)),
        },
    }
}

pub fn check_case(mcg: &Mcg, c: &McgCase) -> CaseReport {
    let t0 = Instant::now();
    let (status, conj, detail) = match check(mcg, c) {
        Ok((true, conj)) => (Status::Pass, conj, String::new()),
        Ok((false, _)) => (Status::Fail, None, "not equal".to_string()),
        Err(e @ SurfaceError::SearchBudgetExceeded(_)) => (Status::Inconclusive, None, e.to_string()),
        Err(e) => (Status::Fail, None, e.to_string()),
    };
    let mut witness = format!("{} = {}", c.lhs, c.rhs);
    if let Some(k) = conj {
        witness.push_str(&format!("; conjugator {k}"));
    }
    CaseReport {
        case: c.id.clone(),
        genus: Some(c.genus),
        strands: None,
        status,
        witness: Some(witness),
        detail: if detail.is_empty() { format!("{:.1} ms", t0.elapsed().as_secs_f64() * 1e3) } else { detail },
    }
}

/// Run the suite for genus `g`, or only cases whose id starts with `filter`.
pub fn verify_mcg_suite(g: usize, surface: Surface, filter: Option<&str>) -> Result<SuiteReport, SurfaceError> {
    let mcg = Mcg::new(g)?;
    let cases = mcg_cases(g, surface)
        .iter()
        .filter(|c| filter.is_none_or(|f| c.id.starts_with(f)))
        .map(|c| check_case(&mcg, c))
        .collect();
    let name = match surface {
        Surface::G0 => format!("mcg-g{g}-closed"),
        Surface::G1 => format!("mcg-g{g}"),
    };
    Ok(SuiteReport::new(&name, cases))
}
