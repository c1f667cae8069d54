//! The concrete elements `(±1, trivial)` acting on Γ_{g,1} and Γ_{g,0}.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::GtError;
use crate::report::{CaseReport, Status, SuiteReport};
use crate::surface::suite::{presentation_cases, relation_d_cases, Surface};
use crate::surface::{Mcg, McgWord};

/// `λ` formal or concrete; `f` formal or trivial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GtElementSpec {
    pub lambda: Option<i64>,
    pub f_trivial: bool,
}

impl GtElementSpec {
    pub const FORMAL: GtElementSpec = GtElementSpec { lambda: None, f_trivial: false };

    pub fn concrete(lambda: i64) -> Result<GtElementSpec, GtError> {
        if lambda != 1 && lambda != -1 {
            return Err(GtError::NonConcreteSpec);
        }
        Ok(GtElementSpec { lambda: Some(lambda), f_trivial: true })
    }

    /// `λ` when the element can be evaluated.
    pub fn concrete_lambda(&self) -> Result<i64, GtError> {
        match self.lambda {
            Some(l) if self.f_trivial && (l == 1 || l == -1) => Ok(l),
            _ => Err(GtError::NonConcreteSpec),
        }
    }
}

impl fmt::Display for GtElementSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.lambda.map_or("λ".to_string(), |l| l.to_string());
        let fs = if self.f_trivial { "trivial" } else { "f" };
        write!(f, "({l},{fs})")
    }
}

/// Every generator goes to its `λ`-th power; on generator letters that is
/// the identity or the sign flip.
fn image(w: &McgWord, lambda: i64) -> McgWord {
    let ids: Vec<i32> = w.ids().into_iter().map(|x| if lambda == 1 { x } else { -x }).collect();
    McgWord::from_ids(w.genus, &ids)
}

/// Relation images and surjectivity witnesses for `(λ, trivial)`.
pub fn verify_concrete_automorphism(lambda: i64, g: usize, surface: Surface) -> Result<SuiteReport, GtError> {
    GtElementSpec::concrete(lambda)?;
    let mcg = Mcg::new(g).map_err(|e| GtError::Context(e.to_string()))?;
    let mut cases = presentation_cases(g);
    if surface == Surface::G0 {
        cases.extend(relation_d_cases(g).into_iter().filter(|c| c.id == "D"));
    }
    let equal = |u: &McgWord, v: &McgWord| match surface {
        Surface::G1 => mcg.mcg_equal_g1(u, v),
        Surface::G0 => mcg.mcg_equal_g0(u, v),
    };
    let mut out = Vec::new();
    for c in &cases {
        let res = (|| {
            let l = McgWord::parse(g, &c.lhs)?;
            let r = McgWord::parse(g, &c.rhs)?;
            equal(&image(&l, lambda), &image(&r, lambda))
        })();
        let (status, detail) = match res {
            Ok(true) => (Status::Pass, String::new()),
            Ok(false) => (Status::Fail, "relation image is nontrivial".to_string()),
            Err(e) => (Status::Fail, e.to_string()),
        };
        out.push(CaseReport {
            case: format!("relation:{}", c.id),
            genus: Some(g),
            strands: None,
            status,
            witness: Some(format!("{} = {}", c.lhs, c.rhs)),
            detail,
        });
    }
    let mut gens: Vec<String> = (1..=2 * g).map(|i| format!("a{i}")).collect();
    gens.push("d2".into());
    for x in gens {
        // x^λ is a preimage of x
        let pre = McgWord::parse(g, &format!("{x}^{lambda}")).map_err(|e| GtError::Context(e.to_string()))?;
        let target = McgWord::parse(g, &x).map_err(|e| GtError::Context(e.to_string()))?;
        let ok = equal(&image(&pre, lambda), &target).unwrap_or(false);
        out.push(CaseReport {
            case: format!("onto:{x}"),
            genus: Some(g),
            strands: None,
            status: if ok { Status::Pass } else { Status::Fail },
            witness: Some(format!("preimage {pre}")),
            detail: String::new(),
        });
    }
    let tag = match surface {
        Surface::G0 => "g0",
        Surface::G1 => "g1",
    };
    Ok(SuiteReport::new(&format!("concrete-lambda{lambda}-g{g}-{tag}"), out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_passes_g2() {
        assert!(verify_concrete_automorphism(1, 2, Surface::G1).unwrap().passed());
    }

    #[test]
    fn formal_lambda_rejected() {
        assert!(verify_concrete_automorphism(3, 2, Surface::G1).is_err());
        assert!(GtElementSpec::FORMAL.concrete_lambda().is_err());
    }
}
