use proptest::prelude::*;
use twistlab::gt::{check_script, Corpus, GTWord, LambdaExp, ProofScript, ScriptReport};
use twistlab::report::Status;

fn check(text: &str) -> ScriptReport {
    check_script(&ProofScript::parse("inline", text).unwrap(), None)
}

proptest! {
    #[test]
    fn exponents_round_trip(p in -20i64..20, q in -20i64..20) {
        let q = if (p - q) % 2 == 0 { q } else { q + 1 };
        let e = LambdaExp::new(p, q).unwrap();
        prop_assert_eq!(e.to_string().parse::<LambdaExp>().unwrap(), e);
        prop_assert_eq!((e + e).eval(3), 2 * e.eval(3));
    }
}

#[test]
fn lambda_is_two_m_plus_one() {
    assert_eq!(LambdaExp::M.scale(2) + LambdaExp::ONE, LambdaExp::LAMBDA);
    assert!(LambdaExp::new(1, 2).is_err());
    assert_eq!(LambdaExp::M.eval(5), 2);
}

#[test]
fn canonical_form_keeps_order() {
    let w = GTWord::parse("a1^M a1 a1^M f(a1;a2) a2 a2^-1").unwrap().canonical();
    assert_eq!(w.to_string(), "a1^L f(a1;a2)");
}

#[test]
fn oracle_commutation_is_checked() {
    let good = "context braid n=4\ngoal c: s1^L s3^L = s3^L s1^L\nstep comm at 0..2\nqed\n";
    assert_eq!(check(good).status, Status::Pass);
    let bad = "context braid n=4\ngoal c: s1^L s2^L = s2^L s1^L\nstep comm at 0..2\nqed\n";
    let r = check(bad);
    assert_eq!(r.status, Status::Fail);
    assert_eq!(r.unjustified(), 1);
}

#[test]
fn hexagon_needs_a_central_product() {
    // s1^2 s2^2 is not central in B_3
    let text = "context braid n=3\ngoal h: f(s1^2;s2^2) s1^2M = f(s1^2;s2^2) s1^2M\nstep hex x=s1^2 y=s2^2 z=s1^2 at 0..2\nqed\n";
    let r = check(text);
    assert!(r.steps.iter().any(|s| s.status != Status::Pass));
}

#[test]
fn corpus_checks_and_is_deterministic() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../scripts");
    let corpus = Corpus::load_dir(&dir).unwrap();
    let a = corpus.check("F-d3").unwrap();
    let b = corpus.check("F-d3").unwrap();
    assert_eq!(a, b);
    assert_eq!(a.status, Status::Pass);
    assert_eq!(a.final_line(), "F(d3) = d3^L");
}

#[test]
fn reports_round_trip_through_json() {
    let r = check("context braid n=3\ngoal t: s1^L = s1^L\nqed\n");
    let back: ScriptReport = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn missing_lemma_is_an_error() {
    let r = check("context braid n=3\ngoal t: s1^L = s2^L\nstep use at 0..1 by lemma:nowhere\nqed\n");
    assert_eq!(r.status, Status::Fail);
}
