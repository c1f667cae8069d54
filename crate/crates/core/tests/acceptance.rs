//! Acceptance run: one PASS/FAIL line per criterion. Exits nonzero if any
//! criterion fails.

mod common;

use std::collections::{HashSet, VecDeque};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twistlab::braid::suite::verify_braid_suite;
use twistlab::bracketing::{amove_path, enumerate_maximal, path_conjugator, Bracketing};
use twistlab::cli::haiku_suite;
use twistlab::gt::script::Corpus;
use twistlab::gt::verify_concrete_automorphism;
use twistlab::report::{CaseReport, Status};
use twistlab::surface::suite::{check_case, iota_kernel_cases, lantern_cases, presentation_cases, relation_d_cases, Surface};
use twistlab::surface::symplectic::symplectic_image;
use twistlab::surface::{Mcg, McgWord};

struct Line {
    ok: bool,
    detail: String,
}

fn line(ok: bool, detail: impl Into<String>) -> Line {
    Line { ok, detail: detail.into() }
}

fn failures(cases: &[CaseReport]) -> Vec<String> {
    cases.iter().filter(|c| c.status != Status::Pass).map(|c| format!("{} ({})", c.case, c.detail)).collect()
}

fn scripts_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scripts")
}

fn braid_suite() -> Line {
    let t0 = Instant::now();
    let r = verify_braid_suite(None);
    let secs = t0.elapsed().as_secs_f64();
    let required = ["tausigmas", "w4-factorization", "half-twist", "exLemma-i", "exLemma-iii", "exLemma-iv"];
    let missing: Vec<_> = required.iter().filter(|p| !r.cases.iter().any(|c| c.case.starts_with(*p))).collect();
    let bad = failures(&r.cases);
    let ok = bad.is_empty() && missing.is_empty() && r.cases.len() >= 14 && secs < 10.0;
    line(ok, format!("{} cases, {} failing, missing families {missing:?}, {secs:.2} s", r.cases.len(), bad.len()))
}

fn garside_cross_validation() -> Line {
    let (b3_bad, b3_pairs) = common::b3_disagreements(10);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (b4_bad, b4_equal) = common::b4_disagreements(&mut rng, 500);
    line(
        b3_bad == 0 && b4_bad == 0,
        format!("B3: {b3_pairs} pairs, {b3_bad} disagreements; B4: 500 pairs ({b4_equal} equal), {b4_bad} disagreements"),
    )
}

fn presentation() -> Line {
    let mut parts = Vec::new();
    let mut ok = true;
    for g in 2..=5 {
        let t0 = Instant::now();
        let mcg = Mcg::new(g).expect("genus in range");
        let cases = presentation_cases(g);
        let reps: Vec<_> = cases.iter().map(|c| check_case(&mcg, c)).collect();
        let secs = t0.elapsed().as_secs_f64();
        let has = |p: &str| cases.iter().any(|c| c.id.starts_with(p));
        let mut need = vec!["A:", "B"];
        if g >= 3 {
            need.push("C");
        }
        if g >= 4 {
            need.push("Cprime");
        }
        let bad = failures(&reps);
        let g_ok = bad.is_empty() && need.iter().all(|p| has(p)) && secs < 60.0;
        ok &= g_ok;
        parts.push(format!("g={g}: {} relations {} ({secs:.2} s)", reps.len(), if g_ok { "ok" } else { "FAILED" }));
    }
    line(ok, parts.join("; "))
}

fn lanterns() -> Line {
    let mut parts = Vec::new();
    let mut ok = true;
    for (g, want) in [(3, vec!["lantern".to_string()]), (5, (3..5).map(|i| format!("lantern-i:{i}")).collect())] {
        let mcg = Mcg::new(g).expect("genus in range");
        let cases: Vec<_> = lantern_cases(g).into_iter().filter(|c| want.contains(&c.id)).collect();
        let reps: Vec<_> = cases.iter().map(|c| check_case(&mcg, c)).collect();
        let g_ok = reps.len() == want.len() && failures(&reps).is_empty();
        ok &= g_ok;
        parts.push(format!("g={g}: {} of {} pass", reps.iter().filter(|r| r.status == Status::Pass).count(), want.len()));
    }
    line(ok, parts.join("; "))
}

fn iota_kernel() -> Line {
    let mut parts = Vec::new();
    let mut ok = true;
    for g in [2, 3] {
        let mcg = Mcg::new(g).expect("genus in range");
        let cases = iota_kernel_cases(g);
        let reps: Vec<_> = cases.iter().map(|c| check_case(&mcg, c)).collect();
        let g_ok = reps.len() == g - 1 && failures(&reps).is_empty();
        ok &= g_ok;
        parts.push(format!("g={g}: k=3..{} {}", g + 1, if g_ok { "trivial" } else { "FAILED" }));
    }
    line(ok, parts.join("; "))
}

fn relation_d() -> Line {
    let mut parts = Vec::new();
    let mut ok = true;
    for g in [2, 3] {
        let mcg = Mcg::new(g).expect("genus in range");
        let c = relation_d_cases(g).into_iter().find(|c| c.id == "D").expect("relation D");
        let r = check_case(&mcg, &c);
        let witnessed = r.witness.as_deref().is_some_and(|w| w.contains("conjugator"));
        let g_ok = r.status == Status::Pass && witnessed;
        ok &= g_ok;
        parts.push(format!("g={g}: {} {}", r.status, r.witness.unwrap_or_default()));
    }
    line(ok, parts.join("; "))
}

fn concrete() -> Line {
    let mut parts = Vec::new();
    let mut ok = true;
    for lambda in [1, -1] {
        for g in [2, 3] {
            for s in [Surface::G1, Surface::G0] {
                let r = verify_concrete_automorphism(lambda, g, s).expect("concrete element");
                let onto = r.cases.iter().filter(|c| c.case.starts_with("onto:")).count();
                let this = r.passed() && onto == 2 * g + 1;
                ok &= this;
                if !this {
                    parts.push(format!("{} failed: {:?}", r.suite, failures(&r.cases)));
                }
            }
        }
    }
    if parts.is_empty() {
        parts.push("λ = ±1, g = 2,3, both surfaces: relations and surjectivity witnesses pass".into());
    }
    line(ok, parts.join("; "))
}

fn scripts() -> Line {
    let corpus = match Corpus::load_dir(&scripts_dir()) {
        Ok(c) => c,
        Err(e) => return line(false, format!("cannot load scripts: {e}")),
    };
    let reports = corpus.check_all();
    let ending = [
        ("lemma-5-3", "FB(dp) = dp^L"),
        ("F-d3", "F(d3) = d3^L"),
        ("relation-Cprime", "FB(e) FB(dp) = FB(dp) FB(e)"),
        ("lemma-7-4-i", "FB(g13) = d3^M f(g13;d3) g13^L f(d3;g13) d3^-M"),
        ("lemma-7-4-ii", "FB(g23) = f(t(3)^2;W) g23^L f(W;t(3)^2)"),
        ("prop-7-3-step", "F(d4) = d4^L"),
        ("appendix-t1", "FB:B(t1) = t1^L"),
        ("appendix-t2", "FB:B(t2) = f(t2^2;t1^2) t2^L f(t1^2;t2^2)"),
    ];
    let mut bad = Vec::new();
    for r in &reports {
        if r.status != Status::Pass || r.unjustified() > 0 || !r.errors.is_empty() {
            bad.push(format!("{}: {} unjustified", r.script, r.unjustified()));
        }
        if let Some(g) = r.goals.iter().find(|g| !g.specializes) {
            bad.push(format!("{}/{}: specializations disagree", r.script, g.name));
        }
    }
    for (id, last) in ending {
        match reports.iter().find(|r| r.script == id) {
            Some(r) if r.final_line() == last && r.goals.last().is_some_and(|g| g.status == Status::Pass) => {}
            Some(r) => bad.push(format!("{id} ends at {}", r.final_line())),
            None => bad.push(format!("{id} missing")),
        }
    }
    let steps: usize = reports.iter().map(|r| r.steps.len()).sum();
    let ok = reports.len() == 13 && bad.is_empty();
    line(ok, format!("{} scripts, {steps} steps, problems {bad:?}", reports.len()))
}

fn haiku() -> Line {
    let r = haiku_suite(5, 100);
    let detail: Vec<String> = r.cases.iter().map(|c| format!("{} {}", c.case, c.detail.trim())).collect();
    line(r.passed(), detail.join("; "))
}

fn catalan(k: usize) -> usize {
    (0..k).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

fn bracketing() -> Line {
    let mut notes = Vec::new();
    let mut ok = true;
    for n in 3..=8 {
        let all = enumerate_maximal(n).expect("n in range");
        if all.len() != catalan(n - 1) {
            ok = false;
            notes.push(format!("n={n}: {} bracketings, expected {}", all.len(), catalan(n - 1)));
        }
        if n <= 7 {
            let start = Bracketing::standard(n).expect("n in range");
            let mut seen: HashSet<String> = HashSet::from([start.to_string()]);
            let mut queue = VecDeque::from([start]);
            while let Some(b) = queue.pop_front() {
                for m in b.moves() {
                    let next = b.apply(&m).expect("legal move");
                    if seen.insert(next.to_string()) {
                        queue.push_back(next);
                    }
                }
            }
            if seen.len() != all.len() {
                ok = false;
                notes.push(format!("n={n}: A-move graph reaches {} of {}", seen.len(), all.len()));
            }
        }
    }
    let b: Bracketing = "(((1,2),(3,4)),(5,6)),(7,8)".parse().expect("bracketing");
    let conj = path_conjugator(&amove_path(&Bracketing::standard(8).expect("n=8"), &b).expect("path"));
    let want = format!("{conj} = f(eta(3);s3^2) f(eta(5);s5^2) f(eta(7);s7^2)");
    let reduced = Corpus::load_dir(&scripts_dir())
        .ok()
        .and_then(|c| c.check("thm-2-5-ii"))
        .and_then(|r| r.goals.into_iter().find(|g| g.name == "path"))
        .is_some_and(|g| g.status == Status::Pass && g.statement == want);
    if !reduced {
        ok = false;
        notes.push(format!("conjugator {conj} not reduced"));
    }
    if notes.is_empty() {
        notes.push(format!("Catalan counts n=3..8, connected n<=7, {conj} reduces to f(eta3;s3^2) f(eta5;s5^2) f(eta7;s7^2)"));
    }
    line(ok, notes.join("; "))
}

fn random_ids(rng: &mut ChaCha8Rng, g: usize, max: usize) -> Vec<i32> {
    let n = rng.gen_range(0..=max);
    (0..n).map(|_| rng.gen_range(1..=2 * g as i32 + 1) * if rng.gen_bool(0.5) { 1 } else { -1 }).collect()
}

fn soundness_ladder() -> Line {
    let mut parts = Vec::new();
    let mut ok = true;
    for g in [2, 3] {
        let mcg = Mcg::new(g).expect("genus in range");
        let relators: Vec<Vec<i32>> = presentation_cases(g)
            .iter()
            .map(|c| {
                let l = McgWord::parse(g, &c.lhs).expect("case parses");
                let r = McgWord::parse(g, &c.rhs).expect("case parses");
                l.mul(&r.inverse()).ids()
            })
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(g as u64);
        let (mut equal, mut violations) = (0, 0);
        for k in 0..1000 {
            let u = random_ids(&mut rng, g, 10);
            let v = if k % 2 == 0 {
                // u with a conjugated relator spliced in
                let r = &relators[rng.gen_range(0..relators.len())];
                let c = random_ids(&mut rng, g, 3);
                let at = rng.gen_range(0..=u.len());
                let inv_c: Vec<i32> = c.iter().rev().map(|x| -x).collect();
                [&u[..at], &c, r, &inv_c, &u[at..]].concat()
            } else {
                random_ids(&mut rng, g, 10)
            };
            let (u, v) = (McgWord::from_ids(g, &u), McgWord::from_ids(g, &v));
            if mcg.mcg_equal_g1(&u, &v).expect("oracle") {
                equal += 1;
                if symplectic_image(&u, None) != symplectic_image(&v, None) {
                    violations += 1;
                }
            }
        }
        ok &= violations == 0 && equal >= 500;
        parts.push(format!("g={g}: 1000 pairs, {equal} equal, {violations} violations"));
    }
    line(ok, parts.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Line); 11] = [
        ("braid suite", braid_suite),
        ("Garside cross-validation", garside_cross_validation),
        ("presentation suite", presentation),
        ("lantern suite", lanterns),
        ("iota-kernel suite", iota_kernel),
        ("closed-surface relation D", relation_d),
        ("concrete GT automorphisms", concrete),
        ("script corpus", scripts),
        ("haiku soundness", haiku),
        ("bracketing", bracketing),
        ("soundness ladder", soundness_ladder),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let r = run();
        all &= r.ok;
        println!(
            "criterion {:>2} {:<28} {}  {}  [{:.2} s]",
            i + 1,
            name,
            if r.ok { "PASS" } else { "FAIL" },
            r.detail,
            t0.elapsed().as_secs_f64()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
