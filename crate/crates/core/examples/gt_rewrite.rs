//! Apply single rewriting steps to a GT word and watch them get checked.
use std::collections::BTreeMap;

use twistlab::gt::{rewrite_step, Context, Env, Justification, RuleApplication};

fn step(rule: &str, start: usize, end: usize, params: &[(&str, &str)]) -> RuleApplication {
    RuleApplication {
        rule: rule.into(),
        params: params.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect(),
        start,
        end,
        by: Justification::Oracle,
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let env = Env::new(Context::Braid { n: 4 })?;
    let lemmas = BTreeMap::new();
    let w = env.parse("s1^L s3^L s2^L")?;
    println!("start     {}", w.indexed());
    let (w, why) = rewrite_step(&env, &w, &step("comm", 0, 2, &[("k", "1")]), &lemmas)?;
    println!("comm      {}   [{why}]", w.indexed());
    // s2 does not commute with s3, so this one is refused
    match rewrite_step(&env, &w, &step("comm", 1, 3, &[("k", "2")]), &lemmas) {
        Ok((w, _)) => println!("unexpected {w}"),
        Err(e) => println!("refused   {e}"),
    }
    Ok(())
}
