//! Lambda-exponents and specialization of formal GT words.
use twistlab::gt::{Context, Env, LambdaExp};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let e: LambdaExp = "2M".parse()?;
    println!("2M + 1 = {}", e + LambdaExp::ONE);
    let env = Env::new(Context::Braid { n: 3 })?;
    let w = env.parse("f(s1^2;s2^2) s1^L f(s2^2;s1^2)")?;
    println!("canonical: {}", w.canonical());
    for lambda in [1, -1] {
        println!("lambda = {lambda:>2}: {}", env.specialize(&w, lambda)?);
    }
    Ok(())
}
