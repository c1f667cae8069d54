//! Random model checks for the haiku rules in a finite quotient.
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twistlab::gt::models::{haiku_i, haiku_ii, haiku_iii};

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for r in [haiku_i(&mut rng, 200), haiku_ii(&mut rng, 200, true), haiku_iii(&mut rng, 200)] {
        println!("{:<10} {} trials, {} counterexamples", r.rule, r.trials, r.counterexamples.len());
    }
}
