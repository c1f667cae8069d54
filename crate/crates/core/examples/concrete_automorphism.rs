//! The two concrete GT elements (lambda = 1 and the mirror, lambda = -1) acting on twists.
use twistlab::gt::verify_concrete_automorphism;
use twistlab::surface::suite::Surface;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for lambda in [1, -1] {
        for g in [2, 3] {
            let r = verify_concrete_automorphism(lambda, g, Surface::G1)?;
            println!("lambda = {lambda:>2}, g = {g}: {} cases, passed = {}", r.cases.len(), r.passed());
        }
    }
    Ok(())
}
