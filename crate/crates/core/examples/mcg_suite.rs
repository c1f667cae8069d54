//! Presentation, lantern and kernel suites for a given genus (default 3).
use twistlab::surface::suite::{verify_mcg_suite, Surface};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(3);
    for surface in [Surface::G1, Surface::G0] {
        let r = verify_mcg_suite(g, surface, None)?;
        print!("{}", r.to_text());
    }
    Ok(())
}
