//! Enumerate maximal bracketings and walk an A-move path between two of them.
use twistlab::bracketing::{amove_path, enumerate_maximal, path_conjugator, Bracketing};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for n in 3..=7 {
        println!("n = {n}: {} bracketings", enumerate_maximal(n)?.len());
    }
    let from = Bracketing::standard(6)?;
    let to: Bracketing = "(1,2),((3,4),(5,6))".parse()?;
    let path = amove_path(&from, &to)?;
    let mut cur = from.clone();
    println!("{cur}");
    for m in &path {
        cur = cur.apply(m)?;
        println!("  -> {cur}");
    }
    println!("conjugator: {}", path_conjugator(&path));
    Ok(())
}
