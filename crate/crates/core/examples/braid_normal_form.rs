//! Garside normal forms and equality in B_n.
use twistlab::braid::{braid_equal, normal_form, parse_braid, permutation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let words = ["B3: s1 s2 s1", "B3: s2 s1 s2", "B4: (s1 s2 s3)^4", "B4: s1 s3^-1 s2 s1^-1"];
    for w in words {
        let b = parse_braid(w)?;
        println!("{w:<24} nf = {}   perm = {:?}", normal_form(&b), permutation(&b).0);
    }
    let u = parse_braid(words[0])?;
    let v = parse_braid(words[1])?;
    println!("s1 s2 s1 == s2 s1 s2: {}", braid_equal(&u, &v)?);
    Ok(())
}
