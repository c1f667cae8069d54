//! Word problem in the genus-g mapping class group, with and without the marked point.
use twistlab::surface::symplectic::symplectic_image;
use twistlab::surface::{Mcg, McgWord};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = 2;
    let m = Mcg::new(g)?;
    let pairs = [("a1 a2 a1", "a2 a1 a2"), ("a1 a3", "a3 a1"), ("a1 a2", "a2 a1"), ("(a1 a2 a3 a4)^10", "")];
    for (l, r) in pairs {
        let (u, v) = (McgWord::parse(g, l)?, McgWord::parse(g, r)?);
        println!(
            "{l:>18} = {r:<10} g1: {:<5} g0: {:<5} symplectic: {}",
            m.mcg_equal_g1(&u, &v)?,
            m.mcg_equal_g0(&u, &v)?,
            symplectic_image(&u, None) == symplectic_image(&v, None)
        );
    }
    Ok(())
}
