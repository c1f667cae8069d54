use twistlab::surface::suite::{verify_mcg_suite, Surface};
use twistlab::surface::symplectic::{symplectic_image, SymplecticMatrix};
use twistlab::surface::{Mcg, McgWord};

fn w(g: usize, s: &str) -> McgWord {
    McgWord::parse(g, s).unwrap()
}

#[test]
fn suites_pass_in_low_genus() {
    for g in [2, 3] {
        let r = verify_mcg_suite(g, Surface::G1, None).unwrap();
        assert!(r.passed(), "{}", r.to_text());
    }
    let r = verify_mcg_suite(2, Surface::G0, None).unwrap();
    assert!(r.passed(), "{}", r.to_text());
}

#[test]
fn braid_and_commutation_relations() {
    let m = Mcg::new(2).unwrap();
    assert!(m.mcg_equal_g1(&w(2, "a1 a2 a1"), &w(2, "a2 a1 a2")).unwrap());
    assert!(m.mcg_equal_g1(&w(2, "a1 a3"), &w(2, "a3 a1")).unwrap());
    assert!(!m.mcg_equal_g1(&w(2, "a1 a2"), &w(2, "a2 a1")).unwrap());
    assert!(!m.mcg_equal_g1(&w(2, "a1"), &w(2, "a1^-1")).unwrap());
}

#[test]
fn chain_relation_holds_with_a_marked_point() {
    // the surface has a marked point, not a boundary, so (a1 a2 a3 a4)^10 dies in both
    let m = Mcg::new(2).unwrap();
    let c = w(2, "(a1 a2 a3 a4)^10");
    let one = w(2, "");
    assert!(m.mcg_equal_g1(&c, &one).unwrap());
    assert!(m.mcg_equal_g0(&c, &one).unwrap());
    assert!(!m.mcg_equal_g1(&w(2, "(a1 a2)^6"), &one).unwrap());
}

#[test]
fn symplectic_images_are_symplectic() {
    for s in ["a1", "a2 a3^-1", "d2 a4 a1^3"] {
        let x = symplectic_image(&w(2, s), None);
        assert!(x.is_symplectic(), "{s}");
    }
    assert_eq!(symplectic_image(&w(2, "a1 a1^-1"), None), SymplecticMatrix::identity(4, None));
}

#[test]
fn bad_indices_are_errors() {
    assert!(McgWord::parse(2, "a7").is_err());
    assert!(Mcg::new(0).is_err());
}
