mod common;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twistlab::braid::suite::verify_braid_suite;
use twistlab::braid::{braid_equal, normal_form, permutation, Braid};

use common::{artin_images, b3_disagreements, b4_disagreements, random_word};

#[test]
fn garside_agrees_with_relation_moves_in_b3() {
    assert_eq!(b3_disagreements(10).0, 0);
}

#[test]
fn garside_agrees_with_artin_action_in_b4() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (bad, equal) = b4_disagreements(&mut rng, 500);
    assert_eq!(bad, 0);
    assert!(equal >= 250);
}

#[test]
fn artin_action_sees_the_braid_relation() {
    assert_eq!(artin_images(3, &[1, 2, 1]), artin_images(3, &[2, 1, 2]));
    assert_ne!(artin_images(3, &[1, 2]), artin_images(3, &[2, 1]));
}

#[test]
fn permutation_is_a_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let u = Braid::from_letters(5, &random_word(&mut rng, 4, 10));
        let v = Braid::from_letters(5, &random_word(&mut rng, 4, 10));
        assert_eq!(permutation(&u.mul(&v)), permutation(&u).then(&permutation(&v)));
        if braid_equal(&u, &v).unwrap() {
            assert_eq!(permutation(&u), permutation(&v));
        }
    }
}

#[test]
fn normal_form_factors_are_left_weighted() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let b = Braid::from_letters(6, &random_word(&mut rng, 5, 20));
        let nf = normal_form(&b);
        for f in &nf.factors {
            assert!(!f.is_identity() && !f.is_delta());
        }
        for pair in nf.factors.windows(2) {
            for i in 1..6 {
                if pair[1].starts_with(i) {
                    assert!(pair[0].ends_with(i));
                }
            }
        }
        let back = Braid::from_letters(6, &nf.to_letters());
        assert!(braid_equal(&b, &back).unwrap());
    }
}

#[test]
fn delta_squared_has_no_factors() {
    let nf = normal_form(&Braid::parse("B3: s1 s2 s1 s2 s1 s2").unwrap());
    assert_eq!((nf.delta_power, nf.factors.len()), (2, 0));
}

#[test]
fn braid_suite_passes() {
    let r = verify_braid_suite(None);
    let bad: Vec<_> = r.failures().map(|c| format!("{} {}", c.case, c.detail)).collect();
    assert!(bad.is_empty(), "{bad:#?}");
    assert!(r.cases.len() >= 14);
}
