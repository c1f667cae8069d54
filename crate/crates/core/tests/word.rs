use std::collections::BTreeMap;

use proptest::prelude::*;
use twistlab::word::{apply_hom, exponent_sum, gen, Alphabet, Word, WordError};

fn letters() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..3, prop_oneof![-3i64..=-1, 1i64..=3]), 0..12)
}

fn word_of(raw: &[(usize, i64)]) -> Word {
    let names = ["a1", "a2", "a3"];
    Word::from_letters(raw.iter().map(|&(i, e)| (gen(names[i]), e.into())))
}

/// Reference reduction over unit letters with an explicit stack.
fn stack_reduce(raw: &[(usize, i64)]) -> Vec<(usize, i64)> {
    let mut stack: Vec<(usize, i64)> = Vec::new();
    for &(g, e) in raw {
        for _ in 0..e.abs() {
            let s = e.signum();
            if stack.last() == Some(&(g, -s)) {
                stack.pop();
            } else {
                stack.push((g, s));
            }
        }
    }
    stack
}

proptest! {
    #[test]
    fn reduction_matches_stack_oracle(raw in letters()) {
        let w = word_of(&raw);
        let units: Vec<(usize, i64)> = w.unit_letters().iter().map(|(g, s)| (g[1..].parse::<usize>().unwrap() - 1, *s as i64)).collect();
        prop_assert_eq!(units, stack_reduce(&raw));
    }

    #[test]
    fn group_laws(a in letters(), b in letters(), c in letters()) {
        let (a, b, c) = (word_of(&a), word_of(&b), word_of(&c));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_empty());
        prop_assert_eq!(a.mul(&b).inverse(), b.inverse().mul(&a.inverse()));
    }

    #[test]
    fn display_round_trips(raw in letters()) {
        let w = word_of(&raw);
        prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
    }

    #[test]
    fn exponent_sum_is_additive(a in letters(), b in letters()) {
        let (a, b) = (word_of(&a), word_of(&b));
        for g in ["a1", "a2", "a3"] {
            prop_assert_eq!(exponent_sum(&a.mul(&b), g), exponent_sum(&a, g) + exponent_sum(&b, g));
        }
    }
}

#[test]
fn cancellation_and_merge() {
    assert!(Word::parse("a1 a1^-1").unwrap().is_empty());
    assert_eq!(Word::parse("a1^2 a1^3").unwrap().to_string(), "a1^5");
    assert_eq!(Word::parse("a2 a1 a1^-1 a2^-1 a3").unwrap().to_string(), "a3");
}

#[test]
fn alphabet_rejects_unknown_generators() {
    let alpha = Alphabet::new(["a1", "a2"]).unwrap();
    let err = alpha.reduce([(gen("a9"), 1.into())]).unwrap_err();
    assert!(matches!(err, WordError::UndeclaredGenerator(_)));
}

#[test]
fn homomorphisms() {
    let swap: BTreeMap<_, _> = [(gen("a1"), Word::letter("a2", 1)), (gen("a2"), Word::letter("a1", 1))].into();
    let w = Word::parse("a1 a2^-1").unwrap();
    assert_eq!(apply_hom(&swap, &w).unwrap().to_string(), "a2 a1^-1");
    let iota: BTreeMap<_, _> = [(gen("s1"), Word::letter("a1", 1)), (gen("s2"), Word::letter("a2", 1))].into();
    assert_eq!(apply_hom(&iota, &Word::parse("s1 s2 s1").unwrap()).unwrap().to_string(), "a1 a2 a1");
    assert!(apply_hom(&iota, &Word::parse("s3").unwrap()).is_err());
}

#[test]
fn commutator_abelianizes_to_zero() {
    let c = Word::parse("a1 a2 a1^-1 a2^-1").unwrap();
    assert_eq!(exponent_sum(&c, "a1"), 0.into());
    assert_eq!(exponent_sum(&Word::parse("a1^2 a2 a1^-1").unwrap(), "a1"), 1.into());
}
