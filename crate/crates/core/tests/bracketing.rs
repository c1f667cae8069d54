use twistlab::bracketing::{amove_path, enumerate_maximal, path_conjugator, path_twists, Bracketing};

#[test]
fn counts_are_catalan() {
    let want = [2, 5, 14, 42, 132, 429];
    for (n, w) in (3..=8).zip(want) {
        assert_eq!(enumerate_maximal(n).unwrap().len(), w, "n = {n}");
    }
}

#[test]
fn display_round_trips() {
    for b in enumerate_maximal(6).unwrap() {
        let back: Bracketing = b.to_string().parse().unwrap();
        assert_eq!(back, b);
        assert!(b.is_maximal());
    }
}

#[test]
fn moves_are_reversible() {
    for b in enumerate_maximal(5).unwrap() {
        for m in b.moves() {
            let c = b.apply(&m).unwrap();
            assert_ne!(c, b);
            assert_eq!(c.apply(&m.reverse()).unwrap(), b);
        }
    }
}

#[test]
fn paths_reach_their_target() {
    let all = enumerate_maximal(6).unwrap();
    for a in &all {
        for b in all.iter().step_by(7) {
            let mut cur = a.clone();
            for m in amove_path(a, b).unwrap() {
                cur = cur.apply(&m).unwrap();
            }
            assert_eq!(&cur, b);
        }
    }
}

#[test]
fn pairs_bracketing_takes_three_moves() {
    let b: Bracketing = "(((1,2),(3,4)),(5,6)),(7,8)".parse().unwrap();
    let path = amove_path(&Bracketing::standard(8).unwrap(), &b).unwrap();
    let twists = path_twists(&path);
    assert_eq!(twists.len(), 3);
    assert_eq!(path_conjugator(&path).to_string(), "f(T[1..7];T[7..8]) f(T[1..5];T[5..6]) f(T[1..3];T[3..4])");
}

#[test]
fn malformed_bracketings_are_rejected() {
    for bad in ["(1,2),(2,3)", "((1,2)", "(1,3),2", ""] {
        assert!(bad.parse::<Bracketing>().is_err(), "{bad}");
    }
}
