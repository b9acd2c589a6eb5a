use std::collections::{BTreeMap, BTreeSet, HashSet};

use proptest::prelude::*;
use rook0::action::{act_right, eval_word, GenWord, Generator};
use rook0::rcode::*;
use rook0::rookcore::{enumerate_rooks, first_zero, rook_count};
use rook0::{Error, RookVector};

fn rv(s: &str) -> RookVector {
    s.parse().unwrap()
}

fn code(v: &[i64]) -> RCode {
    RCode::new(v.to_vec()).unwrap()
}

#[test]
fn m_value_examples() {
    assert_eq!(m_value(&[1, 2, 8, 3, 6, 4, 2, 7]), 5);
    assert_eq!(m_value(&[0, 2, 1, -1, 1, 2, 5, 4]), 4);
    assert_eq!(m_value(&[]), 0);
}

#[test]
fn rcode_validation() {
    assert!(is_rcode(&[1, 1, -1, 2, 0]));
    assert!(is_rcode(&[0, 1]));
    assert!(!is_rcode(&[2]));
    assert!(!is_rcode(&[-1]));
    assert!(!is_rcode(&[0, -2]));
    assert!(matches!(RCode::new(vec![3]), Err(Error::NotAnRCode(_))));
    assert_eq!(code(&[1, 1, -1, 2, 0]).to_string(), "1,1,-1,2,0");
    assert_eq!("1,1,-1,2,0".parse::<RCode>().unwrap(), code(&[1, 1, -1, 2, 0]));
    assert_eq!(code(&[1, 1, -1, 2, 0]).to_overline(), "111\u{0305}20");
}

#[test]
fn encode_decode_examples() {
    assert_eq!(encode(&rv("02401")), code(&[1, 1, -1, 2, 0]));
    assert_eq!(encode(&rv("240503")), code(&[0, 1, 3, 2, 3, -2]));
    assert_eq!(encode(&rv("1")), code(&[1]));
    assert_eq!(encode(&rv("0")), code(&[0]));
    assert_eq!(decode(&code(&[1, 1, -1, 2, 0])).unwrap(), rv("02401"));
    assert_eq!(decode(&code(&[0, 0, 3, 1, 3, 0])).unwrap(), rv("040503"));
    assert_eq!(decode(&RCode::identity(4)).unwrap(), RookVector::identity(4));
    assert!(decode_letters(&[1, 3]).is_err());
}

#[test]
fn c1_and_cardinalities() {
    let c1: BTreeSet<Vec<i64>> = enumerate_codes(1).iter().map(|c| c.letters().to_vec()).collect();
    assert_eq!(c1, BTreeSet::from([vec![0], vec![1]]));
    for n in 0..=6 {
        assert_eq!(enumerate_codes(n).len() as u64, rook_count(n));
    }
}

#[test]
fn code_bijection() {
    for n in 0..=6 {
        for r in enumerate_rooks(n) {
            let c = encode(&r);
            assert!(is_rcode(c.letters()));
            assert_eq!(decode(&c).unwrap(), r);
            assert_eq!(m_value(c.letters()) as usize, first_zero(&r));
        }
        for c in enumerate_codes(n) {
            let r = decode(&c).unwrap();
            assert_eq!(encode(&r), c);
            assert_eq!(first_zero(&r), m_value(c.letters()) as usize);
        }
    }
}

#[test]
fn canonical_word_examples() {
    let w = canonical_word(&code(&[1, 1, -1, 2, 0]), Alphabet::Q0).unwrap();
    assert_eq!(w.to_string(), "p1 p2 p1 p0 p1 p3 p2 p4 p3 p2 p1 p0");
    assert!(canonical_word(&RCode::identity(4), Alphabet::Q0).unwrap().is_empty());
    for n in 0..=6 {
        let z = code(&vec![0; n]);
        let w = canonical_word(&z, Alphabet::Q0).unwrap();
        assert_eq!(w.len(), n * (n + 1) / 2);
        assert_eq!(eval_word(&w), RookVector::zero(n));
        assert_eq!(length(&RookVector::zero(n)), n * (n + 1) / 2);
    }
    let w1 = canonical_word(&code(&[1, 1, -1, 2, 0]), Alphabet::Q1).unwrap();
    assert_eq!(w1.to_string(), "s1 s2 s1 p0 s1 s3 s2 s4 s3 s2 s1 p0");
}

#[test]
fn column_words() {
    assert!(column_word(3, 4, Alphabet::Q0).is_empty());
    assert_eq!(column_word(3, 2, Alphabet::Q0), vec![Generator::pi(3), Generator::pi(2)]);
    let w: Vec<String> = column_word(2, -1, Alphabet::Q0).iter().map(|g| g.to_string()).collect();
    assert_eq!(w, ["p2", "p1", "p0", "p1"]);
    for k in 0..6 {
        for i in -(k as i64)..=(k as i64 + 1) {
            assert_eq!(column_word(k, i, Alphabet::Q0).len(), column_len(k, i));
        }
    }
}

#[test]
fn canonical_words_evaluate_and_are_reduced() {
    for n in 0..=5 {
        for r in enumerate_rooks(n) {
            for alph in [Alphabet::Q0, Alphabet::Q1] {
                let w = canonical_word(&encode(&r), alph).unwrap();
                assert_eq!(eval_word(&w), r, "{r} {alph:?}");
                assert!(is_reduced(&w));
                assert_eq!(w.len(), length(&r));
            }
        }
    }
}

/// Shortest word lengths by breadth-first search from the identity.
fn bfs_lengths(n: usize) -> BTreeMap<RookVector, usize> {
    let mut dist = BTreeMap::from([(RookVector::identity(n), 0)]);
    let mut frontier = vec![RookVector::identity(n)];
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let mut next = Vec::new();
        for r in frontier {
            for i in 0..n {
                let s = act_right(&r, Generator::pi(i)).unwrap();
                if !dist.contains_key(&s) {
                    dist.insert(s, d);
                    next.push(s);
                }
            }
        }
        frontier = next;
    }
    dist
}

#[test]
fn length_is_bfs_distance() {
    for n in 0..=5 {
        let dist = bfs_lengths(n);
        assert_eq!(dist.len() as u64, rook_count(n));
        for (r, d) in dist {
            assert_eq!(length(&r), d, "{r}");
        }
    }
}

#[test]
fn code_act_examples() {
    assert_eq!(code_act(&code(&[0, 1, 3, 2, 3, -2]), Generator::pi(0), Alphabet::Q0).unwrap(), code(&[0, 0, 3, 1, 3, 0]));
    assert_eq!(code_act(&code(&[1]), Generator::pi(0), Alphabet::Q0).unwrap(), code(&[0]));
    let c = code(&[1, 2, 2]);
    assert!(matches!(code_act(&c, Generator::s(1), Alphabet::Q0), Err(Error::MixedAlphabet)));
    assert!(matches!(code_act(&c, Generator::pi(1), Alphabet::Q1), Err(Error::MixedAlphabet)));
}

#[test]
fn code_action_commutes_with_decode() {
    for n in 1..=5 {
        for c in enumerate_codes(n) {
            let r = decode(&c).unwrap();
            for i in 0..n {
                for alph in [Alphabet::Q0, Alphabet::Q1] {
                    let g = alph.gen(i);
                    let d = code_act(&c, g, alph).unwrap();
                    assert_eq!(decode(&d).unwrap(), act_right(&r, g).unwrap(), "{c} {g}");
                    if n <= 4 {
                        let before = canonical_word(&c, alph).unwrap().len();
                        assert!(canonical_word(&d, alph).unwrap().len() <= before + 1);
                    }
                }
            }
        }
    }
}

#[test]
fn normalize_examples() {
    let a = GenWord::parse(2, "p0 p1 p0 p1").unwrap();
    let b = GenWord::parse(2, "p0 p1 p0").unwrap();
    assert_eq!(normalize(&a).unwrap(), normalize(&b).unwrap());
    assert_eq!(normalize(&GenWord::empty(3)).unwrap(), encode(&RookVector::identity(3)));
    for c in enumerate_codes(3) {
        assert_eq!(normalize(&canonical_word(&c, Alphabet::Q0).unwrap()).unwrap(), c);
        assert_eq!(normalize(&canonical_word(&c, Alphabet::Q1).unwrap()).unwrap(), c);
    }
    assert!(matches!(normalize(&GenWord::parse(3, "p1 s2").unwrap()), Err(Error::MixedAlphabet)));
}

#[test]
fn normalize_evaluates_random_words() {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..2000 {
        let n = rng.gen_range(1..=6);
        let len = rng.gen_range(0..20);
        let q1 = rng.gen_bool(0.5);
        let letters: Vec<Generator> = (0..len)
            .map(|_| {
                let i = rng.gen_range(0..n);
                if q1 && i > 0 { Generator::s(i) } else { Generator::pi(i) }
            })
            .collect();
        let w = GenWord::new(n, letters).unwrap();
        assert_eq!(decode(&normalize(&w).unwrap()).unwrap(), eval_word(&w), "{w}");
    }
}

#[test]
fn reduced_predicate() {
    assert!(!is_reduced(&GenWord::parse(2, "p0 p0").unwrap()));
    assert!(is_reduced(&GenWord::parse(2, "p0 p1 p0").unwrap()));
    assert!(!is_reduced(&GenWord::parse(2, "p1 p0 p1 p0").unwrap()));
    assert!(!is_reduced(&GenWord::parse(3, "s1 s1").unwrap()));
}

#[test]
fn matsumoto_examples() {
    let w = |n, s| GenWord::parse(n, s).unwrap();
    assert!(matsumoto_equivalent(&w(4, "p1 p3"), &w(4, "p3 p1")).unwrap());
    assert!(braid_connected(&w(4, "p1 p3"), &w(4, "p3 p1")));
    assert!(matsumoto_equivalent(&w(3, "p1 p2 p1"), &w(3, "p2 p1 p2")).unwrap());
    assert!(braid_connected(&w(3, "p1 p2 p1"), &w(3, "p2 p1 p2")));
    assert!(!matsumoto_equivalent(&w(3, "p1 p2"), &w(3, "p2 p1")).unwrap());
    assert!(matches!(matsumoto_equivalent(&w(2, "p0 p0"), &w(2, "p0")), Err(Error::NotReduced)));
    // π_0 does not braid with π_1
    assert!(!braid_connected(&w(2, "p0 p1 p0"), &w(2, "p1 p0 p1")));
}

/// Every reduced word of `r` is braid-connected to every other, and to nothing else.
#[test]
fn matsumoto_exhaustive() {
    for n in 0..=4 {
        let rooks = enumerate_rooks(n);
        let mut all: Vec<(RookVector, Vec<Generator>)> = Vec::new();
        for r in &rooks {
            let words = reduced_words(r);
            assert!(!words.is_empty());
            let set: HashSet<Vec<Generator>> = words.iter().map(|w| w.letters.clone()).collect();
            assert_eq!(braid_closure(&words[0]), set, "{r}");
            for w in &words {
                assert_eq!(eval_word(w), *r);
                all.push((*r, w.letters.clone()));
            }
        }
        // pairwise on small n, including the q1 twins
        if n <= 3 {
            for (r, u) in &all {
                for (s, v) in &all {
                    let (u, v) = (GenWord::new(n, u.clone()).unwrap(), GenWord::new(n, v.clone()).unwrap());
                    assert_eq!(braid_connected(&u, &v), r == s);
                    assert_eq!(matsumoto_equivalent(&u, &v).unwrap(), r == s);
                    let (u1, v1) = (u.swap_alphabet(), v.swap_alphabet());
                    assert_eq!(braid_connected(&u1, &v1), r == s);
                }
            }
        }
    }
}

#[test]
fn q0_q1_correspondence() {
    for n in 0..=4 {
        let c = reduced_word_correspondence(n);
        assert!(c.witness.is_none(), "n={n} {:?}", c.witness);
        let total: usize = enumerate_rooks(n).iter().map(|r| reduced_words(r).len()).sum();
        // every reduced word is a prefix-closed walk, so it was visited
        assert!(c.reduced_words >= total);
    }
}

#[test]
fn lehmer_examples() {
    assert_eq!(lehmer_code(&rv("516432")).unwrap(), [4, 0, 3, 2, 1, 0]);
    assert_eq!(encode(&rv("516432")), code(&[1, 2, 2, 2, 1, 3]));
    assert_eq!(lehmer_code(&RookVector::identity(4)).unwrap(), [0; 4]);
    assert!(matches!(lehmer_code(&rv("10")), Err(Error::NotAPermutation)));
    for sigma in enumerate_rooks(4).into_iter().filter(|r| r.is_permutation()) {
        let l = lehmer_code(&sigma).unwrap();
        let c = encode(&sigma);
        for i in 0..4 {
            let v = sigma.entries()[i] as usize;
            assert_eq!(l[i] as i64, v as i64 - c.letters()[v - 1]);
        }
    }
}

fn arb_code(max_n: usize) -> impl Strategy<Value = RCode> {
    (0..=max_n).prop_flat_map(|n| {
        let all = enumerate_codes(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #[test]
    fn prop_encode_decode(c in arb_code(7)) {
        let r = decode(&c).unwrap();
        prop_assert_eq!(encode(&r), c.clone());
        prop_assert_eq!(first_zero(&r), m_value(c.letters()) as usize);
    }

    #[test]
    fn prop_canonical_word_evaluates(c in arb_code(7)) {
        let w = canonical_word(&c, Alphabet::Q0).unwrap();
        prop_assert_eq!(eval_word(&w), decode(&c).unwrap());
        prop_assert_eq!(normalize(&w).unwrap(), c);
    }
}
