use std::collections::{BTreeSet, HashMap};

use proptest::prelude::*;
use rand::{rngs::StdRng, Rng, SeedableRng};
use rook0::action::{act_right, Generator};
use rook0::order::*;
use rook0::rookcore::enumerate_rooks;
use rook0::{Error, RookVector};

fn rv(s: &str) -> RookVector {
    s.parse().unwrap()
}

fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

/// `below[u]` = everything reachable from `u` in the right Cayley graph.
struct Reach {
    nodes: Vec<RookVector>,
    index: HashMap<RookVector, usize>,
    below: Vec<Vec<bool>>,
}

impl Reach {
    fn new(n: usize) -> Reach {
        let nodes = enumerate_rooks(n);
        let index: HashMap<RookVector, usize> = nodes.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let mut below = vec![vec![false; nodes.len()]; nodes.len()];
        for (u, row) in below.iter_mut().enumerate() {
            let mut stack = vec![u];
            row[u] = true;
            while let Some(x) = stack.pop() {
                for i in 0..n {
                    let y = index[&act_right(&nodes[x], Generator::pi(i)).unwrap()];
                    if !row[y] {
                        row[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        Reach { nodes, index, below }
    }

    fn le(&self, a: usize, b: usize) -> bool {
        self.below[b][a]
    }

    fn glb(&self, a: usize, b: usize) -> usize {
        let lower: Vec<usize> = (0..self.nodes.len()).filter(|&w| self.le(w, a) && self.le(w, b)).collect();
        let top: Vec<usize> = lower.iter().copied().filter(|&w| lower.iter().all(|&x| self.le(x, w))).collect();
        assert_eq!(top.len(), 1);
        top[0]
    }

    fn lub(&self, a: usize, b: usize) -> usize {
        let upper: Vec<usize> = (0..self.nodes.len()).filter(|&w| self.le(a, w) && self.le(b, w)).collect();
        let bot: Vec<usize> = upper.iter().copied().filter(|&w| upper.iter().all(|&x| self.le(w, x))).collect();
        assert_eq!(bot.len(), 1);
        bot[0]
    }
}

#[test]
fn leq_examples() {
    for r in enumerate_rooks(3) {
        assert!(leq(&r, &RookVector::identity(3)).unwrap());
        assert!(leq(&RookVector::zero(3), &r).unwrap());
        assert!(leq(&r, &r).unwrap());
    }
    assert!(leq(&rv("00210"), &rv("25104")).unwrap());
    assert!(!leq(&rv("25104"), &rv("00210")).unwrap());
    assert!(matches!(leq(&rv("1"), &rv("12")), Err(Error::SizeMismatch { .. })));
}

#[test]
fn meet_join_examples() {
    assert_eq!(meet(&rv("25104"), &rv("12453")).unwrap(), rv("00210"));
    assert_eq!(meet(&rv("31086502"), &rv("02178534")).unwrap(), rv("00032100"));
    assert_eq!(meet(&rv("43017582"), &rv("02154738")).unwrap(), rv("75430821"));
    assert_eq!(join(&rv("30175082"), &rv("72185043")).unwrap(), rv("10243758"));
    for r in enumerate_rooks(3) {
        assert_eq!(join(&r, &RookVector::identity(3)).unwrap(), RookVector::identity(3));
        assert_eq!(meet(&r, &RookVector::zero(3)).unwrap(), RookVector::zero(3));
    }
    assert!(matches!(meet(&rv("1"), &rv("12")), Err(Error::SizeMismatch { .. })));
    assert!(matches!(join(&rv("1"), &rv("12")), Err(Error::SizeMismatch { .. })));
}

#[test]
fn leq_is_reachability() {
    for n in 0..=4 {
        let reach = Reach::new(n);
        for (a, r) in reach.nodes.iter().enumerate() {
            for (b, u) in reach.nodes.iter().enumerate() {
                assert_eq!(leq(r, u).unwrap(), reach.le(a, b), "{r} {u}");
            }
        }
    }
}

/// Reachability is antisymmetric, so R_n^0 is R-trivial; the left order
/// is its transpose, so the monoid is J-trivial.
#[test]
fn cayley_graph_is_acyclic() {
    for n in 0..=4 {
        let reach = Reach::new(n);
        let m = reach.nodes.len();
        for a in 0..m {
            for b in 0..m {
                if a != b {
                    assert!(!(reach.le(a, b) && reach.le(b, a)));
                }
            }
        }
        let h = Hasse::build(n).unwrap();
        assert_eq!(h.topological_order().len(), m);
    }
}

#[test]
fn meet_join_are_bounds() {
    for n in 0..=4 {
        let reach = Reach::new(n);
        for (a, u) in reach.nodes.iter().enumerate() {
            for (b, v) in reach.nodes.iter().enumerate() {
                let m = meet(u, v).unwrap();
                let j = join(u, v).unwrap();
                assert_eq!(reach.index[&m], reach.glb(a, b), "{u} ∧ {v}");
                assert_eq!(reach.index[&j], reach.lub(a, b), "{u} ∨ {v}");
                assert_eq!(meet_checked(u, v).unwrap(), m);
                assert_eq!(join_checked(u, v).unwrap(), j);
            }
        }
    }
}

#[test]
fn lattice_axioms_exhaustive() {
    for n in 0..=3 {
        let rooks = enumerate_rooks(n);
        for a in &rooks {
            assert_eq!(meet(a, a).unwrap(), *a);
            assert_eq!(join(a, a).unwrap(), *a);
            for b in &rooks {
                let m = meet(a, b).unwrap();
                let j = join(a, b).unwrap();
                assert_eq!(m, meet(b, a).unwrap());
                assert_eq!(j, join(b, a).unwrap());
                assert_eq!(meet(a, &j).unwrap(), *a);
                assert_eq!(join(a, &m).unwrap(), *a);
                for c in &rooks {
                    assert_eq!(meet(&m, c).unwrap(), meet(a, &meet(b, c).unwrap()).unwrap());
                    assert_eq!(join(&j, c).unwrap(), join(a, &join(b, c).unwrap()).unwrap());
                }
            }
        }
    }
}

#[test]
fn lattice_axioms_sampled() {
    let mut rng = StdRng::seed_from_u64(5);
    for n in [4usize, 5, 6] {
        let rooks = enumerate_rooks(n);
        for _ in 0..3000 {
            let [a, b, c] = [0; 3].map(|_| rooks[rng.gen_range(0..rooks.len())]);
            assert_eq!(meet(&meet(&a, &b).unwrap(), &c).unwrap(), meet(&a, &meet(&b, &c).unwrap()).unwrap());
            assert_eq!(join(&join(&a, &b).unwrap(), &c).unwrap(), join(&a, &join(&b, &c).unwrap()).unwrap());
            assert_eq!(meet(&a, &join(&a, &b).unwrap()).unwrap(), a);
            assert_eq!(join(&a, &meet(&a, &b).unwrap()).unwrap(), a);
            let m = meet(&a, &b).unwrap();
            assert!(leq(&m, &a).unwrap() && leq(&m, &b).unwrap());
            let j = join(&a, &b).unwrap();
            assert!(leq(&a, &j).unwrap() && leq(&b, &j).unwrap());
        }
    }
}

#[test]
fn descent_examples() {
    assert_eq!(weak_descents(&rv("04003")), set(&[0, 2, 3]));
    let s = strict_descents(&rv("04003"));
    assert_eq!(s.set, set(&[0, 2]));
    assert_eq!(s.zero_multiplicity, 3);
    assert!(weak_descents(&RookVector::identity(4)).is_empty());
    assert_eq!(weak_descents(&rv("0423007")), set(&[0, 2, 4, 5]));
    assert_eq!(strict_descents(&rv("21")).zero_multiplicity, 0);
}

/// Strict descents by definition: some other rook is sent onto `r` by π_i.
#[test]
fn strict_descents_brute_force() {
    for n in 0..=5 {
        let rooks = enumerate_rooks(n);
        let mut hit: HashMap<RookVector, BTreeSet<usize>> = HashMap::new();
        for s in &rooks {
            for i in 0..n {
                let r = act_right(s, Generator::pi(i)).unwrap();
                if r != *s {
                    hit.entry(r).or_default().insert(i);
                }
            }
        }
        for r in &rooks {
            let strict = strict_descents(r);
            assert_eq!(strict.set, hit.get(r).cloned().unwrap_or_default(), "{r}");
            assert!(strict.set.is_subset(&weak_descents(r)));
        }
    }
}

#[test]
fn shuffle_examples() {
    let e: Vec<char> = vec![];
    let u: Vec<char> = "abc".chars().collect();
    assert_eq!(shuffle(&e, &u), BTreeSet::from([u.clone()]));
    let w = |s: &str| s.chars().collect::<Vec<char>>();
    assert_eq!(shuffle(&w("0"), &w("2")), BTreeSet::from([w("02"), w("20")]));
    assert_eq!(shuffle(&w("00"), &w("3")), BTreeSet::from([w("300"), w("030"), w("003")]));
    assert_eq!(shuffle(&w("ab"), &w("cd")).len(), 6);
}

#[test]
fn mcr_examples() {
    let m: BTreeSet<RookVector> = ["12", "02", "20", "00"].iter().map(|s| rv(s)).collect();
    assert_eq!(mcr_set(2).unwrap(), m);
    for n in 0..=8 {
        let m = mcr_set(n).unwrap();
        assert_eq!(m.len(), 1 << n);
        assert!(m.iter().all(in_mcr));
    }
    assert!(!in_mcr(&rv("21")));
    assert_eq!(eta(&rv("0304")).unwrap(), set(&[2, 4]));
    assert!(matches!(eta(&rv("21")), Err(Error::NotInMcr)));
}

/// MCR_n is the set of rooks that can begin a maximal chain from 1_n.
#[test]
fn mcr_is_prefix_closed_in_reduced_words_of_zero() {
    for n in 1..=4 {
        let h = Hasse::build(n).unwrap();
        let zero = RookVector::zero(n);
        let mut on_shortest = BTreeSet::new();
        // elements at distance d from 1_n with distance n(n+1)/2 - d to 0^n
        let dist_top = bfs(&h, h.index[&RookVector::identity(n)], false);
        let dist_bot = bfs(&h, h.index[&zero], true);
        let total = n * (n + 1) / 2;
        for (i, r) in h.nodes.iter().enumerate() {
            if dist_top[i] + dist_bot[i] == total {
                on_shortest.insert(*r);
            }
        }
        assert_eq!(on_shortest, mcr_set(n).unwrap(), "n={n}");
    }
}

fn bfs(h: &Hasse, start: usize, upward: bool) -> Vec<usize> {
    let mut dist = vec![usize::MAX; h.len()];
    dist[start] = 0;
    let mut q = std::collections::VecDeque::from([start]);
    while let Some(x) = q.pop_front() {
        let next: Vec<usize> = if upward { h.up[x].clone() } else { h.down[x].iter().map(|(c, _)| *c).collect() };
        for y in next {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
    }
    dist
}

#[test]
fn composition_examples() {
    let c = cset(&set(&[3, 4, 6, 7, 9]), 11).unwrap();
    assert_eq!(c.parts, [3, 1, 2, 1, 2, 2]);
    assert_eq!(c.total, 11);
    let i: ExtendedComposition = "(0,3,4,1)".parse().unwrap();
    assert_eq!(des(&i), set(&[0, 3, 7]));
    assert_eq!(cset(&set(&[0, 3, 7]), 8).unwrap(), i);
    assert_eq!(i.to_string(), "(0,3,4,1)");
    assert!(ExtendedComposition::new(vec![1, 0]).is_err());
    assert!(cset(&set(&[4]), 4).is_err());
    for n in 1..=7 {
        for mask in 0u32..1 << n {
            let s: BTreeSet<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let c = cset(&s, n).unwrap();
            assert_eq!(c.total, n);
            assert_eq!(des(&c), s);
        }
    }
}

#[test]
fn dyck_examples() {
    assert!(DyckPath::new(vec![0, 1]).is_err());
    assert!(DyckPath::new(vec![1, 1, 0]).is_err());
    let catalan: Vec<usize> = (0..=6).map(|k| dyck_paths(k).len()).collect();
    assert_eq!(catalan, [1, 1, 2, 5, 14, 42, 132]);
    for n in 0..=5 {
        let top: ExtendedComposition = format!("({})", n + 1).parse().unwrap();
        let d = delta(&top).unwrap();
        assert_eq!(d.to_string(), format!("{}{}", "1".repeat(n + 1), "0".repeat(n + 1)));
        let ones = ExtendedComposition::new(vec![1; n + 1]).unwrap();
        assert_eq!(delta(&ones).unwrap().to_string(), "10".repeat(n + 1));
    }
    let d = delta(&"(2,1)".parse().unwrap()).unwrap();
    assert_eq!(d.to_string(), "110010");
    assert!(d.avoids_011());
    assert!(!DyckPath::new(vec![1, 0, 1, 1, 0, 0]).unwrap().avoids_011());
    assert!(delta(&"(0,2)".parse().unwrap()).is_err());
}

#[test]
fn mcr_dyck_bijection() {
    for n in 0..=5 {
        assert!(mcr_dyck_correspondence(n).unwrap(), "n={n}");
        let count = dyck_paths(n + 1).into_iter().filter(DyckPath::avoids_011).count();
        assert_eq!(count, 1 << n);
    }
    assert_eq!(mcr_to_dyck(&RookVector::identity(2)).unwrap().to_string(), "101010");
    assert_eq!(mcr_to_dyck(&RookVector::zero(2)).unwrap().to_string(), "111000");
}

#[test]
fn hasse_and_dot() {
    let e = hasse_edges(1).unwrap();
    assert_eq!(e.len(), 1);
    assert_eq!((e[0].0, e[0].1), (rv("1"), rv("0")));
    assert_eq!(e[0].2, vec![Generator::pi(0)]);
    for n in 0..=3 {
        for flavor in [DotFlavor::RightCayley, DotFlavor::Hasse] {
            let dot = export_dot(n, flavor).unwrap();
            let nodes = dot.lines().filter(|l| l.trim_end().ends_with("\";")).count();
            assert_eq!(nodes, enumerate_rooks(n).len());
            let edges = dot.lines().filter(|l| l.contains("->")).count();
            match flavor {
                DotFlavor::RightCayley => assert_eq!(edges, enumerate_rooks(n).len() * n),
                DotFlavor::Hasse => assert_eq!(edges, hasse_edges(n).unwrap().len()),
            }
        }
    }
    assert_eq!(export_dot(2, DotFlavor::RightCayley).unwrap().lines().filter(|l| l.trim_end().ends_with("\";")).count(), 7);
    assert_eq!("cayley".parse::<DotFlavor>().unwrap(), DotFlavor::RightCayley);
    assert!(matches!(hasse_edges(GRAPH_MAX_N + 1), Err(Error::BoundExceeded { .. })));
}

/// Hasse edges are the covers of the reachability order.
#[test]
fn hasse_is_transitive_reduction() {
    for n in 0..=4 {
        let reach = Reach::new(n);
        let m = reach.nodes.len();
        let mut want = BTreeSet::new();
        for a in 0..m {
            for b in 0..m {
                if a != b && reach.le(b, a) && !(0..m).any(|c| c != a && c != b && reach.le(c, a) && reach.le(b, c)) {
                    want.insert((reach.nodes[a], reach.nodes[b]));
                }
            }
        }
        let got: BTreeSet<(RookVector, RookVector)> = hasse_edges(n).unwrap().into_iter().map(|(u, l, _)| (u, l)).collect();
        assert_eq!(got, want, "n={n}");
    }
}

#[test]
fn irreducibles() {
    assert_eq!(meet_irreducibles(3).unwrap().len(), 19);
    let meets: Vec<usize> = (1..=5).map(|n| meet_irreducibles(n).unwrap().len()).collect();
    assert_eq!(meets, [1, 5, 19, 65, 211]);
    for n in 1..=5usize {
        let mi = meet_irreducibles(n).unwrap();
        assert_eq!(mi.len(), 3usize.pow(n as u32) - 2usize.pow(n as u32));
        for i in 1..=n {
            let want = 3usize.pow((n - i) as u32) * 2usize.pow(i as u32 - 1);
            assert_eq!(mi.iter().filter(|r| first_value(r) == i).count(), want, "n={n} i={i}");
        }
    }
    let joins: Vec<usize> = (1..=6).map(|n| join_irreducibles(n).unwrap().len()).collect();
    assert_eq!(joins, [1, 5, 16, 43, 106, 249]);
}

/// One upper cover for meet-irreducibles, one lower cover for join-irreducibles.
#[test]
fn irreducibles_by_lattice_operations() {
    for n in 1..=3 {
        let rooks = enumerate_rooks(n);
        let mi: BTreeSet<RookVector> = meet_irreducibles(n).unwrap().into_iter().collect();
        let ji: BTreeSet<RookVector> = join_irreducibles(n).unwrap().into_iter().collect();
        for r in &rooks {
            let is_meet = *r != RookVector::identity(n)
                && !rooks.iter().any(|a| a != r && rooks.iter().any(|b| b != r && meet(a, b).unwrap() == *r));
            let is_join = *r != RookVector::zero(n)
                && !rooks.iter().any(|a| a != r && rooks.iter().any(|b| b != r && join(a, b).unwrap() == *r));
            assert_eq!(mi.contains(r), is_meet, "{r}");
            assert_eq!(ji.contains(r), is_join, "{r}");
        }
    }
}

#[test]
fn chains() {
    let c = chain_counts(1).unwrap();
    assert_eq!((c.maximal, c.shortest_count), (1, 1));
    let maximal: Vec<u128> = (2..=5).map(|n| chain_counts(n).unwrap().maximal).collect();
    assert_eq!(maximal, [2, 23, 3625, 16489243]);
    let shortest: Vec<u128> = (2..=6).map(|n| chain_counts(n).unwrap().shortest_count).collect();
    assert_eq!(shortest, [1, 2, 12, 286, 33592]);
    for n in 0..=6 {
        assert_eq!(chain_counts(n).unwrap().shortest_len, n * (n + 1) / 2);
    }
    let v = serde_json::to_value(chain_counts(4).unwrap()).unwrap();
    assert_eq!(v, serde_json::json!({"n": 4, "maximal": 3625, "min_length": 12, "shortest_length": 10}));
}

/// Chain counting by explicit path enumeration.
#[test]
fn chains_brute_force() {
    fn walk(h: &Hasse, x: usize, len: usize, bottom: usize, out: &mut Vec<usize>) {
        if x == bottom {
            out.push(len);
            return;
        }
        for (c, _) in &h.down[x] {
            walk(h, *c, len + 1, bottom, out);
        }
    }
    for n in 1..=3 {
        let h = Hasse::build(n).unwrap();
        let mut lens = Vec::new();
        walk(&h, h.top(), 0, h.bottom(), &mut lens);
        let c = h.chain_counts();
        let min = *lens.iter().min().unwrap();
        assert_eq!(c.maximal as usize, lens.len());
        assert_eq!(c.shortest_len, min);
        assert_eq!(c.shortest_count as usize, lens.iter().filter(|&&l| l == min).count());
    }
}

fn arb_pair(n: usize) -> impl Strategy<Value = (RookVector, RookVector)> {
    let all = enumerate_rooks(n);
    let m = all.len();
    (0..m, 0..m).prop_map(move |(a, b)| (all[a], all[b]))
}

proptest! {
    #[test]
    fn prop_meet_join_bounds((u, v) in arb_pair(5)) {
        let m = meet(&u, &v).unwrap();
        let j = join(&u, &v).unwrap();
        prop_assert!(leq(&m, &u).unwrap() && leq(&m, &v).unwrap());
        prop_assert!(leq(&u, &j).unwrap() && leq(&v, &j).unwrap());
        prop_assert_eq!(leq(&u, &v).unwrap(), m == u);
        prop_assert_eq!(leq(&u, &v).unwrap(), j == v);
    }

    #[test]
    fn prop_meet_is_greatest((u, v) in arb_pair(5), seed in any::<u64>()) {
        // any common lower bound reached by random walks sits below the meet
        let mut rng = StdRng::seed_from_u64(seed);
        let m = meet(&u, &v).unwrap();
        let mut w = m;
        for _ in 0..6 {
            let up = act_right(&w, Generator::pi(rng.gen_range(0..5))).unwrap();
            w = up;
        }
        prop_assert!(leq(&w, &m).unwrap());
    }

    #[test]
    fn prop_strict_within_weak((u, _) in arb_pair(6)) {
        prop_assert!(strict_descents(&u).set.is_subset(&weak_descents(&u)));
    }
}
