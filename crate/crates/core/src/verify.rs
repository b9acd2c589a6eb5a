//! Invariant suites, run by `verify <suite>`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::action::{check_presentation, eval_word, mul, parabolic_zero, Generator, Variant};
use crate::error::{Error, Result};
use crate::order::{
    chain_counts, cset, first_value, join, join_irreducibles, leq, mcr_dyck_correspondence, mcr_set, meet,
    meet_irreducibles, Hasse,
};
use crate::rcode::{
    braid_closure, canonical_word, decode, encode, enumerate_codes, length, m_value, reduced_word_correspondence,
    reduced_words, Alphabet,
};
use crate::reptheory::{
    aladin_quotient, all_descent_sets, cartan_matrix, decompose_projective, descent_class, permutation_composition, idempotent_of, idempotents, is_idempotent, rfix,
    rfix_brute, star, tower_ind_simple,
};
use crate::rookcore::{
    count_by_first_zero, enumerate_rooks, first_zero, foata_inverse, foata_map, matrix_product, rook_count,
    rook_from_triple, rook_triple, transpose, RookVector,
};
use crate::stellar::verify_stellar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: impl Into<String>) -> Self {
        Report { suite: suite.into(), checks: Vec::new() }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "ok  " } else { "FAIL" };
            if c.detail.is_empty() {
                writeln!(f, "[{mark}] {}: {}", self.suite, c.name)?;
            } else {
                writeln!(f, "[{mark}] {}: {} ({})", self.suite, c.name, c.detail)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Rookcore,
    Action,
    Rcode,
    Order,
    Stellar,
    Reptheory,
    All,
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "rookcore" => Suite::Rookcore,
            "action" => Suite::Action,
            "rcode" => Suite::Rcode,
            "order" => Suite::Order,
            "stellar" => Suite::Stellar,
            "reptheory" => Suite::Reptheory,
            "all" => Suite::All,
            _ => return Err(Error::Parse(format!("unknown suite {s:?}"))),
        })
    }
}

/// Size bounds: `linear` for scans over `R_n`, `quadratic` for pairwise work.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub linear: usize,
    pub quadratic: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { linear: 6, quadratic: 4 }
    }
}

pub fn run(suite: Suite, b: Bounds) -> Report {
    match suite {
        Suite::Rookcore => rookcore_suite(b),
        Suite::Action => action_suite(b),
        Suite::Rcode => rcode_suite(b),
        Suite::Order => order_suite(b),
        Suite::Stellar => stellar_suite(b),
        Suite::Reptheory => reptheory_suite(b),
        Suite::All => {
            let mut r = Report::new("all");
            for s in [Suite::Rookcore, Suite::Action, Suite::Rcode, Suite::Order, Suite::Stellar, Suite::Reptheory] {
                let sub = run(s, b);
                for c in sub.checks {
                    r.push(Check::new(format!("{}: {}", sub.suite, c.name), c.passed, c.detail));
                }
            }
            r
        }
    }
}

fn first_failure<T: Sync, F: Fn(&T) -> bool + Sync>(items: &[T], ok: F) -> Option<&T> {
    items.par_iter().find_any(|x| !ok(x))
}

fn check_all(report: &mut Report, name: String, rooks: &[RookVector], ok: impl Fn(&RookVector) -> bool + Sync) {
    let bad = first_failure(rooks, ok);
    report.push(Check::new(
        name,
        bad.is_none(),
        bad.map(|r| format!("witness {r}")).unwrap_or_else(|| format!("{} elements", rooks.len())),
    ));
}

pub fn rookcore_suite(b: Bounds) -> Report {
    let mut report = Report::new("rookcore");
    for n in 0..=b.linear {
        let rooks = enumerate_rooks(n);
        let row: u64 = count_by_first_zero(n).iter().sum();
        report.push(Check::new(
            format!("|R_{n}|"),
            rooks.len() as u64 == rook_count(n) && row == rook_count(n),
            format!("{} enumerated, {} counted, {} by first zero", rooks.len(), rook_count(n), row),
        ));
        let brute: Vec<u64> = (0..=n)
            .map(|i| rooks.iter().filter(|r| first_zero(r) == i).count() as u64)
            .collect();
        report.push(Check::new(format!("first-zero recurrence n={n}"), brute == count_by_first_zero(n), ""));
        check_all(&mut report, format!("transpose involution n={n}"), &rooks, |r| transpose(&transpose(r)) == *r);
        check_all(&mut report, format!("triple round trip n={n}"), &rooks, |r| {
            rook_from_triple(&rook_triple(r), n).map(|x| x == *r).unwrap_or(false)
        });
        check_all(&mut report, format!("foata bijection n={n}"), &rooks, |r| foata_inverse(&foata_map(r)) == *r);
    }
    for n in 0..=b.quadratic {
        let rooks = enumerate_rooks(n);
        let bad = rooks.par_iter().find_map_any(|r| {
            rooks.iter().find_map(|s| {
                let lhs = transpose(&matrix_product(r, s).ok()?);
                let rhs = matrix_product(&transpose(s), &transpose(r)).ok()?;
                (lhs != rhs).then(|| format!("{r}·{s}"))
            })
        });
        report.push(Check::new(format!("transpose anti-automorphism n={n}"), bad.is_none(), bad.unwrap_or_default()));
    }
    report
}

pub fn action_suite(b: Bounds) -> Report {
    let mut report = Report::new("action");
    for n in 1..=b.linear {
        for v in [Variant::Q0, Variant::Alt, Variant::Q1] {
            let p = check_presentation(n, v);
            let bad: Vec<String> =
                p.checks.iter().filter(|c| !c.violations.is_empty()).map(|c| c.relation.clone()).collect();
            report.push(Check::new(format!("presentation {v:?} n={n}"), bad.is_empty(), bad.join(",")));
        }
        let idem = enumerate_rooks(n).into_iter().filter(is_idempotent).count();
        report.push(Check::new(format!("2^{n} idempotents"), idem == 1 << n, format!("{idem}")));
    }
    for n in 1..=b.quadratic {
        let all = all_descent_sets(n);
        let mut ok = true;
        let mut w = String::new();
        for s in &all {
            for t in &all {
                let u: Vec<usize> = s.members.union(&t.members).copied().collect();
                let e = parabolic_zero(n, &s.to_vec()).unwrap();
                let f = parabolic_zero(n, &t.to_vec()).unwrap();
                if star(&e, &f).ok() != parabolic_zero(n, &u).ok() {
                    ok = false;
                    w = format!("{s} {t}");
                }
            }
        }
        report.push(Check::new(format!("star = union n={n}"), ok, w));
    }
    report
}

pub fn rcode_suite(b: Bounds) -> Report {
    let mut report = Report::new("rcode");
    for n in 0..=b.linear {
        let rooks = enumerate_rooks(n);
        check_all(&mut report, format!("decode∘encode n={n}"), &rooks, |r| {
            let c = encode(r);
            decode(&c).map(|x| x == *r).unwrap_or(false) && m_value(c.letters()) as usize == first_zero(r)
        });
        let codes = enumerate_codes(n);
        let bad = codes.par_iter().find_any(|c| decode(c).map(|r| encode(&r) != **c).unwrap_or(true));
        report.push(Check::new(
            format!("encode∘decode n={n}"),
            bad.is_none() && codes.len() as u64 == rook_count(n),
            bad.map(|c| c.to_string()).unwrap_or_else(|| format!("{} codes", codes.len())),
        ));
        report.push(Check::new(
            format!("length of 0^{n}"),
            length(&RookVector::zero(n)) == n * (n + 1) / 2,
            format!("{}", length(&RookVector::zero(n))),
        ));
    }
    for n in 0..=b.quadratic {
        let c = reduced_word_correspondence(n);
        report.push(Check::new(
            format!("q0/q1 reduced words n={n}"),
            c.witness.is_none(),
            c.witness.unwrap_or_else(|| format!("{} reduced words", c.reduced_words)),
        ));
        let rooks = enumerate_rooks(n);
        let bad = rooks.par_iter().find_any(|r| {
            let words = reduced_words(r);
            let set: HashSet<Vec<Generator>> = words.iter().map(|w| w.letters.clone()).collect();
            words.first().map(|w| braid_closure(w) != set).unwrap_or(true)
        });
        report.push(Check::new(
            format!("Matsumoto n={n}"),
            bad.is_none(),
            bad.map(|r| format!("witness {r}")).unwrap_or_default(),
        ));
    }
    for n in 0..b.linear {
        let rooks = enumerate_rooks(n);
        for alph in [Alphabet::Q0, Alphabet::Q1] {
            check_all(&mut report, format!("canonical word {alph:?} n={n}"), &rooks, |r| {
                canonical_word(&encode(r), alph).map(|w| eval_word(&w) == *r && w.len() == length(r)).unwrap_or(false)
            });
        }
    }
    report
}

/// Elements reachable from `r` in the right Cayley graph.
fn reachable(r: &RookVector) -> HashSet<RookVector> {
    crate::reptheory::right_orbit(r)
}

pub fn order_suite(b: Bounds) -> Report {
    let mut report = Report::new("order");
    for n in 0..=b.quadratic {
        let rooks = enumerate_rooks(n);
        let bad = rooks.par_iter().find_map_any(|u| {
            let down = reachable(u);
            rooks.iter().find_map(|r| (leq(r, u).ok()? != down.contains(r)).then(|| format!("{r} {u}")))
        });
        report.push(Check::new(format!("leq = reachability n={n}"), bad.is_none(), bad.unwrap_or_default()));

        let bad = rooks.par_iter().find_map_any(|u| {
            rooks.iter().find_map(|v| {
                let m = meet(u, v).ok()?;
                let j = join(u, v).ok()?;
                let lower: Vec<&RookVector> =
                    rooks.iter().filter(|x| leq(x, u).unwrap() && leq(x, v).unwrap()).collect();
                let upper: Vec<&RookVector> =
                    rooks.iter().filter(|x| leq(u, x).unwrap() && leq(v, x).unwrap()).collect();
                let glb = lower.contains(&&m) && lower.iter().all(|x| leq(x, &m).unwrap());
                let lub = upper.contains(&&j) && upper.iter().all(|x| leq(&j, x).unwrap());
                (!glb || !lub).then(|| format!("{u} {v}"))
            })
        });
        report.push(Check::new(format!("meet/join are glb/lub n={n}"), bad.is_none(), bad.unwrap_or_default()));

        let hasse = Hasse::build(n).expect("bounded");
        let topo = hasse.topological_order();
        report.push(Check::new(
            format!("right Cayley graph acyclic n={n}"),
            topo.len() == hasse.len(),
            format!("{} of {}", topo.len(), hasse.len()),
        ));
    }
    for n in 1..=b.linear.min(6) {
        let mi = meet_irreducibles(n).unwrap_or_default();
        let want = 3usize.pow(n as u32) - 2usize.pow(n as u32);
        report.push(Check::new(format!("meet-irreducibles n={n}"), mi.len() == want, format!("{}", mi.len())));
        let per: Vec<usize> = (1..=n).map(|i| mi.iter().filter(|r| first_value(r) == i).count()).collect();
        let want: Vec<usize> = (1..=n).map(|i| 3usize.pow((n - i) as u32) * 2usize.pow(i as u32 - 1)).collect();
        report.push(Check::new(format!("meet-irreducibles by first value n={n}"), per == want, format!("{per:?}")));
    }
    for n in 0..=b.linear.min(6) {
        let k = mcr_set(n).map(|m| m.len()).unwrap_or(0);
        report.push(Check::new(format!("|MCR_{n}| = 2^{n}"), k == 1 << n, format!("{k}")));
    }
    for n in 1..=(b.quadratic + 1).min(6) {
        let ok = mcr_dyck_correspondence(n).unwrap_or(false);
        report.push(Check::new(format!("MCR/Dyck covers n={n}"), ok, ""));
    }
    for n in 0..=b.linear.min(6) {
        if let Ok(c) = chain_counts(n) {
            report.push(Check::new(
                format!("shortest chains have length n(n+1)/2, n={n}"),
                c.shortest_len == n * (n + 1) / 2,
                format!("{} maximal, {} shortest", c.maximal, c.shortest_count),
            ));
        }
    }
    let ji_want = [1usize, 5, 16, 43, 106, 249];
    for n in 1..=b.linear.min(6) {
        let ji = join_irreducibles(n).map(|v| v.len()).unwrap_or(0);
        report.push(Check::new(format!("join-irreducibles n={n}"), ji == ji_want[n - 1], format!("{ji}")));
    }
    report
}

pub fn stellar_suite(b: Bounds) -> Report {
    let mut report = Report::new("stellar");
    for n in 1..=b.quadratic {
        report.extend(verify_stellar(n));
    }
    report
}

pub fn reptheory_suite(b: Bounds) -> Report {
    let mut report = Report::new("reptheory");
    for n in 0..=b.linear.min(6) {
        let ok = all_descent_sets(n).iter().all(|s| parabolic_zero(n, &s.to_vec()).ok() == Some(idempotent_of(s)));
        report.push(Check::new(format!("ribbon fillings n={n}"), ok, ""));
        let rooks = enumerate_rooks(n);
        let ones: BTreeSet<RookVector> = idempotents(n).into_iter().collect();
        check_all(&mut report, format!("rfix is a fixing idempotent n={n}"), &rooks, |x| {
            let e = rfix(x);
            ones.contains(&e) && mul(x, &e).map(|y| y == *x).unwrap_or(false)
        });
        if let Ok(c) = cartan_matrix(n) {
            report.push(Check::new(format!("Cartan total n={n}"), c.total() == rook_count(n), format!("{}", c.total())));
        }
    }
    for n in 0..=b.quadratic {
        check_all(&mut report, format!("rfix minimal n={n}"), &enumerate_rooks(n), |x| {
            rfix_brute(x).map(|e| e == rfix(x)).unwrap_or(false)
        });
    }
    for n in 1..=b.linear.min(6) {
        let perms: Vec<RookVector> = enumerate_rooks(n).into_iter().filter(|r| r.is_permutation()).collect();
        let mut ok = true;
        let mut w = String::new();
        for s in all_descent_sets(n) {
            let shape = cset(&s.members, n).expect("members below n");
            let dim: usize = decompose_projective(&shape)
                .terms
                .iter()
                .map(|(c, &k)| k as usize * perms.iter().filter(|p| permutation_composition(p) == *c).count())
                .sum();
            if dim != descent_class(&s).len() {
                ok = false;
                w = format!("{shape}: {dim} vs {}", descent_class(&s).len());
            }
        }
        report.push(Check::new(format!("decomposition dimensions n={n}"), ok, w));
    }
    let cap = b.quadratic + 1;
    for total in 2..=cap {
        for n in 1..total {
            let m = total - n;
            let mut ok = true;
            let mut w = String::new();
            for i in all_descent_sets(n) {
                for j in all_descent_sets(m) {
                    let e = parabolic_zero(n, &i.to_vec()).unwrap();
                    let f = parabolic_zero(m, &j.to_vec()).unwrap();
                    let got: BTreeSet<RookVector> =
                        tower_ind_simple(&i, &j).map(|x| x.basis.into_iter().collect()).unwrap_or_default();
                    if got != aladin_quotient(&e, &f) {
                        ok = false;
                        w = format!("{i} {j}");
                    }
                }
            }
            report.push(Check::new(format!("induced simple = quotient n={n} m={m}"), ok, w));
        }
    }
    report
}
