//! The stellar projections `st_k` and the quotient monoids they define.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::action::{left, mul, right, Generator};
use crate::error::{Error, Result};
use crate::order::{join, meet};
use crate::rookcore::{enumerate_rooks, transpose, RookVector};
use crate::verify::{Check, Report};

/// Zeroes every letter `v` such that at least `k` letters larger than `v` are missing.
pub fn st_k(r: &RookVector, k: usize) -> RookVector {
    let n = r.n();
    let present = r.support_mask();
    let mut out = *r;
    for x in out.entries_mut().iter_mut() {
        if *x == 0 {
            continue;
        }
        let missing = (*x as usize + 1..=n).filter(|v| present & (1 << v) == 0).count();
        if missing >= k {
            *x = 0;
        }
    }
    out
}

/// `st_1`.
pub fn st(r: &RookVector) -> RookVector {
    st_k(r, 1)
}

pub fn is_stellar(r: &RookVector, k: usize) -> bool {
    st_k(r, k) == *r
}

/// Product in the quotient by `st_k`.
pub fn stellar_mul(k: usize, r: &RookVector, s: &RookVector) -> Result<RookVector> {
    for x in [r, s] {
        if !is_stellar(x, k) {
            return Err(Error::NotStellar { k });
        }
    }
    Ok(st_k(&mul(r, s)?, k))
}

/// `st_k(R_n)`, sorted.
pub fn stellar_set(n: usize, k: usize) -> BTreeSet<RookVector> {
    enumerate_rooks(n).iter().map(|r| st_k(r, k)).collect()
}

/// `|st_k(R_n)|`.
pub fn stellar_card(n: usize, k: usize) -> usize {
    enumerate_rooks(n).iter().filter(|r| is_stellar(r, k)).count()
}

/// `{r : st_k(r) = s}`.
pub fn preimage(s: &RookVector, k: usize) -> Vec<RookVector> {
    enumerate_rooks(s.n()).into_iter().filter(|r| st_k(r, k) == *s).collect()
}

/// `π_i π_{i-1} ⋯ π_0` and the same word followed by `π_i`.
fn st_words(i: usize) -> (Vec<Generator>, Vec<Generator>) {
    let short: Vec<Generator> = (0..=i).rev().map(Generator::pi).collect();
    let mut long = short.clone();
    long.push(Generator::pi(i));
    (long, short)
}

/// Relation ST, the composition rule, the congruence property and the
/// sublattice property of transposed stellar sets.
pub fn verify_stellar(n: usize) -> Report {
    let mut report = Report::new("stellar");
    let rooks = enumerate_rooks(n);
    let stell: Vec<RookVector> = rooks.iter().filter(|r| is_stellar(r, 1)).copied().collect();

    // (a) relation ST acting on stellar elements, read in the quotient
    for i in 1..n.saturating_sub(1) {
        let (long, short) = st_words(i);
        let apply = |r: &RookVector, w: &[Generator]| w.iter().fold(*r, |a, &g| right(&a, g));
        let bad = stell.iter().find(|s| st(&apply(s, &long)) != st(&apply(s, &short)));
        report.push(Check::new(
            format!("ST i={i} on Stell_{n}"),
            bad.is_none(),
            bad.map(|s| format!("witness {s}")).unwrap_or_else(|| format!("{} elements", stell.len())),
        ));
    }

    // (b) composition: the image of St_i grows with i
    let mut comp_ok = true;
    let mut witness = String::new();
    'outer: for i in 0..=n {
        for j in 0..=n {
            for r in &rooks {
                if st_k(&st_k(r, j), i) != st_k(r, i.min(j)) {
                    comp_ok = false;
                    witness = format!("i={i} j={j} r={r}");
                    break 'outer;
                }
            }
        }
    }
    report.push(Check::new(format!("St_i St_j = St_min n={n}"), comp_ok, witness));

    // congruence on generators, both sides
    for k in 0..=n {
        let bad = rooks.iter().find(|r| {
            let p = st_k(r, k);
            (0..n).any(|i| {
                let g = Generator::pi(i);
                st_k(&right(&p, g), k) != st_k(&right(r, g), k) || st_k(&left(g, &p), k) != st_k(&left(g, r), k)
            })
        });
        report.push(Check::new(
            format!("st_{k} congruence n={n}"),
            bad.is_none(),
            bad.map(|r| format!("witness {r}")).unwrap_or_default(),
        ));
    }

    // (c) transposed stellar sets are sublattices
    for k in 0..=n {
        let set: BTreeSet<RookVector> =
            rooks.iter().filter(|r| is_stellar(r, k)).map(transpose).collect();
        let elems: Vec<RookVector> = set.iter().copied().collect();
        let bad = elems.par_iter().find_map_any(|u| {
            elems.iter().find_map(|v| {
                let m = meet(u, v).ok()?;
                let j = join(u, v).ok()?;
                if !set.contains(&m) || !set.contains(&j) {
                    Some(format!("{u} {v}"))
                } else {
                    None
                }
            })
        });
        report.push(Check::new(
            format!("transposed St_{k} sublattice n={n}"),
            bad.is_none(),
            bad.unwrap_or_else(|| format!("{} elements", elems.len())),
        ));
    }
    report
}

/// True iff relation ST holds without projecting, for every rook of `Stell_n`.
pub fn st_relation_holds_raw(n: usize, i: usize) -> bool {
    let (long, short) = st_words(i);
    enumerate_rooks(n).iter().filter(|r| is_stellar(r, 1)).all(|s| {
        let a = long.iter().fold(*s, |x, &g| right(&x, g));
        let b = short.iter().fold(*s, |x, &g| right(&x, g));
        a == b
    })
}
