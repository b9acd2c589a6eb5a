//! Generators, their right and left actions on rooks, word evaluation, the
//! product of the 0-rook monoid, idempotent powers, parabolic zeros and a
//! presentation checker.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rcode::{canonical_word, encode, Alphabet};
use crate::rookcore::{enumerate_rooks, RookVector, MAX_N};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenKind {
    Pi,
    S,
}

/// `π_i` (with `π_0 = P_1`) or `s_i` (`i >= 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
}

impl Generator {
    pub const fn pi(index: usize) -> Self {
        Generator { kind: GenKind::Pi, index }
    }

    pub fn s(index: usize) -> Self {
        assert!(index >= 1, "s_0 does not exist");
        Generator { kind: GenKind::S, index }
    }

    fn check(&self, n: usize) -> Result<()> {
        if self.index >= n || (self.kind == GenKind::S && self.index == 0) {
            return Err(Error::OutOfRange { position: 0, value: self.index as i64, n });
        }
        Ok(())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::Pi => write!(f, "p{}", self.index),
            GenKind::S => write!(f, "s{}", self.index),
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad generator {s:?}"));
        let (kind, rest) = match s.chars().next() {
            Some('p') | Some('P') => (GenKind::Pi, &s[1..]),
            Some('s') | Some('S') => (GenKind::S, &s[1..]),
            _ => return Err(bad()),
        };
        let index: usize = rest.parse().map_err(|_| bad())?;
        if kind == GenKind::S && index == 0 {
            return Err(bad());
        }
        Ok(Generator { kind, index })
    }
}

/// A word over the generators, acting on rooks of size `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenWord {
    pub n: usize,
    pub letters: Vec<Generator>,
}

impl GenWord {
    pub fn new(n: usize, letters: Vec<Generator>) -> Result<Self> {
        for g in &letters {
            g.check(n)?;
        }
        Ok(GenWord { n, letters })
    }

    pub fn empty(n: usize) -> Self {
        GenWord { n, letters: Vec::new() }
    }

    /// Parses whitespace-separated tokens such as `"p0 p1 s2"`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let letters = s.split_whitespace().map(str::parse).collect::<Result<Vec<_>>>()?;
        Self::new(n, letters)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn has_s(&self) -> bool {
        self.letters.iter().any(|g| g.kind == GenKind::S)
    }

    /// Exchanges `π_i ↔ s_i` for `i >= 1`, keeping `π_0`.
    pub fn swap_alphabet(&self) -> GenWord {
        let letters = self
            .letters
            .iter()
            .map(|g| match (g.kind, g.index) {
                (_, 0) => *g,
                (GenKind::Pi, i) => Generator::s(i),
                (GenKind::S, i) => Generator::pi(i),
            })
            .collect();
        GenWord { n: self.n, letters }
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.letters.iter().map(|g| g.to_string()).collect();
        f.write_str(&v.join(" "))
    }
}

/// Right action without bounds checks on the generator.
#[inline]
pub(crate) fn right(r: &RookVector, g: Generator) -> RookVector {
    let mut out = *r;
    let e = out.entries_mut();
    match (g.kind, g.index) {
        (GenKind::Pi, 0) => e[0] = 0,
        (GenKind::Pi, k) => {
            if e[k - 1] < e[k] {
                e.swap(k - 1, k);
            }
        }
        (GenKind::S, k) => e.swap(k - 1, k),
    }
    out
}

/// Left action without bounds checks on the generator.
#[inline]
pub(crate) fn left(g: Generator, r: &RookVector) -> RookVector {
    let mut out = *r;
    let i = g.index as u8;
    let e = out.entries_mut();
    let pi = e.iter().position(|&x| x == i && i != 0);
    let pj = e.iter().position(|&x| x == i + 1);
    match (g.kind, g.index) {
        (GenKind::Pi, 0) => {
            if let Some(p) = pj {
                e[p] = 0;
            }
        }
        (GenKind::Pi, _) => match (pi, pj) {
            (Some(a), Some(b)) if a < b => e.swap(a, b),
            (None, Some(b)) => e[b] = i,
            _ => {}
        },
        (GenKind::S, _) => {
            if let Some(a) = pi {
                e[a] = i + 1;
            }
            if let Some(b) = pj {
                e[b] = i;
            }
        }
    }
    out
}

/// `r · g`.
pub fn act_right(r: &RookVector, g: Generator) -> Result<RookVector> {
    g.check(r.n())?;
    Ok(right(r, g))
}

/// `g · r`.
pub fn act_left(g: Generator, r: &RookVector) -> Result<RookVector> {
    g.check(r.n())?;
    Ok(left(g, r))
}

/// `r · w_1 ⋯ w_k`.
pub fn act_word(r: &RookVector, w: &GenWord) -> Result<RookVector> {
    if w.n != r.n() {
        return Err(Error::SizeMismatch { left: r.n(), right: w.n });
    }
    Ok(w.letters.iter().fold(*r, |acc, &g| right(&acc, g)))
}

/// `w_1 ⋯ w_k · r`.
pub fn act_word_left(w: &GenWord, r: &RookVector) -> Result<RookVector> {
    if w.n != r.n() {
        return Err(Error::SizeMismatch { left: w.n, right: r.n() });
    }
    Ok(w.letters.iter().rev().fold(*r, |acc, &g| left(g, &acc)))
}

/// `1_n · w`.
pub fn eval_word(w: &GenWord) -> RookVector {
    w.letters.iter().fold(RookVector::identity(w.n), |acc, &g| right(&acc, g))
}

/// The word `P_1 π_1 P_1 π_2 π_1 P_1 ⋯ P_1 π_{j-1} ⋯ π_1 P_1` for `P_j`.
pub fn p_word(n: usize, j: usize) -> GenWord {
    assert!(j >= 1 && j <= n);
    let mut letters = vec![Generator::pi(0)];
    for k in 1..j {
        for i in (1..=k).rev() {
            letters.push(Generator::pi(i));
        }
        letters.push(Generator::pi(0));
    }
    GenWord { n, letters }
}

/// The other word `P_1 π_1 ⋯ π_{j-1} P_1 ⋯ P_1 π_1 π_2 P_1 π_1 P_1` for `P_j`.
pub fn p_word_alt(n: usize, j: usize) -> GenWord {
    assert!(j >= 1 && j <= n);
    let mut letters = vec![Generator::pi(0)];
    for k in (1..j).rev() {
        for i in 1..=k {
            letters.push(Generator::pi(i));
        }
        letters.push(Generator::pi(0));
    }
    GenWord { n, letters }
}

/// `r · P_j`: zeroes the first `j` entries.
pub fn act_right_p(r: &RookVector, j: usize) -> RookVector {
    let mut out = *r;
    for x in out.entries_mut().iter_mut().take(j) {
        *x = 0;
    }
    out
}

/// `P_j · r`: zeroes every value `<= j`.
pub fn act_left_p(j: usize, r: &RookVector) -> RookVector {
    let mut out = *r;
    for x in out.entries_mut().iter_mut() {
        if (*x as usize) <= j {
            *x = 0;
        }
    }
    out
}

/// Product `π_r π_s` in the 0-rook monoid, as a rook.
pub fn mul(r: &RookVector, s: &RookVector) -> Result<RookVector> {
    if r.n() != s.n() {
        return Err(Error::SizeMismatch { left: r.n(), right: s.n() });
    }
    let w = canonical_word(&encode(s), Alphabet::Q0)?;
    act_word(r, &w)
}

/// Product table over `rooks` (row `i`, column `j` holds the index of `rooks[i]·rooks[j]`).
/// Every product must land in `rooks`.
pub fn mul_table(rooks: &[RookVector]) -> Vec<Vec<usize>> {
    use rayon::prelude::*;
    let index: std::collections::HashMap<RookVector, usize> =
        rooks.iter().enumerate().map(|(i, r)| (*r, i)).collect();
    let words: Vec<GenWord> = rooks
        .iter()
        .map(|s| canonical_word(&encode(s), Alphabet::Q0).expect("code of a rook"))
        .collect();
    rooks
        .par_iter()
        .map(|r| words.iter().map(|w| index[&act_word(r, w).unwrap()]).collect())
        .collect()
}

/// The idempotent power `π_r^ω`, by repeated squaring.
pub fn omega_power(r: &RookVector) -> Result<RookVector> {
    let cap = 2 * r.n() + 2;
    let mut x = *r;
    for _ in 0..cap {
        let y = mul(&x, &x)?;
        if y == x {
            return Ok(x);
        }
        x = y;
    }
    Err(Error::NoStabilisation)
}

/// The zero `π_S` of the parabolic submonoid generated by `{π_i : i ∈ S}`.
pub fn parabolic_zero(n: usize, s: &[usize]) -> Result<RookVector> {
    if n > MAX_N {
        return Err(Error::TooLarge { n, max: MAX_N });
    }
    if let Some(&bad) = s.iter().find(|&&i| i >= n) {
        return Err(Error::OutOfRange { position: 0, value: bad as i64, n });
    }
    let mut mask = 0u32;
    for &i in s {
        mask |= 1 << i;
    }
    // block boundaries are the positions of T = [0,n-1] \ S
    let mut cuts: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
    cuts.push(n);
    let mut out = vec![0usize; n];
    let first = cuts[0];
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        for (off, slot) in out[a..b].iter_mut().enumerate() {
            *slot = b - off;
        }
    }
    for x in out.iter_mut().take(first) {
        *x = 0;
    }
    RookVector::new(&out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Q0,
    Q1,
    Alt,
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q0" => Ok(Variant::Q0),
            "q1" => Ok(Variant::Q1),
            "alt" => Ok(Variant::Alt),
            _ => Err(Error::Parse(format!("unknown variant {s:?}"))),
        }
    }
}

/// A relation instance that fails on some rook.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub relation: String,
    pub lhs: String,
    pub rhs: String,
    pub witness: RookVector,
    pub lhs_value: RookVector,
    pub rhs_value: RookVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationCheck {
    pub relation: String,
    pub instances: usize,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub n: usize,
    pub variant: Variant,
    pub checks: Vec<RelationCheck>,
}

impl PresentationReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(|c| c.violations.is_empty())
    }
}

struct Relation {
    name: &'static str,
    // each instance: a list of words that must all act identically
    instances: Vec<Vec<Vec<Generator>>>,
}

fn pi(i: usize) -> Generator {
    Generator::pi(i)
}

fn cat(parts: &[&[Generator]]) -> Vec<Generator> {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

fn relations(n: usize, variant: Variant) -> Vec<Relation> {
    let p = |j: usize| p_word(n, j).letters;
    let mut rels = Vec::new();
    let mut add = |name: &'static str, instances: Vec<Vec<Vec<Generator>>>| rels.push(Relation { name, instances });
    match variant {
        Variant::Q0 => {
            add("RB1", (0..n).map(|i| vec![vec![pi(i), pi(i)], vec![pi(i)]]).collect());
            add(
                "RB2",
                (1..n.saturating_sub(1))
                    .map(|i| vec![vec![pi(i), pi(i + 1), pi(i)], vec![pi(i + 1), pi(i), pi(i + 1)]])
                    .collect(),
            );
            let rb3 = if n >= 2 {
                vec![vec![
                    vec![pi(1), pi(0), pi(1), pi(0)],
                    vec![pi(0), pi(1), pi(0)],
                    vec![pi(0), pi(1), pi(0), pi(1)],
                ]]
            } else {
                vec![]
            };
            add("RB3", rb3);
            let mut rb4 = Vec::new();
            for i in 0..n {
                for j in i + 2..n {
                    rb4.push(vec![vec![pi(i), pi(j)], vec![pi(j), pi(i)]]);
                }
            }
            add("RB4", rb4);
        }
        Variant::Alt => {
            add("R1", (1..n).map(|i| vec![vec![pi(i), pi(i)], vec![pi(i)]]).collect());
            add(
                "R2",
                (1..n.saturating_sub(1))
                    .map(|i| vec![vec![pi(i), pi(i + 1), pi(i)], vec![pi(i + 1), pi(i), pi(i + 1)]])
                    .collect(),
            );
            let mut r3 = Vec::new();
            for i in 1..n {
                for j in i + 2..n {
                    r3.push(vec![vec![pi(i), pi(j)], vec![pi(j), pi(i)]]);
                }
            }
            add("R3", r3);
            add("R4", (1..=n).map(|i| vec![cat(&[&p(i), &p(i)]), p(i)]).collect());
            let mut r5 = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    r5.push(vec![cat(&[&p(i), &p(j)]), cat(&[&p(j), &p(i)])]);
                }
            }
            add("R5", r5);
            let mut r6 = Vec::new();
            let mut r7 = Vec::new();
            for i in 1..=n {
                for j in 1..n {
                    if i < j {
                        r6.push(vec![cat(&[&p(i), &[pi(j)]]), cat(&[&[pi(j)], &p(i)])]);
                    } else if j < i {
                        r7.push(vec![cat(&[&p(i), &[pi(j)]]), cat(&[&[pi(j)], &p(i)]), p(i)]);
                    }
                }
            }
            add("R6", r6);
            add("R7", r7);
            add(
                "R8",
                (1..n).map(|i| vec![p(i + 1), cat(&[&p(i), &[pi(i)], &p(i)])]).collect(),
            );
            add("R4.1", vec![vec![vec![pi(0), pi(0)], vec![pi(0)]]]);
            add("R5.1", (2..n).map(|j| vec![vec![pi(0), pi(j)], vec![pi(j), pi(0)]]).collect());
            let r61 = if n >= 2 {
                vec![vec![
                    vec![pi(1), pi(0), pi(1), pi(0)],
                    vec![pi(0), pi(1), pi(0)],
                    vec![pi(0), pi(1), pi(0), pi(1)],
                ]]
            } else {
                vec![]
            };
            add("R6.1", r61);
            add(
                "Pn",
                (1..=n).map(|j| vec![p(j), p_word_alt(n, j).letters]).collect(),
            );
        }
        Variant::Q1 => {
            let s = Generator::s;
            add("Rs1", (1..n).map(|i| vec![vec![s(i), s(i)], vec![]]).collect());
            add(
                "Rs2",
                (1..n.saturating_sub(1))
                    .map(|i| vec![vec![s(i), s(i + 1), s(i)], vec![s(i + 1), s(i), s(i + 1)]])
                    .collect(),
            );
            let mut rs3 = Vec::new();
            for i in 1..n {
                for j in i + 2..n {
                    rs3.push(vec![vec![s(i), s(j)], vec![s(j), s(i)]]);
                }
            }
            add("Rs3", rs3);
            add("Rs4.1", vec![vec![vec![pi(0), pi(0)], vec![pi(0)]]]);
            add("Rs5.1", (2..n).map(|j| vec![vec![pi(0), s(j)], vec![s(j), pi(0)]]).collect());
            let rs61 = if n >= 2 {
                vec![vec![
                    vec![s(1), pi(0), s(1), pi(0)],
                    vec![pi(0), s(1), pi(0)],
                    vec![pi(0), s(1), pi(0), s(1)],
                ]]
            } else {
                vec![]
            };
            add("Rs6.1", rs61);
        }
    }
    rels
}

fn fmt_word(w: &[Generator]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
}

/// Checks every relation of `variant` as an identity of functions on `R_n`.
pub fn check_presentation(n: usize, variant: Variant) -> PresentationReport {
    use rayon::prelude::*;
    let rooks = enumerate_rooks(n);
    let checks = relations(n, variant)
        .into_par_iter()
        .map(|rel| {
            let mut violations = Vec::new();
            for inst in &rel.instances {
                for r in &rooks {
                    let vals: Vec<RookVector> =
                        inst.iter().map(|w| w.iter().fold(*r, |a, &g| right(&a, g))).collect();
                    if let Some(k) = (1..vals.len()).find(|&k| vals[k] != vals[0]) {
                        violations.push(Violation {
                            relation: rel.name.to_string(),
                            lhs: fmt_word(&inst[0]),
                            rhs: fmt_word(&inst[k]),
                            witness: *r,
                            lhs_value: vals[0],
                            rhs_value: vals[k],
                        });
                        break;
                    }
                }
            }
            RelationCheck { relation: rel.name.to_string(), instances: rel.instances.len(), violations }
        })
        .collect();
    PresentationReport { n, variant, checks }
}
