//! R-codes: the encode/decode bijection with rooks, the m-statistic,
//! canonical reduced words, the action of generators on codes, reduced
//! words and braid equivalence.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::action::{right, GenKind, GenWord, Generator};
use crate::error::{Error, Result};
use crate::order::leq;
use crate::rookcore::{RookVector, MAX_N};

/// An R-code `c_1 … c_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RCode {
    letters: Vec<i64>,
}

impl RCode {
    /// Checks that `letters` is an R-code.
    pub fn new(letters: Vec<i64>) -> Result<Self> {
        check_code(&letters)?;
        Ok(RCode { letters })
    }

    /// The code `1 2 … n` of the identity rook.
    pub fn identity(n: usize) -> Self {
        RCode { letters: (1..=n as i64).collect() }
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    /// Overlined display form, e.g. `11̄120` for `1,1,-1,2,0`.
    pub fn to_overline(&self) -> String {
        let mut s = String::new();
        for &d in &self.letters {
            if d < 0 {
                s.push_str(&(-d).to_string());
                s.push('\u{305}');
            } else {
                s.push_str(&d.to_string());
            }
        }
        s
    }
}

impl fmt::Display for RCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.letters.iter().map(|d| d.to_string()).collect();
        f.write_str(&v.join(","))
    }
}

impl FromStr for RCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return RCode::new(Vec::new());
        }
        let letters = s
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad code letter {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        RCode::new(letters)
    }
}

impl Serialize for RCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RCode {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        RCode::new(v).map_err(serde::de::Error::custom)
    }
}

/// Generator alphabet: `π_0 … π_{n-1}` or `π_0, s_1 … s_{n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Alphabet {
    Q0,
    Q1,
}

impl Alphabet {
    pub fn gen(self, i: usize) -> Generator {
        match (self, i) {
            (_, 0) | (Alphabet::Q0, _) => Generator::pi(i),
            (Alphabet::Q1, _) => Generator::s(i),
        }
    }
}

impl FromStr for Alphabet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q0" => Ok(Alphabet::Q0),
            "q1" => Ok(Alphabet::Q1),
            _ => Err(Error::Parse(format!("unknown alphabet {s:?}"))),
        }
    }
}

/// The m-statistic of an integer word.
pub fn m_value(word: &[i64]) -> i64 {
    word.iter().fold(0, |m, &d| next_m(m, d))
}

fn check_code(letters: &[i64]) -> Result<()> {
    if letters.len() > MAX_N {
        return Err(Error::TooLarge { n: letters.len(), max: MAX_N });
    }
    let mut m = 0;
    for (k, &d) in letters.iter().enumerate() {
        if d < -m || d > k as i64 + 1 {
            return Err(Error::NotAnRCode(format!(
                "letter {d} at position {} outside [{}, {}]",
                k + 1,
                -m,
                k + 1
            )));
        }
        m = next_m(m, d);
    }
    Ok(())
}

#[inline]
fn next_m(m: i64, d: i64) -> i64 {
    if d <= 0 {
        -d
    } else if d <= m + 1 {
        m + 1
    } else {
        m
    }
}

/// True iff `letters` is an R-code.
pub fn is_rcode(letters: &[i64]) -> bool {
    check_code(letters).is_ok()
}

/// All R-codes of size `n`, in lexicographic order.
pub fn enumerate_codes(n: usize) -> Vec<RCode> {
    fn rec(k: usize, n: usize, m: i64, cur: &mut Vec<i64>, out: &mut Vec<RCode>) {
        if k == n {
            out.push(RCode { letters: cur.clone() });
            return;
        }
        for d in -m..=(k as i64 + 1) {
            cur.push(d);
            rec(k + 1, n, next_m(m, d), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, 0, &mut Vec::new(), &mut out);
    out
}

/// The code of a rook: strip `k` (record its position) or the first zero
/// (record minus the number of letters before it), for `k = n, …, 1`.
pub fn encode(r: &RookVector) -> RCode {
    let n = r.n();
    let mut w: Vec<u8> = r.entries().to_vec();
    let mut c = vec![0i64; n];
    for k in (1..=n).rev() {
        if let Some(p) = w.iter().position(|&x| x as usize == k) {
            c[k - 1] = p as i64 + 1;
            w.remove(p);
        } else {
            let p = w.iter().position(|&x| x == 0).expect("a zero when k is missing");
            c[k - 1] = -(p as i64);
            w.remove(p);
        }
    }
    RCode { letters: c }
}

/// Inverse of [`encode`].
pub fn decode(c: &RCode) -> Result<RookVector> {
    check_code(&c.letters)?;
    let mut w: Vec<u8> = Vec::with_capacity(c.n());
    for (k, &d) in c.letters.iter().enumerate() {
        if d >= 1 {
            w.insert(d as usize - 1, (k + 1) as u8);
        } else {
            w.insert((-d) as usize, 0);
        }
    }
    Ok(RookVector::from_bytes_unchecked(&w))
}

/// Decodes a raw letter slice.
pub fn decode_letters(letters: &[i64]) -> Result<RookVector> {
    decode(&RCode::new(letters.to_vec())?)
}

/// Letters of the column `Π^N_i`.
pub fn column_word(big_n: usize, i: i64, alphabet: Alphabet) -> Vec<Generator> {
    let g = |j: usize| alphabet.gen(j);
    if i > big_n as i64 {
        Vec::new()
    } else if i >= 0 {
        (i as usize..=big_n).rev().map(g).collect()
    } else {
        let mut w: Vec<Generator> = (0..=big_n).rev().map(g).collect();
        w.extend((1..=(-i) as usize).map(g));
        w
    }
}

/// Length of the column `Π^N_i`.
pub fn column_len(big_n: usize, i: i64) -> usize {
    let big_n = big_n as i64;
    (if i > big_n {
        0
    } else if i >= 0 {
        big_n - i + 1
    } else {
        big_n + 1 - i
    }) as usize
}

/// The canonical word `Π^0_{c_1} Π^1_{c_2} ⋯ Π^{n-1}_{c_n}`.
pub fn canonical_word(c: &RCode, alphabet: Alphabet) -> Result<GenWord> {
    check_code(&c.letters)?;
    let letters = c
        .letters
        .iter()
        .enumerate()
        .flat_map(|(k, &i)| column_word(k, i, alphabet))
        .collect();
    Ok(GenWord { n: c.n(), letters })
}

fn act(c: &[i64], j: usize, alphabet: Alphabet) -> Vec<i64> {
    let n = c.len();
    if n == 1 {
        debug_assert_eq!(j, 0);
        return vec![0];
    }
    let (prefix, last) = (&c[..n - 1], c[n - 1]);
    let with = |p: Vec<i64>, d: i64| {
        let mut p = p;
        p.push(d);
        p
    };
    let s = alphabet == Alphabet::Q1 && j > 0;
    if last >= 1 {
        let i = last as usize;
        if j == i {
            if s { with(prefix.to_vec(), last + 1) } else { c.to_vec() }
        } else if j + 1 == i {
            with(prefix.to_vec(), last - 1)
        } else if j + 1 < i {
            with(act(prefix, j, alphabet), last)
        } else {
            with(act(prefix, j - 1, alphabet), last)
        }
    } else {
        let i = (-last) as usize;
        if j == i {
            if s { with(prefix.to_vec(), last + 1) } else { c.to_vec() }
        } else if j > 0 && j < i {
            with(act(prefix, j, alphabet), last)
        } else if j > i + 1 {
            with(act(prefix, j - 1, alphabet), last)
        } else if j == 0 {
            let mut p = prefix.to_vec();
            for t in 0..i {
                p = act(&p, t, alphabet);
            }
            with(p, 0)
        } else if m_value(prefix) == i as i64 {
            c.to_vec()
        } else {
            with(prefix.to_vec(), -(i as i64 + 1))
        }
    }
}

/// The code `c · t`.
pub fn code_act(c: &RCode, t: Generator, alphabet: Alphabet) -> Result<RCode> {
    check_code(&c.letters)?;
    if t.index >= c.n() {
        return Err(Error::OutOfRange { position: 0, value: t.index as i64, n: c.n() });
    }
    match (alphabet, t.kind, t.index) {
        (_, GenKind::Pi, 0) | (Alphabet::Q0, GenKind::Pi, _) | (Alphabet::Q1, GenKind::S, _) => {}
        _ => return Err(Error::MixedAlphabet),
    }
    Ok(RCode { letters: act(&c.letters, t.index, alphabet) })
}

/// Alphabet of a word: `Q1` as soon as an `s` letter occurs.
pub fn word_alphabet(w: &GenWord) -> Result<Alphabet> {
    if !w.has_s() {
        return Ok(Alphabet::Q0);
    }
    if w.letters.iter().any(|g| g.kind == GenKind::Pi && g.index > 0) {
        return Err(Error::MixedAlphabet);
    }
    Ok(Alphabet::Q1)
}

/// Folds the code action over `w`, starting from the identity code.
pub fn normalize(w: &GenWord) -> Result<RCode> {
    let alphabet = word_alphabet(w)?;
    let mut c = RCode::identity(w.n).letters;
    for g in &w.letters {
        if g.index >= w.n {
            return Err(Error::OutOfRange { position: 0, value: g.index as i64, n: w.n });
        }
        c = act(&c, g.index, alphabet);
    }
    Ok(RCode { letters: c })
}

/// Length of the canonical word of `r`.
pub fn length(r: &RookVector) -> usize {
    code_length(&encode(r))
}

pub fn code_length(c: &RCode) -> usize {
    c.letters.iter().enumerate().map(|(k, &i)| column_len(k, i)).sum()
}

/// Evaluation of a word in either alphabet.
fn eval(w: &[Generator], n: usize) -> RookVector {
    w.iter().fold(RookVector::identity(n), |a, &g| right(&a, g))
}

pub fn is_reduced(w: &GenWord) -> bool {
    w.len() == length(&eval(&w.letters, w.n))
}

/// Words obtained from `w` by one braid move. Commutations need index gap
/// `>= 2`; braids `aba → bab` need `|a-b| = 1` with both indices positive.
pub fn braid_neighbours(w: &[Generator]) -> Vec<Vec<Generator>> {
    let mut out = Vec::new();
    for p in 0..w.len().saturating_sub(1) {
        let (a, b) = (w[p].index, w[p + 1].index);
        if a.abs_diff(b) >= 2 {
            let mut v = w.to_vec();
            v.swap(p, p + 1);
            out.push(v);
        }
        if p + 2 < w.len() && a.abs_diff(b) == 1 && a > 0 && b > 0 && w[p + 2] == w[p] && w[p].kind == w[p + 1].kind {
            let mut v = w.to_vec();
            v[p] = w[p + 1];
            v[p + 1] = w[p];
            v[p + 2] = w[p + 1];
            out.push(v);
        }
    }
    out
}

/// All words reachable from `w` by braid moves.
pub fn braid_closure(w: &GenWord) -> HashSet<Vec<Generator>> {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.letters.clone());
    queue.push_back(w.letters.clone());
    while let Some(u) = queue.pop_front() {
        for v in braid_neighbours(&u) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    seen
}

/// True iff `u` and `v` are connected by braid moves (breadth-first search).
pub fn braid_connected(u: &GenWord, v: &GenWord) -> bool {
    if u.n != v.n || u.len() != v.len() {
        return false;
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(u.letters.clone());
    queue.push_back(u.letters.clone());
    while let Some(x) = queue.pop_front() {
        if x == v.letters {
            return true;
        }
        for y in braid_neighbours(&x) {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    false
}

/// Braid equivalence of two reduced words. Reduced words are braid-connected
/// exactly when they evaluate to the same rook, so the comparison goes
/// through normal forms.
pub fn matsumoto_equivalent(u: &GenWord, v: &GenWord) -> Result<bool> {
    if u.n != v.n {
        return Err(Error::SizeMismatch { left: u.n, right: v.n });
    }
    if !is_reduced(u) || !is_reduced(v) {
        return Err(Error::NotReduced);
    }
    if word_alphabet(u)? != word_alphabet(v)? {
        return Ok(false);
    }
    Ok(normalize(u)? == normalize(v)?)
}

/// All reduced words over `π_0 … π_{n-1}` of `r`.
pub fn reduced_words(r: &RookVector) -> Vec<GenWord> {
    let n = r.n();
    let target = length(r);
    let mut out = Vec::new();
    fn rec(
        x: RookVector,
        k: usize,
        target: usize,
        r: &RookVector,
        cur: &mut Vec<Generator>,
        out: &mut Vec<GenWord>,
    ) {
        if k == target {
            if x == *r {
                out.push(GenWord { n: r.n(), letters: cur.clone() });
            }
            return;
        }
        for j in 0..r.n() {
            let g = Generator::pi(j);
            let y = right(&x, g);
            if y != x && length(&y) == k + 1 && leq(r, &y).unwrap_or(false) {
                cur.push(g);
                rec(y, k + 1, target, r, cur, out);
                cur.pop();
            }
        }
    }
    rec(RookVector::identity(n), 0, target, r, &mut Vec::new(), &mut out);
    out
}

/// Lehmer code `c_i = #{j > i : σ(i) > σ(j)}`.
pub fn lehmer_code(sigma: &RookVector) -> Result<Vec<usize>> {
    if !sigma.is_permutation() {
        return Err(Error::NotAPermutation);
    }
    let e = sigma.entries();
    Ok((0..e.len()).map(|i| e[i + 1..].iter().filter(|&&x| x < e[i]).count()).collect())
}

/// Outcome of [`reduced_word_correspondence`].
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Correspondence {
    pub n: usize,
    /// Reduced words visited, the empty word included.
    pub reduced_words: usize,
    /// First word where the two alphabets disagree.
    pub witness: Option<String>,
}

/// Walks every reduced word over `π_0 … π_{n-1}` together with its twin over
/// `π_0, s_1 … s_{n-1}`, checking that one extension is reduced iff the other
/// is, that prefix evaluations agree, and that prefix evaluations are distinct.
pub fn reduced_word_correspondence(n: usize) -> Correspondence {
    fn rec(
        n: usize,
        x0: RookVector,
        x1: RookVector,
        w: &mut Vec<Generator>,
        seen: &mut Vec<RookVector>,
        out: &mut Correspondence,
    ) {
        out.reduced_words += 1;
        for j in 0..n {
            if out.witness.is_some() {
                return;
            }
            let (g0, g1) = (Generator::pi(j), Alphabet::Q1.gen(j));
            let (y0, y1) = (right(&x0, g0), right(&x1, g1));
            let red0 = length(&y0) == w.len() + 1;
            let red1 = length(&y1) == w.len() + 1;
            w.push(g0);
            if red0 != red1 || (red0 && (y0 != y1 || seen.contains(&y0))) {
                out.witness = Some(GenWord { n, letters: w.clone() }.to_string());
            } else if red0 {
                seen.push(y0);
                rec(n, y0, y1, w, seen, out);
                seen.pop();
            }
            w.pop();
        }
    }
    let mut out = Correspondence { n, reduced_words: 0, witness: None };
    let id = RookVector::identity(n);
    rec(n, id, id, &mut Vec::new(), &mut vec![id], &mut out);
    out
}
