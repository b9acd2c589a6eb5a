//! Rook vectors, rook triples, enumeration, first-zero counting and the
//! cycle/chain bijection.
//!
//! A rook vector `r_1 … r_n` lists, for each column of an `n × n` 0/1 matrix
//! with at most one nonzero entry per row and column, the row of that entry
//! (or 0 for an empty column).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported size.
pub const MAX_N: usize = 15;

/// A rook vector of size `n <= MAX_N`.
///
/// Ordering is by size, then lexicographic on the entries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RookVector {
    n: u8,
    e: [u8; MAX_N],
}

impl RookVector {
    /// Checks `entries` and builds the rook.
    pub fn new(entries: &[usize]) -> Result<Self> {
        let n = entries.len();
        if n > MAX_N {
            return Err(Error::TooLarge { n, max: MAX_N });
        }
        let mut seen = 0u32;
        let mut e = [0u8; MAX_N];
        for (position, &v) in entries.iter().enumerate() {
            if v > n {
                return Err(Error::OutOfRange { position: position + 1, value: v as i64, n });
            }
            if v != 0 {
                if seen & (1 << v) != 0 {
                    return Err(Error::DuplicateNonzero { value: v });
                }
                seen |= 1 << v;
            }
            e[position] = v as u8;
        }
        Ok(RookVector { n: n as u8, e })
    }

    /// Same as [`RookVector::new`] for signed input; negative entries are rejected.
    pub fn from_signed(entries: &[i64]) -> Result<Self> {
        let n = entries.len();
        for (position, &v) in entries.iter().enumerate() {
            if v < 0 {
                return Err(Error::OutOfRange { position: position + 1, value: v, n });
            }
        }
        let u: Vec<usize> = entries.iter().map(|&v| v as usize).collect();
        Self::new(&u)
    }

    /// Builds a rook from bytes already known to be valid.
    pub(crate) fn from_bytes_unchecked(entries: &[u8]) -> Self {
        let mut e = [0u8; MAX_N];
        e[..entries.len()].copy_from_slice(entries);
        RookVector { n: entries.len() as u8, e }
    }

    /// The identity rook `12…n`.
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_N);
        let mut e = [0u8; MAX_N];
        for (i, x) in e.iter_mut().enumerate().take(n) {
            *x = (i + 1) as u8;
        }
        RookVector { n: n as u8, e }
    }

    /// The zero rook `0…0`.
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_N);
        RookVector { n: n as u8, e: [0; MAX_N] }
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// Entries as a slice (0-based indexing, entry `i` is `r_{i+1}`).
    pub fn entries(&self) -> &[u8] {
        &self.e[..self.n as usize]
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [u8] {
        let n = self.n as usize;
        &mut self.e[..n]
    }

    /// Entry at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.e[i - 1] as usize
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.entries().iter().map(|&x| x as usize).collect()
    }

    /// Bitmask of the nonzero values (bit `v` set when `v` occurs).
    pub fn support_mask(&self) -> u32 {
        self.entries().iter().filter(|&&x| x != 0).fold(0, |m, &x| m | (1 << x))
    }

    /// Set of nonzero values.
    pub fn support(&self) -> BTreeSet<usize> {
        self.entries().iter().filter(|&&x| x != 0).map(|&x| x as usize).collect()
    }

    /// 1-based position of the value `v`, if present.
    pub fn position_of(&self, v: usize) -> Option<usize> {
        if v == 0 {
            return None;
        }
        self.entries().iter().position(|&x| x as usize == v).map(|p| p + 1)
    }

    pub fn zero_count(&self) -> usize {
        self.entries().iter().filter(|&&x| x == 0).count()
    }

    pub fn is_permutation(&self) -> bool {
        self.zero_count() == 0
    }

    /// Compact key, 4 bits per entry.
    pub fn key(&self) -> u64 {
        self.entries().iter().fold(self.n as u64, |k, &x| (k << 4) | x as u64)
    }

    /// Comma-separated form, valid for every size.
    pub fn to_csv(&self) -> String {
        self.entries().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }

    /// The 0/1 matrix: `m[row][col] = 1` iff `r_{col+1} = row + 1`.
    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut m = vec![vec![0u8; n]; n];
        for (c, &v) in self.entries().iter().enumerate() {
            if v != 0 {
                m[v as usize - 1][c] = 1;
            }
        }
        m
    }

    /// Inverse of [`RookVector::to_matrix`].
    pub fn from_matrix(m: &[Vec<u8>]) -> Result<Self> {
        let n = m.len();
        let mut entries = vec![0usize; n];
        for (c, slot) in entries.iter_mut().enumerate() {
            let rows: Vec<usize> = (0..n).filter(|&r| m[r][c] != 0).collect();
            match rows.len() {
                0 => {}
                1 => *slot = rows[0] + 1,
                _ => return Err(Error::DuplicateNonzero { value: c + 1 }),
            }
        }
        Self::new(&entries)
    }
}

impl fmt::Display for RookVector {
    /// Digit string when `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 9 {
            for &x in self.entries() {
                write!(f, "{x}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.to_csv())
        }
    }
}

impl fmt::Debug for RookVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RookVector({self})")
    }
}

impl FromStr for RookVector {
    type Err = Error;

    /// Accepts comma-separated integers, or a digit string when `n <= 9`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(RookVector::zero(0));
        }
        let entries: Vec<i64> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            if s.len() > 9 {
                return Err(Error::Parse("digit strings are limited to n <= 9; use commas".into()));
            }
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as i64).ok_or_else(|| Error::Parse(format!("bad digit {c:?}"))))
                .collect::<Result<_>>()?
        };
        RookVector::from_signed(&entries)
    }
}

impl Serialize for RookVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_csv())
    }
}

impl<'de> Deserialize<'de> for RookVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Checks a list of entries (the `validate` operation).
pub fn validate(entries: &[i64]) -> Result<RookVector> {
    RookVector::from_signed(entries)
}

/// Product of the underlying 0/1 matrices: `(r·s)_i = r_{s_i}` if `s_i != 0`, else 0.
pub fn matrix_product(r: &RookVector, s: &RookVector) -> Result<RookVector> {
    if r.n() != s.n() {
        return Err(Error::SizeMismatch { left: r.n(), right: s.n() });
    }
    let mut out = RookVector::zero(r.n());
    for (o, &x) in out.entries_mut().iter_mut().zip(s.entries()) {
        if x != 0 {
            *o = r.entries()[x as usize - 1];
        }
    }
    Ok(out)
}

/// Matrix transpose: entry `i` is the position of `i` in `r`, or 0.
pub fn transpose(r: &RookVector) -> RookVector {
    let mut out = RookVector::zero(r.n());
    for (p, &v) in r.entries().iter().enumerate() {
        if v != 0 {
            out.entries_mut()[v as usize - 1] = (p + 1) as u8;
        }
    }
    out
}

/// Number of leading nonzero entries (`n` for a permutation).
pub fn first_zero(r: &RookVector) -> usize {
    r.entries().iter().position(|&x| x == 0).unwrap_or(r.n())
}

/// Support, inversions and zeros-to-the-right of a rook.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RookTriple {
    pub support: BTreeSet<usize>,
    /// Pairs `(b, a)` with `b > a > 0` and `b` to the left of `a`.
    pub inversions: BTreeSet<(usize, usize)>,
    /// Number of zeros strictly to the right of each support value.
    pub z: BTreeMap<usize, usize>,
}

pub fn rook_triple(r: &RookVector) -> RookTriple {
    let e = r.entries();
    let mut support = BTreeSet::new();
    let mut inversions = BTreeSet::new();
    let mut z = BTreeMap::new();
    for (i, &b) in e.iter().enumerate() {
        if b == 0 {
            continue;
        }
        support.insert(b as usize);
        let mut zeros = 0;
        for &a in &e[i + 1..] {
            if a == 0 {
                zeros += 1;
            } else if a < b {
                inversions.insert((b as usize, a as usize));
            }
        }
        z.insert(b as usize, zeros);
    }
    RookTriple { support, inversions, z }
}

/// Rebuilds the rook of a triple after checking its invariants.
pub fn rook_from_triple(t: &RookTriple, n: usize) -> Result<RookVector> {
    let bad = |m: String| Err(Error::InvalidTriple(m));
    if n > MAX_N {
        return Err(Error::TooLarge { n, max: MAX_N });
    }
    if t.support.iter().any(|&x| x == 0 || x > n) {
        return bad("support must lie in [1, n]".into());
    }
    let zeros = n - t.support.len();
    for &(b, a) in &t.inversions {
        if b <= a || !t.support.contains(&b) || !t.support.contains(&a) {
            return bad(format!("pair ({b},{a}) is not a descending pair of the support"));
        }
    }
    if t.z.keys().copied().collect::<BTreeSet<_>>() != t.support {
        return bad("z must be defined exactly on the support".into());
    }
    if t.z.values().any(|&k| k > zeros) {
        return bad("z exceeds the number of zeros".into());
    }
    let s: Vec<usize> = t.support.iter().copied().collect();
    let inv = |b: usize, a: usize| t.inversions.contains(&(b, a));
    // inversions and non-inversions are both transitive
    for &x in &s {
        for &y in &s {
            for &w in &s {
                if x > y && y > w {
                    if inv(x, y) && inv(y, w) && !inv(x, w) {
                        return bad(format!("inversions not transitive at {x},{y},{w}"));
                    }
                    if !inv(x, y) && !inv(y, w) && inv(x, w) {
                        return bad(format!("non-inversions not transitive at {x},{y},{w}"));
                    }
                }
            }
        }
    }
    for &b in &s {
        for &a in &s {
            if b > a {
                let (zb, za) = (t.z[&b], t.z[&a]);
                if inv(b, a) && zb < za {
                    return bad(format!("z({b}) < z({a}) although ({b},{a}) is an inversion"));
                }
                if !inv(b, a) && zb > za {
                    return bad(format!("z({b}) > z({a}) although ({b},{a}) is not an inversion"));
                }
            }
        }
    }
    let mut order = s.clone();
    order.sort_by(|&x, &y| {
        use std::cmp::Ordering::*;
        if x == y {
            Equal
        } else if x > y {
            if inv(x, y) { Less } else { Greater }
        } else if inv(y, x) {
            Greater
        } else {
            Less
        }
    });
    let mut out = Vec::with_capacity(n);
    let mut placed = 0;
    for &x in &order {
        while placed < zeros - t.z[&x] {
            out.push(0);
            placed += 1;
        }
        out.push(x);
    }
    while placed < zeros {
        out.push(0);
        placed += 1;
    }
    RookVector::new(&out)
}

/// All rooks of size `n` in lexicographic order.
pub fn enumerate_rooks(n: usize) -> Vec<RookVector> {
    assert!(n <= MAX_N);
    fn rec(n: usize, pos: usize, used: u32, cur: &mut [u8; MAX_N], out: &mut Vec<RookVector>) {
        if pos == n {
            out.push(RookVector { n: n as u8, e: *cur });
            return;
        }
        for v in 0..=n {
            if v == 0 || used & (1 << v) == 0 {
                cur[pos] = v as u8;
                rec(n, pos + 1, if v == 0 { used } else { used | (1 << v) }, cur, out);
            }
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    rec(n, 0, 0, &mut [0; MAX_N], &mut out);
    out
}

/// Number of rooks of size `n`: `sum_k C(n,k)^2 k!`.
pub fn rook_count(n: usize) -> u64 {
    let mut total = 0u64;
    for k in 0..=n as u64 {
        let c = binomial(n as u64, k);
        total += c * c * (1..=k).product::<u64>();
    }
    total
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `r(n,k) = #{r : first_zero(r) = k}` for `k = 0..=n`, by the recurrence
/// `r(n,k) = k r(n-1,k-1) + (n-k-1) r(n-1,k) + sum_{i>=k} r(n-1,i)`.
pub fn count_by_first_zero(n: usize) -> Vec<u64> {
    let mut row = vec![1i128];
    for m in 1..=n {
        let prev = |k: usize| -> i128 { row.get(k).copied().unwrap_or(0) };
        let mut next = vec![0i128; m + 1];
        for (k, slot) in next.iter_mut().enumerate() {
            let tail: i128 = (k..row.len()).map(prev).sum();
            let left = if k > 0 { k as i128 * prev(k - 1) } else { 0 };
            *slot = left + (m as i128 - k as i128 - 1) * prev(k) + tail;
        }
        row = next;
    }
    row.into_iter().map(|x| x as u64).collect()
}

/// Cycles and maximal chains of a rook seen as the partial map `i ↦ r_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleChainDecomp {
    /// Each cycle starts at its minimum; cycles sorted by decreasing minimum.
    pub cycles: Vec<Vec<usize>>,
    /// Chains `c_1 … c_k` with `r(c_i) = c_{i+1}` and `r(c_k) = 0`; sorted by last element.
    pub chains: Vec<Vec<usize>>,
}

impl CycleChainDecomp {
    /// Number of points lying on cycles.
    pub fn cycle_points(&self) -> usize {
        self.cycles.iter().map(Vec::len).sum()
    }
}

pub fn cycle_chain_decomposition(r: &RookVector) -> CycleChainDecomp {
    let n = r.n();
    let img = r.support_mask();
    let mut done = vec![false; n + 1];
    let mut chains = Vec::new();
    for start in 1..=n {
        if img & (1 << start) == 0 {
            let mut c = vec![start];
            done[start] = true;
            let mut x = r.at(start);
            while x != 0 {
                c.push(x);
                done[x] = true;
                x = r.at(x);
            }
            chains.push(c);
        }
    }
    let mut cycles = Vec::new();
    for start in 1..=n {
        if !done[start] {
            let mut c = vec![start];
            done[start] = true;
            let mut x = r.at(start);
            while x != start {
                c.push(x);
                done[x] = true;
                x = r.at(x);
            }
            cycles.push(c);
        }
    }
    cycles.sort_by(|a, b| b[0].cmp(&a[0]));
    chains.sort_by_key(|c| *c.last().unwrap());
    CycleChainDecomp { cycles, chains }
}

/// Sends a rook with `k` points on cycles to a rook with `first_zero = k`.
pub fn foata_map(r: &RookVector) -> RookVector {
    let d = cycle_chain_decomposition(r);
    let mut w: Vec<usize> = d.cycles.iter().flatten().copied().collect();
    for c in &d.chains {
        w.push(0);
        w.extend(c.iter().rev().skip(1));
    }
    RookVector::new(&w).expect("foata word is a rook")
}

/// Inverse of [`foata_map`].
pub fn foata_inverse(s: &RookVector) -> RookVector {
    let n = s.n();
    let k = first_zero(s);
    let sup = s.support_mask();
    let mut missing = (1..=n).filter(|v| sup & (1 << v) == 0);
    let cyc = &s.entries()[..k];
    let mut out = vec![0usize; n];
    // cycles: cut before each left-to-right minimum
    let mut i = 0;
    while i < k {
        let mut j = i + 1;
        while j < k && cyc[j] > cyc[i] {
            j += 1;
        }
        let c = &cyc[i..j];
        for t in 0..c.len() {
            out[c[t] as usize - 1] = c[(t + 1) % c.len()] as usize;
        }
        i = j;
    }
    // chains: pieces starting at each zero, zeros filled with missing values
    let rest = &s.entries()[k..];
    let mut p = 0;
    while p < rest.len() {
        let mut q = p + 1;
        while q < rest.len() && rest[q] != 0 {
            q += 1;
        }
        let mut piece: Vec<usize> = vec![missing.next().expect("one missing value per zero")];
        piece.extend(rest[p + 1..q].iter().map(|&x| x as usize));
        piece.reverse();
        for t in 0..piece.len() {
            out[piece[t] - 1] = if t + 1 < piece.len() { piece[t + 1] } else { 0 };
        }
        p = q;
    }
    RookVector::new(&out).expect("inverse foata word is a rook")
}
