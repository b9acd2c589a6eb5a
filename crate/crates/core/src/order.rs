//! The R-order on rooks: comparison, meet and join through rook triples,
//! Cayley and Hasse graphs, irreducibles, descents, maximal chains and the
//! bijection between minimal chain elements and 011-avoiding Dyck paths.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::action::{right, Generator};
use crate::error::{Error, Result};
use crate::rookcore::{enumerate_rooks, rook_from_triple, RookTriple, RookVector, MAX_N};

/// Largest size for which graph-based operations are allowed.
pub const GRAPH_MAX_N: usize = 7;

/// Bitmask form of a rook triple: bit `a` of `inv[b]` is set iff `(b, a)` is an inversion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripleMask {
    pub n: usize,
    pub supp: u32,
    pub inv: [u32; MAX_N + 1],
    pub z: [u8; MAX_N + 1],
}

impl TripleMask {
    pub fn of(r: &RookVector) -> Self {
        let e = r.entries();
        let mut t = TripleMask { n: r.n(), supp: 0, inv: [0; MAX_N + 1], z: [0; MAX_N + 1] };
        let mut zeros_right = 0u8;
        let mut seen_right = 0u32;
        for &b in e.iter().rev() {
            if b == 0 {
                zeros_right += 1;
            } else {
                let b = b as usize;
                t.supp |= 1 << b;
                t.inv[b] = seen_right & ((1 << b) - 1);
                t.z[b] = zeros_right;
                seen_right |= 1 << b;
            }
        }
        t
    }

    fn zeros(&self) -> usize {
        self.n - self.supp.count_ones() as usize
    }

    /// Rebuilds the rook, assuming the triple is valid.
    fn to_rook(&self) -> RookVector {
        let mut order: Vec<usize> = bits(self.supp).collect();
        // y goes before x < y iff (y, x) is an inversion
        order.sort_by(|&x, &y| {
            use std::cmp::Ordering::*;
            if x == y {
                Equal
            } else if x > y {
                if self.inv[x] & (1 << y) != 0 { Less } else { Greater }
            } else if self.inv[y] & (1 << x) != 0 {
                Greater
            } else {
                Less
            }
        });
        let zeros = self.zeros();
        let mut out = Vec::with_capacity(self.n);
        let mut placed = 0;
        for &x in &order {
            while placed + (self.z[x] as usize) < zeros {
                out.push(0u8);
                placed += 1;
            }
            out.push(x as u8);
        }
        while placed < zeros {
            out.push(0);
            placed += 1;
        }
        RookVector::from_bytes_unchecked(&out)
    }

    pub fn to_triple(&self) -> RookTriple {
        let support: BTreeSet<usize> = bits(self.supp).collect();
        let mut inversions = BTreeSet::new();
        for b in bits(self.supp) {
            for a in bits(self.inv[b]) {
                inversions.insert((b, a));
            }
        }
        let z = bits(self.supp).map(|b| (b, self.z[b] as usize)).collect();
        RookTriple { support, inversions, z }
    }
}

pub(crate) fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

#[inline]
pub(crate) fn leq_mask(r: &TripleMask, u: &TripleMask) -> bool {
    if r.supp & !u.supp != 0 {
        return false;
    }
    bits(r.supp).all(|b| u.inv[b] & !r.inv[b] == 0 && u.z[b] <= r.z[b])
}

/// `r ≤_R u`.
pub fn leq(r: &RookVector, u: &RookVector) -> Result<bool> {
    if r.n() != u.n() {
        return Err(Error::SizeMismatch { left: r.n(), right: u.n() });
    }
    Ok(leq_mask(&TripleMask::of(r), &TripleMask::of(u)))
}

/// Transitive closure of a relation on `[1, n]` whose pairs `(b, a)` have `b > a`.
fn closure(rel: &mut [u32; MAX_N + 1], n: usize) {
    for b in 1..=n {
        let mut acc = rel[b];
        for a in bits(rel[b]) {
            acc |= rel[a];
        }
        rel[b] = acc;
    }
}

/// Greatest lower bound for `≤_R`.
pub fn meet(u: &RookVector, v: &RookVector) -> Result<RookVector> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch { left: u.n(), right: v.n() });
    }
    Ok(meet_mask(&TripleMask::of(u), &TripleMask::of(v)).to_rook())
}

pub(crate) fn meet_mask(tu: &TripleMask, tv: &TripleMask) -> TripleMask {
    let n = tu.n;
    let mut i0 = [0u32; MAX_N + 1];
    for b in 1..=n {
        i0[b] = tu.inv[b] | tv.inv[b];
    }
    closure(&mut i0, n);
    let mut s = tu.supp & tv.supp;
    loop {
        let drop = bits(s).filter(|&b| i0[b] & !s != 0).fold(0u32, |m, b| m | (1 << b));
        if drop == 0 {
            break;
        }
        s &= !drop;
    }
    let mut t = TripleMask { n, supp: s, inv: [0; MAX_N + 1], z: [0; MAX_N + 1] };
    for x in bits(s) {
        t.inv[x] = i0[x] & s;
        let zz = |i: usize| -> u8 {
            let a = if tu.supp & (1 << i) != 0 { tu.z[i] } else { 0 };
            let b = if tv.supp & (1 << i) != 0 { tv.z[i] } else { 0 };
            a.max(b)
        };
        t.z[x] = bits(t.inv[x] | (1 << x)).map(zz).max().unwrap_or(0);
    }
    t
}

/// Least upper bound for `≤_R`.
pub fn join(u: &RookVector, v: &RookVector) -> Result<RookVector> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch { left: u.n(), right: v.n() });
    }
    Ok(join_mask(&TripleMask::of(u), &TripleMask::of(v)).to_rook())
}

/// Versions of `r`: pairs `(b, a)` with `b` present and `a` not placed after `b` as a smaller letter.
fn versions(t: &TripleMask) -> [u32; MAX_N + 1] {
    let mut out = [0u32; MAX_N + 1];
    for b in bits(t.supp) {
        out[b] = ((1u32 << b) - 2) & !t.inv[b];
    }
    out
}

pub(crate) fn join_mask(tu: &TripleMask, tv: &TripleMask) -> TripleMask {
    let n = tu.n;
    let (bu, bv) = (versions(tu), versions(tv));
    let mut tr = [0u32; MAX_N + 1];
    for b in 1..=n {
        tr[b] = bu[b] | bv[b];
    }
    closure(&mut tr, n);
    let s = tu.supp | tv.supp;
    let mut t = TripleMask { n, supp: s, inv: [0; MAX_N + 1], z: [0; MAX_N + 1] };
    for x in bits(s) {
        t.inv[x] = ((1u32 << x) - 2) & !tr[x] & s;
    }
    let zz = |i: usize| -> u8 {
        let a = if tu.supp & (1 << i) != 0 { tu.z[i] } else { u8::MAX };
        let b = if tv.supp & (1 << i) != 0 { tv.z[i] } else { u8::MAX };
        a.min(b)
    };
    let zeros = t.zeros() as u8;
    for x in bits(s) {
        let non_inv = ((1u32 << x) - 2) & s & !t.inv[x];
        t.z[x] = bits(non_inv | (1 << x)).map(zz).min().unwrap_or(0).min(zeros);
    }
    t
}

/// Meet through [`rook_from_triple`], validating the intermediate triple.
pub fn meet_checked(u: &RookVector, v: &RookVector) -> Result<RookVector> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch { left: u.n(), right: v.n() });
    }
    let t = meet_mask(&TripleMask::of(u), &TripleMask::of(v)).to_triple();
    rook_from_triple(&t, u.n())
}

/// Join through [`rook_from_triple`], validating the intermediate triple.
pub fn join_checked(u: &RookVector, v: &RookVector) -> Result<RookVector> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch { left: u.n(), right: v.n() });
    }
    let t = join_mask(&TripleMask::of(u), &TripleMask::of(v)).to_triple();
    rook_from_triple(&t, u.n())
}

/// `{i : r·π_i = r}`.
pub fn weak_descents(r: &RookVector) -> BTreeSet<usize> {
    (0..r.n()).filter(|&i| right(r, Generator::pi(i)) == *r).collect()
}

/// Strict descents and the multiplicity of `0` among them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrictDescents {
    pub set: BTreeSet<usize>,
    pub zero_multiplicity: usize,
}

pub fn strict_descents(r: &RookVector) -> StrictDescents {
    let e = r.entries();
    let mut set: BTreeSet<usize> = (1..r.n()).filter(|&i| e[i - 1] > e[i]).collect();
    let zero_multiplicity = if e.first() == Some(&0) { r.zero_count() } else { 0 };
    if zero_multiplicity > 0 {
        set.insert(0);
    }
    StrictDescents { set, zero_multiplicity }
}

/// All interleavings of `u` and `v`.
pub fn shuffle<T: Clone + Ord>(u: &[T], v: &[T]) -> BTreeSet<Vec<T>> {
    fn rec<T: Clone + Ord>(u: &[T], v: &[T], cur: &mut Vec<T>, out: &mut BTreeSet<Vec<T>>) {
        if u.is_empty() && v.is_empty() {
            out.insert(cur.clone());
            return;
        }
        if let Some((x, rest)) = u.split_first() {
            cur.push(x.clone());
            rec(rest, v, cur, out);
            cur.pop();
        }
        if let Some((x, rest)) = v.split_first() {
            cur.push(x.clone());
            rec(u, rest, cur, out);
            cur.pop();
        }
    }
    let mut out = BTreeSet::new();
    rec(u, v, &mut Vec::new(), &mut out);
    out
}

/// `⋃_k 0^k ⧢ (k+1)…n`.
pub fn mcr_set(n: usize) -> Result<BTreeSet<RookVector>> {
    if n > MAX_N {
        return Err(Error::BoundExceeded { n, max: MAX_N });
    }
    let mut out = BTreeSet::new();
    for k in 0..=n {
        let zeros = vec![0usize; k];
        let tail: Vec<usize> = (k + 1..=n).collect();
        for w in shuffle(&zeros, &tail) {
            out.insert(RookVector::new(&w)?);
        }
    }
    Ok(out)
}

/// Membership in `MCR_n`: the nonzero letters are `k+1, …, n` in increasing order.
pub fn in_mcr(r: &RookVector) -> bool {
    let nz: Vec<u8> = r.entries().iter().copied().filter(|&x| x != 0).collect();
    let k = r.n() - nz.len();
    nz.iter().enumerate().all(|(j, &x)| x as usize == k + 1 + j)
}

/// Positions of the nonzero entries of an element of `MCR_n`.
pub fn eta(r: &RookVector) -> Result<BTreeSet<usize>> {
    if !in_mcr(r) {
        return Err(Error::NotInMcr);
    }
    Ok((1..=r.n()).filter(|&i| r.at(i) != 0).collect())
}

/// A composition whose first part may be 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExtendedComposition {
    pub parts: Vec<usize>,
    pub total: usize,
}

impl ExtendedComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().skip(1).any(|&p| p == 0) {
            return Err(Error::Parse("only the first part may be 0".into()));
        }
        if parts.len() == 1 && parts[0] == 0 {
            return Err(Error::Parse("(0) is not a composition".into()));
        }
        let total = parts.iter().sum();
        Ok(ExtendedComposition { parts, total })
    }

    pub fn starts_with_zero(&self) -> bool {
        self.parts.first() == Some(&0)
    }

    /// Parts with a leading 0 removed.
    pub fn positive_parts(&self) -> &[usize] {
        if self.starts_with_zero() { &self.parts[1..] } else { &self.parts }
    }
}

impl fmt::Display for ExtendedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

impl FromStr for ExtendedComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return ExtendedComposition::new(Vec::new());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        ExtendedComposition::new(parts)
    }
}

/// Subset of `[0, n-1]` to extended composition of `n`: a leading 0 marks `0 ∈ S`.
pub fn cset(s: &BTreeSet<usize>, n: usize) -> Result<ExtendedComposition> {
    if let Some(&bad) = s.iter().find(|&&x| x >= n) {
        return Err(Error::OutOfRange { position: 0, value: bad as i64, n });
    }
    let mut parts = Vec::new();
    if s.contains(&0) {
        parts.push(0);
    }
    let mut prev = 0;
    for &x in s.iter().filter(|&&x| x > 0) {
        parts.push(x - prev);
        prev = x;
    }
    if n > 0 {
        parts.push(n - prev);
    }
    ExtendedComposition::new(parts)
}

/// Inverse of [`cset`].
pub fn des(c: &ExtendedComposition) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    if c.starts_with_zero() {
        out.insert(0);
    }
    let pos = c.positive_parts();
    let mut acc = 0;
    for &p in pos.iter().take(pos.len().saturating_sub(1)) {
        acc += p;
        out.insert(acc);
    }
    out
}

/// A Dyck word: `1` for an up step, `0` for a down step.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DyckPath {
    pub semilength: usize,
    pub steps: Vec<u8>,
}

impl DyckPath {
    pub fn new(steps: Vec<u8>) -> Result<Self> {
        let mut h: i64 = 0;
        for &s in &steps {
            match s {
                1 => h += 1,
                0 => h -= 1,
                _ => return Err(Error::Parse("steps must be 0 or 1".into())),
            }
            if h < 0 {
                return Err(Error::Parse("path goes below the axis".into()));
            }
        }
        if h != 0 {
            return Err(Error::Parse("path does not return to the axis".into()));
        }
        Ok(DyckPath { semilength: steps.len() / 2, steps })
    }

    pub fn avoids_011(&self) -> bool {
        !self.steps.windows(3).any(|w| w == [0, 1, 1])
    }

    /// Paths obtained by turning one factor `01` into `10`.
    pub fn raise_one(&self) -> Vec<DyckPath> {
        (0..self.steps.len().saturating_sub(1))
            .filter(|&p| self.steps[p] == 0 && self.steps[p + 1] == 1)
            .map(|p| {
                let mut s = self.steps.clone();
                s.swap(p, p + 1);
                DyckPath { semilength: self.semilength, steps: s }
            })
            .collect()
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// All Dyck paths of a given semilength.
pub fn dyck_paths(semilength: usize) -> Vec<DyckPath> {
    fn rec(up: usize, down: usize, k: usize, cur: &mut Vec<u8>, out: &mut Vec<DyckPath>) {
        if down == k {
            out.push(DyckPath { semilength: k, steps: cur.clone() });
            return;
        }
        if up < k {
            cur.push(1);
            rec(up + 1, down, k, cur, out);
            cur.pop();
        }
        if down < up {
            cur.push(0);
            rec(up, down + 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, 0, semilength, &mut Vec::new(), &mut out);
    out
}

/// `δ(i_1, …, i_m) = 1^{N+1-m} 0^{i_1} 1 0^{i_2} ⋯ 1 0^{i_m}` for a composition of `N`.
pub fn delta(c: &ExtendedComposition) -> Result<DyckPath> {
    if c.starts_with_zero() {
        return Err(Error::Parse("delta takes an ordinary composition".into()));
    }
    let m = c.parts.len();
    let big_n = c.total;
    if m == 0 || m > big_n {
        return Err(Error::Parse("empty composition".into()));
    }
    let mut steps = vec![1u8; big_n + 1 - m];
    for (j, &p) in c.parts.iter().enumerate() {
        if j > 0 {
            steps.push(1);
        }
        steps.extend(std::iter::repeat(0).take(p));
    }
    DyckPath::new(steps)
}

/// `δ ∘ cset ∘ η` on `MCR_n`, with `η(r)` read as a subset of `[1, n]` cut in `n+1`.
pub fn mcr_to_dyck(r: &RookVector) -> Result<DyckPath> {
    let s = eta(r)?;
    delta(&cset(&s, r.n() + 1)?)
}

/// True iff `δ∘cset∘η` maps `MCR_n` onto the 011-avoiding Dyck paths of
/// semilength `n+1` and sends Hasse covers of `R_n` between elements of
/// `MCR_n` exactly to single `01 → 10` moves.
pub fn mcr_dyck_correspondence(n: usize) -> Result<bool> {
    let hasse = Hasse::build(n)?;
    let mcr: Vec<RookVector> = mcr_set(n)?.into_iter().collect();
    let paths = mcr.iter().map(mcr_to_dyck).collect::<Result<Vec<_>>>()?;
    let image: BTreeSet<&DyckPath> = paths.iter().collect();
    let avoiding: Vec<DyckPath> = dyck_paths(n + 1).into_iter().filter(DyckPath::avoids_011).collect();
    if image.len() != mcr.len() || avoiding.len() != image.len() || !avoiding.iter().all(|d| image.contains(d)) {
        return Ok(false);
    }
    let pos = |r: &RookVector| mcr.iter().position(|x| x == r);
    let mut covers = BTreeSet::new();
    for (a, b, _) in hasse.edges() {
        if let (Some(i), Some(j)) = (pos(&a), pos(&b)) {
            covers.insert((i.min(j), i.max(j)));
        }
    }
    let mut moves = BTreeSet::new();
    for (i, p) in paths.iter().enumerate() {
        for q in p.raise_one() {
            if let Some(j) = paths.iter().position(|x| *x == q) {
                moves.insert((i.min(j), i.max(j)));
            }
        }
    }
    Ok(covers == moves)
}

/// Right Cayley graph and Hasse diagram of `R_n^0`.
#[derive(Clone, Debug)]
pub struct Hasse {
    pub n: usize,
    pub nodes: Vec<RookVector>,
    pub index: HashMap<RookVector, usize>,
    /// `children[u][i]` is the index of `u·π_i`.
    pub children: Vec<Vec<usize>>,
    /// Lower covers with the generators realising them.
    pub down: Vec<Vec<(usize, Vec<usize>)>>,
    /// Upper covers.
    pub up: Vec<Vec<usize>>,
}

impl Hasse {
    pub fn build(n: usize) -> Result<Self> {
        if n > GRAPH_MAX_N {
            return Err(Error::BoundExceeded { n, max: GRAPH_MAX_N });
        }
        let nodes = enumerate_rooks(n);
        let index: HashMap<RookVector, usize> = nodes.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let masks: Vec<TripleMask> = nodes.iter().map(TripleMask::of).collect();
        let children: Vec<Vec<usize>> = nodes
            .par_iter()
            .map(|u| (0..n).map(|i| index[&right(u, Generator::pi(i))]).collect())
            .collect();
        let down: Vec<Vec<(usize, Vec<usize>)>> = (0..nodes.len())
            .into_par_iter()
            .map(|u| {
                let mut kids: Vec<(usize, Vec<usize>)> = Vec::new();
                for (i, &c) in children[u].iter().enumerate() {
                    if c == u {
                        continue;
                    }
                    match kids.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, labels)) => labels.push(i),
                        None => kids.push((c, vec![i])),
                    }
                }
                let all: Vec<usize> = kids.iter().map(|(k, _)| *k).collect();
                kids.retain(|(c, _)| !all.iter().any(|&y| y != *c && leq_mask(&masks[*c], &masks[y])));
                kids
            })
            .collect();
        let mut up = vec![Vec::new(); nodes.len()];
        for (u, ks) in down.iter().enumerate() {
            for (c, _) in ks {
                up[*c].push(u);
            }
        }
        Ok(Hasse { n, nodes, index, children, down, up })
    }

    pub fn top(&self) -> usize {
        self.index[&RookVector::identity(self.n)]
    }

    pub fn bottom(&self) -> usize {
        self.index[&RookVector::zero(self.n)]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `(maximal chains, maximal chains of minimal length, that minimal length)`.
    pub fn chain_counts(&self) -> ChainCounts {
        let len = self.nodes.len();
        // nodes sorted so that every cover goes from an earlier to a later node
        let order = self.topological_order();
        let mut paths = vec![0u128; len];
        let mut dist = vec![usize::MAX; len];
        let mut short = vec![0u128; len];
        let bottom = self.bottom();
        paths[bottom] = 1;
        dist[bottom] = 0;
        short[bottom] = 1;
        for &u in order.iter().rev() {
            if u == bottom {
                continue;
            }
            let mut p = 0u128;
            let mut d = usize::MAX;
            let mut s = 0u128;
            for (c, _) in &self.down[u] {
                p += paths[*c];
                if dist[*c] == usize::MAX {
                    continue;
                }
                let dc = dist[*c] + 1;
                if dc < d {
                    d = dc;
                    s = short[*c];
                } else if dc == d {
                    s += short[*c];
                }
            }
            paths[u] = p;
            dist[u] = d;
            short[u] = s;
        }
        let top = self.top();
        ChainCounts { n: self.n, maximal: paths[top], shortest_count: short[top], shortest_len: dist[top] }
    }

    /// Kahn order from the top along covers.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> = self.up.iter().map(Vec::len).collect();
        let mut stack: Vec<usize> = (0..self.nodes.len()).filter(|&u| indeg[u] == 0).collect();
        let mut out = Vec::with_capacity(self.nodes.len());
        while let Some(u) = stack.pop() {
            out.push(u);
            for (c, _) in &self.down[u] {
                indeg[*c] -= 1;
                if indeg[*c] == 0 {
                    stack.push(*c);
                }
            }
        }
        out
    }

    /// Cover edges `(upper, lower, generators)` sorted by rook.
    pub fn edges(&self) -> Vec<(RookVector, RookVector, Vec<Generator>)> {
        let mut out: Vec<_> = self
            .down
            .iter()
            .enumerate()
            .flat_map(|(u, ks)| {
                ks.iter().map(move |(c, ls)| {
                    (self.nodes[u], self.nodes[*c], ls.iter().map(|&i| Generator::pi(i)).collect())
                })
            })
            .collect();
        out.sort();
        out
    }

    pub fn meet_irreducibles(&self) -> Vec<RookVector> {
        (0..self.len()).filter(|&u| self.up[u].len() == 1).map(|u| self.nodes[u]).collect()
    }

    pub fn join_irreducibles(&self) -> Vec<RookVector> {
        (0..self.len()).filter(|&u| self.down[u].len() == 1).map(|u| self.nodes[u]).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCounts {
    pub n: usize,
    pub maximal: u128,
    /// Number of maximal chains of the shortest length.
    #[serde(rename = "min_length")]
    pub shortest_count: u128,
    /// Length of the shortest maximal chains.
    #[serde(rename = "shortest_length")]
    pub shortest_len: usize,
}

/// Cover edges of the R-order.
pub fn hasse_edges(n: usize) -> Result<Vec<(RookVector, RookVector, Vec<Generator>)>> {
    Ok(Hasse::build(n)?.edges())
}

pub fn chain_counts(n: usize) -> Result<ChainCounts> {
    Ok(Hasse::build(n)?.chain_counts())
}

pub fn meet_irreducibles(n: usize) -> Result<Vec<RookVector>> {
    Ok(Hasse::build(n)?.meet_irreducibles())
}

pub fn join_irreducibles(n: usize) -> Result<Vec<RookVector>> {
    Ok(Hasse::build(n)?.join_irreducibles())
}

/// `p(r)`: the first letter, or 1 when it is 0.
pub fn first_value(r: &RookVector) -> usize {
    match r.entries().first() {
        Some(&0) | None => 1,
        Some(&x) => x as usize,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DotFlavor {
    RightCayley,
    Hasse,
}

impl FromStr for DotFlavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "right-cayley" | "cayley" => Ok(DotFlavor::RightCayley),
            "hasse" => Ok(DotFlavor::Hasse),
            _ => Err(Error::Parse(format!("unknown flavor {s:?}"))),
        }
    }
}

/// Graphviz text of the right Cayley graph (with loops) or of the Hasse diagram.
pub fn export_dot(n: usize, flavor: DotFlavor) -> Result<String> {
    let h = Hasse::build(n)?;
    let mut s = format!("digraph R{n} {{\n");
    for r in &h.nodes {
        s.push_str(&format!("  \"{r}\";\n"));
    }
    match flavor {
        DotFlavor::RightCayley => {
            for (u, kids) in h.children.iter().enumerate() {
                for (i, &c) in kids.iter().enumerate() {
                    s.push_str(&format!("  \"{}\" -> \"{}\" [label=\"p{i}\"];\n", h.nodes[u], h.nodes[c]));
                }
            }
        }
        DotFlavor::Hasse => {
            for (u, l, gens) in h.edges() {
                let label: Vec<String> = gens.iter().map(|g| g.to_string()).collect();
                s.push_str(&format!("  \"{u}\" -> \"{l}\" [label=\"{}\"];\n", label.join(",")));
            }
        }
    }
    s.push_str("}\n");
    Ok(s)
}
