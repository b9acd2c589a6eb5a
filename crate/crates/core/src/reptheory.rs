//! Representation theory of `R_n^0`: idempotents, descent sets, Cartan
//! matrices, descent classes, the decomposition of projectives over the
//! 0-Hecke monoid, and induction/restriction along the tower of monoids.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize};

use crate::action::{left, mul, omega_power, parabolic_zero, right, Generator};
use crate::error::{Error, Result};
use crate::order::{cset, des, leq, shuffle, weak_descents, ExtendedComposition};
use crate::rookcore::{enumerate_rooks, RookVector, MAX_N};

/// A subset of `[0, n-1]`, ordered lexicographically on its sorted members.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DescentSet {
    pub members: BTreeSet<usize>,
    pub n: usize,
}

impl DescentSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&x| x >= n) {
            return Err(Error::OutOfRange { position: 0, value: bad as i64, n });
        }
        Ok(DescentSet { n, members })
    }

    pub fn full(n: usize) -> Self {
        DescentSet { n, members: (0..n).collect() }
    }

    pub fn empty(n: usize) -> Self {
        DescentSet { n, members: BTreeSet::new() }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.n
    }

    pub fn mask(&self) -> u32 {
        self.members.iter().fold(0, |m, &i| m | (1 << i))
    }

    pub fn from_mask(n: usize, mask: u32) -> Self {
        DescentSet { n, members: (0..n).filter(|i| mask & (1 << i) != 0).collect() }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.iter().copied().collect()
    }

    /// The extended composition of `n` with this descent set.
    pub fn composition(&self) -> ExtendedComposition {
        cset(&self.members, self.n).expect("members below n")
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.members.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", v.join(","))
    }
}

impl DescentSet {
    /// Parses `"{0,2}"` or `"0,2"` as a subset of `[0, n-1]`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('{').trim_end_matches('}');
        let members = t
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad member {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        DescentSet::new(n, members)
    }
}

/// An ordinary composition, labelling modules of the 0-Hecke monoid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// Descent set `{i_1, i_1+i_2, …}` inside `[1, total-1]`.
    pub fn descents(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    pub fn from_descents(s: &BTreeSet<usize>, n: usize) -> Self {
        let mut parts = Vec::new();
        let mut prev = 0;
        for &x in s {
            parts.push(x - prev);
            prev = x;
        }
        if n > 0 {
            parts.push(n - prev);
        }
        Composition(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = t
            .split(',')
            .map(str::trim)
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| Error::Parse(format!("bad part {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse("composition parts must be positive".into()));
        }
        Ok(Composition(parts))
    }
}

/// Label of a module in a formal sum.
pub trait Label: Clone + Ord + fmt::Display {
    const KEY: &'static str;
    fn json(&self) -> serde_json::Value;
}

impl Label for DescentSet {
    const KEY: &'static str = "descents";
    fn json(&self) -> serde_json::Value {
        serde_json::json!(self.to_vec())
    }
}

impl Label for Composition {
    const KEY: &'static str = "composition";
    fn json(&self) -> serde_json::Value {
        serde_json::json!(self.0)
    }
}

/// A nonnegative integer combination of module classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum<L: Label> {
    pub terms: BTreeMap<L, u64>,
}

impl<L: Label> Default for FormalSum<L> {
    fn default() -> Self {
        FormalSum { terms: BTreeMap::new() }
    }
}

impl<L: Label> FormalSum<L> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(l: L) -> Self {
        let mut s = Self::new();
        s.add(l, 1);
        s
    }

    pub fn add(&mut self, l: L, k: u64) {
        if k > 0 {
            *self.terms.entry(l).or_insert(0) += k;
        }
    }

    pub fn merge(&mut self, other: &Self) {
        for (l, &k) in &other.terms {
            self.add(l.clone(), k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u64 {
        self.terms.values().sum()
    }

    pub fn mult(&self, l: &L) -> u64 {
        self.terms.get(l).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(l, k)| {
                let mut m = serde_json::Map::new();
                m.insert(L::KEY.to_string(), l.json());
                m.insert("mult".to_string(), serde_json::json!(k));
                serde_json::Value::Object(m)
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }
}

impl<L: Label> Serialize for FormalSum<L> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v = self.to_json();
        let mut st = s.serialize_struct("FormalSum", 1)?;
        st.serialize_field("terms", &v["terms"])?;
        st.end()
    }
}

impl<L: Label> fmt::Display for FormalSum<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let v: Vec<String> = self.terms.iter().map(|(l, k)| format!("{k}*{l}")).collect();
        f.write_str(&v.join(" + "))
    }
}

/// All subsets of `[0, n-1]` in canonical order.
pub fn all_descent_sets(n: usize) -> Vec<DescentSet> {
    let mut v: Vec<DescentSet> = (0..1u32 << n).map(|m| DescentSet::from_mask(n, m)).collect();
    v.sort();
    v
}

/// The `2^n` idempotents `π_S`, in canonical order of `S`.
pub fn idempotents(n: usize) -> Vec<RookVector> {
    all_descent_sets(n).iter().map(|s| parabolic_zero(n, &s.to_vec()).expect("valid subset")).collect()
}

/// `π_S` by filling the ribbon of `S \ {0}` column by column, bottom to top,
/// and zeroing the first column when `0 ∈ S`.
pub fn idempotent_of(s: &DescentSet) -> RookVector {
    let n = s.n;
    let pos: BTreeSet<usize> = s.members.iter().copied().filter(|&x| x > 0).collect();
    let rows = Composition::from_descents(&pos, n).0;
    // (row, col) of each box in reading order
    let mut boxes = Vec::with_capacity(n);
    let mut col = 0;
    for (r, &len) in rows.iter().enumerate() {
        for j in 0..len {
            boxes.push((r, col + j));
        }
        col += len.saturating_sub(1);
    }
    let mut order: Vec<usize> = (0..boxes.len()).collect();
    order.sort_by(|&a, &b| boxes[a].1.cmp(&boxes[b].1).then(boxes[b].0.cmp(&boxes[a].0)));
    let mut out = vec![0usize; n];
    for (v, &p) in order.iter().enumerate() {
        out[p] = v + 1;
    }
    if s.contains(0) {
        for p in 0..n {
            if boxes[p].1 == 0 {
                out[p] = 0;
            }
        }
    }
    RookVector::new(&out).expect("ribbon filling is a rook")
}

/// `D_R(x) = {i : x·π_i = x}`.
pub fn d_r(x: &RookVector) -> DescentSet {
    DescentSet { n: x.n(), members: weak_descents(x) }
}

/// `D_L(x) = {i : π_i·x = x}`.
pub fn d_l(x: &RookVector) -> DescentSet {
    DescentSet { n: x.n(), members: (0..x.n()).filter(|&i| left(Generator::pi(i), x) == *x).collect() }
}

pub fn rfix(x: &RookVector) -> RookVector {
    idempotent_of(&d_r(x))
}

pub fn lfix(x: &RookVector) -> RookVector {
    idempotent_of(&d_l(x))
}

pub fn is_idempotent(e: &RookVector) -> bool {
    mul(e, e).map(|x| x == *e).unwrap_or(false)
}

/// `e ⋆ f = (ef)^ω`.
pub fn star(e: &RookVector, f: &RookVector) -> Result<RookVector> {
    if !is_idempotent(e) || !is_idempotent(f) {
        return Err(Error::NotIdempotent);
    }
    omega_power(&mul(e, f)?)
}

/// `c_{S,T} = #{x : D_L(x) = S, D_R(x) = T}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix {
    pub n: usize,
    pub labels: Vec<DescentSet>,
    pub entries: Vec<Vec<u64>>,
}

/// Bound on `n` for the Cartan matrix and other exhaustive scans.
pub const CARTAN_MAX_N: usize = 7;

pub fn cartan_matrix(n: usize) -> Result<CartanMatrix> {
    if n > CARTAN_MAX_N {
        return Err(Error::BoundExceeded { n, max: CARTAN_MAX_N });
    }
    let labels = all_descent_sets(n);
    let pos: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, s)| (s.mask(), i)).collect();
    let k = labels.len();
    let counts = enumerate_rooks(n)
        .par_iter()
        .fold(
            || vec![0u64; k * k],
            |mut acc, x| {
                acc[pos[&d_l(x).mask()] * k + pos[&d_r(x).mask()]] += 1;
                acc
            },
        )
        .reduce(
            || vec![0u64; k * k],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    let entries = (0..k).map(|i| counts[i * k..(i + 1) * k].to_vec()).collect();
    Ok(CartanMatrix { n, labels, entries })
}

impl CartanMatrix {
    pub fn total(&self) -> u64 {
        self.entries.iter().flatten().sum()
    }

    pub fn entry(&self, s: &DescentSet, t: &DescentSet) -> Option<u64> {
        let i = self.labels.iter().position(|x| x == s)?;
        let j = self.labels.iter().position(|x| x == t)?;
        Some(self.entries[i][j])
    }

    pub fn to_csv(&self) -> String {
        let q = |s: &DescentSet| format!("\"{s}\"");
        let mut out = String::from("\"\"");
        for l in &self.labels {
            out.push(',');
            out.push_str(&q(l));
        }
        out.push('\n');
        for (l, row) in self.labels.iter().zip(&self.entries) {
            out.push_str(&q(l));
            for x in row {
                out.push_str(&format!(",{x}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "labels": self.labels.iter().map(|s| s.to_vec()).collect::<Vec<_>>(),
            "entries": self.entries,
        })
    }
}

/// `{r ∈ R_n : D_R(r) = S}`.
pub fn descent_class(s: &DescentSet) -> Vec<RookVector> {
    enumerate_rooks(s.n).into_iter().filter(|r| d_r(r) == *s).collect()
}

/// `P_I ⋆ P_J = P_{I·J} + P_{I▷J}` for the 0-Hecke monoid.
pub fn star_product_h(i: &Composition, j: &Composition) -> FormalSum<Composition> {
    if i.0.is_empty() {
        return FormalSum::single(j.clone());
    }
    if j.0.is_empty() {
        return FormalSum::single(i.clone());
    }
    let mut cat = i.0.clone();
    cat.extend(&j.0);
    let mut near = i.0.clone();
    *near.last_mut().unwrap() += j.0[0];
    near.extend(&j.0[1..]);
    let mut s = FormalSum::single(Composition(cat));
    s.add(Composition(near), 1);
    s
}

/// Product of two formal sums, expanded with [`star_product_h`].
pub fn star_sum(a: &FormalSum<Composition>, b: &FormalSum<Composition>) -> FormalSum<Composition> {
    let mut out = FormalSum::new();
    for (i, &x) in &a.terms {
        for (j, &y) in &b.terms {
            for (k, &z) in &star_product_h(i, j).terms {
                out.add(k.clone(), x * y * z);
            }
        }
    }
    out
}

/// A ribbon of shape `I` with some boxes marked 0. Boxes are `(row, column)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZeroFilling {
    pub shape: ExtendedComposition,
    pub zero_boxes: BTreeSet<(usize, usize)>,
}

/// `(row, col)` of each box of the ribbon of positive parts, in reading order.
fn ribbon_boxes(shape: &ExtendedComposition) -> Vec<(usize, usize)> {
    let mut boxes = Vec::new();
    let mut col = 0;
    for (r, &len) in shape.positive_parts().iter().enumerate() {
        for j in 0..len {
            boxes.push((r, col + j));
        }
        col += len.saturating_sub(1);
    }
    boxes
}

impl ZeroFilling {
    /// Reading positions (1-based) of the zero boxes.
    pub fn zero_positions(&self) -> BTreeSet<usize> {
        ribbon_boxes(&self.shape)
            .iter()
            .enumerate()
            .filter(|(_, b)| self.zero_boxes.contains(b))
            .map(|(p, _)| p + 1)
            .collect()
    }
}

/// All zero-fillings of `shape`.
///
/// Box 1 holds a zero iff `0 ∈ Des`; every zero box starts its row; the box
/// directly below a zero box is a zero box.
pub fn zero_fillings(shape: &ExtendedComposition) -> Vec<ZeroFilling> {
    let boxes = ribbon_boxes(shape);
    let n = boxes.len();
    if n == 0 {
        return vec![ZeroFilling { shape: shape.clone(), zero_boxes: BTreeSet::new() }];
    }
    let rows = shape.positive_parts();
    let mut firsts = Vec::new();
    let mut p = 0;
    for &len in rows {
        firsts.push(p);
        p += len;
    }
    let zero_first = shape.starts_with_zero();
    let mut out = Vec::new();
    for mask in 0u32..(1 << firsts.len()) {
        if (mask & 1 != 0) != zero_first {
            continue;
        }
        // a zero in a row of length 1 forces a zero at the start of the next row
        let closed = (0..firsts.len()).all(|k| {
            mask & (1 << k) == 0 || rows[k] != 1 || k + 1 == rows.len() || mask & (1 << (k + 1)) != 0
        });
        if !closed {
            continue;
        }
        let zero_boxes = (0..firsts.len()).filter(|k| mask & (1 << k) != 0).map(|k| boxes[firsts[k]]).collect();
        out.push(ZeroFilling { shape: shape.clone(), zero_boxes });
    }
    out.sort();
    out
}

/// A column for the zeros, then the connected components of the remaining boxes.
pub fn split(f: &ZeroFilling) -> Vec<Composition> {
    let n = f.shape.total;
    let zeros = f.zero_positions();
    let d = des(&f.shape);
    let mut out = Vec::new();
    if !zeros.is_empty() {
        out.push(Composition(vec![1; zeros.len()]));
    }
    let mut p = 1;
    while p <= n {
        if zeros.contains(&p) {
            p += 1;
            continue;
        }
        let start = p;
        while p < n && !zeros.contains(&(p + 1)) {
            p += 1;
        }
        let inner: BTreeSet<usize> = d.iter().filter(|&&x| x >= start && x < p).map(|&x| x - start + 1).collect();
        out.push(Composition::from_descents(&inner, p - start + 1));
        p += 1;
    }
    out
}

/// Restriction of the projective `P^R_I` to the 0-Hecke monoid.
pub fn decompose_projective(shape: &ExtendedComposition) -> FormalSum<Composition> {
    let mut total = FormalSum::new();
    for f in zero_fillings(shape) {
        let mut acc = FormalSum::single(Composition(Vec::new()));
        for r in split(&f) {
            acc = star_sum(&acc, &FormalSum::single(r));
        }
        total.merge(&acc);
    }
    total
}

/// Descent composition of a permutation.
pub fn permutation_composition(sigma: &RookVector) -> Composition {
    let e = sigma.entries();
    let s: BTreeSet<usize> = (1..e.len()).filter(|&i| e[i - 1] > e[i]).collect();
    Composition::from_descents(&s, e.len())
}

/// `Res S_J = S^H_{J \ {0}}`.
pub fn res_simple_to_h(j: &DescentSet) -> BTreeSet<usize> {
    j.members.iter().copied().filter(|&x| x != 0).collect()
}

/// `Ind P^H_I = P_I + P_{I ∪ {0}}` for `I ⊆ [1, n-1]`.
pub fn ind_projective_from_h(n: usize, i: &BTreeSet<usize>) -> Result<FormalSum<DescentSet>> {
    if i.contains(&0) {
        return Err(Error::Parse("0 must not belong to a 0-Hecke descent set".into()));
    }
    let a = DescentSet::new(n, i.iter().copied())?;
    let mut b = a.clone();
    b.members.insert(0);
    let mut s = FormalSum::single(a);
    s.add(b, 1);
    Ok(s)
}

/// `ρ_{n,m}(a, b)`.
pub fn tower_embed(a: &RookVector, b: &RookVector) -> RookVector {
    let n = a.n();
    let mut out: Vec<usize> = if b.zero_count() == 0 { a.to_vec() } else { vec![0; n] };
    out.extend(b.entries().iter().map(|&x| if x == 0 { 0 } else { x as usize + n }));
    RookVector::new(&out).expect("embedded rook")
}

/// `Res S_J` to `R_n^0 × R_m^0`.
pub fn tower_res_simple(n: usize, m: usize, j: &DescentSet) -> Result<(DescentSet, DescentSet)> {
    if j.n != n + m {
        return Err(Error::SizeMismatch { left: j.n, right: n + m });
    }
    if (0..=n).all(|i| j.contains(i)) {
        let right = std::iter::once(0).chain(j.members.iter().filter(|&&x| x > n).map(|&x| x - n));
        Ok((DescentSet::full(n), DescentSet::new(m, right)?))
    } else {
        let left = j.members.iter().copied().filter(|&x| x < n);
        let right = j.members.iter().filter(|&&x| x > n && x < n + m).map(|&x| x - n);
        Ok((DescentSet::new(n, left)?, DescentSet::new(m, right)?))
    }
}

fn shifted(w: &[u8], n: usize) -> Vec<usize> {
    w.iter().map(|&x| if x == 0 { 0 } else { x as usize + n }).collect()
}

fn rooks_of(words: impl IntoIterator<Item = Vec<usize>>) -> BTreeSet<RookVector> {
    words.into_iter().map(|w| RookVector::new(&w).expect("shuffle of disjoint letters")).collect()
}

/// The induced module `Ind S_I ⊗ S_J`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Induced {
    pub basis: Vec<RookVector>,
    pub simples: FormalSum<DescentSet>,
}

fn induced(basis: BTreeSet<RookVector>) -> Induced {
    let mut simples = FormalSum::new();
    for r in &basis {
        simples.add(d_r(r), 1);
    }
    Induced { basis: basis.into_iter().collect(), simples }
}

/// Basis of `Q(e, f)` for `e = π_{I,n}`, `f = π_{J,m}` by the five-case formula.
pub fn tower_ind_simple(i: &DescentSet, j: &DescentSet) -> Result<Induced> {
    let (n, m) = (i.n, j.n);
    if n + m > MAX_N {
        return Err(Error::TooLarge { n: n + m, max: MAX_N });
    }
    let e = parabolic_zero(n, &i.to_vec())?;
    let f = parabolic_zero(m, &j.to_vec())?;
    let fw = shifted(f.entries(), n);
    let ew: Vec<usize> = e.to_vec();
    let basis = if j.contains(0) {
        if i.is_full() {
            BTreeSet::from([tower_embed(&e, &f)])
        } else {
            BTreeSet::new()
        }
    } else if i.is_full() {
        rooks_of(shuffle(&vec![0usize; n], &fw))
    } else {
        let l = f.entries().first().map(|&x| x as usize).unwrap_or(0);
        let mut out = BTreeSet::new();
        for k in 0..=l.min(m) {
            let tail = &fw[k..];
            let words: BTreeSet<Vec<usize>> = if i.contains(0) {
                let mut head = vec![0usize; k];
                head.extend(&ew);
                shuffle(&head, tail)
            } else {
                shuffle(&vec![0usize; k], &ew).iter().flat_map(|h| shuffle(h, tail)).collect()
            };
            out.extend(rooks_of(words));
        }
        out
    };
    Ok(induced(basis))
}

/// Right ideal `x R^0` by breadth-first search.
pub fn right_orbit(x: &RookVector) -> HashSet<RookVector> {
    let mut seen = HashSet::from([*x]);
    let mut q = VecDeque::from([*x]);
    while let Some(u) = q.pop_front() {
        for i in 0..u.n() {
            let v = right(&u, Generator::pi(i));
            if seen.insert(v) {
                q.push_back(v);
            }
        }
    }
    seen
}

/// Orbit under the generators `π_1 … π_{n-1}` only.
fn hecke_orbit(x: &RookVector) -> HashSet<RookVector> {
    let mut seen = HashSet::from([*x]);
    let mut q = VecDeque::from([*x]);
    while let Some(u) = q.pop_front() {
        for i in 1..u.n() {
            let v = right(&u, Generator::pi(i));
            if seen.insert(v) {
                q.push_back(v);
            }
        }
    }
    seen
}

fn quotient(top: RookVector, lower: impl IntoIterator<Item = RookVector>) -> BTreeSet<RookVector> {
    let mut killed = HashSet::new();
    for g in lower {
        if !killed.contains(&g) {
            killed.extend(right_orbit(&g));
        }
    }
    right_orbit(&top).into_iter().filter(|r| !killed.contains(r)).collect()
}

/// `(e·f) R^0_{n+m}` modulo the right ideal generated by `R_{<e}·f` and `e·R_{<f}`.
pub fn aladin_quotient(e: &RookVector, f: &RookVector) -> BTreeSet<RookVector> {
    let below_e = right_orbit(e).into_iter().filter(|x| x != e);
    let below_f = right_orbit(f).into_iter().filter(|y| y != f);
    let gens: Vec<RookVector> =
        below_e.map(|x| tower_embed(&x, f)).chain(below_f.map(|y| tower_embed(e, &y))).collect();
    quotient(tower_embed(e, f), gens)
}

/// Same quotient with `f` in the 0-Hecke monoid `H_m^0`.
pub fn aladin_quotient_rxh(e: &RookVector, f: &RookVector) -> BTreeSet<RookVector> {
    let below_e = right_orbit(e).into_iter().filter(|x| x != e);
    let below_f = hecke_orbit(f).into_iter().filter(|y| y != f);
    let gens: Vec<RookVector> =
        below_e.map(|x| tower_embed(&x, f)).chain(below_f.map(|y| tower_embed(e, &y))).collect();
    quotient(tower_embed(e, f), gens)
}

/// `Ind P_I ⊗ P_J` along the tower.
pub fn tower_ind_projective(i: &DescentSet, j: &DescentSet) -> FormalSum<DescentSet> {
    let (n, m) = (i.n, j.n);
    let shift = |s: &BTreeSet<usize>| s.iter().filter(|&&x| x > 0).map(|&x| x + n).collect::<Vec<_>>();
    if m == 0 {
        return FormalSum::single(i.clone());
    }
    if n == 0 {
        return FormalSum::single(j.clone());
    }
    let mut out = FormalSum::new();
    if !j.contains(0) {
        let mut a: BTreeSet<usize> = i.members.clone();
        a.extend(shift(&j.members));
        let mut b = a.clone();
        b.insert(n);
        out.add(DescentSet { n: n + m, members: a }, 1);
        // with I full, S_{[0,n] ∪ …} restricts to S_I ⊗ S_{J ∪ {0}}
        if !i.is_full() {
            out.add(DescentSet { n: n + m, members: b }, 1);
        }
    } else if i.is_full() {
        let mut a: BTreeSet<usize> = (0..=n).collect();
        a.extend(shift(&j.members));
        out.add(DescentSet { n: n + m, members: a }, 1);
    }
    out
}

/// Basis of `Ind_{R_n^0 × H_m^0} S_I ⊗ S_J`.
pub fn ind_simple_rxh(i: &DescentSet, j: &BTreeSet<usize>, m: usize) -> Result<Induced> {
    if j.contains(&0) {
        return Err(Error::Parse("0 must not belong to a 0-Hecke descent set".into()));
    }
    let n = i.n;
    let e = parabolic_zero(n, &i.to_vec())?;
    let f = parabolic_zero(m, &j.iter().copied().collect::<Vec<_>>())?;
    let fw = shifted(f.entries(), n);
    let ew = e.to_vec();
    let l = f.entries().first().map(|&x| x as usize).unwrap_or(0);
    let mut out = BTreeSet::new();
    for k in 0..=l.min(m) {
        let tail = &fw[k..];
        let words: BTreeSet<Vec<usize>> = if i.contains(0) {
            let mut head = vec![0usize; k];
            head.extend(&ew);
            shuffle(&head, tail)
        } else {
            shuffle(&vec![0usize; k], &ew).iter().flat_map(|h| shuffle(h, tail)).collect()
        };
        out.extend(rooks_of(words));
    }
    Ok(induced(out))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(Error::Parse(format!("unknown side {s:?}"))),
        }
    }
}

/// Edge `S_from → S_to` of a branching graph, induced with the `R_1^0` simple `via`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BranchEdge {
    pub from: DescentSet,
    pub to: DescentSet,
    pub via: DescentSet,
    pub mult: u64,
}

/// Edges from level `n` to level `n+1`, along `ρ_{1,n}` (left) or `ρ_{n,1}` (right).
pub fn branching_graph(n: usize, side: Side) -> Result<Vec<BranchEdge>> {
    if n + 1 > MAX_N {
        return Err(Error::BoundExceeded { n, max: MAX_N - 1 });
    }
    let mut out = Vec::new();
    for from in all_descent_sets(n) {
        for via in all_descent_sets(1) {
            let ind = match side {
                Side::Left => tower_ind_simple(&via, &from)?,
                Side::Right => tower_ind_simple(&from, &via)?,
            };
            for (to, &mult) in &ind.simples.terms {
                out.push(BranchEdge { from: from.clone(), to: to.clone(), via: via.clone(), mult });
            }
        }
    }
    Ok(out)
}

/// Graphviz text for the branching graph from level 0 up to level `n`.
pub fn branching_dot(n: usize, side: Side) -> Result<String> {
    let mut s = String::from("digraph branching {\n");
    for level in 0..n {
        for e in branching_graph(level, side)? {
            s.push_str(&format!(
                "  \"{}:{}\" -> \"{}:{}\" [label=\"{}{}\"];\n",
                level,
                e.from,
                level + 1,
                e.to,
                e.mult,
                if e.via.members.is_empty() { "" } else { "*" }
            ));
        }
    }
    s.push_str("}\n");
    Ok(s)
}

/// The two sides of the Hopf compatibility diagram on `S^3_{0,1} ⊗ S^2_{1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HopfWitness {
    pub ind_of_res: (FormalSum<DescentSet>, FormalSum<DescentSet>),
    /// Number of tensor terms `(Ind ⊗ Ind)(Res ⊗ Res)`, with multiplicity.
    pub ind_of_res_terms: u64,
    pub res_of_ind: FormalSum<DescentSet>,
    /// Number of terms of `Res Ind`, with multiplicity.
    pub res_of_ind_terms: u64,
}

pub fn hopf_counterexample() -> Result<HopfWitness> {
    let a = DescentSet::new(3, [0, 1])?;
    let b = DescentSet::new(2, [1])?;
    let (a1, a2) = tower_res_simple(1, 2, &a)?;
    let (b1, b2) = tower_res_simple(1, 1, &b)?;
    let left = tower_ind_simple(&a1, &b1)?.simples;
    let right = tower_ind_simple(&a2, &b2)?.simples;
    let terms = left.total() * right.total();
    let big = tower_ind_simple(&a, &b)?.simples;
    let mut res_terms = 0;
    for (j, &k) in &big.terms {
        tower_res_simple(2, 3, j)?;
        res_terms += k;
    }
    Ok(HopfWitness { ind_of_res: (left, right), ind_of_res_terms: terms, res_of_ind: big, res_of_ind_terms: res_terms })
}

/// `dim P_T` for every `T`, as sizes of right descent classes.
pub fn projective_dimensions(n: usize) -> BTreeMap<DescentSet, usize> {
    let mut out: BTreeMap<DescentSet, usize> = all_descent_sets(n).into_iter().map(|s| (s, 0)).collect();
    for r in enumerate_rooks(n) {
        *out.get_mut(&d_r(&r)).unwrap() += 1;
    }
    out
}

/// `rfix(x)` as the absorbing element among `{e idempotent : xe = x}`.
pub fn rfix_brute(x: &RookVector) -> Result<RookVector> {
    let fix: Vec<RookVector> = idempotents(x.n()).into_iter().filter(|e| mul(x, e).map(|y| y == *x).unwrap_or(false)).collect();
    for e in &fix {
        if fix.iter().all(|f| star(e, f).map(|g| g == *e).unwrap_or(false)) {
            return Ok(*e);
        }
    }
    Err(Error::NotIdempotent)
}

/// `x ≤_R e` for every `x` in the right ideal of `e`.
pub fn below(e: &RookVector) -> Vec<RookVector> {
    enumerate_rooks(e.n()).into_iter().filter(|x| x != e && leq(x, e).unwrap_or(false)).collect()
}

/// Descent set of an extended composition.
pub fn descent_set_of(c: &ExtendedComposition) -> DescentSet {
    DescentSet { n: c.total, members: des(c) }
}
