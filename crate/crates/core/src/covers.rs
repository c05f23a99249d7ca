//! 2-fold intersecting covers of cycles and paths, and the block-swap map
//! relating tuples of subsets of `S_4n` and `S'_4n`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{ExponentVector, VarKind, VarLayout};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("construction for n = {n} failed verification at edge {edge:?}")]
    ConstructionInvalid { n: usize, edge: (usize, usize) },
    #[error("no pair of sets meets exactly in the edge {{0, 1}}")]
    NormalizationImpossible,
    #[error("exact search is limited to n <= {limit}, got {n}")]
    SearchLimitExceeded { n: usize, limit: usize },
    #[error("scale n = {n} must exceed g^2 = {g2}")]
    ScaleTooSmall { n: usize, g2: usize },
    #[error("no admissible cut-off for this tuple")]
    NoCutoff,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = CoverError> = std::result::Result<T, E>;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Host {
    /// `C_n`: vertices `Z_n`, edges `{i, i+1}`.
    Cycle,
    /// `P_{n+1}`: vertices `0..=n`, edges `{i, i+1}` for `i < n`.
    Path,
}

impl Host {
    pub fn vertex_count(self, n: usize) -> usize {
        match self {
            Host::Cycle => n,
            Host::Path => n + 1,
        }
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`.
    pub fn edges(self, n: usize) -> Vec<(usize, usize)> {
        match self {
            Host::Cycle => (0..n)
                .map(|i| {
                    let j = (i + 1) % n;
                    (i.min(j), i.max(j))
                })
                .collect(),
            Host::Path => (0..n).map(|i| (i, i + 1)).collect(),
        }
    }
}

/// A family of vertex sets of a cycle or path host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Cover {
    pub host: Host,
    pub n: usize,
    pub family: Vec<Vec<usize>>,
}

/// Witness pair for every edge, or the first uncovered edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Valid(Vec<((usize, usize), (usize, usize))>),
    Uncovered((usize, usize)),
}

impl Certificate {
    pub fn is_valid(&self) -> bool {
        matches!(self, Certificate::Valid(_))
    }
}

/// Largest host accepted from files.
pub const MAX_FILE_N: usize = 1 << 16;

impl Cover {
    pub fn new(host: Host, n: usize, family: Vec<Vec<usize>>) -> Cover {
        let family = family.into_iter().map(|s| s.into_iter().collect::<BTreeSet<_>>().into_iter().collect()).collect();
        Cover { host, n, family }
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn from_json(text: &str) -> Result<Cover> {
        let c: Cover = serde_json::from_str(text).map_err(|e| CoverError::Invalid(e.to_string()))?;
        let min = match c.host {
            Host::Cycle => 3,
            Host::Path => 1,
        };
        if c.n < min || c.n > MAX_FILE_N {
            return Err(CoverError::Invalid(format!("host size {} out of range", c.n)));
        }
        let verts = c.host.vertex_count(c.n);
        if let Some(v) = c.family.iter().flatten().find(|&&v| v >= verts) {
            return Err(CoverError::Invalid(format!("vertex {v} outside the host")));
        }
        Ok(Cover::new(c.host, c.n, c.family))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serialises")
    }
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j, mut out) = (0, 0, Vec::new());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Checks that every host edge is exactly the intersection of some pair.
pub fn verify_cover(c: &Cover) -> Certificate {
    let sets: Vec<Vec<usize>> =
        c.family.iter().map(|s| s.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()).collect();
    let mut witness = std::collections::HashMap::new();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let m = intersect(&sets[i], &sets[j]);
            if m.len() == 2 {
                witness.entry((m[0], m[1])).or_insert((i, j));
            }
        }
    }
    let mut out = Vec::new();
    for e in c.host.edges(c.n) {
        match witness.get(&e) {
            Some(&w) => out.push((e, w)),
            None => return Certificate::Uncovered(e),
        }
    }
    Certificate::Valid(out)
}

fn checked(c: Cover) -> Result<Cover> {
    match verify_cover(&c) {
        Certificate::Valid(_) => Ok(c),
        Certificate::Uncovered(edge) => Err(CoverError::ConstructionInvalid { n: c.n, edge }),
    }
}

/// Sets `A_i`, `B_j` of the square construction on `Z_{p^2}` (before verification).
fn square_sets(p: usize) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let m = p * p;
    let a = (0..p).map(|i| (i * p..=(i + 1) * p + 1).map(|z| z % m).collect()).collect();
    let b = (0..p)
        .map(|j| {
            (0..p - 1)
                .flat_map(|k| {
                    let base = (j + k + 1) * p;
                    [(base + k + 1) % m, (base + k + 2) % m]
                })
                .collect()
        })
        .collect();
    (a, b)
}

/// `2p` sets covering `C_{p^2}`.
pub fn cover_square(p: usize) -> Result<Cover> {
    if p < 3 {
        return Err(CoverError::Invalid(format!("square construction needs p >= 3, got {p}")));
    }
    let (a, b) = square_sets(p);
    checked(Cover::new(Host::Cycle, p * p, a.into_iter().chain(b).collect()))
}

/// The explicit covers for `n` in `3..=8`, `10` and `11`.
pub fn small_cycle_cover(n: usize) -> Option<Cover> {
    let tri = |n: usize| (0..n).map(|i| vec![i, (i + 1) % n, (i + 2) % n]).collect::<Vec<_>>();
    let family: Vec<Vec<usize>> = match n {
        3 => vec![vec![1, 2], vec![2, 0], vec![0, 1], vec![0, 1, 2]],
        4..=6 => tri(n),
        7 => vec![vec![0, 1, 2], vec![1, 2, 3, 4], vec![3, 4, 5, 6], vec![5, 6, 0, 1], vec![2, 3, 6, 0], vec![4, 5]],
        8 => vec![
            vec![0, 1, 2, 3],
            vec![2, 3, 4, 5],
            vec![4, 5, 6, 7],
            vec![6, 7, 0, 1],
            vec![1, 2, 5, 6],
            vec![3, 4, 7, 0],
        ],
        10 => vec![
            vec![0, 1, 2, 3],
            vec![2, 3, 4, 5],
            vec![4, 5, 6, 7],
            vec![6, 7, 8, 9],
            vec![8, 9, 0, 1],
            vec![1, 2, 5, 6],
            vec![3, 4, 7, 8],
            vec![9, 0],
        ],
        11 => vec![
            vec![0, 1, 2, 3, 4],
            vec![3, 4, 5, 6],
            vec![5, 6, 7, 8],
            vec![7, 8, 9, 10],
            vec![9, 10, 0, 1],
            vec![1, 2, 6, 7],
            vec![2, 3, 8, 9],
            vec![4, 5, 10, 0],
        ],
        _ => return None,
    };
    Some(Cover::new(Host::Cycle, n, family))
}

/// Shrinks the `C_{p^2}` cover to `C_n` (`3p <= n < p^2`) by bypassing runs of
/// vertices inside the `A` blocks, then relabels the surviving vertices.
fn cover_by_contraction(n: usize, p: usize) -> Result<Cover> {
    let m = p * p;
    let (mut a, mut b) = square_sets(p);
    let mut remaining = m - n;
    let mut removed = vec![false; m];
    for q in 1..=p {
        if remaining == 0 {
            break;
        }
        let drop = remaining.min(p - 3);
        remaining -= drop;
        let k = drop + 2;
        let qi = q % p;
        let at = |off: usize| (p * q + off) % m;
        let gone: Vec<usize> = (2..k).map(at).collect();
        a[qi].retain(|z| !gone.contains(z));
        for j in 2..k {
            let bj = (q + p - j) % p;
            let (u, v) = (at(j), at(j + 1));
            b[bj].retain(|&z| z != u && z != v);
        }
        let b1 = (q + p - 1) % p;
        b[b1].retain(|&z| z != at(2));
        b[b1].push(at(k));
        for &z in &gone {
            removed[z] = true;
        }
    }
    let mut relabel = vec![usize::MAX; m];
    let mut next = 0;
    for (z, r) in relabel.iter_mut().enumerate() {
        if !removed[z] {
            *r = next;
            next += 1;
        }
    }
    debug_assert_eq!(next, n);
    let family =
        a.into_iter().chain(b).map(|s| s.into_iter().filter(|&z| !removed[z]).map(|z| relabel[z]).collect()).collect();
    checked(Cover::new(Host::Cycle, n, family))
}

fn ceil_sqrt(n: u64) -> u64 {
    let s = n.isqrt();
    if s * s == n {
        s
    } else {
        s + 1
    }
}

/// A cover of `C_n` with at most `2⌈√n⌉` sets.
pub fn cover_cycle(n: usize) -> Result<Cover> {
    if n < 3 {
        return Err(CoverError::Invalid(format!("cycles need n >= 3, got {n}")));
    }
    if let Some(c) = small_cycle_cover(n) {
        return checked(c);
    }
    let p = ceil_sqrt(n as u64) as usize;
    if p * p == n {
        cover_square(p)
    } else {
        cover_by_contraction(n, p)
    }
}

/// Reduces a `P_{n+1}` cover modulo `n` to a `C_n` cover.
pub fn path_to_cycle(c: &Cover) -> Result<Cover> {
    if c.host != Host::Path {
        return Err(CoverError::Invalid("expected a path cover".into()));
    }
    let n = c.n;
    checked(Cover::new(Host::Cycle, n, c.family.iter().map(|s| s.iter().map(|&z| z % n).collect()).collect()))
}

/// Lifts a `C_n` cover to `P_{n+1}`, moving the pair witnessing `{0, 1}` to
/// the ends of the family and splitting vertex `0` into `0` and `n`.
pub fn cycle_to_path(c: &Cover) -> Result<Cover> {
    if c.host != Host::Cycle {
        return Err(CoverError::Invalid("expected a cycle cover".into()));
    }
    let n = c.n;
    let Certificate::Valid(w) = verify_cover(c) else {
        return Err(CoverError::NormalizationImpossible);
    };
    let &(_, (i, j)) = w.iter().find(|(e, _)| *e == (0, 1)).ok_or(CoverError::NormalizationImpossible)?;
    let mut order: Vec<usize> = vec![i];
    order.extend((0..c.len()).filter(|&k| k != i && k != j));
    order.push(j);
    let family = order
        .into_iter()
        .map(|k| {
            let h = &c.family[k];
            let has = |v: usize| h.contains(&v);
            let mut out: Vec<usize> = h.clone();
            if has(n - 1) && has(0) {
                out.push(n);
                if !has(1) {
                    out.retain(|&z| z != 0);
                }
            }
            out
        })
        .collect();
    checked(Cover::new(Host::Path, n, family))
}

/// Rotates a cycle cover by `k`.
pub fn rotate(c: &Cover, k: usize) -> Cover {
    Cover::new(c.host, c.n, c.family.iter().map(|s| s.iter().map(|&z| (z + k) % c.n).collect()).collect())
}

/// Reflects a cycle cover, `z -> -z`.
pub fn reflect(c: &Cover) -> Cover {
    Cover::new(c.host, c.n, c.family.iter().map(|s| s.iter().map(|&z| (c.n - z) % c.n).collect()).collect())
}

/// Exact-search size limit.
pub const IOTA_LIMIT: usize = 8;

/// `⌈(1 + √(1 + 8m))/2⌉`: fewest sets with at least `m` index pairs.
pub fn pair_count_lower_bound(m: usize) -> usize {
    (1..).find(|s: &usize| s * (s - 1) / 2 >= m).expect("unbounded search")
}

/// Minimum size of a 2-fold intersecting cover, by exhaustive search.
///
/// Each edge is assigned a distinct pair of set indices; a set is taken to be
/// the union of the edges assigned to it, which is the smallest choice and so
/// loses no solutions.
pub fn iota_exact(n: usize, host: Host) -> Result<usize> {
    if n > IOTA_LIMIT {
        return Err(CoverError::SearchLimitExceeded { n, limit: IOTA_LIMIT });
    }
    if host == Host::Cycle && n < 3 {
        return Err(CoverError::Invalid(format!("cycles need n >= 3, got {n}")));
    }
    let edges = host.edges(n);
    let lower = pair_count_lower_bound(edges.len());
    for s in lower..=edges.len() + 1 {
        let mut st =
            IotaSearch { edges: &edges, s, sets: vec![0u64; s], pair_used: vec![false; s * s], assigned: Vec::new() };
        if st.search(0, 0) {
            assert!(s >= lower);
            return Ok(s);
        }
    }
    unreachable!("the vertex set plus all edges always covers")
}

struct IotaSearch<'a> {
    edges: &'a [(usize, usize)],
    s: usize,
    sets: Vec<u64>,
    pair_used: Vec<bool>,
    assigned: Vec<(usize, usize, u64)>,
}

impl IotaSearch<'_> {
    /// `used` is the number of set indices already touched (symmetry breaking).
    fn search(&mut self, k: usize, used: usize) -> bool {
        if k == self.edges.len() {
            return true;
        }
        let (u, v) = self.edges[k];
        let e = 1u64 << u | 1u64 << v;
        // Untouched indices are interchangeable, so only the lowest one may be opened.
        for i in 0..=used.min(self.s - 1) {
            for j in i + 1..=(used + 1).min(self.s - 1) {
                if self.pair_used[i * self.s + j] || (j == used + 1 && i != used) {
                    continue;
                }
                let (si, sj) = (self.sets[i], self.sets[j]);
                self.sets[i] |= e;
                self.sets[j] |= e;
                let ok = self.sets[i] & self.sets[j] == e
                    && self.assigned.iter().all(|&(a, b, f)| self.sets[a] & self.sets[b] == f);
                if ok {
                    self.pair_used[i * self.s + j] = true;
                    self.assigned.push((i, j, e));
                    if self.search(k + 1, used.max(j + 1)) {
                        return true;
                    }
                    self.assigned.pop();
                    self.pair_used[i * self.s + j] = false;
                }
                self.sets[i] = si;
                self.sets[j] = sj;
            }
        }
        false
    }
}

/// Rank function of `S_4n` or `S'_4n` on `Z_4n` for any `n >= 3` (ground sets
/// beyond 32 elements included): `min(|A|, 3)`, except that the removed
/// triples have rank 2.
#[derive(Clone, Debug)]
pub struct LooseCycleRank {
    n: usize,
    triples: Vec<u64>,
}

impl LooseCycleRank {
    fn triple(n: usize, i: usize) -> u64 {
        let m = 4 * n;
        1u64 << (2 * i % m) | 1u64 << ((2 * i + 1) % m) | 1u64 << ((2 * i + 2) % m)
    }

    /// Rank of `S_4n`.
    pub fn cycles(n: usize) -> LooseCycleRank {
        assert!((3..=16).contains(&n));
        let mut triples: Vec<u64> = (0..n - 1).chain(n..2 * n - 1).map(|i| Self::triple(n, i)).collect();
        triples.push(mask(&[2 * n - 2, 2 * n - 1, 0], 4 * n));
        triples.push(mask(&[4 * n - 2, 4 * n - 1, 2 * n], 4 * n));
        LooseCycleRank { n, triples }
    }

    /// Rank of `S'_4n`.
    pub fn paths(n: usize) -> LooseCycleRank {
        assert!((3..=16).contains(&n));
        LooseCycleRank { n, triples: (0..2 * n).map(|i| Self::triple(n, i)).collect() }
    }

    pub fn ground_size(&self) -> usize {
        4 * self.n
    }

    pub fn rank(&self, a: u64) -> usize {
        let k = a.count_ones() as usize;
        if k == 3 && self.triples.contains(&a) {
            2
        } else {
            k.min(3)
        }
    }
}

/// The block swap on `Z_4n` with cut-off `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMap {
    pub n: usize,
    pub l: usize,
    pub mapping: Vec<usize>,
}

impl PhiMap {
    /// Fixes `[0, 2c)` and `[2n, 2n + 2c)` with `c = n − l`; swaps the tails by `±2n`.
    pub fn with_cutoff(n: usize, l: usize) -> PhiMap {
        let c = n - l;
        let mapping = (0..4 * n)
            .map(|z| {
                if (2 * c..2 * n).contains(&z) {
                    z + 2 * n
                } else if (2 * n + 2 * c..4 * n).contains(&z) {
                    z - 2 * n
                } else {
                    z
                }
            })
            .collect();
        PhiMap { n, l, mapping }
    }

    pub fn apply(&self, a: u64) -> u64 {
        let mut out = 0u64;
        let mut rest = a;
        while rest != 0 {
            let z = rest.trailing_zeros() as usize;
            out |= 1u64 << self.mapping[z];
            rest &= rest - 1;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().enumerate().all(|(i, &z)| i == z)
    }
}

fn mask(elems: &[usize], m: usize) -> u64 {
    elems.iter().fold(0u64, |acc, &z| acc | 1u64 << (z % m))
}

/// The sets `A_i`, `A_i ∪ A_j`, `A_i ∩ A_j` of a tuple.
pub fn tuple_closure(tuple: &[u64]) -> BTreeSet<u64> {
    let mut x: BTreeSet<u64> = tuple.iter().copied().collect();
    for (i, &a) in tuple.iter().enumerate() {
        for &b in &tuple[i + 1..] {
            x.insert(a | b);
            x.insert(a & b);
        }
    }
    x
}

/// Chooses the smallest admissible cut-off for `tuple` and returns the swap.
pub fn phi_map(n: usize, tuple: &[u64]) -> Result<PhiMap> {
    let g = tuple.len();
    if n <= g * g {
        return Err(CoverError::ScaleTooSmall { n, g2: g * g });
    }
    if n > 16 {
        return Err(CoverError::Invalid(format!("n = {n} exceeds the 64-element word")));
    }
    let m = 4 * n;
    let x = tuple_closure(tuple);
    let t = |i: usize| mask(&[2 * i, 2 * i + 1, 2 * i + 2], m);
    let boundary_free = |sets: &[u64]| sets.iter().all(|s| !x.contains(s));
    let identity_ok = boundary_free(&[
        mask(&[2 * n - 2, 2 * n - 1, 0], m),
        mask(&[4 * n - 2, 4 * n - 1, 2 * n], m),
        mask(&[2 * n - 2, 2 * n - 1, 2 * n], m),
        mask(&[4 * n - 2, 4 * n - 1, 0], m),
    ]);
    if identity_ok {
        return Ok(PhiMap::with_cutoff(n, 0));
    }
    for l in 1..n {
        let c = n - l;
        if boundary_free(&[
            t(c - 1),
            mask(&[2 * c - 2, 2 * c - 1, 2 * n + 2 * c], m),
            t(n + c - 1),
            mask(&[2 * n + 2 * c - 2, 2 * n + 2 * c - 1, 2 * c], m),
        ]) {
            return Ok(PhiMap::with_cutoff(n, l));
        }
    }
    Err(CoverError::NoCutoff)
}

/// The six cardinality/rank equalities between `tuple` in `S_4n` and its image in `S'_4n`.
pub fn phi_equalities_hold(n: usize, tuple: &[u64], phi: &PhiMap) -> bool {
    let s = LooseCycleRank::cycles(n);
    let sp = LooseCycleRank::paths(n);
    let same = |a: u64| {
        let b = phi.apply(a);
        a.count_ones() == b.count_ones() && s.rank(a) == sp.rank(b)
    };
    tuple.iter().all(|&a| same(a))
        && tuple.iter().enumerate().all(|(i, &a)| tuple[i + 1..].iter().all(|&b| same(a & b) && same(a | b)))
}

/// Smallest `g` with `C(g−2, 2) + 2 >= n`.
pub fn genus_equality_threshold(n: usize) -> usize {
    (2..)
        .find(|&g: &usize| {
            let k = g - 2;
            k * k.saturating_sub(1) / 2 + 2 >= n
        })
        .expect("unbounded search")
}

/// `⌈(5 + √(8n − 15))/2⌉` in exact integer arithmetic.
pub fn threshold_closed_form(n: u64) -> u64 {
    let d = 8 * n - 15;
    let s = d.isqrt();
    if s * s == d {
        (5 + s).div_ceil(2)
    } else {
        (5 + s) / 2 + 1
    }
}

/// The three integer sequences `(u_n, l_n, l̂_n)` of the triangle/square comparison.
pub fn bound_sequences(n: u64) -> (u64, u64, u64) {
    let u = 2 * ceil_sqrt(n);
    let l = threshold_closed_form(n);
    let lhat = ceil_sqrt(2 * l * l) - 2;
    (u, l, lhat)
}

/// `2⌈√n⌉ <= ⌈√2·l_n⌉ − 2`.
pub fn genus_bound_inequality_check(n: u64) -> bool {
    let (u, _, lhat) = bound_sequences(n);
    u <= lhat
}

/// The tuple built from a `C_n` cover and its Whitney exponents in `S_4n`.
#[derive(Clone, Debug)]
pub struct F1Witness {
    pub tuple: Vec<u64>,
    pub exps: ExponentVector,
    /// Pairwise intersections of size 3, in order of first appearance.
    pub realized: Vec<u64>,
}

/// Maps vertex `v` of `C_n` to `2v` and edge `{i, i+1}` to `2i + 1`.
pub fn cover_set_to_z4n(n: usize, h: &[usize]) -> u64 {
    let mut out = 0u64;
    for &v in h {
        out |= 1u64 << (2 * v);
        if h.contains(&((v + 1) % n)) {
            out |= 1u64 << (2 * v + 1);
        }
    }
    out
}

/// Exponent vector of `R^(g)` for a tuple under a rank function.
pub fn whitney_exponents(tuple: &[u64], rank: impl Fn(u64) -> usize, full_rank: usize) -> ExponentVector {
    let g = tuple.len();
    let l = VarLayout::new(g);
    let mut e = vec![0u8; l.count()];
    let xy = |a: u64| ((full_rank - rank(a)) as u8, (a.count_ones() as usize - rank(a)) as u8);
    for (i, &a) in tuple.iter().enumerate() {
        let (x, y) = xy(a);
        e[l.index(VarKind::X(i))] = x;
        e[l.index(VarKind::Y(i))] = y;
        for (j, &b) in tuple.iter().enumerate().skip(i + 1) {
            let (xc, yc) = xy(a & b);
            let (xu, yu) = xy(a | b);
            e[l.index(VarKind::XCap(i, j))] = xc;
            e[l.index(VarKind::YCap(i, j))] = yc;
            e[l.index(VarKind::XCup(i, j))] = xu;
            e[l.index(VarKind::YCup(i, j))] = yu;
        }
    }
    e
}

pub fn witness_monomial_for_f1(n: usize) -> Result<F1Witness> {
    if !(3..=8).contains(&n) {
        return Err(CoverError::Invalid(format!("need 3 <= n <= 8, got {n}")));
    }
    let cover = cover_cycle(n)?;
    let tuple: Vec<u64> = cover.family.iter().map(|h| cover_set_to_z4n(n, h)).collect();
    let s = LooseCycleRank::cycles(n);
    let exps = whitney_exponents(&tuple, |a| s.rank(a), 3);
    let mut realized = Vec::new();
    for (i, &a) in tuple.iter().enumerate() {
        for &b in &tuple[i + 1..] {
            let c = a & b;
            if c.count_ones() == 3 && !realized.contains(&c) {
                realized.push(c);
            }
        }
    }
    Ok(F1Witness { tuple, exps, realized })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn explicit_small_covers() {
        for n in [3, 4, 5, 6, 7, 8, 10, 11] {
            let c = small_cycle_cover(n).unwrap();
            assert!(verify_cover(&c).is_valid(), "n = {n}");
        }
        let bad = Cover::new(Host::Cycle, 4, vec![vec![0, 1]]);
        assert_eq!(verify_cover(&bad), Certificate::Uncovered((0, 1)));
    }

    #[test]
    fn square_consecutive_a() {
        for p in 3..=6 {
            let (a, _) = square_sets(p);
            let m = p * p;
            for i in 0..p {
                let mut x = intersect(&sorted(&a[i]), &sorted(&a[(i + 1) % p]));
                x.sort();
                let mut want = vec![((i + 1) * p) % m, ((i + 1) * p + 1) % m];
                want.sort();
                assert_eq!(x, want);
            }
            assert_eq!(cover_square(p).unwrap().len(), 2 * p);
        }
    }

    fn sorted(v: &[usize]) -> Vec<usize> {
        let mut v = v.to_vec();
        v.sort();
        v
    }

    #[test]
    fn specific_sizes() {
        assert_eq!(cover_cycle(12).unwrap().len(), 8);
        assert_eq!(cover_cycle(100).unwrap().len(), 20);
        assert_eq!(
            cover_cycle(5).unwrap().family,
            (0..5).map(|i| sorted(&[i, (i + 1) % 5, (i + 2) % 5])).collect::<Vec<_>>()
        );
    }

    #[test]
    fn transforms_small() {
        let p4 = Cover::new(Host::Path, 3, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 1, 2, 3]]);
        assert!(verify_cover(&p4).is_valid());
        assert!(path_to_cycle(&p4).is_ok());
        let c9 = cover_cycle(9).unwrap();
        let p10 = cycle_to_path(&c9).unwrap();
        assert_eq!(p10.len(), 6);
    }

    #[test]
    fn iota_tiny() {
        assert_eq!(iota_exact(3, Host::Cycle).unwrap(), 4);
        assert_eq!(pair_count_lower_bound(3), 3);
        assert!(iota_exact(9, Host::Cycle).is_err());
    }

    #[test]
    fn thresholds() {
        assert_eq!(genus_equality_threshold(3), 4);
        assert_eq!(genus_equality_threshold(4), 5);
        for n in 3..2000u64 {
            assert_eq!(genus_equality_threshold(n as usize) as u64, threshold_closed_form(n), "n = {n}");
        }
        assert_eq!(bound_sequences(3), (4, 4, 4));
        assert!(genus_bound_inequality_check(3));
    }

    #[test]
    fn phi_identity_for_empty_tuple() {
        let phi = phi_map(10, &[0, 0, 0]).unwrap();
        assert!(phi.is_identity());
        assert!(matches!(phi_map(9, &[0, 0, 0]), Err(CoverError::ScaleTooSmall { .. })));
    }

    #[test]
    fn loose_rank_closing_triples() {
        let s = LooseCycleRank::cycles(3);
        assert_eq!(s.rank(mask(&[4, 5, 0], 12)), 2);
        assert_eq!(s.rank(mask(&[10, 11, 6], 12)), 2);
        assert_eq!(s.rank(mask(&[4, 5, 6], 12)), 3);
        let sp = LooseCycleRank::paths(3);
        assert_eq!(sp.rank(mask(&[4, 5, 6], 12)), 2);
        assert_eq!(sp.rank(mask(&[10, 11, 0], 12)), 2);
        assert_eq!(sp.rank(mask(&[4, 5, 0], 12)), 3);
    }
}
