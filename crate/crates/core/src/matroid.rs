//! Matroids on at most 32 elements, given by their bases.

use std::collections::BTreeSet;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::subset::{Subset, MAX_GROUND};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("basis family is empty")]
    EmptyBases,
    #[error("basis {basis} has {found} elements, expected {expected}")]
    UnequalCardinality { expected: usize, found: usize, basis: Subset },
    #[error("exchange fails for bases {b1} and {b2} at element {e}")]
    ExchangeViolation { b1: Subset, b2: Subset, e: usize },
    #[error("ground set of {0} elements exceeds the 32-element cap")]
    SizeOverflow(usize),
    #[error("basis {basis} uses elements outside a ground set of {n}")]
    ElementOutOfRange { n: usize, basis: Subset },
    #[error("{0} is not both a circuit and a hyperplane")]
    NotCircuitHyperplane(Subset),
    #[error("Q_{{2n}} needs n >= 3, got n = {0}")]
    QTooSmall(usize),
    #[error("S_{{4n}} and S'_{{4n}} need n >= 3, got n = {0}")]
    STooSmall(usize),
    #[error("exhaustive search on {n} elements exceeds the limit of {limit}")]
    SearchLimitExceeded { n: usize, limit: usize },
    #[error("rank table needs n <= {max}, got {n}")]
    TableTooLarge { n: usize, max: usize },
    #[error("malformed matroid file: {0}")]
    Format(String),
}

pub type Result<T, E = MatroidError> = std::result::Result<T, E>;

/// A matroid stored as its sorted, validated family of bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    bases: Vec<Subset>,
    rank: usize,
}

impl Matroid {
    /// Validates `bases` as the basis family of a matroid on `n` elements.
    pub fn from_bases<I: IntoIterator<Item = Subset>>(n: usize, bases: I) -> Result<Matroid> {
        let m = Matroid::from_bases_shape(n, bases)?;
        if let Some((b1, b2, e)) = exchange_violation(&m.bases) {
            return Err(MatroidError::ExchangeViolation { b1, b2, e });
        }
        Ok(m)
    }

    /// Size/cardinality checks only; the exchange axiom is left to the caller.
    fn from_bases_shape<I: IntoIterator<Item = Subset>>(n: usize, bases: I) -> Result<Matroid> {
        if n > MAX_GROUND {
            return Err(MatroidError::SizeOverflow(n));
        }
        let mut bases: Vec<Subset> = bases.into_iter().collect();
        bases.sort_unstable();
        bases.dedup();
        let first = *bases.first().ok_or(MatroidError::EmptyBases)?;
        let rank = first.len();
        for &b in &bases {
            if !b.fits(n) {
                return Err(MatroidError::ElementOutOfRange { n, basis: b });
            }
            if b.len() != rank {
                return Err(MatroidError::UnequalCardinality { expected: rank, found: b.len(), basis: b });
            }
        }
        Ok(Matroid { n, bases, rank })
    }

    /// Builds from bases already known to satisfy the exchange axiom.
    pub(crate) fn from_trusted_bases(n: usize, bases: Vec<Subset>) -> Matroid {
        let m = Matroid::from_bases_shape(n, bases).expect("trusted basis family");
        debug_assert!(exchange_violation(&m.bases).is_none());
        m
    }

    /// Ground-set size.
    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    /// Rank of the whole ground set.
    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Rank of the dual.
    #[inline]
    pub fn corank(&self) -> usize {
        self.n - self.rank
    }

    /// Bases in increasing numeric order.
    #[inline]
    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn is_basis(&self, b: Subset) -> bool {
        self.bases.binary_search(&b).is_ok()
    }

    /// Rank of `a`: the largest intersection with a basis.
    pub fn rank_of(&self, a: Subset) -> usize {
        let mut best = 0;
        for b in &self.bases {
            best = best.max((a & *b).len());
            if best == self.rank || best == a.len() {
                break;
            }
        }
        best
    }

    pub fn is_independent(&self, a: Subset) -> bool {
        self.rank_of(a) == a.len()
    }

    pub fn is_circuit(&self, c: Subset) -> bool {
        !c.is_empty() && !self.is_independent(c) && c.iter().all(|e| self.is_independent(c.without(e)))
    }

    /// Closed set of rank one less than the matroid.
    pub fn is_hyperplane(&self, h: Subset) -> bool {
        let r = self.rank_of(h);
        r + 1 == self.rank && (self.ground() - h).iter().all(|e| self.rank_of(h.with(e)) == self.rank)
    }

    pub fn dual(&self) -> Matroid {
        let ground = self.ground();
        Matroid::from_trusted_bases(self.n, self.bases.iter().map(|&b| ground - b).collect())
    }

    /// Elements in no basis, and elements in every basis.
    pub fn loops_and_coloops(&self) -> (Subset, Subset) {
        let mut union = Subset::EMPTY;
        let mut inter = self.ground();
        for &b in &self.bases {
            union = union | b;
            inter = inter & b;
        }
        (self.ground() - union, inter)
    }

    /// `self` on the low elements, `other` shifted above them.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        if n > MAX_GROUND {
            return Err(MatroidError::SizeOverflow(n));
        }
        let mut bases = Vec::with_capacity(self.bases.len() * other.bases.len());
        for &b1 in &self.bases {
            for &b2 in &other.bases {
                bases.push(b1 | b2.shifted(self.n));
            }
        }
        Ok(Matroid::from_trusted_bases(n, bases))
    }

    /// Restriction to `part`, relabelled onto `{0, ..., |part|-1}` in increasing order.
    pub fn restriction(&self, part: Subset) -> Matroid {
        let elems = part.to_vec();
        let mut index = [usize::MAX; MAX_GROUND];
        for (i, &e) in elems.iter().enumerate() {
            index[e] = i;
        }
        let r = self.rank_of(part);
        let bases: BTreeSet<Subset> = self
            .bases
            .iter()
            .map(|&b| b & part)
            .filter(|b| b.len() == r)
            .map(|b| Subset::from_elems(b.iter().map(|e| index[e])))
            .collect();
        Matroid::from_trusted_bases(elems.len(), bases.into_iter().collect())
    }

    /// Image under the element map `e -> perm[e]`.
    pub fn relabel(&self, perm: &[usize]) -> Matroid {
        assert_eq!(perm.len(), self.n);
        Matroid::from_trusted_bases(self.n, self.bases.iter().map(|b| b.map(perm)).collect())
    }

    /// All circuits, found as fundamental circuits of basis/element pairs.
    pub fn circuits(&self) -> CircuitSet {
        let present: FxHashSet<u32> = self.bases.iter().map(|b| b.0).collect();
        let mut found = FxHashSet::default();
        for &b in &self.bases {
            for e in (self.ground() - b).iter() {
                let mut c = Subset::singleton(e);
                for x in b.iter() {
                    if present.contains(&(b.without(x).with(e)).0) {
                        c = c.with(x);
                    }
                }
                found.insert(c);
            }
        }
        let mut circuits: Vec<Subset> = found.into_iter().collect();
        circuits.sort_unstable_by_key(|c| (c.len(), c.0));
        CircuitSet { circuits }
    }

    /// Finest partition of the ground set into connected parts (loops and
    /// coloops end up as singletons).
    pub fn component_parts(&self) -> Vec<Subset> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut c = x;
            while parent[c] != r {
                let next = parent[c];
                parent[c] = r;
                c = next;
            }
            r
        }
        for c in self.circuits().iter() {
            let mut it = c.iter();
            if let Some(first) = it.next() {
                for e in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, e));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut parts: Vec<Subset> = Vec::new();
        let mut root_part = vec![usize::MAX; self.n];
        for e in 0..self.n {
            let r = find(&mut parent, e);
            if root_part[r] == usize::MAX {
                root_part[r] = parts.len();
                parts.push(Subset::EMPTY);
            }
            parts[root_part[r]] = parts[root_part[r]].with(e);
        }
        parts
    }

    /// The non-separable components, each relabelled onto its own ground set.
    pub fn components(&self) -> Vec<Matroid> {
        self.component_parts().into_iter().map(|p| self.restriction(p)).collect()
    }

    /// Non-empty and not a direct sum of two non-empty matroids.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.component_parts().len() == 1
    }

    /// Adds the circuit-hyperplane `x` as a new basis.
    pub fn relax(&self, x: Subset) -> Result<Matroid> {
        if !x.fits(self.n) || !self.is_circuit(x) || !self.is_hyperplane(x) {
            return Err(MatroidError::NotCircuitHyperplane(x));
        }
        let mut bases = self.bases.clone();
        bases.push(x);
        Matroid::from_bases(self.n, bases)
    }

    /// Independent sets (every subset of a basis).
    pub fn independent_sets(&self) -> Vec<Subset> {
        let mut seen: FxHashSet<u32> = FxHashSet::default();
        for &b in &self.bases {
            let mut sub = b.0;
            loop {
                seen.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & b.0;
            }
        }
        let mut out: Vec<Subset> = seen.into_iter().map(Subset).collect();
        out.sort_unstable();
        out
    }

    /// Sets containing a basis.
    pub fn spanning_set_count(&self) -> u64 {
        self.dual().independent_sets().len() as u64
    }

    /// Rank of every subset, when `n` is small enough for a flat table.
    pub fn rank_table(&self) -> Result<RankTable> {
        RankTable::from_matroid(self)
    }

    pub fn to_file(&self) -> MatroidFile {
        MatroidFile { n: self.n, bases: self.bases.iter().map(|b| b.to_vec()).collect() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("plain data serialises")
    }

    pub fn from_json(text: &str) -> Result<Matroid> {
        let file: MatroidFile = serde_json::from_str(text).map_err(|e| MatroidError::Format(e.to_string()))?;
        file.into_matroid()
    }

    /// Deterministic text dump: header, then one basis bit mask per line.
    pub fn canonical_dump(&self) -> String {
        let mut out = format!("n {}\nrank {}\nbases {}\n", self.n, self.rank, self.bases.len());
        for b in &self.bases {
            out.push_str(&b.0.to_string());
            out.push('\n');
        }
        out
    }
}

/// Finds a pair of bases and an element where the exchange axiom breaks.
pub fn exchange_violation(bases: &[Subset]) -> Option<(Subset, Subset, usize)> {
    let present: FxHashSet<u32> = bases.iter().map(|b| b.0).collect();
    for &b1 in bases {
        for &b2 in bases {
            if b1 == b2 {
                continue;
            }
            let only2 = b2 - b1;
            for e in (b1 - b2).iter() {
                let base = b1.without(e);
                if !only2.iter().any(|f| present.contains(&base.with(f).0)) {
                    return Some((b1, b2, e));
                }
            }
        }
    }
    None
}

/// On-disk matroid shape `{"n": int, "bases": [[int, ...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MatroidFile {
    pub n: usize,
    pub bases: Vec<Vec<usize>>,
}

impl MatroidFile {
    pub fn into_matroid(self) -> Result<Matroid> {
        if self.n > MAX_GROUND {
            return Err(MatroidError::SizeOverflow(self.n));
        }
        let mut bases = Vec::with_capacity(self.bases.len());
        for b in &self.bases {
            if let Some(&bad) = b.iter().find(|&&e| e >= self.n) {
                return Err(MatroidError::Format(format!("element {bad} outside ground set of size {}", self.n)));
            }
            let s = Subset::from_elems(b.iter().copied());
            if s.len() != b.len() {
                return Err(MatroidError::Format(format!("repeated element in basis {b:?}")));
            }
            bases.push(s);
        }
        Matroid::from_bases(self.n, bases)
    }
}

/// Circuits sorted by size, then numerically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircuitSet {
    circuits: Vec<Subset>,
}

impl CircuitSet {
    pub fn from_circuits(mut circuits: Vec<Subset>) -> CircuitSet {
        circuits.sort_unstable_by_key(|c| (c.len(), c.0));
        circuits.dedup();
        CircuitSet { circuits }
    }

    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.circuits.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    pub fn contains(&self, c: Subset) -> bool {
        self.circuits.contains(&c)
    }

    pub fn as_slice(&self) -> &[Subset] {
        &self.circuits
    }

    /// Sorted multiset of circuit sizes.
    pub fn size_profile(&self) -> Vec<usize> {
        self.circuits.iter().map(|c| c.len()).collect()
    }

    /// Checks (C1) non-empty members, (C2) antichain and (C3) elimination.
    pub fn check_axioms(&self) -> std::result::Result<(), String> {
        if self.circuits.iter().any(|c| c.is_empty()) {
            return Err("empty circuit".into());
        }
        for (i, &c1) in self.circuits.iter().enumerate() {
            for &c2 in &self.circuits[i + 1..] {
                if c1.is_subset_of(c2) || c2.is_subset_of(c1) {
                    return Err(format!("{c1} and {c2} are nested"));
                }
                for e in (c1 & c2).iter() {
                    let target = (c1 | c2).without(e);
                    if !self.circuits.iter().any(|c3| c3.is_subset_of(target)) {
                        return Err(format!("elimination fails for {c1}, {c2} at {e}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Flat table of `rank(A)` for every `A`, indexed by the subset bits.
#[derive(Clone, Debug)]
pub struct RankTable {
    n: usize,
    full_rank: u8,
    ranks: Vec<u8>,
}

impl RankTable {
    pub const MAX_N: usize = 26;

    pub fn from_matroid(m: &Matroid) -> Result<RankTable> {
        let n = m.size();
        if n > Self::MAX_N {
            return Err(MatroidError::TableTooLarge { n, max: Self::MAX_N });
        }
        let size = 1usize << n;
        let mut independent = vec![false; size];
        for b in m.bases() {
            independent[b.0 as usize] = true;
        }
        // Downward closure: every subset of a basis is independent.
        for e in 0..n {
            let bit = 1usize << e;
            for a in 0..size {
                if a & bit != 0 && independent[a] {
                    independent[a ^ bit] = true;
                }
            }
        }
        let mut ranks = vec![0u8; size];
        for a in 1..size {
            ranks[a] = if independent[a] {
                a.count_ones() as u8
            } else {
                let mut best = 0;
                let mut rest = a;
                while rest != 0 {
                    let low = rest & rest.wrapping_neg();
                    best = best.max(ranks[a ^ low]);
                    rest ^= low;
                }
                best
            };
        }
        Ok(RankTable { n, full_rank: m.rank() as u8, ranks })
    }

    /// Wraps a precomputed table; `ranks.len()` must be `2^n`.
    pub fn from_ranks(n: usize, ranks: Vec<u8>) -> RankTable {
        assert_eq!(ranks.len(), 1usize << n);
        let full_rank = ranks[ranks.len() - 1];
        RankTable { n, full_rank, ranks }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn full_rank(&self) -> usize {
        self.full_rank as usize
    }

    #[inline]
    pub fn rank(&self, a: u32) -> u8 {
        self.ranks[a as usize]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.ranks
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct_q, construct_r, uniform};
    use crate::subset::k_subsets;

    fn s(v: &[usize]) -> Subset {
        Subset::from_elems(v.iter().copied())
    }

    #[test]
    fn empty_matroid() {
        let m = Matroid::from_bases(0, [Subset::EMPTY]).unwrap();
        assert_eq!(m.rank(), 0);
        assert_eq!(m.bases().len(), 1);
    }

    #[test]
    fn uniform_from_all_pairs() {
        let m = Matroid::from_bases(4, k_subsets(4, 2)).unwrap();
        assert_eq!(m, uniform(2, 4));
    }

    #[test]
    fn disjoint_pair_breaks_exchange() {
        let err = Matroid::from_bases(4, [s(&[0, 1]), s(&[2, 3])]).unwrap_err();
        assert!(matches!(err, MatroidError::ExchangeViolation { .. }));
    }

    #[test]
    fn shape_errors() {
        assert_eq!(Matroid::from_bases(3, []).unwrap_err(), MatroidError::EmptyBases);
        assert!(matches!(
            Matroid::from_bases(3, [s(&[0]), s(&[0, 1])]).unwrap_err(),
            MatroidError::UnequalCardinality { .. }
        ));
        assert_eq!(Matroid::from_bases(33, [Subset::EMPTY]).unwrap_err(), MatroidError::SizeOverflow(33));
        assert!(matches!(Matroid::from_bases(2, [s(&[5])]).unwrap_err(), MatroidError::ElementOutOfRange { .. }));
    }

    #[test]
    fn ranks_of_uniform_and_r6() {
        let u24 = uniform(2, 4);
        assert_eq!(u24.rank_of(Subset::EMPTY), 0);
        assert_eq!(u24.rank_of(s(&[0, 1, 2])), 2);
        let r6 = construct_r(3).unwrap();
        assert_eq!(r6.rank_of(s(&[0, 1, 2])), 2);
        assert_eq!(r6.rank_of(s(&[3, 4, 5])), 2);
        assert_eq!(r6.rank_of(s(&[0, 1, 3])), 3);
    }

    #[test]
    fn small_circuits() {
        assert_eq!(uniform(2, 3).circuits().as_slice(), &[s(&[0, 1, 2])]);
        assert_eq!(uniform(0, 1).circuits().as_slice(), &[s(&[0])]);
        let r6 = construct_r(3).unwrap();
        let c = r6.circuits();
        assert!(c.contains(s(&[0, 1, 2])) && c.contains(s(&[3, 4, 5])));
        c.check_axioms().unwrap();
    }

    #[test]
    fn duals() {
        assert_eq!(uniform(2, 4).dual(), uniform(2, 4));
        assert_eq!(uniform(1, 3).dual(), uniform(2, 3));
        let q6 = construct_q(3).unwrap();
        assert_eq!(q6.dual().dual(), q6);
    }

    #[test]
    fn loops_coloops() {
        assert_eq!(uniform(0, 2).loops_and_coloops(), (s(&[0, 1]), Subset::EMPTY));
        assert_eq!(uniform(2, 2).loops_and_coloops(), (Subset::EMPTY, s(&[0, 1])));
        assert_eq!(uniform(2, 4).loops_and_coloops(), (Subset::EMPTY, Subset::EMPTY));
    }

    #[test]
    fn sums_and_components() {
        let free2 = uniform(1, 1).direct_sum(&uniform(1, 1)).unwrap();
        assert_eq!(free2, uniform(2, 2));
        let m = construct_r(3).unwrap();
        assert_eq!(uniform(0, 0).direct_sum(&m).unwrap(), m);
        assert_eq!(uniform(2, 4).components(), vec![uniform(2, 4)]);
        let sum = uniform(1, 1).direct_sum(&uniform(1, 2)).unwrap();
        assert_eq!(sum.components().len(), 2);
        assert_eq!(m.components(), vec![m.clone()]);
        assert_eq!(uniform(1, 31).direct_sum(&uniform(1, 2)).unwrap_err(), MatroidError::SizeOverflow(33));
    }

    #[test]
    fn relaxation_steps() {
        let r6 = construct_r(3).unwrap();
        let u36 = r6.relax(s(&[0, 1, 2])).unwrap().relax(s(&[3, 4, 5])).unwrap();
        assert_eq!(u36, uniform(3, 6));
        let q6 = construct_q(3).unwrap();
        let u36q = q6.relax(s(&[0, 1, 2])).unwrap().relax(s(&[2, 3, 4])).unwrap();
        assert_eq!(u36q, uniform(3, 6));
        assert_eq!(uniform(2, 4).relax(s(&[0, 1])).unwrap_err(), MatroidError::NotCircuitHyperplane(s(&[0, 1])));
    }

    #[test]
    fn rank_table_matches_oracle() {
        let m = construct_q(3).unwrap();
        let t = m.rank_table().unwrap();
        for a in 0..64u32 {
            assert_eq!(t.rank(a) as usize, m.rank_of(Subset(a)));
        }
        assert_eq!(t.full_rank(), 3);
    }

    #[test]
    fn json_round_trip_and_dump() {
        let m = construct_r(3).unwrap();
        let back = Matroid::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
        let dump = uniform(1, 2).canonical_dump();
        assert_eq!(dump, "n 2\nrank 1\nbases 2\n1\n2\n");
        assert!(Matroid::from_json("{\"n\":2,\"bases\":[[0,0]]}").is_err());
        assert!(Matroid::from_json("{\"n\":2,\"bases\":[[3]]}").is_err());
    }
}
