//! Isomorphism and equivalence of small matroids by pruned permutation search.

use crate::matroid::{Matroid, MatroidError, RankTable, Result};
use crate::subset::Subset;

/// Default ground-set limit for exhaustive isomorphism search.
pub const DEFAULT_SEARCH_LIMIT: usize = 12;

/// Per-element fingerprint: number of bases through `e` and circuit sizes through `e`.
fn element_signatures(m: &Matroid) -> Vec<(usize, Vec<usize>)> {
    let circuits = m.circuits();
    (0..m.size())
        .map(|e| {
            let through = m.bases().iter().filter(|b| b.contains(e)).count();
            let mut sizes: Vec<usize> = circuits.iter().filter(|c| c.contains(e)).map(|c| c.len()).collect();
            sizes.sort_unstable();
            (through, sizes)
        })
        .collect()
}

fn global_invariants_match(a: &Matroid, b: &Matroid) -> bool {
    let mut ca = a.circuits().size_profile();
    let mut cb = b.circuits().size_profile();
    ca.sort_unstable();
    cb.sort_unstable();
    a.size() == b.size() && a.rank() == b.rank() && a.bases().len() == b.bases().len() && ca == cb
}

/// Finds `perm` with `b == a.relabel(perm)`, using the default size limit.
pub fn is_isomorphic(a: &Matroid, b: &Matroid) -> Result<Option<Vec<usize>>> {
    is_isomorphic_with_limit(a, b, DEFAULT_SEARCH_LIMIT)
}

pub fn is_isomorphic_with_limit(a: &Matroid, b: &Matroid, limit: usize) -> Result<Option<Vec<usize>>> {
    let n = a.size();
    if n > limit || b.size() > limit {
        return Err(MatroidError::SearchLimitExceeded { n: n.max(b.size()), limit });
    }
    if !global_invariants_match(a, b) {
        return Ok(None);
    }
    let sig_a = element_signatures(a);
    let sig_b = element_signatures(b);
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return Ok(None);
    }
    let ta = a.rank_table()?;
    let tb = b.rank_table()?;
    let mut search = Search { ta: &ta, tb: &tb, sig_a: &sig_a, sig_b: &sig_b, map: vec![usize::MAX; n], used: 0 };
    Ok(search.extend(0).then_some(search.map))
}

struct Search<'a> {
    ta: &'a RankTable,
    tb: &'a RankTable,
    sig_a: &'a [(usize, Vec<usize>)],
    sig_b: &'a [(usize, Vec<usize>)],
    map: Vec<usize>,
    used: u32,
}

impl Search<'_> {
    /// Elements `0..depth` are mapped; every subset of them keeps its rank.
    fn extend(&mut self, depth: usize) -> bool {
        let n = self.map.len();
        if depth == n {
            return true;
        }
        for cand in 0..n {
            if self.used >> cand & 1 == 1 || self.sig_a[depth] != self.sig_b[cand] {
                continue;
            }
            self.map[depth] = cand;
            if self.ranks_agree(depth) {
                self.used |= 1 << cand;
                if self.extend(depth + 1) {
                    return true;
                }
                self.used &= !(1 << cand);
            }
            self.map[depth] = usize::MAX;
        }
        false
    }

    /// Checks every subset of `0..=depth` that contains `depth`.
    fn ranks_agree(&self, depth: usize) -> bool {
        let low = (1u32 << depth) - 1;
        let mut sub = low;
        loop {
            let a = sub | 1 << depth;
            let image = Subset(a).map(&self.map).0;
            if self.ta.rank(a) != self.tb.rank(image) {
                return false;
            }
            if sub == 0 {
                return true;
            }
            sub = (sub - 1) & low;
        }
    }
}

/// Component multisets agree, each pair matched up to isomorphism or duality.
pub fn is_equivalent(a: &Matroid, b: &Matroid) -> Result<bool> {
    if a.size() != b.size() {
        return Ok(false);
    }
    let ca = a.components();
    let mut cb: Vec<Option<Matroid>> = b.components().into_iter().map(Some).collect();
    if ca.len() != cb.len() {
        return Ok(false);
    }
    'outer: for x in &ca {
        for slot in cb.iter_mut() {
            let Some(y) = slot else { continue };
            if x.size() == y.size() && (is_isomorphic(x, y)?.is_some() || is_isomorphic(&x.dual(), y)?.is_some()) {
                *slot = None;
                continue 'outer;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{construct_q, construct_r, uniform};

    #[test]
    fn uniform_self_dual() {
        let u = uniform(2, 4);
        assert!(is_isomorphic(&u, &u.dual()).unwrap().is_some());
    }

    #[test]
    fn r6_vs_q6() {
        let r6 = construct_r(3).unwrap();
        let q6 = construct_q(3).unwrap();
        assert!(is_isomorphic(&r6, &q6).unwrap().is_none());
        assert!(!is_equivalent(&r6, &q6).unwrap());
        assert!(is_isomorphic(&r6, &r6.dual()).unwrap().is_some());
        assert!(is_isomorphic(&q6, &q6.dual()).unwrap().is_some());
    }

    #[test]
    fn relabelled_copy_found() {
        let q6 = construct_q(3).unwrap();
        let perm = [4, 2, 5, 0, 1, 3];
        let moved = q6.relabel(&perm);
        let found = is_isomorphic(&q6, &moved).unwrap().unwrap();
        assert_eq!(q6.relabel(&found), moved);
    }

    #[test]
    fn sum_not_uniform() {
        let sum = uniform(1, 2).direct_sum(&uniform(1, 2)).unwrap();
        assert!(is_isomorphic(&sum, &uniform(2, 4)).unwrap().is_none());
    }

    #[test]
    fn equivalence_allows_dual_components() {
        let a = uniform(1, 3).direct_sum(&uniform(1, 2)).unwrap();
        let b = uniform(1, 2).direct_sum(&uniform(2, 3)).unwrap();
        assert!(is_isomorphic(&a, &b).unwrap().is_none());
        assert!(is_equivalent(&a, &b).unwrap());
    }

    #[test]
    fn limit_enforced() {
        let u = uniform(2, 13);
        assert!(matches!(is_isomorphic(&u, &u), Err(MatroidError::SearchLimitExceeded { .. })));
    }
}
