//! Named matroid families: uniform matroids, `R_2n`, `Q_2n`, and the loose-cycle
//! matroids `S_4n` / `S'_4n` on `Z_4n`.

use rustc_hash::FxHashSet;

use crate::matroid::{Matroid, MatroidError, Result};
use crate::subset::{k_subsets, Subset, MAX_GROUND};

/// `U_{r,n}`: every `r`-subset is a basis.
pub fn uniform(r: usize, n: usize) -> Matroid {
    assert!(r <= n && n <= MAX_GROUND, "uniform({r}, {n}) out of range");
    Matroid::from_trusted_bases(n, k_subsets(n, r).collect())
}

/// `X_1 = {0..n-1}`, the lower half of the ground set of `R_2n` / `Q_2n`.
pub fn half_x1(n: usize) -> Subset {
    Subset::from_elems(0..n)
}

/// `X_2 = {n..2n-1}`.
pub fn half_x2(n: usize) -> Subset {
    Subset::from_elems(n..2 * n)
}

/// `X_3 = (X_2 ∪ {n-1}) ∖ {2n-1}`.
pub fn half_x3(n: usize) -> Subset {
    half_x2(n).with(n - 1).without(2 * n - 1)
}

fn uniform_minus(r: usize, n: usize, removed: &[Subset]) -> Result<Matroid> {
    let removed: FxHashSet<Subset> = removed.iter().copied().collect();
    Matroid::from_bases(n, k_subsets(n, r).filter(|b| !removed.contains(b)))
}

/// `R_2n`: `U_{n,2n}` without the two bases `X_1`, `X_2`.
pub fn construct_r(n: usize) -> Result<Matroid> {
    if 2 * n > MAX_GROUND {
        return Err(MatroidError::SizeOverflow(2 * n));
    }
    if n == 0 {
        return Ok(uniform(0, 0));
    }
    uniform_minus(n, 2 * n, &[half_x1(n), half_x2(n)])
}

/// `Q_2n`: `U_{n,2n}` without `X_1` and `X_3`; a matroid only from `n = 3` on.
pub fn construct_q(n: usize) -> Result<Matroid> {
    if n < 3 {
        return Err(MatroidError::QTooSmall(n));
    }
    if 2 * n > MAX_GROUND {
        return Err(MatroidError::SizeOverflow(2 * n));
    }
    uniform_minus(n, 2 * n, &[half_x1(n), half_x3(n)])
}

/// The triple `{2i, 2i+1, 2i+2}` in `Z_4n`.
pub fn loose_triple(n: usize, i: usize) -> Subset {
    let m = 4 * n;
    Subset::from_elems([(2 * i) % m, (2 * i + 1) % m, (2 * i + 2) % m])
}

/// Loose cycle on `{0, ..., 2n-1}`: triples `0..=n-2` closed by `{2n-2, 2n-1, 0}`.
pub fn family_f1(n: usize) -> Vec<Subset> {
    let mut f: Vec<Subset> = (0..n - 1).map(|i| loose_triple(n, i)).collect();
    f.push(Subset::from_elems([2 * n - 2, 2 * n - 1, 0]));
    f
}

/// Loose cycle on `{2n, ..., 4n-1}`.
pub fn family_f2(n: usize) -> Vec<Subset> {
    let mut f: Vec<Subset> = (n..2 * n - 1).map(|i| loose_triple(n, i)).collect();
    f.push(Subset::from_elems([4 * n - 2, 4 * n - 1, 2 * n]));
    f
}

/// Loose path: triples `0..=n-1`.
pub fn family_f3(n: usize) -> Vec<Subset> {
    (0..n).map(|i| loose_triple(n, i)).collect()
}

/// Loose path: triples `n..=2n-1`, the last wrapping to `0`.
pub fn family_f4(n: usize) -> Vec<Subset> {
    (n..2 * n).map(|i| loose_triple(n, i)).collect()
}

fn check_s_scale(n: usize) -> Result<()> {
    if n < 3 {
        return Err(MatroidError::STooSmall(n));
    }
    if 4 * n > MAX_GROUND {
        return Err(MatroidError::SizeOverflow(4 * n));
    }
    Ok(())
}

/// `S_4n`: `U_{3,4n}` without the two loose cycles.
pub fn construct_s(n: usize) -> Result<Matroid> {
    check_s_scale(n)?;
    let mut removed = family_f1(n);
    removed.extend(family_f2(n));
    uniform_minus(3, 4 * n, &removed)
}

/// `S'_4n`: `U_{3,4n}` without the two loose paths.
pub fn construct_s_prime(n: usize) -> Result<Matroid> {
    check_s_scale(n)?;
    let mut removed = family_f3(n);
    removed.extend(family_f4(n));
    uniform_minus(3, 4 * n, &removed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::binomial;

    fn s(v: &[usize]) -> Subset {
        Subset::from_elems(v.iter().copied())
    }

    #[test]
    fn basis_counts() {
        assert_eq!(construct_r(1).unwrap_err(), MatroidError::EmptyBases);
        for n in 2..=5 {
            assert_eq!(construct_r(n).unwrap().bases().len() as u64, binomial(2 * n, n) - 2);
        }
        for n in 3..=5 {
            assert_eq!(construct_q(n).unwrap().bases().len() as u64, binomial(2 * n, n) - 2);
        }
        assert_eq!(construct_s(3).unwrap().bases().len(), 214);
        assert_eq!(construct_s_prime(3).unwrap().bases().len(), 214);
    }

    #[test]
    fn too_small() {
        assert_eq!(construct_q(2).unwrap_err(), MatroidError::QTooSmall(2));
        assert_eq!(construct_s(2).unwrap_err(), MatroidError::STooSmall(2));
        assert_eq!(construct_s(9).unwrap_err(), MatroidError::SizeOverflow(36));
        // Q_4 would fail the exchange axiom: check by building it directly.
        assert!(uniform_minus(2, 4, &[half_x1(2), half_x3(2)]).is_err());
        // S_8 likewise.
        let mut fam = family_f1(2);
        fam.extend(family_f2(2));
        assert!(uniform_minus(3, 8, &fam).is_err());
    }

    #[test]
    fn families_for_three() {
        assert_eq!(family_f1(3), vec![s(&[0, 1, 2]), s(&[2, 3, 4]), s(&[4, 5, 0])]);
        assert_eq!(family_f2(3), vec![s(&[6, 7, 8]), s(&[8, 9, 10]), s(&[10, 11, 6])]);
        assert_eq!(family_f3(3), vec![s(&[0, 1, 2]), s(&[2, 3, 4]), s(&[4, 5, 6])]);
        assert_eq!(family_f4(3), vec![s(&[6, 7, 8]), s(&[8, 9, 10]), s(&[10, 11, 0])]);
    }

    #[test]
    fn halves() {
        assert_eq!(half_x1(3), s(&[0, 1, 2]));
        assert_eq!(half_x2(3), s(&[3, 4, 5]));
        assert_eq!(half_x3(3), s(&[2, 3, 4]));
    }

    #[test]
    fn removed_triples_are_circuits() {
        let m = construct_s(3).unwrap();
        for c in family_f1(3).into_iter().chain(family_f2(3)) {
            assert!(m.is_circuit(c));
        }
        let m = construct_s_prime(3).unwrap();
        for c in family_f3(3).into_iter().chain(family_f4(3)) {
            assert!(m.is_circuit(c));
        }
    }
}
