use genus_tutte::base_graph::BaseGraph;
use genus_tutte::constructions::uniform;
use genus_tutte::covers::whitney_exponents;
use genus_tutte::iso::is_equivalent;
use genus_tutte::poly::VarLayout;
use genus_tutte::reconstruct::*;
use genus_tutte::subset::{k_subsets, Subset};
use genus_tutte::Matroid;

/// Every connected matroid on `n` elements with at most `max_bases` bases,
/// one per isomorphism class.
fn small_connected(n: usize, max_bases: usize) -> Vec<Matroid> {
    let mut found: Vec<Matroid> = Vec::new();
    for r in 1..n {
        let all: Vec<Subset> = k_subsets(n, r).collect();
        for mask in 1u32..1 << all.len() {
            if mask.count_ones() as usize > max_bases {
                continue;
            }
            let bases = (0..all.len()).filter(|&i| mask >> i & 1 == 1).map(|i| all[i]);
            let Ok(m) = Matroid::from_bases(n, bases) else { continue };
            if !m.is_connected() || found.iter().any(|f| genus_tutte::iso::is_isomorphic(f, &m).unwrap().is_some()) {
                continue;
            }
            found.push(m);
        }
    }
    found
}

#[test]
fn enumerated_matroids_round_trip() {
    let mut seen = 0;
    for n in 2..=5 {
        for m in small_connected(n, 6) {
            let g = m.bases().len();
            if g * n > 26 {
                continue;
            }
            let back = round_trip(&m).unwrap_or_else(|e| panic!("{m:?}: {e}"));
            assert!(is_equivalent(&back, &m).unwrap(), "{m:?}");
            seen += 1;
        }
    }
    // U12; U13 U23; U14 U24 U34 and the self-dual one with five bases; U15 U45.
    assert_eq!(seen, 9);
}

#[test]
fn monomial_list_json() {
    let list = MonomialList { g: 2, n: 2, monomials: monomial_stream(&uniform(1, 2), 2).unwrap().collect() };
    let back = MonomialList::from_json(&list.to_json()).unwrap();
    assert_eq!(back, list);
    let m = reconstruct(back.monomials, back.n, back.g).unwrap();
    assert!(is_equivalent(&m, &uniform(1, 2)).unwrap());
    assert!(MonomialList::from_json(r#"{"g":2,"n":2,"monomials":[{"exps":[0],"tuple_count":1}]}"#).is_err());
    assert!(MonomialList::from_json(r#"{"g":0,"n":2,"monomials":[]}"#).is_err());
}

#[test]
fn wrong_genus_is_reported() {
    let m = uniform(2, 3);
    let st: Vec<_> = monomial_stream(&m, 2).unwrap().collect();
    assert!(matches!(reconstruct(st, 3, 2), Err(ReconstructError::GenusMismatch { g: 2, bases: 3 })));
}

/// Tuples that truly have the witness shape are never rejected by the exponent checks.
#[test]
fn witness_checks_are_sound() {
    let m = Matroid::from_bases(4, [0b0011u32, 0b0101, 0b1001, 0b0110, 0b1010].map(Subset)).unwrap();
    let t = m.rank_table().unwrap();
    let rho = m.rank();
    let g = 4;
    let layout = VarLayout::new(g);
    for code in 0u64..1 << (4 * g) {
        let sets: Vec<u64> = (0..g).map(|i| code >> (4 * i) & 0xf).collect();
        let exps = whitney_exponents(&sets, |a| t.rank(a as u32) as usize, rho);
        let subs: Vec<Subset> = sets.iter().map(|&a| Subset(a as u32)).collect();
        let bases_ok =
            subs[1..].iter().all(|&b| m.is_basis(b)) && (1..g).all(|i| (i + 1..g).all(|j| subs[i] != subs[j]));
        let c = subs[0];
        let k = c.len();
        let truth = bases_ok && m.is_circuit(c) && k >= 3 && k < g && (1..=k).all(|i| (c - subs[i]).len() == 1);
        let shape = witness_shape(&exps, layout, rho);
        if truth {
            assert_eq!(shape, Some(k), "{subs:?}");
        }
        if shape.is_some() {
            assert!(bases_ok && m.rank_of(c) + 1 == c.len());
        }
    }
}

#[test]
fn labels_from_any_anchor_rebuild_the_bases() {
    for m in small_connected(4, 6).into_iter().chain(small_connected(5, 8)) {
        let bg = BaseGraph::new(&m);
        for b in 0..bg.bases().len() {
            for class in bg.pi_prime(b) {
                let out = match label_neighborhood(bg.graph(), b, &class.members, m.size()) {
                    Ok(out) => out,
                    Err(ReconstructError::AmbiguousPartition) => continue,
                    Err(e) => panic!("{e}"),
                };
                let labels = propagate_labels(out.labeled).unwrap();
                let rebuilt = Matroid::from_bases(m.size(), labels).unwrap();
                assert!(is_equivalent(&rebuilt, &m).unwrap());
            }
        }
    }
}
