use genus_tutte::covers::*;
use proptest::prelude::*;

#[test]
fn explicit_small_covers_are_valid() {
    for n in (3..=8).chain([10, 11]) {
        let c = small_cycle_cover(n).unwrap();
        assert!(verify_cover(&c).is_valid(), "C_{n}");
    }
    assert!(small_cycle_cover(9).is_none());
}

#[test]
fn json_round_trip_and_rejection() {
    let c = cover_cycle(9).unwrap();
    assert_eq!(Cover::from_json(&c.to_json()).unwrap(), c);
    assert!(Cover::from_json(r#"{"host":"cycle","n":4,"family":[[0,9]]}"#).is_err());
    assert!(Cover::from_json(r#"{"host":"torus","n":4,"family":[]}"#).is_err());
}

#[test]
fn an_uncovered_edge_is_named() {
    let c = Cover::new(Host::Cycle, 4, vec![vec![0, 1], vec![0, 1], vec![2, 3]]);
    assert!(matches!(verify_cover(&c), Certificate::Uncovered(_)));
}

#[test]
fn exact_minimum_sits_between_the_bounds() {
    for n in 3..=8 {
        let exact = iota_exact(n, Host::Cycle).unwrap();
        assert!(exact >= pair_count_lower_bound(n), "C_{n}");
        assert!(exact <= small_cycle_cover(n).unwrap().len(), "C_{n}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructed_covers_are_valid_and_small(n in 3usize..200) {
        let c = cover_cycle(n).unwrap();
        prop_assert!(verify_cover(&c).is_valid());
        let root = (n as f64).sqrt().ceil() as usize;
        prop_assert!(c.len() <= 2 * root);
        prop_assert!(c.len() * (c.len() - 1) / 2 >= n);
    }

    #[test]
    fn symmetries_preserve_validity(n in 3usize..80, k in 0usize..80) {
        let c = cover_cycle(n).unwrap();
        prop_assert!(verify_cover(&rotate(&c, k)).is_valid());
        prop_assert!(verify_cover(&reflect(&c)).is_valid());
    }

    #[test]
    fn cycle_and_path_covers_convert(n in 3usize..80) {
        let c = cover_cycle(n).unwrap();
        let p = cycle_to_path(&c).unwrap();
        prop_assert!(verify_cover(&p).is_valid());
        let back = path_to_cycle(&p).unwrap();
        prop_assert!(verify_cover(&back).is_valid());
    }
}
