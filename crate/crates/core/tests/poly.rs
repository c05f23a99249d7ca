use genus_tutte::poly::linear_rank;
use genus_tutte::{SparsePoly, VarLayout};
use num_bigint::BigInt;
use proptest::prelude::*;

fn layout() -> VarLayout {
    VarLayout::new(2)
}

fn poly() -> impl Strategy<Value = SparsePoly> {
    let l = layout();
    prop::collection::vec((prop::collection::vec(0u8..3, l.count()), -5i64..=5), 0..6).prop_map(move |terms| {
        let mut p = SparsePoly::zero(l);
        for (exps, c) in terms {
            p = &p + &SparsePoly::monomial(l, exps, c);
        }
        p
    })
}

#[test]
fn text_and_json_formats() {
    let l = VarLayout::new(1);
    let p = SparsePoly::parse_text("3 * x1^2 * y1 - 2 * y1 + 7", l).unwrap();
    assert_eq!(p.len(), 3);
    assert_eq!(SparsePoly::parse_text(&p.to_text(), l).unwrap(), p);
    assert_eq!(SparsePoly::from_json(&p.to_json()).unwrap(), p);
    assert!(SparsePoly::parse_text("3 * z9", l).is_err());
    assert!(SparsePoly::parse_text("x1 +", l).is_err());
    assert_eq!(SparsePoly::zero(l).to_text(), "0");
}

#[test]
fn genus_two_names_resolve() {
    let l = layout();
    for idx in 0..l.count() {
        assert_eq!(l.index_of_name(&l.name(idx)), Some(idx));
        assert_eq!(l.dual_index(l.dual_index(idx)), idx);
    }
    assert_eq!(l.count(), 8);
}

#[test]
fn rank_of_a_dependent_family() {
    let l = VarLayout::new(1);
    let x = SparsePoly::var(l, l.x(0));
    let y = SparsePoly::var(l, l.y(0));
    let s = &x + &y;
    assert_eq!(linear_rank(&[x.clone(), y, s, x]).unwrap(), 2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &SparsePoly::one(layout()), a.clone());
    }

    #[test]
    fn shift_is_a_ring_homomorphism(a in poly(), b in poly(), d in -2i64..=2) {
        prop_assert_eq!((&a * &b).shift_all(d), &a.shift_all(d) * &b.shift_all(d));
        prop_assert_eq!((&a + &b).shift_all(d), &a.shift_all(d) + &b.shift_all(d));
        prop_assert_eq!(a.shift_all(d).shift_all(-d), a);
    }

    #[test]
    fn evaluation_commutes_with_products(a in poly(), b in poly(), pt in prop::collection::vec(-3i64..=3, 8)) {
        prop_assert_eq!((&a * &b).evaluate_int(&pt), a.evaluate_int(&pt) * b.evaluate_int(&pt));
    }

    #[test]
    fn serialisation_round_trips(a in poly()) {
        prop_assert_eq!(SparsePoly::parse_text(&a.to_text(), layout()).unwrap(), a.clone());
        prop_assert_eq!(SparsePoly::from_json(&a.to_json()).unwrap(), a.clone());
        prop_assert_eq!(a.swap_xy().swap_xy(), a.clone());
        prop_assert_eq!(a.scale(&BigInt::from(3)).div_exact(&BigInt::from(3)), Some(a));
    }
}
