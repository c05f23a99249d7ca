use genus_tutte::codes::{vector_matroid, FieldMatrix};
use genus_tutte::constructions::{construct_q, construct_r, uniform};
use genus_tutte::tutte::{
    tutte1_deletion_contraction, tutte_g, uniform_tutte_formula, whitney_g, GenusJob, TutteError,
};
use genus_tutte::Matroid;
use proptest::prelude::*;

fn small_matroid() -> impl Strategy<Value = Matroid> {
    binary_matroid(6)
}

fn binary_matroid(max_n: usize) -> impl Strategy<Value = Matroid> {
    (1usize..=3, 2usize..=max_n).prop_flat_map(|(k, n)| {
        prop::collection::vec(prop::collection::vec(0i64..2, n), k)
            .prop_filter_map("zero", |rows| vector_matroid(&FieldMatrix::new(2, rows).ok()?).ok())
    })
}

#[test]
fn uniform_closed_form() {
    for n in 1..=6 {
        for r in 0..=n {
            assert_eq!(tutte_g(&uniform(r, n), 1).unwrap(), uniform_tutte_formula(r, n), "U({r},{n})");
        }
    }
}

#[test]
fn r6_q6_agree_at_genus_one_only() {
    let r = construct_r(3).unwrap();
    let q = construct_q(3).unwrap();
    assert_eq!(tutte_g(&r, 1).unwrap(), tutte_g(&q, 1).unwrap());
    assert_ne!(tutte_g(&r, 2).unwrap(), tutte_g(&q, 2).unwrap());
}

#[test]
fn budget_refuses_large_jobs() {
    let r = construct_r(3).unwrap();
    let job = GenusJob::new(&r, 3).unwrap().budget(1000);
    assert!(matches!(job.tutte_g(), Err(TutteError::BudgetExceeded { .. })));
}

#[test]
fn thread_count_does_not_change_results() {
    let q = construct_q(3).unwrap();
    let one = GenusJob::new(&q, 2).unwrap().threads(Some(1)).tutte_g().unwrap();
    let many = GenusJob::new(&q, 2).unwrap().threads(Some(4)).tutte_g().unwrap();
    assert_eq!(one, many);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn enumeration_matches_deletion_contraction(m in small_matroid()) {
        prop_assert_eq!(tutte_g(&m, 1).unwrap(), tutte1_deletion_contraction(&m).unwrap());
    }

    #[test]
    fn duality_swaps_variables(m in small_matroid()) {
        prop_assert_eq!(tutte_g(&m.dual(), 2).unwrap(), tutte_g(&m, 2).unwrap().swap_xy());
    }

    #[test]
    fn direct_sums_multiply(a in binary_matroid(4), b in binary_matroid(3)) {
        let sum = a.direct_sum(&b).unwrap();
        let lhs = tutte_g(&sum, 2).unwrap();
        let rhs = &tutte_g(&a, 2).unwrap() * &tutte_g(&b, 2).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tuple_mass_is_two_to_the_gn(m in small_matroid(), g in 1usize..=2) {
        let w = whitney_g(&m, g).unwrap();
        let total: i64 = w.evaluate_int(&vec![1; w.layout().count()]).try_into().unwrap();
        prop_assert_eq!(total, 1i64 << (g * m.size()));
    }
}
