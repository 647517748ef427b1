use genexp::exponents::{exponents, Method};
use genexp::quasisym::{height_set, height_set_inverse, HeightSet};
use genexp::tableaux::{partitions, syt_enumerate};
use genexp::{LaurentPolynomial, Weight};
use proptest::prelude::*;

fn dominant_weight() -> impl Strategy<Value = Weight> {
    (1usize..=6).prop_flat_map(|n| {
        let shapes = partitions(n + 1);
        (0..shapes.len()).prop_map(move |k| Weight::from_partition(&shapes[k], n).unwrap())
    })
}

fn height_set_strategy() -> impl Strategy<Value = HeightSet> {
    (1usize..=12).prop_flat_map(|n| {
        proptest::collection::btree_set(1..=n, 0..=n)
            .prop_map(move |s| HeightSet::new(s, n).unwrap())
    })
}

proptest! {
    #[test]
    fn methods_agree(lam in dominant_weight()) {
        let reference = exponents(&lam, Method::Tableaux, 5).unwrap();
        for m in [Method::Weights, Method::Signed, Method::Quasiweights, Method::Charge] {
            prop_assert_eq!(&exponents(&lam, m, 5).unwrap(), &reference);
        }
        prop_assert!(reference.has_nonnegative_coefficients());
        let count = syt_enumerate(&lam.to_partition().unwrap()).len();
        prop_assert_eq!(reference.evaluate_at_one(), count.into());
    }

    #[test]
    fn height_sets_round_trip(set in height_set_strategy()) {
        let lam = height_set_inverse(&set);
        prop_assert_eq!(lam.height(), set.sum());
        prop_assert_eq!(height_set(&lam), set);
    }

    #[test]
    fn exponents_are_bounded_by_height(lam in dominant_weight()) {
        let e = exponents(&lam, Method::Charge, 5).unwrap();
        prop_assert!(e.max_degree().unwrap() <= lam.height());
        prop_assert!(e.min_degree().unwrap() >= 0);
    }
}

#[test]
fn adjoint_is_sum_of_first_powers() {
    let e = exponents(&Weight::theta(5), Method::Signed, 5).unwrap();
    assert_eq!(e, LaurentPolynomial::from_terms((1..=5).map(|k| (k, 1))));
}
