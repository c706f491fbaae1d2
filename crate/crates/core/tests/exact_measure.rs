mod common;

use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use randword::enumerate::cdf_row_by_enumeration;
use randword::measure::{cdf_exact, cdf_row_exact, prob_partition};
use randword::schur::{schur_bialternant, schur_jacobi_trudi};
use randword::{partitions_of, BigInt, Partition, ProbModel};

#[test]
fn normalization_up_to_25_letters() {
    for probs in ["1", "5/7,2/7", "1/2,5/14,1/7", "3/8,5/16,5/16", "1/4,1/4,1/4,1/4", "2/5,1/5,1/5,1/5"] {
        let model = ProbModel::parse(probs).unwrap();
        for n_len in [0u32, 1, 2, 5, 11, 25] {
            let total: BigRational = partitions_of(n_len, model.k()).map(|l| prob_partition(&l, &model)).sum();
            assert!(total.is_one(), "{probs} N={n_len}");
        }
    }
}

#[test]
fn exact_cdf_matches_word_enumeration() {
    for probs in ["1", "5/7,2/7", "1/2,1/2", "1/2,5/14,1/7", "3/8,5/16,5/16", "1/3,1/3,1/3"] {
        let model = ProbModel::parse(probs).unwrap();
        for n_len in 0..=8u32 {
            assert_eq!(cdf_row_exact(n_len, &model, 1).unwrap(), cdf_row_by_enumeration(n_len, &model), "{probs} N={n_len}");
        }
    }
}

#[test]
fn cdf_is_monotone_and_starts_at_zero() {
    let model = ProbModel::parse("3/8,1/3,7/24").unwrap();
    for n_len in 1..=20u32 {
        let row = cdf_row_exact(n_len, &model, 1).unwrap();
        assert!(row[0].is_zero());
        assert!(row.windows(2).all(|w| w[0] <= w[1]));
        assert!(row[n_len as usize].is_one());
        assert_eq!(cdf_exact(n_len + 3, n_len, &model), BigRational::one());
    }
}

#[test]
fn f3_two_letters_matches_all_eight_words() {
    let model = ProbModel::parse("5/7,2/7").unwrap();
    // ℓ_3 = 3 exactly for 111, 112, 122, 222
    let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
    assert_eq!(cdf_exact(2, 3, &model), r(1, 1) - r(125 + 50 + 20 + 8, 343));
}

fn arb_model() -> impl Strategy<Value = ProbModel> {
    // integer weights with deliberate collisions, normalized exactly
    (1usize..=5)
        .prop_flat_map(|k| prop::collection::vec(1i64..=4, k))
        .prop_map(|w| {
            let total: i64 = w.iter().sum();
            let probs: Vec<BigRational> = w.iter().map(|&x| BigRational::new(x.into(), total.into())).collect();
            ProbModel::new(&probs).unwrap()
        })
}

fn arb_pair() -> impl Strategy<Value = (Partition, ProbModel)> {
    arb_model().prop_flat_map(|m| {
        let k = m.k();
        (0u32..=12).prop_flat_map(move |n| {
            let all: Vec<Partition> = partitions_of(n, k).collect();
            let m = m.clone();
            (0..all.len()).prop_map(move |i| (all[i].clone(), m.clone()))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]
    #[test]
    fn schur_evaluators_agree((lambda, model) in arb_pair()) {
        let jt = schur_jacobi_trudi(&lambda, &model).value;
        let bi = schur_bialternant(&lambda, &model).value;
        prop_assert!(jt >= BigRational::zero());
        prop_assert_eq!(jt, bi);
    }
}

#[test]
fn schur_vanishes_beyond_k_parts() {
    let model = ProbModel::parse("1/2,1/2").unwrap();
    let lambda = Partition::new(vec![1, 1, 1]).unwrap();
    assert!(schur_jacobi_trudi(&lambda, &model).value.is_zero());
    assert!(schur_bialternant(&lambda, &model).value.is_zero());
}
