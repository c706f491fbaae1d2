//! Brute-force route: visit all `k^N` words and weight each by `∏ p_{α_i}`.
//!
//! Exponential in `N`; intended for small grids and as an oracle.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::measure::accumulate;
use crate::word::lwis_of_letters;
use crate::{rsk_shape, Partition, ProbModel, Word};

/// Calls `visit(word, weight)` for every word of length `n_len`.
pub fn for_each_word<F>(n_len: usize, model: &ProbModel, mut visit: F)
where
    F: FnMut(&[u16], &BigRational),
{
    let k = model.k();
    // weight depends only on letter counts; cache p_i^c
    let powers: Vec<Vec<BigRational>> = model
        .probs()
        .iter()
        .map(|p| (0..=n_len as u32).map(|c| Pow::pow(p, c)).collect())
        .collect();
    let mut letters = vec![1u16; n_len];
    let mut counts = vec![0usize; k];
    loop {
        counts.iter_mut().for_each(|c| *c = 0);
        for &a in &letters {
            counts[a as usize - 1] += 1;
        }
        let weight = counts
            .iter()
            .enumerate()
            .fold(BigRational::one(), |acc, (i, &c)| acc * &powers[i][c]);
        visit(&letters, &weight);

        // odometer increment
        let mut pos = n_len;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if (letters[pos] as usize) < k {
                letters[pos] += 1;
                break;
            }
            letters[pos] = 1;
        }
    }
}

/// `Prob(ℓ_N = m)`, `m = 0..=N`.
pub fn length_pmf_by_enumeration(n_len: u32, model: &ProbModel) -> Vec<BigRational> {
    let mut pmf = vec![BigRational::zero(); n_len as usize + 1];
    for_each_word(n_len as usize, model, |w, weight| {
        pmf[lwis_of_letters(w, model.k())] += weight;
    });
    pmf
}

/// `F_N(n)` for every `n = 0..=N`.
pub fn cdf_row_by_enumeration(n_len: u32, model: &ProbModel) -> Vec<BigRational> {
    accumulate(&length_pmf_by_enumeration(n_len, model))
}

pub fn cdf_by_enumeration(n: u32, n_len: u32, model: &ProbModel) -> BigRational {
    let row = cdf_row_by_enumeration(n_len, model);
    row[(n as usize).min(n_len as usize)].clone()
}

/// Probability of each RSK shape, accumulated word by word.
pub fn shape_distribution_by_enumeration(
    n_len: u32,
    model: &ProbModel,
) -> BTreeMap<Partition, BigRational> {
    let mut out: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for_each_word(n_len as usize, model, |w, weight| {
        let word = Word::new(w.to_vec(), model.k()).expect("odometer stays in alphabet");
        *out.entry(rsk_shape(&word)).or_insert_with(BigRational::zero) += weight;
    });
    out
}
