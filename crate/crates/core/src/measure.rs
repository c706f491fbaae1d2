//! Exact finite-`N` distribution of `ℓ_N` by summing the RSK push-forward
//! measure `Prob(λ) = s_λ(p)·f^λ` over partitions.

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::schur::{f_lambda, JacobiTrudi};
use crate::streams::resolve_workers;
use crate::{partitions_of, Error, Partition, ProbModel, Result};

/// `Prob(λ) = s_λ(p)·f^λ`.
pub fn prob_partition(lambda: &Partition, model: &ProbModel) -> BigRational {
    let jt = JacobiTrudi::new(model, lambda.size() as usize + lambda.len());
    weight(&jt, lambda)
}

fn weight(jt: &JacobiTrudi, lambda: &Partition) -> BigRational {
    jt.eval(lambda) * BigRational::from_integer(f_lambda(lambda).into())
}

/// `Prob(ℓ_N = m)` for `m = 0..=N`, summed over `λ ⊢ N` with at most `k` parts
/// and bucketed by `λ_1`.
///
/// `workers = 0` uses every core. Rational addition is exact, so the result
/// does not depend on the worker count.
pub fn length_pmf_exact(n_len: u32, model: &ProbModel, workers: usize) -> Result<Vec<BigRational>> {
    let jt = JacobiTrudi::new(model, n_len as usize + model.k());
    let parts: Vec<Partition> = partitions_of(n_len, model.k()).collect();
    let bucket = |acc: Vec<BigRational>, lambda: &Partition| {
        let mut acc = acc;
        acc[lambda.first_part() as usize] += weight(&jt, lambda);
        acc
    };
    let zeros = || vec![BigRational::zero(); n_len as usize + 1];
    let workers = resolve_workers(workers);
    if workers == 1 {
        return Ok(parts.iter().fold(zeros(), bucket));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(pool.install(|| {
        parts.par_iter().fold(zeros, bucket).reduce(zeros, |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        })
    }))
}

/// `F_N(n)` for every `n = 0..=N`.
pub fn cdf_row_exact(n_len: u32, model: &ProbModel, workers: usize) -> Result<Vec<BigRational>> {
    let pmf = length_pmf_exact(n_len, model, workers)?;
    Ok(accumulate(&pmf))
}

/// `F_N(n) = Σ_{λ⊢N, λ_1≤n} s_λ(p) f^λ`.
pub fn cdf_exact(n: u32, n_len: u32, model: &ProbModel) -> BigRational {
    if n >= n_len {
        return BigRational::one();
    }
    let jt = JacobiTrudi::new(model, n_len as usize + model.k());
    partitions_of(n_len, model.k())
        .filter(|l| l.first_part() <= n)
        .map(|l| weight(&jt, &l))
        .sum()
}

/// Exact `E(ℓ_N)` from the distribution.
pub fn mean_exact(n_len: u32, model: &ProbModel, workers: usize) -> Result<BigRational> {
    let pmf = length_pmf_exact(n_len, model, workers)?;
    Ok(pmf
        .iter()
        .enumerate()
        .map(|(m, p)| p * BigRational::from_integer((m as u64).into()))
        .sum())
}

pub(crate) fn accumulate(pmf: &[BigRational]) -> Vec<BigRational> {
    let mut acc = BigRational::zero();
    pmf.iter()
        .map(|p| {
            acc += p;
            acc.clone()
        })
        .collect()
}
