//! Monte Carlo simulation of `ℓ_N` over random words.

use serde::Serialize;

use crate::streams::{run_batched, substream};
use crate::word::{lwis_of_letters, LetterSampler};
use crate::{ProbModel, Result};

#[derive(Clone, Debug)]
pub struct SimConfig {
    /// Word length `N`.
    pub n_len: usize,
    /// Number of sampled words `N_S`.
    pub samples: usize,
    pub seed: u64,
    /// `0` = all cores. Does not affect the result.
    pub workers: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimSummary {
    pub samples: usize,
    pub mean: f64,
    /// Unbiased sample variance.
    pub variance: f64,
    /// Standard error of the mean, `√(variance / samples)`.
    pub std_error: f64,
    pub min: u64,
    pub max: u64,
}

#[derive(Clone, Copy)]
struct Tally {
    sum: u128,
    sum_sq: u128,
    min: u64,
    max: u64,
}

/// Samples `N_S` words of length `N` and summarizes their `ℓ_N`.
pub fn simulate_lwis(model: &ProbModel, cfg: &SimConfig) -> Result<SimSummary> {
    let sampler = LetterSampler::new(model);
    let k = model.k();
    let tallies = run_batched(cfg.samples, cfg.workers, |batch, len| {
        let mut rng = substream(cfg.seed, batch);
        let mut letters = vec![0u16; cfg.n_len];
        let mut t = Tally {
            sum: 0,
            sum_sq: 0,
            min: u64::MAX,
            max: 0,
        };
        for _ in 0..len {
            sampler.fill(&mut rng, &mut letters);
            let l = lwis_of_letters(&letters, k) as u64;
            t.sum += l as u128;
            t.sum_sq += (l as u128) * (l as u128);
            t.min = t.min.min(l);
            t.max = t.max.max(l);
        }
        t
    })?;
    let total = tallies.into_iter().fold(
        Tally {
            sum: 0,
            sum_sq: 0,
            min: u64::MAX,
            max: 0,
        },
        |a, b| Tally {
            sum: a.sum + b.sum,
            sum_sq: a.sum_sq + b.sum_sq,
            min: a.min.min(b.min),
            max: a.max.max(b.max),
        },
    );
    let n = cfg.samples as f64;
    let mean = total.sum as f64 / n;
    let variance = if cfg.samples > 1 {
        // exact integer numerator: n·Σℓ² − (Σℓ)²
        let numer = cfg.samples as u128 * total.sum_sq - total.sum * total.sum;
        numer as f64 / (n * (n - 1.0))
    } else {
        0.0
    };
    Ok(SimSummary {
        samples: cfg.samples,
        mean,
        variance,
        std_error: (variance / n).sqrt(),
        min: if cfg.samples == 0 { 0 } else { total.min },
        max: total.max,
    })
}
