//! Self-normalized importance sampling of the limiting law on the hyperplane.
//!
//! A standard Gaussian vector projected orthogonally onto `Σ √p_i ξ_i = 0`
//! is the standard Gaussian of that hyperplane. Each draw is weighted by
//! `∏_α Δ_α(ξ)²`; sorting each tie-group in descending order maps the draw
//! into the ordered support without changing the (symmetric) weight.

use rand_distr::{Distribution, StandardNormal};

use super::LimitResult;
use crate::streams::{run_batched, substream};
use crate::{ProbModel, Result};

#[derive(Clone, Debug)]
pub struct McConfig {
    pub samples: usize,
    pub seed: u64,
    /// `0` = all cores. Does not affect the result.
    pub workers: usize,
}

#[derive(Clone, Copy, Default)]
struct Moments {
    w: f64,
    wf: f64,
    w2: f64,
    w2f: f64,
}

impl Moments {
    fn merge(self, o: Moments) -> Moments {
        Moments {
            w: self.w + o.w,
            wf: self.wf + o.wf,
            w2: self.w2 + o.w2,
            w2f: self.w2f + o.w2f,
        }
    }
}

/// Estimate of `Prob(ξ_1 ≤ s)` with its delta-method standard error.
pub fn limit_cdf_mc(model: &ProbModel, s: f64, cfg: &McConfig) -> Result<LimitResult> {
    let k = model.k();
    let root_p: Vec<f64> = model.probs_f64().iter().map(|p| p.sqrt()).collect();
    let norm2: f64 = root_p.iter().map(|u| u * u).sum();
    let groups: Vec<(usize, usize)> = model
        .groups()
        .iter()
        .map(|g| (g.first - 1, g.size))
        .collect();

    let batches = run_batched(cfg.samples, cfg.workers, |batch, len| {
        let mut rng = substream(cfg.seed, batch);
        let mut xi = vec![0.0f64; k];
        let mut acc = Moments::default();
        for _ in 0..len {
            for x in xi.iter_mut() {
                *x = StandardNormal.sample(&mut rng);
            }
            let along: f64 = xi.iter().zip(&root_p).map(|(x, u)| x * u).sum::<f64>() / norm2;
            for (x, u) in xi.iter_mut().zip(&root_p) {
                *x -= along * u;
            }
            let mut weight = 1.0;
            for &(start, size) in &groups {
                let block = &mut xi[start..start + size];
                block.sort_by(|a, b| b.total_cmp(a));
                for i in 0..size {
                    for j in i + 1..size {
                        let d = block[i] - block[j];
                        weight *= d * d;
                    }
                }
            }
            let hit = if xi[0] <= s { 1.0 } else { 0.0 };
            acc.w += weight;
            acc.wf += weight * hit;
            acc.w2 += weight * weight;
            acc.w2f += weight * weight * hit;
        }
        acc
    })?;
    let m = batches.into_iter().fold(Moments::default(), Moments::merge);
    if m.w <= 0.0 {
        return Ok(LimitResult {
            value: 0.0,
            error_estimate: f64::INFINITY,
        });
    }
    let mean = m.wf / m.w;
    // Σ w²(f − μ)² with f ∈ {0, 1}
    let spread = m.w2f * (1.0 - 2.0 * mean) + mean * mean * m.w2;
    Ok(LimitResult {
        value: mean.clamp(0.0, 1.0),
        error_estimate: spread.max(0.0).sqrt() / m.w,
    })
}
