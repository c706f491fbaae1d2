//! Reduced `k_1`-dimensional quadrature for the limiting CDF.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::quadrature::{tensor_integrate, GaussLegendre};
use super::{limit_const, LimitResult};
use crate::rational::to_f64;
use crate::{Error, ProbModel, Result};

/// Tensor Gauss–Legendre on `[−lower_cut, s]^{k_1}`, doubling the number of
/// nodes per axis until two successive estimates differ by less than `tol`.
#[derive(Clone, Debug)]
pub struct QuadratureConfig {
    /// Truncation point `L`; the integrand's mass below `−L` is negligible.
    pub lower_cut: f64,
    pub start_nodes: usize,
    /// Upper limit on `nodes^{k_1}` evaluations per pass.
    pub max_evaluations: usize,
    pub tol: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            lower_cut: 12.0,
            start_nodes: 16,
            max_evaluations: 1 << 24,
            tol: 1e-9,
        }
    }
}

/// `(1/c_{k_1,p_1}) ∫_{(−∞,s]^{k_1}} Δ(ξ)² exp(−½[Σ ξ_i² + p_1/(1−k_1p_1)(Σ ξ_i)²]) dξ`.
///
/// The ordering of the top-group eigenvalues is absorbed by symmetry: since
/// `ξ_1` is their maximum, `ξ_1 ≤ s` is the box `ξ_i ≤ s` for all `i ∈ A_1`.
/// Upper limits above `lower_cut` are clamped to it.
pub fn limit_cdf_reduced(model: &ProbModel, s: f64, cfg: &QuadratureConfig) -> Result<LimitResult> {
    if model.is_homogeneous() {
        return Err(Error::UnsupportedModel);
    }
    if s.is_nan() {
        return Err(Error::InvalidArgument("s is NaN".into()));
    }
    let top = model.top_group();
    let k1 = top.size;
    let norm = limit_const(k1, &top.prob)?;
    let mass = BigRational::from_integer(BigInt::from(k1)) * &top.prob;
    let coupling = to_f64(&(&top.prob / (BigRational::one() - mass)));

    let lower = -cfg.lower_cut;
    let upper = s.min(cfg.lower_cut);
    if upper <= lower {
        return Ok(LimitResult {
            value: 0.0,
            error_estimate: 0.0,
        });
    }

    let integrand = |xi: &[f64]| {
        let mut vandermonde = 1.0;
        for i in 0..xi.len() {
            for j in i + 1..xi.len() {
                vandermonde *= xi[i] - xi[j];
            }
        }
        let sum: f64 = xi.iter().sum();
        let sq: f64 = xi.iter().map(|x| x * x).sum();
        vandermonde * vandermonde * (-0.5 * (sq + coupling * sum * sum)).exp()
    };
    let estimate = |nodes: usize| {
        tensor_integrate(k1, lower, upper, &GaussLegendre::new(nodes), integrand) / norm
    };

    let max_nodes = max_nodes_for(k1, cfg.max_evaluations).max(cfg.start_nodes);
    let mut nodes = cfg.start_nodes;
    let mut previous = estimate(nodes);
    let mut delta = f64::INFINITY;
    while nodes * 2 <= max_nodes {
        nodes *= 2;
        let current = estimate(nodes);
        delta = (current - previous).abs();
        previous = current;
        if delta < cfg.tol {
            break;
        }
    }
    Ok(LimitResult {
        value: previous.clamp(0.0, 1.0),
        error_estimate: delta,
    })
}

fn max_nodes_for(dim: usize, budget: usize) -> usize {
    let mut n = 1usize;
    while (n * 2).checked_pow(dim as u32).is_some_and(|e| e <= budget) {
        n *= 2;
    }
    n
}
