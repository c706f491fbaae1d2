//! Large-`N` behaviour of `ℓ_N`: the mean and variance formulas and the
//! limiting distribution of `(ℓ_N − N p_1)/√(N p_1)`.
//!
//! The limit law is the law of the largest top-group eigenvalue `ξ_1` in a
//! direct sum of independent GUEs (one per tie-group, of size `k_α`),
//! conditioned on the hyperplane `Σ √p_i ξ_i = 0`. Two evaluators are
//! provided: [`limit_cdf_reduced`] integrates the `k_1`-dimensional reduced
//! density by tensor Gauss–Legendre quadrature, [`limit_cdf_mc`] samples the
//! hyperplane directly with Vandermonde-squared importance weights.

mod mc;
pub mod quadrature;
mod reduced;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::measure::cdf_exact;
use crate::rational::{format_rational, to_f64};
use crate::{Error, ProbModel, Result};

pub use mc::{limit_cdf_mc, McConfig};
pub use reduced::{limit_cdf_reduced, QuadratureConfig};

/// Whether the mean formula is a theorem for this model or an extrapolation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MeanRegime {
    /// All `p_i` distinct.
    Proven,
    /// `p_1 > p_2` but ties further down.
    Conjectured,
}

impl MeanRegime {
    pub fn as_str(self) -> &'static str {
        match self {
            MeanRegime::Proven => "proven",
            MeanRegime::Conjectured => "conjectured regime",
        }
    }
}

fn require_strict_leader(model: &ProbModel) -> Result<()> {
    if model.has_strict_leader() {
        Ok(())
    } else {
        Err(Error::DegenerateLeader(format_rational(model.prob(1))))
    }
}

pub fn mean_regime(model: &ProbModel) -> Result<MeanRegime> {
    require_strict_leader(model)?;
    Ok(if model.all_distinct() {
        MeanRegime::Proven
    } else {
        MeanRegime::Conjectured
    })
}

/// `E(ℓ_N) ≈ N p_1 + Σ_{j>1} p_j / (p_1 − p_j)`, exact rational.
pub fn mean_asymptotic(model: &ProbModel, n_len: u64) -> Result<BigRational> {
    require_strict_leader(model)?;
    let p1 = model.prob(1);
    let lead = p1 * BigRational::from_integer(BigInt::from(n_len));
    let correction: BigRational = model.probs()[1..]
        .iter()
        .map(|pj| pj / (p1 - pj))
        .sum();
    Ok(lead + correction)
}

/// `Var(ℓ_N) ≈ N p_1 (1 − p_1)`, exact rational.
pub fn variance_asymptotic(model: &ProbModel, n_len: u64) -> Result<BigRational> {
    require_strict_leader(model)?;
    let p1 = model.prob(1);
    Ok(BigRational::from_integer(BigInt::from(n_len)) * p1 * (BigRational::one() - p1))
}

/// `c_{k_1,p_1} = ∫_{R^{k_1}} Δ(ξ)² exp(−½[Σ ξ_i² + p_1/(1−k_1 p_1) (Σ ξ_i)²]) dξ`
/// in closed form: `(2π)^{k_1/2} · 1!·2!⋯k_1! · √(1 − k_1 p_1)`.
///
/// Splitting `ξ` into its component along `(1,…,1)/√k_1` and the orthogonal
/// hyperplane gives the GUE integral `(2π)^{(k_1−1)/2} ∏ j!` times the
/// Gaussian `√(2π(1 − k_1 p_1))`.
pub fn limit_const(k1: usize, p1: &BigRational) -> Result<f64> {
    if k1 == 0 {
        return Err(Error::InvalidArgument("k_1 must be positive".into()));
    }
    let mass = BigRational::from_integer(BigInt::from(k1)) * p1;
    if mass >= BigRational::one() || *p1 <= BigRational::zero() {
        return Err(Error::Degenerate(format_rational(&mass)));
    }
    let superfactorial: f64 = (1..=k1)
        .map(|j| (1..=j).map(|i| i as f64).product::<f64>())
        .product();
    let tau = 2.0 * std::f64::consts::PI;
    Ok(tau.powf(k1 as f64 / 2.0) * superfactorial * (1.0 - to_f64(&mass)).sqrt())
}

#[derive(Clone, Debug)]
pub enum LimitMethod {
    Reduced(QuadratureConfig),
    MonteCarlo(McConfig),
}

/// Request for `lim Prob((ℓ_N − N p_1)/√(N p_1) ≤ s)`.
#[derive(Clone, Debug)]
pub struct LimitSpec {
    pub model: ProbModel,
    pub s: f64,
    pub method: LimitMethod,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LimitResult {
    pub value: f64,
    /// Quadrature refinement delta, or Monte Carlo standard error.
    pub error_estimate: f64,
}

pub fn limit_cdf(spec: &LimitSpec) -> Result<LimitResult> {
    if spec.s.is_nan() {
        return Err(Error::InvalidArgument("s is NaN".into()));
    }
    match &spec.method {
        LimitMethod::Reduced(cfg) => limit_cdf_reduced(&spec.model, spec.s, cfg),
        LimitMethod::MonteCarlo(cfg) => limit_cdf_mc(&spec.model, spec.s, cfg),
    }
}

/// Threshold `n = ⌈N p_1 + s √(N p_1)⌉` matching scaled level `s`.
pub fn threshold_for(model: &ProbModel, n_len: u32, s: f64) -> i64 {
    let center = n_len as f64 * to_f64(model.prob(1));
    (center + s * center.sqrt()).ceil() as i64
}

/// `(F_N(n) at n = ⌈N p_1 + s√(N p_1)⌉, limiting CDF at s)`.
///
/// Uses the reduced quadrature where it applies and a fixed-seed Monte Carlo
/// estimate (200 000 samples, seed 0) otherwise.
pub fn finite_n_limit_check(model: &ProbModel, n_len: u32, s: f64) -> Result<(f64, f64)> {
    let n = threshold_for(model, n_len, s);
    let exact = if n < 0 {
        0.0
    } else {
        to_f64(&cdf_exact(n.min(n_len as i64) as u32, n_len, model))
    };
    let limit = if model.is_homogeneous() {
        let cfg = McConfig {
            samples: 200_000,
            seed: 0,
            workers: 0,
        };
        limit_cdf_mc(model, s, &cfg)?
    } else {
        limit_cdf_reduced(model, s, &QuadratureConfig::default())?
    };
    Ok((exact, limit.value))
}
