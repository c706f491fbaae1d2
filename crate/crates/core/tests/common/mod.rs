//! Independent oracles for the integration tests.
#![allow(dead_code)]

use statrs::function::erf::erf;
use statrs::function::gamma::gamma_lr;

/// Standard normal CDF.
pub fn phi(x: f64) -> f64 {
    0.5 * (1.0 + erf(x / std::f64::consts::SQRT_2))
}

/// Trapezoid rule on `[-half_width, half_width]^dim` with step `h`; spectrally
/// accurate for smooth integrands with Gaussian decay.
pub fn trapezoid_box<F: Fn(&[f64]) -> f64>(dim: usize, half_width: f64, h: f64, f: F) -> f64 {
    let n = (2.0 * half_width / h).round() as usize + 1;
    let grid: Vec<f64> = (0..n).map(|i| -half_width + i as f64 * h).collect();
    let end_weight = |i: usize| if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
    let mut idx = vec![0usize; dim];
    let mut point = vec![0.0; dim];
    let mut total = 0.0;
    loop {
        let mut w = 1.0;
        for d in 0..dim {
            point[d] = grid[idx[d]];
            w *= end_weight(idx[d]);
        }
        total += w * f(&point);
        let mut d = 0;
        loop {
            if d == dim {
                return total * h.powi(dim as i32);
            }
            idx[d] += 1;
            if idx[d] < n {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

/// Defining integrand of the reduced limit density.
pub fn reduced_integrand(xi: &[f64], k1: usize, p1: f64) -> f64 {
    let c = p1 / (1.0 - k1 as f64 * p1);
    let mut v = 1.0;
    for i in 0..xi.len() {
        for j in i + 1..xi.len() {
            v *= xi[i] - xi[j];
        }
    }
    let sum: f64 = xi.iter().sum();
    let sq: f64 = xi.iter().map(|x| x * x).sum();
    v * v * (-0.5 * (sq + c * sum * sum)).exp()
}

/// Homogeneous `k = 2`: on `ξ_2 = −ξ_1` the ordered top eigenvalue `a ≥ 0`
/// has density `∝ a² e^{−a²}`, i.e. `a²` is Gamma(3/2).
pub fn homogeneous_two_letter_cdf(s: f64) -> f64 {
    if s <= 0.0 {
        0.0
    } else {
        gamma_lr(1.5, s * s)
    }
}

/// Homogeneous `k = 3`: `Prob(max ξ_i ≤ s)` for density `∝ Δ(ξ)² e^{−|ξ|²/2}`
/// on `ξ_1 + ξ_2 + ξ_3 = 0`, parametrized by `(ξ_1, ξ_2)`. The event is the
/// triangle `ξ_1 ≤ s, ξ_2 ≤ s, ξ_1 + ξ_2 ≥ −s`; integrated with a composite
/// midpoint rule in each direction (inner limits follow the triangle edge).
pub fn homogeneous_three_letter_cdf(s: f64) -> f64 {
    fn density(a: f64, b: f64) -> f64 {
        let c = -a - b;
        let v = (a - b) * (a - c) * (b - c);
        v * v * (-0.5 * (a * a + b * b + c * c)).exp()
    }
    fn triangle(s: f64, steps: usize) -> f64 {
        if s <= 0.0 {
            return 0.0;
        }
        // Simpson in both directions over a ∈ [−2s, s], b ∈ [−s−a, s]
        let simpson = |lo: f64, hi: f64, f: &dyn Fn(f64) -> f64| {
            let h = (hi - lo) / steps as f64;
            let mut acc = f(lo) + f(hi);
            for i in 1..steps {
                let w = if i % 2 == 1 { 4.0 } else { 2.0 };
                acc += w * f(lo + i as f64 * h);
            }
            acc * h / 3.0
        };
        simpson(-2.0 * s, s, &|a| simpson(-s - a, s, &|b| density(a, b)))
    }
    let total = triangle(14.0, 2000);
    triangle(s.min(14.0), 2000) / total
}
