//! Gauss–Legendre rules and tensor-product integration over boxes.

use rayon::prelude::*;

/// Nodes and weights of the `n`-point Gauss–Legendre rule on `[-1, 1]`.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Roots of `P_n` by Newton iteration from Tricomi's initial guesses.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut deriv = 0.0;
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                deriv = dp;
                let step = p / dp;
                x -= step;
                if step.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            if dp.is_finite() {
                deriv = dp;
            }
            let w = 2.0 / ((1.0 - x * x) * deriv * deriv);
            nodes[i] = x;
            nodes[n - 1 - i] = -x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Rule mapped affinely onto `[a, b]`.
    pub fn on_interval(&self, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        (
            self.nodes.iter().map(|x| mid + half * x).collect(),
            self.weights.iter().map(|w| half * w).collect(),
        )
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// `∫_{[a,b]^dim} f` with the tensor product of one rule.
///
/// The outermost axis is split across rayon workers; partial sums are added
/// in index order so the result is independent of scheduling.
pub fn tensor_integrate<F>(dim: usize, a: f64, b: f64, rule: &GaussLegendre, f: F) -> f64
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    assert!(dim >= 1);
    let (x, w) = rule.on_interval(a, b);
    let n = x.len();
    let partial: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut point = vec![0.0; dim];
            let mut idx = vec![0usize; dim];
            idx[0] = first;
            let mut sum = 0.0;
            loop {
                let mut weight = 1.0;
                for d in 0..dim {
                    point[d] = x[idx[d]];
                    weight *= w[idx[d]];
                }
                sum += weight * f(&point);
                // odometer over axes 1..dim
                let mut d = dim;
                loop {
                    d -= 1;
                    if d == 0 {
                        return sum;
                    }
                    idx[d] += 1;
                    if idx[d] < n {
                        break;
                    }
                    idx[d] = 0;
                }
            }
        })
        .collect();
    partial.iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrates_polynomials_exactly() {
        for n in 1..=12 {
            let rule = GaussLegendre::new(n);
            assert!((rule.weights.iter().sum::<f64>() - 2.0).abs() < 1e-13);
            for deg in 0..2 * n {
                let got: f64 = rule
                    .nodes
                    .iter()
                    .zip(&rule.weights)
                    .map(|(x, w)| w * x.powi(deg as i32))
                    .sum();
                let exact = if deg % 2 == 0 { 2.0 / (deg as f64 + 1.0) } else { 0.0 };
                assert!((got - exact).abs() < 1e-12, "n={n} deg={deg}");
            }
        }
    }

    #[test]
    fn large_rules_are_accurate() {
        let rule = GaussLegendre::new(512);
        assert!((rule.weights.iter().sum::<f64>() - 2.0).abs() < 1e-12);
        let (x, w) = rule.on_interval(-12.0, 12.0);
        let gauss: f64 = x.iter().zip(&w).map(|(x, w)| w * (-x * x / 2.0).exp()).sum();
        assert!((gauss - (2.0 * std::f64::consts::PI).sqrt()).abs() < 1e-13);
    }

    #[test]
    fn tensor_product_of_separable_function() {
        let rule = GaussLegendre::new(40);
        let one_d: f64 = {
            let (x, w) = rule.on_interval(-1.0, 2.0);
            x.iter().zip(&w).map(|(x, w)| w * x.exp()).sum()
        };
        let three_d = tensor_integrate(3, -1.0, 2.0, &rule, |p| p.iter().map(|x| x.exp()).product());
        assert!((three_d - one_d.powi(3)).abs() < 1e-10);
    }
}
