//! Published simulation table: parameters, simulated means and formula values.

use crate::{ProbModel, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Table1Row {
    pub probs: &'static str,
    pub n_len: u32,
    /// Sample size `N_S` used for the published mean.
    pub samples: usize,
    /// Published simulated mean of `ℓ_N`.
    pub sim_mean: f64,
    /// Published value of the asymptotic mean formula, as printed (2 dp).
    pub formula: &'static str,
}

impl Table1Row {
    pub fn model(&self) -> Result<ProbModel> {
        ProbModel::parse(self.probs)
    }

    pub fn k(&self) -> usize {
        self.probs.split(',').count()
    }
}

const fn row(probs: &'static str, n_len: u32, samples: usize, sim_mean: f64, formula: &'static str) -> Table1Row {
    Table1Row {
        probs,
        n_len,
        samples,
        sim_mean,
        formula,
    }
}

pub const TABLE1: [Table1Row; 20] = [
    row("5/7,2/7", 50, 20_000, 36.37, "36.38"),
    row("5/7,2/7", 100, 20_000, 72.12, "72.10"),
    row("5/7,2/7", 500, 20_000, 357.73, "357.81"),
    row("6/11,5/11", 50, 20_000, 30.54, "32.27"),
    row("6/11,5/11", 100, 20_000, 58.52, "59.55"),
    row("6/11,5/11", 200, 20_000, 113.71, "114.09"),
    row("6/11,5/11", 400, 20_000, 223.16, "223.18"),
    row("1/2,5/14,1/7", 50, 10_000, 27.53, "27.90"),
    row("1/2,5/14,1/7", 100, 10_000, 52.79, "52.90"),
    row("1/2,5/14,1/7", 500, 10_000, 252.80, "252.90"),
    row("1/2,5/14,1/7", 1000, 10_000, 502.78, "502.90"),
    row("3/8,1/3,7/24", 50, 10_000, 23.96, "30.25"),
    row("3/8,1/3,7/24", 100, 10_000, 44.33, "49.00"),
    row("3/8,1/3,7/24", 500, 10_000, 197.65, "199.00"),
    row("3/8,1/3,7/24", 1000, 2_000, 386.08, "386.50"),
    row("3/8,5/16,5/16", 50, 10_000, 23.92, "28.75"),
    row("3/8,5/16,5/16", 100, 10_000, 44.16, "47.50"),
    row("3/8,5/16,5/16", 200, 10_000, 83.15, "85.00"),
    row("3/8,5/16,5/16", 400, 10_000, 159.30, "160.00"),
    row("3/8,5/16,5/16", 800, 10_000, 310.08, "310.00"),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_row_is_a_valid_model() {
        for r in TABLE1 {
            let m = r.model().unwrap();
            assert_eq!(m.k(), r.k());
            assert!(m.has_strict_leader());
        }
    }
}
