//! Agreement of the three exact routes on a grid of word lengths.

use num_rational::BigRational;
use serde::Serialize;

use crate::enumerate::cdf_row_by_enumeration;
use crate::measure::cdf_row_exact;
use crate::rational::format_rational;
use crate::toeplitz::cdf_row_via_toeplitz;
use crate::ProbModel;

/// Computes `F_N(n)` for `n = 0..=N`.
pub type RouteFn = fn(u32, &ProbModel) -> Vec<BigRational>;

#[derive(Clone, Copy)]
pub struct Routes {
    pub enumeration: RouteFn,
    pub exact: RouteFn,
    pub toeplitz: RouteFn,
}

fn exact_row(n_len: u32, model: &ProbModel) -> Vec<BigRational> {
    cdf_row_exact(n_len, model, 1).expect("single-threaded summation cannot fail")
}

impl Default for Routes {
    fn default() -> Self {
        Routes {
            enumeration: cdf_row_by_enumeration,
            exact: exact_row,
            toeplitz: cdf_row_via_toeplitz,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub probs: String,
    pub k: usize,
    pub n_len: u32,
    pub n: u32,
    pub enumeration: String,
    pub exact: String,
    pub toeplitz: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    AllEqual { comparisons: usize },
    Mismatch(Discrepancy),
}

/// Compares the three routes for every model, every `N ≤ max_len` and every
/// `n ≤ N`, stopping at the first disagreement.
pub fn crosscheck(models: &[ProbModel], max_len: u32, routes: &Routes) -> Outcome {
    let mut comparisons = 0;
    for model in models {
        for n_len in 0..=max_len {
            let a = (routes.enumeration)(n_len, model);
            let b = (routes.exact)(n_len, model);
            let c = (routes.toeplitz)(n_len, model);
            for n in 0..=n_len as usize {
                let (x, y, z) = (a.get(n), b.get(n), c.get(n));
                if x.is_none() || x != y || y != z {
                    let show = |v: Option<&BigRational>| v.map_or("missing".into(), format_rational);
                    return Outcome::Mismatch(Discrepancy {
                        probs: model.to_string(),
                        k: model.k(),
                        n_len,
                        n: n as u32,
                        enumeration: show(x),
                        exact: show(y),
                        toeplitz: show(z),
                    });
                }
                comparisons += 1;
            }
        }
    }
    Outcome::AllEqual { comparisons }
}

/// Models covering `k = 1, 2, 3` with and without ties.
pub fn default_models() -> Vec<ProbModel> {
    ["1", "5/7,2/7", "1/2,1/2", "1/2,5/14,1/7", "3/8,5/16,5/16", "1/3,1/3,1/3"]
        .iter()
        .map(|s| ProbModel::parse(s).expect("built-in models are valid"))
        .collect()
}
