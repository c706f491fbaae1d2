//! Fixtures shared by the criterion benchmarks.

use randword::ProbModel;

/// Table models spanning two and three letters, with and without ties.
pub fn bench_models() -> Vec<(&'static str, ProbModel)> {
    ["5/7,2/7", "1/2,5/14,1/7", "3/8,5/16,5/16"]
        .into_iter()
        .map(|s| (s, ProbModel::parse(s).expect("valid model")))
        .collect()
}
