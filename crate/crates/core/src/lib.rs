//! Exact and asymptotic distribution of the length of the longest weakly
//! increasing subsequence of inhomogeneous random words.
//!
//! The finite-`N` distribution `F_N(n) = Prob(ℓ_N ≤ n)` is available by three
//! independent exact routes:
//!
//! * [`enumerate`]: brute force over all `k^N` words,
//! * [`measure`]: summation of `s_λ(p)·f^λ` over partitions (RSK push-forward),
//! * [`toeplitz`]: the `t^N` coefficient of a Toeplitz determinant whose entries
//!   are truncated power series.
//!
//! [`asymptotics`] evaluates the large-`N` mean and variance and the limiting
//! distribution, either by a reduced `k₁`-dimensional quadrature or by
//! importance sampling on the constraint hyperplane.

pub mod asymptotics;
pub mod crosscheck;
pub mod enumerate;
mod error;
pub mod measure;
pub mod model;
pub mod partition;
pub mod rational;
pub mod schur;
pub mod series;
pub mod simulate;
pub mod streams;
pub mod table1;
pub mod toeplitz;
pub mod word;

pub use error::{Error, Result};
pub use model::{ProbModel, TieGroup};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
pub use partition::{partitions_of, Partition};
pub use series::TruncSeries;
pub use word::{lwis_length, rsk_shape, sample_word, Word};

/// Library version, echoed in CLI output metadata.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
