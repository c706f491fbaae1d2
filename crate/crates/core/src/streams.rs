//! Reproducible random streams and batched parallel execution.
//!
//! Work is cut into consecutive batches of [`BATCH_SIZE`] samples. Batch `b`
//! draws from ChaCha8 keyed by the user seed on stream `b`, and batch results
//! are merged in batch order. Output therefore depends on `(seed, samples)`
//! only; the worker count changes wall time, never the numbers.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::{Error, Result};

pub const BATCH_SIZE: usize = 1024;

/// Human readable description of the splitting rule, echoed in CLI metadata.
pub const SPLIT_RULE: &str =
    "ChaCha8Rng::seed_from_u64(seed) with stream = batch index; batches of 1024 consecutive samples merged in order";

pub fn substream(seed: u64, batch: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(batch);
    rng
}

/// `0` means "all available cores".
pub fn resolve_workers(workers: usize) -> usize {
    if workers == 0 {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    } else {
        workers
    }
}

/// Runs `job(batch_index, batch_len)` for every batch covering `total` samples
/// and returns the results in batch order.
pub fn run_batched<T, F>(total: usize, workers: usize, job: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64, usize) -> T + Sync,
{
    let batches: Vec<(u64, usize)> = (0..total.div_ceil(BATCH_SIZE))
        .map(|b| (b as u64, BATCH_SIZE.min(total - b * BATCH_SIZE)))
        .collect();
    let workers = resolve_workers(workers);
    if workers == 1 {
        return Ok(batches.into_iter().map(|(b, n)| job(b, n)).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    Ok(pool.install(|| batches.into_par_iter().map(|(b, n)| job(b, n)).collect()))
}
