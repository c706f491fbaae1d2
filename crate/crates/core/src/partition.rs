//! Integer partitions and their enumeration.

use std::fmt;

use crate::{Error, Result};

/// A partition `λ_1 ≥ λ_2 ≥ … > 0`, stored without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Accepts weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Parts padded with zeros to length `k`. Panics if `λ` has more than `k` parts.
    pub fn padded(&self, k: usize) -> Vec<u32> {
        assert!(self.len() <= k, "{self} has more than {k} parts");
        let mut out = self.parts.clone();
        out.resize(k, 0);
        out
    }

    /// Number of nonzero parts `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `N = |λ|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `λ_1`, zero for the empty partition.
    pub fn first_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Shifted parts `h_i = λ_i + k − i`, `i = 1..k`, strictly decreasing.
    pub fn shifted(&self, k: usize) -> Vec<u64> {
        self.padded(k)
            .iter()
            .enumerate()
            .map(|(i, &l)| l as u64 + (k - 1 - i) as u64)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Every partition of `n` into at most `max_parts` parts, each exactly once.
///
/// Order is colexicographic: partitions are compared on their smallest
/// (last, zero-padded) part first, then the next-to-last, and so on. For
/// `(3, 2)` this yields `(3)` and then `(2,1)`.
pub fn partitions_of(n: u32, max_parts: usize) -> Partitions {
    assert!(max_parts >= 1, "max_parts must be positive");
    // reversed[0] ≤ reversed[1] ≤ … is the partition read from its last part.
    let mut reversed = vec![0u32; max_parts];
    reversed[max_parts - 1] = n;
    Partitions {
        reversed,
        n,
        done: false,
    }
}

/// Iterator returned by [`partitions_of`].
#[derive(Clone, Debug)]
pub struct Partitions {
    reversed: Vec<u32>,
    n: u32,
    done: bool,
}

impl Partitions {
    fn advance(&mut self) {
        let k = self.reversed.len();
        // Lex successor on nondecreasing sequences with fixed sum: bump the
        // rightmost free position, reset everything after it to the minimum.
        for i in (0..k.saturating_sub(1)).rev() {
            let v = self.reversed[i] + 1;
            let prefix: u64 = self.reversed[..i].iter().map(|&x| x as u64).sum();
            let fixed = prefix + v as u64 * (k - 1 - i) as u64;
            if fixed <= self.n as u64 && self.n as u64 - fixed >= v as u64 {
                for slot in &mut self.reversed[i..k - 1] {
                    *slot = v;
                }
                self.reversed[k - 1] = (self.n as u64 - fixed) as u32;
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let parts: Vec<u32> = self.reversed.iter().rev().copied().collect();
        self.advance();
        Some(Partition::new(parts).expect("generated parts are sorted"))
    }
}
