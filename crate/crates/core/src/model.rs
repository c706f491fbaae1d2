//! Letter probabilities, sorted into descending order and split into tie-groups.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rational::{format_rational, parse_rational_list, to_f64};
use crate::{Error, Result};

/// A maximal run of letters sharing one probability.
///
/// Letters are 1-based and refer to the sorted (descending) alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TieGroup {
    /// First letter of the block.
    pub first: usize,
    /// Number of letters `k_α` in the block.
    pub size: usize,
    /// Common probability `p_α`.
    pub prob: BigRational,
}

impl TieGroup {
    /// Largest letter `i_α` of the block.
    pub fn last(&self) -> usize {
        self.first + self.size - 1
    }

    pub fn letters(&self) -> std::ops::RangeInclusive<usize> {
        self.first..=self.last()
    }

    pub fn contains(&self, letter: usize) -> bool {
        self.letters().contains(&letter)
    }
}

/// A validated probability vector `p_1 ≥ p_2 ≥ … ≥ p_k` with `Σ p_i = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbModel {
    probs: Vec<BigRational>,
    groups: Vec<TieGroup>,
    /// `original[i]` is the 0-based input position of sorted letter `i + 1`.
    original: Vec<usize>,
}

/// Validates raw probabilities and reorders them descending.
///
/// Every entry must lie in `(0, 1)`; the single-letter model `p = (1)` is the
/// one exception, since it is the only way to sum to one with `k = 1`.
pub fn validate_model(raw: &[BigRational]) -> Result<ProbModel> {
    if raw.is_empty() {
        return Err(Error::EmptyModel);
    }
    let one = BigRational::one();
    for (index, p) in raw.iter().enumerate() {
        let in_range = *p > BigRational::zero() && (*p < one || (raw.len() == 1 && *p == one));
        if !in_range {
            return Err(Error::OutOfRange {
                index,
                value: format_rational(p),
            });
        }
    }
    let sum: BigRational = raw.iter().sum();
    if sum != one {
        return Err(Error::SumNotOne {
            sum: format_rational(&sum),
        });
    }

    let mut order: Vec<usize> = (0..raw.len()).collect();
    // stable: tied letters keep their input order
    order.sort_by(|&a, &b| raw[b].cmp(&raw[a]));
    let probs: Vec<BigRational> = order.iter().map(|&i| raw[i].clone()).collect();

    let mut groups: Vec<TieGroup> = Vec::new();
    for (i, p) in probs.iter().enumerate() {
        match groups.last_mut() {
            Some(g) if g.prob == *p => g.size += 1,
            _ => groups.push(TieGroup {
                first: i + 1,
                size: 1,
                prob: p.clone(),
            }),
        }
    }

    Ok(ProbModel {
        probs,
        groups,
        original: order,
    })
}

impl ProbModel {
    pub fn new(raw: &[BigRational]) -> Result<Self> {
        validate_model(raw)
    }

    /// Parses a comma separated list such as `"5/7,2/7"`.
    pub fn parse(text: &str) -> Result<Self> {
        validate_model(&parse_rational_list(text)?)
    }

    /// Alphabet size `k`.
    pub fn k(&self) -> usize {
        self.probs.len()
    }

    /// Probabilities in descending order.
    pub fn probs(&self) -> &[BigRational] {
        &self.probs
    }

    /// `p_i` for the 1-based sorted letter `i`.
    pub fn prob(&self, letter: usize) -> &BigRational {
        &self.probs[letter - 1]
    }

    pub fn groups(&self) -> &[TieGroup] {
        &self.groups
    }

    /// The block `A_1` holding the largest probability.
    pub fn top_group(&self) -> &TieGroup {
        &self.groups[0]
    }

    /// Group containing the 1-based sorted letter.
    pub fn group_of(&self, letter: usize) -> &TieGroup {
        self.groups
            .iter()
            .find(|g| g.contains(letter))
            .expect("letter outside alphabet")
    }

    /// 1-based letter in the caller's original order for a sorted letter.
    pub fn original_letter(&self, letter: usize) -> usize {
        self.original[letter - 1] + 1
    }

    /// The permutation applied at construction (`sorted index → input index`, 0-based).
    pub fn permutation(&self) -> &[usize] {
        &self.original
    }

    pub fn is_homogeneous(&self) -> bool {
        self.groups.len() == 1
    }

    pub fn all_distinct(&self) -> bool {
        self.groups.len() == self.k()
    }

    /// True when `p_1` is strictly larger than every other probability.
    pub fn has_strict_leader(&self) -> bool {
        self.top_group().size == 1
    }

    pub fn probs_f64(&self) -> Vec<f64> {
        self.probs.iter().map(to_f64).collect()
    }
}

impl fmt::Display for ProbModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.probs.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}
