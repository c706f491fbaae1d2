//! Words over `{1..k}`, sampling, the longest weakly increasing subsequence and RSK shapes.

use rand::Rng;

use crate::partition::Partition;
use crate::{Error, ProbModel, Result};

/// A finite word over the alphabet `{1..k}` (letters refer to the sorted model).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u16>,
    k: usize,
}

impl Word {
    pub fn new(letters: Vec<u16>, k: usize) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|&&a| a == 0 || a as usize > k) {
            return Err(Error::InvalidArgument(format!(
                "letter {bad} outside alphabet 1..={k}"
            )));
        }
        Ok(Word { letters, k })
    }

    /// Parses a digit string such as `"1213"`.
    pub fn from_digits(text: &str, k: usize) -> Result<Self> {
        let letters = text
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u16)
                    .ok_or_else(|| Error::InvalidArgument(format!("not a letter: {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Word::new(letters, k)
    }

    pub fn letters(&self) -> &[u16] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }
}

/// Inverse-CDF letter sampler. The cumulative vector is converted to `f64` once.
#[derive(Clone, Debug)]
pub struct LetterSampler {
    cumulative: Vec<f64>,
}

impl LetterSampler {
    pub fn new(model: &ProbModel) -> Self {
        let mut acc = num_rational::BigRational::from_integer(0.into());
        let mut cumulative: Vec<f64> = model
            .probs()
            .iter()
            .map(|p| {
                acc += p;
                crate::rational::to_f64(&acc)
            })
            .collect();
        if let Some(last) = cumulative.last_mut() {
            *last = f64::INFINITY;
        }
        LetterSampler { cumulative }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u16 {
        let u: f64 = rng.gen();
        (self.cumulative.partition_point(|&c| c <= u) + 1) as u16
    }

    pub fn fill<R: Rng + ?Sized>(&self, rng: &mut R, out: &mut [u16]) {
        for slot in out {
            *slot = self.sample(rng);
        }
    }
}

/// Draws `n` i.i.d. letters, letter `i` with probability `p_i`.
pub fn sample_word<R: Rng + ?Sized>(model: &ProbModel, n: usize, rng: &mut R) -> Word {
    let sampler = LetterSampler::new(model);
    let mut letters = vec![0u16; n];
    sampler.fill(rng, &mut letters);
    Word {
        letters,
        k: model.k(),
    }
}

/// Length of the longest weakly increasing subsequence.
pub fn lwis_length(word: &Word) -> usize {
    lwis_of_letters(&word.letters, word.k)
}

/// `O(N·k)` dynamic program: `best[i]` is the longest weakly increasing
/// subsequence seen so far that ends in a letter `≤ i + 1`.
pub fn lwis_of_letters(letters: &[u16], k: usize) -> usize {
    let mut best = vec![0usize; k];
    for &a in letters {
        let a = a as usize - 1;
        let extended = best[a] + 1;
        for slot in &mut best[a..] {
            if *slot < extended {
                *slot = extended;
            } else {
                break;
            }
        }
    }
    best.last().copied().unwrap_or(0)
}

/// Shape of the insertion tableau under RSK row insertion.
pub fn rsk_shape(word: &Word) -> Partition {
    let mut rows: Vec<Vec<u16>> = Vec::new();
    for &letter in &word.letters {
        let mut x = letter;
        let mut placed = false;
        for row in rows.iter_mut() {
            let pos = row.partition_point(|&y| y <= x);
            if pos == row.len() {
                row.push(x);
                placed = true;
                break;
            }
            std::mem::swap(&mut row[pos], &mut x);
        }
        if !placed {
            rows.push(vec![x]);
        }
    }
    Partition::new(rows.iter().map(|r| r.len() as u32).collect())
        .expect("row lengths of a tableau are weakly decreasing")
}
