//! `f^λ` and two independent exact evaluators of the specialized Schur function `s_λ(p)`.
//!
//! [`schur_jacobi_trudi`] is the reference: a determinant of complete
//! homogeneous symmetric polynomials, valid for any ties among the `p_i`.
//! [`schur_bialternant`] is the ratio `det(p_i^{h_j}) / Δ(p)`, with the
//! confluent (tied-probability) limit taken symbolically: inside each tie
//! block, row `i` becomes `h_j^{d} p_i^{h_j − d}` with `d = i_α − i`, and
//! `Δ(p)` becomes
//! `Δ'(p) = ∏_α 1!·2!⋯(k_α−1)! · ∏_{α<β} (p_α − p_β)^{k_α k_β}`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::rational::factorial;
use crate::{Partition, ProbModel};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchurMethod {
    JacobiTrudi,
    Bialternant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchurEval {
    pub value: BigRational,
    pub method: SchurMethod,
}

/// Number of standard Young tableaux of shape `λ`: `N!·Δ(h) / (h_1!⋯h_k!)`.
pub fn f_lambda(lambda: &Partition) -> BigUint {
    let k = lambda.len().max(1);
    let h = lambda.shifted(k);
    let mut numer = factorial(lambda.size());
    for i in 0..k {
        for j in i + 1..k {
            numer *= BigInt::from(h[i] - h[j]);
        }
    }
    let denom = h
        .iter()
        .fold(BigInt::one(), |acc, &hi| acc * factorial(hi));
    let (q, r) = (&numer / &denom, &numer % &denom);
    debug_assert!(r.is_zero(), "hook formula must divide exactly");
    q.to_biguint().expect("f^λ is positive")
}

/// `h_0(p), …, h_{max_degree}(p)`, complete homogeneous symmetric polynomials.
pub fn complete_homogeneous(probs: &[BigRational], max_degree: usize) -> Vec<BigRational> {
    // h_m(x_1..x_j) = h_m(x_1..x_{j-1}) + x_j·h_{m-1}(x_1..x_j)
    let mut h = vec![BigRational::zero(); max_degree + 1];
    h[0] = BigRational::one();
    for p in probs {
        for m in 1..=max_degree {
            let add = &h[m - 1] * p;
            h[m] += add;
        }
    }
    h
}

/// Jacobi–Trudi evaluator with the `h_m(p)` table cached, for repeated use.
#[derive(Clone, Debug)]
pub struct JacobiTrudi {
    h: Vec<BigRational>,
}

impl JacobiTrudi {
    /// Supports partitions with `|λ| + ℓ(λ) ≤ max_degree + 1`.
    pub fn new(model: &ProbModel, max_degree: usize) -> Self {
        JacobiTrudi {
            h: complete_homogeneous(model.probs(), max_degree),
        }
    }

    fn h(&self, m: i64) -> BigRational {
        if m < 0 {
            BigRational::zero()
        } else {
            self.h[m as usize].clone()
        }
    }

    pub fn eval(&self, lambda: &Partition) -> BigRational {
        let parts = lambda.parts();
        let l = parts.len();
        if l == 0 {
            return BigRational::one();
        }
        let matrix: Vec<Vec<BigRational>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| self.h(parts[i] as i64 - i as i64 + j as i64))
                    .collect()
            })
            .collect();
        det_field(matrix)
    }
}

pub fn schur_jacobi_trudi(lambda: &Partition, model: &ProbModel) -> SchurEval {
    let degree = lambda.size() as usize + lambda.len();
    SchurEval {
        value: JacobiTrudi::new(model, degree).eval(lambda),
        method: SchurMethod::JacobiTrudi,
    }
}

/// `Δ'(p)`; equals the ordinary Vandermonde `Δ(p)` when all `p_i` are distinct.
pub fn confluent_vandermonde(model: &ProbModel) -> BigRational {
    let groups = model.groups();
    let mut out = BigRational::one();
    for g in groups {
        for j in 1..g.size as u64 {
            out *= BigRational::from_integer(factorial(j));
        }
    }
    for (a, ga) in groups.iter().enumerate() {
        for gb in &groups[a + 1..] {
            let diff = &ga.prob - &gb.prob;
            out *= Pow::pow(&diff, (ga.size * gb.size) as u32);
        }
    }
    out
}

/// Bialternant formula with the derivative modification for tied probabilities.
pub fn schur_bialternant(lambda: &Partition, model: &ProbModel) -> SchurEval {
    let k = model.k();
    let value = if lambda.len() > k {
        BigRational::zero()
    } else {
        let h = lambda.shifted(k);
        let matrix: Vec<Vec<BigRational>> = (1..=k)
            .map(|i| {
                let d = (model.group_of(i).last() - i) as u64;
                let p = model.prob(i);
                h.iter().map(|&hj| confluent_entry(p, hj, d)).collect()
            })
            .collect();
        det_field(matrix) / confluent_vandermonde(model)
    };
    SchurEval {
        value,
        method: SchurMethod::Bialternant,
    }
}

/// `h^d · p^{h−d}` with `0^0 = 1`; the exponent of `p` may be negative.
fn confluent_entry(p: &BigRational, h: u64, d: u64) -> BigRational {
    if d > 0 && h == 0 {
        return BigRational::zero();
    }
    let coeff = BigRational::from_integer(Pow::pow(BigInt::from(h), d as u32));
    let exp = h as i64 - d as i64;
    let power = if exp >= 0 {
        Pow::pow(p, exp as u32)
    } else {
        Pow::pow(p.recip(), (-exp) as u32)
    };
    coeff * power
}

/// Exact determinant over the rationals by Gaussian elimination with row swaps.
pub fn det_field(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let n = a.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        let pv = a[col][col].clone();
        det *= &pv;
        let (top, bottom) = a.split_at_mut(col + 1);
        let pivot_row = &top[col];
        for row in bottom.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pv;
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= &factor * p;
            }
        }
    }
    det
}
