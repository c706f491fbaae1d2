//! Second exact route: `F_N(n) = N!·[t^N] det T_n(f)` for the symbol
//! `f(z) = e^{t/z} ∏_j (1 + p_j z)`.
//!
//! The Fourier coefficients of `f` are truncated power series in `t`, and the
//! determinant is taken with the division-free Berkowitz algorithm, so no
//! series ever needs to be inverted.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rational::factorial;
use crate::{ProbModel, TruncSeries};

/// Minimal commutative-ring interface used by [`char_polys`].
pub trait RingElem: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl RingElem for TruncSeries {
    fn zero_like(&self) -> Self {
        TruncSeries::zero(self.cap())
    }
    fn one_like(&self) -> Self {
        TruncSeries::one(self.cap())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

macro_rules! num_ring {
    ($t:ty) => {
        impl RingElem for $t {
            fn zero_like(&self) -> Self {
                <$t>::zero()
            }
            fn one_like(&self) -> Self {
                <$t>::one()
            }
            fn add(&self, other: &Self) -> Self {
                self + other
            }
            fn sub(&self, other: &Self) -> Self {
                self - other
            }
            fn mul(&self, other: &Self) -> Self {
                self * other
            }
            fn neg(&self) -> Self {
                -self
            }
        }
    };
}
num_ring!(BigRational);
num_ring!(BigInt);

/// Characteristic polynomials `det(xI − A_r)` of every leading principal
/// submatrix `A_r`, `r = 1..n`, by Berkowitz' recurrence.
///
/// Entry `r − 1` of the result holds `r + 1` coefficients, leading `1` first.
/// Uses `O(n⁴)` ring multiplications and no division.
pub fn char_polys<T: RingElem>(a: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = a.len();
    if n == 0 {
        return Vec::new();
    }
    let one = a[0][0].one_like();
    let mut polys = Vec::with_capacity(n);
    let mut prev = vec![one.clone(), a[0][0].neg()];
    polys.push(prev.clone());
    for r in 1..n {
        // First column of the (r+2)×(r+1) Toeplitz factor:
        // 1, −a_rr, −R·C, −R·A_r·C, …, −R·A_r^{r−1}·C
        let mut col = Vec::with_capacity(r + 2);
        col.push(one.clone());
        col.push(a[r][r].neg());
        let mut v: Vec<T> = (0..r).map(|i| a[i][r].clone()).collect();
        for step in 0..r {
            let dot = (0..r).fold(one.zero_like(), |acc, j| acc.add(&a[r][j].mul(&v[j])));
            col.push(dot.neg());
            if step + 1 < r {
                v = (0..r)
                    .map(|i| (0..r).fold(one.zero_like(), |acc, j| acc.add(&a[i][j].mul(&v[j]))))
                    .collect();
            }
        }
        let next: Vec<T> = (0..=r + 1)
            .map(|i| {
                (0..=i.min(r)).fold(one.zero_like(), |acc, j| acc.add(&col[i - j].mul(&prev[j])))
            })
            .collect();
        polys.push(next.clone());
        prev = next;
    }
    polys
}

/// `det A_r` for `r = 1..n`.
pub fn leading_minors<T: RingElem>(a: &[Vec<T>]) -> Vec<T> {
    char_polys(a)
        .into_iter()
        .enumerate()
        .map(|(i, p)| {
            let c = p[i + 1].clone();
            if (i + 1) % 2 == 1 {
                c.neg()
            } else {
                c
            }
        })
        .collect()
}

/// Determinant of a nonempty square matrix.
pub fn determinant<T: RingElem>(a: &[Vec<T>]) -> T {
    leading_minors(a).pop().expect("matrix must be nonempty")
}

/// `e_l(p)` for `l = 0..=k`.
pub fn elementary_symmetric(probs: &[BigRational]) -> Vec<BigRational> {
    let mut e = vec![BigRational::zero(); probs.len() + 1];
    e[0] = BigRational::one();
    for (count, p) in probs.iter().enumerate() {
        for l in (1..=count + 1).rev() {
            let add = &e[l - 1] * p;
            e[l] += add;
        }
    }
    e
}

/// The symbol `e^{t/z} ∏(1 + p_j z)` at a fixed degree cap in `t`.
#[derive(Clone, Debug)]
pub struct ToeplitzSymbol {
    elem: Vec<BigRational>,
    inv_factorials: Vec<BigRational>,
    cap: usize,
}

impl ToeplitzSymbol {
    pub fn new(model: &ProbModel, cap: usize) -> Self {
        ToeplitzSymbol {
            elem: elementary_symmetric(model.probs()),
            inv_factorials: (0..=cap as u64)
                .map(|r| BigRational::new(BigInt::one(), factorial(r)))
                .collect(),
            cap,
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// `e_0, …, e_k`.
    pub fn elementary(&self) -> &[BigRational] {
        &self.elem
    }

    /// `φ_m(t) = Σ_{r ≥ max(0, −m)} e_{m+r} t^r / r!`, from expanding
    /// `e^{t/z} = Σ t^r z^{−r}/r!` against `Σ e_l z^l`.
    pub fn fourier_coeff(&self, m: i64) -> TruncSeries {
        let k = self.elem.len() as i64 - 1;
        let coeffs = (0..=self.cap)
            .map(|r| {
                let l = m + r as i64;
                if (0..=k).contains(&l) {
                    &self.elem[l as usize] * &self.inv_factorials[r]
                } else {
                    BigRational::zero()
                }
            })
            .collect();
        TruncSeries::from_coeffs(coeffs, self.cap)
    }

    /// `T_n` with entry `(i, j) = φ_{i−j}`.
    pub fn matrix(&self, n: usize) -> Vec<Vec<TruncSeries>> {
        let phis: Vec<TruncSeries> = (0..2 * n.max(1) - 1)
            .map(|idx| self.fourier_coeff(idx as i64 - (n as i64 - 1)))
            .collect();
        (0..n)
            .map(|i| (0..n).map(|j| phis[i + n - 1 - j].clone()).collect())
            .collect()
    }
}

pub fn fourier_coeff(symbol: &ToeplitzSymbol, m: i64) -> TruncSeries {
    symbol.fourier_coeff(m)
}

/// `det T_n(f)`, truncated at the symbol's cap. The `0×0` determinant is `1`.
pub fn toeplitz_det(symbol: &ToeplitzSymbol, n: usize) -> TruncSeries {
    if n == 0 {
        return TruncSeries::one(symbol.cap());
    }
    determinant(&symbol.matrix(n))
}

fn extract(series: &TruncSeries, n_len: u32) -> BigRational {
    series.coeff(n_len as usize) * BigRational::from_integer(factorial(n_len as u64))
}

/// `F_N(n) = N!·[t^N] det T_n`.
///
/// For `n > N` the `N×N` determinant is used: both agree through `t^N`, since
/// `Prob(ℓ_M ≤ n) = 1` for every `M ≤ N ≤ n`.
pub fn cdf_via_toeplitz(n: u32, n_len: u32, model: &ProbModel) -> BigRational {
    let symbol = ToeplitzSymbol::new(model, n_len as usize);
    extract(&toeplitz_det(&symbol, n.min(n_len) as usize), n_len)
}

/// `F_N(n)` for every `n = 0..=N` from one Berkowitz pass over `T_N`, whose
/// leading principal submatrices are exactly `T_1, …, T_N`.
pub fn cdf_row_via_toeplitz(n_len: u32, model: &ProbModel) -> Vec<BigRational> {
    let symbol = ToeplitzSymbol::new(model, n_len as usize);
    let mut row = vec![extract(&TruncSeries::one(n_len as usize), n_len)];
    row.extend(
        leading_minors(&symbol.matrix(n_len as usize))
            .iter()
            .map(|d| extract(d, n_len)),
    );
    row
}
