//! Truncated power series in `t` with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::rational::format_rational;

/// `c_0 + c_1 t + … + c_D t^D`, all arithmetic modulo `t^{D+1}`.
///
/// Operands of a binary operation must share the same cap.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    pub fn zero(cap: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigRational::zero(); cap + 1],
        }
    }

    pub fn one(cap: usize) -> Self {
        Self::constant(BigRational::one(), cap)
    }

    pub fn constant(c: BigRational, cap: usize) -> Self {
        let mut s = Self::zero(cap);
        s.coeffs[0] = c;
        s
    }

    /// Coefficients beyond `cap` are dropped, missing ones are zero.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>, cap: usize) -> Self {
        coeffs.resize(cap + 1, BigRational::zero());
        TruncSeries { coeffs }
    }

    /// Degree cap `D`.
    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `[t^r]`, zero above the cap.
    pub fn coeff(&self, r: usize) -> BigRational {
        self.coeffs.get(r).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn check_cap(&self, other: &Self) {
        assert_eq!(self.cap(), other.cap(), "series caps differ");
    }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_cap(rhs);
        TruncSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_cap(rhs);
        TruncSeries {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        self.check_cap(rhs);
        let cap = self.cap();
        let mut out = vec![BigRational::zero(); cap + 1];
        let (Some(va), Some(vb)) = (self.valuation(), rhs.valuation()) else {
            return TruncSeries { coeffs: out };
        };
        for i in va..=cap {
            let a = &self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            for j in vb..=cap - i {
                let b = &rhs.coeffs[j];
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        TruncSeries { coeffs: out }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TruncSeries {
            type Output = TruncSeries;
            fn $m(self, rhs: TruncSeries) -> TruncSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        -&self
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(r, c)| format!("{} t^{r}", format_rational(c)))
            .collect();
        if terms.is_empty() {
            write!(f, "0 + O(t^{})", self.cap() + 1)
        } else {
            write!(f, "{} + O(t^{})", terms.join(" + "), self.cap() + 1)
        }
    }
}
