//! Polynomials in a single graded generator `h`, truncated at a fixed degree.
//!
//! Every Chern-class computation in the crate happens in `Z[h]/(h^{n+1})`.
//! Coefficients are arbitrary-precision integers and the truncation order is
//! part of the value: binary operations refuse to mix orders.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Element of `Z[h]/(h^{order+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    // Always exactly `order + 1` entries.
    coeffs: Vec<BigInt>,
}

impl TruncSeries {
    /// Builds a series from its low-degree coefficients, padding with zeros up
    /// to `order`.
    pub fn from_coeffs<I, T>(coeffs: I, order: usize) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        if coeffs.len() > order + 1 {
            return Err(Error::TooManyCoefficients {
                len: coeffs.len(),
                order,
            });
        }
        coeffs.resize(order + 1, BigInt::zero());
        Ok(TruncSeries { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// `(1 + c·h)^m`, truncated at `order`.
    pub fn binom_power(c: impl Into<BigInt>, m: u64, order: usize) -> Self {
        let c = c.into();
        let mut out = Self::zero(order);
        // binom(m, k) * c^k, updated in place: t_{k+1} = t_k * c * (m - k) / (k + 1)
        let mut term = BigInt::one();
        let top = order.min(usize::try_from(m).unwrap_or(usize::MAX));
        for k in 0..=top {
            out.coeffs[k] = term.clone();
            let k64 = k as u64;
            if k64 == m {
                break;
            }
            term = term * &c * BigInt::from(m - k64) / BigInt::from(k64 + 1);
        }
        out
    }

    /// Inclusive truncation degree.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `h^k`.
    pub fn coefficient(&self, k: usize) -> Result<&BigInt> {
        self.coeffs.get(k).ok_or(Error::OutOfRange {
            index: k,
            order: self.order(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        Ok(TruncSeries { coeffs })
    }

    pub fn checked_neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    /// Truncated convolution.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut coeffs = vec![BigInt::zero(); n + 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs[..=n - i].iter().enumerate() {
                coeffs[i + j] += x * y;
            }
        }
        Ok(TruncSeries { coeffs })
    }

    /// Multiplicative inverse. Only series with constant term exactly 1 are
    /// accepted.
    pub fn invert(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::NotInvertible(self.coeffs[0].to_string()));
        }
        let n = self.order();
        let mut inv: Vec<BigInt> = Vec::with_capacity(n + 1);
        inv.push(BigInt::one());
        for k in 1..=n {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &inv[k - i];
            }
            inv.push(-acc);
        }
        Ok(TruncSeries { coeffs: inv })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.sign() == num_bigint::Sign::Minus {
                "-"
            } else {
                "+"
            };
            let mag = c.magnitude();
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => {}
                _ => write!(f, "{mag}")?,
            }
            match k {
                0 => {}
                1 => f.write_str("h")?,
                _ => write!(f, "h^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
