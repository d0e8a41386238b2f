//! Chern classes of smooth quadrics and of the normal bundle of an abelian
//! subvariety, the coefficient sequence `F_d`, and the intersection pairing on
//! the middle Chow group of `Q^{2d}`.
//!
//! The middle group is spanned by two classes `α`, `β` with `α² = β² = 1` and
//! `α·β = 0`, used for every `d`. Pairing a middle class against `H̄^d` gives
//! `a + b`, so the hyperplane power never needs its own generator.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::series::TruncSeries;

/// Total Chern class of the tangent bundle of a smooth quadric `Q^n ⊂ P^{n+1}`,
/// `(1 + h)^{n+2} (1 + 2h)^{-1}`, truncated at `h^n`.
pub fn chern_total_tangent_quadric(n: u32) -> Result<TruncSeries> {
    if n == 0 {
        return Err(Error::Precondition(
            "quadric dimension must be at least 1".into(),
        ));
    }
    quadric_restriction(n, n as usize)
}

/// Total Chern class of `N_{A,Q}` for a `d`-dimensional abelian variety in
/// `Q^{2d}`. The tangent bundle of `A` is trivial, so this is the restriction
/// of `c(T_Q)` truncated at `h^d`.
pub fn chern_total_normal(d: u32) -> Result<TruncSeries> {
    check_d(d)?;
    quadric_restriction(2 * d, d as usize)
}

// (1+h)^{n+2} (1+2h)^{-1} in Z[h]/(h^{order+1})
fn quadric_restriction(n: u32, order: usize) -> Result<TruncSeries> {
    let ambient = TruncSeries::binom_power(1, u64::from(n) + 2, order);
    let hypersurface = TruncSeries::binom_power(2, 1, order);
    ambient.checked_mul(&hypersurface.invert()?)
}

fn check_d(d: u32) -> Result<()> {
    if d == 0 {
        return Err(Error::Precondition(
            "half-dimension d must be at least 1".into(),
        ));
    }
    Ok(())
}

/// `F_d = Σ_{k=0}^{d} binom(2d+2, k) (-2)^{d-k}`, evaluated in linear time with
/// a running binomial and Horner's rule in `-2`.
pub fn f_closed(d: u32) -> Result<BigInt> {
    check_d(d)?;
    let top = 2 * u64::from(d) + 2;
    let minus_two = BigInt::from(-2);
    let mut binom = BigInt::from(1);
    let mut acc = BigInt::zero();
    for k in 0..=u64::from(d) {
        acc = acc * &minus_two + &binom;
        binom = binom * (top - k) / (k + 1);
    }
    Ok(acc)
}

/// `F_d` read off as the top coefficient of `c(N_{A,Q})`.
pub fn f_series(d: u32) -> Result<BigInt> {
    let normal = chern_total_normal(d)?;
    Ok(normal.coefficient(d as usize)?.clone())
}

/// The class `a·α + b·β` in the middle Chow group of `Q^{2d}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MiddleClass {
    #[serde(with = "crate::bigint_serde")]
    pub a: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub b: BigInt,
    pub d: u32,
}

impl MiddleClass {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, d: u32) -> Result<Self> {
        check_d(d)?;
        Ok(MiddleClass {
            a: a.into(),
            b: b.into(),
            d,
        })
    }

    /// Both coordinates nonnegative.
    pub fn is_effective(&self) -> bool {
        !self.a.is_negative() && !self.b.is_negative()
    }

    /// Intersection number with `H̄^d`.
    pub fn degree(&self) -> BigInt {
        &self.a + &self.b
    }

    /// Intersection pairing with another middle class on the same quadric.
    pub fn intersect(&self, other: &MiddleClass) -> Result<BigInt> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch {
                left: self.d,
                right: other.d,
            });
        }
        Ok(&self.a * &other.a + &self.b * &other.b)
    }

    /// Whether `A·A = F_d · deg(A)`, the self-intersection formula evaluated
    /// through `c_d(N_{A,Q}) = F_d h^d`.
    pub fn satisfies_self_intersection(&self) -> Result<bool> {
        let lhs = self.intersect(self)?;
        let rhs = f_closed(self.d)? * self.degree();
        Ok(lhs == rhs)
    }
}

pub fn intersect_middle(x: &MiddleClass, y: &MiddleClass) -> Result<BigInt> {
    x.intersect(y)
}

pub fn degree_middle(x: &MiddleClass) -> BigInt {
    x.degree()
}

pub fn self_intersection_check(x: &MiddleClass) -> Result<bool> {
    x.satisfies_self_intersection()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn ints(x: &TruncSeries) -> Vec<i64> {
        x.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn tangent_class_of_small_quadrics() {
        // Q^2 = P^1 x P^1: c_2 * deg Q = 2 * 2 = 4 = Euler characteristic.
        assert_eq!(
            ints(&chern_total_tangent_quadric(2).unwrap()),
            vec![1, 2, 2]
        );
        // The conic is a P^1 embedded by O(2): c_1 = 1·H̄, deg H̄ = 2, χ = 2.
        assert_eq!(ints(&chern_total_tangent_quadric(1).unwrap()), vec![1, 1]);
        let q4 = chern_total_tangent_quadric(4).unwrap();
        assert_eq!(q4.coefficient(1).unwrap(), &big(4));
        assert!(chern_total_tangent_quadric(0).is_err());
    }

    #[test]
    fn normal_class() {
        assert_eq!(ints(&chern_total_normal(2).unwrap()), vec![1, 4, 7]);
        assert_eq!(
            chern_total_normal(3).unwrap().coefficient(3).unwrap(),
            &big(24)
        );
        assert_eq!(
            chern_total_normal(1).unwrap().coefficient(1).unwrap(),
            &big(2)
        );
        assert!(chern_total_normal(0).is_err());
    }

    #[test]
    fn f_values_by_both_routes() {
        for (d, expected) in [(1, 2), (2, 7), (3, 24), (4, 86), (5, 314), (6, 1163)] {
            assert_eq!(f_closed(d).unwrap(), big(expected), "closed d={d}");
            assert_eq!(f_series(d).unwrap(), big(expected), "series d={d}");
        }
        assert!(f_closed(0).is_err());
        assert!(f_series(0).is_err());
    }

    #[test]
    fn f_closed_handles_large_d() {
        let v = f_closed(1000).unwrap();
        assert!(v > BigInt::zero());
        assert_eq!(f_closed(150).unwrap(), f_series(150).unwrap());
    }

    #[test]
    fn pairing() {
        let c = |a, b| MiddleClass::new(a, b, 2).unwrap();
        assert_eq!(intersect_middle(&c(7, 7), &c(7, 7)).unwrap(), big(98));
        assert_eq!(intersect_middle(&c(1, 0), &c(0, 1)).unwrap(), big(0));
        assert_eq!(intersect_middle(&c(1, 0), &c(1, 0)).unwrap(), big(1));
        let other = MiddleClass::new(1, 0, 3).unwrap();
        assert_eq!(
            intersect_middle(&c(1, 0), &other),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
        assert!(MiddleClass::new(1, 1, 0).is_err());
    }

    #[test]
    fn degree_and_effectivity() {
        assert_eq!(degree_middle(&MiddleClass::new(7, 7, 2).unwrap()), big(14));
        assert_eq!(degree_middle(&MiddleClass::new(0, 0, 2).unwrap()), big(0));
        assert_eq!(
            degree_middle(&MiddleClass::new(24, 24, 3).unwrap()),
            big(48)
        );
        assert!(MiddleClass::new(0, 3, 1).unwrap().is_effective());
        assert!(!MiddleClass::new(-1, 3, 1).unwrap().is_effective());
    }

    #[test]
    fn self_intersection() {
        let c = |a, b| MiddleClass::new(a, b, 2).unwrap();
        assert!(self_intersection_check(&c(7, 7)).unwrap());
        assert!(self_intersection_check(&c(0, 0)).unwrap());
        assert!(!self_intersection_check(&c(1, 1)).unwrap());
    }
}
