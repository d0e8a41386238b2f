use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Type `(d_1, …, d_g)` of a polarization on a `g`-dimensional abelian
/// variety, with `d_1 | d_2 | … | d_g`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PolarizationType {
    parts: Vec<u64>,
}

impl PolarizationType {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::Precondition(
                "polarization type needs at least one part".into(),
            ));
        }
        if parts.contains(&0) {
            return Err(Error::Precondition(format!("zero part in {parts:?}")));
        }
        if let Some(w) = parts.windows(2).find(|w| w[1] % w[0] != 0) {
            return Err(Error::Precondition(format!(
                "{} does not divide {} in {parts:?}",
                w[0], w[1]
            )));
        }
        Ok(PolarizationType { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Dimension of the abelian variety.
    pub fn g(&self) -> u32 {
        self.parts.len() as u32
    }

    /// `h⁰` of a line bundle of this type, the product of the parts.
    pub fn h0(&self) -> BigInt {
        self.parts.iter().fold(BigInt::from(1), |acc, &p| acc * p)
    }

    /// Shape `(1, …, 1, N)` with `N > 1`.
    pub fn is_ones_then(&self) -> Option<u64> {
        let (&last, rest) = self.parts.split_last()?;
        (last > 1 && rest.iter().all(|&p| p == 1)).then_some(last)
    }
}

impl TryFrom<Vec<u64>> for PolarizationType {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        PolarizationType::new(parts)
    }
}

impl From<PolarizationType> for Vec<u64> {
    fn from(t: PolarizationType) -> Self {
        t.parts
    }
}

impl fmt::Display for PolarizationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Every divisibility chain of length `g` with product `h0`, in lexicographic
/// order.
pub fn enumerate_polarization_types(g: u32, h0: u64) -> Result<Vec<PolarizationType>> {
    if g == 0 || h0 == 0 {
        return Err(Error::Precondition(format!(
            "need g >= 1 and h0 >= 1, got g = {g}, h0 = {h0}"
        )));
    }
    let mut out = Vec::new();
    let mut chain = Vec::with_capacity(g as usize);
    extend_chain(1, h0, g as usize, &mut chain, &mut out);
    Ok(out)
}

fn extend_chain(
    prev: u64,
    remaining: u64,
    slots: usize,
    chain: &mut Vec<u64>,
    out: &mut Vec<PolarizationType>,
) {
    if slots == 1 {
        if remaining.is_multiple_of(prev) {
            chain.push(remaining);
            out.push(PolarizationType {
                parts: chain.clone(),
            });
            chain.pop();
        }
        return;
    }
    let mut next = prev;
    // every later part is at least `next`, so next^slots <= remaining
    while next
        .checked_pow(slots as u32)
        .is_some_and(|p| p <= remaining)
    {
        if remaining.is_multiple_of(next) {
            chain.push(next);
            extend_chain(next, remaining / next, slots - 1, chain, out);
            chain.pop();
        }
        next += prev;
    }
}

/// Type of `L^2` for `L` of type `t`, together with its `h⁰`.
pub fn double_type(t: &PolarizationType) -> (PolarizationType, BigInt) {
    let doubled = PolarizationType {
        parts: t.parts.iter().map(|p| 2 * p).collect(),
    };
    let h0 = doubled.h0();
    (doubled, h0)
}

/// Dimension of the space of quadrics on `P^N`, `binom(N+2, 2)`.
pub fn quadric_space_dimension(n: u64) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Precondition(
            "projective dimension must be at least 1".into(),
        ));
    }
    let n = BigInt::from(n);
    Ok((&n + 2u32) * (&n + 1u32) / 2u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(parts: &[u64]) -> PolarizationType {
        PolarizationType::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(PolarizationType::new(vec![2, 3]).is_err());
        assert!(PolarizationType::new(vec![]).is_err());
        assert!(PolarizationType::new(vec![0, 4]).is_err());
        assert_eq!(t(&[1, 2, 4]).h0(), BigInt::from(8));
        assert_eq!(t(&[1, 1, 8]).is_ones_then(), Some(8));
        assert_eq!(t(&[1, 2, 4]).is_ones_then(), None);
        assert_eq!(t(&[1, 1]).is_ones_then(), None);
        assert_eq!(t(&[1, 7]).to_string(), "(1,7)");
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            enumerate_polarization_types(3, 8).unwrap(),
            vec![t(&[1, 1, 8]), t(&[1, 2, 4]), t(&[2, 2, 2])]
        );
        assert_eq!(
            enumerate_polarization_types(2, 7).unwrap(),
            vec![t(&[1, 7])]
        );
        assert_eq!(enumerate_polarization_types(1, 5).unwrap(), vec![t(&[5])]);
        assert_eq!(
            enumerate_polarization_types(2, 1).unwrap(),
            vec![t(&[1, 1])]
        );
        assert!(enumerate_polarization_types(2, 2).unwrap() == vec![t(&[1, 2])]);
        assert!(enumerate_polarization_types(0, 8).is_err());
    }

    #[test]
    fn doubling() {
        assert_eq!(double_type(&t(&[1, 7])), (t(&[2, 14]), BigInt::from(28)));
        assert_eq!(double_type(&t(&[1])), (t(&[2]), BigInt::from(2)));
        assert_eq!(
            double_type(&t(&[1, 2, 4])),
            (t(&[2, 4, 8]), BigInt::from(64))
        );
    }

    #[test]
    fn quadric_counts() {
        assert_eq!(quadric_space_dimension(6).unwrap(), BigInt::from(28));
        assert_eq!(quadric_space_dimension(3).unwrap(), BigInt::from(10));
        assert_eq!(quadric_space_dimension(1).unwrap(), BigInt::from(3));
        assert!(quadric_space_dimension(0).is_err());
    }

    #[test]
    fn json_is_a_plain_array() {
        let json = serde_json::to_string(&t(&[1, 2, 4])).unwrap();
        assert_eq!(json, "[1,2,4]");
        let back: PolarizationType = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t(&[1, 2, 4]));
        assert!(serde_json::from_str::<PolarizationType>("[2,3]").is_err());
    }
}
