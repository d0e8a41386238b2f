//! Integer points on `a² + b² = F(a + b)`.
//!
//! Writing `x = 2a − F`, `y = 2b − F` turns the equation into
//! `x² + y² = 2F²`, so the scan runs over `x` with `x ≡ F (mod 2)` and
//! `x² ≤ 2F²`, recovering `y` with an exact integer square root.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bigint_serde::{Num, OwnedNum};
use crate::error::{Error, Result};
use crate::par;

/// Largest `F` for which the full scan is attempted.
pub const CIRCLE_SCAN_LIMIT: u64 = 1 << 24;

const CHUNKS: i64 = 64;

/// Coordinates `(a, b)` of `a·α + b·β`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub a: BigInt,
    pub b: BigInt,
}

impl Point {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        Point {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn degree(&self) -> BigInt {
        &self.a + &self.b
    }

    pub fn is_effective(&self) -> bool {
        !self.a.is_negative() && !self.b.is_negative()
    }

    /// Both coordinates strictly positive.
    pub fn is_positive(&self) -> bool {
        self.a.is_positive() && self.b.is_positive()
    }

    pub fn on_circle(&self, f: &BigInt) -> bool {
        &self.a * &self.a + &self.b * &self.b == f * self.degree()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [Num(&self.a), Num(&self.b)].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<OwnedNum> = Vec::deserialize(d)?;
        match <[OwnedNum; 2]>::try_from(v) {
            Ok([a, b]) => Ok(Point { a: a.0, b: b.0 }),
            Err(v) => Err(D::Error::invalid_length(v.len(), &"a pair [a, b]")),
        }
    }
}

/// The four points every circle carries: `(0,0)`, `(0,F)`, `(F,0)`, `(F,F)`.
pub fn corner_solutions(f: &BigInt) -> Vec<Point> {
    let z = BigInt::zero();
    let mut v = vec![
        Point::new(z.clone(), z.clone()),
        Point::new(z.clone(), f.clone()),
        Point::new(f.clone(), z),
        Point::new(f.clone(), f.clone()),
    ];
    v.sort();
    v.dedup();
    v
}

fn scan_input(f: &BigInt) -> Result<i64> {
    if !f.is_positive() {
        return Err(Error::Precondition(format!(
            "F must be at least 1, got {f}"
        )));
    }
    match f.to_u64() {
        Some(v) if v <= CIRCLE_SCAN_LIMIT => Ok(v as i64),
        _ => Err(Error::Budget {
            what: format!("circle scan for F = {f}"),
            budget: CIRCLE_SCAN_LIMIT.to_string(),
        }),
    }
}

/// All integer solutions, negatives included, sorted lexicographically.
pub fn circle_solutions(f: &BigInt) -> Result<Vec<Point>> {
    let f = scan_input(f)?;
    let chunks = chunk_bounds(f);
    let found = par::map_slice(&chunks, |&(lo, hi)| scan(f, lo, hi));
    Ok(finish(found.into_iter().flatten().collect()))
}

/// Single-threaded [`circle_solutions`].
pub fn circle_solutions_seq(f: &BigInt) -> Result<Vec<Point>> {
    let f = scan_input(f)?;
    let r = radius(f);
    Ok(finish(scan(f, -r, r)))
}

// floor(sqrt(2F^2))
fn radius(f: i64) -> i64 {
    (2 * (f as u64) * (f as u64)).isqrt() as i64
}

fn chunk_bounds(f: i64) -> Vec<(i64, i64)> {
    let r = radius(f);
    let width = (2 * r + 1 + CHUNKS - 1) / CHUNKS;
    let mut out = Vec::new();
    let mut lo = -r;
    while lo <= r {
        let hi = (lo + width - 1).min(r);
        out.push((lo, hi));
        lo = hi + 1;
    }
    out
}

// Solutions with x = 2a - F in [lo, hi].
fn scan(f: i64, lo: i64, hi: i64) -> Vec<(i64, i64)> {
    let target = 2 * (f as u64) * (f as u64);
    let mut out = Vec::new();
    let mut x = lo;
    if (x - f).rem_euclid(2) != 0 {
        x += 1;
    }
    while x <= hi {
        let rest = target - (x.unsigned_abs() * x.unsigned_abs());
        let y = rest.isqrt();
        if y * y == rest {
            let y = y as i64;
            let a = (f + x) / 2;
            for y in [-y, y] {
                if (f + y) % 2 == 0 {
                    out.push((a, (f + y) / 2));
                }
            }
        }
        x += 2;
    }
    out
}

fn finish(mut pts: Vec<(i64, i64)>) -> Vec<Point> {
    pts.sort_unstable();
    pts.dedup();
    pts.into_iter().map(|(a, b)| Point::new(a, b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pts(v: &[(i64, i64)]) -> Vec<Point> {
        v.iter().map(|&(a, b)| Point::new(a, b)).collect()
    }

    #[test]
    fn small_circles() {
        let corners = |f: i64| pts(&[(0, 0), (0, f), (f, 0), (f, f)]);
        for f in [2, 7, 24] {
            let got = circle_solutions(&BigInt::from(f)).unwrap();
            assert_eq!(got, corners(f), "F={f}");
            assert_eq!(got, circle_solutions_seq(&BigInt::from(f)).unwrap());
        }
        let seven = circle_solutions(&BigInt::from(7)).unwrap();
        let positive: Vec<_> = seven.iter().filter(|p| p.is_positive()).collect();
        assert_eq!(positive, vec![&Point::new(7, 7)]);
    }

    #[test]
    fn circles_with_extra_points() {
        // F = 5: x^2 + y^2 = 50 has (±1, ±7), (±5, ±5), (±7, ±1)
        let got = circle_solutions(&BigInt::from(5)).unwrap();
        assert_eq!(
            got,
            pts(&[
                (-1, 2),
                (-1, 3),
                (0, 0),
                (0, 5),
                (2, -1),
                (2, 6),
                (3, -1),
                (3, 6),
                (5, 0),
                (5, 5),
                (6, 2),
                (6, 3)
            ])
        );
        assert!(got.iter().all(|p| p.on_circle(&BigInt::from(5))));
    }

    #[test]
    fn budget_and_precondition() {
        assert!(matches!(
            circle_solutions(&BigInt::from(CIRCLE_SCAN_LIMIT + 1)),
            Err(Error::Budget { .. })
        ));
        assert!(matches!(
            circle_solutions(&BigInt::from(0)),
            Err(Error::Precondition(_))
        ));
        assert!(circle_solutions(&BigInt::from(-3)).is_err());
    }

    #[test]
    fn point_json() {
        let p = Point::new(-1, 24);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, "[-1,24]");
        assert_eq!(serde_json::from_str::<Point>(&s).unwrap(), p);
        assert!(serde_json::from_str::<Point>("[1,2,3]").is_err());
    }
}
