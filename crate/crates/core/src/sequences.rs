//! Factorials, the exponential bound `2^{3d+1}` on `F_d`, the dimension where
//! `(d+1)!` overtakes it, and Fine numbers.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::chow::f_closed;
use crate::error::{Error, Result};

/// Largest semilength accepted by [`fine_oracle`].
pub const FINE_ORACLE_MAX: u32 = 14;

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `2^{3d+1}`, the term-by-term bound `Σ binom(2d+2,k) 2^d ≤ 2^d 2^{2d+1}`.
pub fn crude_bound(d: u32) -> Result<BigInt> {
    if d == 0 {
        return Err(Error::Precondition("d must be at least 1".into()));
    }
    Ok(BigInt::one() << (3 * d as usize + 1))
}

/// How `F_d` compares against the crude bound and against `(d+1)!`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub d: u32,
    #[serde(with = "crate::bigint_serde")]
    pub f_d: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub crude: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub factorial_next: BigInt,
    pub crude_dominates: bool,
    pub factorial_wins_exact: bool,
    pub factorial_wins_crude: bool,
}

pub fn bound_report(d: u32) -> Result<BoundReport> {
    let f_d = f_closed(d)?;
    let crude = crude_bound(d)?;
    let factorial_next = factorial(d + 1);
    Ok(BoundReport {
        d,
        crude_dominates: f_d <= crude,
        factorial_wins_exact: factorial_next > f_d,
        factorial_wins_crude: factorial_next > crude,
        f_d,
        crude,
        factorial_next,
    })
}

/// Smallest `d` with `(d+1)! > 2^{3d+1}`, after checking that the inequality
/// keeps holding for every dimension from there up to `limit`.
pub fn counting_crossover(limit: u32) -> Result<u32> {
    if limit < 17 {
        return Err(Error::Precondition(format!(
            "crossover search limit must be at least 17, got {limit}"
        )));
    }
    let wins = |d: u32| -> Result<bool> { Ok(factorial(d + 1) > crude_bound(d)?) };
    let mut first = None;
    for d in 1..=limit {
        if wins(d)? {
            first = Some(d);
            break;
        }
    }
    let first = first.ok_or_else(|| {
        Error::Invariant(format!("(d+1)! never exceeds 2^(3d+1) for d <= {limit}"))
    })?;
    // Exhaustive replacement for the induction step.
    let mut fact = factorial(first + 1);
    let mut crude = crude_bound(first)?;
    for d in first..=limit {
        if fact <= crude {
            return Err(Error::Invariant(format!(
                "(d+1)! <= 2^(3d+1) again at d = {d}"
            )));
        }
        fact *= d + 2;
        crude <<= 3;
    }
    Ok(first)
}

/// Number of Dyck paths of semilength `n` with no hill, found by listing every
/// Dyck path explicitly.
pub fn fine_oracle(n: u32) -> Result<u64> {
    if n > FINE_ORACLE_MAX {
        return Err(Error::Budget {
            what: format!("Dyck path enumeration at semilength {n}"),
            budget: FINE_ORACLE_MAX.to_string(),
        });
    }
    let mut path = Vec::with_capacity(2 * n as usize);
    let mut count = 0u64;
    enumerate_dyck(n as usize, 0, 0, &mut path, &mut |p| {
        if !has_hill(p) {
            count += 1;
        }
    });
    Ok(count)
}

// `true` is an up step.
fn enumerate_dyck(
    n: usize,
    ups: usize,
    height: usize,
    path: &mut Vec<bool>,
    visit: &mut impl FnMut(&[bool]),
) {
    if path.len() == 2 * n {
        visit(path);
        return;
    }
    if ups < n {
        path.push(true);
        enumerate_dyck(n, ups + 1, height + 1, path, visit);
        path.pop();
    }
    if height > 0 {
        path.push(false);
        enumerate_dyck(n, ups, height - 1, path, visit);
        path.pop();
    }
}

fn has_hill(path: &[bool]) -> bool {
    let mut height = 0usize;
    for pair in path.windows(2) {
        if height == 0 && pair[0] && !pair[1] {
            return true;
        }
        height = if pair[0] { height + 1 } else { height - 1 };
    }
    false
}

/// Fine numbers by dynamic programming over the height profile.
pub fn fine(n: u32) -> BigInt {
    let n = n as usize;
    // by_height[h] = [paths whose last step is anything but a rise from the
    // ground, paths that just rose from height 0 to 1]
    let mut by_height = vec![[BigInt::zero(), BigInt::zero()]; n + 2];
    by_height[0][0] = BigInt::one();
    for step in 0..2 * n {
        let mut next = vec![[BigInt::zero(), BigInt::zero()]; n + 2];
        let max_h = step.min(2 * n - step);
        for h in 0..=max_h.min(n) {
            let [plain, risen] = &by_height[h];
            let total = plain + risen;
            if total.is_zero() {
                continue;
            }
            if h < n {
                let slot = usize::from(h == 0);
                next[h + 1][slot] += &total;
            }
            if h > 0 {
                // stepping down right after a rise from the ground closes a hill
                let allowed = if h == 1 { plain.clone() } else { total };
                next[h - 1][0] += allowed;
            }
        }
        by_height = next;
    }
    by_height.swap_remove(0)[0].clone()
}

/// One row of the side-by-side listing of `F_d` and Fine numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FineRow {
    pub n: u32,
    #[serde(with = "crate::bigint_serde")]
    pub f_d: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub fine: BigInt,
}

/// `F_n` next to the `n`-th Fine number for `1 ≤ n ≤ d_max`. No identity
/// between the columns is asserted.
pub fn fine_comparison_report(d_max: u32) -> Result<Vec<FineRow>> {
    if d_max == 0 {
        return Err(Error::Precondition("d_max must be at least 1".into()));
    }
    (1..=d_max)
        .map(|n| {
            Ok(FineRow {
                n,
                f_d: f_closed(n)?,
                fine: fine(n),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(4), BigInt::from(24));
        let iterative: u64 = (1..=18u64).product();
        assert_eq!(iterative, 6_402_373_705_728_000);
        assert_eq!(factorial(18), BigInt::from(iterative));
    }

    #[test]
    fn crude_bounds() {
        assert_eq!(crude_bound(1).unwrap(), BigInt::from(16));
        assert_eq!(crude_bound(17).unwrap(), BigInt::from(1u64 << 52));
        assert_eq!(crude_bound(3).unwrap(), BigInt::from(1024));
        assert!(crude_bound(0).is_err());
    }

    #[test]
    fn crossover() {
        assert_eq!(counting_crossover(100).unwrap(), 17);
        assert_eq!(counting_crossover(17).unwrap(), 17);
        assert!(counting_crossover(16).is_err());
        // d = 16: 17! = 355687428096000 < 2^49 = 562949953421312
        assert!(factorial(17) < crude_bound(16).unwrap());
        assert!(!bound_report(16).unwrap().factorial_wins_crude);
    }

    #[test]
    fn bound_report_fields() {
        let r = bound_report(3).unwrap();
        assert_eq!(r.f_d, BigInt::from(24));
        assert_eq!(r.factorial_next, BigInt::from(24));
        assert!(!r.factorial_wins_exact);
        assert!(r.crude_dominates);
        let r = bound_report(4).unwrap();
        assert!(r.factorial_wins_exact && !r.factorial_wins_crude);
    }

    #[test]
    fn fine_small_values() {
        assert_eq!(fine_oracle(0).unwrap(), 1);
        assert_eq!(fine_oracle(1).unwrap(), 0);
        assert_eq!(fine_oracle(2).unwrap(), 1);
        assert_eq!(fine_oracle(3).unwrap(), 2);
        assert_eq!(fine_oracle(4).unwrap(), 6);
        assert_eq!(fine(0), BigInt::from(1));
        assert_eq!(fine(1), BigInt::from(0));
        assert!(fine_oracle(FINE_ORACLE_MAX + 1).is_err());
    }

    #[test]
    fn fine_matches_enumeration() {
        for n in 0..=12 {
            assert_eq!(fine(n), BigInt::from(fine_oracle(n).unwrap()), "n={n}");
        }
    }

    #[test]
    fn comparison_report() {
        let rows = fine_comparison_report(3).unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0].f_d, BigInt::from(2));
        assert_eq!(rows[1].f_d, BigInt::from(7));
        assert_eq!(rows[2].f_d, BigInt::from(24));
        assert_eq!(fine_comparison_report(1).unwrap()[0].fine, BigInt::from(0));
        assert!(fine_comparison_report(0).is_err());
    }
}
