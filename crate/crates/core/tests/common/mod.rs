//! Independent oracles shared by the integration suites. Nothing here calls
//! into the code paths it is used to check.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use abelquad::feasibility::Point;

pub fn fact(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

pub fn binom(n: u64, k: u64) -> BigInt {
    fact(n) / (fact(k) * fact(n - k))
}

/// `Σ_{k=0}^{d} binom(2d+2,k) (-2)^{d-k}` term by term, binomials from factorials.
pub fn f_by_summation(d: u64) -> BigInt {
    (0..=d)
        .map(|k| binom(2 * d + 2, k) * BigInt::from(-2).pow((d - k) as u32))
        .sum()
}

/// Every `(a, b)` in `[lo, hi]²` with `a² + b² = F(a + b)`.
pub fn circle_double_loop(f: i64, lo: i64, hi: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a in lo..=hi {
        for b in lo..=hi {
            if a * a + b * b == f * (a + b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// For each `a` in `[-2F, 3F]`, solve `b² - Fb + (a² - Fa) = 0` with the
/// quadratic formula.
pub fn circle_by_rows(f: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a in -2 * f..=3 * f {
        let disc = f * f - 4 * (a * a - f * a);
        if disc < 0 {
            continue;
        }
        let mut r = (disc as f64).sqrt() as i64;
        while r * r > disc {
            r -= 1;
        }
        while (r + 1) * (r + 1) <= disc {
            r += 1;
        }
        if r * r != disc {
            continue;
        }
        let mut roots = vec![f - r, f + r];
        roots.dedup();
        for twice_b in roots {
            if twice_b % 2 == 0 {
                out.push((a, twice_b / 2));
            }
        }
    }
    out.sort();
    out
}

pub fn as_pairs(points: &[Point]) -> Vec<(i64, i64)> {
    points
        .iter()
        .map(|p| (p.a.to_i64().unwrap(), p.b.to_i64().unwrap()))
        .collect()
}

/// Divisibility chains of length `g` with product `h0`, by trying every
/// `g`-tuple of divisors of `h0`.
pub fn chains_brute_force(g: usize, h0: u64) -> Vec<Vec<u64>> {
    let divisors: Vec<u64> = (1..=h0).filter(|x| h0.is_multiple_of(*x)).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; g];
    loop {
        let t: Vec<u64> = idx.iter().map(|&i| divisors[i]).collect();
        if t.iter().product::<u64>() == h0 && t.windows(2).all(|w| w[1] % w[0] == 0) {
            out.push(t);
        }
        let mut pos = 0;
        loop {
            if pos == g {
                out.sort();
                return out;
            }
            idx[pos] += 1;
            if idx[pos] < divisors.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
