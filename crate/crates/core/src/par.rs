//! Data-parallel map helpers.
//!
//! With the `parallel` feature (on by default) work is spread over the rayon
//! pool; without it every helper is a plain sequential iterator. Results are
//! always returned in input order.

use std::ops::RangeInclusive;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `range`, in parallel when the feature is enabled.
pub fn map_range<T, F>(range: RangeInclusive<u32>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u32) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        range.into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        map_range_seq(range, f)
    }
}

/// Sequential counterpart of [`map_range`], always available.
pub fn map_range_seq<T, F>(range: RangeInclusive<u32>, f: F) -> Vec<T>
where
    F: Fn(u32) -> T,
{
    range.map(f).collect()
}

/// Maps `f` over a slice of work items, in parallel when the feature is enabled.
pub fn map_slice<I, T, F>(items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Whether this build spreads work over threads.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
