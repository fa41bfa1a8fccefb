//! Thin dispatch layer between rayon and plain iteration.
//!
//! Each helper has identical semantics in both builds; rayon's ordered
//! collect keeps results positionally deterministic, and all reductions
//! used in this crate are exact and associative, so feature choice never
//! changes any computed value.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over a slice, collecting in input order.
pub fn map_slice<T: Sync, U: Send, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U + Sync + Send,
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

/// Sequential twin of [`map_slice`], always available for benchmarks
/// and as the fallback path.
pub fn map_slice_seq<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

/// Runtime-selectable dispatch for entry points that expose an explicit
/// sequential variant.
pub fn map_slice_in<T: Sync, U: Send, F>(parallel: bool, items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U + Sync + Send,
{
    if parallel {
        map_slice(items, f)
    } else {
        map_slice_seq(items, f)
    }
}
