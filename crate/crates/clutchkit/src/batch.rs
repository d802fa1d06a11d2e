//! Batch reduction of per-sample defects.
//!
//! Sample lists are produced by sequential seeded streams; only the fold is
//! parallel. Max and min are associative and commutative on non-NaN floats,
//! so serial and parallel folds report identical values. NaN poisons a fold
//! to +inf (max) or -inf (min) so that a broken evaluation can never pass.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[inline]
fn guard_max(d: f64) -> f64 {
    if d.is_nan() {
        f64::INFINITY
    } else {
        d
    }
}

#[inline]
fn guard_min(d: f64) -> f64 {
    if d.is_nan() {
        f64::NEG_INFINITY
    } else {
        d
    }
}

/// Sequential max-fold, always available.
pub fn max_defect_serial<T: Sync, F: Fn(&T) -> f64 + Sync>(items: &[T], f: F) -> f64 {
    items.iter().map(|t| guard_max(f(t))).fold(0.0, f64::max)
}

/// Parallel max-fold over the current rayon pool.
#[cfg(feature = "parallel")]
pub fn max_defect_parallel<T: Sync, F: Fn(&T) -> f64 + Sync>(items: &[T], f: F) -> f64 {
    items.par_iter().map(|t| guard_max(f(t))).reduce(|| 0.0, f64::max)
}

/// Max defect over `items`; parallel when the `parallel` feature is on.
pub fn max_defect<T: Sync, F: Fn(&T) -> f64 + Sync>(items: &[T], f: F) -> f64 {
    #[cfg(feature = "parallel")]
    {
        max_defect_parallel(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        max_defect_serial(items, f)
    }
}

/// Sequential min-fold (identity +inf).
pub fn min_value_serial<T: Sync, F: Fn(&T) -> f64 + Sync>(items: &[T], f: F) -> f64 {
    items
        .iter()
        .map(|t| guard_min(f(t)))
        .fold(f64::INFINITY, f64::min)
}

/// Parallel min-fold.
#[cfg(feature = "parallel")]
pub fn min_value_parallel<T: Sync, F: Fn(&T) -> f64 + Sync>(items: &[T], f: F) -> f64 {
    items
        .par_iter()
        .map(|t| guard_min(f(t)))
        .reduce(|| f64::INFINITY, f64::min)
}

/// Min value over `items`; parallel when the `parallel` feature is on.
pub fn min_value<T: Sync, F: Fn(&T) -> f64 + Sync>(items: &[T], f: F) -> f64 {
    #[cfg(feature = "parallel")]
    {
        min_value_parallel(items, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        min_value_serial(items, f)
    }
}
