//! Index-range sweeps over whole groups.
//!
//! With the `parallel` feature (on by default) sweeps run on the rayon pool;
//! without it only [`Execution::Sequential`] exists and everything runs on the
//! calling thread. Results are merged with an associative `reduce`, so both
//! paths return identical values.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Execution {
    /// Every strategy compiled into this build.
    pub fn available() -> &'static [Execution] {
        #[cfg(feature = "parallel")]
        {
            &[Execution::Sequential, Execution::Parallel]
        }
        #[cfg(not(feature = "parallel"))]
        {
            &[Execution::Sequential]
        }
    }
}

/// Folds `fold` over every index in `range`, merging partial results with
/// `reduce`. `reduce` must be associative with `identity()` as its unit.
pub fn fold_indices<T, I, F, R>(
    exec: Execution,
    range: Range<u64>,
    identity: I,
    fold: F,
    reduce: R,
) -> T
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    F: Fn(T, u64) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    #[cfg(not(feature = "parallel"))]
    let _ = reduce;
    match exec {
        Execution::Sequential => range.fold(identity(), fold),
        #[cfg(feature = "parallel")]
        Execution::Parallel => range
            .into_par_iter()
            .fold(&identity, &fold)
            .reduce(&identity, &reduce),
    }
}

/// Number of indices in `range` for which `pred` fails.
pub fn count_failures<P>(exec: Execution, range: Range<u64>, pred: P) -> u64
where
    P: Fn(u64) -> bool + Sync + Send,
{
    fold_indices(
        exec,
        range,
        || 0u64,
        |acc, x| acc + u64::from(!pred(x)),
        |a, b| a + b,
    )
}

/// Applies `f` to every index, keeping index order in the output.
pub fn map_indices<T, F>(exec: Execution, range: Range<u64>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    match exec {
        Execution::Sequential => range.map(f).collect(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => range.into_par_iter().map(f).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        for &exec in Execution::available() {
            let sum = fold_indices(exec, 0..1000, || 0u64, |a, x| a + x, |a, b| a + b);
            assert_eq!(sum, 499_500);
            assert_eq!(count_failures(exec, 0..100, |x| x % 10 != 0), 10);
            assert_eq!(map_indices(exec, 3..7, |x| x * 2), vec![6, 8, 10, 12]);
        }
    }
}
