//! Execution policy for the data-parallel loops.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] fans
//! work out over the rayon global pool. Without it, both variants run
//! sequentially, so callers never need their own `cfg` switches.

use crate::compensated::KahanSum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// Order-preserving map.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// Order-preserving map over `0..n`.
    pub fn map_range<U, F>(self, n: usize, f: F) -> Vec<U>
    where
        U: Send,
        F: Fn(usize) -> U + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                (0..n).into_par_iter().map(f).collect()
            }
            _ => (0..n).map(f).collect(),
        }
    }

    /// Compensated sum of `term(k)` for `k` in `start..=end`.
    ///
    /// The range is cut into fixed-size chunks regardless of policy and
    /// chunk sums are merged in index order, so both variants return the
    /// same bits.
    pub fn sum_range<F>(self, start: u64, end: u64, term: F) -> f64
    where
        F: Fn(u64) -> f64 + Sync + Send,
    {
        const CHUNK: u64 = 1 << 14;
        if end < start {
            return 0.0;
        }
        let chunks = ((end - start) / CHUNK + 1) as usize;
        let partial = |c: usize| {
            let lo = start + c as u64 * CHUNK;
            let hi = (lo + CHUNK - 1).min(end);
            (lo..=hi).map(&term).collect::<KahanSum>()
        };
        let mut total = KahanSum::new();
        for s in self.map_range(chunks, partial) {
            total.merge(s);
        }
        total.value()
    }
}
