//! Execution mode for the data-parallel sweeps.
//!
//! Every sweep in the crate takes an [`Exec`]. With the `parallel` feature
//! (default) `Exec::Parallel` runs on the rayon pool; without it both modes run
//! the same sequential code. Results never depend on the mode or thread count:
//! reductions are only ever associative-commutative merges (sums, multiset
//! unions) or order-preserving collects.

use std::ops::Range;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when this mode actually fans out to worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }

    /// Split `range` into contiguous chunks, evaluate `map` on each and fold the
    /// partial results with `reduce` in chunk order.
    pub fn map_reduce<T, M, R>(
        self,
        range: Range<u64>,
        chunk: u64,
        identity: T,
        map: M,
        reduce: R,
    ) -> T
    where
        T: Send + Clone,
        M: Fn(Range<u64>) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        let chunk = chunk.max(1);
        let chunks: Vec<Range<u64>> = chunk_ranges(range, chunk);
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            let parts: Vec<T> = chunks.into_par_iter().map(&map).collect();
            return parts.into_iter().fold(identity, &reduce);
        }
        chunks.into_iter().map(map).fold(identity, reduce)
    }

    /// Order-preserving parallel map over a slice.
    pub fn map_collect<I, O, F>(self, items: &[I], f: F) -> Vec<O>
    where
        I: Sync,
        O: Send,
        F: Fn(&I) -> O + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Short-circuiting existence test over an index range.
    pub fn any(self, range: Range<u64>, pred: impl Fn(u64) -> bool + Sync + Send) -> bool {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return range.into_par_iter().any(pred);
        }
        range.into_iter().any(pred)
    }

    /// Number of worker threads this mode will use.
    pub fn threads(self) -> usize {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return rayon::current_num_threads();
        }
        1
    }
}

/// Contiguous chunking of `range` into pieces of at most `chunk` elements.
pub fn chunk_ranges(range: Range<u64>, chunk: u64) -> Vec<Range<u64>> {
    let mut out = Vec::new();
    let mut start = range.start;
    while start < range.end {
        let end = (start + chunk).min(range.end);
        out.push(start..end);
        start = end;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_on_sums() {
        let f = |r: Range<u64>| r.map(|i| i * i % 7).sum::<u64>();
        let a = Exec::Sequential.map_reduce(0..10_000, 333, 0, f, |a, b| a + b);
        let b = Exec::Parallel.map_reduce(0..10_000, 333, 0, f, |a, b| a + b);
        assert_eq!(a, b);
    }

    #[test]
    fn chunking_covers_range() {
        let c = chunk_ranges(3..20, 5);
        assert_eq!(c, vec![3..8, 8..13, 13..18, 18..20]);
        assert!(chunk_ranges(4..4, 3).is_empty());
    }
}
