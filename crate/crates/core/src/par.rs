//! Order-preserving map over independent work items.
//!
//! With the `parallel` feature the work runs on a rayon pool; without it
//! everything runs on the calling thread. Output order always matches input
//! order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items` using up to `threads` workers.
pub fn map_ordered<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if threads > 1 && items.len() > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .expect("failed to build worker pool");
            return pool.install(|| items.par_iter().map(&f).collect());
        }
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    items.iter().map(f).collect()
}

/// Maps `f` over `lo..hi` on the ambient pool (global rayon pool, or the
/// calling thread without the `parallel` feature).
pub fn map_range<R, F>(lo: usize, hi: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (lo..hi).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (lo..hi).map(f).collect()
    }
}

pub fn available_threads() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}
