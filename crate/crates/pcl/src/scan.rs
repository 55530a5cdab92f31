//! Partitioned full-space scans.
//!
//! Scans over the `2^n` word space are split into contiguous ranges, one
//! per worker thread, and the per-range results are reduced in range
//! order so every outcome (including "first witness" style answers) is
//! deterministic. The `PCL_THREADS` environment variable caps the number
//! of workers.

use std::ops::Range;

pub(crate) fn thread_count() -> usize {
    if let Ok(v) = std::env::var("PCL_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            return n.max(1);
        }
    }
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
}

/// Runs `chunk_fn` over a partition of `0..total` and returns the
/// per-chunk results in ascending range order.
pub(crate) fn par_scan<R, F>(total: u64, chunk_fn: F) -> Vec<R>
where
    R: Send,
    F: Fn(Range<u64>) -> R + Sync,
{
    let threads = thread_count().min(total.max(1) as usize).max(1);
    if threads == 1 {
        return vec![chunk_fn(0..total)];
    }
    let chunk = total.div_ceil(threads as u64);
    std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads as u64)
            .map(|i| {
                let lo = (i * chunk).min(total);
                let hi = ((i + 1) * chunk).min(total);
                let f = &chunk_fn;
                s.spawn(move || f(lo..hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    })
}
