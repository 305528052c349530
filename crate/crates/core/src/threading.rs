//! Worker-pool handling.
//!
//! `NETSYNC_THREADS` caps the number of rayon workers used by the network
//! right-hand sides. Parallel sections only ever write disjoint per-node
//! slices and never reduce across nodes, so results are bitwise identical
//! for any worker count.

use once_cell::sync::Lazy;
use rayon::ThreadPool;

/// Environment variable capping worker parallelism.
pub const THREADS_ENV: &str = "NETSYNC_THREADS";

static POOL: Lazy<ThreadPool> = Lazy::new(|| {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = configured_threads() {
        builder = builder.num_threads(n);
    }
    builder
        .thread_name(|i| format!("netsync-worker-{i}"))
        .build()
        .expect("failed to build worker pool")
});

fn configured_threads() -> Option<usize> {
    let raw = std::env::var(THREADS_ENV).ok()?;
    match raw.trim().parse::<usize>() {
        Ok(n) if n >= 1 => Some(n),
        _ => None,
    }
}

/// Runs `op` inside the shared worker pool.
pub fn install<R: Send>(op: impl FnOnce() -> R + Send) -> R {
    POOL.install(op)
}
