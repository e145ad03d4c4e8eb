//! Thin indirection over rayon so every caller has a sequential fallback.

/// Caps the width of data-parallel sweeps at `n` worker threads. Must be
/// called before the first parallel sweep; a no-op when the `parallel`
/// feature is disabled.
#[cfg(feature = "parallel")]
pub fn configure_threads(n: usize) -> crate::Result<()> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| crate::Error::InvalidParams(format!("thread pool setup failed: {e}")))
}

/// Caps the width of data-parallel sweeps at `n` worker threads. Must be
/// called before the first parallel sweep; a no-op when the `parallel`
/// feature is disabled.
#[cfg(not(feature = "parallel"))]
pub fn configure_threads(_n: usize) -> crate::Result<()> {
    Ok(())
}

#[cfg(feature = "parallel")]
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Serial map with the same shape as `map_collect`, for parallel-vs-serial
/// comparisons regardless of enabled features.
pub(crate) fn map_collect_serial<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
