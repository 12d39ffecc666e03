//! Data-parallel helpers: rayon when the `parallel` feature is on, plain
//! iteration otherwise. Results are identical in both modes.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Applies `f` to every element of `items`.
pub fn for_each_mut<T: Send, F>(items: &mut [T], f: F)
where
    F: Fn(&mut T) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    items.par_iter_mut().for_each(f);
    #[cfg(not(feature = "parallel"))]
    items.iter_mut().for_each(f);
}

/// Maps `f` over `items`, preserving order.
pub fn map<T: Sync, U: Send, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().map(f).collect();
    #[cfg(not(feature = "parallel"))]
    return items.iter().map(f).collect();
}

/// Whether the parallel backend was compiled in.
pub const fn enabled() -> bool {
    cfg!(feature = "parallel")
}

/// Sets the worker count of the global pool; a no-op in sequential builds.
/// Fails if the pool was already started with a different size.
pub fn configure_threads(n: usize) -> crate::Result<()> {
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| crate::Error::InvalidArgument(format!("cannot size worker pool: {e}")))?;
    #[cfg(not(feature = "parallel"))]
    let _ = n;
    Ok(())
}
