//! Maybe-parallel helpers for the exhaustive sweeps. With the `parallel`
//! feature [`map_indexed`] fans out on rayon; otherwise it is the sequential
//! loop. [`map_indexed_seq`] is always sequential and exists so benchmarks
//! can compare the two paths within one build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub(crate) fn map_indexed<T, F>(len: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    (0..len).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub(crate) fn map_indexed<T, F>(len: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    map_indexed_seq(len, f)
}

pub(crate) fn map_indexed_seq<T, F>(len: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..len).map(f).collect()
}
