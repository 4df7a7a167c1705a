//! Processing many documents at once.
//!
//! With the `parallel` feature (on by default) documents are spread over a
//! rayon thread pool; without it they are processed one after another.
//! Results always come back in input order.

use crate::error::Result;
use crate::sentence::{parse_sentence, Sentence};

/// Applies `f` to every item, in parallel when the `parallel` feature is
/// enabled. The output is in input order either way.
pub fn map_ordered<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Sequential counterpart of [`map_ordered`], available regardless of
/// features.
pub fn map_sequential<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Parses every document.
pub fn parse_all<S: AsRef<str> + Sync>(docs: &[S]) -> Vec<Result<Sentence>> {
    map_ordered(docs, |d| parse_sentence(d.as_ref(), None))
}

/// Parses every document on the calling thread.
pub fn parse_all_sequential<S: AsRef<str>>(docs: &[S]) -> Vec<Result<Sentence>> {
    map_sequential(docs, |d| parse_sentence(d.as_ref(), None))
}
