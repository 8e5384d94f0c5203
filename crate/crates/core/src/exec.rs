//! Sequential or data-parallel evaluation of independent items.
//!
//! With the `parallel` feature off, [`Execution::Parallel`] runs sequentially.
//! Results always come back in input order.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// Whether this mode actually runs on the rayon pool in this build.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    pub(crate) fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Short-circuiting `all`.
    pub(crate) fn all<T, F>(self, items: &[T], pred: F) -> bool
    where
        T: Sync,
        F: Fn(&T) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().all(pred);
        }
        items.iter().all(pred)
    }

    /// Keeps the items of `range` accepted by `pred`, in ascending order.
    pub(crate) fn filter_range<F>(self, range: std::ops::Range<u64>, pred: F) -> Vec<u64>
    where
        F: Fn(u64) -> bool + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().filter(|&x| pred(x)).collect();
        }
        range.filter(|&x| pred(x)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let items: Vec<u32> = (0..1000).collect();
        for mode in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(
                mode.map(&items, |x| x * 2),
                items.iter().map(|x| x * 2).collect::<Vec<_>>()
            );
            assert!(mode.all(&items, |&x| x < 1000));
            assert!(!mode.all(&items, |&x| x < 999));
            assert_eq!(mode.filter_range(0..100, |x| x % 7 == 0).len(), 15);
        }
    }
}
