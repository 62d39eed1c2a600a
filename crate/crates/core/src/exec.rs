//! Sequential / rayon execution switch for the data-parallel loops.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How batch work and BFS frontier expansion run.
///
/// Results are identical under every variant; only wall-clock time differs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    /// Rayon global pool. Only present with the `parallel` feature.
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        return Exec::Parallel;
        #[cfg(not(feature = "parallel"))]
        return Exec::Sequential;
    }
}

impl Exec {
    /// Order-preserving map over a slice.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => items.par_iter().map(f).collect(),
            Exec::Sequential => items.iter().map(f).collect(),
        }
    }

    pub fn is_parallel(self) -> bool {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => true,
            Exec::Sequential => false,
        }
    }
}
