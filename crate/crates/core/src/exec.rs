//! Execution backends for per-vertex work.
//!
//! With the `parallel` feature, [`Executor`] maps over index lists on a
//! dedicated rayon pool. Without it, or with a single worker, the same
//! closures run sequentially. Results are collected in input order either
//! way, so callers see identical output for any worker count.

use thiserror::Error;

#[derive(Debug, Error)]
#[error("failed to start worker pool: {0}")]
pub struct ExecError(String);

/// How per-vertex work is scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    /// Run on the calling thread.
    Sequential,
    /// Run on a pool of this many workers; 0 picks the available parallelism.
    Threads(usize),
    /// Same as `Threads(0)`.
    #[default]
    Auto,
}

impl Execution {
    /// `0` means auto, `1` means sequential.
    pub fn from_thread_count(threads: usize) -> Self {
        match threads {
            0 => Self::Auto,
            1 => Self::Sequential,
            n => Self::Threads(n),
        }
    }
}

pub struct Executor {
    #[cfg(feature = "parallel")]
    pool: Option<rayon::ThreadPool>,
}

impl Executor {
    pub fn new(execution: Execution) -> Result<Self, ExecError> {
        #[cfg(feature = "parallel")]
        {
            let threads = match execution {
                Execution::Sequential => return Ok(Self { pool: None }),
                Execution::Threads(n) => n,
                Execution::Auto => 0,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .thread_name(|i| format!("gcf-worker-{i}"))
                .build()
                .map_err(|e| ExecError(e.to_string()))?;
            Ok(Self { pool: Some(pool) })
        }
        #[cfg(not(feature = "parallel"))]
        {
            let _ = execution;
            Ok(Self {})
        }
    }

    pub fn sequential() -> Self {
        Self {
            #[cfg(feature = "parallel")]
            pool: None,
        }
    }

    /// Number of workers that will run jobs.
    pub fn workers(&self) -> usize {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            return pool.current_num_threads();
        }
        1
    }

    /// `indices.iter().map(f).collect()`, possibly split across workers.
    pub fn map<T, F>(&self, indices: &[usize], f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            use rayon::prelude::*;
            return pool.install(|| indices.par_iter().map(|&i| f(i)).collect());
        }
        indices.iter().map(|&i| f(i)).collect()
    }

    /// `(0..n).map(f).collect()`, possibly split across workers.
    pub fn map_range<T, F>(&self, n: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if let Some(pool) = &self.pool {
            use rayon::prelude::*;
            return pool.install(|| (0..n).into_par_iter().map(&f).collect());
        }
        (0..n).map(f).collect()
    }
}

impl std::fmt::Debug for Executor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Executor")
            .field("workers", &self.workers())
            .finish()
    }
}
