//! Command-line workbench for `igr-core`: weight parsing, JSON/LaTeX/table
//! output, and the verification sweeps behind `igr kp verify` and `igr accept`.

pub mod commands;
pub mod error;
pub mod format;
pub mod parse;
pub mod suites;

pub use error::{CliError, Result};

/// Environment variable holding the worker-thread count for parallel sweeps.
pub const THREADS_ENV: &str = "IGR_THREADS";

/// Size the global rayon pool from `IGR_THREADS` (unset or 0: one per core).
/// Later calls are no-ops.
pub fn init_threads() -> Result<()> {
    let n = match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Input(format!("{THREADS_ENV}={v:?} is not a thread count")))?,
        Err(_) => 0,
    };
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}
