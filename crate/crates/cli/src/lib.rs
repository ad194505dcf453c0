//! Driver behind the `zgkh` binary: job specs, the result cache and batch runs.

pub mod batch;
pub mod cache;
pub mod error;
pub mod job;

pub use batch::batch;
pub use cache::Cache;
pub use error::CliError;
pub use job::{run, Command, Emit, Input, JobSpec};

/// Overrides the default cache directory when `--cache` is not given.
pub const CACHE_ENV: &str = "ZGKH_CACHE_DIR";
