//! Exhaustive corpora of triangulations and the audits run over them.

pub mod appendix;
mod enumerate;
mod store;
pub mod verify;

pub use enumerate::{enumerate_by_flips, enumerate_mpg, enumerate_mpg_capped, CorpusSlice, DEFAULT_CAP};
pub use store::{load_slice, save_slice, slice_path};
pub use verify::{
    mismatch_count, theorem_sweep, verify_appendix1, verify_appendix2, verify_counts, verify_fwf22_counts, verify_order13_existence, verify_partition_tables,
    verify_table_counts, Status,
    VerificationReport,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("order {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("corpus incomplete: {0}")]
    CorpusIncomplete(String),
    #[error("computation failed: {0}")]
    Computation(String),
    #[error("corpus file: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, CorpusError>;
