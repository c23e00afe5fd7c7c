//! Companion crate to `lcd-core`: matrix files, JSON certificates, parallel
//! search splitting, embedded reference data and the table verification
//! harness behind the `lcd` binary.

pub mod certificate;
mod error;
pub mod family;
pub mod format;
pub mod heuristic;
pub mod paper;
pub mod parallel;
pub mod verify;

pub use error::{Error, Result};

/// Environment variable overriding the default node budget.
pub const BUDGET_ENV: &str = "LCD_NODE_BUDGET";
