//! Linear complementary dual (LCD) codes over GF(2) and GF(3).
//!
//! The crate is `no_std` and only needs `alloc`. It covers exact linear
//! algebra over the two small prime fields, the [`LinearCode`] abstraction
//! (minimum weight, dual distance, the Massey LCD test, shortening),
//! Griesmer-type bounds, simplex multiplicity codes, and the exhaustive
//! searches used to certify existence or nonexistence of LCD codes.
//!
//! File formats, certificates, parallel work splitting and the command-line
//! front end live in the companion `lcd-tools` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod code;
mod error;
pub mod field;
pub mod matrix;
pub(crate) mod packed;
pub mod search;
pub mod simplex;

pub use bounds::{BoundRule, BoundVerdict};
pub use code::{LinearCode, WeightSummary, DEFAULT_ENUMERATION_BUDGET};
pub use error::Error;
pub use field::FieldOrder;
pub use matrix::FqMatrix;
pub use simplex::{MultiplicityVector, WeightProfile};

pub type Result<T, E = Error> = core::result::Result<T, E>;
