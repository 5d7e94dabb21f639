//! Crate-wide error type.

use alloc::string::String;
use core::fmt;

/// Errors reported by constructors and by the series/operator layer.
///
/// Most of the library is total on valid inputs; errors arise from malformed
/// text or structurally impossible requests (adding operators of different
/// degree shifts, reading a series coefficient outside its tracked window).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Not a weakly decreasing sequence of positive integers.
    InvalidPartition(String),
    /// An operation that needs at least one part was given the empty
    /// partition.
    EmptyPartition,
    /// Ribbon size or descent set out of range.
    InvalidRibbon(String),
    /// `add` of two operators whose degree shifts differ.
    ShiftMismatch { left: i64, right: i64 },
    /// A truncated series was asked for a coefficient beyond its window.
    Window { required: i64, lo: i64, hi: i64 },
    /// `mul`/`perp` operators require a homogeneous symmetric function.
    NonHomogeneous,
    /// A conversion produced a rational coefficient where an integral one was
    /// required.
    NonIntegral(String),
    /// `run_suite` was given a name that is not in the registry.
    UnknownSuite(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPartition(s) => write!(f, "invalid partition: {s}"),
            Error::EmptyPartition => write!(f, "the empty partition has no first row or column"),
            Error::InvalidRibbon(s) => write!(f, "invalid ribbon: {s}"),
            Error::ShiftMismatch { left, right } => write!(
                f,
                "cannot add operators of degree shift {left} and {right}"
            ),
            Error::Window { required, lo, hi } => write!(
                f,
                "series coefficient z^{required} requested outside the exact window [{lo}, {hi}]"
            ),
            Error::NonHomogeneous => {
                write!(f, "a homogeneous symmetric function is required here")
            }
            Error::NonIntegral(s) => write!(f, "non-integral coefficient: {s}"),
            Error::UnknownSuite(s) => write!(f, "unknown suite {s:?}"),
        }
    }
}

impl core::error::Error for Error {}
