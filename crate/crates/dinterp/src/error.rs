//! Error types shared by the interpolation modules.

use std::fmt;

/// Errors raised by field construction, similarity evaluation, and the
/// interpolation engines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Channel lengths, grid dimensions, or sample/field sizes disagree.
    ShapeMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    /// A grid node has zero total raw subdomain weight; every point must
    /// belong to at least one subdomain.
    ZeroCoverage { node: usize },
    /// A coordinate falls outside the field extent `[0, max]`.
    OutOfExtent { x: f64, max: f64 },
    /// Both straddling similarity metrics are (numerically) zero, so the
    /// pairwise normalization is undefined; callers fall back to the
    /// standard hat kernel.
    DegenerateNeighborhood { x: f64 },
    /// The output refinement factor does not divide the domain refinement,
    /// so output positions would miss the high-resolution domain lines.
    FactorIncompatible { factor: usize, refinement: usize },
    /// A NaN or infinite value where a finite one is required.
    NonFinite { what: &'static str, index: usize },
    /// A configuration field violates its invariant.
    InvalidConfig { what: &'static str },
    /// Evaluation positions must be strictly increasing.
    UnsortedPositions { index: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ShapeMismatch {
                what,
                expected,
                found,
            } => write!(f, "shape mismatch in {what}: expected {expected}, found {found}"),
            Error::ZeroCoverage { node } => {
                write!(f, "all raw subdomain channels are zero at node {node}")
            }
            Error::OutOfExtent { x, max } => {
                write!(f, "coordinate {x} outside field extent [0, {max}]")
            }
            Error::DegenerateNeighborhood { x } => {
                write!(f, "degenerate similarity neighborhood at x = {x}")
            }
            Error::FactorIncompatible { factor, refinement } => write!(
                f,
                "output factor {factor} does not divide domain refinement {refinement}"
            ),
            Error::NonFinite { what, index } => {
                write!(f, "non-finite value in {what} at index {index}")
            }
            Error::InvalidConfig { what } => write!(f, "invalid configuration: {what}"),
            Error::UnsortedPositions { index } => {
                write!(f, "positions must be strictly increasing (violation at index {index})")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
