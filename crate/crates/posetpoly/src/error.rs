//! Error and validation-report types shared across the crate.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A single violated invariant of a marked poset, naming the offending
/// elements. Violations are data: `validate` collects them instead of
/// failing on the first one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateElement { id: String },
    UnknownElement { id: String, context: &'static str },
    SelfCover { id: String },
    DuplicateCover { lower: String, upper: String },
    CoverCycle { id: String },
    ImpliedCover { lower: String, upper: String },
    MissingMinimalMark { id: String },
    MissingMaximalMark { id: String },
    NegativeMark { id: String, value: i64 },
    NonMonotoneMarking { lower: String, upper: String, lower_value: i64, upper_value: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateElement { id } => write!(f, "duplicate element {id:?}"),
            Violation::UnknownElement { id, context } => {
                write!(f, "unknown element {id:?} referenced in {context}")
            }
            Violation::SelfCover { id } => write!(f, "self cover on {id:?}"),
            Violation::DuplicateCover { lower, upper } => {
                write!(f, "duplicate cover ({lower:?}, {upper:?})")
            }
            Violation::CoverCycle { id } => write!(f, "cover digraph has a cycle through {id:?}"),
            Violation::ImpliedCover { lower, upper } => {
                write!(f, "cover ({lower:?}, {upper:?}) is implied by other covers")
            }
            Violation::MissingMinimalMark { id } => write!(f, "A lacks minimal element {id:?}"),
            Violation::MissingMaximalMark { id } => write!(f, "A lacks maximal element {id:?}"),
            Violation::NegativeMark { id, value } => {
                write!(f, "mark {value} on {id:?} is negative")
            }
            Violation::NonMonotoneMarking { lower, upper, lower_value, upper_value } => write!(
                f,
                "marking not monotone on ({lower:?}, {upper:?}): {lower_value} > {upper_value}"
            ),
        }
    }
}

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The poset data violates the marked-poset invariants.
    Invalid(Vec<Violation>),
    /// An element id that does not exist in the poset.
    UnknownElement(String),
    /// The operation requires a marked element.
    NotMarked(String),
    /// The operation requires a regular marked poset.
    NotRegular(String),
    /// A marking whose domain or values do not fit the poset's marked set.
    MarkingNotInQa(String),
    /// The operation requires a normalized marking (some mark equal to zero).
    NotNormalized,
    /// Merging two equal marks would create a cycle.
    MergeWouldCycle { first: String, second: String },
    /// Comparable equal marks present; collapse_equal_chains must run first.
    CollapseRequired { first: String, second: String },
    /// The poset has a star relation, so the polytopes are not equivalent.
    StarPresent { center: String },
    /// A hard resource guard was exceeded; never partial output.
    ResourceExceeded { what: &'static str, limit: u64 },
    /// The H-representation describes an unbounded polyhedron.
    Unbounded,
    /// The polytope is not full-dimensional in its ambient space.
    NotFullDimensional { ambient: usize, actual: usize },
    /// Two point sets live over different coordinate lists.
    CoordinateMismatch,
    /// Parts do not sum to the decomposed marking.
    PartsDoNotSum,
    /// A family generator was given out-of-contract parameters.
    InvalidParameter(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Invalid(violations) => {
                write!(f, "invalid marked poset:")?;
                for v in violations {
                    write!(f, "\n  - {v}")?;
                }
                Ok(())
            }
            Error::UnknownElement(id) => write!(f, "unknown element {id:?}"),
            Error::NotMarked(id) => write!(f, "element {id:?} is not marked"),
            Error::NotRegular(why) => write!(f, "poset is not regular: {why}"),
            Error::MarkingNotInQa(why) => write!(f, "marking is not admissible: {why}"),
            Error::NotNormalized => write!(f, "marking is not normalized (no zero mark)"),
            Error::MergeWouldCycle { first, second } => {
                write!(f, "merging equal marks {first:?} and {second:?} would create a cycle")
            }
            Error::CollapseRequired { first, second } => write!(
                f,
                "comparable equal marks {first:?} and {second:?}; collapse equal chains first"
            ),
            Error::StarPresent { center } => {
                write!(f, "poset has a star relation centered at {center:?}")
            }
            Error::ResourceExceeded { what, limit } => {
                write!(f, "resource guard exceeded: {what} (limit {limit})")
            }
            Error::Unbounded => write!(f, "polyhedron is unbounded"),
            Error::NotFullDimensional { ambient, actual } => {
                write!(f, "polytope has dimension {actual} in ambient dimension {ambient}")
            }
            Error::CoordinateMismatch => write!(f, "point sets have different coordinate lists"),
            Error::PartsDoNotSum => write!(f, "decomposition parts do not sum to the marking"),
            Error::InvalidParameter(why) => write!(f, "invalid parameter: {why}"),
        }
    }
}

impl core::error::Error for Error {}
