//! Error type shared by every module.

use alloc::boxed::Box;
use alloc::string::String;
use core::fmt;

use crate::axioms::CheckReport;
use crate::structures::StructureKind;
use crate::vector::Vector;

/// Everything that can go wrong when constructing or evaluating structures.
#[derive(Clone, Debug, PartialEq)]
pub enum CoreError {
    /// A dimension of zero was requested.
    InvalidDimension,
    /// Two objects that must share a dimension do not.
    DimensionMismatch { expected: usize, found: usize },
    /// A handle of one kind was passed where another kind is required.
    KindMismatch {
        expected: StructureKind,
        found: StructureKind,
    },
    /// The evaluation arity does not match the handle kind.
    UnsupportedEvaluation { kind: StructureKind, arity: usize },
    /// A coordinate was NaN or infinite.
    NonFiniteCoordinate,
    /// A vector must have at least one coordinate.
    EmptyVector,
    /// A point set must contain at least one point.
    EmptyPointSet,
    /// Sampling box or count is malformed.
    BadSampleSpec { reason: &'static str },
    /// Ball radius must be positive and finite.
    InvalidRadius { radius: f64 },
    /// Boundary tracing needs at least 8 rays.
    InvalidResolution { resolution: usize },
    /// No catalog entry with this id.
    UnknownStructure { id: String },
    /// A claimed G-norm failed its sampled axiom check.
    NotAGnorm { report: Box<CheckReport> },
    /// Rhoades conditions are only defined for distinct pairs.
    ExcludedPair,
    /// A point fell outside the box domain of a self-map.
    OutsideDomain { point: Vector },
    /// The sampled self-mapping pre-check found an escaping point.
    NotSelfMapping { point: Vector, image: Vector },
    /// The fixed-point search spent its budget without reaching the tolerance.
    NoConvergence {
        best: Vector,
        residual: f64,
        evaluations: usize,
    },
    /// A boundary ray never reached the target level inside the safety bound.
    TraceUnbounded { angle_rad: f64 },
    /// The trace origin already sits on or outside the requested level.
    TraceCenterValue { value: f64, radius: f64 },
    /// The queried point is not a member of the point set.
    PointNotInSet,
    /// Completeness classification requires a domain predicate.
    MissingDomainPredicate,
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::InvalidDimension => write!(f, "dimension must be at least 1"),
            CoreError::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            CoreError::KindMismatch { expected, found } => {
                write!(f, "structure kind mismatch: expected {expected}, found {found}")
            }
            CoreError::UnsupportedEvaluation { kind, arity } => {
                write!(f, "{kind} structures do not evaluate {arity} argument(s)")
            }
            CoreError::NonFiniteCoordinate => write!(f, "coordinates must be finite"),
            CoreError::EmptyVector => write!(f, "vectors must have at least one coordinate"),
            CoreError::EmptyPointSet => write!(f, "point sets must be nonempty"),
            CoreError::BadSampleSpec { reason } => write!(f, "bad sample spec: {reason}"),
            CoreError::InvalidRadius { radius } => {
                write!(f, "ball radius must be positive and finite, got {radius}")
            }
            CoreError::InvalidResolution { resolution } => {
                write!(f, "trace resolution must be at least 8, got {resolution}")
            }
            CoreError::UnknownStructure { id } => write!(f, "unknown structure id: {id}"),
            CoreError::NotAGnorm { report } => match &report.witness {
                Some(w) => write!(
                    f,
                    "not a G-norm: {} fails with witness {w}",
                    report.property_id
                ),
                None => write!(f, "not a G-norm: {} fails", report.property_id),
            },
            CoreError::ExcludedPair => {
                write!(f, "condition is only defined for pairs with x != y")
            }
            CoreError::OutsideDomain { point } => {
                write!(f, "point {point} lies outside the map domain")
            }
            CoreError::NotSelfMapping { point, image } => {
                write!(f, "map is not a self-mapping: {point} maps to {image}")
            }
            CoreError::NoConvergence {
                best,
                residual,
                evaluations,
            } => write!(
                f,
                "no fixed point within tolerance after {evaluations} evaluations; best candidate {best} has residual {residual}"
            ),
            CoreError::TraceUnbounded { angle_rad } => {
                write!(f, "ray at angle {angle_rad} rad never reaches the level")
            }
            CoreError::TraceCenterValue { value, radius } => write!(
                f,
                "trace origin has value {value}, not below the radius {radius}"
            ),
            CoreError::PointNotInSet => write!(f, "point is not a member of the set"),
            CoreError::MissingDomainPredicate => {
                write!(f, "a domain predicate is required for this classification")
            }
        }
    }
}

impl core::error::Error for CoreError {}
