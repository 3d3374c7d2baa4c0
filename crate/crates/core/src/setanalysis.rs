//! Diameter, Chebyshev radius and centre, and diametral classification for
//! finite point sets.
//!
//! The pair value used throughout is the S-norm displacement
//! ||0, x - y, y - x||. Suprema and infima are attained because the sets
//! are finite, so every quantity here is an exact max or min over the set.
//! Results describe the given finite set only; a caller approximating a
//! continuous region by samples owns that approximation.

use alloc::vec::Vec;

use serde::Serialize;

use crate::Result;
use crate::error::CoreError;
use crate::structures::StructureHandle;
use crate::vector::Vector;

/// Relative tolerance for classifying equality of values that come from
/// identical arithmetic paths.
pub const DIAMETRAL_TOL: f64 = 1e-12;

/// A nonempty finite list of same-dimension points.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    points: Vec<Vector>,
}

impl PointSet {
    pub fn new(points: Vec<Vector>) -> Result<Self> {
        let first = points.first().ok_or(CoreError::EmptyPointSet)?;
        let dim = first.dim();
        for p in &points {
            if p.dim() != dim {
                return Err(CoreError::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        Ok(PointSet { points })
    }

    pub fn from_scalars(values: &[f64]) -> Result<Self> {
        PointSet::new(
            values
                .iter()
                .map(|v| Vector::scalar(*v))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    /// Index of a point under exact coordinate equality.
    pub fn index_of(&self, u: &Vector) -> Option<usize> {
        self.points.iter().position(|p| p == u)
    }
}

/// Diametral status of a point relative to a set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Diametral {
    Diametral,
    NonDiametral,
}

/// The S-diameter: the largest pair value over the set.
pub fn s_diameter(a: &PointSet, s: &StructureHandle) -> Result<f64> {
    let pts = a.points();
    let mut max = 0.0_f64;
    // The pair value is order-independent, so unordered pairs suffice.
    for i in 0..pts.len() {
        for j in (i + 1)..pts.len() {
            let v = s.pair_distance(&pts[i], &pts[j])?;
            if v > max {
                max = v;
            }
        }
    }
    Ok(max)
}

/// The S-radius of the set relative to a point u: the largest pair value
/// from u into the set.
pub fn s_radius_at(a: &PointSet, u: &Vector, s: &StructureHandle) -> Result<f64> {
    if u.dim() != a.dim() {
        return Err(CoreError::DimensionMismatch {
            expected: a.dim(),
            found: u.dim(),
        });
    }
    let mut max = 0.0_f64;
    for x in a.points() {
        let v = s.pair_distance(u, x)?;
        if v > max {
            max = v;
        }
    }
    Ok(max)
}

/// The Chebyshev radius and centre of a finite set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Chebyshev {
    pub radius: f64,
    pub centre_indices: Vec<usize>,
}

impl Chebyshev {
    pub fn centre(&self, a: &PointSet) -> PointSet {
        PointSet::new(
            self.centre_indices
                .iter()
                .map(|i| a.points()[*i].clone())
                .collect(),
        )
        .expect("centre is nonempty")
    }
}

/// Minimizes the S-radius over members of the set; the centre is the argmin
/// set under exact equality of the computed minima.
pub fn s_chebyshev(a: &PointSet, s: &StructureHandle) -> Result<Chebyshev> {
    let mut radii = Vec::with_capacity(a.len());
    for u in a.points() {
        radii.push(s_radius_at(a, u, s)?);
    }
    let radius = radii.iter().copied().fold(f64::INFINITY, f64::min);
    let centre_indices = radii
        .iter()
        .enumerate()
        .filter(|(_, r)| **r == radius)
        .map(|(i, _)| i)
        .collect();
    Ok(Chebyshev {
        radius,
        centre_indices,
    })
}

/// A member u is diametral when its S-radius reaches the S-diameter.
///
/// The comparison allows a 1e-12 relative tolerance: both values come from
/// identical arithmetic paths, so genuine ties compare equal and the
/// tolerance only guards degenerate rounding.
pub fn classify_diametral(a: &PointSet, u: &Vector, s: &StructureHandle) -> Result<Diametral> {
    if a.index_of(u).is_none() {
        return Err(CoreError::PointNotInSet);
    }
    let diameter = s_diameter(a, s)?;
    let radius = s_radius_at(a, u, s)?;
    let tol = DIAMETRAL_TOL * 1.0_f64.max(diameter);
    Ok(if (diameter - radius).abs() <= tol {
        Diametral::Diametral
    } else {
        Diametral::NonDiametral
    })
}

/// Outcome of the normal-structure witness search on a finite set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NormalStructureReport {
    pub diameter: f64,
    /// Index of a non-diametral member, when one exists.
    pub witness_index: Option<usize>,
    /// Set when the search is vacuous because the diameter is zero.
    pub zero_diameter: bool,
}

/// Searches for a non-diametral member, the finite-scale witness that the
/// set is not entirely diametral.
pub fn normal_structure_witness(
    a: &PointSet,
    s: &StructureHandle,
) -> Result<NormalStructureReport> {
    let diameter = s_diameter(a, s)?;
    if diameter == 0.0 {
        return Ok(NormalStructureReport {
            diameter,
            witness_index: None,
            zero_diameter: true,
        });
    }
    let tol = DIAMETRAL_TOL * 1.0_f64.max(diameter);
    let mut witness_index = None;
    for (i, u) in a.points().iter().enumerate() {
        let radius = s_radius_at(a, u, s)?;
        if diameter - radius > tol {
            witness_index = Some(i);
            break;
        }
    }
    Ok(NormalStructureReport {
        diameter,
        witness_index,
        zero_diameter: false,
    })
}

/// Full per-set report, the JSON payload of the CLI.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SetReport {
    pub diameter: f64,
    pub chebyshev_radius: f64,
    pub centre_indices: Vec<usize>,
    pub diametral_flags: Vec<bool>,
}

pub fn analyze(a: &PointSet, s: &StructureHandle) -> Result<SetReport> {
    let diameter = s_diameter(a, s)?;
    let chebyshev = s_chebyshev(a, s)?;
    let tol = DIAMETRAL_TOL * 1.0_f64.max(diameter);
    let mut diametral_flags = Vec::with_capacity(a.len());
    for u in a.points() {
        let radius = s_radius_at(a, u, s)?;
        diametral_flags.push((diameter - radius).abs() <= tol);
    }
    Ok(SetReport {
        diameter,
        chebyshev_radius: chebyshev.radius,
        centre_indices: chebyshev.centre_indices,
        diametral_flags,
    })
}
