//! Triple-norm balls: membership and 2-D boundary tracing.
//!
//! A ball is the sublevel set of y -> ||y - x0, y - a1, y - a2|| at a
//! radius r. For norm-generated S-norms in the plane this level set is a
//! 3-ellipse with foci x0, a1, a2. Boundaries are traced radially from the
//! anchor centroid: the catalog level sets are star-shaped about it, and
//! bisection along each ray gives controllable accuracy.

use alloc::vec::Vec;

use core::f64::consts::TAU;

use serde::Serialize;

use crate::Result;
use crate::error::CoreError;
use crate::structures::{StructureHandle, StructureKind, expect_kind};
use crate::vector::Vector;

#[cfg(not(feature = "std"))]
#[allow(unused_imports)]
use crate::float::FloatShim as _;

/// Bisection tolerance on the ray parameter.
const RAY_TOL: f64 = 1e-10;

/// A ball with one center, two anchors, a radius, and openness.
///
/// Open and closed balls share the same boundary level set; they differ
/// only in the membership comparison.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BallSpec {
    pub center: Vector,
    pub anchor1: Vector,
    pub anchor2: Vector,
    pub radius: f64,
    pub closed: bool,
}

impl BallSpec {
    pub fn new(
        center: Vector,
        anchor1: Vector,
        anchor2: Vector,
        radius: f64,
        closed: bool,
    ) -> Result<Self> {
        let dim = center.dim();
        for p in [&anchor1, &anchor2] {
            if p.dim() != dim {
                return Err(CoreError::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
        }
        if radius <= 0.0 || !radius.is_finite() {
            return Err(CoreError::InvalidRadius { radius });
        }
        Ok(BallSpec {
            center,
            anchor1,
            anchor2,
            radius,
            closed,
        })
    }

    pub fn dim(&self) -> usize {
        self.center.dim()
    }

    /// Centroid of center and anchors, the trace origin.
    pub fn centroid(&self) -> Vector {
        Vector::mean(&[
            self.center.clone(),
            self.anchor1.clone(),
            self.anchor2.clone(),
        ])
        .expect("three points of one dimension")
    }
}

/// The value ||y - x0, y - a1, y - a2|| that membership compares against r.
pub fn ball_value(s: &StructureHandle, b: &BallSpec, y: &Vector) -> Result<f64> {
    expect_kind(s, StructureKind::Snorm)?;
    if b.dim() != s.dim() || y.dim() != s.dim() {
        return Err(CoreError::DimensionMismatch {
            expected: s.dim(),
            found: if b.dim() != s.dim() { b.dim() } else { y.dim() },
        });
    }
    s.eval_triple(&y.sub(&b.center), &y.sub(&b.anchor1), &y.sub(&b.anchor2))
}

/// Membership, compared exactly: strict for open balls, inclusive for
/// closed balls.
pub fn ball_contains(s: &StructureHandle, b: &BallSpec, y: &Vector) -> Result<bool> {
    let v = ball_value(s, b, y)?;
    Ok(if b.closed { v <= b.radius } else { v < b.radius })
}

/// One traced boundary vertex.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceVertex {
    pub angle_rad: f64,
    pub point: Vector,
}

/// A closed polyline of boundary vertices, ordered by ray index.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundaryTrace {
    pub vertices: Vec<TraceVertex>,
}

impl BoundaryTrace {
    pub fn points_xy(&self) -> Vec<(f64, f64)> {
        self.vertices
            .iter()
            .map(|v| (v.point[0], v.point[1]))
            .collect()
    }
}

/// Traces the level set ball_value = r in the plane.
///
/// For each of `resolution` rays from the anchor centroid, the crossing of
/// the level r is bracketed by doubling and then bisected to 1e-10 in the
/// ray parameter. Errors name the failing ray when a ray never reaches the
/// level within a bounded multiple of the radius, and reject configurations
/// where the centroid itself is not strictly inside the level set.
pub fn trace_boundary_2d(
    s: &StructureHandle,
    b: &BallSpec,
    resolution: usize,
) -> Result<BoundaryTrace> {
    expect_kind(s, StructureKind::Snorm)?;
    if s.dim() != 2 || b.dim() != 2 {
        return Err(CoreError::DimensionMismatch {
            expected: 2,
            found: if s.dim() != 2 { s.dim() } else { b.dim() },
        });
    }
    if resolution < 8 {
        return Err(CoreError::InvalidResolution { resolution });
    }

    let origin = b.centroid();
    let center_value = ball_value(s, b, &origin)?;
    if !center_value.is_finite() || center_value >= b.radius {
        return Err(CoreError::TraceCenterValue {
            value: center_value,
            radius: b.radius,
        });
    }

    // Safety bound: past this distance every catalog level set has been hit.
    let anchor_spread = [&b.center, &b.anchor1, &b.anchor2]
        .iter()
        .map(|p| {
            p.sub(&origin)
                .iter()
                .map(|c| c * c)
                .sum::<f64>()
                .sqrt()
        })
        .fold(0.0, f64::max);
    let t_max = 8.0 * (b.radius + anchor_spread + 1.0);

    let mut vertices = Vec::with_capacity(resolution);
    for k in 0..resolution {
        let angle = TAU * (k as f64) / (resolution as f64);
        let dir = Vector::from_slice(&[angle.cos(), angle.sin()])?;
        let value_at = |t: f64| -> f64 {
            let p = origin.add(&dir.scale(t));
            s.raw3(
                &p.sub(&b.center),
                &p.sub(&b.anchor1),
                &p.sub(&b.anchor2),
            )
        };

        // Bracket the crossing by doubling.
        let mut lo = 0.0;
        let mut hi = t_max / 1024.0;
        while value_at(hi) < b.radius {
            lo = hi;
            hi *= 2.0;
            if hi > t_max {
                return Err(CoreError::TraceUnbounded { angle_rad: angle });
            }
        }

        // Bracket is valid: value(lo) < r <= value(hi). Bisect.
        while hi - lo > RAY_TOL {
            let mid = 0.5 * (lo + hi);
            if value_at(mid) < b.radius {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let t = 0.5 * (lo + hi);
        vertices.push(TraceVertex {
            angle_rad: angle,
            point: origin.add(&dir.scale(t)),
        });
    }
    Ok(BoundaryTrace { vertices })
}

/// Even-odd point-in-polygon test over a closed polyline.
pub fn polygon_contains(polygon: &[(f64, f64)], p: (f64, f64)) -> bool {
    let n = polygon.len();
    let mut inside = false;
    let mut j = n - 1;
    for i in 0..n {
        let (xi, yi) = polygon[i];
        let (xj, yj) = polygon[j];
        if (yi > p.1) != (yj > p.1) {
            let x_cross = xi + (p.1 - yi) / (yj - yi) * (xj - xi);
            if p.0 < x_cross {
                inside = !inside;
            }
        }
        j = i;
    }
    inside
}
