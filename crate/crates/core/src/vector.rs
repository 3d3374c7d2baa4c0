//! Points of R^n with an explicit dimension and finite coordinates.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Index;

use serde::{Deserialize, Serialize};

use crate::Result;
use crate::error::CoreError;

/// An ordered tuple of finite real coordinates.
///
/// Construction validates the invariants once; everything downstream may
/// assume a nonempty, finite coordinate list.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Vector {
    coords: Vec<f64>,
}

impl Vector {
    /// Validates and wraps a coordinate list.
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(CoreError::EmptyVector);
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(CoreError::NonFiniteCoordinate);
        }
        Ok(Vector { coords })
    }

    pub fn from_slice(coords: &[f64]) -> Result<Self> {
        Vector::new(coords.to_vec())
    }

    /// One-dimensional point.
    pub fn scalar(x: f64) -> Result<Self> {
        Vector::new(vec![x])
    }

    /// The origin of R^dim.
    pub fn zeros(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(CoreError::InvalidDimension);
        }
        Ok(Vector {
            coords: vec![0.0; dim],
        })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.coords
    }

    pub fn iter(&self) -> core::slice::Iter<'_, f64> {
        self.coords.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| *c == 0.0)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector dimensions must agree");
        Vector {
            coords: self
                .coords
                .iter()
                .zip(other.coords.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        assert_eq!(self.dim(), other.dim(), "vector dimensions must agree");
        Vector {
            coords: self
                .coords
                .iter()
                .zip(other.coords.iter())
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, k: f64) -> Vector {
        Vector {
            coords: self.coords.iter().map(|a| k * a).collect(),
        }
    }

    pub fn neg(&self) -> Vector {
        self.scale(-1.0)
    }

    /// Componentwise mean of a nonempty slice of same-dimension vectors.
    pub fn mean(points: &[Vector]) -> Result<Vector> {
        let first = points.first().ok_or(CoreError::EmptyPointSet)?;
        let dim = first.dim();
        let mut acc = vec![0.0; dim];
        for p in points {
            if p.dim() != dim {
                return Err(CoreError::DimensionMismatch {
                    expected: dim,
                    found: p.dim(),
                });
            }
            for (a, c) in acc.iter_mut().zip(p.iter()) {
                *a += c;
            }
        }
        let n = points.len() as f64;
        Vector::new(acc.into_iter().map(|a| a / n).collect())
    }

    /// Total order on exact coordinates, used for deterministic tie-breaks.
    pub fn lex_cmp(&self, other: &Vector) -> Ordering {
        for (a, b) in self.coords.iter().zip(other.coords.iter()) {
            match a.partial_cmp(b) {
                Some(Ordering::Equal) | None => continue,
                Some(ord) => return ord,
            }
        }
        self.dim().cmp(&other.dim())
    }
}

impl Index<usize> for Vector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.coords[i]
    }
}

impl TryFrom<Vec<f64>> for Vector {
    type Error = CoreError;

    fn try_from(coords: Vec<f64>) -> Result<Self> {
        Vector::new(coords)
    }
}

impl From<Vector> for Vec<f64> {
    fn from(v: Vector) -> Vec<f64> {
        v.coords
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_non_finite() {
        assert_eq!(Vector::new(vec![]), Err(CoreError::EmptyVector));
        assert_eq!(
            Vector::new(vec![1.0, f64::NAN]),
            Err(CoreError::NonFiniteCoordinate)
        );
        assert_eq!(
            Vector::new(vec![f64::INFINITY]),
            Err(CoreError::NonFiniteCoordinate)
        );
        assert_eq!(Vector::zeros(0), Err(CoreError::InvalidDimension));
    }

    #[test]
    fn arithmetic() {
        let a = Vector::from_slice(&[1.0, 2.0]).unwrap();
        let b = Vector::from_slice(&[0.5, -1.0]).unwrap();
        assert_eq!(a.add(&b).as_slice(), &[1.5, 1.0]);
        assert_eq!(a.sub(&b).as_slice(), &[0.5, 3.0]);
        assert_eq!(a.scale(2.0).as_slice(), &[2.0, 4.0]);
        assert_eq!(a.neg().as_slice(), &[-1.0, -2.0]);
        assert!(Vector::zeros(3).unwrap().is_zero());
    }

    #[test]
    fn mean_and_lex_order() {
        let pts = [
            Vector::from_slice(&[0.0, 0.0]).unwrap(),
            Vector::from_slice(&[2.0, 4.0]).unwrap(),
        ];
        assert_eq!(Vector::mean(&pts).unwrap().as_slice(), &[1.0, 2.0]);

        let a = Vector::from_slice(&[1.0, 5.0]).unwrap();
        let b = Vector::from_slice(&[1.0, 7.0]).unwrap();
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert_eq!(a.lex_cmp(&a), Ordering::Equal);
    }
}
