use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point `x + iy` of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HPoint {
    pub x: f64,
    pub y: f64,
}

impl HPoint {
    /// Panics if `y` is not strictly positive.
    pub fn new(x: f64, y: f64) -> Self {
        Self::try_new(x, y).expect("point must lie in the upper half-plane")
    }

    pub fn try_new(x: f64, y: f64) -> Result<Self> {
        if !(y > 0.0) || !x.is_finite() || !y.is_finite() {
            return Err(Error::InvalidPoint(format!("({x}, {y}) is not in H")));
        }
        Ok(HPoint { x, y })
    }

    pub fn i() -> Self {
        HPoint { x: 0.0, y: 1.0 }
    }
}

impl fmt::Display for HPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A point of the boundary circle `R ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundaryPoint {
    Finite(f64),
    Infinity,
}

impl BoundaryPoint {
    pub fn is_infinite(self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            BoundaryPoint::Finite(x) => Some(x),
            BoundaryPoint::Infinity => None,
        }
    }

    /// Equality with a relative tolerance on finite values.
    pub fn approx_eq(self, other: BoundaryPoint, tol: f64) -> bool {
        match (self, other) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => true,
            (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => {
                (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
            }
            _ => false,
        }
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Finite(x) => write!(f, "{x}"),
            BoundaryPoint::Infinity => write!(f, "∞"),
        }
    }
}

/// Either an interior or a boundary point; the domain of the Möbius action.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Point {
    Interior(HPoint),
    Boundary(BoundaryPoint),
}

impl From<HPoint> for Point {
    fn from(p: HPoint) -> Self {
        Point::Interior(p)
    }
}

impl From<BoundaryPoint> for Point {
    fn from(b: BoundaryPoint) -> Self {
        Point::Boundary(b)
    }
}
