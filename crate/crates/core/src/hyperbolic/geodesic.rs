use serde::{Deserialize, Serialize};

use super::point::{BoundaryPoint, HPoint};
use crate::error::{Error, Result};

/// Relative tolerance used to decide that two boundary points coincide.
pub const ENDPOINT_TOL: f64 = 1e-10;

/// Euclidean description of a geodesic in the half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeodesicShape {
    HalfCircle { center: f64, radius: f64 },
    Vertical { foot: f64 },
}

/// A complete geodesic, determined by its unordered pair of endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Geodesic {
    endpoints: (BoundaryPoint, BoundaryPoint),
    shape: GeodesicShape,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeodesicRelation {
    Equal,
    Crossing,
    Asymptotic,
    Disjoint { distance: f64 },
}

impl Geodesic {
    pub fn new(p: BoundaryPoint, q: BoundaryPoint) -> Result<Self> {
        if p.approx_eq(q, 0.0) {
            return Err(Error::InvalidPoint(format!(
                "degenerate geodesic ({p}, {q})"
            )));
        }
        let shape = match (p, q) {
            (BoundaryPoint::Infinity, BoundaryPoint::Finite(x))
            | (BoundaryPoint::Finite(x), BoundaryPoint::Infinity) => {
                GeodesicShape::Vertical { foot: x }
            }
            (BoundaryPoint::Finite(x), BoundaryPoint::Finite(y)) => GeodesicShape::HalfCircle {
                center: 0.5 * (x + y),
                radius: 0.5 * (x - y).abs(),
            },
            _ => unreachable!(),
        };
        Ok(Geodesic {
            endpoints: (p, q),
            shape,
        })
    }

    pub fn from_finite(x: f64, y: f64) -> Result<Self> {
        Geodesic::new(BoundaryPoint::Finite(x), BoundaryPoint::Finite(y))
    }

    pub fn endpoints(&self) -> (BoundaryPoint, BoundaryPoint) {
        self.endpoints
    }

    pub fn shape(&self) -> GeodesicShape {
        self.shape
    }

    /// Highest point of the geodesic; infinite for vertical lines.
    pub fn apex_height(&self) -> f64 {
        match self.shape {
            GeodesicShape::HalfCircle { radius, .. } => radius,
            GeodesicShape::Vertical { .. } => f64::INFINITY,
        }
    }

    pub fn has_endpoint(&self, p: BoundaryPoint, tol: f64) -> bool {
        self.endpoints.0.approx_eq(p, tol) || self.endpoints.1.approx_eq(p, tol)
    }

    /// Hyperbolic distance from `p` to the geodesic.
    pub fn distance_to(&self, p: HPoint) -> f64 {
        let s = match self.shape {
            GeodesicShape::Vertical { foot } => (p.x - foot).abs() / p.y,
            GeodesicShape::HalfCircle { center, radius } => {
                let dx = p.x - center;
                let rho2 = dx * dx + p.y * p.y;
                (rho2 - radius * radius).abs() / (2.0 * radius * p.y)
            }
        };
        s.asinh()
    }

    /// Mutual position of two geodesics.
    pub fn relation(&self, other: &Geodesic) -> GeodesicRelation {
        self.relation_with(other, ENDPOINT_TOL)
    }

    pub fn relation_with(&self, other: &Geodesic, tol: f64) -> GeodesicRelation {
        let (a1, a2) = self.endpoints;
        let (b1, b2) = other.endpoints;
        let shared = [(a1, b1), (a1, b2), (a2, b1), (a2, b2)]
            .iter()
            .filter(|(p, q)| p.approx_eq(*q, tol))
            .count();
        if shared >= 2 {
            return GeodesicRelation::Equal;
        }
        if shared == 1 {
            return GeodesicRelation::Asymptotic;
        }
        let t = cross_ratio(a1, a2, b1, b2);
        if t < 0.0 {
            return GeodesicRelation::Crossing;
        }
        // For disjoint geodesics tanh^2(d/2) equals the cross-ratio or its inverse.
        let t = if t > 1.0 { 1.0 / t } else { t };
        GeodesicRelation::Disjoint {
            distance: 2.0 * t.sqrt().atanh(),
        }
    }
}

/// `(b1 - a1)(b2 - a2) / ((b1 - a2)(b2 - a1))`, with factors containing `∞`
/// cancelled against each other. At most one argument may be `∞`.
pub fn cross_ratio(
    a1: BoundaryPoint,
    a2: BoundaryPoint,
    b1: BoundaryPoint,
    b2: BoundaryPoint,
) -> f64 {
    use BoundaryPoint::{Finite, Infinity};
    match (a1, a2, b1, b2) {
        (Finite(a1), Finite(a2), Finite(b1), Finite(b2)) => {
            ((b1 - a1) * (b2 - a2)) / ((b1 - a2) * (b2 - a1))
        }
        (Infinity, Finite(a2), Finite(b1), Finite(b2)) => (b2 - a2) / (b1 - a2),
        (Finite(a1), Infinity, Finite(b1), Finite(b2)) => (b1 - a1) / (b2 - a1),
        (Finite(a1), Finite(a2), Infinity, Finite(b2)) => (b2 - a2) / (b2 - a1),
        (Finite(a1), Finite(a2), Finite(b1), Infinity) => (b1 - a1) / (b1 - a2),
        _ => f64::NAN,
    }
}
