//! Exact-formula layer of the upper half-plane model: points, Möbius maps,
//! geodesics, horodisks, isometric circles and the distance formulas.

mod geodesic;
mod horodisk;
mod moebius;
mod point;

pub use geodesic::{cross_ratio, Geodesic, GeodesicRelation, GeodesicShape, ENDPOINT_TOL};
pub use horodisk::{
    horodisk_image, isometric_circle, Circle, Horodisk, HorodiskImage, Tangency, TANGENCY_TOL,
};
pub use moebius::{
    length_from_trace, trace_from_length, Classification, MatrixDD, MoebiusMap, PARABOLIC_TOL,
};
pub use point::{BoundaryPoint, HPoint, Point};

use serde::{Deserialize, Serialize};

use crate::error::Result;

/// Hyperbolic distance, via `sinh(d/2) = |p - q| / (2 sqrt(y_p y_q))`.
pub fn dist(p: HPoint, q: HPoint) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    let chord = (dx * dx + dy * dy).sqrt();
    2.0 * (chord / (2.0 * (p.y * q.y).sqrt())).asinh()
}

/// Displacement of a point by a hyperbolic map, with the pieces entering
/// `sinh(disp/2) = sinh(len/2) cosh(offset)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Displacement {
    pub displacement: f64,
    pub translation_length: f64,
    /// Distance from the point to the axis.
    pub offset: f64,
}

impl Displacement {
    /// `sinh(disp/2) - sinh(len/2) cosh(offset)`, relative to the left side.
    pub fn factorization_residual(&self) -> f64 {
        let lhs = (self.displacement / 2.0).sinh();
        let rhs = (self.translation_length / 2.0).sinh() * self.offset.cosh();
        (lhs - rhs) / lhs.max(1.0)
    }
}

pub fn displacement(m: &MoebiusMap, p: HPoint) -> Result<Displacement> {
    let translation_length = m.translation_length()?;
    let axis = m.axis()?;
    Ok(Displacement {
        displacement: dist(p, m.apply_interior(p)),
        translation_length,
        offset: axis.distance_to(p),
    })
}

/// Half-angle of the hyperbolic map `m` seen from the top of its axis, read
/// from where the isometric circles `I(m^{±1})` meet the axis.
///
/// Returns `(theta, axis radius, isometric radius)` for maps whose axis is a
/// half-circle centered at the origin.
pub fn isometric_angle(m: &MoebiusMap) -> Result<(f64, f64, f64)> {
    let axis = m.axis()?;
    let (center, r) = match axis.shape() {
        GeodesicShape::HalfCircle { center, radius } => (center, radius),
        GeodesicShape::Vertical { .. } => {
            return Err(crate::error::Error::PreconditionViolated(
                "axis is a vertical line".into(),
            ))
        }
    };
    let iso = isometric_circle(m)?;
    // Circle |z - c0| = R meets |z - center| = r where
    // x = (r^2 - R^2 + c0'^2) / (2 c0') with c0' measured from the axis center.
    let c0 = iso.center - center;
    let x = (r * r - iso.radius * iso.radius + c0 * c0) / (2.0 * c0);
    let y = (r * r - x * x).max(0.0).sqrt();
    let theta = x.abs().atan2(y);
    Ok((theta, r, iso.radius))
}

/// Half-angle read the other way: the points of the axis at distance
/// `len/2` from its top, seen from the axis center.
pub fn axis_half_distance_angle(m: &MoebiusMap) -> Result<f64> {
    let len = m.translation_length()?;
    // A point at arc distance s from the top of a half-circle makes angle
    // theta with the vertical, where tan(theta) = sinh(s).
    Ok((len / 2.0).sinh().atan())
}
