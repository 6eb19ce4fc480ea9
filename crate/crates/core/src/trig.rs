//! Scalar hyperbolic trigonometry: collar widths, the cusp-loop relation and
//! the symmetric right-angled pentagon.

use crate::error::{Error, Result};

fn positive(l: f64) -> Result<f64> {
    if l > 0.0 && l.is_finite() {
        Ok(l)
    } else {
        Err(Error::NonPositiveLength(l))
    }
}

/// Width `arcsinh(1 / sinh(l/2))` of the standard collar around a simple
/// closed geodesic of length `l`.
pub fn collar_width(l: f64) -> Result<f64> {
    let l = positive(l)?;
    Ok((1.0 / (l / 2.0).sinh()).asinh())
}

/// Length of the geodesic loop freely homotopic to a horocycle of the given
/// length through the same point: `sinh(loop/2) = horocycle/2`.
pub fn loop_from_horocycle(horocycle_length: f64) -> Result<f64> {
    let h = positive(horocycle_length)?;
    Ok(2.0 * (h / 2.0).asinh())
}

/// Symmetric pentagon with four right angles and apex angle `2·half_angle`,
/// whose side opposite the apex has half-length `opposite_half`.
///
/// Returns the common length `d` of the two sides issuing from the apex,
/// i.e. the distance from the apex to the geodesics carrying the two sides
/// adjacent to the opposite one. The half-pentagon is a trirectangle in which
/// `d` faces `opposite_half`, so `cosh(opposite_half) = cosh(d)·sin(half_angle)`.
pub fn apex_distance(opposite_half: f64, half_angle: f64) -> Result<f64> {
    if !(opposite_half > 0.0 && opposite_half.is_finite()) {
        return Err(Error::DomainError(format!(
            "opposite_half = {opposite_half} must be positive"
        )));
    }
    if !(half_angle > 0.0 && half_angle < std::f64::consts::FRAC_PI_2) {
        return Err(Error::DomainError(format!(
            "half_angle = {half_angle} must lie in (0, π/2)"
        )));
    }
    Ok((opposite_half.cosh() / half_angle.sin()).acosh())
}
