use std::f64::consts::PI;

use crate::error::{Error, Result};

pub const ROGERS_AT_ONE: f64 = PI * PI / 6.0;

/// `Li₂(x) = Σ xᵏ/k²` for `0 ≤ x ≤ 1/2`, where the series converges at
/// least like `2⁻ᵏ`.
fn li2_small(x: f64) -> f64 {
    let mut sum = 0.0f64;
    let mut pow = x;
    for k in 1..200 {
        let term = pow / (k * k) as f64;
        sum += term;
        if term <= 1e-17 * sum {
            break;
        }
        pow *= x;
    }
    sum
}

/// `R(x) = Li₂(x) + ½ ln x ln(1 − x)` on `[0, 1/2]`.
fn rogers_small(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    li2_small(x) + 0.5 * x.ln() * (-x).ln_1p()
}

/// Rogers dilogarithm on `[0, 1]`, normalized so that `R(1) = π²/6`.
pub fn rogers_dilog(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::DomainError(format!(
            "Rogers dilogarithm needs 0 ≤ x ≤ 1, got {x}"
        )));
    }
    Ok(if x <= 0.5 {
        rogers_small(x)
    } else {
        ROGERS_AT_ONE - rogers_small(1.0 - x)
    })
}

/// `R(x)` given both `x` and `1 − x`, avoiding cancellation when `x` is
/// close to one and only its complement is known accurately.
pub(crate) fn rogers_dilog_split(x: f64, complement: f64) -> f64 {
    if x <= complement {
        rogers_small(x)
    } else {
        ROGERS_AT_ONE - rogers_small(complement)
    }
}
