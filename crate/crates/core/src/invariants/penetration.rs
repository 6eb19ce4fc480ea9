use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuchsian::{CuspReport, FuchsianGroup, Word};
use crate::hyperbolic::{dist, Classification, HPoint};

/// `sinh(d(z₀, w·z₀)/2)` for a basepoint high in the cusp and an element
/// whose axis enters the horodisk `{Im z > 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PenetrationBound {
    pub lhs: f64,
    pub bound: f64,
    /// `lhs > 2/√3`.
    pub holds: bool,
    pub apex_height: f64,
}

/// Lower bound on the displacement of a basepoint with `Im z₀ ≥ √3` under a
/// hyperbolic element whose axis reaches above height 1, for a group in
/// which `{Im z > 1}` is an embedded cusp neighbourhood. `cusp` must be the
/// maximal cusp of `group`.
pub fn axis_penetration_bound(
    group: &FuchsianGroup,
    cusp: &CuspReport,
    w: &Word,
    z0: HPoint,
) -> Result<PenetrationBound> {
    let data = group.cusp.as_ref().ok_or(Error::NoCusp)?;
    if !data.is_normalized() {
        return Err(Error::PreconditionViolated(
            "group is not cusp-normalized".into(),
        ));
    }
    if cusp.height > 1.0 + 1e-12 {
        return Err(Error::PreconditionViolated(format!(
            "{{Im z > 1}} is not embedded: maximal cusp height is {}",
            cusp.height
        )));
    }
    if z0.y < 3f64.sqrt() {
        return Err(Error::PreconditionViolated(format!(
            "basepoint height {} is below √3",
            z0.y
        )));
    }
    let m = group.evaluate(w)?;
    if m.classify() != Classification::Hyperbolic {
        return Err(Error::PreconditionViolated(format!(
            "{} is not hyperbolic",
            group.word_string(w)
        )));
    }
    let apex_height = m.axis()?.apex_height();
    if apex_height <= 1.0 {
        return Err(Error::PreconditionViolated(format!(
            "axis apex {apex_height} does not enter {{Im z > 1}}"
        )));
    }
    let lhs = (0.5 * dist(z0, m.apply_interior(z0))).sinh();
    let bound = 2.0 / 3f64.sqrt();
    Ok(PenetrationBound {
        lhs,
        bound,
        holds: lhs > bound,
        apex_height,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuchsian::maximal_cusp;
    use crate::surfaces::thrice_punctured_sphere;
    use crate::Config;

    #[test]
    fn figure_eight_on_the_sphere() {
        let g = thrice_punctured_sphere();
        let cusp = maximal_cusp(&g, 4, &Config::default()).unwrap();
        let z0 = HPoint::new(0.0, 3f64.sqrt());
        let r = axis_penetration_bound(&g, &cusp, &Word::new([1, -2]), z0).unwrap();
        assert!((r.apex_height - 2f64.sqrt()).abs() < 1e-12);
        assert!(r.holds && r.lhs > r.bound);
    }

    #[test]
    fn preconditions() {
        let g = thrice_punctured_sphere();
        let cusp = maximal_cusp(&g, 4, &Config::default()).unwrap();
        let high = HPoint::new(0.0, 2.0);
        let low = HPoint::new(0.0, 1.0);
        assert!(matches!(
            axis_penetration_bound(&g, &cusp, &Word::new([1, -2]), low),
            Err(Error::PreconditionViolated(_))
        ));
        assert!(matches!(
            axis_penetration_bound(&g, &cusp, &Word::new([1]), high),
            Err(Error::PreconditionViolated(_))
        ));
        // X G^-1 X G^-1 X^-1 ... pick a word whose axis stays low: conjugate by X^-1 G.
        let low_axis = Word::new([2, -1, -2, 1, -2, -1, 2]);
        let m = g.evaluate(&low_axis).unwrap();
        if m.axis().unwrap().apex_height() <= 1.0 {
            assert!(matches!(
                axis_penetration_bound(&g, &cusp, &low_axis, high),
                Err(Error::PreconditionViolated(_))
            ));
        }
    }
}
