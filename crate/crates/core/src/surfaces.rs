//! Concrete surfaces: thrice-punctured sphere, one-holed torus, pair of
//! pants, and the funnel (annulus) model.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuchsian::{CuspData, FuchsianGroup, Word};
use crate::hyperbolic::{length_from_trace, trace_from_length, MoebiusMap};

/// Gauss–Bonnet area of a surface of Euler characteristic −1.
pub const AREA_EULER_MINUS_ONE: f64 = 2.0 * PI;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SurfaceKind {
    ThricePuncturedSphere,
    /// Traces of `A`, `B` and `AB`.
    OneHoledTorus {
        x: f64,
        y: f64,
        z: f64,
    },
    /// Boundary lengths; zero stands for a cusp.
    PairOfPants {
        l1: f64,
        l2: f64,
        l3: f64,
    },
}

/// A surface of Euler characteristic −1 together with its area.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SurfaceSpec {
    pub kind: SurfaceKind,
    pub area: f64,
}

impl SurfaceSpec {
    pub fn new(kind: SurfaceKind) -> Result<Self> {
        match kind {
            SurfaceKind::ThricePuncturedSphere => {}
            SurfaceKind::OneHoledTorus { x, y, z } => {
                check_torus_traces(x, y, z)?;
            }
            SurfaceKind::PairOfPants { l1, l2, l3 } => {
                for l in [l1, l2, l3] {
                    if !(l >= 0.0) || !l.is_finite() {
                        return Err(Error::NegativeLength(l));
                    }
                }
            }
        }
        Ok(SurfaceSpec {
            kind,
            area: AREA_EULER_MINUS_ONE,
        })
    }

    pub fn sphere() -> Self {
        SurfaceSpec {
            kind: SurfaceKind::ThricePuncturedSphere,
            area: AREA_EULER_MINUS_ONE,
        }
    }

    pub fn torus(x: f64, y: f64, z: f64) -> Result<Self> {
        SurfaceSpec::new(SurfaceKind::OneHoledTorus { x, y, z })
    }

    /// Symmetric one-holed torus (`x = y = z`) with the given boundary length.
    pub fn torus_with_boundary(boundary_length: f64) -> Result<Self> {
        let s = symmetric_torus_trace(boundary_length)?;
        SurfaceSpec::torus(s, s, s)
    }

    pub fn pants(l1: f64, l2: f64, l3: f64) -> Result<Self> {
        SurfaceSpec::new(SurfaceKind::PairOfPants { l1, l2, l3 })
    }

    pub fn group(&self) -> Result<FuchsianGroup> {
        match self.kind {
            SurfaceKind::ThricePuncturedSphere => Ok(thrice_punctured_sphere()),
            SurfaceKind::OneHoledTorus { x, y, z } => one_holed_torus(x, y, z),
            SurfaceKind::PairOfPants { l1, l2, l3 } => pair_of_pants(l1, l2, l3),
        }
    }

    /// Short tag used in reports and on the command line.
    pub fn tag(&self) -> String {
        self.to_string()
    }

    pub fn to_document(&self) -> SurfaceDocument {
        let (kind, params) = match self.kind {
            SurfaceKind::ThricePuncturedSphere => ("sphere3", vec![]),
            SurfaceKind::OneHoledTorus { x, y, z } => ("torus1", vec![x, y, z]),
            SurfaceKind::PairOfPants { l1, l2, l3 } => ("pants", vec![l1, l2, l3]),
        };
        SurfaceDocument {
            kind: kind.to_string(),
            params,
        }
    }

    /// Accepts `sphere3`, `torus1` with three traces or one boundary length,
    /// and `pants` with three lengths.
    pub fn from_document(doc: &SurfaceDocument) -> Result<Self> {
        let p = &doc.params;
        match (doc.kind.as_str(), p.len()) {
            ("sphere3", 0) => Ok(SurfaceSpec::sphere()),
            ("torus1", 3) => SurfaceSpec::torus(p[0], p[1], p[2]),
            ("torus1", 1) => SurfaceSpec::torus_with_boundary(p[0]),
            ("pants", 3) => SurfaceSpec::pants(p[0], p[1], p[2]),
            (k, n) => Err(Error::Parse(format!(
                "surface kind {k:?} with {n} parameters"
            ))),
        }
    }
}

impl fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            SurfaceKind::ThricePuncturedSphere => write!(f, "sphere3"),
            SurfaceKind::OneHoledTorus { x, y, z } => write!(f, "torus1:{x},{y},{z}"),
            SurfaceKind::PairOfPants { l1, l2, l3 } => write!(f, "pants:{l1},{l2},{l3}"),
        }
    }
}

/// JSON form `{kind, params}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceDocument {
    pub kind: String,
    #[serde(default)]
    pub params: Vec<f64>,
}

/// The level-2 congruence group: `X = z ↦ z + 2` and `γ = z ↦ -z/(2z - 1)`,
/// normalized at the cusp `∞` with `ω = 2`.
pub fn thrice_punctured_sphere() -> FuchsianGroup {
    let x = MoebiusMap {
        a: 1.0,
        b: 2.0,
        c: 0.0,
        d: 1.0,
    };
    let g = MoebiusMap {
        a: -1.0,
        b: 0.0,
        c: 2.0,
        d: -1.0,
    };
    FuchsianGroup::from_maps("sphere3", &["X", "G"], &[x, g])
        .expect("generators are nontrivial")
        .with_cusp(CuspData {
            peripheral: Word::letter(0, false),
            omega: Some(2.0),
        })
}

/// `x² + y² + z² − xyz − 2`, the trace of the commutator `[A, B]`.
pub fn fricke_commutator_trace(x: f64, y: f64, z: f64) -> f64 {
    x * x + y * y + z * z - x * y * z - 2.0
}

const CUSP_TOL: f64 = 1e-9;

fn check_torus_traces(x: f64, y: f64, z: f64) -> Result<f64> {
    let t = fricke_commutator_trace(x, y, z);
    let scale = 1.0 + (x * y * z).abs();
    if !(x > 2.0 && y > 2.0 && z > 2.0) || t > -2.0 + CUSP_TOL * scale {
        if (t + 2.0).abs() <= CUSP_TOL * scale && x > 2.0 && y > 2.0 && z > 2.0 {
            return Ok(-2.0);
        }
        return Err(Error::InadmissibleTraces {
            x,
            y,
            z,
            boundary: t,
        });
    }
    Ok(t)
}

/// `(A, B)` with `tr A = x`, `tr B = y`, `tr AB = z`.
fn trace_normal_form(x: f64, y: f64, z: f64) -> Result<(MoebiusMap, MoebiusMap)> {
    let s = x * y - z;
    if s.abs() < 2.0 {
        return Err(Error::DomainError(format!("tr(AB^-1) = {s} is elliptic")));
    }
    let zeta = 0.5 * (s + s.signum() * ((s - 2.0) * (s + 2.0)).sqrt());
    let a = MoebiusMap {
        a: x,
        b: -1.0,
        c: 1.0,
        d: 0.0,
    };
    let b = MoebiusMap {
        a: y,
        b: -zeta,
        c: 1.0 / zeta,
        d: 0.0,
    };
    Ok((a, b))
}

/// One-holed torus with `tr A = x`, `tr B = y`, `tr AB = z`. The boundary is
/// the commutator `A B A⁻¹ B⁻¹`; it is a cusp when its trace is −2.
pub fn one_holed_torus(x: f64, y: f64, z: f64) -> Result<FuchsianGroup> {
    let t = check_torus_traces(x, y, z)?;
    let (a, b) = trace_normal_form(x, y, z)?;
    let mut g = FuchsianGroup::from_maps(format!("torus1:{x},{y},{z}"), &["A", "B"], &[a, b])?;
    if t == -2.0 {
        g = g.with_cusp(CuspData {
            peripheral: torus_boundary_word(),
            omega: None,
        });
    }
    Ok(g)
}

pub fn torus_boundary_word() -> Word {
    Word::new([1, 2, -1, -2])
}

/// Boundary length `2 arccosh(|t|/2)`, zero for a cusp.
pub fn torus_boundary_length(x: f64, y: f64, z: f64) -> Result<f64> {
    Ok(length_from_trace(check_torus_traces(x, y, z)?))
}

/// Common trace `s` of the symmetric torus with boundary length `b`:
/// the root `s ≥ 3` of `s³ − 3s² = 2 cosh(b/2) − 2`.
pub fn symmetric_torus_trace(boundary_length: f64) -> Result<f64> {
    if !(boundary_length >= 0.0) || !boundary_length.is_finite() {
        return Err(Error::NegativeLength(boundary_length));
    }
    let rhs = 2.0 * (boundary_length / 2.0).cosh() - 2.0;
    let mut s = 3.0 + rhs.cbrt().max(0.0);
    for _ in 0..100 {
        let f = s * s * s - 3.0 * s * s - rhs;
        let df = 3.0 * s * s - 6.0 * s;
        let step = f / df;
        s -= step;
        if step.abs() <= 1e-16 * s {
            break;
        }
    }
    Ok(s)
}

/// Pair of pants with boundary lengths `l1, l2, l3` (zero for a cusp).
/// Generators `g1, g2` represent the first two boundaries and
/// `g3 = (g1 g2)⁻¹` the third.
pub fn pair_of_pants(l1: f64, l2: f64, l3: f64) -> Result<FuchsianGroup> {
    for l in [l1, l2, l3] {
        if !(l >= 0.0) || !l.is_finite() {
            return Err(Error::NegativeLength(l));
        }
    }
    let (a, b) = trace_normal_form(
        trace_from_length(l1),
        trace_from_length(l2),
        -trace_from_length(l3),
    )?;
    let mut g = FuchsianGroup::from_maps(format!("pants:{l1},{l2},{l3}"), &["g1", "g2"], &[a, b])?;
    if let Some(k) = [l1, l2, l3].iter().position(|&l| l == 0.0) {
        g = g.with_cusp(CuspData {
            peripheral: pants_boundary_words()[k].clone(),
            omega: None,
        });
    }
    Ok(g)
}

/// Words for the three boundary components of [`pair_of_pants`].
pub fn pants_boundary_words() -> [Word; 3] {
    [Word::new([1]), Word::new([2]), Word::new([-2, -1])]
}

/// Length of the common perpendicular between boundaries `i` and `j` of a
/// pair of pants, opposite to boundary `k` in the right-angled hexagon.
pub fn seam_length(li: f64, lj: f64, lk: f64) -> Result<f64> {
    if !(li > 0.0 && lj > 0.0) {
        return Err(Error::NonPositiveLength(li.min(lj)));
    }
    let (hi, hj, hk) = (li / 2.0, lj / 2.0, lk / 2.0);
    Ok(((hi.cosh() * hj.cosh() + hk.cosh()) / (hi.sinh() * hj.sinh())).acosh())
}

/// Funnel bounded by a closed geodesic, viewed as a conformal annulus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FunnelData {
    pub boundary_length: f64,
    /// Conformal modulus `π² / boundary_length`.
    pub modulus: f64,
}

pub fn funnel_modulus(boundary_length: f64) -> Result<FunnelData> {
    if !(boundary_length > 0.0) || !boundary_length.is_finite() {
        return Err(Error::NonPositive(boundary_length));
    }
    Ok(FunnelData {
        boundary_length,
        modulus: PI * PI / boundary_length,
    })
}

/// Core geodesic length of the funnel with conformal modulus `m`.
pub fn core_length_from_modulus(m: f64) -> Result<f64> {
    if !(m > 0.0) || !m.is_finite() {
        return Err(Error::NonPositive(m));
    }
    Ok(PI * PI / m)
}
