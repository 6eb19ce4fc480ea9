use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use super::geodesic::Geodesic;
use super::point::{BoundaryPoint, HPoint, Point};
use crate::error::{Error, Result};
use crate::numeric::DoubleDouble;

/// Default half-width of the band around `|tr| = 2` treated as parabolic.
pub const PARABOLIC_TOL: f64 = 1e-10;

const DET_TOL: f64 = 1e-12;

/// An orientation-preserving isometry `z ↦ (az + b)/(cz + d)` stored as an
/// `SL(2, R)` lift.
///
/// Products keep the lift, so traces of words carry the signs needed by the
/// trace identities; [`MoebiusMap::canonical`] picks the representative used
/// for comparisons of maps in `PSL(2, R)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MoebiusMap {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Identity,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl MoebiusMap {
    pub const IDENTITY: MoebiusMap = MoebiusMap {
        a: 1.0,
        b: 0.0,
        c: 0.0,
        d: 1.0,
    };

    /// Builds a map from raw entries, rescaling to unit determinant.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if !(det > 0.0) || ![a, b, c, d].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidMap(format!(
                "entries ({a}, {b}, {c}, {d}) have non-positive determinant {det}"
            )));
        }
        let s = det.sqrt();
        Ok(MoebiusMap {
            a: a / s,
            b: b / s,
            c: c / s,
            d: d / s,
        })
    }

    /// Entries must already have determinant one to within `1e-12`.
    pub fn from_unimodular(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let det = a * d - b * c;
        if (det - 1.0).abs() > DET_TOL * (1.0 + a.abs().max(b.abs()).max(c.abs()).max(d.abs())) {
            return Err(Error::InvalidMap(format!(
                "determinant {det} differs from 1"
            )));
        }
        Ok(MoebiusMap { a, b, c, d })
    }

    pub fn translation(t: f64) -> Self {
        MoebiusMap {
            a: 1.0,
            b: t,
            c: 0.0,
            d: 1.0,
        }
    }

    /// `z ↦ k z` for `k > 0`.
    pub fn dilation(k: f64) -> Self {
        let s = k.sqrt();
        MoebiusMap {
            a: s,
            b: 0.0,
            c: 0.0,
            d: 1.0 / s,
        }
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> f64 {
        self.a + self.d
    }

    pub fn inverse(&self) -> Self {
        MoebiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    pub fn neg(&self) -> Self {
        MoebiusMap {
            a: -self.a,
            b: -self.b,
            c: -self.c,
            d: -self.d,
        }
    }

    /// Representative of `±M` whose first nonzero entry among `a, b` is positive.
    pub fn canonical(&self) -> Self {
        let scale = self.a.abs().max(self.b.abs());
        let lead = if self.a.abs() > 1e-12 * scale {
            self.a
        } else {
            self.b
        };
        if lead < 0.0 {
            self.neg()
        } else {
            *self
        }
    }

    /// Entrywise comparison in `PSL(2, R)`.
    pub fn approx_eq_projective(&self, other: &MoebiusMap, tol: f64) -> bool {
        let close = |m: &MoebiusMap| {
            (m.a - other.a).abs() <= tol
                && (m.b - other.b).abs() <= tol
                && (m.c - other.c).abs() <= tol
                && (m.d - other.d).abs() <= tol
        };
        close(self) || close(&self.neg())
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.approx_eq_projective(&MoebiusMap::IDENTITY, tol)
    }

    pub fn conjugate_by(&self, g: &MoebiusMap) -> MoebiusMap {
        *g * *self * g.inverse()
    }

    pub fn apply(&self, p: impl Into<Point>) -> Point {
        match p.into() {
            Point::Interior(z) => Point::Interior(self.apply_interior(z)),
            Point::Boundary(b) => Point::Boundary(self.apply_boundary(b)),
        }
    }

    pub fn apply_interior(&self, p: HPoint) -> HPoint {
        // (az + b)/(cz + d) with Im = y/|cz + d|^2 for unit determinant.
        let den_re = self.c * p.x + self.d;
        let den_im = self.c * p.y;
        let den = den_re * den_re + den_im * den_im;
        let num_re = self.a * p.x + self.b;
        let num_im = self.a * p.y;
        HPoint {
            x: (num_re * den_re + num_im * den_im) / den,
            y: p.y / den,
        }
    }

    pub fn apply_boundary(&self, p: BoundaryPoint) -> BoundaryPoint {
        match p {
            BoundaryPoint::Infinity => {
                if self.c == 0.0 {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite(self.a / self.c)
                }
            }
            BoundaryPoint::Finite(x) => {
                let den = self.c * x + self.d;
                if den == 0.0 {
                    BoundaryPoint::Infinity
                } else {
                    BoundaryPoint::Finite((self.a * x + self.b) / den)
                }
            }
        }
    }

    pub fn classify(&self) -> Classification {
        self.classify_with(PARABOLIC_TOL)
    }

    pub fn classify_with(&self, tol: f64) -> Classification {
        if self.is_identity(tol) {
            return Classification::Identity;
        }
        let t = self.trace().abs();
        if (t - 2.0).abs() <= tol {
            Classification::Parabolic
        } else if t > 2.0 {
            Classification::Hyperbolic
        } else {
            Classification::Elliptic
        }
    }

    fn require_hyperbolic(&self) -> Result<()> {
        if self.classify() == Classification::Hyperbolic {
            Ok(())
        } else {
            Err(Error::NotHyperbolic {
                trace: self.trace(),
            })
        }
    }

    /// `2 arccosh(|tr|/2)`.
    pub fn translation_length(&self) -> Result<f64> {
        self.require_hyperbolic()?;
        Ok(length_from_trace(self.trace()))
    }

    /// Fixed points on the boundary, repelling first.
    pub fn fixed_points(&self) -> Result<(BoundaryPoint, BoundaryPoint)> {
        self.require_hyperbolic()?;
        let tr = self.trace();
        let disc = (tr * tr - 4.0).sqrt();
        if self.c == 0.0 {
            // z ↦ (a z + b)/d: ∞ attracts iff |a| > |d|.
            let finite = BoundaryPoint::Finite(self.b / (self.d - self.a));
            return Ok(if self.a.abs() > self.d.abs() {
                (finite, BoundaryPoint::Infinity)
            } else {
                (BoundaryPoint::Infinity, finite)
            });
        }
        // Roots of c z^2 + (d - a) z - b = 0, evaluated without cancellation.
        let p = self.a - self.d;
        let q = if p >= 0.0 { p + disc } else { p - disc };
        let r1 = q / (2.0 * self.c);
        let r2 = -2.0 * self.b / q;
        let r2 = if q == 0.0 { -r1 } else { r2 };
        // The attracting point has derivative 1/(cz + d)^2 < 1.
        let deriv = |z: f64| 1.0 / (self.c * z + self.d).powi(2);
        let (fa, fb) = if deriv(r1) < deriv(r2) {
            (r2, r1)
        } else {
            (r1, r2)
        };
        Ok((BoundaryPoint::Finite(fa), BoundaryPoint::Finite(fb)))
    }

    /// The invariant geodesic of a hyperbolic map.
    pub fn axis(&self) -> Result<Geodesic> {
        let (r, a) = self.fixed_points()?;
        Geodesic::new(r, a)
    }

    /// Parabolic fixed point.
    pub fn parabolic_fixed_point(&self) -> Result<BoundaryPoint> {
        if self.classify() != Classification::Parabolic {
            return Err(Error::NotParabolic {
                trace: self.trace(),
            });
        }
        if self.c.abs() <= 1e-14 * (self.a.abs() + self.d.abs()) {
            Ok(BoundaryPoint::Infinity)
        } else {
            Ok(BoundaryPoint::Finite((self.a - self.d) / (2.0 * self.c)))
        }
    }

    pub fn to_dd(&self) -> MatrixDD {
        MatrixDD {
            a: self.a.into(),
            b: self.b.into(),
            c: self.c.into(),
            d: self.d.into(),
        }
    }
}

/// `2 arccosh(|t|/2)` computed through `arcsinh` so that it stays accurate
/// close to the parabolic limit.
pub fn length_from_trace(t: f64) -> f64 {
    let h = t.abs() / 2.0;
    if h <= 1.0 {
        return 0.0;
    }
    2.0 * ((h - 1.0) * (h + 1.0)).sqrt().asinh()
}

/// Inverse of [`length_from_trace`] on positive traces.
pub fn trace_from_length(l: f64) -> f64 {
    2.0 * (l / 2.0).cosh()
}

impl Mul for MoebiusMap {
    type Output = MoebiusMap;
    fn mul(self, r: MoebiusMap) -> MoebiusMap {
        MoebiusMap {
            a: self.a * r.a + self.b * r.c,
            b: self.a * r.b + self.b * r.d,
            c: self.c * r.a + self.d * r.c,
            d: self.c * r.b + self.d * r.d,
        }
    }
}

impl fmt::Display for MoebiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Matrix with double-double entries, used by the extended-precision mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatrixDD {
    pub a: DoubleDouble,
    pub b: DoubleDouble,
    pub c: DoubleDouble,
    pub d: DoubleDouble,
}

impl MatrixDD {
    pub const IDENTITY: MatrixDD = MatrixDD {
        a: DoubleDouble::ONE,
        b: DoubleDouble::ZERO,
        c: DoubleDouble::ZERO,
        d: DoubleDouble::ONE,
    };

    pub fn to_f64(&self) -> MoebiusMap {
        MoebiusMap {
            a: self.a.to_f64(),
            b: self.b.to_f64(),
            c: self.c.to_f64(),
            d: self.d.to_f64(),
        }
    }
}

impl Mul for MatrixDD {
    type Output = MatrixDD;
    fn mul(self, r: MatrixDD) -> MatrixDD {
        MatrixDD {
            a: self.a * r.a + self.b * r.c,
            b: self.a * r.b + self.b * r.d,
            c: self.c * r.a + self.d * r.c,
            d: self.c * r.b + self.d * r.d,
        }
    }
}
