use serde::{Deserialize, Serialize};

use super::moebius::MoebiusMap;
use super::point::{BoundaryPoint, HPoint};
use crate::error::{Error, Result};

/// Relative tolerance for tangency decisions.
pub const TANGENCY_TOL: f64 = 1e-12;

/// A euclidean circle centered on the real line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: f64,
    pub radius: f64,
}

/// A horodisk: `{Im z > size}` when based at `∞`, otherwise a euclidean disk
/// of diameter `size` tangent to the real line at `base`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Horodisk {
    pub base: BoundaryPoint,
    pub size: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tangency {
    Disjoint,
    Tangent,
    Overlapping,
}

/// Image horodisk together with its position relative to the source.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HorodiskImage {
    pub image: Horodisk,
    pub status: Tangency,
}

impl Horodisk {
    pub fn new(base: BoundaryPoint, size: f64) -> Result<Self> {
        if !(size > 0.0) || !size.is_finite() {
            return Err(Error::DomainError(format!(
                "horodisk size must be positive, got {size}"
            )));
        }
        Ok(Horodisk { base, size })
    }

    pub fn at_infinity(height: f64) -> Result<Self> {
        Horodisk::new(BoundaryPoint::Infinity, height)
    }

    pub fn contains(&self, p: HPoint) -> bool {
        self.signed_distance(p) < 0.0
    }

    /// Oriented distance from `p` to the horocycle bounding the disk,
    /// negative inside.
    pub fn signed_distance(&self, p: HPoint) -> f64 {
        match self.base {
            BoundaryPoint::Infinity => (self.size / p.y).ln(),
            BoundaryPoint::Finite(x0) => {
                let dx = p.x - x0;
                ((dx * dx + p.y * p.y) / (self.size * p.y)).ln()
            }
        }
    }

    /// Image under `m`.
    pub fn image(&self, m: &MoebiusMap) -> Horodisk {
        // Reduce to a horodisk at ∞: this one is (m ∘ t)({Im > h}).
        let (t, h) = self.normalizer();
        let g = *m * t;
        let size = if g.c == 0.0 {
            h * g.a * g.a
        } else {
            1.0 / (g.c * g.c * h)
        };
        Horodisk {
            base: m.apply_boundary(self.base),
            size,
        }
    }

    /// A map `t` and height `h` with `t({Im > h}) = self`.
    fn normalizer(&self) -> (MoebiusMap, f64) {
        match self.base {
            BoundaryPoint::Infinity => (MoebiusMap::IDENTITY, self.size),
            // z ↦ x0 - 1/z sends {Im > h} to the horodisk of diameter 1/h at x0.
            BoundaryPoint::Finite(x0) => (
                MoebiusMap {
                    a: x0,
                    b: -1.0,
                    c: 1.0,
                    d: 0.0,
                },
                1.0 / self.size,
            ),
        }
    }

    /// Direct euclidean comparison of two horodisks.
    pub fn relation(&self, other: &Horodisk) -> Tangency {
        use BoundaryPoint::{Finite, Infinity};
        let classify = |gap: f64, scale: f64| {
            if gap.abs() <= TANGENCY_TOL * scale {
                Tangency::Tangent
            } else if gap > 0.0 {
                Tangency::Disjoint
            } else {
                Tangency::Overlapping
            }
        };
        match (self.base, other.base) {
            (Infinity, Infinity) => Tangency::Overlapping,
            (Infinity, Finite(_)) => classify(self.size - other.size, self.size),
            (Finite(_), Infinity) => classify(other.size - self.size, other.size),
            (Finite(x1), Finite(x2)) => {
                let (r1, r2) = (self.size / 2.0, other.size / 2.0);
                let dx = x1 - x2;
                let dy = r1 - r2;
                // Compare squared centre distance with (r1 + r2)^2: the gap is dx^2 - 4 r1 r2.
                let gap = dx * dx + dy * dy - (r1 + r2) * (r1 + r2);
                classify(gap, (r1 + r2) * (r1 + r2))
            }
        }
    }
}

/// Isometric circle `|cz + d| = 1` of a map not fixing `∞`.
pub fn isometric_circle(m: &MoebiusMap) -> Result<Circle> {
    let scale = m.a.abs().max(m.b.abs()).max(m.d.abs()).max(1.0);
    if m.c.abs() < 1e-14 * scale {
        return Err(Error::FixesInfinity { c: m.c });
    }
    Ok(Circle {
        center: -m.d / m.c,
        radius: 1.0 / m.c.abs(),
    })
}

/// Image of `b` under `m` and whether `b`, `m(b)` are disjoint, tangent or
/// overlapping, decided through the isometric circle of `m⁻¹`: both disks are
/// disjoint from (tangent to) `I(m⁻¹)` exactly when they are disjoint from
/// (tangent to) each other.
pub fn horodisk_image(m: &MoebiusMap, b: &Horodisk) -> HorodiskImage {
    let image = b.image(m);
    // Normalize the source horodisk to ∞ and conjugate m accordingly.
    let (t, h) = b.normalizer();
    let g = t.inverse() * *m * t;
    let status = match isometric_circle(&g.inverse()) {
        // g fixes ∞, so it maps {Im > h} to a horodisk at ∞.
        Err(_) => Tangency::Overlapping,
        Ok(circle) => {
            let gap = h - circle.radius;
            if gap.abs() <= TANGENCY_TOL * h.max(circle.radius) {
                Tangency::Tangent
            } else if gap > 0.0 {
                Tangency::Disjoint
            } else {
                Tangency::Overlapping
            }
        }
    };
    HorodiskImage { image, status }
}
