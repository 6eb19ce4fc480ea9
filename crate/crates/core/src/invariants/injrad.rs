use argmin::core::{CostFunction, Executor};
use argmin::solver::neldermead::NelderMead;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuchsian::{Ball, BallEntry, FuchsianGroup, Word};
use crate::hyperbolic::{HPoint, MoebiusMap};
use crate::{exec, Config};

/// Loops whose half-length is within this distance of the minimum count as
/// realizing the injectivity radius.
pub const REALIZING_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InjRadReport {
    pub point: HPoint,
    /// Half the shortest displacement of a non-identity element at `point`.
    pub radius: f64,
    /// Elements (one of each `w`, `w⁻¹`) realizing the radius up to [`REALIZING_TOL`].
    pub realizing_words: Vec<Word>,
    pub depth: usize,
    /// Shortest displacement among words of maximal length in the ball.
    pub floor_certificate: f64,
    /// `floor_certificate ≥ 2·radius`: longer words cannot realize a shorter loop
    /// unless they displace less than the whole outer shell.
    pub certified: bool,
}

/// `4 sinh²(d/2)` for the displacement `d` of `m` at `p`.
fn displacement_key(m: &MoebiusMap, p: HPoint) -> f64 {
    let q = m.apply_interior(p);
    ((q.x - p.x).powi(2) + (q.y - p.y).powi(2)) / (p.y * q.y)
}

fn half_length(key: f64) -> f64 {
    (0.5 * key.sqrt()).asinh()
}

fn radius_only(entries: &[BallEntry], p: HPoint) -> f64 {
    half_length(
        entries
            .iter()
            .map(|e| displacement_key(&e.map, p))
            .fold(f64::INFINITY, f64::min),
    )
}

/// Injectivity radius at `p` from a precomputed ball.
pub fn injrad_in(ball: &Ball, p: HPoint) -> Result<InjRadReport> {
    let entries = ball.nontrivial();
    if entries.is_empty() {
        return Err(Error::EmptyBall);
    }
    let keys: Vec<f64> = entries
        .iter()
        .map(|e| displacement_key(&e.map, p))
        .collect();
    let radius = half_length(keys.iter().copied().fold(f64::INFINITY, f64::min));
    let realizing_words = entries
        .iter()
        .zip(&keys)
        .filter(|(e, &k)| {
            half_length(k) <= radius + REALIZING_TOL
                && !e.word.inverse().cmp_canonical(&e.word).is_lt()
        })
        .map(|(e, _)| e.word.clone())
        .collect();
    let floor_key = ball
        .sphere()
        .iter()
        .map(|e| displacement_key(&e.map, p))
        .fold(f64::INFINITY, f64::min);
    let floor_certificate = 2.0 * half_length(floor_key);
    Ok(InjRadReport {
        point: p,
        radius,
        realizing_words,
        depth: ball.depth(),
        floor_certificate,
        certified: floor_certificate >= 2.0 * radius,
    })
}

pub fn injrad_at(
    group: &FuchsianGroup,
    p: HPoint,
    depth: usize,
    cfg: &Config,
) -> Result<InjRadReport> {
    if depth < 1 {
        return Err(Error::EmptyBall);
    }
    injrad_in(&Ball::new(group, depth, cfg)?, p)
}

/// Axis-parallel sampling box in the half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Region {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Region {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Result<Self> {
        let r = Region {
            x_min,
            x_max,
            y_min,
            y_max,
        };
        if !(x_min < x_max && y_min < y_max && y_min > 0.0)
            || ![x_min, x_max, y_min, y_max].iter().all(|v| v.is_finite())
        {
            return Err(Error::DegenerateRegion(format!("{r:?}")));
        }
        Ok(r)
    }

    pub fn contains(&self, p: HPoint) -> bool {
        (self.x_min..=self.x_max).contains(&p.x) && (self.y_min..=self.y_max).contains(&p.y)
    }
}

/// Best point found by [`sup_injrad`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SupInjRad {
    /// Injectivity radius at `argmax`, a lower bound for the supremum.
    pub lower: f64,
    pub argmax: HPoint,
    pub report: InjRadReport,
    /// At least three loops realize the radius at `argmax`.
    pub balanced: bool,
    pub evaluations: usize,
}

struct NegRadius<'a> {
    entries: &'a [BallEntry],
    region: Region,
}

impl CostFunction for NegRadius<'_> {
    type Param = Vec<f64>;
    type Output = f64;

    fn cost(&self, p: &Vec<f64>) -> std::result::Result<f64, argmin::core::Error> {
        let pt = HPoint { x: p[0], y: p[1] };
        if !self.region.contains(pt) {
            return Ok(1.0);
        }
        Ok(-radius_only(self.entries, pt))
    }
}

fn nelder_mead(
    entries: &[BallEntry],
    region: Region,
    start: HPoint,
    step: f64,
    iters: u64,
) -> HPoint {
    let simplex = vec![
        vec![start.x, start.y],
        vec![start.x + step, start.y],
        vec![start.x, start.y + step],
    ];
    let solver = NelderMead::new(simplex)
        .with_sd_tolerance(1e-14)
        .expect("positive tolerance");
    let run = Executor::new(NegRadius { entries, region }, solver)
        .configure(|s| s.max_iters(iters))
        .run();
    match run.ok().and_then(|r| r.state.best_param) {
        Some(p) if region.contains(HPoint { x: p[0], y: p[1] }) => HPoint { x: p[0], y: p[1] },
        _ => start,
    }
}

/// Newton iteration on `r₁ = r₂ = r₃` for the three shortest loops at `start`,
/// the configuration of a local maximum of the injectivity radius.
fn balance(entries: &[BallEntry], region: Region, start: HPoint) -> Option<HPoint> {
    let mut ranked: Vec<(f64, &BallEntry)> = entries
        .iter()
        .filter(|e| !e.word.inverse().cmp_canonical(&e.word).is_lt())
        .map(|e| (displacement_key(&e.map, start), e))
        .collect();
    ranked.sort_by(|a, b| a.0.total_cmp(&b.0));
    if ranked.len() < 3 {
        return None;
    }
    let maps = [ranked[0].1.map, ranked[1].1.map, ranked[2].1.map];
    let residual = |p: HPoint| {
        let r = maps.map(|m| half_length(displacement_key(&m, p)));
        [r[0] - r[1], r[1] - r[2]]
    };
    let mut p = start;
    for _ in 0..40 {
        let f = residual(p);
        if f[0].abs().max(f[1].abs()) < 1e-15 {
            break;
        }
        let h = 1e-7 * p.y;
        let fx = residual(HPoint { x: p.x + h, y: p.y });
        let fy = residual(HPoint { x: p.x, y: p.y + h });
        let j = [
            [(fx[0] - f[0]) / h, (fy[0] - f[0]) / h],
            [(fx[1] - f[1]) / h, (fy[1] - f[1]) / h],
        ];
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det.abs() < 1e-300 {
            return None;
        }
        let dx = (f[0] * j[1][1] - f[1] * j[0][1]) / det;
        let dy = (j[0][0] * f[1] - j[1][0] * f[0]) / det;
        p = HPoint {
            x: p.x - dx,
            y: p.y - dy,
        };
        if !region.contains(p) {
            return None;
        }
    }
    Some(p)
}

/// Number of grid maxima refined locally.
const REFINED_CANDIDATES: usize = 6;

/// Lower bound for `sup_p R_p` over `region`: a `grid × grid` scan followed by
/// simplex ascent and a three-loop balancing step from the best samples.
pub fn sup_injrad_in(
    ball: &Ball,
    region: Region,
    grid: usize,
    refine_iters: usize,
    cfg: &Config,
) -> Result<SupInjRad> {
    if grid < 2 {
        return Err(Error::DegenerateRegion(format!(
            "grid must be at least 2, got {grid}"
        )));
    }
    let entries = ball.nontrivial();
    if entries.is_empty() {
        return Err(Error::EmptyBall);
    }
    let (dx, dy) = (
        (region.x_max - region.x_min) / (grid - 1) as f64,
        (region.y_max - region.y_min) / (grid - 1) as f64,
    );
    let points: Vec<HPoint> = (0..grid * grid)
        .map(|k| HPoint {
            x: region.x_min + (k % grid) as f64 * dx,
            y: region.y_min + (k / grid) as f64 * dy,
        })
        .collect();
    let values = exec::map(cfg.exec, &points, |&p| radius_only(entries, p));
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]).then(a.cmp(&b)));
    let starts: Vec<HPoint> = order
        .iter()
        .take(REFINED_CANDIDATES)
        .map(|&k| points[k])
        .collect();
    let step = 0.5 * dx.min(dy);
    let refined = exec::map(cfg.exec, &starts, |&s| {
        let p = nelder_mead(entries, region, s, step, refine_iters as u64);
        let r = radius_only(entries, p);
        match balance(entries, region, p) {
            Some(q) if radius_only(entries, q) >= r => (radius_only(entries, q), q),
            _ => (r, p),
        }
    });
    let (mut lower, mut argmax) = (values[order[0]], points[order[0]]);
    for (r, p) in refined {
        if r > lower {
            (lower, argmax) = (r, p);
        }
    }
    let report = injrad_in(ball, argmax)?;
    Ok(SupInjRad {
        lower: report.radius,
        argmax,
        balanced: report.realizing_words.len() >= 3,
        report,
        evaluations: points.len(),
    })
}

pub fn sup_injrad(
    group: &FuchsianGroup,
    region: Region,
    grid: usize,
    refine_iters: usize,
    depth: usize,
    cfg: &Config,
) -> Result<SupInjRad> {
    if depth < 1 {
        return Err(Error::EmptyBall);
    }
    sup_injrad_in(
        &Ball::new(group, depth, cfg)?,
        region,
        grid,
        refine_iters,
        cfg,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperbolic::dist;
    use crate::surfaces::thrice_punctured_sphere;

    #[test]
    fn displacement_key_matches_distance() {
        let m = MoebiusMap {
            a: 5.0,
            b: 2.0,
            c: 2.0,
            d: 1.0,
        };
        let p = HPoint::new(0.3, 0.8);
        let d = dist(p, m.apply_interior(p));
        assert!((2.0 * half_length(displacement_key(&m, p)) - d).abs() < 1e-13);
    }

    #[test]
    fn high_point_sees_the_cusp_loop() {
        let g = thrice_punctured_sphere();
        for y in [3.0, 10.0, 100.0] {
            let r = injrad_at(&g, HPoint::new(0.3, y), 4, &Config::default()).unwrap();
            assert!((r.radius - (1.0 / y).asinh()).abs() < 1e-12);
            assert_eq!(r.realizing_words, vec![Word::new([1])]);
            assert!(r.certified);
        }
    }

    #[test]
    fn rejects_bad_regions() {
        assert!(Region::new(0.0, 1.0, 0.0, 1.0).is_err());
        assert!(Region::new(1.0, 0.0, 0.5, 1.0).is_err());
        let g = thrice_punctured_sphere();
        let r = Region::new(-1.0, 1.0, 0.5, 2.0).unwrap();
        assert!(sup_injrad(&g, r, 1, 10, 3, &Config::default()).is_err());
    }
}
