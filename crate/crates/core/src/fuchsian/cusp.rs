use serde::{Deserialize, Serialize};

use super::ball::Ball;
use super::classes::{ConjClass, Simplicity};
use super::group::{CuspData, FuchsianGroup, Generator};
use super::word::Word;
use crate::error::{Error, Result};
use crate::exec;
use crate::hyperbolic::{
    horodisk_image, isometric_circle, BoundaryPoint, Horodisk, MoebiusMap, Tangency,
};
use crate::Config;

/// Conjugates the group so that the parabolic element `parabolic` becomes
/// `z ↦ z + ω` with `ω > 0`.
///
/// When the peripheral word is a single letter, that generator is moved to
/// position 0 (inverted if needed) and set to the exact translation. Longer
/// peripheral words (e.g. a commutator) are recorded in the cusp data instead.
pub fn cusp_normalize(group: &FuchsianGroup, parabolic: &Word) -> Result<FuchsianGroup> {
    let p = group.evaluate(parabolic)?;
    let fixed = p.parabolic_fixed_point()?;
    let to_inf = match fixed {
        BoundaryPoint::Infinity => MoebiusMap::IDENTITY,
        // z ↦ -1/(z - x0)
        BoundaryPoint::Finite(x0) => MoebiusMap {
            a: 0.0,
            b: -1.0,
            c: 1.0,
            d: -x0,
        },
    };
    let q = p.conjugate_by(&to_inf);
    // q = ±[[1, t], [0, 1]] up to rounding.
    let t = q.b / q.d;
    let (peripheral, omega) = if t < 0.0 {
        (parabolic.inverse(), -t)
    } else {
        (parabolic.clone(), t)
    };

    let mut generators: Vec<Generator> = group
        .generators
        .iter()
        .map(|g| Generator {
            label: g.label.clone(),
            map: g.map.conjugate_by(&to_inf),
        })
        .collect();
    let mut peripheral = peripheral;
    if let [l] = *peripheral.letters() {
        let idx = l.unsigned_abs() as usize - 1;
        let mut gen = generators.remove(idx);
        if l < 0 {
            gen.label = format!("{}^-1", gen.label);
        }
        gen.map = MoebiusMap::translation(omega);
        generators.insert(0, gen);
        peripheral = Word::letter(0, false);
    }
    Ok(FuchsianGroup {
        label: group.label.clone(),
        generators,
        assumed_free: group.assumed_free,
        cusp: Some(CuspData {
            peripheral,
            omega: Some(omega),
        }),
    })
}

fn normalized_cusp(group: &FuchsianGroup) -> Result<(&CuspData, f64)> {
    let cusp = group.cusp.as_ref().ok_or(Error::NoCusp)?;
    let omega = cusp.omega.ok_or(Error::NotNormalized)?;
    Ok((cusp, omega))
}

/// Maximal embedded horodisk at `∞` of a cusp-normalized group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CuspReport {
    pub omega: f64,
    /// Smallest `|c|` over the ball outside the peripheral subgroup.
    pub min_c: f64,
    /// Height of the maximal horodisk `{Im z > height}`.
    pub height: f64,
    /// Area `ω / height` of the maximal cusp region.
    pub area: f64,
    pub realizing: Word,
    pub realizing_label: String,
    /// Position of `realizing(B)` relative to `B`, via isometric circles.
    pub tangency: Tangency,
    pub isometric_radius: f64,
    pub depth: usize,
    /// Elements with `c ≈ 0` found outside the peripheral powers; non-zero
    /// values signal a non-discrete or mis-normalized input.
    pub stray_stabilizers: usize,
}

/// Reduced words `u^k`, `0 < |k|`, of length at most `max_len`.
fn peripheral_powers(u: &Word, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if u.is_empty() {
        return out;
    }
    for sign in [1, -1] {
        let base = u.pow(sign);
        let mut acc = base.clone();
        // Reduced length grows by at least one per cyclically reduced step.
        for _ in 0..=max_len {
            if acc.len() <= max_len {
                out.push(acc.clone());
            }
            if acc.len() > max_len + u.len() {
                break;
            }
            acc = acc.concat(&base);
        }
    }
    out
}

pub fn maximal_cusp_in(group: &FuchsianGroup, ball: &Ball, cfg: &Config) -> Result<CuspReport> {
    let (cusp, omega) = normalized_cusp(group)?;
    let powers = peripheral_powers(&cusp.peripheral, ball.depth());
    let nontrivial = ball.nontrivial();
    // |c| of each non-peripheral element; None for peripheral powers.
    let c_values: Vec<Option<f64>> = exec::map(cfg.exec, nontrivial, |e| {
        (!powers.contains(&e.word)).then(|| e.map.c.abs())
    });
    let mut best: Option<(f64, usize)> = None;
    let mut stray = 0;
    for (i, c) in c_values.into_iter().enumerate() {
        let Some(c) = c else { continue };
        let m = &nontrivial[i].map;
        if c <= 1e-9 * m.a.abs().max(m.d.abs()).max(1.0) {
            stray += 1;
            continue;
        }
        if best.is_none_or(|(b, _)| c < b) {
            best = Some((c, i));
        }
    }
    let (min_c, idx) = best.ok_or(Error::EmptyBall)?;
    let entry = &ball.nontrivial()[idx];
    let height = 1.0 / min_c;
    let b = Horodisk::at_infinity(height)?;
    let tangency = horodisk_image(&entry.map, &b).status;
    let isometric_radius = isometric_circle(&entry.map.inverse())?.radius;
    Ok(CuspReport {
        omega,
        min_c,
        height,
        area: omega * min_c,
        realizing: entry.word.clone(),
        realizing_label: group.word_string(&entry.word),
        tangency,
        isometric_radius,
        depth: ball.depth(),
        stray_stabilizers: stray,
    })
}

pub fn maximal_cusp(group: &FuchsianGroup, depth: usize, cfg: &Config) -> Result<CuspReport> {
    if depth < 1 {
        return Err(Error::DomainError("depth must be at least 1".into()));
    }
    let ball = Ball::new(group, depth, cfg)?;
    maximal_cusp_in(group, &ball, cfg)
}

/// Conjugates by `z ↦ z / height` so that the maximal horodisk becomes
/// `{Im z > 1}`; the new width equals the cusp area.
pub fn rescale_to_unit_height(group: &FuchsianGroup, report: &CuspReport) -> Result<FuchsianGroup> {
    let (cusp, omega) = normalized_cusp(group)?;
    let s = MoebiusMap::dilation(1.0 / report.height);
    let mut g = group.conjugate(&s);
    let new_omega = omega / report.height;
    if let [1] = *cusp.peripheral.letters() {
        g.generators[0].map = MoebiusMap::translation(new_omega);
    }
    g.cusp = Some(CuspData {
        peripheral: cusp.peripheral.clone(),
        omega: Some(new_omega),
    });
    Ok(g)
}

/// Highest point reached by the lifts of a simple closed geodesic, compared
/// with `sqrt(1 + ω²/4)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CuspExclusion {
    pub max_apex: f64,
    pub bound: f64,
    pub holds: bool,
}

pub fn cusp_exclusion_check_in(
    group: &FuchsianGroup,
    cls: &ConjClass,
    ball: &Ball,
    cfg: &Config,
) -> Result<CuspExclusion> {
    let (_, omega) = normalized_cusp(group)?;
    if !matches!(cls.simplicity, Simplicity::Simple { .. }) {
        return Err(Error::NotSimple);
    }
    let axis = group.evaluate(&cls.rep)?.axis()?;
    let (e1, e2) = axis.endpoints();
    let apexes = exec::map(cfg.exec, ball.entries(), |e| {
        match (e.map.apply_boundary(e1), e.map.apply_boundary(e2)) {
            (BoundaryPoint::Finite(x), BoundaryPoint::Finite(y)) => 0.5 * (x - y).abs(),
            _ => f64::INFINITY,
        }
    });
    let max_apex = apexes.into_iter().fold(0.0, f64::max);
    let bound = (1.0 + omega * omega / 4.0).sqrt();
    Ok(CuspExclusion {
        max_apex,
        bound,
        holds: max_apex <= bound + 1e-9,
    })
}

pub fn cusp_exclusion_check(
    group: &FuchsianGroup,
    cls: &ConjClass,
    depth: usize,
    cfg: &Config,
) -> Result<CuspExclusion> {
    let ball = Ball::new(group, depth, cfg)?;
    cusp_exclusion_check_in(group, cls, &ball, cfg)
}
