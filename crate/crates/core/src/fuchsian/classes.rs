use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::ball::Ball;
use super::group::FuchsianGroup;
use super::word::Word;
use crate::error::{Error, Result};
use crate::exec;
use crate::hyperbolic::{
    length_from_trace, BoundaryPoint, Classification, Geodesic, GeodesicRelation, MoebiusMap,
};
use crate::Config;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Simplicity {
    /// No crossing translate of the axis among conjugators of length ≤ depth.
    Simple {
        depth: usize,
    },
    /// `witness · axis` crosses the axis.
    NonSimple {
        witness: Word,
    },
    Unknown,
}

impl Simplicity {
    pub fn is_simple(&self) -> bool {
        matches!(self, Simplicity::Simple { .. })
    }

    pub fn is_non_simple(&self) -> bool {
        matches!(self, Simplicity::NonSimple { .. })
    }
}

/// A hyperbolic conjugacy class (an unoriented closed geodesic).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjClass {
    pub rep: Word,
    pub trace: f64,
    pub length: f64,
    pub primitive: bool,
    pub simplicity: Simplicity,
}

impl ConjClass {
    /// Class of the closed geodesic represented by `w`.
    pub fn from_word(group: &FuchsianGroup, w: &Word) -> Result<Self> {
        let rep = w.conjugacy_canonical();
        let m = group.evaluate(&rep)?;
        if m.classify() != Classification::Hyperbolic {
            return Err(Error::NotHyperbolic { trace: m.trace() });
        }
        Ok(ConjClass {
            primitive: !rep.is_proper_power(),
            trace: m.trace(),
            length: length_from_trace(m.trace()),
            rep,
            simplicity: Simplicity::Unknown,
        })
    }
}

fn by_length(a: &ConjClass, b: &ConjClass) -> Ordering {
    a.length
        .total_cmp(&b.length)
        .then_with(|| a.rep.cmp_canonical(&b.rep))
}

/// Hyperbolic classes with `|trace| ≤ max_trace` whose cyclically reduced
/// representative lies in `ball`, one per unoriented class, sorted by length.
pub fn conjugacy_classes_in(ball: &Ball, max_trace: f64, cfg: &Config) -> Vec<ConjClass> {
    let found: Vec<Option<ConjClass>> = exec::map(cfg.exec, ball.nontrivial(), |e| {
        let w = &e.word;
        if !w.is_cyclically_reduced() || w.conjugacy_canonical() != *w {
            return None;
        }
        let tr = e.map.trace();
        if tr.abs() > max_trace
            || e.map.classify_with(cfg.parabolic_tol) != Classification::Hyperbolic
        {
            return None;
        }
        Some(ConjClass {
            rep: w.clone(),
            trace: tr,
            length: length_from_trace(tr),
            primitive: !w.is_proper_power(),
            simplicity: Simplicity::Unknown,
        })
    });
    let mut classes: Vec<ConjClass> = found.into_iter().flatten().collect();
    classes.sort_by(by_length);
    classes
}

pub fn conjugacy_classes(
    group: &FuchsianGroup,
    max_trace: f64,
    depth: usize,
    cfg: &Config,
) -> Result<Vec<ConjClass>> {
    if depth < 1 {
        return Err(Error::DomainError("depth must be at least 1".into()));
    }
    let ball = Ball::new(group, depth, cfg)?;
    Ok(conjugacy_classes_in(&ball, max_trace, cfg))
}

fn interleave(p: (BoundaryPoint, BoundaryPoint), q: (BoundaryPoint, BoundaryPoint)) -> bool {
    let t = crate::hyperbolic::cross_ratio(p.0, p.1, q.0, q.1);
    t < 0.0
}

/// Searches `ball` for a conjugator `w` such that the axis of `w g w⁻¹`
/// crosses the axis of `g`. The first witness in ball order is re-verified
/// on the conjugated matrix before being returned.
pub fn simplicity_in(
    group: &FuchsianGroup,
    cls: &ConjClass,
    ball: &Ball,
    cfg: &Config,
) -> Result<Simplicity> {
    let g = group.evaluate(&cls.rep)?;
    let axis = g.axis()?;
    let ends = axis.endpoints();
    let candidates = ball.nontrivial();
    let mut start = 0;
    while start < candidates.len() {
        let hit = exec::position_first(cfg.exec, &candidates[start..], |e| {
            let moved = (e.map.apply_boundary(ends.0), e.map.apply_boundary(ends.1));
            if axis.has_endpoint(moved.0, crate::hyperbolic::ENDPOINT_TOL)
                || axis.has_endpoint(moved.1, crate::hyperbolic::ENDPOINT_TOL)
            {
                return false;
            }
            interleave(ends, moved)
        });
        let Some(offset) = hit else { break };
        let e = &candidates[start + offset];
        if is_crossing_witness(&g, &axis, &e.map) {
            return Ok(Simplicity::NonSimple {
                witness: e.word.clone(),
            });
        }
        start += offset + 1;
    }
    Ok(Simplicity::Simple {
        depth: ball.depth(),
    })
}

fn is_crossing_witness(g: &MoebiusMap, axis: &Geodesic, w: &MoebiusMap) -> bool {
    let conj = g.conjugate_by(w);
    match conj.axis() {
        Ok(other) => axis.relation(&other) == GeodesicRelation::Crossing,
        Err(_) => false,
    }
}

pub fn simplicity(
    group: &FuchsianGroup,
    cls: &ConjClass,
    depth: usize,
    cfg: &Config,
) -> Result<Simplicity> {
    let ball = Ball::new(group, depth, cfg)?;
    simplicity_in(group, cls, &ball, cfg)
}

/// Checks a claimed witness independently of the search.
pub fn verify_witness(group: &FuchsianGroup, cls: &ConjClass, witness: &Word) -> Result<bool> {
    let g = group.evaluate(&cls.rep)?;
    let axis = g.axis()?;
    let w = group.evaluate(witness)?;
    Ok(is_crossing_witness(&g, &axis, &w))
}
