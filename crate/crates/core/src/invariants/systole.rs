use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fuchsian::{
    conjugacy_classes_in, simplicity_in, Ball, ConjClass, FuchsianGroup, Simplicity, Word,
};
use crate::hyperbolic::Classification;
use crate::Config;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystoleReport {
    /// Shortest closed geodesic among classes represented in the ball.
    pub length: f64,
    pub class: ConjClass,
    /// Shortest primitive geodesic with a crossing certificate, if any.
    pub nonsimple_length: Option<f64>,
    pub nonsimple_class: Option<ConjClass>,
    /// Conjugator whose translate of the axis crosses the axis.
    pub witness: Option<Word>,
    /// Smallest `|trace|` of a hyperbolic element anywhere in the ball.
    pub min_trace: f64,
    pub depth: usize,
    pub classes_examined: usize,
}

pub fn systoles_in(
    group: &FuchsianGroup,
    ball: &Ball,
    trace_bound: f64,
    cfg: &Config,
) -> Result<SystoleReport> {
    let classes = conjugacy_classes_in(ball, trace_bound, cfg);
    let Some(first) = classes.first() else {
        return Err(Error::NoHyperbolicClass);
    };
    let min_trace = ball
        .nontrivial()
        .iter()
        .filter(|e| e.map.classify_with(cfg.parabolic_tol) == Classification::Hyperbolic)
        .map(|e| e.map.trace().abs())
        .fold(f64::INFINITY, f64::min);
    let mut class = first.clone();
    class.simplicity = simplicity_in(group, &class, ball, cfg)?;

    let mut nonsimple = None;
    let mut examined = 0;
    for cls in classes.iter().filter(|c| c.primitive) {
        examined += 1;
        let s = if cls.rep == class.rep {
            class.simplicity.clone()
        } else {
            simplicity_in(group, cls, ball, cfg)?
        };
        if let Simplicity::NonSimple { witness } = &s {
            let mut found = cls.clone();
            found.simplicity = s.clone();
            nonsimple = Some((found, witness.clone()));
            break;
        }
    }
    let (nonsimple_class, witness) = nonsimple.map_or((None, None), |(c, w)| (Some(c), Some(w)));
    Ok(SystoleReport {
        length: class.length,
        nonsimple_length: nonsimple_class.as_ref().map(|c| c.length),
        class,
        nonsimple_class,
        witness,
        min_trace,
        depth: ball.depth(),
        classes_examined: examined,
    })
}

/// Systole and non-simple systole among classes with `|trace| ≤ trace_bound`
/// represented by words of length `≤ depth`.
pub fn systoles(
    group: &FuchsianGroup,
    depth: usize,
    trace_bound: f64,
    cfg: &Config,
) -> Result<SystoleReport> {
    if depth < 1 {
        return Err(Error::DomainError("depth must be at least 1".into()));
    }
    let ball = Ball::new(group, depth, cfg)?;
    systoles_in(group, &ball, trace_bound, cfg)
}
