use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::dilog::rogers_dilog_split;
use super::{IdentityReport, TargetPair};
use crate::error::{Error, Result};
use crate::fuchsian::{Ball, FuchsianGroup, Word};
use crate::hyperbolic::{Classification, Geodesic, GeodesicRelation, MoebiusMap};
use crate::numeric::CompensatedSum;
use crate::surfaces::{
    pair_of_pants, pants_boundary_words, SurfaceKind, SurfaceSpec, AREA_EULER_MINUS_ONE,
};
use crate::{exec, Config};

/// Word-length bound used when none is given; long enough that every
/// orthogeodesic of length `≤ 16` on moderately sized pants is reached.
pub const BRIDGEMAN_DEFAULT_DEPTH: usize = 12;

/// A geodesic arc meeting the boundary orthogonally at both ends.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Orthogeodesic {
    /// Boundary components at the two ends, `pair.0 ≤ pair.1`.
    pub pair: (usize, usize),
    /// Double-coset representative `w`: the arc runs from the axis of boundary
    /// `pair.0` to `w` applied to the axis of boundary `pair.1`.
    pub word: Word,
    pub length: f64,
}

/// `R(sech²(s/2))`, the contribution of an orthogeodesic of length `s`.
pub fn bridgeman_term(s: f64) -> Result<f64> {
    if !(s > 0.0) {
        return Err(Error::NonPositiveLength(s));
    }
    let half = 0.5 * s;
    let sech2 = 1.0 / half.cosh().powi(2);
    let tanh2 = half.tanh().powi(2);
    Ok(rogers_dilog_split(sech2, tanh2))
}

fn boundary_maps(group: &FuchsianGroup) -> Result<[MoebiusMap; 3]> {
    if group.rank() != 2 {
        return Err(Error::DomainError(format!(
            "a pants group has two generators, not {}",
            group.rank()
        )));
    }
    let words = pants_boundary_words();
    let mut maps = [MoebiusMap::IDENTITY; 3];
    for (k, w) in words.iter().enumerate() {
        let m = group.evaluate(w)?;
        if m.classify() != Classification::Hyperbolic {
            return Err(Error::CuspedBoundary(k));
        }
        maps[k] = m;
    }
    Ok(maps)
}

/// Double-coset representatives for `⟨a⟩ \ F(a, b) / ⟨target⟩` where the
/// letters of `w` are `1 = a`, `2 = b`: reduced words whose first letter is
/// not `a^±1` and whose last letter is not `target^±1`.
fn is_coset_rep(w: &Word, target_letter: i32) -> bool {
    let l = w.letters();
    match (l.first(), l.last()) {
        (None, None) => target_letter != 1,
        (Some(&f), Some(&e)) => f.abs() != 1 && e.abs() != target_letter,
        _ => unreachable!(),
    }
}

/// Orthogeodesics between boundaries `i` and `j`, enumerated over words of
/// length `≤ depth` in the free basis `{g_i, g_j}` (or `{g_i, g_other}` when
/// `i = j`).
fn pair_spectrum(
    maps: &[MoebiusMap; 3],
    i: usize,
    j: usize,
    cutoff: f64,
    depth: usize,
    cfg: &Config,
) -> Result<Vec<Orthogeodesic>> {
    let other = if i == j { (i + 1) % 3 } else { j };
    let basis = FuchsianGroup::from_maps("basis", &["a", "b"], &[maps[i], maps[other]])?;
    let target_letter = if i == j { 1 } else { 2 };
    let ball = Ball::new(&basis, depth, cfg)?;
    let axis_i = maps[i].axis()?;
    let (e1, e2) = maps[j].axis()?.endpoints();
    let boundary_words = pants_boundary_words();
    let found = exec::map(cfg.exec, ball.entries(), |e| {
        let w = &e.word;
        if !is_coset_rep(w, target_letter)
            || (i == j && (w.is_empty() || w.inverse().cmp_canonical(w).is_lt()))
        {
            return None;
        }
        let image = Geodesic::new(e.map.apply_boundary(e1), e.map.apply_boundary(e2)).ok()?;
        match axis_i.relation(&image) {
            GeodesicRelation::Disjoint { distance } if distance <= cutoff => {
                let substituted = w.letters().iter().flat_map(|&l| {
                    let src = if l.abs() == 1 {
                        &boundary_words[i]
                    } else {
                        &boundary_words[other]
                    };
                    if l > 0 { src.clone() } else { src.inverse() }
                        .letters()
                        .to_vec()
                });
                Some(Orthogeodesic {
                    pair: (i, j),
                    word: Word::new(substituted),
                    length: distance,
                })
            }
            _ => None,
        }
    });
    Ok(found.into_iter().flatten().collect())
}

/// Orthogeodesics of length `≤ cutoff` on a pants group with geodesic
/// boundary, one per double coset, sorted by length.
pub fn orthogeodesic_spectrum_of(
    group: &FuchsianGroup,
    cutoff: f64,
    depth: usize,
    cfg: &Config,
) -> Result<Vec<Orthogeodesic>> {
    if depth < 1 {
        return Err(Error::EmptyBall);
    }
    let maps = boundary_maps(group)?;
    let mut out = Vec::new();
    for i in 0..3 {
        for j in i..3 {
            out.extend(pair_spectrum(&maps, i, j, cutoff, depth, cfg)?);
        }
    }
    out.sort_by(|a, b| {
        a.length
            .total_cmp(&b.length)
            .then(a.pair.cmp(&b.pair))
            .then_with(|| a.word.cmp_canonical(&b.word))
    });
    Ok(out)
}

fn pants_group(spec: &SurfaceSpec) -> Result<FuchsianGroup> {
    match spec.kind {
        SurfaceKind::PairOfPants { l1, l2, l3 } => {
            if let Some(k) = [l1, l2, l3].iter().position(|&l| l == 0.0) {
                return Err(Error::CuspedBoundary(k));
            }
            pair_of_pants(l1, l2, l3)
        }
        _ => Err(Error::DomainError(format!("{spec} is not a pair of pants"))),
    }
}

pub fn orthogeodesic_spectrum(
    spec: &SurfaceSpec,
    cutoff: f64,
    depth: usize,
    cfg: &Config,
) -> Result<Vec<Orthogeodesic>> {
    orthogeodesic_spectrum_of(&pants_group(spec)?, cutoff, depth, cfg)
}

/// Sums `R(sech²(s/2))` over the orthogeodesic spectrum; the full sum equals
/// `(π/4)·area = π²/2`.
pub fn verify_bridgeman_of(
    group: &FuchsianGroup,
    cutoff: f64,
    depth: usize,
    cfg: &Config,
    surface: &str,
) -> Result<IdentityReport> {
    let spectrum = orthogeodesic_spectrum_of(group, cutoff, depth, cfg)?;
    let mut sum = CompensatedSum::default();
    for o in &spectrum {
        sum.add(bridgeman_term(o.length)?);
    }
    let partial_sum = sum.value();
    let target = 0.25 * PI * AREA_EULER_MINUS_ONE;
    let residual = target - partial_sum;
    Ok(IdentityReport {
        surface: surface.to_string(),
        identity: "bridgeman".into(),
        cutoff,
        depth: Some(depth),
        terms: spectrum.len(),
        partial_sum,
        target,
        residual,
        convention: "standard".into(),
        targets: TargetPair {
            halved: target,
            full: target,
        },
        residuals: TargetPair {
            halved: residual,
            full: residual,
        },
    })
}

pub fn verify_bridgeman(
    spec: &SurfaceSpec,
    cutoff: f64,
    depth: usize,
    cfg: &Config,
) -> Result<IdentityReport> {
    verify_bridgeman_of(&pants_group(spec)?, cutoff, depth, cfg, &spec.tag())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::rogers_dilog;

    #[test]
    fn term_range_and_accuracy() {
        for s in [1e-3, 0.5, 1.0, 3.0, 10.0, 30.0] {
            let t = bridgeman_term(s).unwrap();
            assert!(t > 0.0 && t < PI * PI / 6.0);
            let direct = rogers_dilog(1.0 / (0.5 * s).cosh().powi(2)).unwrap();
            assert!((t - direct).abs() < 1e-13, "s = {s}");
        }
        assert!(bridgeman_term(0.0).is_err());
    }

    #[test]
    fn coset_representatives() {
        assert!(is_coset_rep(&Word::identity(), 2));
        assert!(!is_coset_rep(&Word::identity(), 1));
        assert!(is_coset_rep(&Word::new([2, 1]), 2));
        assert!(!is_coset_rep(&Word::new([1, 2, 1]), 2));
        assert!(!is_coset_rep(&Word::new([2, 1, 2]), 2));
        assert!(is_coset_rep(&Word::new([2, 1, 2]), 1));
    }
}
