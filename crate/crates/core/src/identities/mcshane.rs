use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{IdentityReport, TargetPair};
use crate::error::{Error, Result};
use crate::fuchsian::{FuchsianGroup, Word};
use crate::hyperbolic::length_from_trace;
use crate::numeric::CompensatedSum;
use crate::surfaces::{one_holed_torus, torus_boundary_word, SurfaceKind, SurfaceSpec};

/// `2 ln((e^{b/2} + e^{(x+y)/2}) / (e^{−b/2} + e^{(x+y)/2}))`, the gap term
/// attached to a pair of pants bounded by the boundary of length `b` and two
/// interior geodesics of lengths `x`, `y`.
pub fn mcshane_term_d(b1: f64, x: f64, y: f64) -> Result<f64> {
    if !(b1 > 0.0 && x > 0.0 && y > 0.0) || !(b1 + x + y).is_finite() {
        return Err(Error::DomainError(format!(
            "gap term needs positive lengths, got ({b1}, {x}, {y})"
        )));
    }
    let u = 0.5 * (x + y);
    Ok(2.0 * ((0.5 * b1 - u).exp().ln_1p() - (-0.5 * b1 - u).exp().ln_1p()))
}

/// `ln(cosh a + cosh c)`, evaluated without overflow.
fn ln_cosh_sum(a: f64, c: f64) -> f64 {
    fn ln_cosh(t: f64) -> f64 {
        let t = t.abs();
        t + (-2.0 * t).exp().ln_1p() - std::f64::consts::LN_2
    }
    std::f64::consts::LN_2 + ln_cosh(0.5 * (a + c)) + ln_cosh(0.5 * (a - c))
}

/// `b1 − ln((cosh(bi/2) + cosh((b1+η)/2)) / (cosh(bi/2) + cosh((b1−η)/2)))`,
/// the term for a pants bounded by the boundaries `b1`, `bi` and one interior
/// geodesic of length `η`.
pub fn mirzakhani_term_r(b1: f64, bi: f64, eta: f64) -> Result<f64> {
    if !(b1 > 0.0 && bi > 0.0 && eta > 0.0) || !(b1 + bi + eta).is_finite() {
        return Err(Error::DomainError(format!(
            "boundary term needs positive lengths, got ({b1}, {bi}, {eta})"
        )));
    }
    Ok(b1 - (ln_cosh_sum(0.5 * bi, 0.5 * (b1 + eta)) - ln_cosh_sum(0.5 * bi, 0.5 * (b1 - eta))))
}

/// A simple closed geodesic on a one-holed torus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimpleGeodesic {
    /// Cyclically reduced representative in the generators `A`, `B`.
    pub word: Word,
    /// Homology class `(exponent sum of A, exponent sum of B)`, sign-normalized.
    pub slope: [i64; 2],
    pub trace: f64,
    pub length: f64,
}

impl SimpleGeodesic {
    pub fn slope_string(&self) -> String {
        format!("{}/{}", self.slope[0], self.slope[1])
    }
}

fn slope_of(w: &Word) -> [i64; 2] {
    let mut s = [0i64; 2];
    for &l in w.letters() {
        s[l.unsigned_abs() as usize - 1] += l.signum() as i64;
    }
    if s[0] < 0 || (s[0] == 0 && s[1] < 0) {
        s = [-s[0], -s[1]];
    }
    s
}

/// Curves `(c1, c2, c1·c2)` pairwise meeting once, with their signed traces
/// in the chosen SL(2, ℝ) lift.
#[derive(Clone)]
struct Triple {
    words: [Word; 3],
    traces: [f64; 3],
}

impl Triple {
    /// Replaces curve `k` by the other curve adjacent to the remaining two;
    /// its trace follows from the trace identity `tr(UV) + tr(UV⁻¹) = tr U tr V`.
    fn flip(&self, k: usize) -> Triple {
        let [c1, c2, c3] = &self.words;
        let [x, y, z] = self.traces;
        match k {
            0 => Triple {
                words: [c3.clone(), c2.clone(), c3.concat(c2)],
                traces: [z, y, z * y - x],
            },
            1 => Triple {
                words: [c1.clone(), c3.clone(), c1.concat(c3)],
                traces: [x, z, x * z - y],
            },
            _ => Triple {
                words: [c1.clone(), c2.inverse(), c1.concat(&c2.inverse())],
                traces: [x, y, x * y - z],
            },
        }
    }

    /// Trace of the curve produced by [`Triple::flip`] at `k`.
    fn flipped_trace(&self, k: usize) -> f64 {
        let [x, y, z] = self.traces;
        match k {
            0 => z * y - x,
            1 => x * z - y,
            _ => x * y - z,
        }
    }

    fn key(&self) -> [Word; 3] {
        let mut k = self.words.clone().map(|w| w.conjugacy_canonical());
        k.sort_by(|a, b| a.cmp_canonical(b));
        k
    }
}

fn require_torus(group: &FuchsianGroup) -> Result<()> {
    if group.rank() != 2 {
        return Err(Error::DomainError(format!(
            "a one-holed torus group has two generators, not {}",
            group.rank()
        )));
    }
    Ok(())
}

fn initial_triple(group: &FuchsianGroup) -> Result<Triple> {
    require_torus(group)?;
    let words = [Word::new([1]), Word::new([2]), Word::new([1, 2])];
    let mut traces = [0.0; 3];
    for (t, w) in traces.iter_mut().zip(&words) {
        *t = group.evaluate(w)?.trace();
    }
    let [x, y, z] = traces.map(f64::abs);
    if !(x > 2.0 && y > 2.0 && z > 2.0) {
        return Err(Error::InadmissibleTraces {
            x,
            y,
            z,
            boundary: crate::surfaces::fricke_commutator_trace(x, y, z),
        });
    }
    let t = group.evaluate(&torus_boundary_word())?.trace();
    if t > -2.0 + 1e-9 * (1.0 + x * y * z) {
        return Err(Error::InadmissibleTraces {
            x,
            y,
            z,
            boundary: t,
        });
    }
    Ok(Triple { words, traces })
}

/// Walks down the trace tree to a triple where no flip decreases a trace.
fn descend(mut t: Triple) -> Triple {
    loop {
        let improving =
            (0..3).find(|&k| t.flipped_trace(k).abs() < t.traces[k].abs() * (1.0 - 1e-14));
        match improving {
            Some(k) => t = t.flip(k),
            None => return t,
        }
    }
}

/// Simple closed geodesics of the torus group with length `≤ cutoff`, one per
/// slope, sorted by length and then by word.
pub fn simple_torus_spectrum_of(group: &FuchsianGroup, cutoff: f64) -> Result<Vec<SimpleGeodesic>> {
    let max_trace = 2.0 * (0.5 * cutoff).cosh() * (1.0 + 1e-12);
    let root = descend(initial_triple(group)?);
    let mut seen_curves: HashSet<Word> = HashSet::new();
    let mut seen_triples: HashSet<[Word; 3]> = HashSet::new();
    let mut out = Vec::new();
    let mut record = |w: &Word, tr: f64, out: &mut Vec<SimpleGeodesic>| {
        let key = w.conjugacy_canonical();
        if tr.abs() <= max_trace && seen_curves.insert(key.clone()) {
            out.push(SimpleGeodesic {
                slope: slope_of(&key),
                word: key,
                trace: tr.abs(),
                length: length_from_trace(tr),
            });
        }
    };
    for k in 0..3 {
        record(&root.words[k], root.traces[k], &mut out);
    }
    seen_triples.insert(root.key());
    let mut queue = VecDeque::from([root]);
    while let Some(t) = queue.pop_front() {
        for k in 0..3 {
            let tr = t.flipped_trace(k);
            if tr.abs() > max_trace {
                continue;
            }
            let next = t.flip(k);
            if !seen_triples.insert(next.key()) {
                continue;
            }
            // The new curve always sits in the last slot.
            record(&next.words[2], next.traces[2], &mut out);
            queue.push_back(next);
        }
    }
    out.retain(|g| g.length <= cutoff);
    out.sort_by(|a, b| {
        a.length
            .total_cmp(&b.length)
            .then_with(|| a.word.cmp_canonical(&b.word))
    });
    Ok(out)
}

pub fn simple_torus_spectrum(spec: &SurfaceSpec, cutoff: f64) -> Result<Vec<SimpleGeodesic>> {
    simple_torus_spectrum_of(&torus_group(spec)?, cutoff)
}

fn torus_group(spec: &SurfaceSpec) -> Result<FuchsianGroup> {
    match spec.kind {
        SurfaceKind::OneHoledTorus { x, y, z } => one_holed_torus(x, y, z),
        _ => Err(Error::DomainError(format!(
            "{spec} is not a one-holed torus"
        ))),
    }
}

/// `Σ 1/(1 + e^ℓ)` over simple closed geodesics of a once-punctured torus,
/// whose limit is McShane's constant `1/2`.
pub fn cusped_mcshane_sum(group: &FuchsianGroup, cutoff: f64) -> Result<f64> {
    let spectrum = simple_torus_spectrum_of(group, cutoff)?;
    Ok(spectrum
        .iter()
        .map(|g| 1.0 / (1.0 + g.length.exp()))
        .collect::<CompensatedSum>()
        .value())
}

/// Normalization of the identity's right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum McShaneConvention {
    /// Right-hand side `b₁/2`.
    Halved,
    /// Right-hand side `b₁`.
    Mirzakhani,
}

impl McShaneConvention {
    pub fn target(self, b1: f64) -> f64 {
        match self {
            McShaneConvention::Halved => 0.5 * b1,
            McShaneConvention::Mirzakhani => b1,
        }
    }
}

impl fmt::Display for McShaneConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            McShaneConvention::Halved => "halved",
            McShaneConvention::Mirzakhani => "mirzakhani",
        })
    }
}

/// Chooses the normalization from the cusped limit: as `b₁ → 0` each gap term
/// is `2 b₁/(1 + e^ℓ) + O(b₁²)`, so the ratio `sum / b₁` tends to twice the
/// cusped sum on the modular torus. Returns the convention together with
/// the cusped sum it was based on.
pub fn select_mcshane_convention() -> (McShaneConvention, f64) {
    static CHOICE: OnceLock<(McShaneConvention, f64)> = OnceLock::new();
    *CHOICE.get_or_init(|| {
        let modular = one_holed_torus(3.0, 3.0, 3.0).expect("(3,3,3) is admissible");
        let cusped = cusped_mcshane_sum(&modular, 25.0).expect("modular torus spectrum");
        let ratio = 2.0 * cusped;
        let conv = if (ratio - 1.0).abs() < (ratio - 0.5).abs() {
            McShaneConvention::Mirzakhani
        } else {
            McShaneConvention::Halved
        };
        (conv, cusped)
    })
}

/// Sums the gap terms `D(b₁, ℓγ, ℓγ)` over simple closed geodesics of
/// length `≤ cutoff`. On a one-holed torus cutting along a simple `γ` leaves
/// a pair of pants bounded by `b₁` and two copies of `γ`.
pub fn verify_mcshane_of(
    group: &FuchsianGroup,
    cutoff: f64,
    surface: &str,
) -> Result<IdentityReport> {
    let boundary_trace = group.evaluate(&torus_boundary_word())?.trace();
    let b1 = length_from_trace(boundary_trace);
    if !(b1 > 0.0) {
        return Err(Error::DomainError(
            "the boundary is a cusp; use cusped_mcshane_sum".into(),
        ));
    }
    let spectrum = simple_torus_spectrum_of(group, cutoff)?;
    let mut sum = CompensatedSum::default();
    for g in &spectrum {
        sum.add(mcshane_term_d(b1, g.length, g.length)?);
    }
    let partial_sum = sum.value();
    let (convention, _) = select_mcshane_convention();
    let targets = TargetPair {
        halved: McShaneConvention::Halved.target(b1),
        full: McShaneConvention::Mirzakhani.target(b1),
    };
    let target = convention.target(b1);
    Ok(IdentityReport {
        surface: surface.to_string(),
        identity: "mcshane".into(),
        cutoff,
        depth: None,
        terms: spectrum.len(),
        partial_sum,
        target,
        residual: target - partial_sum,
        convention: convention.to_string(),
        targets,
        residuals: TargetPair {
            halved: targets.halved - partial_sum,
            full: targets.full - partial_sum,
        },
    })
}

pub fn verify_mcshane(spec: &SurfaceSpec, cutoff: f64) -> Result<IdentityReport> {
    verify_mcshane_of(&torus_group(spec)?, cutoff, &spec.tag())
}
