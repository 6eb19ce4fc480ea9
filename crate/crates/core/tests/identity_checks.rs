use std::f64::consts::PI;

use hypsurf::fuchsian::Word;
use hypsurf::hyperbolic::MoebiusMap;
use hypsurf::identities::*;
use hypsurf::surfaces::*;
use hypsurf::Config;

#[test]
fn shortest_orthogeodesics_are_the_seams() {
    let cfg = Config::default();
    let spec = SurfaceSpec::pants(2.0, 2.0, 2.0).unwrap();
    let spectrum = orthogeodesic_spectrum(&spec, 10.0, 6, &cfg).unwrap();
    let c1 = 1f64.cosh();
    let seam = ((c1 * c1 + c1) / 1f64.sinh().powi(2)).acosh();
    for o in spectrum.iter().take(3) {
        assert!((o.length - seam).abs() < 1e-9, "{o:?}");
        assert_ne!(o.pair.0, o.pair.1);
        assert!(o.word.is_empty());
    }
    assert!(spectrum[3].length > seam + 0.1);
}

#[test]
fn seams_of_asymmetric_pants() {
    // With one long boundary an arc from that boundary back to itself can be
    // shorter than the seams; its half is the side of a right-angled pentagon,
    // cosh(h) = sinh(s13) sinh(l1/2).
    let cfg = Config::default();
    let l = [0.7, 1.9, 3.2];
    let spectrum = orthogeodesic_spectrum(
        &SurfaceSpec::pants(l[0], l[1], l[2]).unwrap(),
        10.0,
        6,
        &cfg,
    )
    .unwrap();
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (0, 2, 1)] {
        let s = seam_length(l[i], l[j], l[k]).unwrap();
        let found = spectrum
            .iter()
            .find(|o| o.pair == (i, j) && o.word.is_empty())
            .unwrap();
        assert!((found.length - s).abs() < 1e-9);
    }
    let s13 = seam_length(l[0], l[2], l[1]).unwrap();
    let self_arc = 2.0 * (s13.sinh() * (l[0] / 2.0).sinh()).acosh();
    // It sits between the seams: shorter than s12 = 3.05.
    assert!((spectrum[2].length - self_arc).abs() < 1e-9);
    assert_eq!(spectrum[2].pair, (2, 2));
    assert!(self_arc < seam_length(l[0], l[1], l[2]).unwrap());
}

#[test]
fn symmetric_pants_spectrum_ignores_labels() {
    let cfg = Config::default();
    let lengths = |l: [f64; 3]| {
        let spec = SurfaceSpec::pants(l[0], l[1], l[2]).unwrap();
        orthogeodesic_spectrum(&spec, 9.0, 12, &cfg)
            .unwrap()
            .iter()
            .map(|o| o.length)
            .collect::<Vec<_>>()
    };
    let a = lengths([1.0, 2.0, 3.0]);
    for perm in [[2.0, 1.0, 3.0], [3.0, 2.0, 1.0], [2.0, 3.0, 1.0]] {
        let b = lengths(perm);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).abs() < 1e-9);
        }
    }
}

/// Independent duplicate check: two arcs with the same end boundaries are
/// the same orthogeodesic iff `g_i^k w₁ g_j^m = w₂` (or, when `i = j`, the
/// same with `w₁⁻¹`) for some integers `k`, `m`.
#[test]
fn representatives_are_distinct_double_cosets() {
    let cfg = Config::default();
    let group = pair_of_pants(2.0, 2.0, 2.0).unwrap();
    let boundary: Vec<MoebiusMap> = pants_boundary_words()
        .iter()
        .map(|w| group.evaluate(w).unwrap())
        .collect();
    let spectrum = orthogeodesic_spectrum_of(&group, 7.0, 6, &cfg).unwrap();
    let power = |m: &MoebiusMap, k: i32| {
        let base = if k < 0 { m.inverse() } else { *m };
        (0..k.abs()).fold(MoebiusMap::IDENTITY, |acc, _| acc * base)
    };
    for (a, oa) in spectrum.iter().enumerate() {
        for ob in &spectrum[a + 1..] {
            if oa.pair != ob.pair || (oa.length - ob.length).abs() > 1e-7 {
                continue;
            }
            let (i, j) = oa.pair;
            let w1 = group.evaluate(&oa.word).unwrap();
            let w2 = group.evaluate(&ob.word).unwrap();
            let mut starts = vec![w1];
            if i == j {
                starts.push(w1.inverse());
            }
            for s in starts {
                for k in -6..=6 {
                    for m in -6..=6 {
                        let moved = power(&boundary[i], k) * s * power(&boundary[j], m);
                        assert!(
                            !moved.approx_eq_projective(&w2, 1e-8),
                            "{} ~ {}",
                            oa.word,
                            ob.word
                        );
                    }
                }
            }
        }
    }
    // Spot check the oracle itself: a conjugated representative is detected.
    let w = Word::new([2, 1]);
    let moved = boundary[0] * group.evaluate(&w).unwrap() * boundary[1];
    assert!(moved.approx_eq_projective(&group.evaluate(&Word::new([1, 2, 1, 2])).unwrap(), 1e-12));
}

#[test]
fn deeper_balls_add_only_longer_arcs() {
    let cfg = Config::default();
    let spec = SurfaceSpec::pants(2.0, 2.0, 2.0).unwrap();
    let shallow = orthogeodesic_spectrum(&spec, 8.0, 8, &cfg).unwrap();
    let deep = orthogeodesic_spectrum(&spec, 8.0, 10, &cfg).unwrap();
    assert_eq!(shallow.len(), deep.len());
    assert!(shallow.len() > 50);
}

#[test]
fn bridgeman_partial_sums_are_monotone_and_bounded() {
    let cfg = Config::default();
    let spec = SurfaceSpec::pants(2.0, 2.0, 2.0).unwrap();
    let mut prev = 0.0;
    for cutoff in [2.0, 4.0, 6.0, 8.0, 10.0] {
        let r = verify_bridgeman(&spec, cutoff, 8, &cfg).unwrap();
        assert!(r.partial_sum >= prev);
        assert!(r.partial_sum <= PI * PI / 2.0 + 1e-9);
        assert!((r.target - PI * PI / 2.0).abs() < 1e-15);
        assert!((r.residual - (r.target - r.partial_sum)).abs() < 1e-15);
        prev = r.partial_sum;
    }
    assert!(matches!(
        verify_bridgeman(&SurfaceSpec::pants(0.0, 1.0, 1.0).unwrap(), 5.0, 4, &cfg),
        Err(hypsurf::Error::CuspedBoundary(0))
    ));
}

#[test]
fn bridgeman_strategies_agree() {
    let spec = SurfaceSpec::pants(1.0, 2.0, 3.0).unwrap();
    let a = verify_bridgeman(&spec, 8.0, 7, &Config::default()).unwrap();
    let b = verify_bridgeman(&spec, 8.0, 7, &Config::sequential()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn mcshane_convention_and_convergence() {
    let (conv, cusped) = select_mcshane_convention();
    assert!((cusped - 0.5).abs() < 1e-6);
    assert_eq!(conv, McShaneConvention::Mirzakhani);

    let tiny = verify_mcshane(&SurfaceSpec::torus_with_boundary(0.01).unwrap(), 25.0).unwrap();
    assert!((tiny.partial_sum / 0.01 - 2.0 * cusped).abs() < 1e-3);

    let r = verify_mcshane(&SurfaceSpec::torus_with_boundary(1.0).unwrap(), 25.0).unwrap();
    assert!(r.residual.abs() < 1e-3);
    assert!((r.targets.full - 1.0).abs() < 1e-12);
    assert!((r.targets.halved - 0.5).abs() < 1e-12);
    assert_eq!(r.convention, "mirzakhani");
    // The asymmetric torus satisfies it as well.
    let r = verify_mcshane(&SurfaceSpec::torus(3.5, 4.0, 5.0).unwrap(), 25.0).unwrap();
    assert!(r.residual.abs() < 1e-3, "{r:?}");
}

#[test]
fn cusped_torus_is_rejected_by_the_bordered_verifier() {
    assert!(verify_mcshane(&SurfaceSpec::torus(3.0, 3.0, 3.0).unwrap(), 10.0).is_err());
    assert!(verify_mcshane(&SurfaceSpec::sphere(), 10.0).is_err());
}

#[test]
fn report_json_shape() {
    let r = verify_mcshane(&SurfaceSpec::torus_with_boundary(1.0).unwrap(), 10.0).unwrap();
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    for key in [
        "surface",
        "identity",
        "cutoff",
        "depth",
        "terms",
        "partial_sum",
        "targets",
        "residuals",
        "convention",
    ] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let back: IdentityReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, r);
}
