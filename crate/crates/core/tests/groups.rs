use std::collections::HashSet;

use hypsurf::fuchsian::*;
use hypsurf::hyperbolic::{Classification, MoebiusMap, Tangency};
use hypsurf::surfaces::{
    one_holed_torus, pair_of_pants, thrice_punctured_sphere, torus_boundary_word,
};
use hypsurf::{Config, Error, Precision};

fn key(m: &MoebiusMap) -> [i64; 4] {
    let c = m.canonical();
    [c.a, c.b, c.c, c.d].map(|v| (v * 1e6).round() as i64)
}

#[test]
fn ball_sizes() {
    let g = thrice_punctured_sphere();
    let cfg = Config::default();
    assert_eq!(Ball::new(&g, 1, &cfg).unwrap().len(), 5);
    assert_eq!(Ball::new(&g, 2, &cfg).unwrap().len(), 17);
    for d in 0..6 {
        assert_eq!(Ball::new(&g, d, &cfg).unwrap().len(), ball_size(2, d));
    }
}

#[test]
fn sphere_ball_is_injective() {
    // A free group acts faithfully, so distinct reduced words give distinct maps.
    let g = thrice_punctured_sphere();
    let ball = Ball::new(&g, 6, &Config::default()).unwrap();
    let keys: HashSet<_> = ball.entries().iter().map(|e| key(&e.map)).collect();
    assert_eq!(keys.len(), ball.len());
}

#[test]
fn ball_order_and_strategy_agree() {
    let g = one_holed_torus(3.0, 3.0, 3.0).unwrap();
    let par = Ball::new(&g, 5, &Config::default()).unwrap();
    let seq = Ball::new(&g, 5, &Config::sequential()).unwrap();
    assert_eq!(par.entries(), seq.entries());
    let words: Vec<_> = par.entries().iter().map(|e| e.word.clone()).collect();
    for pair in words.windows(2) {
        assert!(pair[0].cmp_canonical(&pair[1]).is_lt());
    }
    assert_eq!(par.sphere().len(), 4 * 27 * 3);
}

#[test]
fn evaluate_examples() {
    let g = thrice_punctured_sphere();
    let m = g.evaluate(&Word::new([1, -2])).unwrap();
    assert!(m.approx_eq_projective(
        &MoebiusMap {
            a: 5.0,
            b: 2.0,
            c: 2.0,
            d: 1.0
        },
        1e-12
    ));
    assert_eq!(g.word_string(&Word::new([1, -2])), "X G^-1");
    assert!(g.evaluate(&Word::new([3])).is_err());
    let ext = g
        .evaluate_with(&Word::new([1, -2, 1, -2, 2]), Precision::Extended)
        .unwrap();
    let dbl = g.evaluate(&Word::new([1, -2, 1, -2, 2])).unwrap();
    assert!(ext.approx_eq_projective(&dbl, 1e-12));
}

#[test]
fn classes_of_sphere() {
    let g = thrice_punctured_sphere();
    let cfg = Config::default();
    let classes = conjugacy_classes(&g, 6.0, 4, &cfg).unwrap();
    assert!(!classes.is_empty());
    let min = classes
        .iter()
        .map(|c| c.trace.abs())
        .fold(f64::INFINITY, f64::min);
    assert!((min - 6.0).abs() < 1e-12);
    assert!(conjugacy_classes(&g, 5.99, 4, &cfg).unwrap().is_empty());
    // Shortest classes: X G^-1, X G and G X... all of length 2 arccosh(3).
    for c in &classes {
        assert!((c.length - 2.0 * 3f64.acosh()).abs() < 1e-12);
        assert!(c.primitive);
    }
}

#[test]
fn classes_are_conjugation_invariant() {
    let g = one_holed_torus(3.0, 3.0, 3.0).unwrap();
    for w in [Word::new([1]), Word::new([1, 2]), Word::new([1, 1, -2])] {
        let base = ConjClass::from_word(&g, &w).unwrap();
        for u in [Word::new([2]), Word::new([-1, 2])] {
            let conj = u.concat(&w).concat(&u.inverse());
            let c = ConjClass::from_word(&g, &conj).unwrap();
            assert_eq!(c.rep, base.rep);
            assert!((c.length - base.length).abs() < 1e-9);
            let inv = ConjClass::from_word(&g, &w.inverse()).unwrap();
            assert_eq!(inv.rep, base.rep);
        }
    }
}

#[test]
fn simplicity_examples() {
    let cfg = Config::default();
    let sphere = thrice_punctured_sphere();
    let eight = ConjClass::from_word(&sphere, &Word::new([1, -2, -1, 2, 2])).unwrap();
    match simplicity(&sphere, &eight, 3, &cfg).unwrap() {
        Simplicity::NonSimple { witness } => {
            assert!(verify_witness(&sphere, &eight, &witness).unwrap())
        }
        other => panic!("expected a crossing, got {other:?}"),
    }
    // Every closed geodesic on the thrice-punctured sphere self-intersects,
    // including the shortest one.
    let shortest = ConjClass::from_word(&sphere, &Word::new([1, -2])).unwrap();
    assert!(simplicity(&sphere, &shortest, 4, &cfg)
        .unwrap()
        .is_non_simple());

    let torus = one_holed_torus(3.0, 3.0, 3.0).unwrap();
    for w in [
        Word::new([1]),
        Word::new([2]),
        Word::new([1, 2]),
        Word::new([1, -2]),
    ] {
        let cls = ConjClass::from_word(&torus, &w).unwrap();
        assert!(
            simplicity(&torus, &cls, 4, &cfg).unwrap().is_simple(),
            "{w}"
        );
    }
    let cls = ConjClass::from_word(&torus, &Word::new([1, 1, 2, 2])).unwrap();
    assert!(simplicity(&torus, &cls, 4, &cfg).unwrap().is_non_simple());
}

#[test]
fn simplicity_strategies_agree() {
    let torus = one_holed_torus(3.0, 4.0, 9.0).unwrap();
    let classes = conjugacy_classes(&torus, 40.0, 4, &Config::default()).unwrap();
    for cls in classes.iter().take(20) {
        let a = simplicity(&torus, cls, 3, &Config::default()).unwrap();
        let b = simplicity(&torus, cls, 3, &Config::sequential()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn sphere_maximal_cusp() {
    let g = thrice_punctured_sphere();
    let r = maximal_cusp(&g, 6, &Config::default()).unwrap();
    assert!((r.area - 4.0).abs() < 1e-12);
    assert!((r.height - 0.5).abs() < 1e-12);
    assert_eq!(r.tangency, Tangency::Tangent);
    assert_eq!(r.stray_stabilizers, 0);
    let unit = rescale_to_unit_height(&g, &r).unwrap();
    let omega = unit.cusp.as_ref().unwrap().omega.unwrap();
    assert!(omega >= 4.0 - 1e-12);
    let again = maximal_cusp(&unit, 6, &Config::default()).unwrap();
    assert!((again.height - 1.0).abs() < 1e-12);
    assert!((again.area - r.area).abs() < 1e-12);
}

#[test]
fn cusp_normalize_moves_fixed_point() {
    // The third cusp X G of the sphere group, and a cusped pants boundary.
    let g = thrice_punctured_sphere();
    let n = cusp_normalize(&g, &Word::new([1, 2])).unwrap();
    let cusp = n.cusp.as_ref().unwrap();
    let p = n.evaluate(&cusp.peripheral).unwrap();
    assert!(p.c.abs() < 1e-12);
    assert!(cusp.omega.unwrap() > 0.0);
    let r = maximal_cusp(&n, 6, &Config::default()).unwrap();
    assert!((r.area - 4.0).abs() < 1e-9);

    let pants = pair_of_pants(0.0, 0.0, 0.0).unwrap();
    let n = cusp_normalize(&pants, &Word::new([1])).unwrap();
    assert!(n.cusp.as_ref().unwrap().is_normalized());
    assert_eq!(
        n.generators[0].map,
        MoebiusMap::translation(n.cusp.as_ref().unwrap().omega.unwrap())
    );
    let r = maximal_cusp(&n, 6, &Config::default()).unwrap();
    assert!((r.area - 4.0).abs() < 1e-9);
}

#[test]
fn punctured_torus_cusp_area() {
    let g = one_holed_torus(3.0, 3.0, 3.0).unwrap();
    let n = cusp_normalize(&g, &torus_boundary_word()).unwrap();
    let r = maximal_cusp(&n, 6, &Config::default()).unwrap();
    assert!(r.area > 4.0, "area {}", r.area);
    assert_eq!(r.tangency, Tangency::Tangent);
    // The modular torus has maximal cusp area 6.
    assert!((r.area - 6.0).abs() < 1e-9, "area {}", r.area);
}

#[test]
fn cusp_requires_normalization() {
    let g = one_holed_torus(3.0, 3.0, 3.0).unwrap();
    assert!(matches!(
        maximal_cusp(&g, 3, &Config::default()),
        Err(Error::NotNormalized)
    ));
    let h = one_holed_torus(3.0, 3.0, 4.0).unwrap();
    assert!(matches!(
        maximal_cusp(&h, 3, &Config::default()),
        Err(Error::NoCusp)
    ));
}

#[test]
fn cusp_exclusion_for_simple_geodesics() {
    let cfg = Config::default();
    let g = one_holed_torus(3.0, 3.0, 3.0).unwrap();
    let n = cusp_normalize(&g, &torus_boundary_word()).unwrap();
    let r = maximal_cusp(&n, 6, &cfg).unwrap();
    let unit = rescale_to_unit_height(&n, &r).unwrap();
    for w in [
        Word::new([1]),
        Word::new([2]),
        Word::new([1, 2]),
        Word::new([1, 1, 2]),
    ] {
        let mut cls = ConjClass::from_word(&unit, &w).unwrap();
        cls.simplicity = simplicity(&unit, &cls, 4, &cfg).unwrap();
        let ex = cusp_exclusion_check(&unit, &cls, 4, &cfg).unwrap();
        assert!(ex.holds, "{w}: {ex:?}");
        assert!(ex.max_apex <= unit.cusp.as_ref().unwrap().omega.unwrap() / 2.0 + 1e-9);
    }
}

#[test]
fn group_json_round_trip() {
    for g in [
        thrice_punctured_sphere(),
        one_holed_torus(3.0, 4.0, 9.0).unwrap(),
    ] {
        let back = FuchsianGroup::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
    }
    assert!(FuchsianGroup::from_json("{\"generators\": 3}").is_err());
}

#[test]
fn word_classification() {
    let g = thrice_punctured_sphere();
    assert_eq!(
        g.classify_word(&Word::new([1, 2])).unwrap(),
        Classification::Parabolic
    );
    assert_eq!(
        g.classify_word(&Word::new([1, -2])).unwrap(),
        Classification::Hyperbolic
    );
}
