use hypsurf::hyperbolic::*;
use hypsurf::surfaces::{
    core_length_from_modulus, fricke_commutator_trace, funnel_modulus, one_holed_torus,
    torus_boundary_word,
};
use proptest::prelude::*;

/// Hyperbolic map with axis from `p` to `q` and translation length `len`.
fn hyperbolic_with_axis(p: f64, q: f64, len: f64) -> MoebiusMap {
    let (p, q) = if p < q { (p, q) } else { (q, p) };
    let s = (q - p).sqrt();
    let conj = MoebiusMap {
        a: q / s,
        b: p / s,
        c: 1.0 / s,
        d: 1.0 / s,
    };
    MoebiusMap::dilation(len.exp()).conjugate_by(&conj)
}

fn unimodular() -> impl Strategy<Value = MoebiusMap> {
    (
        0.3f64..3.0,
        -3.0f64..3.0,
        prop_oneof![-3.0f64..-0.05, 0.05f64..3.0],
        any::<bool>(),
    )
        .prop_map(|(a, b, c, neg)| {
            let a = if neg { -a } else { a };
            MoebiusMap {
                a,
                b,
                c,
                d: (1.0 + b * c) / a,
            }
        })
}

fn cases() -> ProptestConfig {
    ProptestConfig {
        cases: 1000,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(cases())]

    #[test]
    fn displacement_factorizes(p in -5.0f64..5.0, width in 0.05f64..6.0, len in 0.01f64..8.0,
                               x in -6.0f64..6.0, y in 0.05f64..6.0) {
        let m = hyperbolic_with_axis(p, p + width, len);
        let d = displacement(&m, HPoint::new(x, y)).unwrap();
        prop_assert!((d.translation_length - len).abs() < 1e-9 * (1.0 + len));
        prop_assert!(d.factorization_residual().abs() < 1e-10, "residual {}", d.factorization_residual());
    }

    #[test]
    fn displacement_is_minimal_on_the_axis(p in -2.0f64..2.0, width in 0.1f64..4.0, len in 0.1f64..5.0,
                                           x in -4.0f64..4.0, y in 0.05f64..4.0) {
        let m = hyperbolic_with_axis(p, p + width, len);
        let d = displacement(&m, HPoint::new(x, y)).unwrap();
        prop_assert!(d.displacement >= len * (1.0 - 1e-12));
    }

    #[test]
    fn isometric_circle_angle(center in -5.0f64..5.0, r in 0.05f64..5.0, len in 0.02f64..6.0) {
        let m = hyperbolic_with_axis(center - r, center + r, len);
        let (theta, axis_r, iso_r) = isometric_angle(&m).unwrap();
        prop_assert!(((len / 2.0).sinh() - theta.tan()).abs() < 1e-10 * (1.0 + theta.tan()));
        prop_assert!((axis_r - iso_r * theta.tan()).abs() < 1e-10 * (1.0 + axis_r));
        prop_assert!((theta - axis_half_distance_angle(&m).unwrap()).abs() < 1e-10);
    }

    #[test]
    fn isometric_circles_of_inverse_pairs(m in unimodular()) {
        let fwd = isometric_circle(&m).unwrap();
        let inv = isometric_circle(&m.inverse()).unwrap();
        prop_assert!((fwd.radius - inv.radius).abs() < 1e-12 * fwd.radius);
        prop_assert!((fwd.center + m.d / m.c).abs() < 1e-12 * (1.0 + fwd.center.abs()));
        // m carries I(m) onto I(m⁻¹), isometrically: compare a point and its image.
        let t = 0.7f64;
        let z = HPoint::new(fwd.center + fwd.radius * t.cos(), fwd.radius * t.sin());
        let w = m.apply_interior(z);
        let on_inv = ((w.x - inv.center).powi(2) + w.y * w.y).sqrt();
        prop_assert!((on_inv - inv.radius).abs() < 1e-9 * (1.0 + inv.radius));
    }

    #[test]
    fn horodisk_trichotomy(m in unimodular(), h in 0.02f64..10.0) {
        let b = Horodisk::at_infinity(h).unwrap();
        let img = horodisk_image(&m, &b);
        let threshold = 1.0 / m.c.abs();
        let by_lemma = if h > threshold { Tangency::Disjoint } else { Tangency::Overlapping };
        prop_assume!((h - threshold).abs() > 1e-9 * threshold);
        prop_assert_eq!(img.status, by_lemma);
        prop_assert_eq!(b.relation(&img.image), by_lemma);
        prop_assert!(img.image.base.approx_eq(BoundaryPoint::Finite(m.a / m.c), 1e-12));
        prop_assert!((img.image.size - 1.0 / (m.c * m.c * h)).abs() < 1e-12 * img.image.size);
    }

    #[test]
    fn horodisk_tangency_at_threshold(m in unimodular()) {
        let h = 1.0 / m.c.abs();
        let b = Horodisk::at_infinity(h).unwrap();
        let img = horodisk_image(&m, &b);
        prop_assert_eq!(img.status, Tangency::Tangent);
        prop_assert_eq!(b.relation(&img.image), Tangency::Tangent);
    }

    #[test]
    fn fricke_relation(x in 3.0f64..10.0, y in 3.0f64..10.0, s in 0.0f64..1.0) {
        let disc = (x * x * y * y - 4.0 * (x * x + y * y)).sqrt();
        let (lo, hi) = ((x * y - disc) / 2.0, (x * y + disc) / 2.0);
        let z = (lo + s * (hi - lo)).max(2.0 + 1e-6);
        prop_assume!(fricke_commutator_trace(x, y, z) <= -2.0 - 1e-9 && z > 2.0);
        let g = one_holed_torus(x, y, z).unwrap();
        let (a, b) = (g.generators[0].map, g.generators[1].map);
        let scale = x * y * z;
        prop_assert!((a.trace() - x).abs() < 1e-10 * x);
        prop_assert!((b.trace() - y).abs() < 1e-10 * y);
        prop_assert!(((a * b).trace() - z).abs() < 1e-10 * z);
        let t = g.evaluate(&torus_boundary_word()).unwrap().trace();
        prop_assert!((t - fricke_commutator_trace(x, y, z)).abs() < 1e-10 * scale);
    }

    #[test]
    fn funnel_round_trip(l in 1e-3f64..50.0, grow in 1e-6f64..10.0) {
        let f = funnel_modulus(l).unwrap();
        prop_assert!((f.modulus * l - std::f64::consts::PI.powi(2)).abs() < 1e-12 * f.modulus * l);
        prop_assert!((core_length_from_modulus(f.modulus).unwrap() - l).abs() < 1e-12 * l);
        // A larger annulus has a strictly shorter core curve.
        let bigger = core_length_from_modulus(f.modulus * (1.0 + grow)).unwrap();
        prop_assert!(bigger < l);
    }

    #[test]
    fn geodesic_distance_symmetric(p in -4.0f64..4.0, w1 in 0.05f64..3.0, gap in 0.01f64..3.0, w2 in 0.05f64..3.0) {
        let g1 = Geodesic::from_finite(p, p + w1).unwrap();
        let g2 = Geodesic::from_finite(p + w1 + gap, p + w1 + gap + w2).unwrap();
        match (g1.relation(&g2), g2.relation(&g1)) {
            (GeodesicRelation::Disjoint { distance: a }, GeodesicRelation::Disjoint { distance: b }) => {
                prop_assert!((a - b).abs() < 1e-10 * (1.0 + a));
            }
            other => prop_assert!(false, "{:?}", other),
        }
    }
}
