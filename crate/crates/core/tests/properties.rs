use kronecker_frobenius::charts::{invariant_chart, inverse_chart, weyl_action_cover};
use kronecker_frobenius::frobenius::{periods, FrobeniusData};
use kronecker_frobenius::{Chart, ChartPoint, QuiverParams, RootVector, SimpleIndex, SpectralFrame, C64};
use proptest::prelude::*;

fn frame(ell: i64) -> SpectralFrame {
    SpectralFrame::new(QuiverParams::new(ell).unwrap())
}

proptest! {
    #[test]
    fn reflections_are_involutive_isometries(ell in 3i64..12, a in -1000i64..1000, b in -1000i64..1000, c in -50i64..50, d in -50i64..50) {
        let p = QuiverParams::new(ell).unwrap();
        let v = RootVector::new(a, b);
        let w = RootVector::new(c, d);
        for i in SimpleIndex::ALL {
            prop_assert_eq!(p.reflect(i, &p.reflect(i, &v)), v.clone());
            prop_assert_eq!(p.bilinear(&p.reflect(i, &v), &p.reflect(i, &w)), p.bilinear(&v, &w));
        }
        prop_assert_eq!(p.bilinear(&v, &w), p.bilinear(&w, &v));
    }

    #[test]
    fn coxeter_preserves_form_and_has_unit_determinant(ell in 3i64..20, n in 0u32..6) {
        let p = QuiverParams::new(ell).unwrap();
        let c = p.coxeter_power(n);
        prop_assert_eq!(c.det(), 1.into());
        let v = RootVector::new(2, -7);
        let cv = c.apply(&v);
        prop_assert_eq!(p.bilinear(&cv, &cv), p.bilinear(&v, &v));
    }

    #[test]
    fn real_roots_have_norm_two(ell in 3i64..7, h in 1u64..200) {
        let p = QuiverParams::new(ell).unwrap();
        for r in p.enumerate_positive_real_roots(h).unwrap() {
            prop_assert_eq!(p.bilinear(&r, &r), 2.into());
            prop_assert!(p.is_real_root(&r));
        }
    }

    #[test]
    fn quotient_chart_round_trip(ell in 3i64..10, r in 0.0f64..5.0, th in 0.0f64..std::f64::consts::TAU, s2r in -3.0f64..3.0, s2i in -3.0f64..3.0) {
        let f = frame(ell);
        let s1 = C64::from_polar(r, th);
        let s2 = C64::new(s2r, s2i);
        let y = inverse_chart(&f, s1, s2).unwrap();
        let s = invariant_chart(&f, y.c1, y.c2).unwrap();
        prop_assert!((s.c1 - s1).norm() <= 1e-10 * s1.norm().max(1.0));
        prop_assert!((s.c2 - s2).norm() <= 1e-10 * s2.norm().max(1.0));
    }

    #[test]
    fn invariant_chart_is_weyl_invariant(ell in 3i64..10, dr in -0.9f64..0.9, di in -3.0f64..3.0, y2r in -1.0f64..1.0, y2i in -1.0f64..1.0) {
        let f = frame(ell);
        let y2 = C64::new(y2r, y2i);
        let y1 = y2 + C64::new(dr, di);
        let s = invariant_chart(&f, y1, y2).unwrap();
        for i in SimpleIndex::ALL {
            let (a, b) = weyl_action_cover(&f, i, y1, y2).unwrap();
            let t = invariant_chart(&f, a, b).unwrap();
            prop_assert!((t.c1 - s.c1).norm() <= 1e-10 * s.c1.norm().max(1.0));
            prop_assert!((t.c2 - s.c2).norm() <= 1e-12 * s.c2.norm().max(1.0));
        }
    }

    #[test]
    fn periods_reproduce_flat_coordinates(ell in 3i64..10, re in -5.0f64..5.0, im in -5.0f64..5.0, s2r in -1.0f64..1.0, s2i in -1.0f64..1.0) {
        prop_assume!(re.abs() > 1e-6 || im.abs() > 2.0);
        let f = frame(ell);
        let d = FrobeniusData::new(f);
        let (s1, s2) = (C64::new(re, im), C64::new(s2r, s2i));
        let p = periods(&f, s1, s2).unwrap();
        let t = d.flat_coords(s1, s2);
        let pt = p.flat_coords(&f);
        prop_assert!((pt[0] - t[0]).norm() <= 1e-9 * t[0].norm().max(1.0));
        prop_assert!((pt[1] - t[1]).norm() <= 1e-9 * t[1].norm().max(1.0));
    }

    #[test]
    fn euler_multiplication_determinant_is_discriminant(ell in 3i64..10, re in -5.0f64..5.0, im in -5.0f64..5.0, s2r in -1.0f64..1.0, s2i in -1.0f64..1.0) {
        let d = FrobeniusData::new(frame(ell));
        let t = d.flat_coords(C64::new(re, im), C64::new(s2r, s2i));
        let m = d.euler_multiplication(t[0], t[1]).unwrap().matrix;
        let disc = d.discriminant(ChartPoint::new(Chart::Flat, t[0], t[1])).unwrap();
        prop_assert!((m.det() - disc).norm() <= 1e-10 * disc.norm().max(1.0));
    }

    #[test]
    fn metrics_are_symmetric(ell in 3i64..10, a in -3.0f64..3.0, b in -3.0f64..3.0, c in 0.1f64..3.0, e in -1.0f64..1.0) {
        let d = FrobeniusData::new(frame(ell));
        for chart in [Chart::X, Chart::Cover, Chart::Quotient, Chart::Flat] {
            let g = d.g_cometric(ChartPoint::new(chart, C64::new(a, b), C64::new(c, e))).unwrap();
            prop_assert!(g.is_symmetric(1e-12));
        }
    }
}
