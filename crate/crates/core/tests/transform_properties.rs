use latscale::lattice::{embed_point, LatticeKind, LatticePoint};
use latscale::{induced_map, DirectionalScaling, IntMatrix2, Rational};
use num_complex::Complex64;
use proptest::prelude::*;

fn transform(case: u64) -> DirectionalScaling {
    if case == 0 {
        DirectionalScaling::triangular_known()
    } else {
        DirectionalScaling::square_family(case).unwrap()
    }
}

fn point(kind: LatticeKind) -> impl Strategy<Value = LatticePoint> {
    (-1000i64..=1000, -1000i64..=1000).prop_map(move |(m, n)| LatticePoint::new(m, n, kind))
}

fn case_and_points() -> impl Strategy<Value = (u64, LatticePoint, LatticePoint)> {
    (0u64..=50).prop_flat_map(|c| {
        let kind = transform(c).kind();
        (Just(c), point(kind), point(kind))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 2000, ..ProptestConfig::default() })]

    #[test]
    fn exact_and_float_paths_agree((c, p, _q) in case_and_points()) {
        let ds = transform(c);
        let exact = ds.apply_exact(&p).unwrap().embed();
        let (x, y) = ds.apply_float(p.cartesian());
        let z = embed_point(&p).norm();
        prop_assert!((exact - Complex64::new(x, y)).norm() <= 1e-9 * (1.0 + z));
    }

    #[test]
    fn apply_exact_is_linear((c, p, q) in case_and_points()) {
        let ds = transform(c);
        let sum = ds.apply_exact(&(&p + &q)).unwrap();
        prop_assert_eq!(sum, ds.apply_exact(&p).unwrap() + ds.apply_exact(&q).unwrap());
    }

    #[test]
    fn directions_are_eigenvectors(c in 0u64..=50, len in -100.0f64..100.0) {
        let ds = transform(c);
        let (s, co) = ds.theta().sin_cos();
        let (x, y) = ds.apply_float((-s * len, co * len));
        prop_assert!((x + s * len).abs() <= 1e-12 * (1.0 + len.abs()));
        prop_assert!((y - co * len).abs() <= 1e-12 * (1.0 + len.abs()));
        let sr = ds.scale_f64();
        let (x, y) = ds.apply_float((co * len, s * len));
        prop_assert!((x - sr * co * len).abs() <= 1e-12 * (1.0 + len.abs()));
        prop_assert!((y - sr * s * len).abs() <= 1e-12 * (1.0 + len.abs()));
    }

    #[test]
    fn rotation_form_matches_resolution_form(c in 0u64..=50, x in -1e3f64..1e3, y in -1e3f64..1e3) {
        let ds = transform(c);
        let theta = ds.theta();
        let sr = ds.scale_f64();
        // rotate by -theta, scale the real axis, rotate back
        let w = Complex64::new(x, y) * Complex64::from_polar(1.0, -theta);
        let w = Complex64::new(sr * w.re, w.im) * Complex64::from_polar(1.0, theta);
        let (rx, ry) = ds.apply_float((x, y));
        let tol = 1e-12 * (1.0 + x.abs() + y.abs());
        prop_assert!((w.re - rx).abs() <= tol && (w.im - ry).abs() <= tol);
    }

    #[test]
    fn embedding_matches_cartesian(m in -1_000_000i64..=1_000_000, n in -1_000_000i64..=1_000_000) {
        for kind in [LatticeKind::Square, LatticeKind::Triangular] {
            let p = LatticePoint::new(m, n, kind);
            let e = p.to_elem(&kind.base_tower()).unwrap().embed();
            let (x, y) = p.cartesian();
            prop_assert!((e.re - x).abs() <= 1e-12 * (1.0 + x.abs()));
            prop_assert!((e.im - y).abs() <= 1e-12 * (1.0 + y.abs()));
        }
    }

    #[test]
    fn point_to_elem_is_additive(m in -1000i64..1000, n in -1000i64..1000, a in -1000i64..1000, b in -1000i64..1000) {
        for kind in [LatticeKind::Square, LatticeKind::Triangular] {
            let t = kind.base_tower();
            let p = LatticePoint::new(m, n, kind);
            let q = LatticePoint::new(a, b, kind);
            prop_assert_eq!((&p + &q).to_elem(&t).unwrap(), p.to_elem(&t).unwrap() + q.to_elem(&t).unwrap());
        }
    }

    #[test]
    fn det_is_multiplicative(e in prop::array::uniform8(-10_000i64..10_000)) {
        let a = IntMatrix2::new(e[0], e[1], e[2], e[3]);
        let b = IntMatrix2::new(e[4], e[5], e[6], e[7]);
        prop_assert_eq!((&a * &b).det(), a.det() * b.det());
    }

    #[test]
    fn primitive_normalization_keeps_the_map((c, p, _q) in case_and_points()) {
        let ds = transform(c);
        let im = induced_map(&ds).unwrap();
        // scalar * M' = (scalar / g) * (g M')
        let g = im.raw_matrix.content();
        let t = ds.tower();
        let scaled = im.matrix.scale(&g);
        let base = im.scalar.scale(&Rational::new(1.into(), g));
        let lhs = &im.scalar * &im.matrix.apply(&p).to_elem(t).unwrap();
        let rhs = &base * &scaled.apply(&p).to_elem(t).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        prop_assert_eq!(lhs, ds.apply_exact(&p).unwrap());
    }
}

/// The expansion of the transform with `S = x^2`, written out term by term:
/// `{n x^3 - n x + 2 m x^2 + i (m x^3 - m x + n x^4 + n)} / (1 + x^2)`.
#[test]
fn conjugation_form_reproduces_the_expanded_formula() {
    for k in 1..=30 {
        let ds = DirectionalScaling::square_family(k).unwrap();
        let t = ds.tower();
        let x = t.generator("x").unwrap();
        let i = t.generator("i").unwrap();
        let inv = (t.one() + &x * &x).inv().unwrap();
        for (m, n) in [(1, 0), (0, 1), (3, -7), (-12, 5)] {
            let (mq, nq) = (t.from_int(m), t.from_int(n));
            let x2 = &x * &x;
            let x3 = &x2 * &x;
            let x4 = &x3 * &x;
            let re = &nq * &x3 - &nq * &x + (&mq * &x2).scale(&Rational::from_integer(2.into()));
            let im = &mq * &x3 - &mq * &x + &nq * &x4 + &nq;
            let want = (re + &i * &im) * &inv;
            let got = ds
                .apply_exact(&LatticePoint::new(m, n, LatticeKind::Square))
                .unwrap();
            assert_eq!(got, want, "k = {k}, p = ({m}, {n})");
        }
    }
}

/// `{2m - kn + i(-km + (k^2 + 2) n)} x^2 / (1 + x^2)`.
#[test]
fn family_closed_form() {
    for k in 1..=30i64 {
        let ds = DirectionalScaling::square_family(k as u64).unwrap();
        let t = ds.tower();
        let x = t.generator("x").unwrap();
        let i = t.generator("i").unwrap();
        let base = &x * &x * (t.one() + &x * &x).inv().unwrap();
        for (m, n) in [(1i64, 0i64), (0, 1), (4, 9), (-3, 2)] {
            let a = t.from_int(2 * m - k * n);
            let b = t.from_int(-k * m + (k * k + 2) * n);
            let want = (a + &i * &b) * &base;
            let got = ds
                .apply_exact(&LatticePoint::new(m, n, LatticeKind::Square))
                .unwrap();
            assert_eq!(got, want);
        }
    }
}
