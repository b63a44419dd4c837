//! Ring axioms, inversion, conjugation and embedding checks on random
//! elements of every tower shape the library builds.

use latscale::lattice::LatticeKind;
use latscale::transform::{scheme_tower, SchemeK};
use latscale::{Rational, Tower, TowerElement};
use proptest::prelude::*;

fn towers() -> Vec<Tower> {
    vec![
        scheme_tower(LatticeKind::Square, SchemeK::integer(1)).unwrap(),
        scheme_tower(LatticeKind::Square, SchemeK::integer(2)).unwrap(),
        scheme_tower(LatticeKind::Square, SchemeK::integer(7)).unwrap(),
        LatticeKind::Triangular.base_tower(),
        // three generators; x^2 = 1 - 2 sqrt3 x splits, so this ring has zero divisors
        scheme_tower(LatticeKind::Triangular, SchemeK::sqrt3_multiple(2)).unwrap(),
        scheme_tower(LatticeKind::Square, SchemeK { a: 1, b: 1 }).unwrap(),
    ]
}

fn coeff() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=12).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn element(tower: &Tower) -> impl Strategy<Value = TowerElement> {
    let t = tower.clone();
    prop::collection::vec(coeff(), tower.dim()).prop_map(move |c| t.element(c).unwrap())
}

fn tower_and_elements(n: usize) -> impl Strategy<Value = (Tower, Vec<TowerElement>)> {
    (0..towers().len()).prop_flat_map(move |i| {
        let t = towers()[i].clone();
        let elems = prop::collection::vec(element(&t), n);
        (Just(t), elems)
    })
}

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 1000,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn ring_axioms((t, e) in tower_and_elements(3)) {
        let (a, b, c) = (&e[0], &e[1], &e[2]);
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a * (b + c), a * b + a * c);
        prop_assert_eq!((a + b) + c, a + (b + c));
        prop_assert_eq!(a + b, b + a);
        prop_assert_eq!(a * &t.one(), a.clone());
        prop_assert_eq!(a + &t.zero(), a.clone());
        prop_assert!((a + &(-a)).is_zero());
    }

    #[test]
    fn inverse_is_exact((t, e) in tower_and_elements(1)) {
        let a = &e[0];
        match a.inv() {
            Ok(inv) => prop_assert_eq!(a * &inv, t.one()),
            // zero, or a zero divisor of the split three-generator tower
            Err(_) => prop_assert!(a.is_zero() || t.height() == 3),
        }
    }

    #[test]
    fn conjugation_is_an_involutive_homomorphism((t, e) in tower_and_elements(2)) {
        let unit = if t.has_generator("i") { "i" } else { "omega" };
        let (a, b) = (&e[0], &e[1]);
        let ca = a.conjugate(unit).unwrap();
        prop_assert_eq!(ca.conjugate(unit).unwrap(), a.clone());
        prop_assert_eq!((a * b).conjugate(unit).unwrap(), &ca * &b.conjugate(unit).unwrap());
        prop_assert_eq!((a + b).conjugate(unit).unwrap(), &ca + &b.conjugate(unit).unwrap());
        // and it is complex conjugation on the embedding
        let d = ca.embed() - a.embed().conj();
        prop_assert!(d.norm() <= 1e-9 * (1.0 + a.embed().norm()));
    }

    #[test]
    fn embed_is_a_homomorphism((_t, e) in tower_and_elements(2)) {
        let (a, b) = (&e[0], &e[1]);
        let prod = a.embed() * b.embed();
        prop_assert!(((a * b).embed() - prod).norm() <= 1e-9 * (1.0 + prod.norm()));
        let sum = a.embed() + b.embed();
        prop_assert!(((a + b).embed() - sum).norm() <= 1e-9 * (1.0 + sum.norm()));
    }

    #[test]
    fn surd_strings_round_trip(a in -10_000i64..10_000, b in -10_000i64..10_000,
                               d in 1i64..500, den in 1i64..100, r in 2i64..200) {
        let s = latscale::Surd::new(
            Rational::new(a.into(), den.into()),
            Rational::new(b.into(), d.into()),
            r.into(),
        ).unwrap();
        let back: latscale::Surd = s.to_string().parse().unwrap();
        prop_assert_eq!(back, s);
    }
}

#[test]
fn family_generator_embeds_to_positive_root() {
    for k in 1..=1000i64 {
        let t = scheme_tower(LatticeKind::Square, SchemeK::integer(k)).unwrap();
        let kf = k as f64;
        let want = ((kf * kf + 4.0).sqrt() - kf) / 2.0;
        let got = t.generator("x").unwrap().embed();
        assert!((got.re - want).abs() <= 1e-12 && got.im == 0.0, "k = {k}");
    }
}
