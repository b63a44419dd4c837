//! Exact arithmetic: rationals, quadratic towers, and real surds.

mod surd;
mod tower;

pub use surd::{ParseSurdError, Surd};
pub use tower::{GeneratorSpec, Tower, TowerElement, TowerSpec, RELATION_TOLERANCE};

/// Arbitrary-precision rational, always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Imaginary parts below this are treated as a real embedding.
const REAL_EPS: f64 = 1e-12;

impl Tower {
    /// Each generator as a real surd over a single square root, when the
    /// generator is real and its root stays in `Q(sqrt(d))`.
    fn surd_values(&self) -> Vec<Option<Surd>> {
        let mut values: Vec<Option<Surd>> = Vec::with_capacity(self.height());
        for j in 0..self.height() {
            let numeric = self.generator_numeric(j);
            let value = if numeric.im.abs() > REAL_EPS * (1.0 + numeric.re.abs()) {
                None
            } else {
                let (alpha, beta) = self.relation(j);
                generator_root(&values, &alpha, &beta, numeric.re)
            };
            values.push(value);
        }
        values
    }
}

fn generator_root(
    values: &[Option<Surd>],
    alpha: &TowerElement,
    beta: &TowerElement,
    numeric: f64,
) -> Option<Surd> {
    let a = eval_surd(values, alpha)?;
    let b = eval_surd(values, beta)?;
    // t = (a +- sqrt(a^2 + 4b)) / 2
    let four = Rational::from_integer(4.into());
    let disc = a.checked_mul(&a)?.checked_add(&b.scale(&four))?;
    let root = disc.sqrt()?;
    let half = Rational::new(1.into(), 2.into());
    let plus = a.checked_add(&root)?.scale(&half);
    let minus = a
        .checked_add(&root.scale(&-Rational::from_integer(1.into())))?
        .scale(&half);
    if (plus.to_f64() - numeric).abs() <= (minus.to_f64() - numeric).abs() {
        Some(plus)
    } else {
        Some(minus)
    }
}

fn eval_surd(values: &[Option<Surd>], e: &TowerElement) -> Option<Surd> {
    let mut acc = Surd::from_rational(Rational::from_integer(0.into()));
    for (m, c) in e.coeffs().iter().enumerate() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let mut term = Surd::from_rational(c.clone());
        for (j, v) in values.iter().enumerate() {
            if m >> j & 1 == 1 {
                term = term.checked_mul(v.as_ref()?)?;
            }
        }
        acc = acc.checked_add(&term)?;
    }
    Some(acc)
}

impl TowerElement {
    /// The element as `a + b*sqrt(d)`, substituting each real generator by
    /// the root its numeric embedding selects. None when the element depends
    /// on a complex generator or leaves a single quadratic field.
    pub fn to_surd(&self) -> Option<Surd> {
        eval_surd(&self.tower().surd_values(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn family_generator_renders_as_radical() {
        let x = 2f64.sqrt() - 1.0;
        let t = Tower::new(TowerSpec::new().with(GeneratorSpec::rational(
            "x",
            q(-2, 1),
            q(1, 1),
            Complex64::new(x, 0.0),
        )))
        .unwrap();
        assert_eq!(t.gen(0).to_surd().unwrap().to_string(), "-1+sqrt(2)");
        let half = (t.one() - t.gen(0)).scale(&q(1, 2));
        assert_eq!(half.to_surd().unwrap().to_string(), "(2-sqrt(2))/2");
    }

    #[test]
    fn nested_root_collapses_when_it_splits() {
        // x^2 = 1 - 2 sqrt3 x has positive root 2 - sqrt3
        let s3 = 3f64.sqrt();
        let t = Tower::new(TowerSpec::new().with(GeneratorSpec::sqrt("sqrt3", 3)).with(
            GeneratorSpec::new(
                "x",
                vec![q(0, 1), q(-2, 1)],
                vec![q(1, 1)],
                Complex64::new(2.0 - s3, 0.0),
            ),
        ))
        .unwrap();
        assert_eq!(t.gen(1).to_surd().unwrap().to_string(), "2-sqrt(3)");
    }

    #[test]
    fn complex_generators_have_no_surd() {
        let t = Tower::new(TowerSpec::new().with(GeneratorSpec::sqrt("i", -1))).unwrap();
        assert!(t.gen(0).to_surd().is_none());
        assert_eq!(t.from_int(3).to_surd().unwrap().to_string(), "3");
    }
}
