//! Directional scaling transforms with the drag point at the origin.
//!
//! A transform scales by `S` along the direction at angle `theta` and fixes
//! the perpendicular direction. Angles never enter the exact path; only
//! `x = tan(theta)` does, as a generator of a quadratic tower, and the scale
//! is always `S = x^2`. In complex form
//!
//! ```text
//! T(z) = (S + 1)/2 * z + (S - 1)/2 * e^{2 i theta} * conj(z),
//! e^{2 i theta} = (1 - x^2 + 2 i x) / (1 + x^2).
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::arith::{GeneratorSpec, Rational, Surd, Tower, TowerElement, TowerSpec};
use crate::error::{Error, Result};
use crate::lattice::{LatticeKind, LatticePoint, SQRT3};

/// Generator name of `tan(theta)` in scheme towers.
pub const TAN: &str = "x";

/// A scheme parameter `k = a + b*sqrt(3)`; the direction is the positive
/// root of `x^2 = 1 - k x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchemeK {
    pub a: i64,
    pub b: i64,
}

impl SchemeK {
    pub fn integer(k: i64) -> Self {
        SchemeK { a: k, b: 0 }
    }

    pub fn sqrt3_multiple(b: i64) -> Self {
        SchemeK { a: 0, b }
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * 3f64.sqrt()
    }

    /// Exact sign test for `a + b sqrt3 > 0`.
    pub fn is_positive(self) -> bool {
        let (a, b) = (self.a as i128, self.b as i128);
        match (a.signum(), b.signum()) {
            (1, s) if s >= 0 => true,
            (s, 1) if s >= 0 => true,
            (1, -1) => a * a > 3 * b * b,
            (-1, 1) => 3 * b * b > a * a,
            _ => false,
        }
    }

    pub fn to_surd(self) -> Surd {
        Surd::new(
            Rational::from_integer(self.a.into()),
            Rational::from_integer(self.b.into()),
            3.into(),
        )
        .expect("3 is square-free")
    }

    /// Positive root of `x^2 + k x - 1 = 0`, computed without cancellation.
    pub fn root_f64(self) -> f64 {
        let k = self.to_f64();
        2.0 / (k + (k * k + 4.0).sqrt())
    }
}

impl fmt::Display for SchemeK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_surd())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    /// `tan(theta)` is the positive root of `x^2 = 1 - k x`.
    Scheme(SchemeK),
    /// `tan(theta) = 2 - sqrt3` on the triangular lattice.
    TriangularKnown,
    Custom,
}

#[derive(Clone, Debug)]
pub struct DirectionalScaling {
    kind: LatticeKind,
    tower: Tower,
    tan_theta: TowerElement,
    scale: TowerElement,
    family: Family,
    // T(z) = even * z + odd * conj(z)
    even: TowerElement,
    odd: TowerElement,
}

/// `Q[sqrt3]?[x][unit]` with `x^2 = 1 - k x`.
pub fn scheme_tower(kind: LatticeKind, k: SchemeK) -> Result<Tower> {
    let with_sqrt3 = kind == LatticeKind::Triangular || k.b != 0;
    let mut spec = TowerSpec::new();
    let alpha = if with_sqrt3 {
        spec = spec.with(GeneratorSpec::sqrt(SQRT3, 3));
        vec![
            Rational::from_integer((-k.a).into()),
            Rational::from_integer((-k.b).into()),
        ]
    } else {
        vec![Rational::from_integer((-k.a).into())]
    };
    spec = spec
        .with(GeneratorSpec::new(
            TAN,
            alpha,
            vec![Rational::from_integer(1.into())],
            Complex64::new(k.root_f64(), 0.0),
        ))
        .with(kind.unit_generator());
    Tower::new(spec)
}

impl DirectionalScaling {
    /// The square-lattice member of the family for a positive integer `k`.
    pub fn square_family(k: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidTransform("k must be positive".into()));
        }
        let k = i64::try_from(k).map_err(|_| Error::InvalidTransform("k too large".into()))?;
        Self::scheme(LatticeKind::Square, SchemeK::integer(k))
    }

    /// Transform for the scheme parameter `k` on either lattice.
    pub fn scheme(kind: LatticeKind, k: SchemeK) -> Result<Self> {
        if !k.is_positive() {
            return Err(Error::InvalidTransform(format!("k = {k} is not positive")));
        }
        let tower = scheme_tower(kind, k)?;
        let tan = tower.generator(TAN)?;
        Self::build(kind, tower, tan, Family::Scheme(k))
    }

    /// `tan(theta) = 2 - sqrt3`, `S = 7 - 4 sqrt3` on the triangular lattice.
    pub fn triangular_known() -> Self {
        let tower = LatticeKind::Triangular.base_tower();
        let tan = tower.from_int(2) - tower.generator(SQRT3).expect("sqrt3 generator");
        Self::build(LatticeKind::Triangular, tower, tan, Family::TriangularKnown)
            .expect("known triangular transform is well formed")
    }

    /// Transform for an arbitrary real `tan_theta`; the scale is forced to
    /// `tan_theta^2`.
    pub fn custom(kind: LatticeKind, tan_theta: TowerElement) -> Result<Self> {
        let tower = tan_theta.tower().clone();
        Self::build(kind, tower, tan_theta, Family::Custom)
    }

    fn build(
        kind: LatticeKind,
        tower: Tower,
        tan_theta: TowerElement,
        family: Family,
    ) -> Result<Self> {
        let unit = kind.unit_name();
        let unit_index = tower.index_of(unit)?;
        // complex conjugation must act as conjugation over the unit alone
        let real_elsewhere = (0..tower.height())
            .filter(|&j| j != unit_index)
            .all(|j| tower.generator_numeric(j).im == 0.0);
        if !real_elsewhere {
            return Err(Error::InvalidTransform(
                "only the lattice unit may be non-real".into(),
            ));
        }
        if tan_theta.conjugate(unit)? != tan_theta {
            return Err(Error::InvalidTransform("tan(theta) must be real".into()));
        }
        if tan_theta.is_zero() {
            return Err(Error::InvalidTransform("tan(theta) must be nonzero".into()));
        }
        let i = imaginary_unit(kind, &tower)?;
        let one = tower.one();
        let half = Rational::new(1.into(), 2.into());
        let two = Rational::from_integer(2.into());

        let scale = &tan_theta * &tan_theta;
        let rot2 = (&one - &scale + (&i * &tan_theta).scale(&two)) * (&one + &scale).inv()?;
        let even = (&scale + &one).scale(&half);
        let odd = (&scale - &one).scale(&half) * rot2;
        Ok(DirectionalScaling {
            kind,
            tower,
            tan_theta,
            scale,
            family,
            even,
            odd,
        })
    }

    pub fn kind(&self) -> LatticeKind {
        self.kind
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn tan_theta(&self) -> &TowerElement {
        &self.tan_theta
    }

    pub fn scale(&self) -> &TowerElement {
        &self.scale
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn tan_f64(&self) -> f64 {
        self.tan_theta.embed().re
    }

    pub fn scale_f64(&self) -> f64 {
        self.scale.embed().re
    }

    pub fn theta(&self) -> f64 {
        self.tan_f64().atan()
    }

    pub fn theta_degrees(&self) -> f64 {
        self.theta().to_degrees()
    }

    /// Exact image of a lattice point.
    pub fn apply_exact(&self, p: &LatticePoint) -> Result<TowerElement> {
        if p.kind != self.kind {
            return Err(Error::KindMismatch {
                expected: self.kind.to_string(),
                found: p.kind.to_string(),
            });
        }
        let z = p.to_elem(&self.tower)?;
        let zc = p.conj().to_elem(&self.tower)?;
        Ok(&self.even * &z + &self.odd * &zc)
    }

    /// Floating-point image of a Cartesian vector, by splitting it into the
    /// parts parallel and perpendicular to the scaling direction.
    pub fn apply_float(&self, xy: (f64, f64)) -> (f64, f64) {
        resolve_and_scale(self.theta(), self.scale_f64(), xy)
    }
}

/// `S (v.u) u + (v.u_perp) u_perp` with `u = (cos theta, sin theta)`.
pub fn resolve_and_scale(theta: f64, scale: f64, (x, y): (f64, f64)) -> (f64, f64) {
    let (s, c) = theta.sin_cos();
    let par = scale * (x * c + y * s);
    let perp = -x * s + y * c;
    (par * c - perp * s, par * s + perp * c)
}

/// `i` inside a tower for `kind`: the square unit itself, or
/// `(1 + 2 omega) / sqrt3` on the triangular lattice.
pub fn imaginary_unit(kind: LatticeKind, tower: &Tower) -> Result<TowerElement> {
    match kind {
        LatticeKind::Square => tower.generator(kind.unit_name()),
        LatticeKind::Triangular => {
            let w = tower.generator(kind.unit_name())?;
            let s = tower.generator(SQRT3)?;
            let third = Rational::new(1.into(), 3.into());
            Ok((tower.one() + w.scale(&Rational::from_integer(2.into()))) * s.scale(&third))
        }
    }
}

fn single_root_tower(name: &str, d: i64) -> Tower {
    Tower::new(TowerSpec::new().with(GeneratorSpec::sqrt(name, d))).expect("square root tower")
}

/// `sqrt2 - 1`.
pub fn silver_ratio() -> TowerElement {
    let t = single_root_tower("sqrt2", 2);
    t.gen(0) - t.one()
}

/// `2 - sqrt3`.
pub fn platinum_ratio() -> TowerElement {
    let t = single_root_tower(SQRT3, 3);
    t.from_int(2) - t.gen(0)
}

/// `(sqrt5 - 1) / 2`.
pub fn golden_ratio() -> TowerElement {
    let t = single_root_tower("sqrt5", 5);
    (t.gen(0) - t.one()).scale(&Rational::new(BigInt::from(1), BigInt::from(2)))
}
