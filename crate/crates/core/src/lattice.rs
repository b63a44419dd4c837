//! Gaussian and Eisenstein lattice points, and 2x2 integer matrices.
//!
//! A [`LatticePoint`] `(m, n)` stands for `m + n*i` on the square lattice and
//! `m + n*omega` on the triangular one, with `omega = (-1 + i*sqrt(3))/2`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{GeneratorSpec, Rational, Tower, TowerElement, TowerSpec};
use crate::error::{Error, Result};

pub const I: &str = "i";
pub const OMEGA: &str = "omega";
pub const SQRT3: &str = "sqrt3";

const HALF_SQRT3: f64 = 0.866_025_403_784_438_6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LatticeKind {
    Square,
    Triangular,
}

impl LatticeKind {
    /// Generator name of the lattice unit in every tower built for this kind.
    pub fn unit_name(self) -> &'static str {
        match self {
            LatticeKind::Square => I,
            LatticeKind::Triangular => OMEGA,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LatticeKind::Square => "square",
            LatticeKind::Triangular => "triangular",
        }
    }

    /// `i^2 = -1` or `omega^2 = -omega - 1`.
    pub fn unit_generator(self) -> GeneratorSpec {
        match self {
            LatticeKind::Square => GeneratorSpec::sqrt(I, -1),
            LatticeKind::Triangular => GeneratorSpec::rational(
                OMEGA,
                -Rational::one(),
                -Rational::one(),
                Complex64::new(-0.5, HALF_SQRT3),
            ),
        }
    }

    /// `Q(i)` for the square lattice, `Q(sqrt3)(omega)` for the triangular.
    pub fn base_tower(self) -> Tower {
        let spec = match self {
            LatticeKind::Square => TowerSpec::new(),
            LatticeKind::Triangular => TowerSpec::new().with(GeneratorSpec::sqrt(SQRT3, 3)),
        };
        Tower::new(spec.with(self.unit_generator())).expect("base tower is well formed")
    }

    fn unit_f64(self) -> Complex64 {
        match self {
            LatticeKind::Square => Complex64::new(0.0, 1.0),
            LatticeKind::Triangular => Complex64::new(-0.5, HALF_SQRT3),
        }
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LatticeKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "square" => Ok(LatticeKind::Square),
            "triangular" => Ok(LatticeKind::Triangular),
            other => Err(format!(
                "unknown lattice `{other}` (expected square or triangular)"
            )),
        }
    }
}

/// The tower `Q(sqrt3)` used for exact Cartesian coordinates.
pub fn sqrt3_tower() -> Tower {
    Tower::new(TowerSpec::new().with(GeneratorSpec::sqrt(SQRT3, 3)))
        .expect("sqrt3 tower is well formed")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    pub m: BigInt,
    pub n: BigInt,
    pub kind: LatticeKind,
}

impl LatticePoint {
    pub fn new(m: impl Into<BigInt>, n: impl Into<BigInt>, kind: LatticeKind) -> Self {
        LatticePoint {
            m: m.into(),
            n: n.into(),
            kind,
        }
    }

    pub fn origin(kind: LatticeKind) -> Self {
        Self::new(0, 0, kind)
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero() && self.n.is_zero()
    }

    /// `m + n*unit` inside `tower`, which must contain the lattice unit.
    pub fn to_elem(&self, tower: &Tower) -> Result<TowerElement> {
        let unit = tower.generator(self.kind.unit_name())?;
        Ok(tower.from_int(self.m.clone()) + unit.scale(&Rational::from_integer(self.n.clone())))
    }

    /// Exact Cartesian coordinates in `Q(sqrt3)`.
    pub fn cartesian_exact(&self) -> (TowerElement, TowerElement) {
        let t = sqrt3_tower();
        let m = Rational::from_integer(self.m.clone());
        let n = Rational::from_integer(self.n.clone());
        match self.kind {
            LatticeKind::Square => (t.from_rational(m), t.from_rational(n)),
            LatticeKind::Triangular => {
                let half = Rational::new(1.into(), 2.into());
                (t.from_rational(m - &n * &half), t.gen(0).scale(&(n * half)))
            }
        }
    }

    pub fn cartesian(&self) -> (f64, f64) {
        let m = self.m.to_f64().unwrap_or(f64::NAN);
        let n = self.n.to_f64().unwrap_or(f64::NAN);
        match self.kind {
            LatticeKind::Square => (m, n),
            LatticeKind::Triangular => (m - 0.5 * n, HALF_SQRT3 * n),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let (x, y) = self.cartesian();
        Complex64::new(x, y)
    }

    fn check_kind(&self, other: &LatticePoint) {
        assert_eq!(self.kind, other.kind, "lattice kinds differ");
    }

    /// Complex conjugate, as a point of the same lattice.
    pub fn conj(&self) -> LatticePoint {
        match self.kind {
            LatticeKind::Square => Self::new(self.m.clone(), -&self.n, self.kind),
            // conj(omega) = omega^2 = -1 - omega
            LatticeKind::Triangular => Self::new(&self.m - &self.n, -&self.n, self.kind),
        }
    }

    /// Field norm `|z|^2`.
    pub fn norm(&self) -> BigInt {
        let (m, n) = (&self.m, &self.n);
        match self.kind {
            LatticeKind::Square => m * m + n * n,
            LatticeKind::Triangular => m * m - m * n + n * n,
        }
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// `self / other` when the quotient is again a lattice point.
    pub fn div_exact(&self, other: &LatticePoint) -> Option<LatticePoint> {
        self.check_kind(other);
        let nrm = other.norm();
        if nrm.is_zero() {
            return None;
        }
        let num = self * &other.conj();
        let (m, rm) = num.m.div_rem(&nrm);
        let (n, rn) = num.n.div_rem(&nrm);
        (rm.is_zero() && rn.is_zero()).then(|| Self::new(m, n, self.kind))
    }

    /// Quotient rounded coordinate-wise; the remainder has smaller norm than
    /// `other`, which makes both rings Euclidean.
    pub fn div_round(&self, other: &LatticePoint) -> LatticePoint {
        self.check_kind(other);
        let nrm = other.norm();
        let num = self * &other.conj();
        let round = |v: &BigInt| {
            // floor((2v + nrm) / 2nrm)
            (v * BigInt::from(2) + &nrm).div_floor(&(&nrm * BigInt::from(2)))
        };
        Self::new(round(&num.m), round(&num.n), self.kind)
    }

    /// A greatest common divisor, defined up to units.
    pub fn gcd(&self, other: &LatticePoint) -> LatticePoint {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let q = a.div_round(&b);
            let r = &a - &(&q * &b);
            a = b;
            b = r;
        }
        a
    }

    /// All units of the lattice ring.
    pub fn units(kind: LatticeKind) -> Vec<LatticePoint> {
        let pairs: &[(i64, i64)] = match kind {
            LatticeKind::Square => &[(1, 0), (0, 1), (-1, 0), (0, -1)],
            LatticeKind::Triangular => &[(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)],
        };
        pairs.iter().map(|&(m, n)| Self::new(m, n, kind)).collect()
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.m, self.n)
    }
}

impl Add for &LatticePoint {
    type Output = LatticePoint;
    fn add(self, rhs: &LatticePoint) -> LatticePoint {
        self.check_kind(rhs);
        LatticePoint::new(&self.m + &rhs.m, &self.n + &rhs.n, self.kind)
    }
}

impl Sub for &LatticePoint {
    type Output = LatticePoint;
    fn sub(self, rhs: &LatticePoint) -> LatticePoint {
        self.check_kind(rhs);
        LatticePoint::new(&self.m - &rhs.m, &self.n - &rhs.n, self.kind)
    }
}

impl Neg for &LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-&self.m, -&self.n, self.kind)
    }
}

/// Ring product in `Z[i]` or `Z[omega]`.
impl Mul for &LatticePoint {
    type Output = LatticePoint;
    fn mul(self, rhs: &LatticePoint) -> LatticePoint {
        self.check_kind(rhs);
        let (a, b, c, d) = (&self.m, &self.n, &rhs.m, &rhs.n);
        let (m, n) = match self.kind {
            LatticeKind::Square => (a * c - b * d, a * d + b * c),
            // omega^2 = -1 - omega
            LatticeKind::Triangular => (a * c - b * d, a * d + b * c - b * d),
        };
        LatticePoint::new(m, n, self.kind)
    }
}

/// Row-major 2x2 integer matrix acting on `(m, n)` as
/// `(a m + b n, c m + d n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMatrix2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        IntMatrix2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    /// Matrix whose columns are the images of `(1, 0)` and `(0, 1)`.
    pub fn from_columns(col0: (BigInt, BigInt), col1: (BigInt, BigInt)) -> Self {
        IntMatrix2 {
            a: col0.0,
            b: col1.0,
            c: col0.1,
            d: col1.1,
        }
    }

    pub fn rows(&self) -> [[BigInt; 2]; 2] {
        [
            [self.a.clone(), self.b.clone()],
            [self.c.clone(), self.d.clone()],
        ]
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Non-negative gcd of the entries.
    pub fn content(&self) -> BigInt {
        self.a.gcd(&self.b).gcd(&self.c).gcd(&self.d)
    }

    /// `(g, M')` with `g` the entry gcd and `self = g * M'`.
    pub fn primitive(&self) -> Result<(BigInt, IntMatrix2)> {
        if self.is_zero() {
            return Err(Error::ZeroMatrix);
        }
        let g = self.content();
        let m = IntMatrix2 {
            a: &self.a / &g,
            b: &self.b / &g,
            c: &self.c / &g,
            d: &self.d / &g,
        };
        Ok((g, m))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix2 {
        IntMatrix2 {
            a: &self.a * k,
            b: &self.b * k,
            c: &self.c * k,
            d: &self.d * k,
        }
    }

    pub fn apply(&self, p: &LatticePoint) -> LatticePoint {
        LatticePoint::new(
            &self.a * &p.m + &self.b * &p.n,
            &self.c * &p.m + &self.d * &p.n,
            p.kind,
        )
    }

    /// Integer inverse, present exactly when `det = +-1`.
    pub fn inverse(&self) -> Option<IntMatrix2> {
        let det = self.det();
        if !det.abs().is_one() {
            return None;
        }
        Some(IntMatrix2 {
            a: &self.d * &det,
            b: -&self.b * &det,
            c: -&self.c * &det,
            d: &self.a * &det,
        })
    }
}

impl Mul for &IntMatrix2 {
    type Output = IntMatrix2;
    fn mul(self, rhs: &IntMatrix2) -> IntMatrix2 {
        IntMatrix2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl fmt::Display for IntMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// Float value of `m + n*unit` via the unit's complex value.
pub fn embed_point(p: &LatticePoint) -> Complex64 {
    let m = p.m.to_f64().unwrap_or(f64::NAN);
    let n = p.n.to_f64().unwrap_or(f64::NAN);
    Complex64::new(m, 0.0) + p.kind.unit_f64() * n
}
