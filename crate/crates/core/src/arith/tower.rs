//! Towers of quadratic extensions over the rationals.
//!
//! A tower with generators `t_0, .., t_{n-1}` is the ring
//! `Q[t_0][t_1]..[t_{n-1}]` where each generator satisfies
//! `t_j^2 = alpha_j * t_j + beta_j` with `alpha_j, beta_j` taken from the
//! subtower on `t_0, .., t_{j-1}`. Elements are dense vectors of `2^n`
//! rational coefficients indexed by square-free monomials: bit `j` of the
//! index says whether `t_j` divides the monomial. Every product is reduced
//! eagerly, so two elements are equal iff their coefficient vectors are.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};

/// Tolerance on `|t^2 - alpha t - beta|` for the embedded numeric value of a
/// generator, relative to the size of the terms involved.
pub const RELATION_TOLERANCE: f64 = 1e-12;

/// Defining data for one generator: `name^2 = alpha * name + beta`.
///
/// `alpha` and `beta` are coefficient vectors over the monomials of the
/// generators that precede this one. Shorter vectors are zero-padded.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub name: String,
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
    pub numeric: Complex64,
}

impl GeneratorSpec {
    pub fn new(
        name: impl Into<String>,
        alpha: Vec<Rational>,
        beta: Vec<Rational>,
        numeric: Complex64,
    ) -> Self {
        GeneratorSpec {
            name: name.into(),
            alpha,
            beta,
            numeric,
        }
    }

    /// A generator whose relation has rational coefficients.
    pub fn rational(
        name: impl Into<String>,
        alpha: Rational,
        beta: Rational,
        numeric: Complex64,
    ) -> Self {
        Self::new(name, vec![alpha], vec![beta], numeric)
    }

    /// `name^2 = d`, embedded as the principal square root of `d`.
    pub fn sqrt(name: impl Into<String>, d: i64) -> Self {
        let numeric = if d >= 0 {
            Complex64::new((d as f64).sqrt(), 0.0)
        } else {
            Complex64::new(0.0, (-d as f64).sqrt())
        };
        Self::rational(
            name,
            Rational::zero(),
            Rational::from_integer(d.into()),
            numeric,
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct TowerSpec {
    pub generators: Vec<GeneratorSpec>,
}

impl TowerSpec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, generator: GeneratorSpec) -> Self {
        self.generators.push(generator);
        self
    }
}

#[derive(Debug)]
struct Generator {
    name: String,
    alpha: Vec<Rational>,
    beta: Vec<Rational>,
    alpha_is_zero: bool,
    numeric: Complex64,
}

impl PartialEq for Generator {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.alpha == other.alpha
            && self.beta == other.beta
            && self.numeric.re.to_bits() == other.numeric.re.to_bits()
            && self.numeric.im.to_bits() == other.numeric.im.to_bits()
    }
}

#[derive(Debug)]
struct TowerInner {
    gens: Vec<Generator>,
    /// Numeric value of every square-free monomial, indexed like coefficients.
    monomials: Vec<Complex64>,
}

/// An immutable quadratic tower; cheap to clone and share across threads.
#[derive(Clone)]
pub struct Tower {
    inner: Arc<TowerInner>,
}

impl PartialEq for Tower {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.gens == other.inner.gens
    }
}

impl Eq for Tower {}

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.relations()).finish()
    }
}

fn pad(mut v: Vec<Rational>, len: usize, name: &str, what: &str) -> Result<Vec<Rational>> {
    if v.len() > len {
        if v[len..].iter().any(|c| !c.is_zero()) {
            return Err(Error::MalformedSpec(format!(
                "{what} of `{name}` references a generator that is not defined before it"
            )));
        }
        v.truncate(len);
    }
    v.resize(len, Rational::zero());
    Ok(v)
}

fn dot(coeffs: &[Rational], monomials: &[Complex64]) -> Complex64 {
    coeffs
        .iter()
        .zip(monomials)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, m)| m * c.to_f64().unwrap_or(f64::NAN))
        .sum()
}

impl Tower {
    /// Builds the ring context for `spec`, validating relation ordering and
    /// the embedded numerics.
    pub fn new(spec: TowerSpec) -> Result<Tower> {
        let mut gens: Vec<Generator> = Vec::with_capacity(spec.generators.len());
        let mut monomials = vec![Complex64::new(1.0, 0.0)];
        for (j, g) in spec.generators.into_iter().enumerate() {
            if g.name.is_empty() || g.name.contains(|c: char| c.is_whitespace() || c == '*') {
                return Err(Error::MalformedSpec(format!(
                    "bad generator name `{}`",
                    g.name
                )));
            }
            if gens.iter().any(|h| h.name == g.name) {
                return Err(Error::MalformedSpec(format!(
                    "duplicate generator `{}`",
                    g.name
                )));
            }
            if j >= 16 {
                return Err(Error::MalformedSpec("too many generators".into()));
            }
            let len = 1usize << j;
            let alpha = pad(g.alpha, len, &g.name, "alpha")?;
            let beta = pad(g.beta, len, &g.name, "beta")?;

            let a = dot(&alpha, &monomials);
            let b = dot(&beta, &monomials);
            let t = g.numeric;
            let residual = (t * t - a * t - b).norm();
            let size = 1f64.max(t.norm_sqr()).max((a * t).norm()).max(b.norm());
            if residual.is_nan() || residual > RELATION_TOLERANCE * size {
                return Err(Error::NumericMismatch {
                    name: g.name,
                    residual,
                });
            }

            let upper: Vec<Complex64> = monomials.iter().map(|m| m * t).collect();
            monomials.extend(upper);
            gens.push(Generator {
                name: g.name,
                alpha_is_zero: alpha.iter().all(Zero::is_zero),
                alpha,
                beta,
                numeric: t,
            });
        }
        Ok(Tower {
            inner: Arc::new(TowerInner { gens, monomials }),
        })
    }

    /// Number of generators.
    pub fn height(&self) -> usize {
        self.inner.gens.len()
    }

    /// Length of coefficient vectors, `2^height`.
    pub fn dim(&self) -> usize {
        1 << self.height()
    }

    pub fn generator_names(&self) -> impl Iterator<Item = &str> {
        self.inner.gens.iter().map(|g| g.name.as_str())
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.inner
            .gens
            .iter()
            .position(|g| g.name == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn has_generator(&self, name: &str) -> bool {
        self.index_of(name).is_ok()
    }

    pub fn generator_numeric(&self, index: usize) -> Complex64 {
        self.inner.gens[index].numeric
    }

    /// `alpha_j` and `beta_j` of generator `index`, as elements of this tower.
    pub fn relation(&self, index: usize) -> (TowerElement, TowerElement) {
        let g = &self.inner.gens[index];
        (self.embed_sub(&g.alpha), self.embed_sub(&g.beta))
    }

    /// Human-readable relations, e.g. `x^2 = -2*x + 1`.
    pub fn relations(&self) -> Vec<String> {
        (0..self.height())
            .map(|j| {
                let g = &self.inner.gens[j];
                let (alpha, beta) = self.relation(j);
                let t = self.gen(j);
                let rhs = &(&alpha * &t) + &beta;
                format!("{}^2 = {}", g.name, rhs)
            })
            .collect()
    }

    pub fn zero(&self) -> TowerElement {
        TowerElement {
            tower: self.clone(),
            coeffs: vec![Rational::zero(); self.dim()],
        }
    }

    pub fn one(&self) -> TowerElement {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, q: Rational) -> TowerElement {
        let mut e = self.zero();
        e.coeffs[0] = q;
        e
    }

    pub fn from_int(&self, n: impl Into<BigInt>) -> TowerElement {
        self.from_rational(Rational::from_integer(n.into()))
    }

    pub fn gen(&self, index: usize) -> TowerElement {
        let mut e = self.zero();
        e.coeffs[1 << index] = Rational::one();
        e
    }

    pub fn generator(&self, name: &str) -> Result<TowerElement> {
        Ok(self.gen(self.index_of(name)?))
    }

    /// Element with the given coefficient vector (zero-padded).
    pub fn element(&self, coeffs: Vec<Rational>) -> Result<TowerElement> {
        let coeffs = pad(coeffs, self.dim(), "<element>", "coefficient vector")?;
        Ok(TowerElement {
            tower: self.clone(),
            coeffs,
        })
    }

    fn embed_sub(&self, sub: &[Rational]) -> TowerElement {
        let mut e = self.zero();
        e.coeffs[..sub.len()].clone_from_slice(sub);
        e
    }

    fn monomial_name(&self, index: usize) -> String {
        self.inner
            .gens
            .iter()
            .enumerate()
            .filter(|(j, _)| index >> j & 1 == 1)
            .map(|(_, g)| g.name.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Product of two coefficient slices in the subtower of the first
    /// `level` generators.
    fn mul_level(&self, level: usize, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let len = 1usize << level;
        if is_zero(a) || is_zero(b) {
            return vec![Rational::zero(); len];
        }
        if level == 0 {
            return vec![&a[0] * &b[0]];
        }
        let half = len / 2;
        let (p1, q1) = a.split_at(half);
        let (p2, q2) = b.split_at(half);
        let g = &self.inner.gens[level - 1];

        // (p1 + q1 t)(p2 + q2 t) = p1 p2 + q1 q2 beta + (p1 q2 + q1 p2 + q1 q2 alpha) t
        let mut lower = self.mul_level(level - 1, p1, p2);
        let mut upper = self.mul_level(level - 1, p1, q2);
        add_assign(&mut upper, &self.mul_level(level - 1, q1, p2));
        if !is_zero(q1) && !is_zero(q2) {
            let qq = self.mul_level(level - 1, q1, q2);
            add_assign(&mut lower, &self.mul_level(level - 1, &qq, &g.beta));
            if !g.alpha_is_zero {
                add_assign(&mut upper, &self.mul_level(level - 1, &qq, &g.alpha));
            }
        }
        lower.extend(upper);
        lower
    }

    /// Inverse in the subtower of the first `level` generators, via the
    /// relative norm down to the previous level.
    fn inv_level(&self, level: usize, a: &[Rational]) -> Result<Vec<Rational>> {
        if level == 0 {
            if a[0].is_zero() {
                return Err(Error::NotInvertible("zero".into()));
            }
            return Ok(vec![a[0].recip()]);
        }
        let half = 1usize << (level - 1);
        let (p, q) = a.split_at(half);
        if is_zero(q) {
            let mut lower = self.inv_level(level - 1, p)?;
            lower.resize(2 * half, Rational::zero());
            return Ok(lower);
        }
        let g = &self.inner.gens[level - 1];
        // conjugate of p + q t is (p + q alpha) - q t
        let mut conj_p = p.to_vec();
        if !g.alpha_is_zero {
            add_assign(&mut conj_p, &self.mul_level(level - 1, q, &g.alpha));
        }
        // norm = p (p + q alpha) - q^2 beta
        let mut norm = self.mul_level(level - 1, p, &conj_p);
        let qq = self.mul_level(level - 1, q, q);
        sub_assign(&mut norm, &self.mul_level(level - 1, &qq, &g.beta));
        let norm_inv = self
            .inv_level(level - 1, &norm)
            .map_err(|_| Error::NotInvertible(format!("norm over `{}` vanishes", g.name)))?;
        let mut lower = self.mul_level(level - 1, &conj_p, &norm_inv);
        let upper = self.mul_level(level - 1, q, &norm_inv);
        lower.extend(upper.into_iter().map(|c| -c));
        Ok(lower)
    }
}

fn is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

fn add_assign(acc: &mut [Rational], rhs: &[Rational]) {
    for (a, b) in acc.iter_mut().zip(rhs) {
        if !b.is_zero() {
            *a += b;
        }
    }
}

fn sub_assign(acc: &mut [Rational], rhs: &[Rational]) {
    for (a, b) in acc.iter_mut().zip(rhs) {
        if !b.is_zero() {
            *a -= b;
        }
    }
}

/// An exact element of a [`Tower`].
#[derive(Clone)]
pub struct TowerElement {
    tower: Tower,
    coeffs: Vec<Rational>,
}

impl PartialEq for TowerElement {
    fn eq(&self, other: &Self) -> bool {
        self.tower == other.tower && self.coeffs == other.coeffs
    }
}

impl Eq for TowerElement {}

impl TowerElement {
    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.coeffs)
    }

    /// Rational value, if the element does not depend on any generator.
    pub fn as_rational(&self) -> Option<&Rational> {
        is_zero(&self.coeffs[1..]).then(|| &self.coeffs[0])
    }

    fn check_same(&self, other: &TowerElement) -> Result<()> {
        if self.tower == other.tower {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn checked_add(&self, other: &TowerElement) -> Result<TowerElement> {
        self.check_same(other)?;
        let mut coeffs = self.coeffs.clone();
        add_assign(&mut coeffs, &other.coeffs);
        Ok(TowerElement {
            tower: self.tower.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &TowerElement) -> Result<TowerElement> {
        self.check_same(other)?;
        let mut coeffs = self.coeffs.clone();
        sub_assign(&mut coeffs, &other.coeffs);
        Ok(TowerElement {
            tower: self.tower.clone(),
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &TowerElement) -> Result<TowerElement> {
        self.check_same(other)?;
        let coeffs = self
            .tower
            .mul_level(self.tower.height(), &self.coeffs, &other.coeffs);
        Ok(TowerElement {
            tower: self.tower.clone(),
            coeffs,
        })
    }

    pub fn scale(&self, q: &Rational) -> TowerElement {
        TowerElement {
            tower: self.tower.clone(),
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> TowerElement {
        let mut base = self.clone();
        let mut acc = self.tower.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Towers with composite relations are not fields,
    /// so this fails whenever a relative norm vanishes.
    pub fn inv(&self) -> Result<TowerElement> {
        let coeffs = self.tower.inv_level(self.tower.height(), &self.coeffs)?;
        Ok(TowerElement {
            tower: self.tower.clone(),
            coeffs,
        })
    }

    pub fn checked_div(&self, other: &TowerElement) -> Result<TowerElement> {
        self.checked_mul(&other.inv()?)
    }

    /// Applies the automorphism `t -> alpha - t` for the named generator.
    pub fn conjugate(&self, name: &str) -> Result<TowerElement> {
        let j = self.tower.index_of(name)?;
        let bit = 1usize << j;
        let depends = self.tower.inner.gens[j + 1..].iter().any(|g| {
            [&g.alpha, &g.beta].into_iter().any(|v| {
                v.iter()
                    .enumerate()
                    .any(|(m, c)| m & bit != 0 && !c.is_zero())
            })
        });
        if depends {
            return Err(Error::ConjugationUndefined(name.to_string()));
        }

        // a = p + q t  ->  p + q alpha - q t
        let dim = self.tower.dim();
        let mut p = vec![Rational::zero(); dim];
        let mut q = vec![Rational::zero(); dim];
        for (m, c) in self.coeffs.iter().enumerate() {
            if m & bit == 0 {
                p[m] = c.clone();
            } else {
                q[m & !bit] = c.clone();
            }
        }
        let q = TowerElement {
            tower: self.tower.clone(),
            coeffs: q,
        };
        let (alpha, _) = self.tower.relation(j);
        let mut out = &q * &alpha;
        add_assign(&mut out.coeffs, &p);
        for (m, c) in q.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.coeffs[m | bit] -= c;
            }
        }
        Ok(out)
    }

    /// Floating-point value under the generators' embedded numerics.
    pub fn embed(&self) -> Complex64 {
        dot(&self.coeffs, &self.tower.inner.monomials)
    }

    /// `(A, B)` with `self == A + B*unit` exactly, for rational `A, B`.
    pub fn as_rational_pair(&self, unit: &str) -> Option<(Rational, Rational)> {
        let u = 1usize << self.tower.index_of(unit).ok()?;
        let residual = self
            .coeffs
            .iter()
            .enumerate()
            .any(|(m, c)| m != 0 && m != u && !c.is_zero());
        (!residual).then(|| (self.coeffs[0].clone(), self.coeffs[u].clone()))
    }

    /// `(A, B)` with `self == A + B*unit` exactly, for rational integers `A, B`.
    pub fn as_integer_pair(&self, unit: &str) -> Option<(BigInt, BigInt)> {
        let (a, b) = self.as_rational_pair(unit)?;
        (a.is_integer() && b.is_integer()).then(|| (a.to_integer(), b.to_integer()))
    }

    /// Least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl fmt::Display for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            if m == 0 {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&self.tower.monomial_name(m))?;
            } else {
                write!(f, "{abs}*{}", self.tower.monomial_name(m))?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TowerElement({self})")
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        /// Panics if the operands live in different towers; use the
        /// `checked_*` form to get an error instead.
        impl $trait<&TowerElement> for &TowerElement {
            type Output = TowerElement;
            fn $method(self, rhs: &TowerElement) -> TowerElement {
                self.$checked(rhs)
                    .expect("operands belong to different towers")
            }
        }
        impl $trait<TowerElement> for TowerElement {
            type Output = TowerElement;
            fn $method(self, rhs: TowerElement) -> TowerElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&TowerElement> for TowerElement {
            type Output = TowerElement;
            fn $method(self, rhs: &TowerElement) -> TowerElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<TowerElement> for &TowerElement {
            type Output = TowerElement;
            fn $method(self, rhs: TowerElement) -> TowerElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &TowerElement {
    type Output = TowerElement;
    fn neg(self) -> TowerElement {
        TowerElement {
            tower: self.tower.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for TowerElement {
    type Output = TowerElement;
    fn neg(self) -> TowerElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn family(k: i64) -> Tower {
        let kf = k as f64;
        let x = 2.0 / (kf + (kf * kf + 4.0).sqrt());
        Tower::new(TowerSpec::new().with(GeneratorSpec::rational(
            "x",
            q(-k, 1),
            q(1, 1),
            c(x, 0.0),
        )))
        .unwrap()
    }

    fn gaussian() -> Tower {
        Tower::new(TowerSpec::new().with(GeneratorSpec::sqrt("i", -1))).unwrap()
    }

    fn eisenstein() -> Tower {
        Tower::new(TowerSpec::new().with(GeneratorSpec::rational(
            "omega",
            q(-1, 1),
            q(-1, 1),
            c(-0.5, 3f64.sqrt() / 2.0),
        )))
        .unwrap()
    }

    #[test]
    fn i_squared_is_minus_one() {
        let t = gaussian();
        let i = t.generator("i").unwrap();
        assert_eq!(&i * &i, t.from_int(-1));
    }

    #[test]
    fn omega_is_a_cube_root_of_unity() {
        let t = eisenstein();
        let w = t.generator("omega").unwrap();
        assert_eq!(w.pow(3), t.one());
        assert_ne!(w, t.one());
    }

    #[test]
    fn family_relation_k2() {
        let t = family(2);
        let x = t.gen(0);
        assert_eq!(&x * &x, t.one() - x.scale(&q(2, 1)));
    }

    #[test]
    fn later_generator_in_relation_is_malformed() {
        let spec = TowerSpec::new().with(GeneratorSpec::new(
            "y",
            vec![q(0, 1), q(1, 1)],
            vec![q(1, 1)],
            c(1.0, 0.0),
        ));
        assert!(matches!(Tower::new(spec), Err(Error::MalformedSpec(_))));
    }

    #[test]
    fn duplicate_generator_is_malformed() {
        let spec = TowerSpec::new()
            .with(GeneratorSpec::sqrt("s", 3))
            .with(GeneratorSpec::sqrt("s", 2));
        assert!(matches!(Tower::new(spec), Err(Error::MalformedSpec(_))));
    }

    #[test]
    fn wrong_numeric_is_rejected() {
        let spec =
            TowerSpec::new().with(GeneratorSpec::rational("i", q(0, 1), q(-1, 1), c(1.0, 0.0)));
        assert!(matches!(
            Tower::new(spec),
            Err(Error::NumericMismatch { .. })
        ));
    }

    #[test]
    fn silver_and_platinum_squares() {
        let r2 = Tower::new(TowerSpec::new().with(GeneratorSpec::sqrt("sqrt2", 2))).unwrap();
        let s = r2.gen(0) - r2.one();
        assert_eq!(&s * &s, r2.from_int(3) - r2.gen(0).scale(&q(2, 1)));

        let r3 = Tower::new(TowerSpec::new().with(GeneratorSpec::sqrt("sqrt3", 3))).unwrap();
        let p = r3.from_int(2) - r3.gen(0);
        assert_eq!(&p * &p, r3.from_int(7) - r3.gen(0).scale(&q(4, 1)));
    }

    #[test]
    fn inverse_of_two_minus_golden() {
        let t = family(1);
        let x = t.gen(0);
        let a = t.from_int(2) - &x;
        let inv = a.inv().unwrap();
        assert_eq!(inv, (t.from_int(3) + &x).scale(&q(1, 5)));
        assert_eq!(&a * &inv, t.one());
    }

    #[test]
    fn inverse_of_one() {
        let t = family(3);
        assert_eq!(t.one().inv().unwrap(), t.one());
    }

    #[test]
    fn inverse_of_one_plus_x_squared() {
        let t = family(2);
        let x = t.gen(0);
        let v = (t.one() + &x * &x).inv().unwrap();
        let want = 1.0 / (4.0 - 2.0 * 2f64.sqrt());
        assert!((v.embed().re - want).abs() < 1e-12);
        assert!((v.embed().re - 0.853553).abs() < 1e-6);
    }

    #[test]
    fn zero_is_not_invertible() {
        assert!(matches!(
            gaussian().zero().inv(),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn composite_relation_has_zero_divisors() {
        // y^2 = 1 splits; (y - 1)(y + 1) = 0
        let t = Tower::new(TowerSpec::new().with(GeneratorSpec::sqrt("y", 1))).unwrap();
        let y = t.gen(0);
        assert!(matches!(
            (&y - &t.one()).inv(),
            Err(Error::NotInvertible(_))
        ));
    }

    #[test]
    fn conjugation_examples() {
        let t = gaussian();
        let i = t.gen(0);
        assert_eq!(i.conjugate("i").unwrap(), -&i);

        let t = eisenstein();
        let w = t.gen(0);
        let z = t.from_int(5) + w.scale(&q(3, 1));
        // (m - n) - n w
        assert_eq!(
            z.conjugate("omega").unwrap(),
            t.from_int(2) - w.scale(&q(3, 1))
        );
        let e = z.embed().conj();
        let got = z.conjugate("omega").unwrap().embed();
        assert!((e - got).norm() < 1e-12);

        let t = family(4);
        let x = t.gen(0);
        assert_eq!(x.conjugate("x").unwrap(), t.from_int(-4) - &x);
    }

    #[test]
    fn conjugation_rejects_unknown_and_dependent_generators() {
        let t = gaussian();
        assert!(matches!(
            t.one().conjugate("omega"),
            Err(Error::UnknownGenerator(_))
        ));

        let s3 = 3f64.sqrt();
        let x = 2.0 - s3;
        let t = Tower::new(TowerSpec::new().with(GeneratorSpec::sqrt("sqrt3", 3)).with(
            GeneratorSpec::new("x", vec![q(0, 1), q(-2, 1)], vec![q(1, 1)], c(x, 0.0)),
        ))
        .unwrap();
        assert!(matches!(
            t.gen(1).conjugate("sqrt3"),
            Err(Error::ConjugationUndefined(_))
        ));
        assert!(t.gen(1).conjugate("x").is_ok());
    }

    #[test]
    fn embed_examples() {
        let r2 = Tower::new(TowerSpec::new().with(GeneratorSpec::sqrt("sqrt2", 2))).unwrap();
        let v = r2.from_int(3) - r2.gen(0).scale(&q(2, 1));
        assert!((v.embed().re - 0.1715728753).abs() < 1e-10);
        assert_eq!(r2.zero().embed(), c(0.0, 0.0));

        let r5 = Tower::new(TowerSpec::new().with(GeneratorSpec::sqrt("sqrt5", 5))).unwrap();
        let v = (r5.from_int(3) - r5.gen(0)).scale(&q(1, 2));
        assert!((v.embed().re - 0.3819660113).abs() < 1e-10);
    }

    #[test]
    fn integer_pair_extraction() {
        let t = gaussian();
        let i = t.gen(0);
        let a = t.one() - &i;
        assert_eq!(a.as_integer_pair("i"), Some((1.into(), (-1).into())));
        assert_eq!(t.from_rational(q(1, 2)).as_integer_pair("i"), None);
        assert_eq!(
            t.from_rational(q(1, 2)).as_rational_pair("i"),
            Some((q(1, 2), q(0, 1)))
        );
        assert_eq!(a.as_integer_pair("omega"), None);

        let t = Tower::new(
            TowerSpec::new()
                .with(GeneratorSpec::rational(
                    "x",
                    q(-2, 1),
                    q(1, 1),
                    c(2f64.sqrt() - 1.0, 0.0),
                ))
                .with(GeneratorSpec::sqrt("i", -1)),
        )
        .unwrap();
        let xi = &t.gen(0) * &t.gen(1);
        assert_eq!(xi.as_integer_pair("i"), None);
    }

    #[test]
    fn cross_tower_operations_are_rejected() {
        let a = gaussian().one();
        let b = eisenstein().one();
        assert_eq!(a.checked_add(&b), Err(Error::SpecMismatch));
        assert_eq!(a.checked_mul(&b), Err(Error::SpecMismatch));
        // structurally identical towers are the same tower
        let c = gaussian().one();
        assert_eq!(a.checked_add(&c).unwrap(), gaussian().from_int(2));
    }

    #[test]
    fn display_lists_monomials() {
        let t = family(2);
        let x = t.gen(0);
        assert_eq!((t.one() - x.scale(&q(1, 2))).to_string(), "1 - 1/2*x");
        assert_eq!(t.zero().to_string(), "0");
        assert_eq!(t.relations(), vec!["x^2 = 1 - 2*x".to_string()]);
    }

    #[test]
    fn family_embed_matches_root_formula() {
        for k in [1i64, 2, 3, 10, 100, 1000] {
            let t = family(k);
            let kf = k as f64;
            let want = ((kf * kf + 4.0).sqrt() - kf) / 2.0;
            assert!((t.gen(0).embed().re - want).abs() < 1e-12, "k={k}");
        }
    }
}
