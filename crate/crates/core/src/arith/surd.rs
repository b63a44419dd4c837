//! Real quadratic surds `a + b*sqrt(d)` and their canonical radical strings.
//!
//! Canonical grammar (what `Display` writes and `FromStr` reads back):
//!
//! ```text
//! value := "0" | body | body "/" den
//! body  := int | sroot | int sign sroot | "(" int sign sroot ")"
//! sroot := ["-"] [uint "*"] "sqrt(" uint ")"
//! ```
//!
//! Parentheses appear exactly when a two-term numerator shares a
//! denominator, e.g. `(2-sqrt(2))/2`, `2-sqrt(3)`, `-sqrt(5)/2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::Rational;

/// Trial division bound used when extracting square factors.
const TRIAL_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Surd {
    rational: Rational,
    coeff: Rational,
    /// Square-free and at least 2 whenever `coeff != 0`; 1 otherwise.
    radicand: BigInt,
}

/// Splits `n > 0` as `f^2 * d` with `d` square-free. Gives up (None) when a
/// cofactor above the trial bound cannot be classified.
fn square_part(n: &BigInt) -> Option<(BigInt, BigInt)> {
    let mut rest = n.clone();
    let mut f = BigInt::one();
    let mut d = BigInt::one();
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let pb = BigInt::from(p);
        if &pb * &pb > rest {
            break;
        }
        let mut e = 0u32;
        while rest.is_multiple_of(&pb) {
            rest /= &pb;
            e += 1;
        }
        f *= pb.pow(e / 2);
        if e % 2 == 1 {
            d *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest.is_one() {
        return Some((f, d));
    }
    let bound = BigInt::from(TRIAL_LIMIT);
    if rest <= &bound * &bound {
        // no factor below its square root: prime
        return Some((f, d * rest));
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        return Some((f * r, d));
    }
    None
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

impl Surd {
    pub fn from_rational(q: Rational) -> Surd {
        Surd {
            rational: q,
            coeff: Rational::zero(),
            radicand: BigInt::one(),
        }
    }

    /// `a + b*sqrt(n)` for any `n >= 0`, normalized. None if `n < 0` or the
    /// square part of `n` could not be extracted.
    pub fn new(a: Rational, b: Rational, n: BigInt) -> Option<Surd> {
        if n.is_negative() {
            return None;
        }
        if b.is_zero() || n.is_zero() {
            return Some(Surd::from_rational(a));
        }
        let (f, d) = square_part(&n)?;
        let b = b * Rational::from_integer(f);
        if d.is_one() {
            return Some(Surd::from_rational(a + b));
        }
        Some(Surd {
            rational: a,
            coeff: b,
            radicand: d,
        })
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rational
    }

    pub fn surd_coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &BigInt {
        &self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.rational.to_f64().unwrap_or(f64::NAN);
        if self.is_rational() {
            return a;
        }
        let r = self.radicand.to_f64().unwrap_or(f64::NAN).sqrt();
        a + self.coeff.to_f64().unwrap_or(f64::NAN) * r
    }

    fn common_radicand(&self, other: &Surd) -> Option<BigInt> {
        match (self.is_rational(), other.is_rational()) {
            (true, true) => Some(BigInt::one()),
            (true, false) => Some(other.radicand.clone()),
            (false, true) => Some(self.radicand.clone()),
            (false, false) => (self.radicand == other.radicand).then(|| self.radicand.clone()),
        }
    }

    fn build(rational: Rational, coeff: Rational, radicand: BigInt) -> Surd {
        if coeff.is_zero() {
            Surd::from_rational(rational)
        } else {
            Surd {
                rational,
                coeff,
                radicand,
            }
        }
    }

    pub fn checked_add(&self, other: &Surd) -> Option<Surd> {
        let d = self.common_radicand(other)?;
        Some(Surd::build(
            &self.rational + &other.rational,
            &self.coeff + &other.coeff,
            d,
        ))
    }

    pub fn checked_mul(&self, other: &Surd) -> Option<Surd> {
        let d = self.common_radicand(other)?;
        let dq = Rational::from_integer(d.clone());
        Some(Surd::build(
            &self.rational * &other.rational + &self.coeff * &other.coeff * dq,
            &self.rational * &other.coeff + &self.coeff * &other.rational,
            d,
        ))
    }

    pub fn scale(&self, q: &Rational) -> Surd {
        Surd::build(&self.rational * q, &self.coeff * q, self.radicand.clone())
    }

    /// Non-negative square root, when it lies in `Q` or `Q(sqrt(d))`.
    pub fn sqrt(&self) -> Option<Surd> {
        if self.to_f64() < 0.0 {
            return None;
        }
        if self.is_rational() {
            let q = &self.rational;
            return Surd::new(
                Rational::zero(),
                Rational::new(BigInt::one(), q.denom().clone()),
                q.numer() * q.denom(),
            );
        }
        // (u + v sqrt d)^2 = u^2 + d v^2 + 2uv sqrt d
        let d = Rational::from_integer(self.radicand.clone());
        let p = &self.rational;
        let q = &self.coeff;
        let disc = rational_sqrt(&(p * p - &d * q * q))?;
        let two = Rational::from_integer(2.into());
        for u2 in [(p + &disc) / &two, (p - &disc) / &two] {
            let Some(u) = rational_sqrt(&u2) else {
                continue;
            };
            if u.is_zero() {
                continue;
            }
            for u in [u.clone(), -u] {
                let v = q / (&two * &u);
                let s = Surd::build(u, v, self.radicand.clone());
                if s.to_f64() >= 0.0 {
                    return Some(s);
                }
            }
        }
        None
    }
}

fn write_sroot(f: &mut fmt::Formatter<'_>, coeff: &BigInt, radicand: &BigInt) -> fmt::Result {
    if coeff.abs().is_one() {
        write!(f, "sqrt({radicand})")
    } else {
        write!(f, "{}*sqrt({radicand})", coeff.abs())
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.rational.denom().lcm(self.coeff.denom());
        let p = (&self.rational * Rational::from_integer(den.clone())).to_integer();
        let q = (&self.coeff * Rational::from_integer(den.clone())).to_integer();
        let has_den = !den.is_one();
        match (p.is_zero(), q.is_zero()) {
            (true, true) => return f.write_str("0"),
            (false, true) => write!(f, "{p}")?,
            (true, false) => {
                if q.is_negative() {
                    f.write_str("-")?;
                }
                write_sroot(f, &q, &self.radicand)?;
            }
            (false, false) => {
                if has_den {
                    f.write_str("(")?;
                }
                write!(f, "{p}{}", if q.is_negative() { "-" } else { "+" })?;
                write_sroot(f, &q, &self.radicand)?;
                if has_den {
                    f.write_str(")")?;
                }
            }
        }
        if has_den {
            write!(f, "/{den}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseSurdError(String);

impl fmt::Display for ParseSurdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid radical `{}`", self.0)
    }
}

impl std::error::Error for ParseSurdError {}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn eat(&mut self, tok: &str) -> bool {
        if self.s[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn uint(&mut self) -> Option<BigInt> {
        let digits = self.s[self.pos..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return None;
        }
        let v = self.s[self.pos..self.pos + digits].parse().ok();
        self.pos += digits;
        v
    }

    fn done(&self) -> bool {
        self.pos == self.s.len()
    }

    /// `[uint "*"] "sqrt(" uint ")"` or a plain integer, after an optional
    /// sign has been consumed. Returns (integer part, sqrt coeff, radicand).
    fn term(&mut self) -> Option<(BigInt, BigInt, BigInt)> {
        if self.eat("sqrt(") {
            let r = self.uint()?;
            return self.eat(")").then(|| (BigInt::zero(), BigInt::one(), r));
        }
        let n = self.uint()?;
        if self.eat("*sqrt(") {
            let r = self.uint()?;
            return self.eat(")").then(|| (BigInt::zero(), n, r));
        }
        Some((n, BigInt::zero(), BigInt::one()))
    }
}

impl FromStr for Surd {
    type Err = ParseSurdError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseSurdError(s.to_string());
        let mut c = Cursor { s, pos: 0 };
        let paren = c.eat("(");
        let first_neg = c.eat("-");
        let mut parts = vec![(first_neg, c.term().ok_or_else(err)?)];
        if c.eat("+") {
            parts.push((false, c.term().ok_or_else(err)?));
        } else if c.eat("-") {
            parts.push((true, c.term().ok_or_else(err)?));
        }
        if parts.len() == 2 && (!parts[0].1 .1.is_zero() || parts[1].1 .1.is_zero()) {
            return Err(err());
        }
        let mut a = BigInt::zero();
        let mut b = BigInt::zero();
        let mut radicand = BigInt::one();
        for (neg, (ta, tb, tr)) in parts {
            let sign = if neg { -BigInt::one() } else { BigInt::one() };
            if tb.is_zero() {
                a = ta * sign;
            } else {
                b = tb * sign;
                radicand = tr;
            }
        }
        if paren && !c.eat(")") {
            return Err(err());
        }
        let den = if c.eat("/") {
            c.uint().filter(|d| !d.is_zero()).ok_or_else(err)?
        } else {
            BigInt::one()
        };
        if !c.done() {
            return Err(err());
        }
        Surd::new(
            Rational::new(a, den.clone()),
            Rational::new(b, den),
            radicand,
        )
        .ok_or_else(err)
    }
}
