//! Exact arithmetic in the quadratic fields `Q(√m)` for `m ∈ {1, 2, 3}`.
//!
//! Every frieze entry in this crate is a [`QuadNum`]: a pair of rational
//! coefficients `rat + rad·√m`. The radicand is carried with the value and
//! mixing radicands is an error rather than an implicit embedding into a
//! larger field, so equality stays a plain component comparison.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exact rational with unbounded numerator and denominator, always reduced.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("radicand mismatch: √{0} vs √{1}")]
    RadicandMismatch(u32, u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported radicand {0}; expected 1, 2 or 3")]
    UnsupportedRadicand(i64),
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
}

/// The square-free part `m` of a field `Q(√m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Radicand {
    One,
    Two,
    Three,
}

impl Radicand {
    pub fn value(self) -> u32 {
        match self {
            Radicand::One => 1,
            Radicand::Two => 2,
            Radicand::Three => 3,
        }
    }

    /// Radicand whose square root is `λ_p = 2cos(π/p)`, for the three `p`
    /// where that value is a square root of an integer.
    pub fn for_polygon(p: usize) -> Option<Radicand> {
        match p {
            3 => Some(Radicand::One),
            4 => Some(Radicand::Two),
            6 => Some(Radicand::Three),
            _ => None,
        }
    }
}

impl TryFrom<i64> for Radicand {
    type Error = ExactError;

    fn try_from(m: i64) -> Result<Self, Self::Error> {
        match m {
            1 => Ok(Radicand::One),
            2 => Ok(Radicand::Two),
            3 => Ok(Radicand::Three),
            other => Err(ExactError::UnsupportedRadicand(other)),
        }
    }
}

impl Serialize for Radicand {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_u32(self.value())
    }
}

impl<'de> Deserialize<'de> for Radicand {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        Radicand::try_from(i64::deserialize(deserializer)?).map_err(D::Error::custom)
    }
}

/// `rat + rad·√m` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadNum {
    m: Radicand,
    rat: Rational,
    rad: Rational,
}

impl QuadNum {
    /// Builds `rat + rad·√m`. For `m = 1` the radical part is folded into
    /// the rational part.
    pub fn new(m: Radicand, rat: Rational, rad: Rational) -> Self {
        let (rat, rad) = (rat.reduced(), rad.reduced());
        if m == Radicand::One {
            QuadNum {
                m,
                rat: rat + rad,
                rad: Rational::zero(),
            }
        } else {
            QuadNum { m, rat, rad }
        }
    }

    pub fn zero(m: Radicand) -> Self {
        QuadNum::new(m, Rational::zero(), Rational::zero())
    }

    pub fn one(m: Radicand) -> Self {
        QuadNum::new(m, Rational::one(), Rational::zero())
    }

    pub fn from_int(m: Radicand, value: impl Into<BigInt>) -> Self {
        QuadNum::new(m, Rational::from_integer(value.into()), Rational::zero())
    }

    /// `b·√m`.
    pub fn radical_multiple(m: Radicand, b: impl Into<BigInt>) -> Self {
        QuadNum::new(m, Rational::zero(), Rational::from_integer(b.into()))
    }

    /// `λ_p` for `p ∈ {3, 4, 6}`: 1, √2, √3.
    pub fn lambda(p: usize) -> Option<Self> {
        let m = Radicand::for_polygon(p)?;
        Some(QuadNum::radical_multiple(m, 1))
    }

    pub fn radicand(&self) -> Radicand {
        self.m
    }

    pub fn rational_part(&self) -> &Rational {
        &self.rat
    }

    pub fn radical_part(&self) -> &Rational {
        &self.rad
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.rad.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.rat.is_one() && self.rad.is_zero()
    }

    fn check_radicand(&self, other: &QuadNum) -> Result<(), ExactError> {
        if self.m == other.m {
            Ok(())
        } else {
            Err(ExactError::RadicandMismatch(self.m.value(), other.m.value()))
        }
    }

    pub fn try_add(&self, other: &QuadNum) -> Result<QuadNum, ExactError> {
        self.check_radicand(other)?;
        Ok(QuadNum::new(self.m, &self.rat + &other.rat, &self.rad + &other.rad))
    }

    pub fn try_sub(&self, other: &QuadNum) -> Result<QuadNum, ExactError> {
        self.check_radicand(other)?;
        Ok(QuadNum::new(self.m, &self.rat - &other.rat, &self.rad - &other.rad))
    }

    pub fn try_mul(&self, other: &QuadNum) -> Result<QuadNum, ExactError> {
        self.check_radicand(other)?;
        let m = Rational::from_integer(BigInt::from(self.m.value()));
        let rat = &self.rat * &other.rat + &self.rad * &other.rad * m;
        let rad = &self.rat * &other.rad + &self.rad * &other.rat;
        Ok(QuadNum::new(self.m, rat, rad))
    }

    /// Exact quotient via the conjugate: `x·(c − d√m) / (c² − d²m)`.
    pub fn try_div(&self, other: &QuadNum) -> Result<QuadNum, ExactError> {
        self.check_radicand(other)?;
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let norm = other.norm();
        // c² − d²m vanishes only at zero for square-free m ∈ {2, 3}.
        debug_assert!(!norm.is_zero());
        let numerator = self.try_mul(&other.conjugate())?;
        Ok(QuadNum::new(self.m, numerator.rat / &norm, numerator.rad / &norm))
    }

    /// `a − b√m`.
    pub fn conjugate(&self) -> QuadNum {
        QuadNum::new(self.m, self.rat.clone(), -self.rad.clone())
    }

    /// Field norm `a² − b²m`.
    pub fn norm(&self) -> Rational {
        let m = Rational::from_integer(BigInt::from(self.m.value()));
        &self.rat * &self.rat - &self.rad * &self.rad * m
    }

    /// Exact sign of `a + b√m` using rational comparisons only.
    pub fn sign(&self) -> Ordering {
        let a = self.rat.cmp(&Rational::zero());
        let b = self.rad.cmp(&Rational::zero());
        match (a, b) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (Ordering::Greater, Ordering::Greater) => Ordering::Greater,
            (Ordering::Less, Ordering::Less) => Ordering::Less,
            // Mixed signs: the larger of a² and b²m wins.
            (sa, _) => {
                let m = Rational::from_integer(BigInt::from(self.m.value()));
                let a2 = &self.rat * &self.rat;
                let b2m = &self.rad * &self.rad * m;
                match a2.cmp(&b2m) {
                    Ordering::Greater => sa,
                    Ordering::Less => sa.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    /// The integer value, if `self` is a rational integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.rad.is_zero() && self.rat.is_integer() {
            Some(self.rat.to_integer())
        } else {
            None
        }
    }

    /// The integer `b` with `self = b·√m`, if one exists.
    pub fn as_radical_multiple(&self) -> Option<BigInt> {
        if self.m == Radicand::One {
            return self.as_integer();
        }
        if self.rat.is_zero() && self.rad.is_integer() {
            Some(self.rad.to_integer())
        } else {
            None
        }
    }

    /// Approximate value; for diagnostics and cross-checks only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let a = self.rat.to_f64().unwrap_or(f64::NAN);
        let b = self.rad.to_f64().unwrap_or(f64::NAN);
        a + b * f64::from(self.m.value()).sqrt()
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&QuadNum> for &QuadNum {
            type Output = QuadNum;

            /// Panics on radicand mismatch; use the `try_` form for fallible input.
            fn $method(self, rhs: &QuadNum) -> QuadNum {
                match self.$checked(rhs) {
                    Ok(v) => v,
                    Err(e) => panic!("{e}"),
                }
            }
        }

        impl $trait<QuadNum> for QuadNum {
            type Output = QuadNum;

            fn $method(self, rhs: QuadNum) -> QuadNum {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for QuadNum {
    type Output = QuadNum;

    fn neg(self) -> QuadNum {
        QuadNum::new(self.m, -self.rat, -self.rad)
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;

    fn neg(self) -> QuadNum {
        -self.clone()
    }
}

fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"` or `"p"`; the result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let bad = || ExactError::MalformedRational(s.to_string());
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

impl fmt::Display for QuadNum {
    /// Renders as e.g. `3√2`, `1`, `0`, `1+√2`, `1-√2`, `-√3`, `1/2√2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut out = String::new();
        if !self.rat.is_zero() {
            out.push_str(&format_rational(&self.rat));
        }
        if !self.rad.is_zero() {
            let magnitude = self.rad.abs();
            if self.rad.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if !magnitude.is_one() {
                out.push_str(&format_rational(&magnitude));
            }
            out.push('√');
            out.push_str(&self.m.value().to_string());
        }
        f.write_str(&out)
    }
}

#[derive(Serialize, Deserialize)]
struct QuadNumRepr {
    m: i64,
    rat: String,
    rad: String,
}

impl Serialize for QuadNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        QuadNumRepr {
            m: i64::from(self.m.value()),
            rat: format_rational(&self.rat),
            rad: format_rational(&self.rad),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuadNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = QuadNumRepr::deserialize(deserializer)?;
        let m = Radicand::try_from(repr.m).map_err(D::Error::custom)?;
        let rat = parse_rational(&repr.rat).map_err(D::Error::custom)?;
        let rad = parse_rational(&repr.rad).map_err(D::Error::custom)?;
        Ok(QuadNum::new(m, rat, rad))
    }
}
