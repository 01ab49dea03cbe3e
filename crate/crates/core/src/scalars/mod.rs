//! Exact coefficients: the field of rational functions Q(q).
//!
//! A [`QScalar`] is a reduced fraction `num / den` where `num` is an integer
//! Laurent polynomial and `den` is an ordinary integer polynomial with a
//! nonzero constant term and a positive leading coefficient. Every value has
//! exactly one such representation, so structural equality is field equality.
//! Almost all values met in practice have `den = 1`; arithmetic on those skips
//! the gcd machinery.

mod laurent;
mod parse;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use laurent::Laurent;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QScalar {
    num: Laurent,
    den: Laurent,
}

impl QScalar {
    pub fn zero() -> Self {
        QScalar {
            num: Laurent::zero(),
            den: Laurent::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(Laurent::constant(BigInt::from(c)))
    }

    /// The pure power `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::from_laurent(Laurent::monomial(BigInt::one(), e))
    }

    /// `c q^e`.
    pub fn monomial(c: i64, e: i64) -> Self {
        Self::from_laurent(Laurent::monomial(BigInt::from(c), e))
    }

    pub fn from_laurent(num: Laurent) -> Self {
        QScalar {
            num,
            den: Laurent::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::from_fraction(
            Laurent::constant(r.numer().clone()),
            Laurent::constant(r.denom().clone()),
        )
        .expect("rational denominators are nonzero")
    }

    /// Reduces `num / den` to canonical form.
    pub fn from_fraction(num: Laurent, den: Laurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let shift = num.low() - den.low();
        let mut n = num.stripped();
        let mut d = den.stripped();
        let g = n.gcd(&d);
        if !g.is_one() {
            n = n.div_exact(&g).expect("gcd divides numerator");
            d = d.div_exact(&g).expect("gcd divides denominator");
        }
        if d.lead().is_some_and(|c| c.is_negative()) {
            n = n.neg();
            d = d.neg();
        }
        Ok(QScalar {
            num: n.shift(shift),
            den: d,
        })
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    pub fn denominator(&self) -> &Laurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    /// True when the value lies in Z[q, q^-1].
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// True for `±q^e`; these are the cheapest pivots in elimination.
    pub fn is_unit_monomial(&self) -> bool {
        self.den.is_one()
            && self
                .num
                .as_monomial()
                .is_some_and(|(c, _)| c.abs().is_one())
    }

    /// Number of stored coefficients, a rough size measure.
    pub fn size(&self) -> usize {
        self.num.coeffs().len() + self.den.coeffs().len()
    }

    /// Returns `(s, e)` with `s = ±1` iff the value is exactly `s q^e`.
    pub fn as_pure_q_power(&self) -> Option<(i8, i64)> {
        if !self.den.is_one() {
            return None;
        }
        let (c, e) = self.num.as_monomial()?;
        if c.is_one() {
            Some((1, e))
        } else if (-c).is_one() {
            Some((-1, e))
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        QScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den.is_one() && other.den.is_one() {
            return Self::from_laurent(self.num.add(&other.num));
        }
        if self.den == other.den {
            return Self::from_fraction(self.num.add(&other.num), self.den.clone())
                .expect("nonzero denominator");
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::from_fraction(num, self.den.mul(&other.den)).expect("nonzero denominator")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_laurent(self.num.mul(&other.num));
        }
        Self::from_fraction(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("nonzero denominator")
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some((c, e)) = self.num.as_monomial() {
            if self.den.is_one() && c.abs().is_one() {
                return Ok(Self::from_laurent(Laurent::monomial(c.clone(), -e)));
            }
        }
        Self::from_fraction(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents need a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if let Some((s, k)) = self.as_pure_q_power() {
            let sign = if s < 0 && e.rem_euclid(2) == 1 { -1 } else { 1 };
            let exp = k
                .checked_mul(e)
                .ok_or_else(|| Error::Overflow("q exponent".into()))?;
            return Ok(Self::monomial(sign, exp));
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut result = Self::one();
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        Ok(result)
    }

    /// Exact value at `q = t`.
    pub fn specialize(&self, t: &BigRational) -> Result<BigRational> {
        if t.is_zero() {
            return Err(Error::Invalid(
                "specialization point must be nonzero".into(),
            ));
        }
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(Error::DenominatorVanishes { at: t.to_string() });
        }
        Ok(self.num.eval(t) / d)
    }

    /// The constant obtained by specializing and re-embedding.
    pub fn specialize_scalar(&self, t: &BigRational) -> Result<Self> {
        Ok(Self::from_rational(&self.specialize(t)?))
    }
}

/// Convenience wrapper for [`QScalar::as_pure_q_power`].
pub fn as_pure_q_power(x: &QScalar) -> Option<(i8, i64)> {
    x.as_pure_q_power()
}

/// Convenience wrapper for [`QScalar::specialize`].
pub fn specialize(x: &QScalar, t: &BigRational) -> Result<BigRational> {
    x.specialize(t)
}

/// Parses a rational number such as `2`, `-3/4`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let err = || Error::Parse {
        pos: 0,
        msg: format!("not a rational number: {s:?}"),
    };
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| err())?;
    let d: BigInt = d.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

/// Where to evaluate `q`: kept as an indeterminate, or a nonzero rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialization {
    Symbolic,
    At(BigRational),
}

impl Specialization {
    pub fn apply(&self, x: &QScalar) -> Result<QScalar> {
        match self {
            Specialization::Symbolic => Ok(x.clone()),
            Specialization::At(t) => x.specialize_scalar(t),
        }
    }
}

impl FromStr for Specialization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "symbolic" {
            return Ok(Specialization::Symbolic);
        }
        let t = parse_rational(s)?;
        if t.is_zero() {
            return Err(Error::Invalid("q must be nonzero".into()));
        }
        Ok(Specialization::At(t))
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialization::Symbolic => f.write_str("symbolic"),
            Specialization::At(t) => write!(f, "{t}"),
        }
    }
}

impl Default for QScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for QScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.term_count() > 1 {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl FromStr for QScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse::parse_scalar(s)
    }
}

impl Serialize for QScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for QScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl std::ops::Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        QScalar::add(self, rhs)
    }
}

impl std::ops::Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        QScalar::sub(self, rhs)
    }
}

impl std::ops::Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        QScalar::mul(self, rhs)
    }
}

impl std::ops::Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar::neg(self)
    }
}
