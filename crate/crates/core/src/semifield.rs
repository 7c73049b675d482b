//! Semifields: commutative addition, a commutative multiplicative group, and
//! distributivity. There is no subtraction and no additive identity, so every
//! algorithm in this crate is written in addition-only form.
//!
//! Two instances ship with the crate:
//!
//! | instance           | `+`     | `·`      | `1_K` | `x⁻¹`     |
//! |--------------------|---------|----------|-------|-----------|
//! | [`PositiveRational`] | `+`   | `×`      | `1`   | `1/x`     |
//! | [`TropicalInt`]      | `max` | `+`      | `0`   | `-x`      |

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

use crate::error::{FriezeError, Result};

/// An element of a semifield.
///
/// Equality is exact and semantic: implementations keep a canonical
/// representation so that `==` is the semifield equality.
pub trait Semifield: Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    /// Name used for the `"semifield"` field of JSON documents.
    const NAME: &'static str;

    fn one() -> Self;

    fn add(&self, other: &Self) -> Self;

    fn mul(&self, other: &Self) -> Self;

    fn inv(&self) -> Self;

    /// `self · other⁻¹`
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Semifield sum of a non-empty sequence. Returns `None` for an empty one,
    /// since a semifield has no additive identity.
    fn sum<'a, I>(items: I) -> Option<Self>
    where
        I: IntoIterator<Item = &'a Self>,
    {
        let mut it = items.into_iter();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, x| acc.add(x)))
    }

    /// Semifield product; the empty product is `1_K`.
    fn product<'a, I>(items: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
    {
        items.into_iter().fold(Self::one(), |acc, x| acc.mul(x))
    }

    fn from_json(value: &Value) -> Result<Self>;

    fn to_json(&self) -> Value;
}

/// A strictly positive rational number in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveRational(BigRational);

impl PositiveRational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let numer = numer.into();
        let denom = denom.into();
        if denom.is_zero() {
            return Err(FriezeError::InvalidValue(format!("{numer}/{denom}: zero denominator")));
        }
        Self::from_ratio(BigRational::new(numer, denom))
    }

    pub fn from_ratio(value: BigRational) -> Result<Self> {
        if value.is_positive() {
            Ok(PositiveRational(value))
        } else {
            Err(FriezeError::InvalidValue(format!("{value} is not strictly positive")))
        }
    }

    /// Positive integer `n`, panics on zero.
    pub fn integer(n: u64) -> Self {
        assert!(n > 0, "positive rationals exclude zero");
        PositiveRational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    fn checked(value: BigRational) -> Self {
        debug_assert!(value.numer().sign() == Sign::Plus && value.denom().sign() == Sign::Plus);
        PositiveRational(value)
    }
}

impl Semifield for PositiveRational {
    const NAME: &'static str = "rational";

    fn one() -> Self {
        PositiveRational(BigRational::one())
    }

    fn add(&self, other: &Self) -> Self {
        Self::checked(&self.0 + &other.0)
    }

    fn mul(&self, other: &Self) -> Self {
        Self::checked(&self.0 * &other.0)
    }

    fn inv(&self) -> Self {
        Self::checked(self.0.recip())
    }

    fn div(&self, other: &Self) -> Self {
        Self::checked(&self.0 / &other.0)
    }

    fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::String(s) => s.parse(),
            Value::Number(num) => match num.as_u64() {
                Some(n) if n > 0 => Ok(PositiveRational::integer(n)),
                _ => Err(FriezeError::InvalidValue(format!(
                    "{num} is not a positive integer; write fractions as \"p/q\""
                ))),
            },
            other => Err(FriezeError::InvalidValue(format!("expected a rational, found {other}"))),
        }
    }

    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl FromStr for PositiveRational {
    type Err = FriezeError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || FriezeError::InvalidValue(format!("cannot parse {s:?} as a positive rational"));
        let s = s.trim();
        let (numer, denom) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let numer: BigInt = numer.parse().map_err(|_| bad())?;
        let denom: BigInt = denom.parse().map_err(|_| bad())?;
        PositiveRational::new(numer, denom)
    }
}

impl fmt::Display for PositiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for PositiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The tropical semifield `(ℤ, max, +)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TropicalInt(BigInt);

impl TropicalInt {
    pub fn new(value: impl Into<BigInt>) -> Self {
        TropicalInt(value.into())
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }
}

impl Semifield for TropicalInt {
    const NAME: &'static str = "tropical";

    fn one() -> Self {
        TropicalInt(BigInt::zero())
    }

    fn add(&self, other: &Self) -> Self {
        TropicalInt(std::cmp::max(&self.0, &other.0).clone())
    }

    fn mul(&self, other: &Self) -> Self {
        TropicalInt(&self.0 + &other.0)
    }

    fn inv(&self) -> Self {
        TropicalInt(-&self.0)
    }

    fn div(&self, other: &Self) -> Self {
        TropicalInt(&self.0 - &other.0)
    }

    fn from_json(value: &Value) -> Result<Self> {
        let bad = || FriezeError::InvalidValue(format!("expected an integer, found {value}"));
        match value {
            Value::Number(num) => {
                if let Some(v) = num.as_i64() {
                    Ok(TropicalInt::new(v))
                } else if let Some(v) = num.as_u64() {
                    Ok(TropicalInt::new(v))
                } else {
                    Err(bad())
                }
            }
            // big integers that do not fit a JSON number round-trip as strings
            Value::String(s) => s.trim().parse::<BigInt>().map(TropicalInt).map_err(|_| bad()),
            _ => Err(bad()),
        }
    }

    fn to_json(&self) -> Value {
        match self.0.to_i64() {
            Some(v) => Value::from(v),
            None => Value::String(self.0.to_string()),
        }
    }
}

impl fmt::Display for TropicalInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for TropicalInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "trop({})", self.0)
    }
}
