//! Exact rational scalars.
//!
//! [`Scalar`] wraps an arbitrary-precision rational kept in lowest terms with
//! a positive denominator. All decisive predicates in this crate are computed
//! with it; floating point only ever appears in samplers and diagnostics.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An exact rational number.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseScalarError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal {0:?}: expected \"p\" or \"p/q\" with integer p, q")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar(BigRational::from_integer(n))
    }

    /// `num / den`, reduced. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big_ratio(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Scalar(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Scalar(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Scalar(&self.0 * &self.0)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Scalar(self.0.recip()))
        }
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Nearest `f64`; diagnostics and sampling only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// The rational `round(x * den) / den`. Returns `None` for non-finite input.
    pub fn from_f64_rounded(x: f64, den: u32) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        let scaled = (x * den as f64).round();
        let num = BigInt::from(scaled as i128);
        Some(Scalar::from_big_ratio(num, BigInt::from(den)))
    }

    /// The largest integer `m >= 0` with `m^2 <= self`; `None` for negative input.
    pub fn floor_sqrt(&self) -> Option<BigInt> {
        if self.is_negative() {
            return None;
        }
        Some(self.floor().sqrt())
    }

    /// A rational `r >= 0` with `r^2 >= self` and `r - sqrt(self) < 1/den`.
    pub fn sqrt_upper(&self, den: u64) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        // ceil(sqrt(self * den^2)) / den
        let d = BigInt::from(den);
        let scaled = Scalar(&self.0 * BigRational::from_integer(&d * &d));
        let mut m = scaled.floor().sqrt();
        while Scalar::from_bigint(&m * &m) < scaled {
            m += 1;
        }
        Some(Scalar::from_big_ratio(m, d))
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::from_int(n as i64)
    }
}

impl From<u64> for Scalar {
    fn from(n: u64) -> Self {
        Scalar::from_bigint(BigInt::from(n))
    }
}

impl From<usize> for Scalar {
    fn from(n: usize) -> Self {
        Scalar::from_bigint(BigInt::from(n))
    }
}

impl From<BigInt> for Scalar {
    fn from(n: BigInt) -> Self {
        Scalar::from_bigint(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(s).ok()
}

impl FromStr for Scalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseScalarError::Empty);
        }
        let malformed = || ParseScalarError::Malformed(s.to_string());
        match s.split_once('/') {
            None => Ok(Scalar::from_bigint(parse_int(s).ok_or_else(malformed)?)),
            Some((p, q)) => {
                let p = parse_int(p.trim()).ok_or_else(malformed)?;
                let q = parse_int(q.trim()).ok_or_else(malformed)?;
                if q.is_zero() {
                    return Err(ParseScalarError::ZeroDenominator(s.to_string()));
                }
                Ok(Scalar::from_big_ratio(p, q))
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct Visitor;
        impl serde::de::Visitor<'_> for Visitor {
            type Value = Scalar;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a rational literal string \"p\" or \"p/q\"")
            }

            fn visit_str<E: serde::de::Error>(self, v: &str) -> Result<Scalar, E> {
                v.parse().map_err(E::custom)
            }
        }
        deserializer.deserialize_str(Visitor)
    }
}

macro_rules! forward_binop {
    ($Trait:ident, $method:ident) => {
        impl $Trait<&Scalar> for &Scalar {
            type Output = Scalar;
            #[inline]
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar($Trait::$method(&self.0, &rhs.0))
            }
        }
        impl $Trait<Scalar> for Scalar {
            type Output = Scalar;
            #[inline]
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar($Trait::$method(self.0, rhs.0))
            }
        }
        impl $Trait<&Scalar> for Scalar {
            type Output = Scalar;
            #[inline]
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar($Trait::$method(self.0, &rhs.0))
            }
        }
        impl $Trait<Scalar> for &Scalar {
            type Output = Scalar;
            #[inline]
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar($Trait::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

/// A nonnegative quantity that may be unbounded, e.g. the minimum of an
/// empty set of squared distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extended {
    Finite(Scalar),
    Infinite,
}

impl Extended {
    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            Extended::Finite(s) => Some(s),
            Extended::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Extended::Infinite)
    }

    /// Strict comparison `self > x`.
    pub fn exceeds(&self, x: &Scalar) -> bool {
        match self {
            Extended::Finite(s) => s > x,
            Extended::Infinite => true,
        }
    }
}

impl PartialOrd for Extended {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Extended {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Extended::Finite(a), Extended::Finite(b)) => a.cmp(b),
            (Extended::Finite(_), Extended::Infinite) => Ordering::Less,
            (Extended::Infinite, Extended::Finite(_)) => Ordering::Greater,
            (Extended::Infinite, Extended::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(s) => write!(f, "{s}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Extended {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Extended {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        if s == "inf" {
            Ok(Extended::Infinite)
        } else {
            s.parse()
                .map(Extended::Finite)
                .map_err(serde::de::Error::custom)
        }
    }
}

/// Smallest integer `n` with `n * n > x`.
pub fn least_int_with_square_above(x: &Scalar) -> BigInt {
    if x.is_negative() {
        return BigInt::zero();
    }
    // n^2 > x  <=>  n^2 > floor(x) for integer n.
    let f = x.floor();
    let r = f.sqrt();
    debug_assert!(&r * &r <= f);
    r + 1
}

/// `ceil(x)` as a usize, saturating at zero.
pub fn ceil_usize(x: &Scalar) -> usize {
    let c = x.ceil();
    if c.is_negative() {
        0
    } else {
        c.to_usize().unwrap_or(usize::MAX)
    }
}

/// Greatest common divisor of the absolute values, 0 if all are 0.
pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}
