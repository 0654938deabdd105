//! Exact rational numbers.
//!
//! [`Rational`] wraps `Ratio<i128>`, which is always kept in lowest terms with a
//! positive denominator. It is `Copy`, so arithmetic is done by value. On the
//! wire a rational is the string `"p/q"`, or `"p"` when the denominator is 1.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::{Integer, Roots};
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(Ratio<i128>);

impl Rational {
    pub const ZERO: Rational = Rational(Ratio::new_raw(0, 1));
    pub const ONE: Rational = Rational(Ratio::new_raw(1, 1));

    /// `numer / denom`, reduced. Panics if `denom == 0`.
    pub fn new(numer: i128, denom: i128) -> Self {
        assert!(denom != 0, "rational with zero denominator");
        reduce(numer, denom)
    }

    pub fn from_int(n: i128) -> Self {
        Rational(Ratio::from_integer(n))
    }

    pub fn numer(&self) -> i128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        Rational(self.0.recip())
    }

    /// Greatest integer not exceeding `self`.
    pub fn floor(&self) -> i128 {
        Integer::div_floor(&self.numer(), &self.denom())
    }

    /// The representative of `self + Z` lying in `[0, 1)`.
    pub fn fract_part(&self) -> Self {
        *self - Rational::from_int(self.floor())
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Rational::ONE, |acc, _| acc * *self)
    }

    /// Exact square root, if `self` is the square of a rational.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let (p, q) = (self.numer(), self.denom());
        let (rp, rq) = (p.sqrt(), q.sqrt());
        (rp * rp == p && rq * rq == q).then(|| Rational::new(rp, rq))
    }

    /// `Some(n)` when `self` is the integer `n`.
    pub fn to_integer(&self) -> Option<i128> {
        self.is_integer().then(|| self.numer())
    }
}

impl From<i128> for Rational {
    fn from(n: i128) -> Self {
        Rational::from_int(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n as i128)
    }
}

impl From<i32> for Rational {
    fn from(n: i32) -> Self {
        Rational::from_int(n as i128)
    }
}

impl From<u32> for Rational {
    fn from(n: u32) -> Self {
        Rational::from_int(n as i128)
    }
}

/// Builds `n / d` in lowest terms. Values that fit in `i64` are reduced with
/// 64-bit arithmetic, which is much cheaper than 128-bit division.
#[inline]
fn reduce(n: i128, d: i128) -> Rational {
    match (i64::try_from(n), i64::try_from(d)) {
        (Ok(n64), Ok(d64)) if d64 != 0 => {
            let g = n64.unsigned_abs().gcd(&d64.unsigned_abs()) as i128;
            let (n, d) = (n / g, d / g);
            if d < 0 {
                Rational(Ratio::new_raw(-n, -d))
            } else {
                Rational(Ratio::new_raw(n, d))
            }
        }
        _ => Rational(Ratio::new(n, d)),
    }
}

/// `(a, b, c, d)` for `a/b` and `c/d`.
#[inline]
fn parts(x: Rational, y: Rational) -> (i128, i128, i128, i128) {
    (x.numer(), x.denom(), y.numer(), y.denom())
}

fn add_impl(x: Rational, y: Rational) -> Rational {
    let (a, b, c, d) = parts(x, y);
    let r = if b == d {
        a.checked_add(c).map(|n| reduce(n, b))
    } else {
        a.checked_mul(d)
            .zip(c.checked_mul(b))
            .and_then(|(ad, cb)| ad.checked_add(cb))
            .zip(b.checked_mul(d))
            .map(|(n, bd)| reduce(n, bd))
    };
    r.unwrap_or_else(|| Rational(x.0 + y.0))
}

fn mul_impl(x: Rational, y: Rational) -> Rational {
    let (a, b, c, d) = parts(x, y);
    a.checked_mul(c)
        .zip(b.checked_mul(d))
        .map(|(n, m)| reduce(n, m))
        .unwrap_or_else(|| Rational(x.0 * y.0))
}

fn div_impl(x: Rational, y: Rational) -> Rational {
    assert!(!y.is_zero(), "division of a rational by zero");
    let (a, b, c, d) = parts(x, y);
    a.checked_mul(d)
        .zip(b.checked_mul(c))
        .map(|(n, m)| reduce(n, m))
        .unwrap_or_else(|| Rational(x.0 / y.0))
}

fn sub_impl(x: Rational, y: Rational) -> Rational {
    add_impl(x, -y)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident, $imp:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            #[inline]
            fn $method(self, rhs: Rational) -> Rational {
                $imp(self, rhs)
            }
        }

        impl $trait<i128> for Rational {
            type Output = Rational;
            #[inline]
            fn $method(self, rhs: i128) -> Rational {
                $imp(self, Rational::from_int(rhs))
            }
        }

        impl $assign_trait for Rational {
            #[inline]
            fn $assign_method(&mut self, rhs: Rational) {
                *self = $imp(*self, rhs);
            }
        }
    };
}

forward_binop!(Add, add, AddAssign, add_assign, add_impl);
forward_binop!(Sub, sub, SubAssign, sub_assign, sub_impl);
forward_binop!(Mul, mul, MulAssign, mul_assign, mul_impl);

impl Div for Rational {
    type Output = Rational;
    #[inline]
    fn div(self, rhs: Rational) -> Rational {
        div_impl(self, rhs)
    }
}

impl Div<i128> for Rational {
    type Output = Rational;
    #[inline]
    fn div(self, rhs: i128) -> Rational {
        div_impl(self, Rational::from_int(rhs))
    }
}

impl Neg for Rational {
    type Output = Rational;
    #[inline]
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::ZERO
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::ONE
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ZERO, Add::add)
    }
}

impl Product for Rational {
    fn product<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::ONE, Mul::mul)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational {0:?}")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRationalError(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => s.parse::<i128>().map(Rational::from_int).map_err(|_| bad()),
            Some((p, q)) => {
                let p = p.trim().parse::<i128>().map_err(|_| bad())?;
                let q = q.trim().parse::<i128>().map_err(|_| bad())?;
                if q == 0 {
                    return Err(bad());
                }
                Ok(Rational::new(p, q))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand constructor used throughout the crate and its tests.
pub fn q(numer: i128, denom: i128) -> Rational {
    Rational::new(numer, denom)
}
