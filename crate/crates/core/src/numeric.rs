//! Exact scalars: rationals and half-integers.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Exact rational number.
pub type Q = Ratio<i64>;

/// Shorthand for the rational `n/d`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Shorthand for the integer `n` as a rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

/// `x` as an integer, if it is one.
pub fn as_integer(x: Q) -> Option<i64> {
    x.is_integer().then(|| x.to_integer())
}

/// True when `x` is an integer that is at most zero, i.e. a pole of Gamma.
pub fn is_gamma_pole(x: Q) -> bool {
    x.is_integer() && x.to_integer() <= 0
}

/// Largest integer not above `x`.
pub fn floor(x: Q) -> i64 {
    x.floor().to_integer()
}

/// Smallest integer not below `x`.
pub fn ceil(x: Q) -> i64 {
    x.ceil().to_integer()
}

/// Formats a rational as `n` or `n/d`, with an ASCII minus sign.
pub fn fmt_q(x: Q) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `n` or `n/d`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || domain(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(q(n, d))
        }
        None => Ok(qi(s.parse().map_err(|_| bad())?)),
    }
}

/// An element of `(1/2)Z`, stored as its double.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };

    /// The half-integer `twice / 2`.
    pub const fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    /// Converts a rational, failing unless its denominator divides 2.
    pub fn from_q(x: Q) -> Result<Self> {
        let t = x * qi(2);
        if t.is_integer() {
            Ok(HalfInt {
                twice: t.to_integer(),
            })
        } else {
            Err(domain(format!("{} is not a half-integer", fmt_q(x))))
        }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub fn to_q(self) -> Q {
        q(self.twice, 2)
    }

    /// True for elements of `1/2 + Z`.
    pub fn is_strict_half(self) -> bool {
        self.twice.is_odd()
    }

    pub fn is_integer(self) -> bool {
        self.twice.is_even()
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice.is_even() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + o.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - o.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl From<HalfInt> for Q {
    fn from(h: HalfInt) -> Q {
        h.to_q()
    }
}

/// Sign-aware absolute value for rationals (kept local to avoid trait imports at call sites).
pub fn qabs(x: Q) -> Q {
    if x < Q::zero() {
        -x
    } else {
        x
    }
}

/// `1` as a rational.
pub fn qone() -> Q {
    Q::one()
}
