//! Scalar abstraction and the factorial-type primitives.
//!
//! Everything downstream is written against [`Scalar`]. The exact instance is
//! [`Rational`] (`BigRational`); `f64` also satisfies the bound and is handy
//! for quick numerical experiments, but none of the verification routines
//! are meaningful over it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision exact rational, always in lowest terms.
pub type Rational = BigRational;

pub trait Scalar:
    Clone + fmt::Debug + PartialOrd + Num + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("small integer is representable")
    }

    fn from_count(n: usize) -> Self {
        Self::from_int(n as i64)
    }
}

impl<T> Scalar for T where
    T: Clone
        + fmt::Debug
        + PartialOrd
        + Num
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// `p/q` as a reduced rational. Panics on `q == 0`.
pub fn rational(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parses the wire form `p` or `p/q`. Decimal and exponent notation are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::ParseRational(s.to_string());
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let is_int = |t: &str| {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !is_int(num) || den.is_some_and(|d| !is_int(d)) {
        return Err(err());
    }
    let n = BigInt::from_str(num).map_err(|_| err())?;
    let d = match den {
        Some(d) => BigInt::from_str(d).map_err(|_| err())?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(n, d))
}

/// Wire form: `p/q`, or `p` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Smallest integer `>= r`.
pub fn ceil(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

/// Rising factorial `a (a+1) ... (a+n-1)`, with the empty product equal to 1.
pub fn rising<T: Scalar>(a: &T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, i| acc * (a.clone() + T::from_count(i)))
}

/// Falling factorial `a (a-1) ... (a-n+1)`, with the empty product equal to 1.
pub fn falling<T: Scalar>(a: &T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, i| acc * (a.clone() - T::from_count(i)))
}

pub fn factorial<T: Scalar>(n: usize) -> T {
    rising(&T::one(), n)
}

/// Generalized binomial coefficient `falling(a, k) / k!`.
pub fn binom<T: Scalar>(a: &T, k: usize) -> T {
    falling(a, k) / factorial::<T>(k)
}

/// Integer binomial `C(n, k)`, zero when `k > n`.
pub fn choose<T: Scalar>(n: usize, k: usize) -> T {
    if k > n {
        T::zero()
    } else {
        binom(&T::from_count(n), k)
    }
}

/// `a^n` for a natural exponent.
pub fn pow<T: Scalar>(a: &T, n: usize) -> T {
    (0..n).fold(T::one(), |acc, _| acc * a.clone())
}

/// `(-1)^n`.
pub fn sign_pow<T: Scalar>(n: usize) -> T {
    if n.is_even() {
        T::one()
    } else {
        -T::one()
    }
}

/// Exact rational approximation of `exp(x)` with relative error below `2^-bits`.
///
/// Only used to weight exact partial sums before the final rounding to `f64`.
pub(crate) fn exp_rational(x: &Rational, bits: u32) -> Rational {
    if x.is_negative() {
        return exp_rational(&-x, bits).recip();
    }
    // Positive terms: once the term ratio x/(k+1) is below 1/2, the tail is
    // bounded by the last term.
    let tol = Rational::new(BigInt::one(), BigInt::one() << bits);
    let mut sum = Rational::one();
    let mut term = Rational::one();
    let half = rational(1, 2);
    for k in 1usize.. {
        term = term * x / int(k as i64);
        sum += &term;
        let ratio = x / int(k as i64 + 1);
        if ratio < half && &term <= &(&tol * &sum) {
            break;
        }
    }
    sum
}
