//! Exact arithmetic: nonnegative counts, rationals, q-polynomials and the
//! factorial-family functions used by the product formulas.

mod qpoly;

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, MulAssign};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use qpoly::{q_binom, QPoly};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type ExactRational = BigRational;

/// A nonnegative arbitrary-precision integer holding an enumeration result.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn one() -> Self {
        Count(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_bigint(&self) -> BigInt {
        BigInt::from_biguint(Sign::Plus, self.0.clone())
    }

    pub fn to_rational(&self) -> ExactRational {
        ExactRational::from_integer(self.to_bigint())
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// Converts an integer, failing on negative input.
    pub fn from_bigint(value: &BigInt) -> Result<Self> {
        value
            .to_biguint()
            .map(Count)
            .ok_or_else(|| Error::Parameter(format!("count cannot be negative: {value}")))
    }

    /// Converts an exact rational that must be a nonnegative integer.
    pub fn from_rational(formula: &'static str, value: &ExactRational) -> Result<Self> {
        if !value.is_integer() || value.is_negative() {
            return Err(Error::NonIntegral {
                formula,
                value: value.to_string(),
            });
        }
        Count::from_bigint(value.numer())
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<u32> for Count {
    fn from(v: u32) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<usize> for Count {
    fn from(v: usize) -> Self {
        Count(BigUint::from(v))
    }
}

impl From<BigUint> for Count {
    fn from(v: BigUint) -> Self {
        Count(v)
    }
}

impl PartialEq<u64> for Count {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Count {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .parse::<BigUint>()
            .map(Count)
            .map_err(|e| Error::Parameter(format!("bad count {s:?}: {e}")))
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Count> for &'a Count {
    type Output = Count;
    fn add(self, rhs: &'a Count) -> Count {
        Count(&self.0 + &rhs.0)
    }
}

impl AddAssign<&Count> for Count {
    fn add_assign(&mut self, rhs: &Count) {
        self.0 += &rhs.0;
    }
}

impl Mul for Count {
    type Output = Count;
    fn mul(self, rhs: Count) -> Count {
        Count(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Count> for &'a Count {
    type Output = Count;
    fn mul(self, rhs: &'a Count) -> Count {
        Count(&self.0 * &rhs.0)
    }
}

impl MulAssign<&Count> for Count {
    fn mul_assign(&mut self, rhs: &Count) {
        self.0 *= &rhs.0;
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |a, b| a + b)
    }
}

impl Product for Count {
    fn product<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::one(), |a, b| a * b)
    }
}

/// `a/b` as an exact rational. Panics on a zero denominator.
pub fn ratio(a: i64, b: i64) -> ExactRational {
    ExactRational::new(BigInt::from(a), BigInt::from(b))
}

pub fn rational_from(value: BigInt) -> ExactRational {
    ExactRational::from_integer(value)
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Double factorial `n!! = n (n-2) (n-4) ...`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> BigUint {
    let mut acc = BigUint::one();
    let mut k = n;
    while k > 1 {
        acc *= k as u64;
        k -= 2;
    }
    acc
}

/// Binomial coefficient extended to all integer arguments.
///
/// `binom(a, b) = 0` for `b < 0`, `binom(a, 0) = 1` for every `a` (so
/// `binom(-1, 0) = 1`), and otherwise the falling factorial
/// `a (a-1) ... (a-b+1) / b!`, which also covers negative `a`.
pub fn binom_ext(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if b == 0 {
        return BigInt::one();
    }
    if a >= 0 && b > a {
        return BigInt::zero();
    }
    // Multiplicative form keeps every intermediate value integral.
    let mut acc = BigInt::one();
    for i in 0..b {
        acc *= BigInt::from(a - i);
        acc /= BigInt::from(i + 1);
    }
    acc
}

/// Rising factorial `a (a+1) ... (a+i-1)`; the empty product is 1.
pub fn pochhammer(a: i64, i: u64) -> BigInt {
    (0..i as i64).fold(BigInt::one(), |acc, k| acc * BigInt::from(a + k))
}

/// Hyperfactorial `H(n) = 0! 1! ... (n-1)!`.
pub fn hyperfactorial(n: u64) -> Count {
    let mut acc = BigUint::one();
    let mut fact = BigUint::one();
    for k in 1..n {
        fact *= k;
        acc *= &fact;
    }
    Count(acc)
}

/// Skipping hyperfactorial `H2(n) = (n-2)! (n-4)! ...` down to `1!` or `0!`.
pub fn hyperfactorial2(n: u64) -> Count {
    Count(
        (1..=n / 2)
            .map(|i| factorial(n - 2 * i))
            .fold(BigUint::one(), |acc, f| acc * f),
    )
}

/// Product of `(num(i) / den(i))` over an iterator of index values, as an exact rational.
pub(crate) fn rational_product<I>(terms: I) -> ExactRational
where
    I: IntoIterator<Item = (i64, i64)>,
{
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (n, d) in terms {
        num *= n;
        den *= d;
    }
    ExactRational::new(num, den)
}

/// `2^k` as a rational.
pub(crate) fn pow2(k: u64) -> ExactRational {
    rational_from(BigInt::one() << k)
}

#[cfg(test)]
fn gcd_normalized(value: &ExactRational) -> bool {
    num_integer::Integer::gcd(value.numer(), value.denom()).is_one() && value.denom().is_positive()
}
