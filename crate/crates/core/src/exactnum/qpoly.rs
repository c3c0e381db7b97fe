use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Univariate polynomial in `q` with arbitrary-precision integer coefficients.
///
/// `coeffs[i]` is the coefficient of `q^i`; the highest stored coefficient is
/// nonzero, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// `c q^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        QPoly::from_coeffs(coeffs)
    }

    /// `1 - q^k`.
    pub fn one_minus_q_pow(k: usize) -> Self {
        QPoly::one() - QPoly::monomial(BigInt::one(), k)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigInt {
        self.coeffs.get(e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`, i.e. the coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    /// Adds `c` to the coefficient of `q^e`.
    pub fn add_term(&mut self, e: usize, c: &BigInt) {
        if self.coeffs.len() <= e {
            self.coeffs.resize(e + 1, BigInt::zero());
        }
        self.coeffs[e] += c;
        let trimmed = std::mem::take(&mut self.coeffs);
        *self = QPoly::from_coeffs(trimmed);
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder in `Z[q]` (or the divisor is zero).
    pub fn div_exact(&self, divisor: &QPoly) -> Option<QPoly> {
        let dd = divisor.degree()?;
        let Some(nd) = self.degree() else {
            return Some(QPoly::zero());
        };
        if nd < dd {
            return None;
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let top = &rem[shift + dd];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &c * d;
            }
            quot[shift] = c;
        }
        rem.iter()
            .all(Zero::is_zero)
            .then(|| QPoly::from_coeffs(quot))
    }

    pub fn pow(&self, mut e: u32) -> QPoly {
        let mut base = self.clone();
        let mut acc = QPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}q^{e}")?,
            }
        }
        Ok(())
    }
}

/// Gaussian binomial coefficient `prod_{1<=i<=b} (1 - q^{a+1-i}) / (1 - q^i)`.
///
/// Zero when `b > a`.
pub fn q_binom(a: u64, b: u64) -> QPoly {
    if b > a {
        return QPoly::zero();
    }
    let b = b.min(a - b);
    let mut acc = QPoly::one();
    for i in 1..=b {
        acc = &acc * &QPoly::one_minus_q_pow((a + 1 - i) as usize);
        acc = acc
            .div_exact(&QPoly::one_minus_q_pow(i as usize))
            .expect("partial q-binomial products are polynomials");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::binom_ext;

    #[test]
    fn small_q_binomials() {
        assert_eq!(q_binom(2, 1), QPoly::from_i64s(&[1, 1]));
        assert_eq!(q_binom(3, 1), QPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(q_binom(4, 2), QPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert_eq!(q_binom(4, 2).eval_at_one(), BigInt::from(6));
        assert!(q_binom(2, 3).is_zero());
        assert_eq!(q_binom(0, 0), QPoly::one());
    }

    #[test]
    fn q_binom_specializes_to_binomial() {
        for a in 0..=20u64 {
            for b in 0..=a {
                assert_eq!(
                    q_binom(a, b).eval_at_one(),
                    binom_ext(a as i64, b as i64),
                    "({a}, {b})"
                );
            }
        }
    }

    #[test]
    fn division_detects_remainder() {
        let p = QPoly::from_i64s(&[1, 2, 1]);
        let d = QPoly::from_i64s(&[1, 1]);
        assert_eq!(p.div_exact(&d), Some(d.clone()));
        assert_eq!(QPoly::from_i64s(&[1, 0, 1]).div_exact(&d), None);
        assert_eq!(p.div_exact(&QPoly::zero()), None);
    }

    #[test]
    fn display_format() {
        assert_eq!(QPoly::from_i64s(&[1, 1, 2]).to_string(), "1 + q + 2q^2");
        assert_eq!(QPoly::from_i64s(&[0, -1, 0, 3]).to_string(), "-q + 3q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = QPoly::from_i64s(&[1, 0, 0]);
        assert_eq!(p.degree(), Some(0));
        let z = &p - &p;
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
    }
}
