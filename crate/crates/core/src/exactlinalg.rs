//! Exact determinants and Pfaffians, and the MacMahon and Stembridge matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{binom_ext, q_binom, Count, QPoly};
use crate::shapes::{Partition, StrictPartition};

/// An integral domain in which exact division can be carried out.
pub trait ExactRing: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `self / rhs`, which the caller guarantees is exact.
    fn div_exact(&self, rhs: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        let (q, r) = self.div_rem(rhs);
        debug_assert!(Zero::is_zero(&r), "inexact division {self} / {rhs}");
        q
    }
}

impl ExactRing for QPoly {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
    fn div_exact(&self, rhs: &Self) -> Self {
        QPoly::div_exact(self, rhs).expect("Bareiss quotients are exact")
    }
}

/// Square matrix over an exact ring, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T: ExactRing> ExactMatrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let data = (0..n * n).map(|k| f(k / n, k % n)).collect();
        ExactMatrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Structure("matrix is not square".into()));
        }
        Ok(ExactMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.n + j]
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| *self.get(i, j) == self.get(j, i).neg())
        })
    }
}

impl ExactMatrix<BigInt> {
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        ExactMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det_exact<T: ExactRing>(m: &ExactMatrix<T>) -> T {
    let n = m.n;
    if n == 0 {
        return T::one();
    }
    let mut a: Vec<Vec<T>> = (0..n).map(|i| m.data[i * n..(i + 1) * n].to_vec()).collect();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = a[i][j].mul(&a[k][k]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = v.div_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Pfaffian by expansion along the first row.
pub fn pfaffian_exact<T: ExactRing>(m: &ExactMatrix<T>) -> Result<T> {
    if m.n % 2 == 1 {
        return Err(Error::Structure(format!("Pfaffian needs even dimension, got {}", m.n)));
    }
    if !m.is_skew_symmetric() {
        return Err(Error::Structure("Pfaffian needs a skew-symmetric matrix".into()));
    }
    let idx: Vec<usize> = (0..m.n).collect();
    Ok(pf_rec(m, &idx))
}

fn pf_rec<T: ExactRing>(m: &ExactMatrix<T>, idx: &[usize]) -> T {
    if idx.is_empty() {
        return T::one();
    }
    let first = idx[0];
    let mut acc = T::zero();
    for (pos, &j) in idx.iter().enumerate().skip(1) {
        let entry = m.get(first, j);
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&k| k != j).collect();
        let term = entry.mul(&pf_rec(m, &rest));
        acc = if pos % 2 == 1 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// The exponent `f(i, j)` of the q-analog of MacMahon's determinant (1-based).
pub fn macmahon_exponent(i: usize, j: usize) -> usize {
    let tri = |n: usize| n * n.saturating_sub(1) / 2;
    if j > i {
        tri(j - i)
    } else {
        tri(i - j + 1)
    }
}

/// `binom(λ_i + m, i - j + m)` for `i, j = 1..n`.
pub fn macmahon_matrix(lambda: &Partition, m: u64) -> ExactMatrix<BigInt> {
    let parts = lambda.parts();
    let m = m as i64;
    ExactMatrix::from_fn(parts.len(), |r, c| {
        binom_ext(parts[r] as i64 + m, r as i64 - c as i64 + m)
    })
}

/// `q^{f(i,j)} binom_q(λ_i + m, i - j + m)`.
pub fn macmahon_q_matrix(lambda: &Partition, m: u64) -> ExactMatrix<QPoly> {
    let parts = lambda.parts();
    let m = m as i64;
    ExactMatrix::from_fn(parts.len(), |r, c| {
        let b = r as i64 - c as i64 + m;
        if b < 0 {
            return QPoly::zero();
        }
        let top = parts[r] as u64 + m as u64;
        let weight = QPoly::monomial(<BigInt as One>::one(), macmahon_exponent(r + 1, c + 1));
        &weight * &q_binom(top, b as u64)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DetValue {
    Count(Count),
    Poly(QPoly),
}

/// MacMahon's determinant: `#PP^m(λ)`, or with `q_mode` its size generating
/// function.
pub fn count_pp_det(lambda: &Partition, m: u64, q_mode: bool) -> Result<DetValue> {
    if q_mode {
        Ok(DetValue::Poly(det_exact(&macmahon_q_matrix(lambda, m))))
    } else {
        let d = det_exact(&macmahon_matrix(lambda, m));
        Ok(DetValue::Count(Count::from_bigint(&d)?))
    }
}

pub fn pp_det_count(lambda: &Partition, m: u64) -> Result<Count> {
    match count_pp_det(lambda, m, false)? {
        DetValue::Count(c) => Ok(c),
        DetValue::Poly(_) => unreachable!(),
    }
}

pub fn pp_det_qpoly(lambda: &Partition, m: u64) -> QPoly {
    det_exact(&macmahon_q_matrix(lambda, m))
}

/// Stembridge's skew-symmetric matrix for `SPP^m(λ)`, after padding `λ` with
/// a zero part to even length.
pub fn stembridge_matrix(lambda: &StrictPartition, m: u64) -> Result<ExactMatrix<BigInt>> {
    let mut parts: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    if parts.len() % 2 == 1 {
        parts.push(0);
    }
    let n = parts.len();
    let m = m as i64;
    let top = m + n as i64 - 1;
    // a[i][k] = binom(λ_i - 1 + m + i - 1 - k, m + i - 1 - k), 1-based i
    let a: Vec<Vec<BigInt>> = (0..n)
        .map(|r| {
            let i = r as i64 + 1;
            (0..=top)
                .map(|k| binom_ext(parts[r] - 1 + m + i - 1 - k, m + i - 1 - k))
                .collect()
        })
        .collect();
    let entry = |r: usize, c: usize| -> BigInt {
        let mut s = <BigInt as Zero>::zero();
        for k in 0..=top as usize {
            for l in k..=top as usize {
                s += &a[r][k] * &a[c][l] - &a[r][l] * &a[c][k];
            }
        }
        s
    };
    let mat = ExactMatrix::from_fn(n, entry);
    if !mat.is_skew_symmetric() {
        return Err(Error::Structure("Stembridge matrix is not skew-symmetric".into()));
    }
    Ok(mat)
}

/// Stembridge's Pfaffian: `#SPP^m(λ)`.
pub fn count_spp_pf(lambda: &StrictPartition, m: u64) -> Result<Count> {
    let pf = pfaffian_exact(&stembridge_matrix(lambda, m)?)?;
    if pf.is_negative() {
        return Err(Error::Mismatch {
            identity: "Stembridge Pfaffian",
            lhs: pf.to_string(),
            rhs: "a nonnegative count".into(),
        });
    }
    Count::from_bigint(&pf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ppcore::{enumerate_pp, enumerate_spp, gen_function, Weight};

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn strict(p: &[usize]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn determinant_examples() {
        let id = ExactMatrix::from_fn(3, |i, j| BigInt::from((i == j) as i64));
        assert_eq!(det_exact(&id), BigInt::from(1));
        let m = ExactMatrix::from_i64_rows(&[vec![1, 2], vec![3, 4]]).unwrap();
        assert_eq!(det_exact(&m), BigInt::from(-2));
        let pivot = ExactMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(det_exact(&pivot), BigInt::from(-1));
        let singular = ExactMatrix::from_i64_rows(&[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(det_exact(&singular), BigInt::from(0));
        assert_eq!(det_exact(&ExactMatrix::<BigInt>::from_fn(0, |_, _| unreachable!())), BigInt::from(1));
    }

    #[test]
    fn pfaffian_examples() {
        let m = ExactMatrix::from_i64_rows(&[vec![0, 7], vec![-7, 0]]).unwrap();
        assert_eq!(pfaffian_exact(&m).unwrap(), BigInt::from(7));
        // a12 a34 - a13 a24 + a14 a23
        let (a12, a13, a14, a23, a24, a34) = (2, 3, 5, 7, 11, 13);
        let m = ExactMatrix::from_i64_rows(&[
            vec![0, a12, a13, a14],
            vec![-a12, 0, a23, a24],
            vec![-a13, -a23, 0, a34],
            vec![-a14, -a24, -a34, 0],
        ])
        .unwrap();
        assert_eq!(
            pfaffian_exact(&m).unwrap(),
            BigInt::from(a12 * a34 - a13 * a24 + a14 * a23)
        );
        let odd = ExactMatrix::from_i64_rows(&[vec![0]]).unwrap();
        assert!(matches!(pfaffian_exact(&odd), Err(Error::Structure(_))));
        let not_skew = ExactMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(matches!(pfaffian_exact(&not_skew), Err(Error::Structure(_))));
    }

    #[test]
    fn macmahon_examples() {
        assert_eq!(pp_det_count(&part(&[1]), 1).unwrap(), 2u64);
        assert_eq!(pp_det_count(&part(&[2, 1]), 1).unwrap(), 5u64);
        let q = pp_det_qpoly(&part(&[2, 1]), 1);
        assert_eq!(q.eval_at_one(), BigInt::from(5));
        let pps: Vec<_> = enumerate_pp(&part(&[2, 1]), 1).collect();
        assert_eq!(q, gen_function(&pps, Weight::Size).unwrap());
    }

    #[test]
    fn exponents() {
        assert_eq!(macmahon_exponent(1, 1), 0);
        assert_eq!(macmahon_exponent(2, 1), 1);
        assert_eq!(macmahon_exponent(1, 3), 1);
        assert_eq!(macmahon_exponent(3, 1), 3);
    }

    #[test]
    fn stembridge_examples() {
        assert_eq!(count_spp_pf(&strict(&[1]), 1).unwrap(), 2u64);
        assert_eq!(count_spp_pf(&strict(&[2, 1]), 1).unwrap(), 4u64);
        assert_eq!(count_spp_pf(&strict(&[3, 1]), 1).unwrap(), 6u64);
        assert_eq!(count_spp_pf(&StrictPartition::default(), 3).unwrap(), 1u64);
    }

    #[test]
    fn stembridge_against_enumeration() {
        for mask in 1u32..(1 << 4) {
            let parts: Vec<usize> = (1..=4).rev().filter(|p| mask >> (p - 1) & 1 == 1).collect();
            let lambda = strict(&parts);
            for m in 0..=2 {
                assert_eq!(
                    count_spp_pf(&lambda, m).unwrap(),
                    enumerate_spp(&lambda, m).count() as u64,
                    "{lambda} m={m}"
                );
            }
        }
    }
}
