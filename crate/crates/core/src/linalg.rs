//! Fraction-free determinants and small combinatorial helpers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

/// A commutative ring in which exact division can be attempted.
///
/// `div_exact` returns `None` when the quotient does not exist in the ring.
pub trait ExactRing: Clone {
    fn is_zero_element(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

impl ExactRing for BigInt {
    fn is_zero_element(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            return None;
        }
        let (q, rem) = self.div_rem(divisor);
        Zero::is_zero(&rem).then_some(q)
    }
}

impl ExactRing for Rational {
    fn is_zero_element(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        (!Zero::is_zero(divisor)).then(|| self / divisor)
    }
}

/// Determinant by Bareiss fraction-free elimination with row pivoting.
///
/// `one` is the multiplicative identity of the ring; it is returned for the
/// empty matrix and seeds the first divisor.
pub fn bareiss_determinant<T: ExactRing>(matrix: &[Vec<T>], one: &T) -> Result<T> {
    let size = matrix.len();
    if size == 0 {
        return Ok(one.clone());
    }
    if matrix.iter().any(|row| row.len() != size) {
        return Err(Error::ArityMismatch {
            expected: size,
            found: matrix.iter().map(Vec::len).find(|&l| l != size).unwrap_or(size),
        });
    }
    let mut work: Vec<Vec<T>> = matrix.to_vec();
    let mut negate = false;
    let mut previous = one.clone();
    for k in 0..size {
        let Some(pivot_row) = (k..size).find(|&i| !work[i][k].is_zero_element()) else {
            return Ok(one.zero_like());
        };
        if pivot_row != k {
            work.swap(pivot_row, k);
            negate = !negate;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let cross = work[k][k].mul(&work[i][j]).sub(&work[i][k].mul(&work[k][j]));
                work[i][j] = cross.div_exact(&previous).ok_or(Error::InexactDivision)?;
            }
        }
        previous = work[k][k].clone();
    }
    let det = work[size - 1][size - 1].clone();
    Ok(if negate { det.neg() } else { det })
}

/// Binomial coefficient C(n, k), zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Returns `Some(i)` when the rational is an integer.
pub fn as_integer(value: &Rational) -> Option<BigInt> {
    value.is_integer().then(|| value.numer().clone())
}

pub fn is_positive_integer(value: &Rational) -> bool {
    value.is_integer() && value.is_positive()
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Subsets {
    Subsets {
        n,
        current: if k <= n { Some((0..k).collect()) } else { None },
    }
}

pub struct Subsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Iterator for Subsets {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// Every permutation of `0..n` paired with its sign (+1 even, -1 odd).
pub fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i8)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, 1, &mut out);
    out
}

fn permute(perm: &mut Vec<usize>, start: usize, sign: i8, out: &mut Vec<(Vec<usize>, i8)>) {
    if start + 1 >= perm.len() {
        out.push((perm.clone(), sign));
        return;
    }
    for i in start..perm.len() {
        perm.swap(start, i);
        permute(perm, start + 1, if i == start { sign } else { -sign }, out);
        perm.swap(start, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn naive_det(m: &[Vec<i64>]) -> i64 {
        signed_permutations(m.len())
            .iter()
            .map(|(p, s)| *s as i64 * p.iter().enumerate().map(|(i, &j)| m[i][j]).product::<i64>())
            .sum()
    }

    #[test]
    fn bareiss_matches_leibniz() {
        let cases = [
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            vec![vec![0, 1, 2], vec![3, 0, 5], vec![6, 7, 0]],
            vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]],
            vec![vec![0, 0, 1, 3], vec![2, 1, 0, 0], vec![1, 0, 4, 1], vec![5, 3, 2, 0]],
        ];
        for case in cases {
            let big: Vec<Vec<BigInt>> =
                case.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
            assert_eq!(bareiss_determinant(&big, &BigInt::one()).unwrap(), int(naive_det(&case)));
        }
    }

    #[test]
    fn empty_determinant_is_one() {
        let empty: Vec<Vec<BigInt>> = Vec::new();
        assert_eq!(bareiss_determinant(&empty, &BigInt::one()).unwrap(), BigInt::one());
    }

    #[test]
    fn ragged_matrix_rejected() {
        let m = vec![vec![int(1), int(2)], vec![int(3)]];
        assert!(matches!(bareiss_determinant(&m, &BigInt::one()), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(2, 5), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(factorial(5), int(120));
    }

    #[test]
    fn subset_enumeration() {
        let all: Vec<_> = subsets(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(subsets(3, 0).count(), 1);
        assert_eq!(subsets(2, 3).count(), 0);
    }

    #[test]
    fn permutation_signs() {
        let perms = signed_permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|(_, s)| *s as i32).sum::<i32>(), 0);
        assert_eq!(signed_permutations(0).len(), 1);
    }
}
