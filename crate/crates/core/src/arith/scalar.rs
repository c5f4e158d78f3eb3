//! Ring/field traits for the crate's exact scalars, plus rational helpers.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic. Implementors must be cheap to
/// clone relative to the arithmetic they perform (all ours are bigint-backed).
pub trait Ring: Clone + PartialEq + core::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_integer(n: &BigInt) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_integer(&BigInt::from(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse. Panics when `self` is zero.
    fn inv(&self) -> Self;

    /// Exact quotient. Panics when `rhs` is zero.
    fn div(&self, rhs: &Self) -> Self {
        self.mul(&rhs.inv())
    }
}

/// An integral domain supporting exact division where it exists; used by the
/// fraction-free determinant routines.
pub trait ExactDiv: Ring {
    /// Returns `self / rhs` when the division is exact, `None` otherwise.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

impl Ring for BigRational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        <BigRational as Zero>::is_zero(self)
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
    fn from_integer(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

impl Field for BigRational {
    fn inv(&self) -> Self {
        if Zero::is_zero(self) {
            panic!("inverse of zero rational");
        }
        self.recip()
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn one() -> Self {
        <BigInt as One>::one()
    }
    fn is_zero(&self) -> bool {
        <BigInt as Zero>::is_zero(self)
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
    fn from_integer(n: &BigInt) -> Self {
        n.clone()
    }
}

impl ExactDiv for BigInt {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
}

/// Exact square root of a nonnegative integer, if it is a perfect square.
fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact square root of a rational, if it is the square of a rational.
/// The result is the nonnegative root.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    let n = integer_sqrt(q.numer())?;
    let d = integer_sqrt(q.denom())?;
    Some(BigRational::new(n, d))
}

/// The generalized binomial coefficient `C(1/2, i)`, i.e.
/// `(1/2)(1/2 - 1)...(1/2 - i + 1) / i!`, with `C(1/2, 0) = 1`.
pub fn binom_half(i: u32) -> BigRational {
    let mut acc = <BigRational as One>::one();
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));
    for k in 0..i {
        let factor = &half - BigRational::from_integer(BigInt::from(k));
        acc = acc * factor / BigRational::from_integer(BigInt::from(k + 1));
    }
    acc
}

/// Row `n` of Pascal's triangle as exact integers.
pub fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n + 1);
    row.push(<BigInt as One>::one());
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn binom_half_small_values() {
        assert_eq!(binom_half(0), rat(1, 1));
        assert_eq!(binom_half(1), rat(1, 2));
        assert_eq!(binom_half(2), rat(-1, 8));
        assert_eq!(binom_half(3), rat(1, 16));
    }

    #[test]
    fn rational_sqrt_detects_squares() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(0, 1)), Some(rat(0, 1)));
        assert_eq!(rational_sqrt(&rat(2, 1)), None);
        assert_eq!(rational_sqrt(&rat(-4, 1)), None);
        assert_eq!(rational_sqrt(&rat(4, 9)), Some(rat(2, 3)));
    }

    #[test]
    fn binomial_rows() {
        let row4: Vec<i64> = binomial_row(4)
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        assert_eq!(row4, vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn bigint_exact_div() {
        let a = BigInt::from(12);
        assert_eq!(a.exact_div(&BigInt::from(4)), Some(BigInt::from(3)));
        assert_eq!(a.exact_div(&BigInt::from(5)), None);
        assert_eq!(a.exact_div(&BigInt::from(0)), None);
    }
}
