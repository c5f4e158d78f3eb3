//! Dense univariate polynomials over an exact field.
//!
//! Coefficients are stored in ascending order of degree: `coeffs[i]` is the
//! coefficient of `x^i`. The zero polynomial is the empty coefficient vector
//! and its degree is `None`, never `-1`, so degree comparisons in the
//! factor-existence checks cannot silently pass.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::scalar::{Field, Ring};
use crate::Error;

#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T: Field> {
    coeffs: Vec<T>,
}

impl<T: Field> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Polynomial::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Polynomial::new(coeffs)
    }

    /// The identity polynomial `x`.
    pub fn identity() -> Self {
        Polynomial::monomial(T::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` as the zero polynomial's minus-infinity sentinel.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Coefficient of `x^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Polynomial<U> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add(&rhs.coeff(i)));
        }
        Polynomial::new(out)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, c: &T) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Euclidean division `self = q * rhs + r`, `deg r < deg rhs`.
    /// Panics when `rhs` is zero.
    pub fn div_rem(&self, rhs: &Self) -> (Self, Self) {
        let d = rhs.degree().expect("division by zero polynomial");
        let lead_inv = rhs.leading().unwrap().inv();
        let mut rem = self.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let factor = rem.leading().unwrap().mul(&lead_inv);
            let shift = rd - d;
            quot[shift] = factor.clone();
            let scaled = rhs.scale(&factor);
            let mut shifted = vec![T::zero(); shift];
            shifted.extend_from_slice(&scaled.coeffs);
            rem = rem.sub(&Polynomial::new(shifted));
        }
        (Polynomial::new(quot), rem)
    }

    /// Exact quotient; errors when the remainder is nonzero.
    pub fn exact_div(&self, rhs: &Self) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.div_rem(rhs);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Monic greatest common divisor (Euclid). `gcd(0, 0) = 0`.
    pub fn gcd(&self, rhs: &Self) -> Self {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scales to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => self.scale(&l.inv()),
        }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.mul(&T::from_integer(&BigInt::from(i))))
            .collect();
        Polynomial::new(out)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Composition with the shift `x -> x + c`, by Horner's scheme.
    pub fn compose_linear(&self, c: &T) -> Self {
        let shift = Polynomial::new(vec![c.clone(), T::one()]);
        let mut acc = Polynomial::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul(&shift).add(&Polynomial::constant(coeff.clone()));
        }
        acc
    }

    /// Composition with `x -> -x` (coefficient sign flip on odd powers).
    pub fn reflect(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.neg() } else { c.clone() })
                .collect(),
        )
    }
}

impl<T: Field> Ring for Polynomial<T> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        Polynomial::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Polynomial::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Polynomial::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Polynomial::neg(self)
    }
    fn from_integer(n: &BigInt) -> Self {
        Polynomial::constant(T::from_integer(n))
    }
}
