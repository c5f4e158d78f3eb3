//! Reduced fractions of polynomials.
//!
//! Invariants: the denominator is nonzero and monic, and `gcd(num, den) = 1`.
//! The zero function is `0/1`.

use num_bigint::BigInt;

use super::poly::Polynomial;
use super::scalar::{Field, Ring};

#[derive(Debug, Clone, PartialEq)]
pub struct RationalFunction<T: Field> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

impl<T: Field> RationalFunction<T> {
    /// Builds `num/den` in reduced, monic-denominator form.
    /// Panics when `den` is zero.
    pub fn new(num: Polynomial<T>, den: Polynomial<T>) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num,
                den: Polynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let num = num.exact_div(&g).expect("gcd divides numerator");
        let den = den.exact_div(&g).expect("gcd divides denominator");
        let lead_inv = den.leading().unwrap().inv();
        RationalFunction {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        }
    }

    pub fn from_poly(p: Polynomial<T>) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn num(&self) -> &Polynomial<T> {
        &self.num
    }

    pub fn den(&self) -> &Polynomial<T> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The underlying polynomial when the denominator is 1.
    pub fn as_polynomial(&self) -> Option<&Polynomial<T>> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    /// Derivative by the quotient rule, renormalized.
    pub fn derivative(&self) -> Self {
        let n = self.num.derivative().mul(&self.den);
        let d = self.num.mul(&self.den.derivative());
        RationalFunction::new(n.sub(&d), self.den.mul(&self.den))
    }
}

impl<T: Field> Ring for RationalFunction<T> {
    fn zero() -> Self {
        RationalFunction::from_poly(Polynomial::zero())
    }

    fn one() -> Self {
        RationalFunction::from_poly(Polynomial::one())
    }

    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }

    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    fn add(&self, rhs: &Self) -> Self {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        RationalFunction::new(num, self.den.mul(&rhs.den))
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        RationalFunction::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn from_integer(n: &BigInt) -> Self {
        RationalFunction::from_poly(Polynomial::from_integer(n))
    }
}

impl<T: Field> Field for RationalFunction<T> {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RationalFunction::new(self.den.clone(), self.num.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn poly(cs: &[i64]) -> Polynomial<BigRational> {
        Polynomial::new(
            cs.iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    #[test]
    fn reduction_and_monic_denominator() {
        // (x^2-1)/(2x-2) = x/2 + 1/2: the constant denominator folds away
        let f = RationalFunction::new(poly(&[-1, 0, 1]), poly(&[-2, 2]));
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(
            f.as_polynomial().unwrap(),
            &Polynomial::new(alloc::vec![half.clone(), half])
        );
        // (x^2-1)/(x^2-2x+1) = (x+1)/(x-1): monic den kept
        let g = RationalFunction::new(poly(&[-1, 0, 1]), poly(&[1, -2, 1]));
        assert_eq!(g.num(), &poly(&[1, 1]));
        assert_eq!(g.den(), &poly(&[-1, 1]));
        assert!(g.as_polynomial().is_none());
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dx (1/x) = -1/x^2
        let f = RationalFunction::new(poly(&[1]), poly(&[0, 1]));
        let df = f.derivative();
        assert_eq!(df.num(), &poly(&[-1]));
        assert_eq!(df.den(), &poly(&[0, 0, 1]));
    }

    proptest! {
        #[test]
        fn normalization_idempotent(a in prop::collection::vec(-9i64..10, 0..5),
                                    b in prop::collection::vec(-9i64..10, 1..5)) {
            let den = poly(&b);
            prop_assume!(!den.is_zero());
            let f = RationalFunction::new(poly(&a), den);
            let g = RationalFunction::new(f.num().clone(), f.den().clone());
            prop_assert_eq!(f, g);
        }

        #[test]
        fn field_inverse(a in prop::collection::vec(-9i64..10, 1..5),
                         b in prop::collection::vec(-9i64..10, 1..5)) {
            let num = poly(&a);
            let den = poly(&b);
            prop_assume!(!num.is_zero() && !den.is_zero());
            let f = RationalFunction::new(num, den);
            prop_assert!(Ring::is_one(&f.mul(&f.inv())));
        }
    }
}
