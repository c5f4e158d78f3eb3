//! The quadratic extension `Q(sqrt(a))` for a nonzero rational `a`.
//!
//! A value is `u + v*theta` with `theta^2 = a`. When `a` is the square of a
//! rational `r`, construction folds `v*theta` into `u` via `theta = r`, so
//! elements over a square base always have `v = 0` and the field collapses
//! to `Q`. This is the only algebraic extension the crate supports: `sqrt(a)`
//! is the single irrationality the reduction pipeline needs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::scalar::{rational_sqrt, Field, Ring};

/// An element `u + v*theta` of `Q(sqrt(base))`, `theta^2 = base`.
///
/// The base travels with the element; values with `v = 0` are plain
/// rationals and combine with any base. Mixing two genuinely irrational
/// values from different extensions panics: each pipeline fixes one `a`.
#[derive(Debug, Clone)]
pub struct QuadExt {
    base: BigRational,
    u: BigRational,
    v: BigRational,
}

impl QuadExt {
    /// Builds `u + v*theta` over `Q(sqrt(base))`, folding `theta` into the
    /// rational part when `base` is a perfect square. Panics on `base = 0`.
    pub fn new(base: BigRational, u: BigRational, v: BigRational) -> Self {
        assert!(!Zero::is_zero(&base), "extension base must be nonzero");
        if !Zero::is_zero(&v) {
            if let Some(root) = rational_sqrt(&base) {
                return QuadExt {
                    base,
                    u: u + &v * root,
                    v: <BigRational as Zero>::zero(),
                };
            }
        }
        QuadExt { base, u, v }
    }

    /// A rational value carried over the extension with the given base.
    pub fn from_rational_with_base(base: BigRational, u: BigRational) -> Self {
        QuadExt::new(base, u, <BigRational as Zero>::zero())
    }

    /// A plain rational (base 1, which collapses).
    pub fn from_rational(u: BigRational) -> Self {
        QuadExt {
            base: <BigRational as num_traits::One>::one(),
            u,
            v: <BigRational as Zero>::zero(),
        }
    }

    /// `theta = sqrt(base)`; collapses to the rational root for square bases.
    pub fn theta(base: BigRational) -> Self {
        QuadExt::new(base, <BigRational as Zero>::zero(), <BigRational as num_traits::One>::one())
    }

    pub fn base(&self) -> &BigRational {
        &self.base
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.u
    }

    pub fn theta_part(&self) -> &BigRational {
        &self.v
    }

    /// True when the value lies in `Q`.
    pub fn is_rational(&self) -> bool {
        Zero::is_zero(&self.v)
    }

    /// The value as a rational, when it is one.
    pub fn to_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.u)
        } else {
            None
        }
    }

    /// The value as a nonnegative integer, when it is one.
    pub fn to_nonneg_integer(&self) -> Option<BigInt> {
        let r = self.to_rational()?;
        if r.is_integer() && !r.is_negative() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    /// Conjugate `u - v*theta`.
    pub fn conj(&self) -> Self {
        QuadExt {
            base: self.base.clone(),
            u: self.u.clone(),
            v: -&self.v,
        }
    }

    /// Field norm `u^2 - base * v^2`; zero only for the zero element.
    pub fn norm(&self) -> BigRational {
        &self.u * &self.u - &self.base * &self.v * &self.v
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = <Self as Ring>::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// A square root of `self` inside `Q(sqrt(ambient))`, if one exists.
    ///
    /// Rational inputs `c` admit a root when `c` or `c/ambient` is a rational
    /// square. Irrational inputs `u + v*theta` reduce to rational-square
    /// checks on the norm: `(x + y*theta)^2 = u + v*theta` forces
    /// `x^2 = (u ± sqrt(u^2 - ambient*v^2)) / 2` and `y = v / (2x)`.
    pub fn sqrt_in(&self, ambient: &BigRational) -> Option<QuadExt> {
        if Zero::is_zero(&self.v) {
            let c = &self.u;
            if Zero::is_zero(c) {
                return Some(QuadExt::from_rational_with_base(
                    ambient.clone(),
                    <BigRational as Zero>::zero(),
                ));
            }
            if let Some(r) = rational_sqrt(c) {
                return Some(QuadExt::from_rational_with_base(ambient.clone(), r));
            }
            let ratio = c / ambient;
            if let Some(r) = rational_sqrt(&ratio) {
                return Some(QuadExt::new(ambient.clone(), <BigRational as Zero>::zero(), r));
            }
            return None;
        }
        // Irrational input: only meaningful inside the same extension.
        if self.base != *ambient {
            return None;
        }
        let s = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(BigInt::from(2));
        for cand in [(&self.u + &s) / &two, (&self.u - &s) / &two] {
            if let Some(x) = rational_sqrt(&cand) {
                if !Zero::is_zero(&x) {
                    let y = &self.v / (&two * &x);
                    return Some(QuadExt::new(ambient.clone(), x, y));
                }
            }
        }
        None
    }

    /// The base to carry into a binary-operation result: a genuinely
    /// irrational operand pins it; otherwise prefer a non-collapsed base so
    /// the extension context survives arithmetic with plain constants.
    fn joined_base(&self, rhs: &Self) -> BigRational {
        if !Zero::is_zero(&self.v) {
            if !Zero::is_zero(&rhs.v) {
                assert_eq!(
                    self.base, rhs.base,
                    "mixed quadratic extensions: {} vs {}",
                    self.base, rhs.base
                );
            }
            self.base.clone()
        } else if !Zero::is_zero(&rhs.v) || Ring::is_one(&self.base) {
            rhs.base.clone()
        } else {
            self.base.clone()
        }
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &Self) -> bool {
        self.u == other.u
            && self.v == other.v
            && (Zero::is_zero(&self.v) || self.base == other.base)
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        QuadExt::from_rational(<BigRational as Zero>::zero())
    }

    fn one() -> Self {
        QuadExt::from_rational(<BigRational as num_traits::One>::one())
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.u) && Zero::is_zero(&self.v)
    }

    fn add(&self, rhs: &Self) -> Self {
        QuadExt {
            base: self.joined_base(rhs),
            u: &self.u + &rhs.u,
            v: &self.v + &rhs.v,
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        QuadExt {
            base: self.joined_base(rhs),
            u: &self.u - &rhs.u,
            v: &self.v - &rhs.v,
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        let base = self.joined_base(rhs);
        let u = &self.u * &rhs.u + &base * &self.v * &rhs.v;
        let v = &self.u * &rhs.v + &self.v * &rhs.u;
        QuadExt { base, u, v }
    }

    fn neg(&self) -> Self {
        QuadExt {
            base: self.base.clone(),
            u: -&self.u,
            v: -&self.v,
        }
    }

    fn from_integer(n: &BigInt) -> Self {
        QuadExt::from_rational(BigRational::from_integer(n.clone()))
    }
}

impl Field for QuadExt {
    fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!Zero::is_zero(&n), "inverse of zero in Q(sqrt(a))");
        QuadExt {
            base: self.base.clone(),
            u: &self.u / &n,
            v: -&self.v / &n,
        }
    }
}
