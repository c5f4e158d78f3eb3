//! Exact-arithmetic toolkit for deciding whether a second-order operator
//! `D^2 - Q(x)` admits an order-1 factor over `Q(sqrt(a))(x)`, together with
//! the banded-determinant machinery used to certify the irreducible cases.
//!
//! The crate is `no_std` (with `alloc`); everything IO-facing lives in the
//! companion `dopfactor` CLI crate.
//!
//! Layout:
//! - [`arith`]: big rationals, the quadratic extension `Q(sqrt(a))`, dense
//!   univariate polynomials, rational functions, and small exact linear
//!   algebra (nullspace, fraction-free determinants).
//! - [`weyl`]: the operator ring `k[x][D]` with `D x = x D + 1`, plus the
//!   adjoint, algebraic Fourier transform, translation, gauge twist, right
//!   division and the action on bounded-degree polynomials.
//! - [`detfactor`]: determining-factor derivatives `R` (truncated square
//!   roots of `Q` at infinity, generic and closed-form).
//! - [`reduce`]: the order-1 factor decision pipeline and its screens.
//! - [`nabla`]: the banded `(d+1) x (d+1)` determinant, its trailing minors,
//!   the three-term recurrence, and the nonvanishing certificates.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod detfactor;
pub mod nabla;
pub mod reduce;
pub mod weyl;

pub use arith::{BigInt, BigRational};

use core::fmt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Exact division left a nonzero remainder.
    InexactDivision,
    /// Applying an operator with rational-function coefficients did not
    /// produce a polynomial.
    NonPolynomialResult,
    /// Odd-degree `Q`: the branch at infinity is not a polynomial in `x`.
    FractionalRamification,
    /// A required square root does not lie in the ambient `Q(sqrt(a))`.
    FieldExtensionRequired,
    /// Division by the zero operator or zero denominator.
    DivisionByZero,
    /// The operator handed to the indicial-degree computation is not a
    /// twisted `D^2 - Q`.
    MalformedTwist,
    /// A claimed factor or kernel element failed verification.
    InvalidWitness,
    /// An argument fell outside an operation's domain.
    OutOfDomain(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InexactDivision => write!(f, "inexact division"),
            Error::NonPolynomialResult => write!(f, "non-polynomial result"),
            Error::FractionalRamification => {
                write!(f, "fractional ramification: no polynomial branch")
            }
            Error::FieldExtensionRequired => write!(f, "field extension required"),
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::MalformedTwist => write!(f, "malformed twist input"),
            Error::InvalidWitness => write!(f, "invalid witness"),
            Error::OutOfDomain(msg) => write!(f, "out of domain: {}", msg),
        }
    }
}

impl core::error::Error for Error {}
