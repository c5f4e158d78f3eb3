//! Exact scalar and polynomial arithmetic underlying every other module.
//!
//! Scalars are arbitrary-precision rationals ([`BigRational`]) or elements of
//! a quadratic extension `Q(sqrt(a))` ([`QuadExt`]). On top of those sit
//! dense univariate [`Polynomial`]s, reduced [`RationalFunction`]s, and a
//! small exact [`linalg`] layer. All values are immutable after construction
//! and every operation is pure.

pub mod linalg;
pub mod poly;
pub mod quadext;
pub mod ratfunc;
pub mod scalar;

pub use linalg::Matrix;
pub use poly::Polynomial;
pub use quadext::QuadExt;
pub use ratfunc::RationalFunction;
pub use scalar::{binom_half, rational_sqrt, ExactDiv, Field, Ring};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
