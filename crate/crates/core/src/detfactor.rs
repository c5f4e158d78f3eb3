//! Determining-factor derivatives for `D^2 - Q`.
//!
//! At infinity, an exponential solution of `D^2 - Q` behaves like
//! `exp(int R)` where `R` is a polynomial square root of `Q` truncated past
//! the point where it can no longer be corrected: for `deg Q = 2m`, `R` has
//! degree `m` and `deg(R^2 - Q) <= m - 1`. [`sqrt_truncate`] computes `R` by
//! descending undetermined coefficients; [`setoyanagi_r`] produces the same
//! object in closed form for two-term potentials `a x^p + b x^q`.

use alloc::vec;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::{binom_half, Field, Polynomial, QuadExt, Ring};
use crate::Error;

/// Branch sign of the square root at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn apply(self, x: &QuadExt) -> QuadExt {
        match self {
            Sign::Plus => x.clone(),
            Sign::Minus => x.neg(),
        }
    }
}

/// One branch of the determining factor: the sign and the polynomial
/// derivative `R` (the factor itself stays implicit as `int R`).
/// For `deg Q = 2m`: `deg R = m` and `deg(R^2 - Q) <= m - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DeterminingBranch {
    pub epsilon: Sign,
    pub r_poly: Polynomial<QuadExt>,
}

impl DeterminingBranch {
    /// The branch with the opposite sign.
    pub fn negated(&self) -> DeterminingBranch {
        DeterminingBranch {
            epsilon: self.epsilon.flip(),
            r_poly: self.r_poly.neg(),
        }
    }
}

/// The extension base `a` carried by a polynomial's coefficients: the first
/// non-collapsed base found, or 1 when everything is plain rational.
pub fn extension_base(q: &Polynomial<QuadExt>) -> BigRational {
    for c in q.coeffs() {
        if !Ring::is_one(c.base()) {
            return c.base().clone();
        }
    }
    BigRational::from_integer(BigInt::from(1))
}

/// Truncated square root of `Q` at infinity with leading sign `epsilon`:
/// the unique polynomial `R` of degree `m = deg(Q)/2` with
/// `lead(R) = epsilon * sqrt(lead Q)` and `deg(R^2 - Q) <= m - 1`. Each new
/// coefficient of `R` cancels one coefficient of `R^2 - Q`, from degree `2m`
/// down to degree `m`.
///
/// Errors: odd `deg Q` ([`Error::FractionalRamification`]); `deg Q < 2`
/// ([`Error::OutOfDomain`]); `sqrt(lead Q)` outside the ambient field
/// ([`Error::FieldExtensionRequired`]).
pub fn sqrt_truncate(q: &Polynomial<QuadExt>, epsilon: Sign) -> Result<DeterminingBranch, Error> {
    let deg = q.degree().unwrap_or(0);
    if deg % 2 == 1 {
        return Err(Error::FractionalRamification);
    }
    if deg < 2 {
        return Err(Error::OutOfDomain("Q must have degree >= 2"));
    }
    let m = deg / 2;
    let ambient = extension_base(q);
    let lead = q
        .coeff(deg)
        .sqrt_in(&ambient)
        .ok_or(Error::FieldExtensionRequired)?;
    let lead = epsilon.apply(&lead);

    let mut r = vec![QuadExt::zero(); m + 1];
    r[m] = lead.clone();
    let two_lead_inv = lead.add(&lead).inv();
    for j in 1..=m {
        // coefficient of x^(2m-j) in R^2, excluding the 2 r_m r_{m-j} term
        let mut known = QuadExt::zero();
        let lo = m - j + 1;
        for i in lo..=m {
            let k = 2 * m - j - i;
            if k < lo || k > m || k == m || i == m {
                continue;
            }
            known = known.add(&r[i].mul(&r[k]));
        }
        r[m - j] = q.coeff(2 * m - j).sub(&known).mul(&two_lead_inv);
    }
    let r_poly = Polynomial::new(r);
    debug_assert!(
        r_poly
            .mul(&r_poly)
            .sub(q)
            .degree()
            .is_none_or(|dd| dd < m),
        "truncation bound violated"
    );
    Ok(DeterminingBranch { epsilon, r_poly })
}

/// Parameters of a two-term potential `a x^p + b x^q`, `q < p`.
#[derive(Debug, Clone, PartialEq)]
pub struct SetoyanagiParams {
    a: BigRational,
    b: BigRational,
    p: usize,
    q: usize,
}

impl SetoyanagiParams {
    /// Requires `q < p` and `a*b != 0`.
    pub fn new(a: BigRational, b: BigRational, p: usize, q: usize) -> Result<Self, Error> {
        if q >= p {
            return Err(Error::OutOfDomain("q must be smaller than p"));
        }
        if Ring::is_zero(&a) || Ring::is_zero(&b) {
            return Err(Error::OutOfDomain("a and b must be nonzero"));
        }
        Ok(SetoyanagiParams { a, b, p, q })
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// `m = p/2`, defined when `p` is even.
    pub fn half_degree(&self) -> Option<usize> {
        self.p.is_multiple_of(2).then_some(self.p / 2)
    }

    /// `r = floor(m / (2m - q))`, the truncation length of the closed form.
    pub fn truncation_index(&self) -> Option<usize> {
        let m = self.half_degree()?;
        Some(m / (2 * m - self.q))
    }

    /// The potential `a x^p + b x^q` over `Q(sqrt(a))`.
    pub fn potential(&self) -> Polynomial<QuadExt> {
        let base = self.a.clone();
        let mut coeffs = vec![QuadExt::zero(); self.p + 1];
        coeffs[self.p] = QuadExt::from_rational_with_base(base.clone(), self.a.clone());
        coeffs[self.q] = QuadExt::from_rational_with_base(base, self.b.clone());
        Polynomial::new(coeffs)
    }
}

/// Closed-form determining-factor derivative for `a x^(2m) + b x^q`:
/// `R = epsilon sqrt(a) x^m sum_{i=0}^{r} C(1/2, i) (b/a)^i x^(i(q - 2m))`
/// with `r = floor(m / (2m - q))`; all exponents `m + i(q - 2m)` stay
/// nonnegative. Errors on odd `p` ([`Error::FractionalRamification`]).
pub fn setoyanagi_r(params: &SetoyanagiParams, epsilon: Sign) -> Result<DeterminingBranch, Error> {
    let Some(m) = params.half_degree() else {
        return Err(Error::FractionalRamification);
    };
    let r = params
        .truncation_index()
        .expect("even p implies the index exists");
    let sqrt_a = QuadExt::theta(params.a().clone());
    let ratio = params.b() / params.a();
    let mut coeffs = vec![QuadExt::zero(); m + 1];
    let gap = 2 * m - params.q();
    let mut ratio_pow = BigRational::from_integer(BigInt::from(1));
    for i in 0..=r {
        let exponent = m - i * gap;
        let scalar = binom_half(i as u32) * &ratio_pow;
        let term = epsilon
            .apply(&sqrt_a)
            .mul(&QuadExt::from_rational_with_base(
                params.a().clone(),
                scalar,
            ));
        coeffs[exponent] = coeffs[exponent].add(&term);
        ratio_pow *= &ratio;
    }
    Ok(DeterminingBranch {
        epsilon,
        r_poly: Polynomial::new(coeffs),
    })
}
