//! Differential operators over `k[x]` and `k(x)`.
//!
//! A [`DiffOp`] is a finite coefficient list: `coeffs[i]` multiplies `D^i`
//! from the left (standard form). Multiplication uses the commutation rule
//! `D f = f D + f'`, so composing operators is exact and noncommutative.
//!
//! Coefficients live in any [`DiffRing`]: polynomials for the hot paths,
//! rational functions only where right division by an order-1 factor needs
//! them.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::scalar::binomial_row;
use crate::arith::{Field, Matrix, Polynomial, RationalFunction, Ring};
use crate::Error;

/// A commutative differential ring: the coefficient rings of [`DiffOp`].
pub trait DiffRing: Ring {
    fn derivative(&self) -> Self;
}

impl<T: Field> DiffRing for Polynomial<T> {
    fn derivative(&self) -> Self {
        Polynomial::derivative(self)
    }
}

impl<T: Field> DiffRing for RationalFunction<T> {
    fn derivative(&self) -> Self {
        RationalFunction::derivative(self)
    }
}

/// A differential operator `sum coeffs[i] * D^i` in standard form
/// (coefficients to the left of the `D` powers).
#[derive(Debug, Clone, PartialEq)]
pub struct DiffOp<C: DiffRing> {
    coeffs: Vec<C>,
}

impl<C: DiffRing> DiffOp<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DiffOp { coeffs }
    }

    pub fn zero() -> Self {
        DiffOp { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DiffOp {
            coeffs: vec![C::one()],
        }
    }

    /// The derivation `D`.
    pub fn d() -> Self {
        DiffOp {
            coeffs: vec![C::zero(), C::one()],
        }
    }

    /// The order-0 operator "multiply by `c`".
    pub fn from_coeff(c: C) -> Self {
        DiffOp::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order, with `None` as the zero operator's minus-infinity sentinel.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; `None` for the zero operator.
    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    /// Coefficient of `D^i` (zero beyond the order).
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn map_coeffs<B: DiffRing>(&self, f: impl Fn(&C) -> B) -> DiffOp<B> {
        DiffOp::new(self.coeffs.iter().map(f).collect())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DiffOp::new((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        DiffOp {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        DiffOp::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// Composition `self . rhs` in the operator ring. Orders add; the
    /// commutation rule enters through `D^i f = sum C(i,k) f^(k) D^(i-k)`.
    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return DiffOp::zero();
        }
        let max_i = self.coeffs.len() - 1;
        // derivative chains of rhs coefficients up to order max_i
        let mut chains: Vec<Vec<C>> = Vec::with_capacity(rhs.coeffs.len());
        for b in &rhs.coeffs {
            let mut chain = Vec::with_capacity(max_i + 1);
            chain.push(b.clone());
            for k in 0..max_i {
                let next: C = chain[k].derivative();
                chain.push(next);
            }
            chains.push(chain);
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let binoms = binomial_row(i);
            for (j, chain) in chains.iter().enumerate() {
                for (k, db) in chain.iter().enumerate().take(i + 1) {
                    if db.is_zero() {
                        continue;
                    }
                    let term = a.mul(db).mul(&C::from_integer(&binoms[k]));
                    let idx = i + j - k;
                    out[idx] = out[idx].add(&term);
                }
            }
        }
        DiffOp::new(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = DiffOp::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Applies the operator to an element of the coefficient ring:
    /// `sum coeffs[i] * f^(i)`.
    pub fn apply(&self, f: &C) -> C {
        let mut acc = C::zero();
        let mut df = f.clone();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                df = df.derivative();
            }
            if !c.is_zero() {
                acc = acc.add(&c.mul(&df));
            }
        }
        acc
    }

    /// The adjoint `sum (-D)^i . coeffs[i]`, expanded to standard form.
    pub fn adjoint(&self) -> Self {
        let minus_d = DiffOp::d().neg();
        let mut acc = DiffOp::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            let term = minus_d.pow(i as u32).mul(&DiffOp::from_coeff(a.clone()));
            acc = acc.add(&term);
        }
        acc
    }

    /// Gauge twist: substitutes `D -> D + r`, i.e. `sum coeffs[i] (D + r)^i`
    /// expanded in the operator ring (conjugation by the symbol `exp(int r)`).
    pub fn twist(&self, r: &C) -> Self {
        let shifted = DiffOp::new(vec![r.clone(), C::one()]);
        let mut acc = DiffOp::zero();
        let mut power = DiffOp::one();
        for a in &self.coeffs {
            acc = acc.add(&power.scale_left(a));
            power = power.mul(&shifted);
        }
        acc
    }

    /// Left multiplication by an order-0 coefficient: `a . self`.
    fn scale_left(&self, a: &C) -> Self {
        DiffOp::new(self.coeffs.iter().map(|c| a.mul(c)).collect())
    }
}

impl<C: DiffRing + Field> DiffOp<C> {
    /// Right Euclidean division: `self = quotient . divisor + remainder`
    /// with `order(remainder) < order(divisor)`. Requires coefficients in a
    /// field (rational functions). Errors when `divisor` is zero.
    pub fn right_divide(&self, divisor: &Self) -> Result<(Self, Self), Error> {
        let d_ord = divisor.order().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.leading().unwrap().inv();
        let mut rem = self.clone();
        let mut quot = DiffOp::zero();
        while let Some(r_ord) = rem.order() {
            if r_ord < d_ord {
                break;
            }
            let shift = r_ord - d_ord;
            // factor * D^shift . divisor has the same leading term as rem
            let factor = rem.leading().unwrap().mul(&lead_inv);
            let mut mono = vec![C::zero(); shift + 1];
            mono[shift] = factor;
            let mono = DiffOp::new(mono);
            rem = rem.sub(&mono.mul(divisor));
            quot = quot.add(&mono);
        }
        Ok((quot, rem))
    }
}

impl<T: Field> DiffOp<Polynomial<T>> {
    /// Promotes polynomial coefficients to rational functions.
    pub fn to_rational_coeffs(&self) -> DiffOp<RationalFunction<T>> {
        self.map_coeffs(|c| RationalFunction::from_poly(c.clone()))
    }

    /// Algebraic Fourier transform: `sum a_i(x) D^i -> sum a_i(D) (-x)^i`,
    /// normalized to standard form.
    pub fn fourier(&self) -> Self {
        let minus_x = Polynomial::<T>::identity().neg();
        let mut acc = DiffOp::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            // a(D): constant coefficients, one per D power
            let a_of_d = DiffOp::new(
                a.coeffs()
                    .iter()
                    .map(|c| Polynomial::constant(c.clone()))
                    .collect(),
            );
            let xi = DiffOp::from_coeff(pow_poly(&minus_x, i));
            acc = acc.add(&a_of_d.mul(&xi));
        }
        acc
    }

    /// The pullback `[-1]^*`: `x -> -x`, `D -> -D`.
    pub fn reflect(&self) -> Self {
        DiffOp::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, a)| {
                    let r = a.reflect();
                    if i % 2 == 1 {
                        r.neg()
                    } else {
                        r
                    }
                })
                .collect(),
        )
    }

    /// Change of variable `x -> x + c` on every coefficient; `D` unchanged.
    pub fn translate(&self, c: &T) -> Self {
        self.map_coeffs(|a| a.compose_linear(c))
    }

    /// Applies the operator to a polynomial.
    pub fn apply_poly(&self, f: &Polynomial<T>) -> Polynomial<T> {
        self.apply(f)
    }

    /// The matrix of `f -> self(f)` from `{1, x, .., x^d}` into the monomial
    /// basis of the image, rows indexed by output monomials (at least `d+1`
    /// of them, more when the operator raises degree), columns by inputs.
    pub fn matrix_on_degree(&self, d: usize) -> Matrix<T> {
        let images: Vec<Polynomial<T>> = (0..=d)
            .map(|j| self.apply_poly(&Polynomial::monomial(T::one(), j)))
            .collect();
        let out_deg = images.iter().filter_map(|p| p.degree()).max();
        let rows = out_deg.map_or(d, |od| od.max(d)) + 1;
        Matrix::from_fn(rows, d + 1, |i, j| images[j].coeff(i))
    }
}

impl<T: Field> DiffOp<RationalFunction<T>> {
    /// Applies the operator to a polynomial; errors with
    /// [`Error::NonPolynomialResult`] when denominators survive.
    pub fn apply_expect_poly(&self, f: &Polynomial<T>) -> Result<Polynomial<T>, Error> {
        let out = self.apply(&RationalFunction::from_poly(f.clone()));
        out.as_polynomial()
            .cloned()
            .ok_or(Error::NonPolynomialResult)
    }
}

fn pow_poly<T: Field>(p: &Polynomial<T>, n: usize) -> Polynomial<T> {
    let mut acc = Polynomial::one();
    for _ in 0..n {
        acc = acc.mul(p);
    }
    acc
}

/// An operator `P_n(D) + Q_m(x)`: constant coefficients in `D` plus a pure
/// polynomial potential, of bidegree `(n, m)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AiryOperator<T: Field> {
    p_coeffs: Vec<T>,
    q: Polynomial<T>,
}

impl<T: Field> AiryOperator<T> {
    /// Builds `P_n(D) + Q_m(x)` from `P`'s coefficient list `a_0..a_n`.
    /// Requires `n >= 1`, `a_n != 0` and a nonzero `Q`.
    pub fn new(p_coeffs: Vec<T>, q: Polynomial<T>) -> Result<Self, Error> {
        if p_coeffs.len() < 2 {
            return Err(Error::OutOfDomain("P must have degree >= 1"));
        }
        if p_coeffs.last().unwrap().is_zero() {
            return Err(Error::OutOfDomain("leading coefficient of P is zero"));
        }
        if q.is_zero() {
            return Err(Error::OutOfDomain("Q must be nonzero"));
        }
        Ok(AiryOperator { p_coeffs, q })
    }

    /// The second-order shape `D^2 - Q` (here `Q_m = -Q`).
    pub fn order2(q_potential: &Polynomial<T>) -> Result<Self, Error> {
        AiryOperator::new(vec![T::zero(), T::zero(), T::one()], q_potential.neg())
    }

    pub fn n(&self) -> usize {
        self.p_coeffs.len() - 1
    }

    pub fn m(&self) -> usize {
        self.q.degree().expect("Q is nonzero by construction")
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.n(), self.m())
    }

    pub fn q(&self) -> &Polynomial<T> {
        &self.q
    }

    pub fn to_diffop(&self) -> DiffOp<Polynomial<T>> {
        let mut coeffs: Vec<Polynomial<T>> = self
            .p_coeffs
            .iter()
            .map(|a| Polynomial::constant(a.clone()))
            .collect();
        coeffs[0] = coeffs[0].add(&self.q);
        DiffOp::new(coeffs)
    }
}
