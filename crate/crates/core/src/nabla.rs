//! The banded `(d+1) x (d+1)` determinant `nabla(d, alpha)`, its trailing
//! minors, the three-term recurrence they satisfy, and the inequality chain
//! that certifies `mu(d) != 0`.
//!
//! The matrix is the action of
//! `D^2 + [4(d+1)a^3 x^2 - 3(d+1)a] D + [-4d(d+1)a^3 x + 3(d+1)^2 a^2]`
//! on polynomials of degree at most `d` (written `a` for alpha). Its entries
//! follow a five-case band rule; [`build_from_operator`] rebuilds the same
//! matrix through the operator action as a cross-check oracle.
//!
//! All integer work runs at `alpha = 1` in the form
//! `nabla_{p+1} = (d+1)^2 [3 nabla_p - 12 l_{p-1} nabla_{p-1} + 16 l_{p-1}
//! l_{p-2} nabla_{p-2}]` with `l_k = (k+1)(d-k)`, which keeps every
//! intermediate an exact integer. Symbolic mode carries alpha powers per
//! entry and is used only for the small-d homogeneity check.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::arith::{ExactDiv, Matrix, Polynomial, RationalFunction, Ring};
use crate::weyl::DiffOp;
use crate::Error;

/// Dense integer polynomial in alpha; the entry/determinant ring of the
/// symbolic mode. Coefficient `i` multiplies `alpha^i`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaPoly {
    coeffs: Vec<BigInt>,
}

impl AlphaPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        AlphaPoly { coeffs }
    }

    pub fn monomial(coeff: BigInt, power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = coeff;
        AlphaPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `Some((coeff, power))` when the polynomial has a single term.
    pub fn as_monomial(&self) -> Option<(BigInt, usize)> {
        let nonzero: Vec<usize> = (0..self.coeffs.len())
            .filter(|&i| !self.coeffs[i].is_zero())
            .collect();
        match nonzero.as_slice() {
            [i] => Some((self.coeffs[*i].clone(), *i)),
            _ => None,
        }
    }
}

impl Ring for AlphaPoly {
    fn zero() -> Self {
        AlphaPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        AlphaPoly::monomial(BigInt::one(), 0)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &AlphaPoly, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
        AlphaPoly::new((0..n).map(|i| get(self, i) + get(rhs, i)).collect())
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Ring::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        AlphaPoly::new(out)
    }
    fn neg(&self) -> Self {
        AlphaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn from_integer(n: &BigInt) -> Self {
        AlphaPoly::new(vec![n.clone()])
    }
}

impl ExactDiv for AlphaPoly {
    /// Long division over `Z[alpha]`, defined only when exact.
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Ring::zero());
        }
        let dr = rhs.degree().unwrap();
        let lead = &rhs.coeffs[dr];
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dr)];
        while let Some(dn) = rem.degree() {
            if dn < dr {
                return None;
            }
            let (q, r) = num_integer::Integer::div_rem(&rem.coeffs[dn], lead);
            if !r.is_zero() {
                return None;
            }
            quot[dn - dr] = q.clone();
            let sub = rhs.mul(&AlphaPoly::monomial(q, dn - dr));
            rem = rem.sub(&sub);
        }
        Some(AlphaPoly::new(quot))
    }
}

/// The banded matrix of the twisted operator on `{1, x, .., x^d}`, entries
/// stored as exact integer monomials in alpha. Row `i`, column `j` (1-based)
/// is nonzero only for `j` in `{i-1, i, i+1, i+2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct NablaMatrix {
    d: usize,
    entries: Vec<(BigInt, usize)>, // (coefficient, alpha power), row-major
}

impl NablaMatrix {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn size(&self) -> usize {
        self.d + 1
    }

    /// Entry at 1-based `(i, j)` as `(coefficient, alpha power)`.
    pub fn entry(&self, i: usize, j: usize) -> &(BigInt, usize) {
        &self.entries[(i - 1) * self.size() + (j - 1)]
    }

    /// The matrix at `alpha = 1`.
    pub fn to_int_matrix(&self) -> Matrix<BigInt> {
        let n = self.size();
        Matrix::from_fn(n, n, |i, j| self.entries[i * n + j].0.clone())
    }

    /// The matrix over `Z[alpha]`.
    pub fn to_alpha_matrix(&self) -> Matrix<AlphaPoly> {
        let n = self.size();
        Matrix::from_fn(n, n, |i, j| {
            let (c, p) = &self.entries[i * n + j];
            if c.is_zero() {
                Ring::zero()
            } else {
                AlphaPoly::monomial(c.clone(), *p)
            }
        })
    }

    /// The trailing `p x p` block (1-based rows/columns `d-p+2 .. d+1`) at
    /// `alpha = 1`.
    pub fn trailing_block(&self, p: usize) -> Matrix<BigInt> {
        assert!(p <= self.size());
        let start = self.size() - p;
        Matrix::from_fn(p, p, |i, j| {
            self.entries[(start + i) * self.size() + (start + j)].0.clone()
        })
    }
}

/// The five-case band rule, 1-based indices.
fn band_entry(d: usize, i: usize, j: usize) -> (BigInt, usize) {
    let d = d as i64;
    let (i, j) = (i as i64, j as i64);
    if j == i {
        (BigInt::from(3 * (d + 1) * (d + 1)), 2)
    } else if j == i - 1 {
        (BigInt::from(-4 * (d - i + 2) * (d + 1)), 3)
    } else if j == i + 1 {
        (BigInt::from(-3 * i * (d + 1)), 1)
    } else if j == i + 2 {
        (BigInt::from(i * (i + 1)), 0)
    } else {
        (BigInt::zero(), 0)
    }
}

/// Builds the banded matrix for a given `d` directly from the band rule.
pub fn build_matrix(d: usize) -> NablaMatrix {
    let n = d + 1;
    let mut entries = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            entries.push(band_entry(d, i, j));
        }
    }
    NablaMatrix { d, entries }
}

/// Rebuilds the same matrix through the operator action: the twisted
/// operator with symbolic alpha is applied to `{1, x, .., x^d}` over the
/// scalar field `Q(alpha)`. Errors when an entry is not an integer monomial
/// in alpha or when the action leaves degree-`d` polynomials (either would
/// be an implementation fault in the operator layer or the band rule).
pub fn build_from_operator(d: usize) -> Result<NablaMatrix, Error> {
    // scalars: rational functions in alpha; x-polynomials over them
    type FAlpha = RationalFunction<BigRational>;
    let alpha =
        |p: usize| FAlpha::from_poly(Polynomial::monomial(<BigRational as Ring>::one(), p));
    let int = |n: i64| FAlpha::from_int(n);
    let di = d as i64;

    let x2 = Polynomial::<FAlpha>::monomial(<FAlpha as Ring>::one(), 2);
    let x1 = Polynomial::<FAlpha>::monomial(<FAlpha as Ring>::one(), 1);
    // D coefficient: 4(d+1) a^3 x^2 - 3(d+1) a
    let c1 = x2
        .scale(&int(4 * (di + 1)).mul(&alpha(3)))
        .sub(&Polynomial::constant(int(3 * (di + 1)).mul(&alpha(1))));
    // constant coefficient: -4d(d+1) a^3 x + 3(d+1)^2 a^2
    let c0 = x1.scale(&int(-4 * di * (di + 1)).mul(&alpha(3))).add(
        &Polynomial::constant(int(3 * (di + 1) * (di + 1)).mul(&alpha(2))),
    );
    let twisted = DiffOp::new(vec![c0, c1, Polynomial::one()]);

    let m = twisted.matrix_on_degree(d);
    if m.rows() != d + 1 {
        return Err(Error::OutOfDomain("operator action left the degree-d space"));
    }
    let mut entries = Vec::with_capacity((d + 1) * (d + 1));
    for i in 0..=d {
        for j in 0..=d {
            let v = m.get(i, j);
            if v.is_zero() {
                entries.push((BigInt::zero(), 0));
                continue;
            }
            let poly = v.as_polynomial().ok_or(Error::NonPolynomialResult)?;
            let mut mono = None;
            for (p, c) in poly.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                if mono.is_some() || !c.is_integer() {
                    return Err(Error::OutOfDomain(
                        "matrix entry is not an integer monomial in alpha",
                    ));
                }
                mono = Some((c.to_integer(), p));
            }
            entries.push(mono.expect("nonzero entry has a nonzero coefficient"));
        }
    }
    Ok(NablaMatrix { d, entries })
}

/// `l_k = (k+1)(d-k)`, defined as a formula for any integer `k`.
fn lambda_at(d: usize, k: i64) -> BigInt {
    BigInt::from(k + 1) * BigInt::from(d as i64 - k)
}

/// `y = 3(d+1)^2`.
fn y_of(d: usize) -> BigInt {
    let dp1 = BigInt::from(d as u64 + 1);
    BigInt::from(3) * &dp1 * &dp1
}

/// The trailing minors `nabla_0 .. nabla_{d+1}` of the banded matrix at
/// `alpha = 1`, together with the `l_k` weights entering the recurrence.
#[derive(Debug, Clone, PartialEq)]
pub struct MinorSequence {
    d: usize,
    y: BigInt,
    lambdas: Vec<BigInt>,
    minors: Vec<BigInt>,
}

impl MinorSequence {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    /// `l_k` for `k = 0 .. d-1`.
    pub fn lambdas(&self) -> &[BigInt] {
        &self.lambdas
    }

    /// `nabla_p` for `p = 0 .. d+1`.
    pub fn minors(&self) -> &[BigInt] {
        &self.minors
    }

    pub fn minor(&self, p: usize) -> &BigInt {
        &self.minors[p]
    }

    /// `mu(d) = nabla_{d+1}`.
    pub fn mu(&self) -> &BigInt {
        self.minors.last().expect("sequence is never empty")
    }

    fn with_minors(d: usize, minors: Vec<BigInt>) -> Self {
        MinorSequence {
            d,
            y: y_of(d),
            lambdas: (0..d as i64).map(|k| lambda_at(d, k)).collect(),
            minors,
        }
    }
}

/// Minor sequence by the seeded three-term recurrence: `nabla_0 = 1`,
/// `nabla_1 = y`, `nabla_2 = (y - 4 l_0) y`, then for `p = 2 .. d`
/// `nabla_{p+1} = (d+1)^2 [3 nabla_p - 12 l_{p-1} nabla_{p-1}
///  + 16 l_{p-1} l_{p-2} nabla_{p-2}]`.
pub fn minors_recurrence(d: usize) -> MinorSequence {
    let y = y_of(d);
    let dp1_sq = BigInt::from(d as u64 + 1).pow(2);
    let mut minors = Vec::with_capacity(d + 2);
    minors.push(BigInt::one());
    minors.push(y.clone());
    if d >= 1 {
        let l0 = lambda_at(d, 0);
        minors.push((&y - BigInt::from(4) * l0) * &y);
    }
    for p in 2..=d {
        let lp1 = lambda_at(d, p as i64 - 1);
        let lp2 = lambda_at(d, p as i64 - 2);
        let bracket = BigInt::from(3) * &minors[p]
            - BigInt::from(12) * &lp1 * &minors[p - 1]
            + BigInt::from(16) * &lp1 * &lp2 * &minors[p - 2];
        minors.push(&dp1_sq * bracket);
    }
    MinorSequence::with_minors(d, minors)
}

/// A single trailing minor `nabla_p` as an exact determinant
/// (fraction-free elimination on the trailing `p x p` block).
pub fn trailing_minor(d: usize, p: usize) -> BigInt {
    build_matrix(d).trailing_block(p).det_bareiss()
}

/// Minor sequence with every `nabla_p` computed as an exact determinant by
/// fraction-free elimination; the independent oracle for the recurrence.
pub fn minors_direct(d: usize) -> MinorSequence {
    let matrix = build_matrix(d);
    let minors = (0..=d + 1)
        .map(|p| matrix.trailing_block(p).det_bareiss())
        .collect();
    MinorSequence::with_minors(d, minors)
}

/// Minor sequence by memoized cofactor expansion; a second, division-free
/// oracle for small `d` (the block size is capped at 16 columns).
pub fn minors_cofactor(d: usize) -> MinorSequence {
    let matrix = build_matrix(d);
    let minors = (0..=d + 1)
        .map(|p| matrix.trailing_block(p).det_cofactor())
        .collect();
    MinorSequence::with_minors(d, minors)
}

/// `mu(d)`, the integer with `nabla(d, alpha) = mu(d) alpha^(2(d+1))`.
pub fn mu(d: usize) -> BigInt {
    minors_recurrence(d).mu().clone()
}

/// Result of checking the strict inequality chain for one `d`.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    pub d: usize,
    /// First `p` in `1 .. d-1` with `nabla_{p+1} <= 4 l_p nabla_p`, if any.
    pub chain_violation: Option<usize>,
    /// Whether `3 nabla_{d+1} > 16 y l_{d-1} l_{d-2} nabla_{d-2}` (checked
    /// for `d >= 2`; trivially true below).
    pub terminal_ok: bool,
    /// Number of strict inequalities checked.
    pub checks: usize,
}

impl InequalityReport {
    pub fn passed(&self) -> bool {
        self.chain_violation.is_none() && self.terminal_ok
    }
}

/// Checks `nabla_{p+1} > 4 l_p nabla_p` for `p = 1 .. d-1` and the terminal
/// bound `3 nabla_{d+1} > 16 y l_{d-1} l_{d-2} nabla_{d-2}`, all in exact
/// integers (the `16/3` form is cleared of the denominator). The range is
/// empty for `d <= 1` and the report trivially passes.
pub fn verify_inequalities(d: usize) -> InequalityReport {
    let seq = minors_recurrence(d);
    verify_inequalities_of(&seq)
}

/// Same check against an already-computed sequence.
pub fn verify_inequalities_of(seq: &MinorSequence) -> InequalityReport {
    let d = seq.d();
    let mut checks = 0;
    let mut chain_violation = None;
    for p in 1..d {
        checks += 1;
        let lhs = seq.minor(p + 1);
        let rhs = BigInt::from(4) * &seq.lambdas()[p] * seq.minor(p);
        if *lhs <= rhs {
            chain_violation = Some(p);
            break;
        }
    }
    let terminal_ok = if d >= 2 {
        checks += 1;
        let lhs = BigInt::from(3) * seq.minor(d + 1);
        let rhs = BigInt::from(16)
            * seq.y()
            * &seq.lambdas()[d - 1]
            * &seq.lambdas()[d - 2]
            * seq.minor(d - 2);
        lhs > rhs
    } else {
        true
    };
    InequalityReport {
        d,
        chain_violation,
        terminal_ok,
        checks,
    }
}

/// `h(p) = y^2 - y (4 l_p + 4 l_{p-1} + 8 l_{p-2})
///        + 32 l_p l_{p-2} + 16 l_{p-1} l_{p-2}`,
/// the quantity whose positivity rules out a first chain violation.
/// Domain: `2 <= p <= d-1`.
pub fn h_eval(d: usize, p: usize) -> Result<BigInt, Error> {
    if p < 2 || p + 1 > d {
        return Err(Error::OutOfDomain("h requires 2 <= p <= d-1"));
    }
    Ok(h_formula(d, p as i64))
}

fn h_formula(d: usize, p: i64) -> BigInt {
    let y = y_of(d);
    let lp = lambda_at(d, p);
    let lp1 = lambda_at(d, p - 1);
    let lp2 = lambda_at(d, p - 2);
    &y * &y - &y * (BigInt::from(4) * (&lp + &lp1) + BigInt::from(8) * &lp2)
        + BigInt::from(32) * &lp * &lp2
        + BigInt::from(16) * &lp1 * &lp2
}

/// `h` at the three central points `p = (d-1)/2, (d+1)/2, (d+3)/2` for odd
/// `d`, as `(p, h(p))` pairs in that order. These admit the closed forms
/// `56d^2 + 112d + 120`, `16d^2 + 32d + 48` and `24(d+1)^2`.
pub fn h_closed_forms(d: usize) -> Result<[(i64, BigInt); 3], Error> {
    if d.is_multiple_of(2) {
        return Err(Error::OutOfDomain("closed forms require odd d"));
    }
    let di = d as i64;
    let ps = [(di - 1) / 2, (di + 1) / 2, (di + 3) / 2];
    Ok(ps.map(|p| (p, h_formula(d, p))))
}

/// One verification failure surfaced by [`sweep`].
#[derive(Debug, Clone, PartialEq)]
pub enum SweepFailure {
    MuZero { d: usize },
    ParityViolation { d: usize },
    ChainViolation { d: usize, p: usize },
    TerminalViolation { d: usize },
}

/// Per-`d` outcome row of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub d: usize,
    pub mu_nonzero: bool,
    /// `Some` only for even `d`.
    pub parity_ok: Option<bool>,
    pub chain_ok: bool,
}

/// Batch verification outcome over `d = 0 .. d_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub d_max: usize,
    pub rows: Vec<SweepRow>,
    pub failures: Vec<SweepFailure>,
    /// Decimal digits of the largest minor encountered.
    pub max_digits: usize,
    pub parity_checked: usize,
    pub inequality_checks: usize,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every `d <= d_max`: `mu(d) != 0`; `mu(d)` odd when `d` is even; the
/// full inequality chain and terminal bound when `d >= 2`. Any violation is
/// reported, never suppressed.
pub fn sweep(d_max: usize) -> SweepReport {
    let mut failures = Vec::new();
    let mut rows = Vec::with_capacity(d_max + 1);
    let mut max_digits = 0usize;
    let mut parity_checked = 0;
    let mut inequality_checks = 0;
    for d in 0..=d_max {
        let seq = minors_recurrence(d);
        let digits = seq
            .minors()
            .iter()
            .map(|m| m.abs().to_str_radix(10).len())
            .max()
            .unwrap_or(1);
        max_digits = max_digits.max(digits);

        let mu_nonzero = !seq.mu().is_zero();
        if !mu_nonzero {
            failures.push(SweepFailure::MuZero { d });
        }
        let parity_ok = if d % 2 == 0 {
            parity_checked += 1;
            let odd = (seq.mu() % BigInt::from(2)).abs() == BigInt::one();
            if !odd {
                failures.push(SweepFailure::ParityViolation { d });
            }
            Some(odd)
        } else {
            None
        };
        let ineq = verify_inequalities_of(&seq);
        inequality_checks += ineq.checks;
        if let Some(p) = ineq.chain_violation {
            failures.push(SweepFailure::ChainViolation { d, p });
        }
        if !ineq.terminal_ok {
            failures.push(SweepFailure::TerminalViolation { d });
        }
        rows.push(SweepRow {
            d,
            mu_nonzero,
            parity_ok,
            chain_ok: ineq.passed(),
        });
    }
    SweepReport {
        d_max,
        rows,
        failures,
        max_digits,
        parity_checked,
        inequality_checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn band_rule_small_cases() {
        // d = 0: single entry 3a^2
        let m0 = build_matrix(0);
        assert_eq!(m0.entry(1, 1), &(int(3), 2));
        // d = 1: [[12a^2, -6a], [-8a^3, 12a^2]]
        let m1 = build_matrix(1);
        assert_eq!(m1.entry(1, 1), &(int(12), 2));
        assert_eq!(m1.entry(1, 2), &(int(-6), 1));
        assert_eq!(m1.entry(2, 1), &(int(-8), 3));
        assert_eq!(m1.entry(2, 2), &(int(12), 2));
        // d = 2: second superdiagonal entry (1,3) = 1*2
        let m2 = build_matrix(2);
        assert_eq!(m2.entry(1, 3), &(int(2), 0));
        // band sparsity
        let m5 = build_matrix(5);
        for i in 1..=6usize {
            for j in 1..=6usize {
                let off_band = (j as i64) < (i as i64) - 1 || (j as i64) > (i as i64) + 2;
                assert_eq!(m5.entry(i, j).0.is_zero(), off_band, "({}, {})", i, j);
            }
        }
    }

    #[test]
    fn operator_matrix_matches_band_rule() {
        for d in 0..=10 {
            let from_op = build_from_operator(d).unwrap();
            assert_eq!(from_op, build_matrix(d), "d = {}", d);
        }
    }

    #[test]
    fn recurrence_matches_determinants() {
        for d in 0..=12 {
            let rec = minors_recurrence(d);
            let dir = minors_direct(d);
            assert_eq!(rec, dir, "d = {}", d);
        }
        for d in 0..=6 {
            assert_eq!(minors_recurrence(d), minors_cofactor(d), "d = {}", d);
        }
    }

    #[test]
    fn second_minor_closed_form() {
        // nabla_2 = 3(d+1)^2 (3d^2 + 2d + 3)
        for d in 1..=40usize {
            let di = d as i64;
            let expect = int(3) * int((di + 1) * (di + 1)) * int(3 * di * di + 2 * di + 3);
            assert_eq!(minors_recurrence(d).minor(2), &expect, "d = {}", d);
            assert_eq!(trailing_minor(d, 2), expect, "d = {}", d);
        }
        // d = 1: 144 - 48 = 96
        assert_eq!(trailing_minor(1, 2), int(96));
    }

    #[test]
    fn third_minor_closed_form() {
        // nabla_3 = y (y^2 - (4 l_0 + 4 l_1) y + (16/3) l_0 l_1), an exact
        // integer because 3 divides y
        for d in 2..=30usize {
            let seq = minors_recurrence(d);
            let y = BigRational::from_integer(seq.y().clone());
            let l0 = BigRational::from_integer(seq.lambdas()[0].clone());
            let l1 = BigRational::from_integer(seq.lambdas()[1].clone());
            let four = BigRational::from_integer(int(4));
            let sixteen_thirds = BigRational::new(int(16), int(3));
            let expect =
                &y * (&y * &y - (&four * &l0 + &four * &l1) * &y + sixteen_thirds * l0 * l1);
            assert!(expect.is_integer());
            assert_eq!(seq.minor(3), &expect.to_integer(), "d = {}", d);
        }
    }

    #[test]
    fn smallest_sequences() {
        let s0 = minors_recurrence(0);
        assert_eq!(s0.minors(), &[int(1), int(3)]);
        assert_eq!(mu(0), int(3));
        assert_eq!(mu(1), int(96));
    }

    #[test]
    fn mu_parity_on_even_d() {
        for d in (0..=200usize).step_by(2) {
            let m = mu(d);
            assert_eq!((m % int(2)).abs(), int(1), "d = {}", d);
        }
    }

    #[test]
    fn homogeneity_in_alpha() {
        // symbolic determinant is mu(d) * alpha^(2(d+1))
        for d in 0..=8usize {
            let det = build_matrix(d).to_alpha_matrix().det_cofactor();
            let expect = AlphaPoly::monomial(mu(d), 2 * (d + 1));
            assert_eq!(det, expect, "d = {}", d);
        }
    }

    #[test]
    fn lambda_bounds() {
        // d <= l_k <= (d+1)^2 / 2 for k in 0..d
        for d in 1..=60usize {
            let seq = minors_recurrence(d);
            let bound_num = int((d as i64 + 1) * (d as i64 + 1));
            for l in seq.lambdas() {
                assert!(l >= &int(d as i64));
                assert!(l * int(2) <= bound_num);
            }
        }
    }

    #[test]
    fn inequality_chain_small_d() {
        // d = 3: both chain checks hold
        let r = verify_inequalities(3);
        assert!(r.passed());
        assert_eq!(r.checks, 3); // p = 1, 2 and the terminal bound
        // d = 2 (even) passes and mu is odd
        let r = verify_inequalities(2);
        assert!(r.passed());
        assert_eq!((mu(2) % int(2)).abs(), int(1));
        // d = 1: empty chain range, trivially passes
        let r = verify_inequalities(1);
        assert!(r.passed());
        assert_eq!(r.checks, 0);
        assert_eq!(verify_inequalities(0).checks, 0);
    }

    #[test]
    fn h_evaluation_and_domain() {
        assert!(h_eval(5, 1).is_err());
        assert!(h_eval(5, 5).is_err());
        assert!(h_eval(5, 2).is_ok());
        for d in (1..=99usize).step_by(2) {
            let [low, mid, high] = h_closed_forms(d).unwrap();
            let di = d as i64;
            assert_eq!(low.1, int(56 * di * di + 112 * di + 120), "d = {}", d);
            assert_eq!(mid.1, int(16 * di * di + 32 * di + 48), "d = {}", d);
            assert_eq!(high.1, int(24) * int((di + 1) * (di + 1)), "d = {}", d);
        }
        assert!(h_closed_forms(4).is_err());
    }

    #[test]
    fn h_minimum_is_central_and_positive() {
        for d in (3..=99usize).step_by(2) {
            let (argmin, min) = (2..d)
                .map(|p| (p, h_eval(d, p).unwrap()))
                .min_by(|a, b| a.1.cmp(&b.1))
                .unwrap();
            assert!(min.is_positive(), "d = {}", d);
            assert_eq!(argmin, (d + 1) / 2, "d = {}", d);
        }
    }

    #[test]
    fn sweep_small_ranges() {
        let r = sweep(10);
        assert!(r.passed());
        assert_eq!(r.rows.len(), 11);
        assert!(r.max_digits > 1);
        let r0 = sweep(0);
        assert!(r0.passed());
        assert_eq!(r0.rows.len(), 1);
        assert_eq!(r0.parity_checked, 1);
        assert_eq!(r0.inequality_checks, 0);
    }

    #[test]
    fn alpha_poly_exact_division() {
        // (a^2 - 1) / (a - 1) = a + 1
        let n = AlphaPoly::new(vec![int(-1), int(0), int(1)]);
        let d = AlphaPoly::new(vec![int(-1), int(1)]);
        assert_eq!(n.exact_div(&d), Some(AlphaPoly::new(vec![int(1), int(1)])));
        // inexact: (a^2 + 1) / (a - 1)
        let n2 = AlphaPoly::new(vec![int(1), int(0), int(1)]);
        assert_eq!(n2.exact_div(&d), None);
        // integer-inexact leading coefficient: a^2 / (2a)
        let n3 = AlphaPoly::monomial(int(1), 2);
        let d3 = AlphaPoly::monomial(int(2), 1);
        assert_eq!(n3.exact_div(&d3), None);
    }
}
