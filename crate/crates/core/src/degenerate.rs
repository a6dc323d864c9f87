//! Generalized falling factorials, degenerate exponential series, degenerate
//! Bernoulli polynomials and (dimorphic) Mersenne numbers.
//!
//! Every quantity here is a polynomial in the formal variables λ and x. The
//! degenerate Bernoulli polynomials β_n(x) have three independent
//! constructions that the test suites compare against each other:
//!
//! * [`degen_bernoulli_by_series`] divides `e_λ^x(t)` by `(e_λ(t) - 1)/t`;
//! * [`degen_bernoulli_by_binomial_expansion`] expands in the numbers β_k(0);
//! * [`degen_bernoulli_by_mersenne_recurrence`] uses the recurrence driven by
//!   the dimorphic Mersenne numbers.
//!
//! Memo tables are local to each call.

use num::{BigInt, One};

use crate::combinat::binomial_q;
use crate::error::{Error, Result};
use crate::poly::BivarPoly;
use crate::rational::Rational;
use crate::series::TruncSeries;

/// `(base)_{n,λ} = base (base - λ) ... (base - (n-1)λ)`, one for `n = 0`.
pub fn gff(base: &BivarPoly, n: usize) -> BivarPoly {
    (0..n).fold(BivarPoly::one(), |acc, i| acc * step(base, i))
}

/// `gff(base, n)` for every `n <= n_max`.
pub fn gff_table(base: &BivarPoly, n_max: usize) -> Vec<BivarPoly> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(BivarPoly::one());
    for i in 0..n_max {
        let next = &out[i] * &step(base, i);
        out.push(next);
    }
    out
}

fn step(base: &BivarPoly, i: usize) -> BivarPoly {
    base - &BivarPoly::lambda().scale(&Rational::from(i as i64))
}

/// `e_λ^base(t)` through `t^order`: the `t^n` coefficient is `gff(base, n)/n!`.
pub fn degenerate_exp_series(base: &BivarPoly, order: usize) -> TruncSeries {
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(BivarPoly::one());
    for n in 1..=order {
        let inv_n = Rational::new(1, n as i64).expect("n >= 1");
        let next = (&coeffs[n - 1] * &step(base, n - 1)).scale(&inv_n);
        coeffs.push(next);
    }
    TruncSeries::new(coeffs)
}

/// `(e_λ(t) - 1)/t` through `t^order`, built by dropping the constant and
/// shifting, so its constant term is exactly one.
pub fn bernoulli_divisor(order: usize) -> TruncSeries {
    degenerate_exp_series(&BivarPoly::one(), order + 1).shift_down()
}

/// The generating function `t/(e_λ(t) - 1) · e_λ^base(t)` through `t^order`.
pub fn degen_bernoulli_gf(base: &BivarPoly, order: usize) -> TruncSeries {
    degenerate_exp_series(base, order)
        .div_series(&bernoulli_divisor(order))
        .expect("divisor has unit constant term")
}

/// β_n(x) read off the generating function truncated at `order`.
pub fn degen_bernoulli_by_series(n: usize, order: usize) -> Result<BivarPoly> {
    if order < n {
        return Err(Error::OutOfRange { index: n, order });
    }
    degen_bernoulli_gf(&BivarPoly::x(), order).egf_coeff(n)
}

/// β_k(base) for `k <= n_max`, from a single series division.
pub fn degen_bernoulli_table_by_series(base: &BivarPoly, n_max: usize) -> Vec<BivarPoly> {
    let gf = degen_bernoulli_gf(base, n_max);
    (0..=n_max)
        .map(|n| gf.egf_coeff(n).expect("n within order"))
        .collect()
}

/// The degenerate Bernoulli numbers β_k = β_k(0), polynomials in λ only.
pub fn degen_bernoulli_numbers(n_max: usize) -> Vec<BivarPoly> {
    degen_bernoulli_table_by_series(&BivarPoly::zero(), n_max)
}

/// β_n(x) = Σ_k C(n,k) (x)_{n-k,λ} β_k.
pub fn degen_bernoulli_by_binomial_expansion(n: usize) -> BivarPoly {
    let numbers = degen_bernoulli_numbers(n);
    binomial_expansion(n, &numbers, &gff_table(&BivarPoly::x(), n))
}

pub fn degen_bernoulli_table_by_binomial_expansion(n_max: usize) -> Vec<BivarPoly> {
    let numbers = degen_bernoulli_numbers(n_max);
    let falling = gff_table(&BivarPoly::x(), n_max);
    (0..=n_max)
        .map(|n| binomial_expansion(n, &numbers, &falling))
        .collect()
}

fn binomial_expansion(n: usize, numbers: &[BivarPoly], falling: &[BivarPoly]) -> BivarPoly {
    (0..=n)
        .map(|k| (&falling[n - k] * &numbers[k]).scale(&binomial_q(n, k)))
        .sum()
}

/// β_n(x) from the recurrence
/// `β_n(x) = (x+1)_{n,λ} - Σ_{l<n} C(n,l) β_l(x) M_{n-l+1,λ}/(n-l+1)`,
/// starting from β_0(x) = 1.
pub fn degen_bernoulli_by_mersenne_recurrence(n: usize) -> BivarPoly {
    degen_bernoulli_table_by_mersenne_recurrence(n)
        .pop()
        .expect("table is nonempty")
}

pub fn degen_bernoulli_table_by_mersenne_recurrence(n_max: usize) -> Vec<BivarPoly> {
    let shifted = gff_table(&(BivarPoly::x() + BivarPoly::one()), n_max);
    let weights = mersenne_quotients(n_max);
    let mut beta: Vec<BivarPoly> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let tail: BivarPoly = (0..n)
            .map(|l| (&beta[l] * &weights[n - l]).scale(&binomial_q(n, l)))
            .sum();
        beta.push(&shifted[n] - &tail);
    }
    beta
}

/// `M_{m+1,λ}/(m+1)` for `m <= m_max`.
pub fn mersenne_quotients(m_max: usize) -> Vec<BivarPoly> {
    let dimorphic = dimorphic_mersenne_table(m_max + 1);
    (0..=m_max)
        .map(|m| dimorphic[m + 1].scale(&Rational::new(1, (m + 1) as i64).expect("m + 1 > 0")))
        .collect()
}

/// Ordinary Bernoulli number B_n (with B_1 = -1/2) from
/// `Σ_{k<=n} C(n+1,k) B_k = [n = 0]`.
pub fn classical_bernoulli(n: usize) -> Rational {
    classical_bernoulli_table(n)
        .pop()
        .expect("table is nonempty")
}

pub fn classical_bernoulli_table(n_max: usize) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n_max + 1);
    b.push(Rational::one());
    for n in 1..=n_max {
        let s = (0..n).fold(Rational::zero(), |acc, k| {
            acc + binomial_q(n + 1, k) * &b[k]
        });
        b.push(-(s * Rational::new(1, (n + 1) as i64).expect("n + 1 > 0")));
    }
    b
}

/// `M_n = 2^n - 1`.
pub fn mersenne(n: u32) -> BigInt {
    (BigInt::one() << n) - 1
}

/// Coefficients of `z/(1 - 3z + 2z^2)` through `z^order`.
pub fn mersenne_gf_coeffs(order: usize) -> Vec<BigInt> {
    let numerator = TruncSeries::from_ints(&[0, 1], order);
    let denominator = TruncSeries::from_ints(&[1, -3, 2], order);
    numerator
        .div_series(&denominator)
        .expect("denominator starts with 1")
        .coeffs()
        .iter()
        .map(|c| c.as_integer().expect("integer series over a unit divisor"))
        .collect()
}

/// `M_{n,λ} = (2)_{n,λ} - (1)_{n,λ}`, a polynomial in λ alone.
pub fn dimorphic_mersenne(n: usize) -> BivarPoly {
    gff(&BivarPoly::from_int(2), n) - gff(&BivarPoly::one(), n)
}

pub fn dimorphic_mersenne_table(n_max: usize) -> Vec<BivarPoly> {
    let twos = gff_table(&BivarPoly::from_int(2), n_max);
    let ones = gff_table(&BivarPoly::one(), n_max);
    twos.iter().zip(&ones).map(|(a, b)| a - b).collect()
}

/// `e_λ^2(t) - e_λ(t)` through `t^order`.
pub fn dimorphic_mersenne_egf(order: usize) -> TruncSeries {
    &degenerate_exp_series(&BivarPoly::from_int(2), order)
        - &degenerate_exp_series(&BivarPoly::one(), order)
}

/// `(e_λ^2(t) - e_λ(t))/t` through `t^order`; the `t^n` coefficient is
/// `M_{n+1,λ}/((n+1) n!)`.
pub fn dimorphic_mersenne_shifted_egf(order: usize) -> TruncSeries {
    dimorphic_mersenne_egf(order + 1).shift_down()
}
