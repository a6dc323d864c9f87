//! Truncated power series in t with [`BivarPoly`] coefficients.
//!
//! Coefficients are raw: `coeffs[n]` is the coefficient of `t^n`, with no
//! factorial scaling. Exponential generating function values are recovered
//! with [`TruncSeries::egf_coeff`].

use std::ops::{Add, Mul, Neg, Sub};

use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::poly::BivarPoly;
use crate::rational::Rational;

/// A power series `c_0 + c_1 t + ... + c_N t^N + O(t^{N+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    coeffs: Vec<BivarPoly>,
}

impl TruncSeries {
    /// Builds a series of order `coeffs.len() - 1`.
    ///
    /// Panics when `coeffs` is empty.
    pub fn new(coeffs: Vec<BivarPoly>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series needs at least one coefficient"
        );
        TruncSeries { coeffs }
    }

    /// Builds a series of the given order, padding with zeros or truncating.
    pub fn with_order(mut coeffs: Vec<BivarPoly>, order: usize) -> Self {
        coeffs.resize(order + 1, BivarPoly::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncSeries::with_order(Vec::new(), order)
    }

    pub fn constant(c: BivarPoly, order: usize) -> Self {
        TruncSeries::with_order(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        TruncSeries::constant(BivarPoly::one(), order)
    }

    /// Series with integer coefficients.
    pub fn from_ints(values: &[i64], order: usize) -> Self {
        TruncSeries::with_order(
            values.iter().map(|&v| BivarPoly::from_int(v)).collect(),
            order,
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BivarPoly] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BivarPoly> {
        self.coeffs
    }

    /// Raw coefficient of `t^n`.
    pub fn coeff(&self, n: usize) -> Result<&BivarPoly> {
        self.coeffs.get(n).ok_or(Error::OutOfRange {
            index: n,
            order: self.order(),
        })
    }

    /// `n!` times the coefficient of `t^n`.
    pub fn egf_coeff(&self, n: usize) -> Result<BivarPoly> {
        Ok(self.coeff(n)?.scale(&Rational::from_integer(factorial(n))))
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncSeries::with_order(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn scale(&self, c: &BivarPoly) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Drops the constant term and divides by t. The order drops by one.
    ///
    /// Panics on a series of order zero.
    pub fn shift_down(&self) -> Self {
        assert!(self.order() >= 1, "cannot shift a series of order 0");
        TruncSeries {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    /// Multiplies by t. The order grows by one and the constant term is zero.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BivarPoly::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        TruncSeries { coeffs }
    }

    pub fn mul_series(&self, rhs: &TruncSeries) -> TruncSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .filter(|&i| !self.coeffs[i].is_zero() && !rhs.coeffs[n - i].is_zero())
                    .map(|i| &self.coeffs[i] * &rhs.coeffs[n - i])
                    .sum()
            })
            .collect();
        TruncSeries { coeffs }
    }

    /// `self^k` by repeated multiplication; `self^0` is one.
    pub fn pow(&self, k: u32) -> TruncSeries {
        let mut acc = TruncSeries::one(self.order());
        for _ in 0..k {
            acc = acc.mul_series(self);
        }
        acc
    }

    /// Long division: the series `h` with `h * divisor = self` through the
    /// common order. The divisor's constant term must be a nonzero constant.
    pub fn div_series(&self, divisor: &TruncSeries) -> Result<TruncSeries> {
        let lead = divisor.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or_else(|| Error::NonUnitConstant(divisor.coeffs[0].to_string()))?;
        let lead_inv = lead.inv()?;
        let order = self.order().min(divisor.order());
        let mut out: Vec<BivarPoly> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                if divisor.coeffs[k].is_zero() || out[n - k].is_zero() {
                    continue;
                }
                acc = acc - &divisor.coeffs[k] * &out[n - k];
            }
            out.push(acc.scale(&lead_inv));
        }
        Ok(TruncSeries { coeffs: out })
    }

    fn zip_with(&self, rhs: &TruncSeries, f: impl Fn(&BivarPoly, &BivarPoly) -> BivarPoly) -> Self {
        let order = self.order().min(rhs.order());
        TruncSeries {
            coeffs: (0..=order)
                .map(|n| f(&self.coeffs[n], &rhs.coeffs[n]))
                .collect(),
        }
    }
}

impl<'a> Add<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &'a TruncSeries) -> TruncSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl<'a> Sub<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &'a TruncSeries) -> TruncSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl<'a> Mul<&'a TruncSeries> for &'a TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &'a TruncSeries) -> TruncSeries {
        self.mul_series(rhs)
    }
}

impl Neg for &TruncSeries {
    type Output = TruncSeries;
    fn neg(self) -> TruncSeries {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn difference_of_squares() {
        let f = TruncSeries::from_ints(&[1, 1], 2);
        let g = TruncSeries::from_ints(&[1, -1], 2);
        assert_eq!(&f * &g, TruncSeries::from_ints(&[1, 0, -1], 2));
    }

    #[test]
    fn add_zero_is_identity() {
        let f = TruncSeries::new(vec![
            BivarPoly::x(),
            BivarPoly::lambda(),
            BivarPoly::from_int(3),
        ]);
        assert_eq!(&f + &TruncSeries::zero(2), f);
    }

    #[test]
    fn mixed_orders_truncate_to_min() {
        let f = TruncSeries::from_ints(&[1, 2, 3, 4], 3);
        let g = TruncSeries::from_ints(&[1, 1], 1);
        assert_eq!((&f + &g).order(), 1);
        assert_eq!((&f * &g).order(), 1);
        assert_eq!(f.div_series(&g).unwrap().order(), 1);
    }

    #[test]
    fn geometric_series() {
        let h = TruncSeries::one(3)
            .div_series(&TruncSeries::from_ints(&[1, 1], 3))
            .unwrap();
        assert_eq!(h, TruncSeries::from_ints(&[1, -1, 1, -1], 3));
    }

    #[test]
    fn self_division_is_one() {
        let f = TruncSeries::new(vec![
            BivarPoly::from_int(2),
            BivarPoly::x(),
            BivarPoly::lambda() * BivarPoly::x(),
        ]);
        assert_eq!(f.div_series(&f).unwrap(), TruncSeries::one(2));
    }

    #[test]
    fn non_unit_constant_is_rejected() {
        let f = TruncSeries::one(2);
        let g = TruncSeries::from_ints(&[0, 1], 2);
        assert!(matches!(f.div_series(&g), Err(Error::NonUnitConstant(_))));
        let h = TruncSeries::new(vec![BivarPoly::x(), BivarPoly::one()]);
        assert!(matches!(f.div_series(&h), Err(Error::NonUnitConstant(_))));
    }

    #[test]
    fn coefficient_access() {
        let f = TruncSeries::from_ints(&[1, 2, 3], 2);
        assert_eq!(f.coeff(1).unwrap(), &BivarPoly::from_int(2));
        assert_eq!(f.coeff(3), Err(Error::OutOfRange { index: 3, order: 2 }));
        assert_eq!(f.egf_coeff(2).unwrap(), BivarPoly::from_int(6));
    }

    #[test]
    fn shifting() {
        let f = TruncSeries::from_ints(&[5, 1, 2], 2);
        assert_eq!(f.shift_down(), TruncSeries::from_ints(&[1, 2], 1));
        assert_eq!(
            f.shift_down().shift_up(),
            TruncSeries::from_ints(&[0, 1, 2], 2)
        );
    }
}
