//! Truncated univariate power series `c_0 + c_1 t + ... + c_N t^N`.

use std::fmt;

use num_traits::Zero;

use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct UniSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniSeries<R> {
    /// Series truncated at `order` (coefficients `0..=order` kept), padded with zeros.
    pub fn from_coeffs(mut coeffs: Vec<R>, order: usize) -> Self {
        coeffs.resize(order + 1, R::zero());
        coeffs.truncate(order + 1);
        UniSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::from_coeffs(Vec::new(), order)
    }

    pub fn constant(c: R, order: usize) -> Self {
        Self::from_coeffs(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    /// `c * t^k`.
    pub fn monomial(c: R, k: usize, order: usize) -> Self {
        let mut v = vec![R::zero(); order + 1];
        if k <= order {
            v[k] = c;
        }
        UniSeries { coeffs: v }
    }

    /// The series variable `t` itself.
    pub fn variable(order: usize) -> Self {
        Self::monomial(R::one(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.clone(), order)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn common_order(&self, other: &Self) -> usize {
        self.order().min(other.order())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        UniSeries {
            coeffs: (0..=n).map(|k| self.coeffs[k].clone() + other.coeffs[k].clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        UniSeries {
            coeffs: (0..=n).map(|k| self.coeffs[k].clone() - other.coeffs[k].clone()).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        UniSeries { coeffs: self.coeffs.iter().cloned().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &R) -> Self {
        UniSeries { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.common_order(other);
        let mut out = vec![R::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        UniSeries { coeffs: out }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.order();
        let c0 = self.coeffs[0].clone();
        if c0.is_zero() {
            return Err(Error::DivisionByZero("series with zero constant term".into()));
        }
        let mut inv: Vec<R> = Vec::with_capacity(n + 1);
        inv.push(R::one().exact_div(&c0)?);
        for k in 1..=n {
            let mut s = R::zero();
            for j in 1..=k {
                s = s + self.coeffs[j].clone() * inv[k - j].clone();
            }
            inv.push((-s).exact_div(&c0)?);
        }
        Ok(UniSeries { coeffs: inv })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Divides by `t^k`; the first `k` coefficients must vanish. Order drops by `k`.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible(format!("series not divisible by t^{k}")));
        }
        Ok(UniSeries { coeffs: self.coeffs[k..].to_vec() })
    }

    /// Multiplies by `t^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let n = self.order();
        let mut v = vec![R::zero(); k.min(n + 1)];
        v.extend(self.coeffs.iter().take((n + 1).saturating_sub(k)).cloned());
        UniSeries { coeffs: v }
    }

    /// Formal derivative; order drops by one.
    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(0);
        }
        UniSeries {
            coeffs: (1..=n).map(|k| R::from_i64(k as i64) * self.coeffs[k].clone()).collect(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniSeries<S> {
        UniSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<R: Ring> fmt::Debug for UniSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniSeries{:?}", self.coeffs)
    }
}

/// Polynomial in an unknown `y` whose coefficients are series: `sum_k c_k(t) y^k`.
#[derive(Clone, Debug)]
pub struct SeriesPolynomial<R: Ring> {
    pub coeffs: Vec<UniSeries<R>>,
}

impl<R: Ring> SeriesPolynomial<R> {
    pub fn eval(&self, y: &UniSeries<R>) -> UniSeries<R> {
        let order = y.order();
        let mut acc = UniSeries::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(y).add(&c.truncate(order));
        }
        acc
    }

    pub fn eval_derivative(&self, y: &UniSeries<R>) -> UniSeries<R> {
        let order = y.order();
        let mut acc = UniSeries::zero(order);
        for (k, c) in self.coeffs.iter().enumerate().skip(1).rev() {
            acc = acc.mul(y).add(&c.truncate(order).scale(&R::from_i64(k as i64)));
        }
        acc
    }
}

/// Newton iteration for a root of `F(y) = 0` with `F'(y0)` invertible at `t = 0`.
///
/// Each step doubles the number of correct coefficients; the final residual is
/// checked to vanish through `order`.
pub fn newton_solve<R: Ring>(
    f: &SeriesPolynomial<R>,
    y0: UniSeries<R>,
    order: usize,
) -> Result<UniSeries<R>> {
    let mut y = y0.truncate(order);
    let mut correct = 1usize;
    loop {
        let residual = f.eval(&y);
        if residual.is_zero() {
            return Ok(y);
        }
        if correct > order + 1 {
            return Err(Error::Internal("Newton iteration did not converge".into()));
        }
        let step = residual.div(&f.eval_derivative(&y))?;
        y = y.sub(&step);
        correct *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, Rational};

    fn s(v: &[i64], order: usize) -> UniSeries<Rational> {
        UniSeries::from_coeffs(v.iter().map(|&c| int(c)).collect(), order)
    }

    #[test]
    fn geometric_inverse() {
        let one_minus_t = s(&[1, -1], 6);
        assert_eq!(one_minus_t.inverse().unwrap(), s(&[1, 1, 1, 1, 1, 1, 1], 6));
    }

    #[test]
    fn newton_on_catalan_equation() {
        // y = 1 + t y^2 gives the Catalan numbers.
        let order = 8;
        let f = SeriesPolynomial {
            coeffs: vec![s(&[1], order), s(&[-1], order), s(&[0, 1], order)],
        };
        let y = newton_solve(&f, UniSeries::one(order), order).unwrap();
        assert_eq!(y, s(&[1, 1, 2, 5, 14, 42, 132, 429, 1430], order));
    }

    #[test]
    fn shifts() {
        let a = s(&[0, 0, 3, 4], 3);
        assert_eq!(a.shift_down(2).unwrap(), s(&[3, 4], 1));
        assert!(a.shift_down(3).is_err());
        assert_eq!(s(&[1, 2, 3], 2).shift_up(1), s(&[0, 1, 2], 2));
        assert_eq!(s(&[5, 1, 2], 2).derivative(), s(&[1, 4], 1));
    }
}
