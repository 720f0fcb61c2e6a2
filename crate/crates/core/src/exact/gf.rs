//! Infinite matrices given by bivariate rational generating functions `P(z,w)/Q(z,w)`.

use std::collections::BTreeMap;

use super::matrix::ExactMatrix;
use super::ring::Ring;
use crate::error::{Error, Result};

/// Polynomial in `z` and `w` with ring coefficients; key `(i, j)` is `z^i w^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly<R: Ring> {
    terms: BTreeMap<(usize, usize), R>,
}

impl<R: Ring> BiPoly<R> {
    pub fn zero() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: R) -> Self {
        Self::term(0, 0, c)
    }

    pub fn one() -> Self {
        Self::constant(R::one())
    }

    pub fn term(i: usize, j: usize, c: R) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn z() -> Self {
        Self::term(1, 0, R::one())
    }

    pub fn w() -> Self {
        Self::term(0, 1, R::one())
    }

    pub fn zw() -> Self {
        Self::term(1, 1, R::one())
    }

    pub fn from_terms<I: IntoIterator<Item = ((usize, usize), R)>>(items: I) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in items {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: R) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(R::zero);
        *e = e.clone() + c;
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> R {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(R::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &R)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-R::one()))
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, a)| (k, a.clone() * c.clone())))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, a.clone() * b.clone());
            }
        }
        out
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> BiPoly<S> {
        BiPoly::from_terms(self.terms.iter().map(|(&k, a)| (k, f(a))))
    }

    pub fn try_map<S: Ring>(&self, f: impl Fn(&R) -> Result<S>) -> Result<BiPoly<S>> {
        let mut out = BiPoly::zero();
        for (&(i, j), a) in &self.terms {
            out.add_term(i, j, f(a)?);
        }
        Ok(out)
    }
}

/// The generating function `P/Q` of an infinite matrix `M[i][j] = [z^i w^j] P/Q`.
#[derive(Clone, Debug, PartialEq)]
pub struct GfMatrixSpec<R: Ring> {
    pub numerator: BiPoly<R>,
    pub denominator: BiPoly<R>,
}

impl<R: Ring> GfMatrixSpec<R> {
    pub fn new(numerator: BiPoly<R>, denominator: BiPoly<R>) -> Self {
        GfMatrixSpec { numerator, denominator }
    }

    /// Coefficient array `F[i][j]` for `i < rows`, `j < cols`.
    ///
    /// Uses the recurrence `Q00 F_ij = P_ij - sum_{(a,b) != (0,0)} Q_ab F_{i-a, j-b}`.
    pub fn coefficients(&self, rows: usize, cols: usize) -> Result<ExactMatrix<R>> {
        let q00 = self.denominator.coeff(0, 0);
        if q00.is_zero() {
            return Err(Error::NonInvertibleDenominator);
        }
        let qterms: Vec<((usize, usize), R)> = self
            .denominator
            .terms()
            .filter(|(&k, _)| k != (0, 0))
            .map(|(&k, c)| (k, c.clone()))
            .collect();
        let mut f = ExactMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let mut acc = self.numerator.coeff(i, j);
                for ((a, b), q) in &qterms {
                    if *a <= i && *b <= j {
                        let prev: &R = &f[(i - a, j - b)];
                        if !prev.is_zero() {
                            acc = acc - q.clone() * prev.clone();
                        }
                    }
                }
                f[(i, j)] = acc.exact_div(&q00)?;
            }
        }
        Ok(f)
    }

    /// The `n x n` principal truncation.
    pub fn truncation(&self, n: usize) -> Result<ExactMatrix<R>> {
        if n == 0 {
            return Err(Error::InvalidArgument("truncation size must be at least 1".into()));
        }
        self.coefficients(n, n)
    }

    /// Multiplies the generating function by a polynomial factor.
    pub fn times_numerator(&self, factor: &BiPoly<R>) -> Self {
        GfMatrixSpec { numerator: self.numerator.mul(factor), denominator: self.denominator.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, Rational};

    fn r(n: i64) -> Rational {
        int(n)
    }

    #[test]
    fn binomial_gf() {
        let q = BiPoly::from_terms([((0, 0), r(1)), ((1, 0), r(-1)), ((0, 1), r(-1))]);
        let spec = GfMatrixSpec::new(BiPoly::one(), q);
        let m = spec.truncation(2).unwrap();
        assert_eq!(m.to_rows(), vec![vec![r(1), r(1)], vec![r(1), r(2)]]);
    }

    #[test]
    fn diagonal_gf_is_identity() {
        let q = BiPoly::from_terms([((0, 0), r(1)), ((1, 1), r(-1))]);
        let m = GfMatrixSpec::new(BiPoly::one(), q).truncation(4).unwrap();
        assert_eq!(m, ExactMatrix::identity(4));
    }

    #[test]
    fn zero_constant_denominator() {
        let spec = GfMatrixSpec::new(BiPoly::<Rational>::one(), BiPoly::z());
        assert_eq!(spec.truncation(2), Err(Error::NonInvertibleDenominator));
    }

    #[test]
    fn truncations_are_nested() {
        let q = BiPoly::from_terms([((0, 0), r(2)), ((1, 0), r(-1)), ((1, 1), r(3)), ((0, 2), r(1))]);
        let p = BiPoly::from_terms([((0, 0), r(1)), ((2, 1), r(5))]);
        let spec = GfMatrixSpec::new(p, q);
        let big = spec.truncation(6).unwrap();
        assert_eq!(spec.truncation(4).unwrap(), big.principal(4));
    }
}
