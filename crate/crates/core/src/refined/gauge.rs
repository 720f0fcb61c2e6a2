//! Triangular gauge transformations by the shift matrix.

use crate::error::Result;
use crate::exact::gf::{BiPoly, GfMatrixSpec};
use crate::exact::matrix::ExactMatrix;
use crate::exact::ring::Ring;

/// `(I - c S)` truncated to `n x n`, `S` the shift with ones just below the diagonal.
pub fn lower_shift<R: Ring>(n: usize, c: &R) -> ExactMatrix<R> {
    ExactMatrix::from_fn(n, n, |i, j| {
        if i == j {
            R::one()
        } else if i == j + 1 {
            -c.clone()
        } else {
            R::zero()
        }
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct GaugeReport<R: Ring> {
    pub n: usize,
    pub det: R,
    pub det_left: R,
    pub det_right: R,
    /// The generating-function route `(1 - alpha z) f` and `(1 - beta w) f` gives
    /// the same truncations as multiplying truncated matrices.
    pub truncations_agree: bool,
}

impl<R: Ring> GaugeReport<R> {
    pub fn passed(&self) -> bool {
        self.truncations_agree && self.det_left == self.det && self.det_right == self.det
    }
}

/// Compares `det` of the `n`-truncations of `A`, `(I - alpha S) A` and `A (I - beta S^t)`.
///
/// Products are formed on `(n+1)`-windows and cut back to `n`, since a triangular
/// factor only mixes each row (column) with earlier ones.
pub fn gauge_minor_check<R: Ring>(spec: &GfMatrixSpec<R>, alpha: &R, beta: &R, n: usize) -> Result<GaugeReport<R>> {
    let big = spec.truncation(n + 1)?;
    let left = lower_shift(n + 1, alpha).mul(&big)?.principal(n);
    let right = big.mul(&lower_shift(n + 1, beta).transpose())?.principal(n);
    let left_gf = spec
        .times_numerator(&BiPoly::from_terms([((0, 0), R::one()), ((1, 0), -alpha.clone())]))
        .truncation(n)?;
    let right_gf = spec
        .times_numerator(&BiPoly::from_terms([((0, 0), R::one()), ((0, 1), -beta.clone())]))
        .truncation(n)?;
    Ok(GaugeReport {
        n,
        det: big.principal(n).det()?,
        det_left: left.det()?,
        det_right: right.det()?,
        truncations_agree: left == left_gf && right == right_gf,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat, Rational};
    use crate::refined::formulas::dpp_spec;

    #[test]
    fn zero_alpha_is_trivial() {
        let spec = dpp_spec(&int(2), &int(3));
        let r = gauge_minor_check(&spec, &Rational::from_i64(0), &Rational::from_i64(0), 4).unwrap();
        assert!(r.passed());
    }

    #[test]
    fn dpp_spec_under_gauge() {
        let spec = dpp_spec(&rat(2, 3), &rat(-1, 4));
        for n in 1..=6 {
            assert!(gauge_minor_check(&spec, &rat(5, 7), &rat(-3, 2), n).unwrap().passed());
        }
    }
}
