//! Determinant formulas for the refined ASM and DPP partition functions.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::gf::{BiPoly, GfMatrixSpec};
use crate::exact::laurent::{MultiLaurent, VarNames};
use crate::exact::rational::Rational;
use crate::exact::ring::Ring;

/// `L = 1 - x z - w - (y - x) z w`.
fn l_poly<R: Ring>(x: &R, y: &R) -> BiPoly<R> {
    BiPoly::from_terms([
        ((0, 0), R::one()),
        ((1, 0), -x.clone()),
        ((0, 1), -R::one()),
        ((1, 1), x.clone() - y.clone()),
    ])
}

fn one_minus<R: Ring>(p: BiPoly<R>) -> BiPoly<R> {
    BiPoly::one().sub(&p)
}

/// `1/(1-zw) + y z / ((1-z) L)`.
pub fn dpp_spec<R: Ring>(x: &R, y: &R) -> GfMatrixSpec<R> {
    let l = l_poly(x, y);
    let one_minus_z = one_minus(BiPoly::z());
    let one_minus_zw = one_minus(BiPoly::zw());
    let num = one_minus_z.mul(&l).add(&BiPoly::term(1, 0, y.clone()).mul(&one_minus_zw));
    let den = one_minus_zw.mul(&one_minus_z).mul(&l);
    GfMatrixSpec::new(num, den)
}

/// `(1-nu)/(1-zw) + nu / L`.
pub fn asm_spec<R: Ring>(x: &R, y: &R, nu: &R) -> GfMatrixSpec<R> {
    let l = l_poly(x, y);
    let one_minus_zw = one_minus(BiPoly::zw());
    let num = l.scale(&(R::one() - nu.clone())).add(&one_minus_zw.scale(nu));
    let den = one_minus_zw.mul(&l);
    GfMatrixSpec::new(num, den)
}

/// `det` of the `n x n` truncation of the DPP matrix.
pub fn zdpp_det<R: Ring>(n: usize, x: &R, y: &R) -> Result<R> {
    if n == 0 {
        return Ok(R::one());
    }
    dpp_spec(x, y).truncation(n)?.det()
}

/// `x nu (1 - nu) - nu - y (1 - nu)`; zero exactly on admissible triples.
pub fn nu_equation<R: Ring>(x: &R, y: &R, nu: &R) -> R {
    let one_minus_nu = R::one() - nu.clone();
    x.clone() * nu.clone() * one_minus_nu.clone() - nu.clone() - y.clone() * one_minus_nu
}

/// `x = (nu + y (1 - nu)) / (nu (1 - nu))`.
pub fn x_from_nu(nu: &Rational, y: &Rational) -> Result<Rational> {
    let one = Rational::from_i64(1);
    if nu.is_zero() || *nu == one {
        return Err(Error::InvalidArgument("nu must avoid 0 and 1".into()));
    }
    let om = &one - nu;
    Ok((nu + y * &om) / (nu * &om))
}

/// The other root of `x nu^2 - (x + y - 1) nu + y = 0`, namely `y / (x nu)`.
pub fn other_root(x: &Rational, y: &Rational, nu: &Rational) -> Result<Rational> {
    if x.is_zero() || nu.is_zero() {
        return Err(Error::DivisionByZero("other root needs x nu != 0".into()));
    }
    Ok(y / (x * nu))
}

/// `det` of the `n x n` truncation of `(1-nu) I + nu G`, for an admissible `(x, y, nu)`.
pub fn zasm_det<R: Ring>(n: usize, x: &R, y: &R, nu: &R) -> Result<R> {
    if nu.is_zero() || nu.is_one() {
        return Err(Error::InvalidArgument("nu must avoid 0 and 1".into()));
    }
    if !nu_equation(x, y, nu).is_zero() {
        return Err(Error::InvalidArgument("(x, y, nu) does not satisfy x nu (1-nu) = nu + y (1-nu)".into()));
    }
    if n == 0 {
        return Ok(R::one());
    }
    asm_spec(x, y, nu).truncation(n)?.det()
}

/// Variables of the generating-function identity.
pub const GF_VARS: [&str; 5] = ["x", "y", "nu", "z", "w"];

/// Outcome of the cross-multiplied generating-function identity.
#[derive(Clone, Debug)]
pub struct GfRelation {
    pub residual: MultiLaurent,
    pub quotient: Option<MultiLaurent>,
    pub names: VarNames,
}

impl GfRelation {
    pub fn holds(&self) -> bool {
        self.quotient.is_some()
    }
}

/// `(1-nu)(1-(1-nu)w) P_DPP - (1-nu-z)(1-w) P_ASM`, which must be a multiple of the nu-equation.
///
/// Both generating functions share the factor `(1-zw) L` after clearing denominators, so the
/// relation between them reduces to this polynomial identity.
pub fn gf_relation() -> GfRelation {
    let names = VarNames::new(GF_VARS);
    let v = MultiLaurent::var;
    let (x, y, nu, z, w) = (v(0), v(1), v(2), v(3), v(4));
    let one = MultiLaurent::from_i64(1);
    let l = &(&(&one - &(&x * &z)) - &w) - &(&(&y - &x) * &(&z * &w));
    let one_minus_zw = &one - &(&z * &w);
    let one_minus_nu = &one - &nu;
    let p_dpp = &(&(&one - &z) * &l) + &(&(&y * &z) * &one_minus_zw);
    let p_asm = &(&one_minus_nu * &l) + &(&nu * &one_minus_zw);
    let lhs = &(&one_minus_nu * &(&one - &(&one_minus_nu * &w))) * &p_dpp;
    let rhs = &(&(&one_minus_nu - &z) * &(&one - &w)) * &p_asm;
    let residual = &lhs - &rhs;
    let e = nu_equation(&x, &y, &nu);
    let quotient = residual.div_exact(&e).ok();
    GfRelation { residual, quotient, names }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn small_cases() {
        assert_eq!(zdpp_det(1, &int(3), &int(5)).unwrap(), int(1));
        let x = x_from_nu(&rat(1, 2), &int(1)).unwrap();
        assert_eq!(x, int(4));
        assert_eq!(zasm_det(1, &x, &int(1), &rat(1, 2)).unwrap(), int(1));
        assert_eq!(zasm_det(3, &x, &int(1), &rat(1, 2)).unwrap(), int(10));
        assert!(zasm_det(3, &int(1), &int(1), &rat(1, 2)).is_err());
        assert!(x_from_nu(&int(1), &int(2)).is_err());
    }

    #[test]
    fn relation_is_a_multiple_of_the_nu_equation() {
        let r = gf_relation();
        assert!(!r.residual.is_zero());
        assert!(r.holds());
    }

    #[test]
    fn second_root_satisfies_the_equation() {
        let (nu, y) = (rat(1, 3), rat(2, 5));
        let x = x_from_nu(&nu, &y).unwrap();
        let nu2 = other_root(&x, &y, &nu).unwrap();
        assert_ne!(nu2, nu);
        assert!(nu_equation(&x, &y, &nu2).is_zero());
    }
}
