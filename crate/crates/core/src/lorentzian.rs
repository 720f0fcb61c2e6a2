//! Transfer matrices of 1+1 dimensional Lorentzian triangulations and their commutation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::gf::{BiPoly, GfMatrixSpec};
use crate::exact::laurent::{Monomial, MultiLaurent};
use crate::exact::matrix::ExactMatrix;
use crate::exact::rational::Rational;
use crate::exact::ring::Ring;
use crate::exact::series::{newton_solve, SeriesPolynomial, UniSeries};

fn check_index(i: i64, j: i64) -> Result<(usize, usize)> {
    if i < 0 || j < 0 {
        return Err(Error::InvalidArgument(format!("negative index ({i}, {j})")));
    }
    Ok((i as usize, j as usize))
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut b = BigInt::one();
    for t in 0..k {
        b = b * (n - t) / (t + 1);
    }
    b
}

/// `C(i + j, i)`.
pub fn bare_entry(i: i64, j: i64) -> Result<BigInt> {
    let (i, j) = check_index(i, j)?;
    Ok(binomial(i + j, i))
}

/// `(a g)^{i+j} sum_{k <= min(i,j)} C(i,k) C(j,k) a^{-2k}`.
pub fn weighted_entry<R: Ring>(i: i64, j: i64, g: &R, a: &R) -> Result<R> {
    let (i, j) = check_index(i, j)?;
    let mut s = R::zero();
    for k in 0..=i.min(j) {
        let c = R::from_i64(i64::try_from(binomial(i, k) * binomial(j, k)).map_err(|_| Error::Internal("binomial overflow".into()))?);
        s = s + c * a.powi(-2 * k as i32)?;
    }
    Ok((a.clone() * g.clone()).pow((i + j) as u32) * s)
}

/// Coefficient of `g^{i+j}` in the weighted entry, as a rational in `a`.
pub fn entry_coefficient(i: usize, j: usize, a: &Rational) -> Result<Rational> {
    weighted_entry(i as i64, j as i64, &Rational::one(), a)
}

/// `1 / (1 - g a (z + w) - g^2 (1 - a^2) z w)`.
pub fn transfer_gf<R: Ring>(g: &R, a: &R) -> GfMatrixSpec<R> {
    let ga = g.clone() * a.clone();
    let zw = g.clone() * g.clone() * (R::one() - a.clone() * a.clone());
    let den = BiPoly::from_terms([((0, 0), R::one()), ((1, 0), -ga.clone()), ((0, 1), -ga), ((1, 1), -zw)]);
    GfMatrixSpec::new(BiPoly::one(), den)
}

/// `(1 - g^2 (1 - a^2)) / (a g)`.
pub fn phi_invariant<R: Ring>(g: &R, a: &R) -> Result<R> {
    let num = R::one() - g.clone() * g.clone() * (R::one() - a.clone() * a.clone());
    let den = a.clone() * g.clone();
    if den.is_zero() {
        return Err(Error::DivisionByZero("phi needs a g != 0".into()));
    }
    num.exact_div(&den)
}

/// Series `g'(g) = (a/a') g + O(g^3)` with `phi(g', a') = phi(g, a)` through `g^order`.
///
/// Solves `a g (1 - (1 - a'^2) g'^2) - a' g' (1 - (1 - a^2) g^2) = 0` by Newton iteration.
pub fn gprime_series(a: &Rational, aprime: &Rational, order: usize) -> Result<UniSeries<Rational>> {
    if a.is_zero() || aprime.is_zero() {
        return Err(Error::InvalidArgument("a and a' must be nonzero".into()));
    }
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let one = Rational::one();
    let c0 = UniSeries::monomial(a.clone(), 1, order);
    let c1 = UniSeries::from_coeffs(vec![-aprime.clone(), Rational::zero(), aprime * (&one - a * a)], order);
    let c2 = UniSeries::monomial(-(a * (&one - aprime * aprime)), 1, order);
    let f = SeriesPolynomial { coeffs: vec![c0, c1, c2] };
    newton_solve(&f, UniSeries::monomial(a / aprime, 1, order), order)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationReport {
    pub size: usize,
    pub order: usize,
    /// Number of `(i, j, m)` whose commutator coefficient is fully determined by the truncation.
    pub complete_positions: usize,
    /// Largest `M` such that every coefficient of degree `<= M` is complete and zero.
    pub max_verified_order: Option<usize>,
    pub all_zero: bool,
    /// First complete nonzero coefficient as `(i, j, degree)`.
    pub first_nonzero: Option<(usize, usize, usize)>,
}

/// The coefficient of total degree `m` at `(i, j)` only involves intermediate indices
/// `k <= (m - i - j) / 2`, since entry `(i, k)` has valuation `i + k`.
fn is_complete(i: usize, j: usize, m: usize, size: usize) -> bool {
    m < i + j || (m - i - j) / 2 < size
}

fn truncate_degree(p: &MultiLaurent, order: usize) -> MultiLaurent {
    MultiLaurent::from_terms(p.terms().filter(|(m, _)| m.degree() <= order as i64).map(|(m, c)| (m.clone(), c.clone())))
}

fn degree_part(p: &MultiLaurent, d: usize) -> MultiLaurent {
    MultiLaurent::from_terms(p.terms().filter(|(m, _)| m.degree() == d as i64).map(|(m, c)| (m.clone(), c.clone())))
}

fn commutator_report(
    left: &ExactMatrix<MultiLaurent>,
    right: &ExactMatrix<MultiLaurent>,
    order: usize,
) -> Result<CommutationReport> {
    let size = left.rows();
    let c = left.mul(right)?.sub(&right.mul(left)?)?;
    let mut complete_positions = 0;
    let mut all_zero = true;
    let mut first_nonzero = None;
    let mut max_verified_order = None;
    let mut prefix_ok = true;
    for m in 0..=order {
        let mut level_ok = true;
        for i in 0..size {
            for j in 0..size {
                if !is_complete(i, j, m, size) {
                    level_ok = false;
                    continue;
                }
                complete_positions += 1;
                if !degree_part(&truncate_degree(&c[(i, j)], order), m).is_zero() {
                    level_ok = false;
                    all_zero = false;
                    first_nonzero.get_or_insert((i, j, m));
                }
            }
        }
        prefix_ok &= level_ok;
        if prefix_ok {
            max_verified_order = Some(m);
        }
    }
    Ok(CommutationReport { size, order, complete_positions, max_verified_order, all_zero, first_nonzero })
}

fn transfer_matrix(size: usize, order: usize, a: &Rational, g: &MultiLaurent) -> Result<ExactMatrix<MultiLaurent>> {
    let rows: Vec<Vec<MultiLaurent>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    if i + j > order {
                        return Ok(MultiLaurent::zero());
                    }
                    let c = entry_coefficient(i, j, a)?;
                    Ok(truncate_degree(&g.pow((i + j) as u32).scale(&c), order))
                })
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    ExactMatrix::from_rows(rows)
}

fn series_to_laurent(s: &UniSeries<Rational>) -> MultiLaurent {
    MultiLaurent::from_terms(s.coeffs().iter().enumerate().map(|(k, c)| (Monomial::var(0, k as i32), c.clone())))
}

/// Commutator of the `size x size` truncations of `T(g, a)` and `T(g'(g), a')` as series in `g`.
pub fn commutation_check(a: &Rational, aprime: &Rational, size: usize, order: usize) -> Result<CommutationReport> {
    if size < 2 {
        return Err(Error::InvalidArgument("size must be at least 2".into()));
    }
    let gp = series_to_laurent(&gprime_series(a, aprime, order)?);
    let left = transfer_matrix(size, order, a, &MultiLaurent::var(0))?;
    let right = transfer_matrix(size, order, aprime, &gp)?;
    commutator_report(&left, &right, order)
}

/// As [`commutation_check`] but with `g'` an independent variable; degrees are total
/// degrees in `(g, g')`.
pub fn commutation_check_free(a: &Rational, aprime: &Rational, size: usize, order: usize) -> Result<CommutationReport> {
    if size < 2 || order == 0 {
        return Err(Error::InvalidArgument("size must be at least 2 and order at least 1".into()));
    }
    if a.is_zero() || aprime.is_zero() {
        return Err(Error::InvalidArgument("a and a' must be nonzero".into()));
    }
    let left = transfer_matrix(size, order, a, &MultiLaurent::var(0))?;
    let right = transfer_matrix(size, order, aprime, &MultiLaurent::var(1))?;
    commutator_report(&left, &right, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, random_nonzero, rat};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bare_entries() {
        assert_eq!(bare_entry(0, 0).unwrap(), BigInt::one());
        assert_eq!(bare_entry(2, 1).unwrap(), BigInt::from(3));
        assert!(bare_entry(-1, 0).is_err());
        let gf = GfMatrixSpec::new(
            BiPoly::one(),
            BiPoly::from_terms([((0, 0), int(1)), ((1, 0), int(-1)), ((0, 1), int(-1))]),
        )
        .coefficients(9, 9)
        .unwrap();
        for i in 0..9 {
            for j in 0..9 - i {
                assert_eq!(Rational::from(bare_entry(i as i64, j as i64).unwrap()), gf[(i, j)]);
            }
        }
    }

    #[test]
    fn symbolic_entries() {
        let (g, a) = (MultiLaurent::var(0), MultiLaurent::var(1));
        assert_eq!(weighted_entry(0, 0, &g, &a).unwrap(), MultiLaurent::one());
        assert_eq!(weighted_entry(1, 1, &g, &a).unwrap(), &g * &g + &(&a * &a) * &(&g * &g));
        assert_eq!(weighted_entry(2, 0, &g, &a).unwrap(), &(&a * &a) * &(&g * &g));
        let gf = transfer_gf(&g, &a).coefficients(6, 6).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(weighted_entry(i as i64, j as i64, &g, &a).unwrap(), gf[(i, j)]);
                assert_eq!(gf[(i, j)], weighted_entry(j as i64, i as i64, &g, &a).unwrap());
            }
        }
    }

    #[test]
    fn numeric_entries_match_gf() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..5 {
            let (g, a) = (random_nonzero(&mut rng, 5, 4), random_nonzero(&mut rng, 5, 4));
            let gf = transfer_gf(&g, &a).coefficients(11, 11).unwrap();
            for i in 0..=10 {
                for j in 0..=10 - i {
                    assert_eq!(weighted_entry(i as i64, j as i64, &g, &a).unwrap(), gf[(i, j)]);
                }
            }
        }
        let g = rat(2, 7);
        for i in 0..6 {
            for j in 0..6 {
                let e = weighted_entry(i, j, &g, &int(1)).unwrap();
                assert_eq!(e, Ring::pow(&g, (i + j) as u32) * Rational::from(bare_entry(i, j).unwrap()));
            }
        }
    }

    #[test]
    fn phi_values() {
        let g = MultiLaurent::var(0);
        assert_eq!(phi_invariant(&g, &MultiLaurent::one()).unwrap(), MultiLaurent::monomial(Monomial::var(0, -1)));
        assert_eq!(phi_invariant(&rat(1, 3), &int(2)).unwrap(), int(2));
        assert!(phi_invariant(&int(0), &int(2)).is_err());
    }

    #[test]
    fn gprime() {
        let s = gprime_series(&int(3), &int(3), 7).unwrap();
        assert_eq!(s, UniSeries::variable(7));
        assert_eq!(gprime_series(&int(2), &int(3), 5).unwrap().coeff(1), rat(2, 3));
        // phi(g', a') - phi(g, a), multiplied through by a g a' g'.
        let order = 10;
        let (a, ap) = (int(1), int(2));
        let gp = gprime_series(&a, &ap, order).unwrap();
        let g = UniSeries::variable(order);
        let one = UniSeries::one(order);
        let lhs = g.scale(&a).mul(&one.sub(&gp.mul(&gp).scale(&(int(1) - &ap * &ap))));
        let rhs = gp.scale(&ap).mul(&one.sub(&g.mul(&g).scale(&(int(1) - &a * &a))));
        assert!(lhs.sub(&rhs).is_zero());
        assert_eq!(gp.coeff(2), int(0));
    }

    #[test]
    fn commuting_pairs() {
        let r = commutation_check(&int(1), &int(2), 20, 8).unwrap();
        assert!(r.all_zero);
        assert_eq!(r.max_verified_order, Some(8));
        assert_eq!(r.complete_positions, 9 * 400);
        let r = commutation_check(&rat(3, 2), &rat(3, 2), 5, 6).unwrap();
        assert!(r.all_zero);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..3 {
            let (a, ap) = (random_nonzero(&mut rng, 5, 3), random_nonzero(&mut rng, 5, 3));
            let r = commutation_check(&a, &ap, 6, 9).unwrap();
            assert!(r.all_zero, "{a} {ap}");
            assert!(r.complete_positions > 0);
        }
    }

    #[test]
    fn independent_gprime_fails() {
        let r = commutation_check_free(&int(1), &int(2), 4, 4).unwrap();
        assert!(!r.all_zero);
        assert_eq!(r.first_nonzero, Some((0, 1, 1)));
    }

    #[test]
    fn completeness_bound() {
        assert!(is_complete(0, 0, 2, 2));
        assert!(!is_complete(0, 0, 4, 2));
        assert!(is_complete(5, 5, 3, 2));
    }
}
