//! Geodesic two-point function of tetravalent planar maps and the blossom-tree bijection.

pub mod blossom;
pub mod cmap;
pub mod verify;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{int, Rational};
use crate::exact::series::{newton_solve, SeriesPolynomial, UniSeries};

pub use blossom::{enumerate_blossom_trees, BlossomTree, Node, MAX_BLOSSOM_VERTICES};
pub use cmap::{close_tree, cut_map, geodesic_distance, CombinatorialMap};
pub use verify::{verify_maps, CensusMismatch, MapsReport};

type Series = UniSeries<Rational>;

/// `R = 1 + 3 g R^2` with `R(0) = 1`.
pub fn r_limit_series(order: usize) -> Series {
    let f = SeriesPolynomial {
        coeffs: vec![Series::one(order), Series::constant(int(-1), order), Series::monomial(int(3), 1, order)],
    };
    newton_solve(&f, Series::one(order), order).expect("derivative at g = 0 is -1")
}

/// `R_n` for `n >= -1` from `R_n = 1 + g R_n (R_{n+1} + R_n + R_{n-1})`, `R_{-1} = 0`.
///
/// Coefficient `k` of `R_n` only sees `R_{n+k}` at most, so replacing `R_L` by `R` for
/// `L > n + order` does not affect the result.
pub fn rn_series(n: i64, order: usize) -> Result<Series> {
    Ok(rn_table(n.max(0) as usize, order)?.remove((n + 1) as usize))
}

/// `[R_{-1}, R_0, ..., R_{n_max}]`.
pub fn rn_table(n_max: usize, order: usize) -> Result<Vec<Series>> {
    let limit = r_limit_series(order);
    let top = n_max + order + 1;
    // c[idx] holds R_{idx - 1}
    let mut c: Vec<Vec<Rational>> = vec![vec![Rational::zero(); order + 1]; top + 2];
    for row in c.iter_mut().skip(1) {
        row[0] = Rational::one();
    }
    c[top + 1] = limit.coeffs().to_vec();
    for k in 1..=order {
        for idx in 1..=top {
            let mut s = Rational::zero();
            for a in 0..k {
                let b = k - 1 - a;
                s += &c[idx][a] * (&c[idx + 1][b] + &c[idx][b] + &c[idx - 1][b]);
            }
            c[idx][k] = s;
        }
    }
    Ok(c.into_iter().take(n_max + 2).map(|v| Series::from_coeffs(v, order)).collect())
}

/// `x y (1 - g (x + y)) - x - y` on series.
pub fn phi(x: &Series, y: &Series) -> Series {
    let order = x.order().min(y.order());
    let g = Series::variable(order);
    let s = x.add(y);
    x.mul(y).mul(&Series::one(order).sub(&g.mul(&s))).sub(&s)
}

/// Constant `c` in `x + 1/x + c = 1/(g R^2)` for which the closed form solves the recursion.
pub const X_EQUATION_CONSTANT: i64 = 1;

/// `x(g) = g + O(g^2)` with `x + 1/x + 1 = 1/(g R^2)`.
pub fn x_series(order: usize) -> Result<Series> {
    x_series_with_constant(X_EQUATION_CONSTANT, order)
}

/// `x(g) = g + O(g^2)` with `x + 1/x + c = 1/(g R^2)`.
pub fn x_series_with_constant(c: i64, order: usize) -> Result<Series> {
    if order == 0 {
        return Err(Error::InvalidArgument("order must be at least 1".into()));
    }
    let r = r_limit_series(order);
    let gr2 = r.mul(&r).shift_up(1);
    let f = SeriesPolynomial {
        coeffs: vec![gr2.clone(), gr2.scale(&int(c)).sub(&Series::one(order)), gr2],
    };
    newton_solve(&f, Series::variable(order), order)
}

/// `R (1 - x^{n+1}) (1 - x^{n+4}) / ((1 - x^{n+2}) (1 - x^{n+3}))`.
pub fn rn_closed(n: i64, order: usize) -> Result<Series> {
    rn_closed_with(&x_series(order.max(1))?.truncate(order), n, order)
}

fn rn_closed_with(x: &Series, n: i64, order: usize) -> Result<Series> {
    if n < 0 {
        return Err(Error::InvalidArgument("closed form needs n >= 0".into()));
    }
    let one = Series::one(order);
    let f = |k: i64| one.sub(&x.pow(k as u32));
    let num = r_limit_series(order).mul(&f(n + 1)).mul(&f(n + 4));
    num.div(&f(n + 2).mul(&f(n + 3)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RnMethod {
    Recursion,
    Closed,
    Brute,
}

/// `sum` over closed blossom trees with at most `order` vertices and distance `<= n`.
pub fn rn_brute(n: i64, order: usize) -> Result<Series> {
    if order > MAX_BLOSSOM_VERTICES {
        return Err(Error::SizeCap { what: "map vertices", max: MAX_BLOSSOM_VERTICES, got: order });
    }
    let mut coeffs = vec![Rational::zero(); order + 1];
    if n >= 0 {
        for (m, c) in coeffs.iter_mut().enumerate() {
            for t in enumerate_blossom_trees(m)? {
                if geodesic_distance(&close_tree(&t)?)? as i64 <= n {
                    *c += Rational::one();
                }
            }
        }
    }
    Ok(Series::from_coeffs(coeffs, order))
}

pub fn rn(n: i64, order: usize, method: RnMethod) -> Result<Series> {
    if n < -1 {
        return Err(Error::InvalidArgument("n must be at least -1".into()));
    }
    match method {
        RnMethod::Recursion => rn_series(n, order),
        RnMethod::Closed if n == -1 => Ok(Series::zero(order)),
        RnMethod::Closed => rn_closed(n, order),
        RnMethod::Brute => rn_brute(n, order),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::is_integer;

    fn ints(s: &Series) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.to_integer().try_into().unwrap()).collect()
    }

    #[test]
    fn limit_series() {
        let r = r_limit_series(3);
        assert_eq!(ints(&r), vec![1, 3, 18, 135]);
        // (6 g R - 1)^2 = 1 - 12 g
        let order = 12;
        let r = r_limit_series(order);
        let t = r.shift_up(1).scale(&int(6)).sub(&Series::one(order));
        assert_eq!(t.mul(&t), Series::from_coeffs(vec![int(1), int(-12)], order));
    }

    #[test]
    fn recursion_basics() {
        let order = 8;
        assert!(rn_series(-1, order).unwrap().is_zero());
        let limit = r_limit_series(order);
        let table = rn_table(12, order).unwrap();
        for n in 0..=12 {
            let r = &table[n + 1];
            assert_eq!(r.coeff(0), int(1));
            assert_eq!(r, &rn_series(n as i64, order).unwrap());
            if n >= order {
                assert_eq!(r, &limit);
            }
            for k in 0..=order {
                assert!(is_integer(&r.coeff(k)) && r.coeff(k) >= Rational::zero());
                assert!(r.coeff(k) <= limit.coeff(k));
                if n > 0 {
                    assert!(table[n].coeff(k) <= r.coeff(k));
                }
            }
        }
    }

    #[test]
    fn phi_is_conserved() {
        let order = 12;
        let table = rn_table(12, order).unwrap();
        let p0 = phi(&table[1], &table[2]);
        for n in 0..=10 {
            assert_eq!(phi(&table[n + 1], &table[n + 2]), p0, "n = {n}");
        }
        let z = Series::zero(order);
        assert!(phi(&z, &z).is_zero());
        assert_eq!(phi(&table[3], &table[5]), phi(&table[5], &table[3]));
    }

    #[test]
    fn closed_form() {
        let order = 10;
        let x = x_series(order).unwrap();
        assert_eq!(x.coeff(0), int(0));
        assert_eq!(x.coeff(1), int(1));
        let r = r_limit_series(order);
        let gr2 = r.mul(&r).shift_up(1);
        let res = gr2.mul(&x.mul(&x)).add(&gr2.mul(&x)).sub(&x).add(&gr2);
        assert!(res.is_zero());
        // the constant 4 gives a root that does not reproduce the recursion
        let x4 = x_series_with_constant(4, order).unwrap();
        assert_ne!(rn_closed_with(&x4, 0, order).unwrap(), rn_series(0, order).unwrap());
        let table = rn_table(12, order).unwrap();
        for n in 0..=8 {
            assert_eq!(rn_closed(n as i64, order).unwrap(), table[n + 1], "n = {n}");
        }
        assert_eq!(rn_closed(11, order).unwrap(), r);
    }

    #[test]
    fn brute_matches_recursion() {
        let order = 4;
        let table = rn_table(6, order).unwrap();
        for n in -1..=5i64 {
            assert_eq!(rn(n, order, RnMethod::Brute).unwrap(), table[(n + 1) as usize], "n = {n}");
        }
    }
}
