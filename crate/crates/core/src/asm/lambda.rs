//! The lambda-determinant via the deformed octahedron recurrence, and its ASM expansion.

use std::collections::HashMap;

use super::for_each_asm;
use crate::error::{Error, Result};
use crate::exact::laurent::{MultiLaurent, VarNames};
use crate::exact::matrix::ExactMatrix;
use crate::exact::rational::Rational;
use crate::exact::ring::Ring;

/// `T_{0,0,n}` of `T_{i,j,k+1} T_{i,j,k-1} = T_{i,j+1,k} T_{i,j-1,k} + lambda T_{i+1,j,k} T_{i-1,j,k}`
/// with `T_{l,m,0} = 1` and `T_{i,j,1} = a_{(j-i+n+1)/2, (i+j+n+1)/2}` (1-based).
pub fn lambda_det<R: Ring>(a: &ExactMatrix<R>, lambda: &R) -> Result<R> {
    if !a.is_square() {
        return Err(Error::NonSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows() as i32;
    if n == 0 {
        return Ok(R::one());
    }
    let parity = |v: i32| v.rem_euclid(2);
    let mut prev: HashMap<(i32, i32), R> = HashMap::new();
    let mut cur: HashMap<(i32, i32), R> = HashMap::new();
    for i in -n..=n {
        for j in -n..=n {
            if i.abs() + j.abs() <= n && parity(i + j) == parity(n) {
                prev.insert((i, j), R::one());
            }
            if i.abs() + j.abs() < n && parity(i + j) == parity(n + 1) {
                let r = (j - i + n + 1) / 2;
                let c = (i + j + n + 1) / 2;
                cur.insert((i, j), a[((r - 1) as usize, (c - 1) as usize)].clone());
            }
        }
    }
    for k in 2..=n {
        let mut next = HashMap::new();
        let radius = n - k;
        for i in -radius..=radius {
            for j in -radius..=radius {
                if i.abs() + j.abs() > radius || parity(i + j + k) != parity(n) {
                    continue;
                }
                let g = |di: i32, dj: i32| cur[&(i + di, j + dj)].clone();
                let num = g(0, 1) * g(0, -1) + lambda.clone() * g(1, 0) * g(-1, 0);
                let den = &prev[&(i, j)];
                let v = num.exact_div(den).map_err(|e| match e {
                    Error::DivisionByZero(_) => Error::DivisionByZero(format!(
                        "condensation hit a vanishing value at T({i},{j},{})",
                        k - 2
                    )),
                    other => other,
                })?;
                next.insert((i, j), v);
            }
        }
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur[&(0, 0)].clone())
}

/// Determinant by Dodgson condensation (the `lambda = -1` case).
pub fn dodgson_det<R: Ring>(a: &ExactMatrix<R>) -> Result<R> {
    lambda_det(a, &-R::one())
}

/// Matrix of variables `a11 .. ann`, variable index `(i-1) n + (j-1)`.
pub fn symbolic_matrix(n: usize) -> (ExactMatrix<MultiLaurent>, VarNames) {
    let mut names = VarNames::default();
    for i in 1..=n {
        for j in 1..=n {
            names.push(format!("a{i}{j}"));
        }
    }
    (ExactMatrix::from_fn(n, n, |i, j| MultiLaurent::var(i * n + j)), names)
}

/// Symbolic `|A|_lambda` in the entries `a_ij` and `lambda` (the last variable).
pub fn lambda_det_symbolic(n: usize) -> Result<(MultiLaurent, VarNames)> {
    let (a, mut names) = symbolic_matrix(n);
    let l = names.push("lambda");
    Ok((lambda_det(&a, &MultiLaurent::var(l))?, names))
}

/// `sum_B lambda^{Inv-N} (1+lambda)^N prod a_ij^{b_ij}` over `n x n` ASMs.
pub fn lambda_det_expansion<R: Ring>(a: &ExactMatrix<R>, lambda: &R) -> Result<R> {
    if !a.is_square() {
        return Err(Error::NonSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    let one_plus = R::one() + lambda.clone();
    let mut total = R::zero();
    let mut failure = None;
    for_each_asm(n, |b| {
        if failure.is_some() {
            return;
        }
        let s = b.statistics();
        let mut term = lambda.pow((s.inv - s.nneg) as u32) * one_plus.pow(s.nneg as u32);
        if term.is_zero() {
            return;
        }
        for i in 0..n {
            for j in 0..n {
                match b.get(i, j) {
                    1 => term = term * a[(i, j)].clone(),
                    -1 => match term.exact_div(&a[(i, j)]) {
                        Ok(t) => term = t,
                        Err(e) => failure = Some(e),
                    },
                    _ => {}
                }
            }
        }
        total = total.clone() + term;
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// Result of a rational lambda-determinant evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct LambdaDetValue {
    pub value: Rational,
    /// True when rational condensation met a zero and the symbolic route was used.
    pub used_symbolic_fallback: bool,
}

/// Rational evaluation with automatic symbolic fallback on a condensation zero.
///
/// The fallback runs the recurrence over Laurent polynomials in the entries with
/// `lambda` fixed, then substitutes. A pole that survives simplification is an error.
pub fn lambda_det_eval(a: &ExactMatrix<Rational>, lambda: &Rational) -> Result<LambdaDetValue> {
    match lambda_det(a, lambda) {
        Ok(value) => Ok(LambdaDetValue { value, used_symbolic_fallback: false }),
        Err(Error::DivisionByZero(_)) => {
            let n = a.rows();
            let (sym, _) = symbolic_matrix(n);
            let poly = lambda_det(&sym, &MultiLaurent::constant(lambda.clone()))?;
            let point: Vec<Rational> = a.entries().to_vec();
            let value = poly.eval(&point).map_err(|_| {
                Error::DivisionByZero("the lambda-determinant has a pole at this matrix".into())
            })?;
            Ok(LambdaDetValue { value, used_symbolic_fallback: true })
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::laurent::Monomial;
    use crate::exact::rational::{int, random_rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn v(i: usize) -> MultiLaurent {
        MultiLaurent::var(i)
    }

    #[test]
    fn two_by_two() {
        let (a, names) = symbolic_matrix(2);
        let lam = v(names.len());
        let d = lambda_det(&a, &lam).unwrap();
        assert_eq!(d, &v(0) * &v(3) + &(&lam * &v(1)) * &v(2));
        assert_eq!(lambda_det_expansion(&a, &lam).unwrap(), d);
        assert_eq!(dodgson_det(&a).unwrap(), a.det().unwrap());
    }

    #[test]
    fn three_by_three_has_the_inverse_center_term() {
        let (d, names) = lambda_det_symbolic(3).unwrap();
        let l = names.index_of("lambda").unwrap();
        // lambda (1 + lambda) a12 a21 a23 a32 / a22
        let mut e = vec![0; 10];
        for name in ["a12", "a21", "a23", "a32"] {
            e[names.index_of(name).unwrap()] = 1;
        }
        e[names.index_of("a22").unwrap()] = -1;
        let mut e2 = e.clone();
        e[l] = 1;
        e2[l] = 2;
        assert_eq!(d.coeff(&Monomial::new(e)), int(1));
        assert_eq!(d.coeff(&Monomial::new(e2)), int(1));
    }

    #[test]
    fn dodgson_matches_bareiss_on_random_integer_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut checked = 0;
        while checked < 10 {
            let a = ExactMatrix::from_fn(5, 5, |_, _| random_rational(&mut rng, 9, 1));
            match dodgson_det(&a) {
                Ok(d) => {
                    assert_eq!(d, a.det().unwrap());
                    checked += 1;
                }
                Err(Error::DivisionByZero(_)) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }

    #[test]
    fn vanishing_center_raises_then_falls_back() {
        let a = ExactMatrix::from_rows(vec![
            vec![int(1), int(2), int(3)],
            vec![int(4), int(0), int(6)],
            vec![int(7), int(8), int(10)],
        ])
        .unwrap();
        assert!(matches!(dodgson_det(&a), Err(Error::DivisionByZero(_))));
        let r = lambda_det_eval(&a, &int(-1)).unwrap();
        assert!(r.used_symbolic_fallback);
        assert_eq!(r.value, a.det().unwrap());
        // for generic lambda the 1/a22 term is a genuine pole
        assert!(lambda_det_eval(&a, &int(2)).is_err());
    }
}
