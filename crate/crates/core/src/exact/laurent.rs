//! Multivariate Laurent polynomials with rational coefficients.
//!
//! Variables are identified by index; names live in a [`VarNames`] table that is
//! only consulted for display and serialization. Exponent vectors are stored with
//! trailing zeros trimmed so every element has exactly one representation.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, int, is_integer, Rational};
use super::ring::Ring;
use crate::error::{Error, Result};

/// Exponent vector, trailing zeros removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut exps: Vec<i32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn var(index: usize, exp: i32) -> Self {
        let mut v = vec![0; index + 1];
        v[index] = exp;
        Monomial::new(v)
    }

    pub fn exp(&self, index: usize) -> i32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(i32, i32) -> i32) -> Self {
        let len = self.0.len().max(other.0.len());
        Monomial::new((0..len).map(|i| f(self.exp(i), other.exp(i))).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn div(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn min_with(&self, other: &Self) -> Self {
        self.zip_with(other, i32::min)
    }

    pub fn max_with(&self, other: &Self) -> Self {
        self.zip_with(other, i32::max)
    }

    pub fn is_polynomial(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    pub fn pow(&self, k: i32) -> Self {
        Monomial::new(self.0.iter().map(|&e| e * k).collect())
    }
}

// Lexicographic on the zero-padded vectors; trimming alone would misorder negatives.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.0.len().max(other.0.len());
        for i in 0..len {
            match self.exp(i).cmp(&other.exp(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Laurent polynomial in indexed variables over the rationals.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiLaurent {
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiLaurent {
    pub fn constant(c: Rational) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiLaurent { terms }
    }

    /// The variable with the given index.
    pub fn var(index: usize) -> Self {
        Self::term(Monomial::var(index, 1), int(1))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, int(1))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(items: I) -> Self {
        let mut p = MultiLaurent::zero();
        for (m, c) in items {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(&Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiLaurent::zero();
        }
        MultiLaurent {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return MultiLaurent::zero();
        }
        MultiLaurent {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_exponents(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(first.clone(), |acc, m| acc.min_with(m)),
        }
    }

    pub fn max_exponents(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(),
            Some(first) => it.fold(first.clone(), |acc, m| acc.max_with(m)),
        }
    }

    /// Number of variable slots touched by any term.
    pub fn arity(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    /// True when every monomial has the same total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: i64) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// True when every coefficient is a non-negative integer.
    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| is_integer(c) && !c.is_negative())
    }

    /// First coefficient that is negative or non-integral, if any.
    pub fn first_bad_coeff(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().find(|(_, c)| !is_integer(c) || c.is_negative())
    }

    /// Evaluates at a point; `values[i]` is substituted for variable `i`.
    pub fn eval(&self, values: &[Rational]) -> Result<Rational> {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = values.get(i).ok_or_else(|| {
                    Error::InvalidArgument(format!("no value supplied for variable {i}"))
                })?;
                t *= v.powi(e)?;
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes ring elements for variables. Variables beyond `values.len()` are kept.
    pub fn substitute(&self, values: &[MultiLaurent]) -> Result<MultiLaurent> {
        let mut total = MultiLaurent::zero();
        for (m, c) in &self.terms {
            let mut t = MultiLaurent::constant(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = match values.get(i) {
                    Some(v) => v.clone(),
                    None => MultiLaurent::var(i),
                };
                t = t * v.powi(e)?;
            }
            total += t;
        }
        Ok(total)
    }

    /// Exact quotient `self / q`, failing unless it is a Laurent polynomial.
    pub fn div_exact(&self, q: &MultiLaurent) -> Result<MultiLaurent> {
        if q.is_zero() {
            return Err(Error::DivisionByZero("Laurent polynomial divided by 0".into()));
        }
        if self.is_zero() {
            return Ok(MultiLaurent::zero());
        }
        if let Some((m, c)) = q.as_monomial() {
            let inv = Rational::one() / c;
            return Ok(self.mul_monomial(&Monomial::one().div(m), &inv));
        }
        // Shift both operands into the polynomial ring with no variable dividing q.
        let pm = self.min_exponents();
        let qm = q.min_exponents();
        let p0 = self.mul_monomial(&Monomial::one().div(&pm), &int(1));
        let q0 = q.mul_monomial(&Monomial::one().div(&qm), &int(1));
        // Per-variable degree bound of any polynomial quotient.
        let bound = p0.max_exponents().div(&q0.max_exponents());
        if !bound.is_polynomial() {
            return Err(not_divisible(self, q));
        }
        let (lm, lc) = q0.leading().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut rem = p0;
        let mut quot = MultiLaurent::zero();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let tm = rm.div(&lm);
            let within = tm.is_polynomial()
                && (0..tm.0.len()).all(|i| tm.exp(i) <= bound.exp(i));
            if !within {
                return Err(not_divisible(self, q));
            }
            let tc = rc / &lc;
            rem -= q0.mul_monomial(&tm, &tc);
            quot.add_term(tm, tc);
        }
        Ok(quot.mul_monomial(&pm.div(&qm), &int(1)))
    }

    pub fn display<'a>(&'a self, names: &'a VarNames) -> LaurentDisplay<'a> {
        LaurentDisplay { p: self, names: Some(names) }
    }
}

fn not_divisible(p: &MultiLaurent, q: &MultiLaurent) -> Error {
    Error::NotDivisible(format!("({p}) / ({q})"))
}

pub struct LaurentDisplay<'a> {
    p: &'a MultiLaurent,
    names: Option<&'a VarNames>,
}

impl fmt::Display for LaurentDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.p.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.p.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(format_rational(&abs));
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = match self.names {
                    Some(n) => n.name(i),
                    None => format!("v{i}"),
                };
                if e == 1 {
                    factors.push(name);
                } else {
                    factors.push(format!("{name}^{e}"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        LaurentDisplay { p: self, names: None }.fmt(f)
    }
}

impl fmt::Debug for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiLaurent({self})")
    }
}

/// Names for variable indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VarNames(Vec<String>);

impl VarNames {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(names: I) -> Self {
        VarNames(names.into_iter().map(Into::into).collect())
    }

    pub fn push(&mut self, name: impl Into<String>) -> usize {
        self.0.push(name.into());
        self.0.len() - 1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn name(&self, i: usize) -> String {
        self.0.get(i).cloned().unwrap_or_else(|| format!("v{i}"))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl Zero for MultiLaurent {
    fn zero() -> Self {
        MultiLaurent { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for MultiLaurent {
    fn one() -> Self {
        MultiLaurent::constant(int(1))
    }
}

impl AddAssign<&MultiLaurent> for MultiLaurent {
    fn add_assign(&mut self, rhs: &MultiLaurent) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for MultiLaurent {
    fn add_assign(&mut self, rhs: MultiLaurent) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl SubAssign<&MultiLaurent> for MultiLaurent {
    fn sub_assign(&mut self, rhs: &MultiLaurent) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl SubAssign for MultiLaurent {
    fn sub_assign(&mut self, rhs: MultiLaurent) {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
    }
}

impl Add for MultiLaurent {
    type Output = MultiLaurent;
    fn add(mut self, rhs: MultiLaurent) -> MultiLaurent {
        self += rhs;
        self
    }
}

impl Add<&MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn add(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for MultiLaurent {
    type Output = MultiLaurent;
    fn sub(mut self, rhs: MultiLaurent) -> MultiLaurent {
        self -= rhs;
        self
    }
}

impl Sub<&MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn sub(self, rhs: &MultiLaurent) -> MultiLaurent {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for MultiLaurent {
    type Output = MultiLaurent;
    fn neg(self) -> MultiLaurent {
        MultiLaurent {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Mul<&MultiLaurent> for &MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, rhs: &MultiLaurent) -> MultiLaurent {
        if self.is_zero() || rhs.is_zero() {
            return MultiLaurent::zero();
        }
        let mut out = MultiLaurent::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for MultiLaurent {
    type Output = MultiLaurent;
    fn mul(self, rhs: MultiLaurent) -> MultiLaurent {
        &self * &rhs
    }
}

impl From<Rational> for MultiLaurent {
    fn from(c: Rational) -> Self {
        MultiLaurent::constant(c)
    }
}

impl Ring for MultiLaurent {
    fn from_i64(n: i64) -> Self {
        MultiLaurent::constant(int(n))
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.div_exact(divisor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn x() -> MultiLaurent {
        MultiLaurent::var(0)
    }
    fn y() -> MultiLaurent {
        MultiLaurent::var(1)
    }
    fn c(n: i64) -> MultiLaurent {
        MultiLaurent::from_i64(n)
    }

    #[test]
    fn monomial_order_pads_with_zeros() {
        let a = Monomial::new(vec![0, -1]);
        let b = Monomial::one();
        assert!(a < b);
        assert_eq!(Monomial::new(vec![1, 0, 0]), Monomial::new(vec![1]));
    }

    #[test]
    fn canonical_form_drops_cancelled_terms() {
        let p = (x() + y()) - x();
        assert_eq!(p, y());
        assert_eq!((x() - x()).num_terms(), 0);
    }

    #[test]
    fn difference_of_squares_divides() {
        let p = x() * x() - c(1);
        let q = x() - c(1);
        assert_eq!(p.div_exact(&q).unwrap(), x() + c(1));
    }

    #[test]
    fn monomial_division_gives_negative_exponents() {
        let num = (c(1) + y()) * (c(1) + x() + y());
        let q = x() * y();
        let r = num.div_exact(&q).unwrap();
        assert_eq!(&r * &q, num);
        let xinv = c(1).div_exact(&x()).unwrap();
        assert_eq!(num.div_exact(&xinv).unwrap(), &num * &x());
    }

    #[test]
    fn octahedron_numerator_over_single_variable() {
        let (a, b, cc, u, v) = (
            MultiLaurent::var(0),
            MultiLaurent::var(1),
            MultiLaurent::var(2),
            MultiLaurent::var(3),
            MultiLaurent::var(4),
        );
        let num = &a * &cc + &u * &v;
        let t = num.div_exact(&b).unwrap();
        assert_eq!(t.num_terms(), 2);
        assert_eq!(&t * &b, num);
    }

    #[test]
    fn non_exact_division_is_reported() {
        let p = x() + c(1);
        let q = y() + c(1);
        assert!(matches!(p.div_exact(&q), Err(Error::NotDivisible(_))));
        let p = x() * x() + c(1);
        assert!(matches!(p.div_exact(&(x() + c(1))), Err(Error::NotDivisible(_))));
    }

    #[test]
    fn laurent_quotient_with_shifts() {
        let xinv = c(1).div_exact(&x()).unwrap();
        let p = (&x() + &xinv) * (&y() - &xinv);
        let q = &x() + &xinv;
        assert_eq!(p.div_exact(&q).unwrap(), &y() - &xinv);
    }

    #[test]
    fn eval_and_display() {
        let p = x() * x() - y().scale(&rat(1, 2));
        assert_eq!(p.eval(&[int(3), int(4)]).unwrap(), int(7));
        let names = VarNames::new(["x", "y"]);
        assert_eq!(p.display(&names).to_string(), "x^2 - 1/2*y");
        assert!(c(1).div_exact(&c(0)).is_err());
    }
}
