//! Arbitrary precision rationals and their canonical `"p/q"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ring::Ring;
use crate::error::{Error, Result};

/// Exact rational number. Always normalized: positive denominator, reduced.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

impl Ring for Rational {
    fn from_i64(n: i64) -> Self {
        int(n)
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero(format!("{} / 0", format_rational(self))));
        }
        Ok(self / divisor)
    }
}

/// Formats as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"p/q"`, `"p"` or a decimal-free integer with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// A random rational with numerator in `[-max_num, max_num]` and denominator in `[1, max_den]`.
pub fn random_rational<G: rand::Rng + ?Sized>(rng: &mut G, max_num: i64, max_den: i64) -> Rational {
    let n = rng.gen_range(-max_num..=max_num);
    let d = rng.gen_range(1..=max_den);
    rat(n, d)
}

/// A random nonzero rational.
pub fn random_nonzero<G: rand::Rng + ?Sized>(rng: &mut G, max_num: i64, max_den: i64) -> Rational {
    loop {
        let r = random_rational(rng, max_num, max_den);
        if !r.is_zero() {
            return r;
        }
    }
}

/// A random strictly positive rational.
pub fn random_positive<G: rand::Rng + ?Sized>(rng: &mut G, max_num: i64, max_den: i64) -> Rational {
    let n = rng.gen_range(1..=max_num);
    let d = rng.gen_range(1..=max_den);
    rat(n, d)
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn is_nonnegative(r: &Rational) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_sign_and_gcd() {
        let r = rat(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(format_rational(&r), "-3/2");
        assert_eq!(format_rational(&int(7)), "7");
    }

    #[test]
    fn parse_round_trips() {
        for s in ["0", "-5", "3/7", "-12/5"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert_eq!(parse_rational("4/6").unwrap(), rat(2, 3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn exact_div_by_zero_is_error() {
        assert!(matches!(int(1).exact_div(&int(0)), Err(Error::DivisionByZero(_))));
        assert_eq!(int(3).exact_div(&int(6)).unwrap(), rat(1, 2));
    }

    #[test]
    fn negative_powers() {
        assert_eq!(rat(2, 3).powi(-2).unwrap(), rat(9, 4));
        assert_eq!(int(0).powi(0).unwrap(), int(1));
    }
}
