use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Result;

/// A commutative ring with exact division where the quotient exists.
///
/// Every scalar in the crate (rationals, Laurent polynomials) implements this,
/// so matrices, determinants, generating functions and path sums are written
/// once and reused symbolically and numerically.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;

    /// Returns `self / divisor` when the quotient lies in the ring.
    fn exact_div(&self, divisor: &Self) -> Result<Self>;

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            exp >>= 1;
            if exp > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    /// Integer power allowing negative exponents through exact division.
    fn powi(&self, exp: i32) -> Result<Self> {
        if exp >= 0 {
            Ok(self.pow(exp as u32))
        } else {
            Self::one().exact_div(&self.pow(exp.unsigned_abs()))
        }
    }
}

/// Sum of an iterator of ring elements.
pub fn sum<R: Ring, I: IntoIterator<Item = R>>(items: I) -> R {
    items.into_iter().fold(R::zero(), |acc, x| acc + x)
}

/// Product of an iterator of ring elements.
pub fn product<R: Ring, I: IntoIterator<Item = R>>(items: I) -> R {
    items.into_iter().fold(R::one(), |acc, x| acc * x)
}
