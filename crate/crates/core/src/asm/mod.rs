//! Alternating sign matrices: validation, enumeration, statistics and the product formula.

mod enumerate;
pub mod lambda;

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact::ring::Ring;

pub use enumerate::{enumerate_asms, for_each_asm, MAX_ENUMERATION_N};
pub use lambda::{
    dodgson_det, lambda_det, lambda_det_eval, lambda_det_expansion, lambda_det_symbolic, symbolic_matrix,
    LambdaDetValue,
};

/// A validated alternating sign matrix.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

/// The two statistics entering the refined enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AsmStats {
    pub inv: usize,
    pub nneg: usize,
}

impl Asm {
    /// Validates a square array. Errors name the first offending row or column.
    pub fn new(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidAsm("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidAsm(format!("row {} has length {}, expected {n}", i + 1, row.len())));
            }
            for &v in row {
                if !(-1..=1).contains(&v) {
                    return Err(Error::InvalidAsm(format!("entry {v} in row {} not in {{-1,0,1}}", i + 1)));
                }
                entries.push(v as i8);
            }
        }
        let asm = Asm { n, entries };
        asm.check_lines()?;
        Ok(asm)
    }

    pub(crate) fn from_raw(n: usize, entries: Vec<i8>) -> Self {
        Asm { n, entries }
    }

    fn check_lines(&self) -> Result<()> {
        let n = self.n;
        for (what, line) in [("row", true), ("column", false)] {
            for a in 0..n {
                let mut partial = 0i64;
                for b in 0..n {
                    partial += if line { self.get(a, b) } else { self.get(b, a) } as i64;
                    if partial < 0 {
                        return Err(Error::InvalidAsm(format!("{what} {} has a negative partial sum", a + 1)));
                    }
                }
                if partial != 1 {
                    return Err(Error::InvalidAsm(format!("{what} {} sums to {partial}", a + 1)));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j) as i64).collect()).collect()
    }

    pub fn identity(n: usize) -> Self {
        let mut e = vec![0i8; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        Asm { n, entries: e }
    }

    /// Permutation matrix with a one at `(i, perm[i])`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let rows: Vec<Vec<i64>> = perm
            .iter()
            .map(|&p| (0..n).map(|j| i64::from(j == p)).collect())
            .collect();
        Asm::new(&rows)
    }

    /// `Inv(B) = sum_{i<j, k<l} b_{i,l} b_{j,k}` and `N(B)` = number of `-1` entries.
    pub fn statistics(&self) -> AsmStats {
        let n = self.n;
        let mut inv: i64 = 0;
        // suffix[j][k]: sum of b_{j', k'} for j' >= j, k' < k
        let mut below_left = vec![0i64; (n + 1) * (n + 1)];
        for j in (0..n).rev() {
            let mut run = 0i64;
            for k in 0..n {
                below_left[j * (n + 1) + k + 1] = below_left[(j + 1) * (n + 1) + k + 1] + run + self.get(j, k) as i64;
                run += self.get(j, k) as i64;
            }
        }
        for i in 0..n {
            for l in 0..n {
                let b = self.get(i, l) as i64;
                if b != 0 && i + 1 < n {
                    inv += b * below_left[(i + 1) * (n + 1) + l];
                }
            }
        }
        let nneg = self.entries.iter().filter(|&&v| v == -1).count();
        AsmStats { inv: inv as usize, nneg }
    }

    pub fn is_permutation(&self) -> bool {
        self.entries.iter().all(|&v| v >= 0)
    }
}

impl fmt::Debug for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Asm{:?}", self.rows())
    }
}

/// `A_n = prod_{j=0}^{n-1} (3j+1)! / (n+j)!`.
pub fn asm_count_formula(n: usize) -> BigInt {
    let fact = |m: usize| -> BigInt { (1..=m).fold(BigInt::one(), |acc, k| acc * BigInt::from(k)) };
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..n {
        num *= fact(3 * j + 1);
        den *= fact(n + j);
    }
    num / den
}

/// `sum_B x^{N(B)} y^{Inv(B) - N(B)}` over all `n x n` ASMs.
pub fn zasm_brute<R: Ring>(n: usize, x: &R, y: &R) -> Result<R> {
    let mut total = R::zero();
    for_each_asm(n, |b| {
        let s = b.statistics();
        total = total.clone() + x.pow(s.nneg as u32) * y.pow((s.inv - s.nneg) as u32);
    })?;
    Ok(total)
}
