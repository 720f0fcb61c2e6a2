//! Refined ASM and DPP enumeration: brute sums, the lattice-path route, determinant
//! formulas, the shift gauge and the identity between the two partition functions.

pub mod dpp;
pub mod formulas;
pub mod gauge;
pub mod nilp;

use crate::asm::zasm_brute;
use crate::error::{Error, Result};
use crate::exact::rational::{random_nonzero, Rational};
use crate::exact::ring::Ring;

pub use dpp::Dpp;
pub use formulas::{asm_spec, dpp_spec, gf_relation, other_root, x_from_nu, zasm_det, zdpp_det, GfRelation};
pub use gauge::{gauge_minor_check, GaugeReport};
pub use nilp::{dpp_to_nilp, enumerate_nilps, nilp_to_dpp, zdpp_lgv, NilpConfig};

pub const MAX_DPP_ORDER: usize = 6;

/// All DPPs with parts at most `n`, generated from their path families.
pub fn enumerate_dpps(n: usize) -> Result<Vec<Dpp>> {
    if n > MAX_DPP_ORDER {
        return Err(Error::SizeCap { what: "DPP order", max: MAX_DPP_ORDER, got: n });
    }
    enumerate_nilps(n as u32).iter().map(|c| nilp_to_dpp(c, n as u32)).collect()
}

/// `sum_D x^{#special} y^{#other}`.
pub fn zdpp_brute<R: Ring>(n: usize, x: &R, y: &R) -> Result<R> {
    Ok(enumerate_dpps(n)?.iter().fold(R::zero(), |acc, d| acc + d.weight(x, y)))
}

/// A random admissible point: `(x, y, nu)` with `nu` outside `{0, 1}`.
pub fn random_admissible<G: rand::Rng + ?Sized>(rng: &mut G) -> (Rational, Rational, Rational) {
    loop {
        let nu = random_nonzero(rng, 9, 7);
        let y = random_nonzero(rng, 9, 7);
        if let Ok(x) = x_from_nu(&nu, &y) {
            if !num_traits::Zero::is_zero(&x) {
                return (x, y, nu);
            }
        }
    }
}

/// One mismatch from [`asm_dpp_identity`].
#[derive(Clone, Debug, PartialEq)]
pub struct IdentityMismatch {
    pub n: usize,
    pub x: Rational,
    pub y: Rational,
    pub nu: Rational,
    pub zasm: Rational,
    pub zdpp: Rational,
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub gf_relation_holds: bool,
    pub points_checked: usize,
    pub brute_checked: usize,
    pub mismatches: Vec<IdentityMismatch>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.gf_relation_holds && self.mismatches.is_empty()
    }
}

/// Checks the generating-function relation, then `zasm_det = zdpp_det` at random points
/// for every size up to `n`, and both against brute sums for sizes up to 5.
pub fn asm_dpp_identity<G: rand::Rng + ?Sized>(n: usize, samples: usize, rng: &mut G) -> Result<IdentityReport> {
    if n > MAX_DPP_ORDER {
        return Err(Error::SizeCap { what: "identity size", max: MAX_DPP_ORDER, got: n });
    }
    let gf_relation_holds = gf_relation().holds();
    let mut mismatches = Vec::new();
    let mut points_checked = 0;
    let mut brute_checked = 0;
    for size in 1..=n {
        for _ in 0..samples {
            let (x, y, nu) = random_admissible(rng);
            let za = zasm_det(size, &x, &y, &nu)?;
            let zd = zdpp_det(size, &x, &y)?;
            points_checked += 1;
            let mut ok = za == zd;
            if size <= 5 {
                brute_checked += 1;
                ok &= zasm_brute(size, &x, &y)? == za && zdpp_brute(size, &x, &y)? == zd;
            }
            if !ok {
                mismatches.push(IdentityMismatch { n: size, x, y, nu, zasm: za, zdpp: zd });
            }
        }
    }
    Ok(IdentityReport { gf_relation_holds, points_checked, brute_checked, mismatches })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::asm_count_formula;
    use crate::exact::laurent::MultiLaurent;
    use num_bigint::BigInt;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn order_three_list() {
        let names: Vec<String> = enumerate_dpps(3).unwrap().iter().map(|d| d.to_string()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["()", "2", "3", "31", "32", "33", "33/2"]);
        assert_eq!(enumerate_dpps(1).unwrap(), vec![Dpp::empty()]);
        assert_eq!(enumerate_dpps(0).unwrap(), vec![Dpp::empty()]);
    }

    #[test]
    fn counts_are_asm_numbers() {
        for n in 1..=6 {
            assert_eq!(BigInt::from(enumerate_dpps(n).unwrap().len()), asm_count_formula(n));
        }
    }

    #[test]
    fn three_routes_agree_symbolically() {
        let (x, y) = (MultiLaurent::var(0), MultiLaurent::var(1));
        for n in 1..=4 {
            let brute = zdpp_brute(n, &x, &y).unwrap();
            assert_eq!(zdpp_det(n, &x, &y).unwrap(), brute, "det n={n}");
            assert_eq!(zdpp_lgv(n as u32, &x, &y).unwrap(), brute, "lgv n={n}");
            assert_eq!(zasm_brute(n, &x, &y).unwrap(), brute, "asm n={n}");
        }
    }

    #[test]
    fn identity_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let r = asm_dpp_identity(4, 3, &mut rng).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}
