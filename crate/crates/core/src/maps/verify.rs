//! One-shot cross-check of the map layer: tree counts, the bijection, the distance census
//! and the generating-function identities.

use num_bigint::BigInt;

use super::{close_tree, cut_map, enumerate_blossom_trees, geodesic_distance, phi, r_limit_series, rn_closed, rn_table};
use crate::error::{Error, Result};

use super::MAX_BLOSSOM_VERTICES;

/// Blossom-tree counts are always compared through this many inner vertices.
pub const COUNT_CHECK_VERTICES: usize = 5;
pub const CLOSED_FORM_N: usize = 8;
pub const CLOSED_FORM_ORDER: usize = 10;
pub const PHI_ORDER: usize = 12;

#[derive(Clone, Debug, PartialEq)]
pub struct CensusMismatch {
    pub n: usize,
    pub vertices: usize,
    pub brute: usize,
    pub series: BigInt,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MapsReport {
    pub max_vertices: usize,
    /// Blossom trees with `m` inner vertices, `m = 0..`.
    pub tree_counts: Vec<usize>,
    pub expected_counts: Vec<BigInt>,
    /// Trees whose closure does not cut back to themselves, or is not an admissible planar map.
    pub bijection_failures: Vec<String>,
    /// `census[m][d]`: maps with `m` vertices at distance `d`.
    pub census: Vec<Vec<usize>>,
    pub census_mismatch: Option<CensusMismatch>,
    pub closed_form_mismatch: Option<usize>,
    pub phi_mismatch: Option<usize>,
}

impl MapsReport {
    pub fn counts_agree(&self) -> bool {
        self.tree_counts.iter().zip(&self.expected_counts).all(|(a, b)| BigInt::from(*a) == *b)
    }

    pub fn passed(&self) -> bool {
        self.counts_agree()
            && self.bijection_failures.is_empty()
            && self.census_mismatch.is_none()
            && self.closed_form_mismatch.is_none()
            && self.phi_mismatch.is_none()
    }
}

pub fn verify_maps(max_vertices: usize) -> Result<MapsReport> {
    if max_vertices > MAX_BLOSSOM_VERTICES {
        return Err(Error::SizeCap { what: "map vertices", max: MAX_BLOSSOM_VERTICES, got: max_vertices });
    }
    let count_to = max_vertices.max(COUNT_CHECK_VERTICES);
    let limit = r_limit_series(count_to);
    let expected_counts = (0..=count_to).map(|m| limit.coeff(m).to_integer()).collect();
    let mut tree_counts = Vec::new();
    let mut bijection_failures = Vec::new();
    let mut census = Vec::new();
    for m in 0..=count_to {
        let trees = enumerate_blossom_trees(m)?;
        tree_counts.push(trees.len());
        if m > max_vertices {
            continue;
        }
        let mut hist = Vec::new();
        for t in &trees {
            let map = close_tree(t)?;
            let ok = map.euler_characteristic() == 2 && map.check_admissible().is_ok() && cut_map(&map).ok().as_ref() == Some(t);
            if !ok {
                bijection_failures.push(t.to_string());
            }
            let d = geodesic_distance(&map)?;
            if hist.len() <= d {
                hist.resize(d + 1, 0);
            }
            hist[d] += 1;
        }
        census.push(hist);
    }

    let table = rn_table(max_vertices, max_vertices)?;
    let mut census_mismatch = None;
    'outer: for n in 0..=max_vertices {
        for (m, hist) in census.iter().enumerate() {
            let brute: usize = hist.iter().take(n + 1).sum();
            let series = table[n + 1].coeff(m).to_integer();
            if BigInt::from(brute) != series {
                census_mismatch = Some(CensusMismatch { n, vertices: m, brute, series });
                break 'outer;
            }
        }
    }

    let closed_table = rn_table(CLOSED_FORM_N, CLOSED_FORM_ORDER)?;
    let mut closed_form_mismatch = None;
    for n in 0..=CLOSED_FORM_N {
        if rn_closed(n as i64, CLOSED_FORM_ORDER)? != closed_table[n + 1] {
            closed_form_mismatch = Some(n);
            break;
        }
    }

    let phi_table = rn_table(PHI_ORDER, PHI_ORDER)?;
    let p0 = phi(&phi_table[0], &phi_table[1]);
    let phi_mismatch = (0..PHI_ORDER).find(|&n| phi(&phi_table[n + 1], &phi_table[n + 2]) != p0);

    Ok(MapsReport {
        max_vertices,
        tree_counts,
        expected_counts,
        bijection_failures,
        census,
        census_mismatch,
        closed_form_mismatch,
        phi_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_verification() {
        let r = verify_maps(3).unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.tree_counts, vec![1, 3, 18, 135, 1134, 10206]);
        assert_eq!(r.census[1], vec![2, 1]);
    }

    #[test]
    fn cap() {
        assert!(verify_maps(7).is_err());
    }
}
