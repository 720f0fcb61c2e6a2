//! Non-intersecting lattice paths encoding descending plane partitions.
//!
//! Row `i` becomes a path from `(s, 0)` to `(0, s+2)`, `s = a_{i,i} - 2`, followed by a
//! final step left to `(-1, s+2)`. The path steps left from `x = t` to `x = t-1` at
//! height `a_{i,i+t}`, or at height 0 once the row is exhausted. A left step leaving
//! `x = X` at height `y` is weighted 1 when `y = 0`, `x` when `1 <= y <= X` and `y`
//! when `y > X`; the last case is exactly a non-special part.

use std::collections::HashSet;

use super::dpp::Dpp;
use crate::error::{Error, Result};
use crate::exact::lgv::WeightedDag;
use crate::exact::ring::Ring;

/// One path: start abscissa `s` and the heights of its left steps, `heights[t]` leaving `x = t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePath {
    pub start: u32,
    pub heights: Vec<u32>,
}

impl LatticePath {
    /// Lattice points visited, including the endpoint at `x = -1`.
    pub fn vertices(&self) -> Vec<(i32, u32)> {
        let mut out = Vec::new();
        let mut h = 0u32;
        for t in (0..=self.start as usize).rev() {
            let y = self.heights[t];
            for v in h..=y {
                out.push((t as i32, v));
            }
            h = y;
        }
        out.push((-1, h));
        out
    }

    pub fn weight<R: Ring>(&self, x: &R, y: &R) -> R {
        let mut w = R::one();
        for (t, &h) in self.heights.iter().enumerate() {
            w = w * step_weight(t as u32, h, x, y);
        }
        w
    }
}

/// Weight of the left step leaving abscissa `from_x` at height `h`.
pub fn step_weight<R: Ring>(from_x: u32, h: u32, x: &R, y: &R) -> R {
    if h == 0 {
        R::one()
    } else if h <= from_x {
        x.clone()
    } else {
        y.clone()
    }
}

/// A family of paths, starts strictly decreasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpConfig {
    pub paths: Vec<LatticePath>,
}

impl NilpConfig {
    /// Checks shape constraints and pairwise vertex-disjointness.
    pub fn validate(&self, n: u32) -> Result<()> {
        let mut seen = HashSet::new();
        for (i, p) in self.paths.iter().enumerate() {
            if p.start + 2 > n {
                return Err(Error::MalformedPaths(format!("path {} starts beyond {}", i + 1, n.saturating_sub(2))));
            }
            if i > 0 && p.start >= self.paths[i - 1].start {
                return Err(Error::MalformedPaths("starting abscissas must strictly decrease".into()));
            }
            if p.heights.len() != p.start as usize + 1 {
                return Err(Error::MalformedPaths(format!("path {} has the wrong number of left steps", i + 1)));
            }
            if p.heights[0] != p.start + 2 {
                return Err(Error::MalformedPaths(format!("path {} must end at height {}", i + 1, p.start + 2)));
            }
            if p.heights.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::MalformedPaths(format!("path {} moves down", i + 1)));
            }
            for v in p.vertices() {
                if !seen.insert(v) {
                    return Err(Error::MalformedPaths(format!("paths meet at {v:?}")));
                }
            }
        }
        Ok(())
    }

    pub fn weight<R: Ring>(&self, x: &R, y: &R) -> R {
        self.paths.iter().fold(R::one(), |acc, p| acc * p.weight(x, y))
    }
}

pub fn dpp_to_nilp(d: &Dpp) -> NilpConfig {
    let paths = d
        .rows()
        .iter()
        .map(|row| {
            let s = row[0] - 2;
            let heights = (0..=s as usize).map(|t| row.get(t).copied().unwrap_or(0)).collect();
            LatticePath { start: s, heights }
        })
        .collect();
    NilpConfig { paths }
}

pub fn nilp_to_dpp(c: &NilpConfig, n: u32) -> Result<Dpp> {
    c.validate(n)?;
    let rows = c
        .paths
        .iter()
        .map(|p| p.heights.iter().copied().take_while(|&h| h > 0).collect())
        .collect();
    Dpp::new(rows, n).map_err(|e| Error::MalformedPaths(format!("path system does not encode a DPP: {e}")))
}

/// Every non-intersecting family with starts in `0..=n-2`, each exactly once.
pub fn enumerate_nilps(n: u32) -> Vec<NilpConfig> {
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    let mut used = HashSet::new();
    if n >= 2 {
        extend(n - 2, true, &mut chosen, &mut used, &mut out);
    } else {
        out.push(NilpConfig { paths: Vec::new() });
    }
    out
}

fn extend(
    max_start: u32,
    allow: bool,
    chosen: &mut Vec<LatticePath>,
    used: &mut HashSet<(i32, u32)>,
    out: &mut Vec<NilpConfig>,
) {
    out.push(NilpConfig { paths: chosen.clone() });
    if !allow {
        return;
    }
    for s in (0..=max_start).rev() {
        let mut heights = vec![0u32; s as usize + 1];
        heights[0] = s + 2;
        for_each_heights(&mut heights, 1, s + 2, &mut |hs| {
            let p = LatticePath { start: s, heights: hs.to_vec() };
            let vs = p.vertices();
            if vs.iter().any(|v| used.contains(v)) {
                return;
            }
            for v in &vs {
                used.insert(*v);
            }
            chosen.push(p);
            extend(s.wrapping_sub(1), s > 0, chosen, used, out);
            chosen.pop();
            for v in &vs {
                used.remove(v);
            }
        });
    }
}

fn for_each_heights(h: &mut Vec<u32>, t: usize, cap: u32, f: &mut dyn FnMut(&[u32])) {
    if t == h.len() {
        f(h);
        return;
    }
    for v in 0..=cap {
        h[t] = v;
        for_each_heights(h, t + 1, v, f);
    }
    h[t] = 0;
}

/// Lattice network with sources `(s, 0)` and sinks `(-1, s+2)` for `s = 0..=n-2`.
pub struct DppNetwork<R: Ring> {
    pub dag: WeightedDag<R>,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
}

pub fn dpp_network<R: Ring>(n: u32, x: &R, y: &R) -> Result<DppNetwork<R>> {
    let n = n.max(2) as i32;
    let width = n; // abscissas -1..=n-2
    let height = n + 1; // ordinates 0..=n
    let id = |px: i32, py: i32| ((px + 1) * height + py) as usize;
    let mut dag = WeightedDag::new((width * height) as usize);
    for px in -1..=n - 2 {
        for py in 0..height {
            if px >= 0 && py + 1 < height {
                dag.add_edge(id(px, py), id(px, py + 1), R::one())?;
            }
            if px >= 0 {
                dag.add_edge(id(px, py), id(px - 1, py), step_weight(px as u32, py as u32, x, y))?;
            }
        }
    }
    let sources = (0..=n - 2).map(|s| id(s, 0)).collect();
    let sinks = (0..=n - 2).map(|s| id(-1, s + 2)).collect();
    Ok(DppNetwork { dag, sources, sinks })
}

/// `det(I + Z)` where `Z` is the path matrix of [`dpp_network`]; sums over all source subsets.
pub fn zdpp_lgv<R: Ring>(n: u32, x: &R, y: &R) -> Result<R> {
    if n < 2 {
        return Ok(R::one());
    }
    let net = dpp_network(n, x, y)?;
    let z = net.dag.path_matrix(&net.sources, &net.sinks)?;
    let m = z.add(&crate::exact::matrix::ExactMatrix::identity(z.rows()))?;
    m.det()
}
