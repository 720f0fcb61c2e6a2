//! The T-system `T_{i,j,k+1} T_{i,j,k-1} = T_{i,j+1,k} T_{i,j-1,k} + T_{i+1,j,k} T_{i-1,j,k}`
//! on flat initial data, octahedron moves on stepped surfaces, and the cluster route.

use std::collections::{BTreeMap, HashMap};

use rand::seq::SliceRandom;

use super::quiver::Quiver;
use super::seed::Seed;
use crate::error::{Error, Result};
use crate::exact::laurent::{MultiLaurent, VarNames};
use crate::exact::rational::{random_positive, Rational};
use crate::exact::ring::Ring;

pub type Site = (i64, i64);

/// Initial values keyed by site on the flat surface `k_{p,q} = (p + q + parity) mod 2`.
#[derive(Clone, Debug)]
pub struct FlatData<R: Ring> {
    parity: i64,
    values: BTreeMap<Site, R>,
}

/// Sites within lattice distance `radius` of `(i, j)`.
pub fn light_cone(i: i64, j: i64, radius: i64) -> Vec<Site> {
    let mut v = Vec::new();
    for p in i - radius..=i + radius {
        let r = radius - (p - i).abs();
        for q in j - r..=j + r {
            v.push((p, q));
        }
    }
    v
}

/// Variable name for the initial value at a site.
pub fn site_name(p: i64, q: i64) -> String {
    format!("t[{p},{q}]")
}

impl<R: Ring> FlatData<R> {
    pub fn new(parity: i64, values: BTreeMap<Site, R>) -> Result<Self> {
        if values.values().any(|v| v.is_zero()) {
            return Err(Error::InvalidArgument("initial values must be nonzero".into()));
        }
        Ok(FlatData { parity: parity.rem_euclid(2), values })
    }

    /// Parity of the flat surface on which `T_{i,j,k}` is reached.
    pub fn parity_for(i: i64, j: i64, k: i64) -> i64 {
        (i + j + k).rem_euclid(2)
    }

    pub fn parity(&self) -> i64 {
        self.parity
    }

    pub fn height(&self, p: i64, q: i64) -> i64 {
        (p + q + self.parity).rem_euclid(2)
    }

    pub fn get(&self, p: i64, q: i64) -> Result<&R> {
        self.values.get(&(p, q)).ok_or(Error::MissingInitialData { i: p, j: q })
    }

    pub fn sites(&self) -> impl Iterator<Item = &Site> {
        self.values.keys()
    }

    pub fn ones(parity: i64, sites: &[Site]) -> Self {
        FlatData { parity: parity.rem_euclid(2), values: sites.iter().map(|&s| (s, R::one())).collect() }
    }
}

impl FlatData<MultiLaurent> {
    /// One variable per site, named `t[p,q]`, indexed in site order.
    pub fn symbolic(parity: i64, sites: &[Site]) -> (Self, VarNames) {
        let mut sorted = sites.to_vec();
        sorted.sort();
        sorted.dedup();
        let names = VarNames::new(sorted.iter().map(|&(p, q)| site_name(p, q)));
        let values = sorted.iter().enumerate().map(|(idx, &s)| (s, MultiLaurent::var(idx))).collect();
        (FlatData { parity: parity.rem_euclid(2), values }, names)
    }
}

impl FlatData<Rational> {
    pub fn random_positive<G: rand::Rng + ?Sized>(parity: i64, sites: &[Site], rng: &mut G) -> Self {
        let mut sorted = sites.to_vec();
        sorted.sort();
        sorted.dedup();
        let values = sorted.into_iter().map(|s| (s, random_positive(rng, 9, 5))).collect();
        FlatData { parity: parity.rem_euclid(2), values }
    }
}

/// Memoized evaluation of the recurrence above flat initial data.
pub struct TSystem<'a, R: Ring> {
    data: &'a FlatData<R>,
    memo: HashMap<(i64, i64, i64), R>,
}

impl<'a, R: Ring> TSystem<'a, R> {
    pub fn new(data: &'a FlatData<R>) -> Self {
        TSystem { data, memo: HashMap::new() }
    }

    pub fn value(&mut self, i: i64, j: i64, k: i64) -> Result<R> {
        let h = self.data.height(i, j);
        if k < h || (k - h) % 2 != 0 {
            return Err(Error::Inadmissible { i, j });
        }
        if k == h {
            return self.data.get(i, j).cloned();
        }
        if let Some(v) = self.memo.get(&(i, j, k)) {
            return Ok(v.clone());
        }
        let num = self.value(i, j + 1, k - 1)? * self.value(i, j - 1, k - 1)?
            + self.value(i + 1, j, k - 1)? * self.value(i - 1, j, k - 1)?;
        let den = self.value(i, j, k - 2)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero(format!("T({i},{j},{}) vanishes", k - 2)));
        }
        let v = num.exact_div(&den)?;
        self.memo.insert((i, j, k), v.clone());
        Ok(v)
    }
}

/// `T_{i,j,k}` from flat data of matching parity.
pub fn tsystem_value<R: Ring>(i: i64, j: i64, k: i64, data: &FlatData<R>) -> Result<R> {
    TSystem::new(data).value(i, j, k)
}

/// Rectangular window of a stepped surface with heights and values.
#[derive(Clone, Debug, PartialEq)]
pub struct SteppedSurface<R: Ring> {
    rows: (i64, i64),
    cols: (i64, i64),
    heights: Vec<i64>,
    values: Vec<R>,
}

impl<R: Ring> SteppedSurface<R> {
    /// The flat surface on `rows x cols` (inclusive ranges) carrying `data`.
    pub fn flat(data: &FlatData<R>, rows: (i64, i64), cols: (i64, i64)) -> Result<Self> {
        let mut heights = Vec::new();
        let mut values = Vec::new();
        for p in rows.0..=rows.1 {
            for q in cols.0..=cols.1 {
                heights.push(data.height(p, q));
                values.push(data.get(p, q)?.clone());
            }
        }
        let s = SteppedSurface { rows, cols, heights, values };
        s.check()?;
        Ok(s)
    }

    fn idx(&self, p: i64, q: i64) -> Option<usize> {
        if p < self.rows.0 || p > self.rows.1 || q < self.cols.0 || q > self.cols.1 {
            return None;
        }
        Some(((p - self.rows.0) * (self.cols.1 - self.cols.0 + 1) + (q - self.cols.0)) as usize)
    }

    pub fn sites(&self) -> Vec<Site> {
        (self.rows.0..=self.rows.1).flat_map(|p| (self.cols.0..=self.cols.1).map(move |q| (p, q))).collect()
    }

    pub fn height(&self, p: i64, q: i64) -> Option<i64> {
        self.idx(p, q).map(|x| self.heights[x])
    }

    pub fn value(&self, p: i64, q: i64) -> Option<&R> {
        self.idx(p, q).map(|x| &self.values[x])
    }

    fn check(&self) -> Result<()> {
        for (p, q) in self.sites() {
            let h = self.height(p, q).unwrap_or_default();
            for (dp, dq) in [(0, 1), (1, 0)] {
                if let Some(h2) = self.height(p + dp, q + dq) {
                    if (h2 - h).abs() != 1 {
                        return Err(Error::Internal(format!("stepped-surface condition fails at ({p},{q})")));
                    }
                }
            }
        }
        Ok(())
    }

    fn neighbors(p: i64, q: i64) -> [Site; 4] {
        [(p, q + 1), (p, q - 1), (p + 1, q), (p - 1, q)]
    }

    pub fn is_admissible(&self, p: i64, q: i64) -> bool {
        let Some(h) = self.height(p, q) else { return false };
        Self::neighbors(p, q).iter().all(|&(a, b)| self.height(a, b) == Some(h + 1))
    }

    pub fn admissible_sites(&self) -> Vec<Site> {
        self.sites().into_iter().filter(|&(p, q)| self.is_admissible(p, q)).collect()
    }

    /// Raises `(p, q)` by two, replacing its value through the T-system relation.
    pub fn octahedron_move(&self, p: i64, q: i64) -> Result<Self> {
        if !self.is_admissible(p, q) {
            return Err(Error::Inadmissible { i: p, j: q });
        }
        let v = |a: i64, b: i64| self.value(a, b).cloned().expect("neighbor inside window");
        let num = v(p, q + 1) * v(p, q - 1) + v(p + 1, q) * v(p - 1, q);
        let x = self.idx(p, q).expect("site inside window");
        let mut out = self.clone();
        out.values[x] = num.exact_div(&self.values[x])?;
        out.heights[x] += 2;
        out.check()?;
        Ok(out)
    }
}

/// The T-system quiver on `rows x cols` for the flat surface with the given parity:
/// `(p, q) -> (p, q +- 1)` at height 0 and `(p, q) -> (p +- 1, q)` at height 1.
/// Sites are numbered row by row; boundary sites are frozen.
pub fn tsystem_seed<R: Ring>(data: &FlatData<R>, rows: (i64, i64), cols: (i64, i64)) -> Result<Seed<R>> {
    let width = cols.1 - cols.0 + 1;
    let index = |p: i64, q: i64| ((p - rows.0) * width + (q - cols.0)) as usize;
    let inside = |p: i64, q: i64| p >= rows.0 && p <= rows.1 && q >= cols.0 && q <= cols.1;
    let n = ((rows.1 - rows.0 + 1) * width) as usize;
    let mut quiver = Quiver::empty(n);
    let mut cluster = Vec::with_capacity(n);
    let mut frozen = Vec::with_capacity(n);
    for p in rows.0..=rows.1 {
        for q in cols.0..=cols.1 {
            cluster.push(data.get(p, q)?.clone());
            frozen.push(p == rows.0 || p == rows.1 || q == cols.0 || q == cols.1);
            let targets = if data.height(p, q) == 0 { [(p, q + 1), (p, q - 1)] } else { [(p + 1, q), (p - 1, q)] };
            for (a, b) in targets {
                if inside(a, b) {
                    quiver.add_arrow(index(p, q), index(a, b))?;
                }
            }
        }
    }
    Seed::with_frozen(cluster, quiver, frozen)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub moves_applied: usize,
    pub values_agree: bool,
    pub degree_condition: bool,
    /// First move after which the two routes disagree.
    pub first_mismatch: Option<Site>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.values_agree && self.degree_condition
    }
}

/// Runs `moves` as octahedron moves and as seed mutations on the window, comparing all
/// values and checking that every mutated vertex has two incoming and two outgoing arrows.
pub fn cluster_tsystem_consistency<R: Ring>(
    data: &FlatData<R>,
    rows: (i64, i64),
    cols: (i64, i64),
    moves: &[Site],
) -> Result<ConsistencyReport> {
    let mut surface = SteppedSurface::flat(data, rows, cols)?;
    let mut seed = tsystem_seed(data, rows, cols)?;
    let width = cols.1 - cols.0 + 1;
    let mut report = ConsistencyReport { moves_applied: 0, values_agree: true, degree_condition: true, first_mismatch: None };
    for &(p, q) in moves {
        let k = ((p - rows.0) * width + (q - cols.0)) as usize;
        let quiver = seed.quiver();
        if quiver.in_degree(k) != 2 || quiver.out_degree(k) != 2 {
            report.degree_condition = false;
        }
        surface = surface.octahedron_move(p, q)?;
        seed = seed.mutate(k)?;
        report.moves_applied += 1;
        let agree = surface.sites().iter().zip(seed.cluster()).all(|(&(a, b), x)| surface.value(a, b) == Some(x));
        if !agree && report.values_agree {
            report.values_agree = false;
            report.first_mismatch = Some((p, q));
        }
    }
    Ok(report)
}

/// `count` moves, each drawn uniformly from the admissible sites of the current surface.
pub fn random_moves<G: rand::Rng + ?Sized>(
    rows: (i64, i64),
    cols: (i64, i64),
    count: usize,
    rng: &mut G,
) -> Result<Vec<Site>> {
    let sites: Vec<Site> = (rows.0..=rows.1).flat_map(|p| (cols.0..=cols.1).map(move |q| (p, q))).collect();
    let data: FlatData<Rational> = FlatData::ones(0, &sites);
    let mut surface = SteppedSurface::flat(&data, rows, cols)?;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let Some(&(p, q)) = surface.admissible_sites().choose(rng) else { break };
        surface = surface.octahedron_move(p, q)?;
        out.push((p, q));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn all_ones() {
        for k in 0..=6 {
            let data: FlatData<Rational> = FlatData::ones(FlatData::<Rational>::parity_for(0, 0, k), &light_cone(0, 0, k));
            assert_eq!(tsystem_value(0, 0, k, &data).unwrap(), Ring::pow(&int(2), (k * (k - 1) / 2) as u32));
        }
    }

    #[test]
    fn one_step_symbolic() {
        let (data, names) = FlatData::symbolic(0, &light_cone(0, 0, 2));
        let t = |p: i64, q: i64| MultiLaurent::var(names.index_of(&site_name(p, q)).unwrap());
        let expect = (&t(0, 1) * &t(0, -1) + &t(1, 0) * &t(-1, 0)).div_exact(&t(0, 0)).unwrap();
        assert_eq!(tsystem_value(0, 0, 2, &data).unwrap(), expect);
        assert!(matches!(tsystem_value(0, 0, 1, &data), Err(Error::Inadmissible { .. })));
        assert!(matches!(tsystem_value(0, 0, 4, &data), Err(Error::MissingInitialData { .. })));
    }

    #[test]
    fn moves_on_flat_surface() {
        let sites = light_cone(0, 0, 6);
        let (data, _) = FlatData::symbolic(0, &sites);
        let s = SteppedSurface::flat(&data, (-2, 2), (-2, 2)).unwrap();
        let m = s.octahedron_move(0, 0).unwrap();
        assert_eq!(m.height(0, 0), Some(2));
        assert_eq!(m.value(0, 0).unwrap(), &tsystem_value(0, 0, 2, &data).unwrap());
        assert!(s.octahedron_move(0, 1).is_err());
        assert!(s.octahedron_move(-2, 0).is_err());
    }

    #[test]
    fn slab_order_independent() {
        let sites = light_cone(0, 0, 8);
        let data: FlatData<Rational> = FlatData::random_positive(0, &sites, &mut ChaCha8Rng::seed_from_u64(1));
        let s = SteppedSurface::flat(&data, (-2, 2), (-2, 2)).unwrap();
        let evens = s.admissible_sites();
        assert_eq!(evens.len(), 5);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut reference = None;
        for _ in 0..6 {
            let mut order = evens.clone();
            order.shuffle(&mut rng);
            let mut cur = s.clone();
            for (p, q) in order {
                cur = cur.octahedron_move(p, q).unwrap();
            }
            match &reference {
                None => reference = Some(cur),
                Some(r) => assert_eq!(r, &cur),
            }
        }
    }

    #[test]
    fn cluster_route_matches() {
        let sites = light_cone(0, 0, 8);
        let (data, _) = FlatData::symbolic(0, &sites);
        let r = cluster_tsystem_consistency(&data, (-2, 2), (-2, 2), &[(0, 0)]).unwrap();
        assert!(r.passed());
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..3 {
            let moves = random_moves((-2, 2), (-2, 2), 6, &mut rng).unwrap();
            let r = cluster_tsystem_consistency(&data, (-2, 2), (-2, 2), &moves).unwrap();
            assert!(r.passed(), "{moves:?} {r:?}");
            assert_eq!(r.moves_applied, moves.len());
        }
    }
}
