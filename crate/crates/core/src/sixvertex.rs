//! Six-vertex model with domain wall boundary conditions.
//!
//! Edge occupations: `h` on horizontal edges is the row partial sum of the ASM to the
//! left of the edge, `v` on vertical edges is the column partial sum above it. The
//! boundary is `h = 0` on the left, `h = 1` on the right, `v = 0` on top and `v = 1`
//! at the bottom.

use std::fmt;

use num_traits::{One, Zero};

use crate::asm::{for_each_asm, Asm};
use crate::error::{Error, Result};
use crate::exact::matrix::ExactMatrix;
use crate::exact::rational::{random_nonzero, Rational};

pub const MAX_BRUTE_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexType {
    A1,
    A2,
    B1,
    B2,
    C1,
    C2,
}

impl VertexType {
    pub const ALL: [VertexType; 6] = [Self::A1, Self::A2, Self::B1, Self::B2, Self::C1, Self::C2];

    /// `(h_left, h_right, v_top, v_bottom)`.
    pub fn edges(self) -> (u8, u8, u8, u8) {
        match self {
            Self::A1 => (0, 0, 0, 0),
            Self::A2 => (1, 1, 1, 1),
            Self::B1 => (0, 0, 1, 1),
            Self::B2 => (1, 1, 0, 0),
            Self::C1 => (0, 1, 0, 1),
            Self::C2 => (1, 0, 1, 0),
        }
    }

    pub fn from_edges(e: (u8, u8, u8, u8)) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.edges() == e)
    }

    /// The ASM entry `h_right - h_left`.
    pub fn entry(self) -> i8 {
        let (l, r, _, _) = self.edges();
        r as i8 - l as i8
    }
}

impl fmt::Display for VertexType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::A1 => "a1",
            Self::A2 => "a2",
            Self::B1 => "b1",
            Self::B2 => "b2",
            Self::C1 => "c1",
            Self::C2 => "c2",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixVertexConfig {
    n: usize,
    types: Vec<VertexType>,
}

impl SixVertexConfig {
    /// Checks edge continuity and the boundary.
    pub fn new(n: usize, types: Vec<VertexType>) -> Result<Self> {
        if types.len() != n * n {
            return Err(Error::InconsistentEdges(format!("expected {} vertices, got {}", n * n, types.len())));
        }
        let c = SixVertexConfig { n, types };
        for i in 0..n {
            for j in 0..n {
                let (l, r, t, b) = c.get(i, j).edges();
                if j == 0 && l != 0 {
                    return Err(Error::InconsistentEdges(format!("left boundary at row {}", i + 1)));
                }
                if j == n - 1 && r != 1 {
                    return Err(Error::InconsistentEdges(format!("right boundary at row {}", i + 1)));
                }
                if i == 0 && t != 0 {
                    return Err(Error::InconsistentEdges(format!("top boundary at column {}", j + 1)));
                }
                if i == n - 1 && b != 1 {
                    return Err(Error::InconsistentEdges(format!("bottom boundary at column {}", j + 1)));
                }
                if j + 1 < n && c.get(i, j + 1).edges().0 != r {
                    return Err(Error::InconsistentEdges(format!("horizontal edge after ({}, {})", i + 1, j + 1)));
                }
                if i + 1 < n && c.get(i + 1, j).edges().2 != b {
                    return Err(Error::InconsistentEdges(format!("vertical edge below ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> VertexType {
        self.types[i * self.n + j]
    }

    pub fn count(&self, t: VertexType) -> usize {
        self.types.iter().filter(|&&x| x == t).count()
    }
}

pub fn asm_to_6v(b: &Asm) -> SixVertexConfig {
    let n = b.n();
    let mut types = Vec::with_capacity(n * n);
    let mut colsum = vec![0i8; n];
    for i in 0..n {
        let mut h = 0i8;
        for (j, v) in colsum.iter_mut().enumerate() {
            let e = b.get(i, j);
            h += e;
            let t = match (e, h, *v) {
                (1, _, _) => VertexType::C1,
                (-1, _, _) => VertexType::C2,
                (_, 0, 0) => VertexType::A1,
                (_, 1, 1) => VertexType::A2,
                (_, 0, 1) => VertexType::B1,
                _ => VertexType::B2,
            };
            types.push(t);
            *v += e;
        }
    }
    SixVertexConfig { n, types }
}

pub fn six_vertex_to_asm(c: &SixVertexConfig) -> Result<Asm> {
    let n = c.n();
    let c = SixVertexConfig::new(n, c.types.clone())?;
    let rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| c.get(i, j).entry() as i64).collect()).collect();
    Asm::new(&rows).map_err(|e| Error::InconsistentEdges(e.to_string()))
}

/// Quantum parameter and square roots of the spectral parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectralData {
    pub q: Rational,
    /// `z_i = p_i^2`
    pub p: Vec<Rational>,
    /// `w_j = r_j^2`
    pub r: Vec<Rational>,
}

impl SpectralData {
    pub fn new(q: Rational, p: Vec<Rational>, r: Vec<Rational>) -> Result<Self> {
        let one = Rational::one();
        if q.is_zero() || q == one || q == -one.clone() {
            return Err(Error::InvalidArgument("q must avoid 0, 1 and -1".into()));
        }
        if p.len() != r.len() {
            return Err(Error::DimensionMismatch("row and column parameter counts differ".into()));
        }
        if p.iter().chain(&r).any(Zero::is_zero) {
            return Err(Error::InvalidArgument("spectral roots must be nonzero".into()));
        }
        let d = SpectralData { q, p, r };
        for i in 0..d.n() {
            for j in 0..d.n() {
                if d.weight(VertexType::A1, i, j).is_zero() || d.weight(VertexType::B1, i, j).is_zero() {
                    return Err(Error::InvalidArgument(format!("vanishing a or b weight at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(d)
    }

    /// Random data with distinct `z`'s and `w`'s and nonvanishing weights.
    pub fn random<G: rand::Rng + ?Sized>(n: usize, rng: &mut G) -> Self {
        loop {
            let q = random_nonzero(rng, 7, 4);
            let p: Vec<Rational> = (0..n).map(|_| random_nonzero(rng, 9, 5)).collect();
            let r: Vec<Rational> = (0..n).map(|_| random_nonzero(rng, 9, 5)).collect();
            let Ok(d) = SpectralData::new(q, p, r) else { continue };
            if vandermonde(&d.z()).is_zero() || vandermonde(&d.w()).is_zero() {
                continue;
            }
            return d;
        }
    }

    pub fn n(&self) -> usize {
        self.p.len()
    }

    pub fn z(&self) -> Vec<Rational> {
        self.p.iter().map(|x| x * x).collect()
    }

    pub fn w(&self) -> Vec<Rational> {
        self.r.iter().map(|x| x * x).collect()
    }

    /// Weight of a vertex of the given type in row `i`, column `j`.
    pub fn weight(&self, t: VertexType, i: usize, j: usize) -> Rational {
        vertex_weight(t, &self.p[i], &self.r[j], &self.q)
    }
}

/// `a = q z - w/q`, `b = z/q - q w`, `c = (q^2 - q^-2) sqrt(z w)` with `z = p^2`, `w = r^2`.
pub fn vertex_weight(t: VertexType, p: &Rational, r: &Rational, q: &Rational) -> Rational {
    let z = p * p;
    let w = r * r;
    let qi = q.recip();
    match t {
        VertexType::A1 | VertexType::A2 => q * &z - &qi * &w,
        VertexType::B1 | VertexType::B2 => &qi * &z - q * &w,
        VertexType::C1 | VertexType::C2 => (q * q - &qi * &qi) * p * r,
    }
}

/// `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde(x: &[Rational]) -> Rational {
    let mut v = Rational::one();
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            v *= &x[i] - &x[j];
        }
    }
    v
}

/// Sum over configurations of the product of vertex weights, over `prod_i c(z_i, w_i)`.
pub fn brute_partition(data: &SpectralData) -> Result<Rational> {
    let n = data.n();
    if n > MAX_BRUTE_N {
        return Err(Error::SizeCap { what: "six-vertex size", max: MAX_BRUTE_N, got: n });
    }
    let mut total = Rational::zero();
    for_each_asm(n, |b| {
        let c = asm_to_6v(b);
        let mut w = Rational::one();
        for i in 0..n {
            for j in 0..n {
                w *= data.weight(c.get(i, j), i, j);
            }
        }
        total += w;
    })?;
    let norm: Rational = (0..n).map(|i| data.weight(VertexType::C1, i, i)).product();
    if norm.is_zero() {
        return Err(Error::DivisionByZero("normalization prod c(z_i, w_i) vanishes".into()));
    }
    Ok(total / norm)
}

/// Sign relating the printed Vandermonde convention to the configuration sum.
pub fn izergin_sign(n: usize) -> i64 {
    if (n * n.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `prod_{i,j} a b / (Delta(z) Delta(w)) * det[1 / (a b)]`, exactly as printed.
pub fn izergin_formula(data: &SpectralData) -> Result<Rational> {
    let n = data.n();
    let dz = vandermonde(&data.z());
    let dw = vandermonde(&data.w());
    if dz.is_zero() || dw.is_zero() {
        return Err(Error::InvalidArgument("spectral parameters must be pairwise distinct".into()));
    }
    let ab = |i: usize, j: usize| data.weight(VertexType::A1, i, j) * data.weight(VertexType::B1, i, j);
    let mut prefactor = Rational::one();
    for i in 0..n {
        for j in 0..n {
            prefactor *= ab(i, j);
        }
    }
    let m = ExactMatrix::from_fn(n, n, |i, j| ab(i, j).recip());
    Ok(prefactor / (dz * dw) * m.det()?)
}

/// The printed formula times [`izergin_sign`], equal to [`brute_partition`].
pub fn izergin_det(data: &SpectralData) -> Result<Rational> {
    Ok(izergin_formula(data)? * Rational::from_integer(izergin_sign(data.n()).into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::enumerate_asms;
    use crate::exact::rational::{int, rat};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_vertex() {
        let c = asm_to_6v(&Asm::identity(1));
        assert_eq!(c.get(0, 0), VertexType::C1);
        let d = SpectralData::new(int(2), vec![int(3)], vec![int(5)]).unwrap();
        assert_eq!(brute_partition(&d).unwrap(), int(1));
        assert_eq!(izergin_det(&d).unwrap(), int(1));
    }

    #[test]
    fn weights_by_hand() {
        let (q, p) = (int(2), int(2));
        assert_eq!(vertex_weight(VertexType::A1, &p, &int(1), &q), rat(15, 2));
        assert_eq!(vertex_weight(VertexType::C2, &p, &int(3), &q), rat(45, 2));
        let z = &p * &p;
        assert_eq!(vertex_weight(VertexType::B2, &p, &p, &q), &z * (q.recip() - &q));
    }

    #[test]
    fn bijection_and_statistics() {
        for n in 1..=5 {
            for b in enumerate_asms(n).unwrap() {
                let c = asm_to_6v(&b);
                SixVertexConfig::new(n, c.types.clone()).unwrap();
                assert_eq!(six_vertex_to_asm(&c).unwrap(), b);
                let s = b.statistics();
                let na = c.count(VertexType::A1) + c.count(VertexType::A2);
                let nc = c.count(VertexType::C1) + c.count(VertexType::C2);
                assert_eq!(s.nneg, c.count(VertexType::C2));
                assert_eq!(2 * s.nneg, nc - n);
                assert_eq!(2 * (s.inv - s.nneg), na);
                assert_eq!(c.count(VertexType::A1), c.count(VertexType::A2));
                assert_eq!(c.count(VertexType::C1), c.count(VertexType::C2) + n);
            }
        }
    }

    #[test]
    fn broken_edges_rejected() {
        let mut c = asm_to_6v(&Asm::identity(2));
        c.types[1] = VertexType::A1;
        assert!(matches!(six_vertex_to_asm(&c), Err(Error::InconsistentEdges(_))));
    }

    #[test]
    fn izergin_matches_brute() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=4 {
            for _ in 0..3 {
                let d = SpectralData::random(n, &mut rng);
                assert_eq!(izergin_det(&d).unwrap(), brute_partition(&d).unwrap(), "n = {n}");
            }
        }
    }

    #[test]
    fn degenerate_data_rejected() {
        assert!(SpectralData::new(int(1), vec![int(1)], vec![int(2)]).is_err());
        let d = SpectralData::new(int(2), vec![int(1), int(-1)], vec![int(3), int(5)]).unwrap();
        assert!(izergin_det(&d).is_err());
    }
}
