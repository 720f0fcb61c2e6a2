//! D/U transfer matrices and the network solution of the T-system.
//!
//! `T_{i,j,k}` is a principal minor of a product of 2x2 block factors, one `D U` pair per
//! half-octahedron of the flat surface inside the light cone, times a monomial prefactor.

use super::tsystem::FlatData;
use crate::error::{Error, Result};
use crate::exact::laurent::MultiLaurent;
use crate::exact::lgv::{lgv_determinant, WeightedDag};
use crate::exact::matrix::ExactMatrix;
use crate::exact::ring::Ring;

pub const MAX_NETWORK_K: i64 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DuKind {
    D,
    U,
}

/// `D_i(u, a, b) = [[1, 0], [u/b, a/b]]` or `U_i(b, c, v) = [[b/c, v/c], [0, 1]]` acting
/// on rows and columns `i, i + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct DuFactor<R: Ring> {
    pub kind: DuKind,
    pub pos: i64,
    pub params: [R; 3],
}

impl<R: Ring> DuFactor<R> {
    pub fn d(pos: i64, u: R, a: R, b: R) -> Self {
        DuFactor { kind: DuKind::D, pos, params: [u, a, b] }
    }

    pub fn u(pos: i64, b: R, c: R, v: R) -> Self {
        DuFactor { kind: DuKind::U, pos, params: [b, c, v] }
    }

    pub fn block(&self) -> Result<[[R; 2]; 2]> {
        let [p0, p1, p2] = &self.params;
        let div = |x: &R, y: &R| {
            if y.is_zero() {
                Err(Error::DivisionByZero("D/U factor with a zero parameter".into()))
            } else {
                x.exact_div(y)
            }
        };
        Ok(match self.kind {
            DuKind::D => [[R::one(), R::zero()], [div(p0, p2)?, div(p1, p2)?]],
            DuKind::U => [[div(p0, p1)?, div(p2, p1)?], [R::zero(), R::one()]],
        })
    }

    /// The factor as an `n x n` matrix on rows `lo..lo + n`, identity elsewhere.
    pub fn embed(&self, lo: i64, n: usize) -> Result<ExactMatrix<R>> {
        let r = self.pos - lo;
        if r < 0 || r + 1 >= n as i64 {
            return Err(Error::Internal(format!("factor at {} leaves the window", self.pos)));
        }
        let r = r as usize;
        let b = self.block()?;
        Ok(ExactMatrix::from_fn(n, n, |x, y| {
            if (r..r + 2).contains(&x) && (r..r + 2).contains(&y) {
                b[x - r][y - r].clone()
            } else if x == y {
                R::one()
            } else {
                R::zero()
            }
        }))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DuReorderReport<R: Ring> {
    pub x: R,
    pub lhs: ExactMatrix<R>,
    pub rhs: ExactMatrix<R>,
    pub holds: bool,
}

/// `D(u, a, b) U(b, c, v) = U(a, x, v) D(u, x, c)` with `x` given.
pub fn du_reorder_check_with<R: Ring>(u: &R, a: &R, b: &R, c: &R, v: &R, x: &R) -> Result<DuReorderReport<R>> {
    let lhs = DuFactor::d(0, u.clone(), a.clone(), b.clone())
        .embed(0, 2)?
        .mul(&DuFactor::u(0, b.clone(), c.clone(), v.clone()).embed(0, 2)?)?;
    let rhs = DuFactor::u(0, a.clone(), x.clone(), v.clone())
        .embed(0, 2)?
        .mul(&DuFactor::d(0, u.clone(), x.clone(), c.clone()).embed(0, 2)?)?;
    let holds = lhs == rhs;
    Ok(DuReorderReport { x: x.clone(), lhs, rhs, holds })
}

/// The reordering identity with `x = (a c + u v) / b`.
pub fn du_reorder_check<R: Ring>(u: &R, a: &R, b: &R, c: &R, v: &R) -> Result<DuReorderReport<R>> {
    if b.is_zero() {
        return Err(Error::DivisionByZero("b must be nonzero".into()));
    }
    let x = (a.clone() * c.clone() + u.clone() * v.clone()).exact_div(b)?;
    du_reorder_check_with(u, a, b, c, v, &x)
}

/// The reordering identity over Laurent polynomials in `u, a, b, c, v, x` (indices 0..6),
/// with `x` a new variable: `x b c (LHS - RHS)` must be a multiple of `b x - a c - u v`
/// entrywise. Returns the multipliers.
pub fn du_reorder_symbolic() -> Result<Vec<MultiLaurent>> {
    let [u, a, b, c, v, x]: [MultiLaurent; 6] = std::array::from_fn(MultiLaurent::var);
    let r = du_reorder_check_with(&u, &a, &b, &c, &v, &x)?;
    let relation = &(&b * &x) - &(&(&a * &c) + &(&u * &v));
    let clear = &(&x * &b) * &c;
    r.lhs.sub(&r.rhs)?.entries().iter().map(|d| (&clear * d).div_exact(&relation)).collect()
}

#[derive(Clone, Debug)]
pub struct Network<R: Ring> {
    pub i: i64,
    pub j: i64,
    pub k: i64,
    /// First row of the window `[i - k + 2, i + k - 1]`.
    pub lo: i64,
    pub factors: Vec<DuFactor<R>>,
    pub matrix: ExactMatrix<R>,
    pub dag: WeightedDag<R>,
    /// Entry vertices, one per window row.
    pub sources: Vec<usize>,
    /// Exit vertices, one per window row.
    pub sinks: Vec<usize>,
}

impl<R: Ring> Network<R> {
    pub fn size(&self) -> usize {
        self.matrix.rows()
    }

    /// Window positions of rows `i + 1 ..= i + k - 1`.
    pub fn minor_rows(&self) -> Vec<usize> {
        (self.i + 1..self.i + self.k).map(|r| (r - self.lo) as usize).collect()
    }
}

/// Factors for every half-octahedron `(p, q)` with `|p - i| + |q - j| <= k - 2` and
/// `p + q = i + j + k (mod 2)`: `D_p(T_{p-1,q}, T_{p,q-1}, T_{p,q}) U_p(T_{p,q}, T_{p,q+1}, T_{p+1,q})`,
/// ordered by decreasing `q` (then increasing `p`).
pub fn build_network<R: Ring>(i: i64, j: i64, k: i64, data: &FlatData<R>) -> Result<Network<R>> {
    if k < 2 {
        return Err(Error::InvalidArgument("network needs k >= 2".into()));
    }
    let mut sites = Vec::new();
    for p in i - k + 2..=i + k - 2 {
        for q in j - k + 2..=j + k - 2 {
            if (p - i).abs() + (q - j).abs() <= k - 2 && (p + q - i - j - k).rem_euclid(2) == 0 {
                sites.push((p, q));
            }
        }
    }
    sites.sort_by_key(|&(p, q)| (-q, p));
    let t = |p: i64, q: i64| data.get(p, q).cloned();
    let mut factors = Vec::with_capacity(2 * sites.len());
    for &(p, q) in &sites {
        factors.push(DuFactor::d(p, t(p - 1, q)?, t(p, q - 1)?, t(p, q)?));
        factors.push(DuFactor::u(p, t(p, q)?, t(p, q + 1)?, t(p + 1, q)?));
    }
    let lo = i - k + 2;
    let n = (2 * k - 2) as usize;
    let mut matrix = ExactMatrix::identity(n);
    let mut dag = WeightedDag::new(n);
    let sources: Vec<usize> = (0..n).collect();
    let mut layer = sources.clone();
    for f in &factors {
        let m = f.embed(lo, n)?;
        matrix = matrix.mul(&m)?;
        let next: Vec<usize> = (0..n).map(|_| dag.add_vertex()).collect();
        for x in 0..n {
            for y in 0..n {
                if !m[(x, y)].is_zero() {
                    dag.add_edge(layer[x], next[y], m[(x, y)].clone())?;
                }
            }
        }
        layer = next;
    }
    Ok(Network { i, j, k, lo, factors, matrix, dag, sources, sinks: layer })
}

/// `prod_{a=1}^{k-1} T_{i+k-1-a, j+a} / prod_{a=1}^{k-2} T_{i+k-1-a, j-a}`.
pub fn prefactor<R: Ring>(i: i64, j: i64, k: i64, data: &FlatData<R>) -> Result<R> {
    let mut num = R::one();
    for a in 1..k {
        num = num * data.get(i + k - 1 - a, j + a)?.clone();
    }
    let mut den = R::one();
    for a in 1..k - 1 {
        den = den * data.get(i + k - 1 - a, j - a)?.clone();
    }
    if den.is_zero() {
        return Err(Error::DivisionByZero("prefactor denominator vanishes".into()));
    }
    num.exact_div(&den)
}

/// `T_{i,j,k}` as the principal minor of the factor product on rows `i+1..=i+k-1` times
/// the prefactor.
pub fn solt_eval<R: Ring>(i: i64, j: i64, k: i64, data: &FlatData<R>) -> Result<R> {
    let net = build_network(i, j, k, data)?;
    let rows = net.minor_rows();
    Ok(net.matrix.submatrix(&rows, &rows).det()? * prefactor(i, j, k, data)?)
}

/// The same minor read off the network as a non-intersecting path determinant.
pub fn network_paths_eval<R: Ring>(i: i64, j: i64, k: i64, data: &FlatData<R>) -> Result<R> {
    if k > MAX_NETWORK_K {
        return Err(Error::SizeCap { what: "network k", max: MAX_NETWORK_K as usize, got: k as usize });
    }
    let net = build_network(i, j, k, data)?;
    let rows = net.minor_rows();
    let src: Vec<usize> = rows.iter().map(|&r| net.sources[r]).collect();
    let dst: Vec<usize> = rows.iter().map(|&r| net.sinks[r]).collect();
    lgv_determinant(&net.dag, &src, &dst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster::tsystem::{light_cone, tsystem_value};
    use crate::exact::lgv::nonintersecting_sum;
    use crate::exact::rational::{int, Rational};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn sym(i: i64, j: i64, k: i64) -> FlatData<MultiLaurent> {
        FlatData::symbolic(FlatData::<MultiLaurent>::parity_for(i, j, k), &light_cone(i, j, k)).0
    }

    #[test]
    fn reorder_identity() {
        let one = int(1);
        let r = du_reorder_check(&one, &one, &one, &one, &one).unwrap();
        assert!(r.holds);
        assert_eq!(r.x, int(2));
        let q = du_reorder_symbolic().unwrap();
        assert_eq!(q.iter().filter(|m| !num_traits::Zero::is_zero(*m)).count(), 2);
        // monomial parameters keep the identity inside the Laurent ring
        let z = MultiLaurent::var(0);
        let r = du_reorder_check(&z, &z, &z, &z, &z).unwrap();
        assert!(r.holds);
        assert_eq!(r.x, z.scale(&int(2)));
        let bad = du_reorder_check_with(&int(1), &int(2), &int(3), &int(5), &int(7), &int(6)).unwrap();
        assert!(!bad.holds);
        assert!(du_reorder_check_with(&int(1), &int(2), &int(3), &int(5), &int(7), &rat_x()).unwrap().holds);
    }

    fn rat_x() -> Rational {
        (int(2) * int(5) + int(1) * int(7)) / int(3)
    }

    #[test]
    fn smallest_network() {
        let data = sym(0, 0, 2);
        let net = build_network(0, 0, 2, &data).unwrap();
        assert_eq!(net.factors.len(), 2);
        assert_eq!((net.sources.len(), net.sinks.len()), (2, 2));
        assert_eq!(solt_eval(0, 0, 2, &data).unwrap(), tsystem_value(0, 0, 2, &data).unwrap());
    }

    #[test]
    fn symbolic_agreement() {
        for k in 2..=4 {
            for (i, j) in [(0, 0), (1, 0), (0, 1)] {
                let data = sym(i, j, k);
                let t = tsystem_value(i, j, k, &data).unwrap();
                assert_eq!(solt_eval(i, j, k, &data).unwrap(), t, "({i},{j},{k})");
                assert!(t.has_nonnegative_integer_coeffs());
                let net = build_network(i, j, k, &data).unwrap();
                assert_eq!(net.factors.len() as i64, 2 * (k - 1) * (k - 1));
                let pm = net.dag.path_matrix(&net.sources, &net.sinks).unwrap();
                assert_eq!(pm, net.matrix);
                assert_eq!(network_paths_eval(i, j, k, &data).unwrap() * prefactor(i, j, k, &data).unwrap(), t);
                for (_, _, w) in net.dag.edges() {
                    let (_, c) = w.as_monomial().expect("monomial weight");
                    assert_eq!(c, &int(1));
                }
            }
        }
    }

    #[test]
    fn lgv_sign_free_small() {
        let data = sym(0, 0, 3);
        let net = build_network(0, 0, 3, &data).unwrap();
        let rows = net.minor_rows();
        let src: Vec<usize> = rows.iter().map(|&r| net.sources[r]).collect();
        let dst: Vec<usize> = rows.iter().map(|&r| net.sinks[r]).collect();
        assert_eq!(nonintersecting_sum(&net.dag, &src, &dst).unwrap(), lgv_determinant(&net.dag, &src, &dst).unwrap());
    }

    #[test]
    fn rational_k5() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for k in 3..=5 {
            let data = FlatData::random_positive(FlatData::<Rational>::parity_for(0, 0, k), &light_cone(0, 0, k), &mut rng);
            let t = tsystem_value(0, 0, k, &data).unwrap();
            assert_eq!(solt_eval(0, 0, k, &data).unwrap(), t);
            assert_eq!(network_paths_eval(0, 0, k, &data).unwrap() * prefactor(0, 0, k, &data).unwrap(), t);
        }
        assert!(build_network(0, 0, 1, &FlatData::<Rational>::ones(1, &light_cone(0, 0, 1))).is_err());
    }
}
