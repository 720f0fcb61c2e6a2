//! Weighted acyclic networks and the Lindström–Gessel–Viennot determinant.

use std::collections::VecDeque;

use super::matrix::ExactMatrix;
use super::ring::Ring;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct WeightedDag<R: Ring> {
    num_vertices: usize,
    out: Vec<Vec<(usize, R)>>,
}

/// One directed path: its vertex sequence and weight.
#[derive(Clone, Debug)]
pub struct WeightedPath<R: Ring> {
    pub vertices: Vec<usize>,
    pub weight: R,
}

impl<R: Ring> WeightedDag<R> {
    pub fn new(num_vertices: usize) -> Self {
        WeightedDag { num_vertices, out: vec![Vec::new(); num_vertices] }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.out.push(Vec::new());
        self.num_vertices += 1;
        self.num_vertices - 1
    }

    pub fn add_edge(&mut self, from: usize, to: usize, weight: R) -> Result<()> {
        for v in [from, to] {
            if v >= self.num_vertices {
                return Err(Error::InvalidArgument(format!("vertex {v} out of range")));
            }
        }
        self.out[from].push((to, weight));
        Ok(())
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.out.iter().enumerate().flat_map(|(u, es)| es.iter().map(move |(v, w)| (u, *v, w)))
    }

    /// Kahn topological order; fails on a directed cycle.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let mut indeg = vec![0usize; self.num_vertices];
        for es in &self.out {
            for (v, _) in es {
                indeg[*v] += 1;
            }
        }
        let mut queue: VecDeque<usize> = (0..self.num_vertices).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.num_vertices);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for (v, _) in &self.out[u] {
                indeg[*v] -= 1;
                if indeg[*v] == 0 {
                    queue.push_back(*v);
                }
            }
        }
        if order.len() != self.num_vertices {
            return Err(Error::CyclicGraph);
        }
        Ok(order)
    }

    /// Weighted path sums from `source` to every vertex.
    fn sums_from(&self, source: usize, order: &[usize]) -> Vec<R> {
        let mut acc = vec![R::zero(); self.num_vertices];
        acc[source] = R::one();
        for &u in order {
            if acc[u].is_zero() {
                continue;
            }
            let au = acc[u].clone();
            for (v, w) in &self.out[u] {
                acc[*v] = acc[*v].clone() + au.clone() * w.clone();
            }
        }
        acc
    }

    /// `Z[i][j]` = sum over paths from `sources[i]` to `sinks[j]` of the product of edge weights.
    pub fn path_matrix(&self, sources: &[usize], sinks: &[usize]) -> Result<ExactMatrix<R>> {
        let order = self.topological_order()?;
        for &v in sources.iter().chain(sinks) {
            if v >= self.num_vertices {
                return Err(Error::InvalidArgument(format!("vertex {v} out of range")));
            }
        }
        let rows: Vec<Vec<R>> = sources
            .iter()
            .map(|&s| {
                let sums = self.sums_from(s, &order);
                sinks.iter().map(|&t| sums[t].clone()).collect()
            })
            .collect();
        let mut m = ExactMatrix::zeros(sources.len(), sinks.len());
        for (i, row) in rows.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        Ok(m)
    }

    /// Every directed path from `from` to `to`. Exponential; oracle use only.
    pub fn all_paths(&self, from: usize, to: usize) -> Result<Vec<WeightedPath<R>>> {
        self.topological_order()?;
        let mut out = Vec::new();
        let mut stack = vec![from];
        self.dfs_paths(from, to, R::one(), &mut stack, &mut out);
        Ok(out)
    }

    fn dfs_paths(&self, u: usize, to: usize, w: R, stack: &mut Vec<usize>, out: &mut Vec<WeightedPath<R>>) {
        if u == to {
            out.push(WeightedPath { vertices: stack.clone(), weight: w.clone() });
        }
        for (v, ew) in &self.out[u] {
            stack.push(*v);
            self.dfs_paths(*v, to, w.clone() * ew.clone(), stack, out);
            stack.pop();
        }
    }
}

/// `det(Z)` for the path matrix between equally many sources and sinks.
pub fn lgv_determinant<R: Ring>(dag: &WeightedDag<R>, sources: &[usize], sinks: &[usize]) -> Result<R> {
    if sources.len() != sinks.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} sources but {} sinks",
            sources.len(),
            sinks.len()
        )));
    }
    dag.path_matrix(sources, sinks)?.det()
}

/// Signed sum over vertex-disjoint path families, by exhaustive search.
pub fn nonintersecting_sum<R: Ring>(dag: &WeightedDag<R>, sources: &[usize], sinks: &[usize]) -> Result<R> {
    let k = sources.len();
    if k != sinks.len() {
        return Err(Error::DimensionMismatch("sources and sinks differ in number".into()));
    }
    let mut paths: Vec<Vec<Vec<WeightedPath<R>>>> = Vec::with_capacity(k);
    for &s in sources {
        let mut row = Vec::with_capacity(k);
        for &t in sinks {
            row.push(dag.all_paths(s, t)?);
        }
        paths.push(row);
    }
    let mut total = R::zero();
    for perm in permutations(k) {
        let sign_negative = inversions(&perm) % 2 == 1;
        let mut used = vec![false; dag.num_vertices()];
        let s = family_sum(&paths, &perm, 0, &mut used);
        total = if sign_negative { total - s } else { total + s };
    }
    Ok(total)
}

fn family_sum<R: Ring>(paths: &[Vec<Vec<WeightedPath<R>>>], perm: &[usize], i: usize, used: &mut [bool]) -> R {
    if i == perm.len() {
        return R::one();
    }
    let mut total = R::zero();
    for p in &paths[i][perm[i]] {
        if p.vertices.iter().any(|&v| used[v]) {
            continue;
        }
        for &v in &p.vertices {
            used[v] = true;
        }
        let rest = family_sum(paths, perm, i + 1, used);
        for &v in &p.vertices {
            used[v] = false;
        }
        if !rest.is_zero() {
            total = total + p.weight.clone() * rest;
        }
    }
    total
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}

pub fn inversions(p: &[usize]) -> usize {
    let mut c = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                c += 1;
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, Rational};

    #[test]
    fn parallel_edges_add() {
        let mut g = WeightedDag::<Rational>::new(2);
        g.add_edge(0, 1, int(1)).unwrap();
        g.add_edge(0, 1, int(1)).unwrap();
        assert_eq!(lgv_determinant(&g, &[0], &[1]).unwrap(), int(2));
    }

    #[test]
    fn cycle_detected() {
        let mut g = WeightedDag::<Rational>::new(2);
        g.add_edge(0, 1, int(1)).unwrap();
        g.add_edge(1, 0, int(1)).unwrap();
        assert_eq!(lgv_determinant(&g, &[0], &[1]), Err(Error::CyclicGraph));
    }

    #[test]
    fn permutation_helpers() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(inversions(&[2, 1, 0]), 3);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }
}
