//! Rooted combinatorial maps, blossom-tree closure, cutting and face distances.

use std::collections::{HashMap, VecDeque};

use super::blossom::{BlossomTree, Node};
use crate::error::{Error, Result};

/// Half-edges `0..n` with an involution `alpha` and a rotation `sigma` (counterclockwise
/// successor around the vertex). Faces are the orbits of `sigma . alpha`.
#[derive(Clone, Debug)]
pub struct CombinatorialMap {
    alpha: Vec<usize>,
    sigma: Vec<usize>,
    /// Half-edge at the univalent vertex marked as root.
    root: usize,
}

fn orbits(n: usize, next: impl Fn(usize) -> usize) -> (Vec<usize>, usize) {
    let mut id = vec![usize::MAX; n];
    let mut count = 0;
    for s in 0..n {
        if id[s] != usize::MAX {
            continue;
        }
        let mut h = s;
        while id[h] == usize::MAX {
            id[h] = count;
            h = next(h);
        }
        count += 1;
    }
    (id, count)
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

impl CombinatorialMap {
    pub fn new(alpha: Vec<usize>, sigma: Vec<usize>, root: usize) -> Result<Self> {
        let n = alpha.len();
        if sigma.len() != n || root >= n {
            return Err(Error::InvalidMap("inconsistent half-edge counts".into()));
        }
        if !is_permutation(&sigma) {
            return Err(Error::InvalidMap("rotation is not a permutation".into()));
        }
        if (0..n).any(|h| alpha[h] >= n || alpha[h] == h || alpha[alpha[h]] != h) {
            return Err(Error::InvalidMap("edge pairing is not a fixed-point-free involution".into()));
        }
        Ok(CombinatorialMap { alpha, sigma, root })
    }

    pub fn num_half_edges(&self) -> usize {
        self.alpha.len()
    }

    pub fn num_edges(&self) -> usize {
        self.alpha.len() / 2
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn alpha(&self, h: usize) -> usize {
        self.alpha[h]
    }

    pub fn sigma(&self, h: usize) -> usize {
        self.sigma[h]
    }

    /// Vertex index of each half-edge and the number of vertices.
    pub fn vertices(&self) -> (Vec<usize>, usize) {
        orbits(self.num_half_edges(), |h| self.sigma[h])
    }

    /// Face index of each half-edge and the number of faces.
    pub fn faces(&self) -> (Vec<usize>, usize) {
        orbits(self.num_half_edges(), |h| self.sigma[self.alpha[h]])
    }

    pub fn degrees(&self) -> Vec<usize> {
        let (v, nv) = self.vertices();
        let mut d = vec![0; nv];
        for x in v {
            d[x] += 1;
        }
        d
    }

    fn is_connected(&self) -> bool {
        let n = self.num_half_edges();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(h) = stack.pop() {
            for x in [self.alpha[h], self.sigma[h]] {
                if !seen[x] {
                    seen[x] = true;
                    count += 1;
                    stack.push(x);
                }
            }
        }
        count == n
    }

    /// `V - E + F`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices().1 as i64 - self.num_edges() as i64 + self.faces().1 as i64
    }

    /// The other univalent vertex's half-edge, for maps in the admissible class.
    pub fn base(&self) -> Result<usize> {
        self.check_admissible()?;
        (0..self.num_half_edges())
            .find(|&h| h != self.root && self.sigma[h] == h)
            .ok_or_else(|| Error::InvalidMap("missing second univalent vertex".into()))
    }

    /// Planar, connected, two univalent vertices (one of them the root), all others tetravalent.
    pub fn check_admissible(&self) -> Result<()> {
        if !self.is_connected() {
            return Err(Error::InvalidMap("map is not connected".into()));
        }
        if self.euler_characteristic() != 2 {
            return Err(Error::InvalidMap("map is not planar".into()));
        }
        if self.sigma[self.root] != self.root {
            return Err(Error::InvalidMap("root vertex is not univalent".into()));
        }
        let d = self.degrees();
        if d.iter().filter(|&&x| x == 1).count() != 2 || d.iter().any(|&x| x != 1 && x != 4) {
            return Err(Error::InvalidMap("expected two univalent vertices and tetravalent others".into()));
        }
        Ok(())
    }

    /// Relabels half-edges in breadth-first order from the root.
    pub fn canonical(&self) -> CombinatorialMap {
        let n = self.num_half_edges();
        let mut label = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut queue = VecDeque::from([self.root]);
        label[self.root] = 0;
        order.push(self.root);
        while let Some(h) = queue.pop_front() {
            for x in [self.sigma[h], self.alpha[h]] {
                if label[x] == usize::MAX {
                    label[x] = order.len();
                    order.push(x);
                    queue.push_back(x);
                }
            }
        }
        // unreachable half-edges keep their relative order at the end
        for h in 0..n {
            if label[h] == usize::MAX {
                label[h] = order.len();
                order.push(h);
            }
        }
        CombinatorialMap {
            alpha: order.iter().map(|&h| label[self.alpha[h]]).collect(),
            sigma: order.iter().map(|&h| label[self.sigma[h]]).collect(),
            root: 0,
        }
    }
}

impl PartialEq for CombinatorialMap {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.canonical(), other.canonical());
        a.alpha == b.alpha && a.sigma == b.sigma
    }
}

impl Eq for CombinatorialMap {}

struct Builder {
    alpha: Vec<usize>,
    sigma: Vec<usize>,
}

impl Builder {
    fn vertex(&mut self, degree: usize) -> usize {
        let base = self.sigma.len();
        for k in 0..degree {
            self.sigma.push(base + (k + 1) % degree);
            self.alpha.push(usize::MAX);
        }
        base
    }

    fn join(&mut self, a: usize, b: usize) {
        self.alpha[a] = b;
        self.alpha[b] = a;
    }

    /// Leaves in contour order with the half-edge at their parent.
    fn grow(&mut self, node: &Node, parent_half: usize, leaves: &mut Vec<(usize, bool)>) {
        match node {
            Node::White => leaves.push((parent_half, false)),
            Node::Black => leaves.push((parent_half, true)),
            Node::Inner(ch) => {
                let p = self.vertex(4);
                self.join(p, parent_half);
                for (k, c) in ch.iter().enumerate() {
                    self.grow(c, p + 1 + k, leaves);
                }
            }
        }
    }
}

/// Matches every black leaf with the next free white leaf clockwise around the tree and
/// roots the map at the white leaf left over.
pub fn close_tree(t: &BlossomTree) -> Result<CombinatorialMap> {
    let mut b = Builder { alpha: Vec::new(), sigma: Vec::new() };
    let base = b.vertex(1);
    let mut leaves = Vec::new();
    b.grow(t.child(), base, &mut leaves);
    // clockwise order is the reverse of the counterclockwise contour
    leaves.reverse();
    let mut matched = vec![false; leaves.len()];
    let mut stack: Vec<usize> = Vec::new();
    for _ in 0..2 {
        for (k, &(_, black)) in leaves.iter().enumerate() {
            if matched[k] {
                continue;
            }
            if black {
                if !stack.contains(&k) {
                    stack.push(k);
                }
            } else if let Some(bk) = stack.pop() {
                matched[k] = true;
                matched[bk] = true;
                b.join(leaves[bk].0, leaves[k].0);
            }
        }
    }
    let free: Vec<usize> = (0..leaves.len()).filter(|&k| !matched[k]).collect();
    if free.len() != 1 || leaves[free[0]].1 {
        return Err(Error::Internal("closure left other than one white leaf".into()));
    }
    let root = b.vertex(1);
    b.join(root, leaves[free[0]].0);
    Ok(CombinatorialMap::new(b.alpha, b.sigma, root)?.canonical())
}

fn reachable_without(alpha: &[usize], sigma: &[usize], h: usize, target: usize) -> bool {
    let mut seen = vec![false; alpha.len()];
    let mut stack = vec![h];
    seen[h] = true;
    while let Some(x) = stack.pop() {
        if x == target {
            return true;
        }
        let via_edge = if x == h || x == target { None } else { Some(alpha[x]) };
        for y in [Some(sigma[x]), via_edge].into_iter().flatten() {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    false
}

/// Walks the root face clockwise, cutting each edge whose removal keeps the map connected;
/// the half seen first becomes a white leaf, the other a black leaf.
pub fn cut_map(m: &CombinatorialMap) -> Result<BlossomTree> {
    let base = m.base()?;
    let mut sinv = vec![0; m.sigma.len()];
    let mut alpha = m.alpha.clone();
    let mut sigma = m.sigma.clone();
    let mut black: HashMap<usize, bool> = HashMap::new();
    for (h, &x) in m.sigma.iter().enumerate() {
        sinv[x] = h;
    }
    let mut cur = m.root;
    let mut idle = 0;
    while idle <= 2 * alpha.len() {
        let other = alpha[cur];
        let inner = sigma[cur] != cur && sigma[other] != other;
        if inner && reachable_without(&alpha, &sigma, cur, other) {
            for (h, is_black) in [(cur, false), (other, true)] {
                let leaf = alpha.len();
                alpha.push(h);
                sigma.push(leaf);
                sinv.push(leaf);
                alpha[h] = leaf;
                black.insert(leaf, is_black);
            }
            idle = 0;
        } else {
            idle += 1;
        }
        cur = alpha[sinv[cur]];
    }
    fn read(h: usize, alpha: &[usize], sigma: &[usize], black: &HashMap<usize, bool>) -> Result<Node> {
        if sigma[h] == h {
            return Ok(if black.get(&h) == Some(&true) { Node::Black } else { Node::White });
        }
        let c1 = sigma[h];
        let c2 = sigma[c1];
        let c3 = sigma[c2];
        if sigma[c3] != h {
            return Err(Error::InvalidMap("inner vertex is not tetravalent".into()));
        }
        Ok(Node::inner(
            read(alpha[c1], alpha, sigma, black)?,
            read(alpha[c2], alpha, sigma, black)?,
            read(alpha[c3], alpha, sigma, black)?,
        ))
    }
    let child = read(alpha[base], &alpha, &sigma, &black)?;
    let t = BlossomTree::new(child).map_err(|e| Error::InvalidMap(format!("cutting did not give a blossom tree: {e}")))?;
    if t.inner_vertices() != m.num_half_edges().saturating_sub(2) / 4 {
        return Err(Error::InvalidMap("cutting left a cycle".into()));
    }
    Ok(t)
}

/// Breadth-first distance in the dual graph between the faces of the two univalent vertices.
pub fn geodesic_distance(m: &CombinatorialMap) -> Result<usize> {
    let base = m.base()?;
    let (face, nf) = m.faces();
    let mut adj = vec![Vec::new(); nf];
    for h in 0..m.num_half_edges() {
        adj[face[h]].push(face[m.alpha[h]]);
    }
    let (src, dst) = (face[m.root], face[base]);
    let mut dist = vec![usize::MAX; nf];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(f) = queue.pop_front() {
        if f == dst {
            return Ok(dist[f]);
        }
        for &g in &adj[f] {
            if dist[g] == usize::MAX {
                dist[g] = dist[f] + 1;
                queue.push_back(g);
            }
        }
    }
    Err(Error::InvalidMap("faces are not connected".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::enumerate_blossom_trees;
    use std::collections::BTreeMap;

    #[test]
    fn single_edge() {
        let t = BlossomTree::new(Node::White).unwrap();
        let m = close_tree(&t).unwrap();
        assert_eq!(m.num_edges(), 1);
        assert_eq!(m.degrees(), vec![1, 1]);
        assert_eq!(geodesic_distance(&m).unwrap(), 0);
        assert_eq!(cut_map(&m).unwrap(), t);
    }

    #[test]
    fn one_vertex_maps() {
        let ts = enumerate_blossom_trees(1).unwrap();
        let maps: Vec<_> = ts.iter().map(|t| close_tree(t).unwrap()).collect();
        for (i, a) in maps.iter().enumerate() {
            assert_eq!(a.faces().1, 2);
            for b in &maps[i + 1..] {
                assert_ne!(a, b);
            }
        }
        let mut d: Vec<usize> = maps.iter().map(|m| geodesic_distance(m).unwrap()).collect();
        d.sort();
        assert_eq!(d, vec![0, 0, 1]);
    }

    #[test]
    fn round_trip_and_euler() {
        for m in 0..=4 {
            for t in enumerate_blossom_trees(m).unwrap() {
                let map = close_tree(&t).unwrap();
                assert_eq!(map.euler_characteristic(), 2);
                map.check_admissible().unwrap();
                let back = cut_map(&map).unwrap();
                assert_eq!(back, t, "tree {t}");
                assert_eq!(close_tree(&back).unwrap(), map);
            }
        }
    }

    #[test]
    fn distance_two_with_four_vertices() {
        let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
        for t in enumerate_blossom_trees(4).unwrap() {
            *hist.entry(geodesic_distance(&close_tree(&t).unwrap()).unwrap()).or_default() += 1;
        }
        assert!(hist.get(&2).copied().unwrap_or(0) > 0);
    }

    #[test]
    fn malformed_maps() {
        assert!(CombinatorialMap::new(vec![0, 1], vec![0, 1], 0).is_err());
        let m = CombinatorialMap::new(vec![1, 0, 3, 2], vec![0, 1, 2, 3], 0).unwrap();
        assert!(m.check_admissible().is_err());
        assert!(cut_map(&m).is_err());
    }
}
