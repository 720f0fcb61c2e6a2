//! Blossom trees: plane trees with tetravalent inner vertices, each carrying one black leaf.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_BLOSSOM_VERTICES: usize = 6;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    White,
    Black,
    /// Children in plane order after the parent edge.
    Inner(Box<[Node; 3]>),
}

impl Node {
    pub fn inner(a: Node, b: Node, c: Node) -> Self {
        Node::Inner(Box::new([a, b, c]))
    }

    pub fn inner_count(&self) -> usize {
        match self {
            Node::Inner(ch) => 1 + ch.iter().map(Node::inner_count).sum::<usize>(),
            _ => 0,
        }
    }

    fn validate(&self) -> Result<()> {
        if let Node::Inner(ch) = self {
            if ch.iter().filter(|c| **c == Node::Black).count() != 1 {
                return Err(Error::InvalidTree("every inner vertex needs exactly one black leaf".into()));
            }
            for c in ch.iter() {
                c.validate()?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::White => write!(f, "w"),
            Node::Black => write!(f, "b"),
            Node::Inner(ch) => write!(f, "({}{}{})", ch[0], ch[1], ch[2]),
        }
    }
}

impl fmt::Debug for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A planted blossom tree: a univalent root joined to `child`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlossomTree {
    child: Node,
}

impl BlossomTree {
    pub fn new(child: Node) -> Result<Self> {
        if child == Node::Black {
            return Err(Error::InvalidTree("the root edge cannot end at a black leaf".into()));
        }
        child.validate()?;
        Ok(BlossomTree { child })
    }

    pub fn child(&self) -> &Node {
        &self.child
    }

    pub fn inner_vertices(&self) -> usize {
        self.child.inner_count()
    }
}

impl fmt::Display for BlossomTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.child)
    }
}

fn subtrees(m: usize, memo: &mut Vec<Option<Vec<Node>>>) -> Vec<Node> {
    if let Some(v) = &memo[m] {
        return v.clone();
    }
    let mut out = Vec::new();
    if m == 0 {
        out.push(Node::White);
    } else {
        for left in 0..m {
            let right = m - 1 - left;
            let ls = subtrees(left, memo);
            let rs = subtrees(right, memo);
            for l in &ls {
                for r in &rs {
                    out.push(Node::inner(Node::Black, l.clone(), r.clone()));
                    out.push(Node::inner(l.clone(), Node::Black, r.clone()));
                    out.push(Node::inner(l.clone(), r.clone(), Node::Black));
                }
            }
        }
    }
    memo[m] = Some(out.clone());
    out
}

/// All planted blossom trees with `m` inner vertices.
pub fn enumerate_blossom_trees(m: usize) -> Result<Vec<BlossomTree>> {
    if m > MAX_BLOSSOM_VERTICES {
        return Err(Error::SizeCap { what: "blossom tree vertices", max: MAX_BLOSSOM_VERTICES, got: m });
    }
    let mut memo = vec![None; m + 1];
    Ok(subtrees(m, &mut memo).into_iter().map(|child| BlossomTree { child }).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::r_limit_series;
    use std::collections::BTreeSet;

    #[test]
    fn counts() {
        let r = r_limit_series(5);
        for m in 0..=5 {
            let ts = enumerate_blossom_trees(m).unwrap();
            assert_eq!(crate::exact::rational::int(ts.len() as i64), r.coeff(m));
            assert_eq!(ts.iter().collect::<BTreeSet<_>>().len(), ts.len());
            assert!(ts.iter().all(|t| t.inner_vertices() == m && BlossomTree::new(t.child().clone()).is_ok()));
        }
        assert!(enumerate_blossom_trees(7).is_err());
    }

    #[test]
    fn validation() {
        assert!(BlossomTree::new(Node::Black).is_err());
        assert!(BlossomTree::new(Node::inner(Node::White, Node::White, Node::White)).is_err());
        assert!(BlossomTree::new(Node::inner(Node::Black, Node::Black, Node::White)).is_err());
        assert_eq!(BlossomTree::new(Node::inner(Node::White, Node::Black, Node::White)).unwrap().to_string(), "(wbw)");
    }
}
