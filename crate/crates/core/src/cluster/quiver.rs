//! Quivers as skew-symmetric exchange matrices.

use serde_json::{json, Value};

use crate::error::{Error, Result};

/// `b[i][j] > 0` means `b[i][j]` arrows `i -> j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    b: Vec<Vec<i64>>,
}

impl Quiver {
    pub fn new(b: Vec<Vec<i64>>) -> Result<Self> {
        let n = b.len();
        if b.iter().any(|r| r.len() != n) {
            return Err(Error::NonSquare { rows: n, cols: b.first().map_or(0, Vec::len) });
        }
        for i in 0..n {
            for j in 0..n {
                if b[i][j] != -b[j][i] {
                    return Err(Error::InvalidArgument(format!("exchange matrix not skew-symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(Quiver { b })
    }

    pub fn empty(n: usize) -> Self {
        Quiver { b: vec![vec![0; n]; n] }
    }

    /// Builds from a list of arrows `(from, to)`, 0-based; repeated arrows add up.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let mut q = Quiver::empty(n);
        for &(i, j) in arrows {
            q.add_arrow(i, j)?;
        }
        Ok(q)
    }

    pub fn add_arrow(&mut self, i: usize, j: usize) -> Result<()> {
        let n = self.n();
        for v in [i, j] {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        if i == j {
            return Err(Error::InvalidArgument("loops are not allowed".into()));
        }
        self.b[i][j] += 1;
        self.b[j][i] -= 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    pub fn b(&self, i: usize, j: usize) -> i64 {
        self.b[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.b
    }

    /// Number of arrows into `k`, counted with multiplicity.
    pub fn in_degree(&self, k: usize) -> i64 {
        (0..self.n()).map(|i| self.b[i][k].max(0)).sum()
    }

    pub fn out_degree(&self, k: usize) -> i64 {
        (0..self.n()).map(|j| self.b[k][j].max(0)).sum()
    }

    /// Matrix mutation: reverse arrows at `k`, compose two-paths through `k`, cancel 2-cycles.
    pub fn mutate(&self, k: usize) -> Result<Quiver> {
        let n = self.n();
        if k >= n {
            return Err(Error::VertexOutOfRange { vertex: k, n });
        }
        let b = &self.b;
        let nb = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == k || j == k {
                            -b[i][j]
                        } else {
                            b[i][j] + b[i][k].signum() * (b[i][k] * b[k][j]).max(0)
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Quiver { b: nb })
    }

    pub fn to_json(&self) -> Value {
        json!({ "matrix": self.b })
    }

    /// Accepts `{"matrix": [[..]]}` or `{"n": N, "arrows": [[i, j], ..]}` with 1-based vertices.
    pub fn from_json(v: &Value) -> Result<Quiver> {
        if let Some(m) = v.get("matrix") {
            let rows: Vec<Vec<i64>> =
                serde_json::from_value(m.clone()).map_err(|e| Error::Parse(format!("quiver matrix: {e}")))?;
            return Quiver::new(rows);
        }
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("quiver needs \"matrix\" or \"n\" and \"arrows\"".into()))? as usize;
        let arrows: Vec<(usize, usize)> = serde_json::from_value(v.get("arrows").cloned().unwrap_or(json!([])))
            .map_err(|e| Error::Parse(format!("quiver arrows: {e}")))?;
        let mut q = Quiver::empty(n);
        for (i, j) in arrows {
            if i == 0 || j == 0 {
                return Err(Error::Parse("arrow endpoints are 1-based".into()));
            }
            q.add_arrow(i - 1, j - 1)?;
        }
        Ok(q)
    }
}
