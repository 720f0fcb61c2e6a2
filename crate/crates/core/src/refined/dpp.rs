//! Descending plane partitions.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::ring::Ring;

/// A descending plane partition stored as shifted rows: `rows[i][t] = a_{i+1, i+1+t}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dpp {
    rows: Vec<Vec<u32>>,
}

impl Dpp {
    pub fn empty() -> Self {
        Dpp { rows: Vec::new() }
    }

    /// Validates the defining inequalities and the bound `a_{i,j} <= n`.
    pub fn new(rows: Vec<Vec<u32>>, n: u32) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            let r = i + 1;
            if row.is_empty() {
                return Err(Error::InvalidDpp(format!("row {r} is empty")));
            }
            if row.iter().any(|&a| a == 0 || a > n) {
                return Err(Error::InvalidDpp(format!("row {r} has a part outside 1..={n}")));
            }
            if row.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidDpp(format!("row {r} is not weakly decreasing")));
            }
            let len = row.len() as u32;
            if row[0] <= len {
                return Err(Error::InvalidDpp(format!("row {r}: diagonal part {} must exceed row length {len}", row[0])));
            }
            if i > 0 {
                let above = &rows[i - 1];
                if row[0] > above.len() as u32 {
                    return Err(Error::InvalidDpp(format!(
                        "row {r}: diagonal part {} exceeds previous row length {}",
                        row[0],
                        above.len()
                    )));
                }
                // row r starts one column to the right of row r-1
                if row.len() + 1 > above.len() {
                    return Err(Error::InvalidDpp(format!("row {r} extends past the row above")));
                }
                for (t, &a) in row.iter().enumerate() {
                    if above[t + 1] <= a {
                        return Err(Error::InvalidDpp(format!("column {} not strictly decreasing at row {r}", r + t)));
                    }
                }
            }
        }
        Ok(Dpp { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Part `a_{i,j}` with 1-based indices, if present.
    pub fn part(&self, i: usize, j: usize) -> Option<u32> {
        if j < i {
            return None;
        }
        self.rows.get(i - 1)?.get(j - i).copied()
    }

    /// Iterates `(i, j, a_{i,j})` with 1-based indices.
    pub fn parts(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(t, &a)| (i + 1, i + 1 + t, a)))
    }

    /// `(special, non-special)` part counts; `a_{i,j}` is special when `a_{i,j} <= j - i`.
    pub fn part_counts(&self) -> (usize, usize) {
        let special = self.parts().filter(|&(i, j, a)| a as usize <= j - i).count();
        (special, self.parts().count() - special)
    }

    /// `x^{#special} y^{#non-special}`.
    pub fn weight<R: Ring>(&self, x: &R, y: &R) -> R {
        let (s, o) = self.part_counts();
        x.pow(s as u32) * y.pow(o as u32)
    }
}

impl fmt::Display for Dpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "()");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Debug for Dpp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dpp({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::laurent::MultiLaurent;

    #[test]
    fn validation() {
        assert!(Dpp::new(vec![vec![3, 3], vec![2]], 3).is_ok());
        assert!(Dpp::new(vec![vec![3, 1]], 3).is_ok());
        assert!(Dpp::new(vec![vec![1]], 3).is_err());
        assert!(Dpp::new(vec![vec![2, 2]], 3).is_err());
        assert!(Dpp::new(vec![vec![3, 2], vec![2]], 3).is_err());
        assert!(Dpp::new(vec![vec![4]], 3).is_err());
        assert!(Dpp::new(vec![vec![3, 3], vec![3]], 3).is_err());
    }

    #[test]
    fn weights() {
        let (x, y) = (MultiLaurent::var(0), MultiLaurent::var(1));
        let d = Dpp::new(vec![vec![3, 1]], 3).unwrap();
        assert_eq!(d.weight(&x, &y), &x * &y);
        let d = Dpp::new(vec![vec![3, 3], vec![2]], 3).unwrap();
        assert_eq!(d.weight(&x, &y), y.pow(3));
        assert_eq!(Dpp::empty().weight(&x, &y), MultiLaurent::from_i64(1));
        assert_eq!(d.to_string(), "33/2");
    }
}
