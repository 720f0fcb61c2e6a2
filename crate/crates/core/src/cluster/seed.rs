//! Seeds: a cluster of Laurent polynomials with an exchange quiver.

use num_traits::Zero;

use super::quiver::Quiver;
use crate::error::{Error, Result};
use crate::exact::laurent::{MultiLaurent, VarNames};
use crate::exact::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct Seed<R: Ring = MultiLaurent> {
    cluster: Vec<R>,
    quiver: Quiver,
    frozen: Vec<bool>,
}

impl<R: Ring> Seed<R> {
    pub fn new(cluster: Vec<R>, quiver: Quiver) -> Result<Self> {
        let n = quiver.n();
        Self::with_frozen(cluster, quiver, vec![false; n])
    }

    /// Frozen vertices carry variables but may not be mutated.
    pub fn with_frozen(cluster: Vec<R>, quiver: Quiver, frozen: Vec<bool>) -> Result<Self> {
        if cluster.len() != quiver.n() || frozen.len() != quiver.n() {
            return Err(Error::DimensionMismatch("cluster, quiver and frozen flags differ in size".into()));
        }
        if cluster.iter().any(Zero::is_zero) {
            return Err(Error::InvalidArgument("cluster variables must be nonzero".into()));
        }
        Ok(Seed { cluster, quiver, frozen })
    }

    pub fn cluster(&self) -> &[R] {
        &self.cluster
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn is_frozen(&self, k: usize) -> bool {
        self.frozen[k]
    }

    /// `x_k x_k' = prod_{i -> k} x_i^{b_ik} + prod_{k -> j} x_j^{b_kj}`.
    pub fn exchange_value(&self, k: usize) -> Result<R> {
        let n = self.quiver.n();
        if k >= n {
            return Err(Error::VertexOutOfRange { vertex: k, n });
        }
        let mut incoming = R::one();
        let mut outgoing = R::one();
        for i in 0..n {
            let b = self.quiver.b(i, k);
            if b > 0 {
                incoming = incoming * self.cluster[i].pow(b as u32);
            } else if b < 0 {
                outgoing = outgoing * self.cluster[i].pow((-b) as u32);
            }
        }
        (incoming + outgoing).exact_div(&self.cluster[k])
    }

    pub fn mutate(&self, k: usize) -> Result<Seed<R>> {
        let n = self.quiver.n();
        if k >= n {
            return Err(Error::VertexOutOfRange { vertex: k, n });
        }
        if self.frozen[k] {
            return Err(Error::InvalidArgument(format!("vertex {} is frozen", k + 1)));
        }
        let mut cluster = self.cluster.clone();
        cluster[k] = self.exchange_value(k)?;
        Ok(Seed { cluster, quiver: self.quiver.mutate(k)?, frozen: self.frozen.clone() })
    }
}

impl Seed<MultiLaurent> {
    /// The seed `(x1, ..., xn)` on `quiver`.
    pub fn initial(quiver: Quiver) -> (Self, VarNames) {
        let n = quiver.n();
        let names = VarNames::new((1..=n).map(|i| format!("x{i}")));
        let cluster = (0..n).map(MultiLaurent::var).collect();
        (Seed { cluster, quiver, frozen: vec![false; n] }, names)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use std::collections::HashSet;

    #[test]
    fn rank_two_exchange() {
        let (s, _) = Seed::initial(Quiver::from_arrows(2, &[(0, 1)]).unwrap());
        let m = s.mutate(0).unwrap();
        let (x1, x2) = (MultiLaurent::var(0), MultiLaurent::var(1));
        assert_eq!(m.cluster()[0], (&MultiLaurent::from_i64(1) + &x2).div_exact(&x1).unwrap());
        assert_eq!(m.mutate(0).unwrap(), s);
    }

    #[test]
    fn a2_pentagon() {
        let (s, _) = Seed::initial(Quiver::from_arrows(2, &[(0, 1)]).unwrap());
        let mut cur = s.clone();
        let mut seen: HashSet<MultiLaurent> = s.cluster().iter().cloned().collect();
        for k in [0, 1, 0, 1, 0] {
            cur = cur.mutate(k).unwrap();
            seen.extend(cur.cluster().iter().cloned());
        }
        assert_eq!(seen.len(), 5);
        // after five mutations the initial variables come back, swapped
        assert_eq!(cur.cluster()[0], s.cluster()[1]);
        assert_eq!(cur.cluster()[1], s.cluster()[0]);
    }

    #[test]
    fn frozen_and_rational() {
        let q = Quiver::from_arrows(2, &[(0, 1)]).unwrap();
        let s = Seed::with_frozen(vec![int(2), int(3)], q.clone(), vec![false, true]).unwrap();
        assert_eq!(s.mutate(0).unwrap().cluster()[0], int(2));
        assert!(s.mutate(1).is_err());
        assert!(Seed::new(vec![int(0), int(1)], q).is_err());
    }
}
