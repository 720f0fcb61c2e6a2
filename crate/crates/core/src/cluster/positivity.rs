//! Laurent positivity of cluster variables.

use std::collections::{HashSet, VecDeque};

use rand::Rng;

use super::quiver::Quiver;
use super::seed::Seed;
use super::tsystem::{light_cone, tsystem_seed, tsystem_value, FlatData};
use crate::error::{Error, Result};
use crate::exact::laurent::MultiLaurent;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PositivityReport {
    pub variables_checked: usize,
    /// Descriptions of variables with a negative or non-integer coefficient.
    pub falsifications: Vec<String>,
}

impl PositivityReport {
    pub fn passed(&self) -> bool {
        self.falsifications.is_empty()
    }

    fn check(&mut self, label: impl FnOnce() -> String, p: &MultiLaurent) {
        self.variables_checked += 1;
        if !p.has_nonnegative_integer_coeffs() {
            self.falsifications.push(label());
        }
    }

    fn merge(&mut self, other: PositivityReport) {
        self.variables_checked += other.variables_checked;
        self.falsifications.extend(other.falsifications);
    }
}

/// The `A_n` quiver `1 -> 2 -> ... -> n`.
pub fn type_a_quiver(n: usize) -> Quiver {
    let arrows: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Quiver::from_arrows(n, &arrows).expect("path quiver")
}

/// Every cluster variable reachable from the initial seed of `quiver`, by breadth-first
/// search over seeds; fails when more than `cap` variables appear.
pub fn finite_type_orbit(quiver: &Quiver, cap: usize) -> Result<Vec<MultiLaurent>> {
    let (s0, _) = Seed::initial(quiver.clone());
    let key = |s: &Seed| {
        let mut c: Vec<String> = s.cluster().iter().map(|x| x.to_string()).collect();
        c.sort();
        c
    };
    let mut seen_seeds = HashSet::from([key(&s0)]);
    let mut vars: Vec<MultiLaurent> = s0.cluster().to_vec();
    let mut seen_vars: HashSet<MultiLaurent> = vars.iter().cloned().collect();
    let mut queue = VecDeque::from([s0]);
    while let Some(s) = queue.pop_front() {
        for k in 0..quiver.n() {
            let m = s.mutate(k)?;
            let x = &m.cluster()[k];
            if seen_vars.insert(x.clone()) {
                vars.push(x.clone());
                if vars.len() > cap {
                    return Err(Error::SizeCap { what: "cluster variables", max: cap, got: vars.len() });
                }
            }
            if seen_seeds.insert(key(&m)) {
                queue.push_back(m);
            }
        }
    }
    Ok(vars)
}

/// Positivity of the `A2`, `A3` orbits, of `T_{0,0,k}` for `k <= 4`, and of random
/// mutation sequences of length `depth` on the 4x4 T-system window quiver.
pub fn positivity_sample_check<G: Rng + ?Sized>(depth: usize, trials: usize, rng: &mut G) -> Result<PositivityReport> {
    let mut report = PositivityReport::default();
    for n in [2, 3] {
        for (idx, x) in finite_type_orbit(&type_a_quiver(n), 64)?.iter().enumerate() {
            report.check(|| format!("A{n} orbit variable {idx}: {x}"), x);
        }
    }
    for k in 0..=4 {
        let (data, _) = FlatData::symbolic(FlatData::<MultiLaurent>::parity_for(0, 0, k), &light_cone(0, 0, k));
        report.check(|| format!("T(0,0,{k})"), &tsystem_value(0, 0, k, &data)?);
    }
    report.merge(random_window_check(depth, trials, rng)?);
    Ok(report)
}

/// Random mutation sequences on the T-system quiver of a 4x4 window, every vertex mutable.
pub fn random_window_check<G: Rng + ?Sized>(depth: usize, trials: usize, rng: &mut G) -> Result<PositivityReport> {
    let (data, _) = FlatData::symbolic(0, &light_cone(0, 0, 6));
    let framed = tsystem_seed(&data, (-1, 2), (-1, 2))?;
    let start = Seed::new(framed.cluster().to_vec(), framed.quiver().clone())?;
    let n = start.quiver().n();
    let mut report = PositivityReport::default();
    for trial in 0..trials {
        let mut s = start.clone();
        let mut seq = Vec::with_capacity(depth);
        for _ in 0..depth {
            let k = rng.gen_range(0..n);
            seq.push(k + 1);
            s = s.mutate(k)?;
            report.check(|| format!("trial {trial}, sequence {seq:?}"), &s.cluster()[k]);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn finite_type_counts() {
        assert_eq!(finite_type_orbit(&type_a_quiver(2), 64).unwrap().len(), 5);
        assert_eq!(finite_type_orbit(&type_a_quiver(3), 64).unwrap().len(), 9);
        assert!(finite_type_orbit(&type_a_quiver(3), 5).is_err());
    }

    #[test]
    fn sampled_positivity() {
        let r = positivity_sample_check(6, 3, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert!(r.passed(), "{:?}", r.falsifications);
        assert!(r.variables_checked >= 14 + 5 + 18);
    }
}
