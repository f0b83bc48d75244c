use serde::Serialize;

use super::{delta_dim, simple_dim};
use crate::blocks::kappa_n;
use crate::exact::Rational;
use crate::symfun::Partition;

/// One comparison `rank gram(κ^(n), m) = Σ_{j≥n} (-1)^{j-n} dim 1_m Δ(κ^(j))`.
#[derive(Clone, Debug, Serialize)]
pub struct BlockCheck {
    pub n: usize,
    pub m: usize,
    pub lambda: String,
    pub rank: usize,
    pub predicted: i128,
}

impl BlockCheck {
    pub fn holds(&self) -> bool {
        self.rank as i128 == self.predicted
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BlockStructureReport {
    pub kappa: String,
    pub t: u64,
    pub checks: Vec<BlockCheck>,
}

impl BlockStructureReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(BlockCheck::holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &BlockCheck> {
        self.checks.iter().filter(|c| !c.holds())
    }
}

/// Check the alternating-sum character identity along the orbit of `κ ⊢ t`,
/// with `t = |κ|`.
pub fn verify_block_structure(kappa: &Partition, m_max: usize, j_max: usize) -> BlockStructureReport {
    let t = kappa.size();
    let tq = Rational::from(t);
    let mut checks = Vec::new();
    for n in 0..=j_max {
        let lambda = kappa_n(kappa, n);
        for m in 0..=m_max {
            let mut predicted = 0i128;
            let mut j = n;
            loop {
                let mu = kappa_n(kappa, j);
                if mu.size() > m {
                    break;
                }
                let d = delta_dim(&mu, m) as i128;
                predicted += if (j - n) % 2 == 0 { d } else { -d };
                j += 1;
            }
            checks.push(BlockCheck {
                n,
                m,
                lambda: lambda.to_string(),
                rank: simple_dim(&lambda, m, &tq),
                predicted,
            });
        }
    }
    BlockStructureReport { kappa: kappa.to_string(), t: t as u64, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t_zero_small() {
        let r = verify_block_structure(&Partition::empty(), 3, 2);
        for c in r.failures() {
            eprintln!("{c:?}");
        }
        assert!(r.all_hold());
    }
}
