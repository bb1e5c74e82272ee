use std::fmt;

use serde::Serialize;

use crate::cartan::{RootSystem, Weight};
use crate::error::{Error, Result};
use crate::linalg::{serialize_fractions, Q};
use crate::ranklab::space::{generic_rank_estimate, rank_at_closed_orbit, LinearMatrixSpace};
use crate::ranklab::LabConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum VerdictKind {
    /// Two points of different rank were found.
    CertifiedNotConstant,
    /// The structural conditions hold and every computed rank is `dim V(μ) − 1`.
    ConstantCorankOneCertified,
    /// Sampling found a single rank; no certificate either way.
    ProbablyConstant,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(serialize_with = "serialize_fractions")]
    pub point: Vec<Q>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankVerdict {
    pub kind: VerdictKind,
    pub min_rank_witness: Witness,
    pub max_rank_witness: Witness,
    pub sample_ranks: Vec<usize>,
    pub samples: usize,
    pub seed: u64,
}

impl RankVerdict {
    pub fn rank_closed_orbit(&self) -> usize {
        self.min_rank_witness.rank
    }

    pub fn rank_generic(&self) -> usize {
        self.max_rank_witness.rank
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremConditions {
    pub holds: bool,
    pub i: Option<usize>,
    pub d: Option<i64>,
}

impl TheoremConditions {
    pub const FAILED: TheoremConditions = TheoremConditions {
        holds: false,
        i: None,
        d: None,
    };
}

/// First `i` with `λ + αᵢ = ν + μ`, `μ = dν` (`d ≥ 1`) and `μ ∈ N*ωᵢ`.
pub fn theorem_conditions(
    rs: &RootSystem,
    nu: &Weight,
    mu: &Weight,
    lambda: &Weight,
) -> Result<TheoremConditions> {
    for w in [nu, mu, lambda] {
        rs.check_weight(w)?;
    }
    let sum = nu + mu;
    for i in 0..rs.rank() {
        if lambda + &rs.simple_root(i) != sum {
            continue;
        }
        let Some(d) = mu.positive_multiple_of(nu) else {
            continue;
        };
        if mu
            .positive_multiple_of(&Weight::fundamental(rs.rank(), i))
            .is_some()
        {
            return Ok(TheoremConditions {
                holds: true,
                i: Some(i),
                d: Some(d),
            });
        }
    }
    Ok(TheoremConditions::FAILED)
}

/// Classifies the rank profile of `space ⊂ Hom(V(μ), ·)`:
/// 1. closed-orbit rank differs from the sampled maximum: certified non-constant;
/// 2. otherwise, conditions hold and the common rank is `μ_dim − 1`: certified;
/// 3. otherwise probably constant.
///
/// Every sampled rank must be at least the closed-orbit rank; a violation is
/// reported as an inconsistency.
pub fn verdict(
    space: &LinearMatrixSpace,
    mu_dim: usize,
    conditions: &TheoremConditions,
    cfg: &LabConfig,
) -> Result<RankVerdict> {
    if space.is_degenerate() {
        return Err(Error::DegenerateSpace);
    }
    let closed = rank_at_closed_orbit(space);
    let sampled = generic_rank_estimate(space, cfg.samples, cfg.coeff_bound, cfg.seed)?;
    if sampled.min_rank() < closed {
        return Err(Error::Inconsistent(format!(
            "sampled rank {} below the closed-orbit rank {closed}",
            sampled.min_rank()
        )));
    }
    let (u, generic) = sampled.max();
    let kind = if closed != generic {
        VerdictKind::CertifiedNotConstant
    } else if conditions.holds && closed + 1 == mu_dim {
        VerdictKind::ConstantCorankOneCertified
    } else {
        VerdictKind::ProbablyConstant
    };
    Ok(RankVerdict {
        kind,
        min_rank_witness: Witness {
            point: space.unit_vector(0),
            rank: closed,
        },
        max_rank_witness: Witness {
            point: u.to_vec(),
            rank: generic,
        },
        sample_ranks: sampled.points.iter().map(|p| p.1).collect(),
        samples: cfg.samples,
        seed: cfg.seed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn sl2_divisibility_family() {
        let a1 = rs("A1");
        for n in 1..15i64 {
            for m in 1..=n {
                let c = theorem_conditions(&a1, &w(&[n - m + 2]), &w(&[m]), &w(&[n])).unwrap();
                assert_eq!(c.holds, m % (n - m + 2) == 0, "m={m} n={n}");
                if c.holds {
                    assert_eq!(c.d, Some(m / (n - m + 2)));
                }
            }
        }
    }

    #[test]
    fn a2_examples() {
        let a2 = rs("A2");
        let c = theorem_conditions(&a2, &w(&[1, 0]), &w(&[1, 0]), &w(&[0, 1])).unwrap();
        assert_eq!(c, TheoremConditions { holds: true, i: Some(0), d: Some(1) });
        let c = theorem_conditions(&a2, &w(&[1, 0]), &w(&[2, 0]), &w(&[1, 1])).unwrap();
        assert_eq!(c, TheoremConditions { holds: true, i: Some(0), d: Some(2) });
        for lambda in [[0, 0], [1, 0], [1, 1], [2, 2]] {
            let c = theorem_conditions(&a2, &w(&[1, 0]), &w(&[0, 1]), &w(&lambda)).unwrap();
            assert!(!c.holds);
        }
    }
}
