use std::collections::{BTreeSet, VecDeque};

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cartan::{RootSystem, RootSystemSpec, Weight};
use crate::error::{Error, Result};
use crate::ranklab::Lab;
use crate::tensor::{b_generation_for_module, sym_vanishing_for_module};

/// Parameter ranges for `lemma_sweep`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaBounds {
    /// Largest coordinate of `ν` in the symmetric-power check.
    pub max_coord: i64,
    /// Restrict `ν` to fundamental weights.
    pub fundamental_only: bool,
    pub max_r: usize,
    /// Largest module dimension in the generation check.
    pub max_dim: usize,
}

impl Default for LemmaBounds {
    fn default() -> Self {
        Self {
            max_coord: 1,
            fundamental_only: false,
            max_r: 3,
            max_dim: 200,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub lemma: &'static str,
    pub weight: Weight,
    pub r: Option<usize>,
    pub i: Option<usize>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub root_system: String,
    pub checks: Vec<LemmaCheck>,
    /// Parameter choices skipped because a module exceeded the dimension guard.
    pub skipped: usize,
}

impl LemmaReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Nonzero dominant weights with `dim V(μ) ≤ max_dim`, in increasing order.
pub fn dominant_weights_up_to_dim(rs: &RootSystem, max_dim: usize) -> Result<Vec<Weight>> {
    let n = rs.rank();
    let mut found = BTreeSet::new();
    let mut queue = VecDeque::from([Weight::zero(n)]);
    let mut seen = BTreeSet::from([Weight::zero(n)]);
    while let Some(w) = queue.pop_front() {
        for i in 0..n {
            let mut next = w.clone();
            next.0[i] += 1;
            if !seen.insert(next.clone()) {
                continue;
            }
            // dimension grows with every coordinate, so the search can stop here
            if rs.weyl_dim(&next)?.to_usize().is_some_and(|d| d <= max_dim) {
                found.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(found.into_iter().collect())
}

fn sym_weights(rs: &RootSystem, bounds: &LemmaBounds) -> Vec<Weight> {
    let n = rs.rank();
    if bounds.fundamental_only {
        return (0..n).map(|i| Weight::fundamental(n, i)).collect();
    }
    let mut out = vec![Weight::zero(n)];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..=bounds.max_coord).map(move |c| {
                    let mut x = w.clone();
                    x.0.push(c);
                    x
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|w| Weight(w.0[n..].to_vec()))
        .filter(|w| !w.is_zero())
        .collect()
}

/// Runs `sym_primitive_vanishing` over `ν` within the bounds, `1 ≤ r ≤ max_r`
/// and every `i`, and `b_generation_check` over every nonzero dominant `μ`
/// with `dim V(μ) ≤ max_dim`.
pub fn lemma_sweep(lab: &Lab, spec: RootSystemSpec, bounds: &LemmaBounds) -> Result<LemmaReport> {
    let rs = lab.root_system(spec)?;
    let guard = lab.config.dim_guard;
    let mut checks = Vec::new();
    let mut skipped = 0;
    for nu in sym_weights(&rs, bounds) {
        for r in 1..=bounds.max_r {
            for i in 0..rs.rank() {
                let result = lab
                    .irrep(spec, &nu)
                    .and_then(|base| sym_vanishing_for_module(&base, r, i, guard));
                match result {
                    Ok(passed) => checks.push(LemmaCheck {
                        lemma: "sym_vanishing",
                        weight: nu.clone(),
                        r: Some(r),
                        i: Some(i),
                        passed,
                    }),
                    Err(Error::DimensionGuard { .. }) => skipped += 1,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    for mu in dominant_weights_up_to_dim(&rs, bounds.max_dim.min(guard))? {
        checks.push(LemmaCheck {
            lemma: "b_generation",
            passed: b_generation_for_module(&*lab.irrep(spec, &mu)?),
            weight: mu,
            r: None,
            i: None,
        });
    }
    Ok(LemmaReport {
        root_system: spec.to_string(),
        checks,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_by_dimension() {
        let a1 = RootSystem::new("A1".parse().unwrap()).unwrap();
        let ws = dominant_weights_up_to_dim(&a1, 5).unwrap();
        assert_eq!(ws, (1..=4).map(|c| Weight(vec![c])).collect::<Vec<_>>());
        let a2 = RootSystem::new("A2".parse().unwrap()).unwrap();
        let ws = dominant_weights_up_to_dim(&a2, 8).unwrap();
        assert_eq!(ws.len(), 5); // 3, 3, 6, 6, 8
    }

    #[test]
    fn small_sweep_passes() {
        let lab = Lab::default();
        let bounds = LemmaBounds {
            max_coord: 2,
            max_dim: 30,
            ..LemmaBounds::default()
        };
        let report = lemma_sweep(&lab, "A2".parse().unwrap(), &bounds).unwrap();
        assert!(report.all_passed());
        assert!(report.checks.len() > 20);
    }
}
