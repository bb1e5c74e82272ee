use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::cartan::{Family, RootSystemSpec, Weight};
use crate::error::{Error, Result};
use crate::irrep::build_sl2;
use crate::linalg::{QMatrix, Q};
use crate::ranklab::pipeline::corank1_pipeline;
use crate::ranklab::verdict::{VerdictKind, Witness};
use crate::ranklab::Lab;
use crate::tensor::HomModule;

const A1: RootSystemSpec = RootSystemSpec {
    family: Family::A,
    rank: 1,
};

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn binomial(n: usize, k: usize) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// The highest- and lowest-weight matrices of `V(n−m+2k) ⊂ Hom(V(m), V(n))` in
/// the `(m+1) × (n+1)` display layout: with `j = m − k`, the entry at row
/// `m − i`, column `n − j + i` is `(−1)^i C(j, i)`, so the band starts with 1
/// in the bottom row. `lowest` is `highest` rotated by 180°.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl2SummandMatrix {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub highest: QMatrix,
    pub lowest: QMatrix,
}

pub fn sl2_summand_matrix(m: usize, n: usize, k: usize) -> Result<Sl2SummandMatrix> {
    if k > m || m > n {
        return Err(Error::InvalidParameters(format!(
            "need 0 <= k <= m <= n, got m={m} n={n} k={k}"
        )));
    }
    let j = m - k;
    let mut highest = QMatrix::zeros(m + 1, n + 1);
    for i in 0..=j {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        highest.set(m - i, n - j + i, Q::from_integer(binomial(j, i) * sign));
    }
    let mut lowest = QMatrix::zeros(m + 1, n + 1);
    for r in 0..=m {
        for c in 0..=n {
            lowest.set(r, c, highest.get(m - r, n - c).clone());
        }
    }

    let hom = HomModule::new(Arc::new(build_sl2(m)), Arc::new(build_sl2(n)))?;
    let t = display_to_hom(&highest, m, n);
    let weight = Weight(vec![n as i64 - m as i64 + 2 * k as i64]);
    if hom.weight_of_matrix(&t).as_ref() != Some(&weight) || !hom.act_e(0, &t).is_zero() {
        return Err(Error::NotPrimitive {
            weight,
            reason: format!("display matrix for m={m} n={n} k={k}"),
        });
    }
    Ok(Sl2SummandMatrix {
        m,
        n,
        k,
        highest,
        lowest,
    })
}

/// Converts a display matrix to an `(n+1) × (m+1)` matrix on the bases
/// `fᵃ v` of `build_sl2`. Rows of the display index `V(m)` by `x^{m−s} y^s`
/// and columns index `V(n)*` through the invariant pairing; the factorials
/// rescale monomials to `fᵃ v` and the sign comes from the pairing.
pub fn display_to_hom(display: &QMatrix, m: usize, n: usize) -> QMatrix {
    let mut t = QMatrix::zeros(n + 1, m + 1);
    let (fm, fn_) = (factorial(m), factorial(n));
    for s in 0..=m {
        for b in 0..=n {
            let x = display.get(s, n - b);
            if x == &Q::from_integer(0.into()) {
                continue;
            }
            let sign = if (m - s).is_multiple_of(2) { 1 } else { -1 };
            let scale = Q::new(factorial(s) * factorial(n - b) * sign, fm.clone() * fn_.clone());
            t.set(b, s, x * scale);
        }
    }
    t
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub nu: usize,
    pub mult: usize,
    pub rank_closed_orbit: usize,
    pub rank_generic: usize,
    pub verdict: VerdictKind,
    pub seed: u64,
    pub min_rank_witness: Witness,
    pub max_rank_witness: Witness,
}

impl ScanRow {
    /// Sampling saw a single rank of corank at least 2.
    pub fn is_flagged(&self) -> bool {
        self.verdict == VerdictKind::ProbablyConstant && self.m + 1 >= self.rank_generic + 2
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub max_n: usize,
    pub rows: Vec<ScanRow>,
    /// `(m, n, k)` of flagged rows.
    pub flagged: Vec<(usize, usize, usize)>,
    /// `(m, n)` cells cut short by the time budget.
    pub truncated: Vec<(usize, usize)>,
    #[serde(skip)]
    pub elapsed: Duration,
}

/// Runs the pipeline on `(n−m+2k, m, n)` for all `0 ≤ k ≤ m ≤ n ≤ max_n`.
/// Cells run in parallel; each walks `k` upward and stops when the budget is
/// spent. Rows are sorted by `(m, n, k)`.
pub fn sl2_scan(lab: &Lab, max_n: usize) -> Result<ScanReport> {
    let start = Instant::now();
    let budget = lab.config.scan_budget;
    let cells: Vec<(usize, usize)> = (0..=max_n)
        .flat_map(|n| (0..=n).map(move |m| (m, n)))
        .collect();
    let results: Vec<Result<(Vec<ScanRow>, bool)>> = cells
        .par_iter()
        .map(|&(m, n)| {
            let mut rows = Vec::new();
            for k in 0..=m {
                if start.elapsed() > budget {
                    return Ok((rows, true));
                }
                let nu = n - m + 2 * k;
                let report = corank1_pipeline(
                    lab,
                    A1,
                    &Weight(vec![nu as i64]),
                    &Weight(vec![m as i64]),
                    &Weight(vec![n as i64]),
                )?;
                if !report.is_consistent() {
                    return Err(Error::Inconsistent(report.issues.join("; ")));
                }
                if report.multiplicity != 1 {
                    return Err(Error::Inconsistent(format!(
                        "V({nu}) occurs {} times in Hom(V({m}), V({n}))",
                        report.multiplicity
                    )));
                }
                let v = &report.candidates[0].verdict;
                rows.push(ScanRow {
                    m,
                    n,
                    k,
                    nu,
                    mult: report.multiplicity,
                    rank_closed_orbit: v.rank_closed_orbit(),
                    rank_generic: v.rank_generic(),
                    verdict: v.kind,
                    seed: v.seed,
                    min_rank_witness: v.min_rank_witness.clone(),
                    max_rank_witness: v.max_rank_witness.clone(),
                });
            }
            Ok((rows, false))
        })
        .collect();

    let mut rows = Vec::new();
    let mut truncated = Vec::new();
    for (cell, result) in cells.iter().zip(results) {
        let (cell_rows, cut) = result?;
        rows.extend(cell_rows);
        if cut {
            truncated.push(*cell);
        }
    }
    rows.sort_by_key(|r| (r.m, r.n, r.k));
    truncated.sort_unstable();
    let flagged = rows
        .iter()
        .filter(|r| r.is_flagged())
        .map(|r| (r.m, r.n, r.k))
        .collect();
    Ok(ScanReport {
        max_n,
        rows,
        flagged,
        truncated,
        elapsed: start.elapsed(),
    })
}
