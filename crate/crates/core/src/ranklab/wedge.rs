use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::{q, QMatrix};
use crate::ranklab::space::{rank_exact, LinearMatrixSpace};

/// `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(current.clone());
        let Some(pos) = (0..k).rev().find(|&p| current[p] < n - k + p) else {
            return out;
        };
        current[pos] += 1;
        for p in pos + 1..k {
            current[p] = current[p - 1] + 1;
        }
    }
}

/// `e_S ∧ e_T` as `(sign, S ∪ T)`, or `None` when `S` and `T` meet.
fn wedge(s: &[usize], t: &[usize]) -> Option<(i64, Vec<usize>)> {
    if s.iter().any(|x| t.contains(x)) {
        return None;
    }
    let inversions = s.iter().map(|a| t.iter().filter(|b| a > b).count()).sum::<usize>();
    let mut union: Vec<usize> = s.iter().chain(t).copied().collect();
    union.sort_unstable();
    Some((if inversions % 2 == 0 { 1 } else { -1 }, union))
}

/// The space `Λᵏℚⁿ → Hom(Λʳℚⁿ, Λ^{r+k}ℚⁿ)`, `u ↦ (w ↦ u ∧ w)`, with one
/// matrix per `k`-subset in lexicographic order.
pub fn wedge_theta(n: usize, r: usize, k: usize) -> Result<LinearMatrixSpace> {
    if r == 0 || k == 0 || r + k >= n {
        return Err(Error::InvalidParameters(format!(
            "need r, k >= 1 and r + k < n, got n={n} r={r} k={k}"
        )));
    }
    let sources = subsets(n, r);
    let targets = subsets(n, r + k);
    let row_of: HashMap<&[usize], usize> = targets
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    let matrices = subsets(n, k)
        .iter()
        .map(|s| {
            let mut m = QMatrix::zeros(targets.len(), sources.len());
            for (c, t) in sources.iter().enumerate() {
                if let Some((sign, u)) = wedge(s, t) {
                    m.set(row_of[u.as_slice()], c, q(sign));
                }
            }
            m
        })
        .collect();
    LinearMatrixSpace::new(None, matrices)
}

/// Kernel dimensions of `E = e_{0..k}∧` and of `E + E'` with
/// `E' = e_{n−k..n}∧`, both acting on `Λʳℚⁿ`.
pub fn wedge_kernel_compare(n: usize, r: usize, k: usize) -> Result<(usize, usize)> {
    let theta = wedge_theta(n, r, k)?;
    let all = subsets(n, k);
    let first = 0;
    let last = all.len() - 1;
    debug_assert_eq!(all[last], (n - k..n).collect::<Vec<_>>());
    let e = &theta.matrices()[first];
    let sum = e + &theta.matrices()[last];
    Ok((theta.cols() - rank_exact(e), theta.cols() - rank_exact(&sum)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ranklab::generic_rank_estimate;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(4, 2)[0], vec![0, 1]);
        assert_eq!(subsets(4, 2)[5], vec![2, 3]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn shuffle_signs() {
        assert_eq!(wedge(&[1], &[0]), Some((-1, vec![0, 1])));
        assert_eq!(wedge(&[0, 2], &[1]), Some((-1, vec![0, 1, 2])));
        assert_eq!(wedge(&[0], &[0]), None);
    }

    #[test]
    fn kernels() {
        assert_eq!(wedge_kernel_compare(4, 1, 2).unwrap(), (2, 0));
        let (a, b) = wedge_kernel_compare(5, 2, 1).unwrap();
        assert_eq!(a, b);
        // disjoint (2k <= n) and overlapping (2k > n) supports
        for (n, r, k) in [(6, 2, 3), (5, 1, 3)] {
            let (a, b) = wedge_kernel_compare(n, r, k).unwrap();
            assert!(a > b, "n={n} r={r} k={k}");
        }
        assert!(wedge_theta(4, 2, 2).is_err());
    }

    #[test]
    fn degree_one_is_constant_rank() {
        for (n, r) in [(4, 1), (5, 2), (6, 3)] {
            let theta = wedge_theta(n, r, 1).unwrap();
            let samples = generic_rank_estimate(&theta, 5, 10, 3).unwrap();
            assert!(samples.points.iter().all(|p| p.1 == binomial(n - 1, r)));
        }
        let theta = wedge_theta(4, 1, 2).unwrap();
        assert!(theta.evaluate(&vec![q(0); theta.dim()]).is_zero());
    }
}
