use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::irrep::WeightModule;
use crate::linalg::{q, rank_bareiss, QMatrix, Q};

/// A linear family `u ↦ Σ u_b A_b` of matrices, one `A_b` per basis vector of
/// the parameter module. Index 0 is the highest-weight vector, whose orbit is
/// the closed orbit in the projectivized parameter space.
#[derive(Clone, Debug)]
pub struct LinearMatrixSpace {
    param: Option<Arc<WeightModule>>,
    matrices: Vec<QMatrix>,
    rows: usize,
    cols: usize,
}

impl LinearMatrixSpace {
    pub fn new(param: Option<Arc<WeightModule>>, matrices: Vec<QMatrix>) -> Result<Self> {
        let first = matrices
            .first()
            .ok_or_else(|| Error::InvalidParameters("empty matrix space".into()))?;
        let (rows, cols) = (first.rows(), first.cols());
        if matrices.iter().any(|m| m.rows() != rows || m.cols() != cols) {
            return Err(Error::InvalidParameters("matrices of different shapes".into()));
        }
        if let Some(p) = &param {
            if p.dim() != matrices.len() {
                return Err(Error::InvalidParameters(
                    "one matrix per parameter basis vector is required".into(),
                ));
            }
        }
        Ok(Self {
            param,
            matrices,
            rows,
            cols,
        })
    }

    pub fn param(&self) -> Option<&Arc<WeightModule>> {
        self.param.as_ref()
    }

    pub fn matrices(&self) -> &[QMatrix] {
        &self.matrices
    }

    pub fn dim(&self) -> usize {
        self.matrices.len()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn evaluate(&self, u: &[Q]) -> QMatrix {
        assert_eq!(u.len(), self.matrices.len(), "parameter vector length");
        let mut acc = QMatrix::zeros(self.rows, self.cols);
        for (c, m) in u.iter().zip(&self.matrices) {
            if !c.is_zero() {
                acc.add_scaled(c, m);
            }
        }
        acc
    }

    /// The space of transposed matrices, `Hom(V(λ)*, V(μ)*)` for a space
    /// inside `Hom(V(μ), V(λ))`.
    pub fn transpose(&self) -> LinearMatrixSpace {
        LinearMatrixSpace {
            param: self.param.clone(),
            matrices: self.matrices.iter().map(QMatrix::transpose).collect(),
            rows: self.cols,
            cols: self.rows,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.matrices.iter().all(QMatrix::is_zero)
    }

    pub fn unit_vector(&self, b: usize) -> Vec<Q> {
        let mut u = vec![Q::zero(); self.dim()];
        u[b] = q(1);
        u
    }
}

/// Exact rank over ℚ by fraction-free elimination.
pub fn rank_exact(a: &QMatrix) -> usize {
    rank_bareiss(a)
}

pub fn rank_at_closed_orbit(space: &LinearMatrixSpace) -> usize {
    rank_exact(&space.matrices()[0])
}

/// Ranks at seeded random integer points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankSamples {
    /// Every sampled point with its rank, in draw order.
    pub points: Vec<(Vec<Q>, usize)>,
}

impl RankSamples {
    /// The first sample attaining the maximal rank.
    pub fn max(&self) -> (&[Q], usize) {
        let best = self.points.iter().map(|p| p.1).max().expect("at least one sample");
        let (u, r) = self.points.iter().find(|p| p.1 == best).unwrap();
        (u, *r)
    }

    pub fn min_rank(&self) -> usize {
        self.points.iter().map(|p| p.1).min().expect("at least one sample")
    }
}

/// Draws `samples` nonzero vectors with entries uniform in `[-bound, bound]`
/// from a ChaCha8 stream seeded with `seed`, and ranks each evaluation.
pub fn generic_rank_estimate(
    space: &LinearMatrixSpace,
    samples: usize,
    bound: i64,
    seed: u64,
) -> Result<RankSamples> {
    if samples == 0 || bound < 1 {
        return Err(Error::InvalidParameters(
            "sampling needs at least one sample and a positive bound".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<Vec<Q>> = (0..samples)
        .map(|_| loop {
            let u: Vec<i64> = (0..space.dim()).map(|_| rng.gen_range(-bound..=bound)).collect();
            if u.iter().any(|&x| x != 0) {
                break u.into_iter().map(q).collect();
            }
        })
        .collect();
    let points = draws
        .into_par_iter()
        .map(|u| {
            let r = rank_exact(&space.evaluate(&u));
            (u, r)
        })
        .collect();
    Ok(RankSamples { points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rank_gauss;
    use proptest::prelude::*;

    fn small_matrix() -> impl Strategy<Value = QMatrix> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-4i64..=4, c), r)
                .prop_map(|rows| QMatrix::from_i64_rows(&rows))
        })
    }

    fn space(mats: &[&[Vec<i64>]]) -> LinearMatrixSpace {
        LinearMatrixSpace::new(
            None,
            mats.iter().map(|m| QMatrix::from_i64_rows(m)).collect(),
        )
        .unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn bareiss_agrees_with_gauss(m in small_matrix()) {
            prop_assert_eq!(rank_exact(&m), rank_gauss(&m));
        }

        #[test]
        fn rank_is_scale_invariant(m in small_matrix(), num in 1i64..20, den in 1i64..20, neg: bool) {
            let c = crate::linalg::q_frac(if neg { -num } else { num }, den);
            prop_assert_eq!(rank_exact(&m.scale(&c)), rank_exact(&m));
        }

        #[test]
        fn evaluate_is_linear(
            a in prop::collection::vec(-5i64..=5, 3),
            b in prop::collection::vec(-5i64..=5, 3),
            s in -3i64..=3,
            t in -3i64..=3,
        ) {
            let l = space(&[
                &[vec![1, 2], vec![0, 1]],
                &[vec![0, -1], vec![3, 0]],
                &[vec![2, 2], vec![1, -1]],
            ]);
            let qa: Vec<Q> = a.iter().map(|&x| q(x)).collect();
            let qb: Vec<Q> = b.iter().map(|&x| q(x)).collect();
            let comb: Vec<Q> = a.iter().zip(&b).map(|(x, y)| q(s * x + t * y)).collect();
            let expected = &l.evaluate(&qa).scale(&q(s)) + &l.evaluate(&qb).scale(&q(t));
            prop_assert_eq!(l.evaluate(&comb), expected);
        }
    }

    #[test]
    fn exact_rank_basics() {
        assert_eq!(rank_exact(&QMatrix::identity(5)), 5);
        assert_eq!(rank_exact(&QMatrix::zeros(3, 4)), 0);
    }

    #[test]
    fn sampling_is_deterministic() {
        let l = space(&[&[vec![1, 0], vec![0, 0]], &[vec![0, 0], vec![0, 1]]]);
        let a = generic_rank_estimate(&l, 5, 10, 7).unwrap();
        let b = generic_rank_estimate(&l, 5, 10, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.points.len(), 5);
        assert!(a.points.iter().all(|(u, _)| u.iter().any(|x| !x.is_zero())));
        assert_eq!(rank_at_closed_orbit(&l), 1);
        assert!(a.max().1 >= 1);
        assert!(l.evaluate(&[q(0), q(0)]).is_zero());
        assert_eq!(l.transpose().rows(), 2);
    }
}
