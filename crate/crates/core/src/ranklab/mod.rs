//! Rank analysis of equivariant matrix spaces.

use std::sync::Arc;
use std::time::Duration;

use crate::cartan::{RootSystem, RootSystemSpec, Weight};
use crate::error::Result;
use crate::irrep::{IrrepCache, WeightModule, DEFAULT_DIM_GUARD};

pub mod lemmas;
pub mod pipeline;
pub mod sl2;
pub mod space;
pub mod verdict;
pub mod wedge;

pub use lemmas::{lemma_sweep, LemmaBounds, LemmaCheck, LemmaReport};
pub use pipeline::{corank1_pipeline, CandidateReport, PipelineReport};
pub use sl2::{display_to_hom, sl2_scan, sl2_summand_matrix, ScanReport, ScanRow, Sl2SummandMatrix};
pub use space::{
    generic_rank_estimate, rank_at_closed_orbit, rank_exact, LinearMatrixSpace, RankSamples,
};
pub use verdict::{theorem_conditions, verdict, RankVerdict, TheoremConditions, VerdictKind};
pub use wedge::{wedge_kernel_compare, wedge_theta};

/// Tunable parameters shared by every computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabConfig {
    pub seed: u64,
    pub samples: usize,
    /// Sample coordinates are drawn uniformly from `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
    pub dim_guard: usize,
    pub weyl_cap: usize,
    /// Random combinations analyzed on top of the primitive basis when a
    /// summand occurs more than once.
    pub extra_combinations: usize,
    pub scan_budget: Duration,
}

impl Default for LabConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            samples: 5,
            coeff_bound: 10,
            dim_guard: DEFAULT_DIM_GUARD,
            weyl_cap: 120,
            extra_combinations: 2,
            scan_budget: Duration::from_secs(600),
        }
    }
}

/// Configuration plus a shared module cache.
#[derive(Debug)]
pub struct Lab {
    pub config: LabConfig,
    pub cache: IrrepCache,
}

impl Lab {
    pub fn new(config: LabConfig) -> Self {
        let cache = IrrepCache::new(config.dim_guard);
        Self { config, cache }
    }

    pub fn root_system(&self, spec: RootSystemSpec) -> Result<Arc<RootSystem>> {
        self.cache.root_system(spec)
    }

    pub fn irrep(&self, spec: RootSystemSpec, lambda: &Weight) -> Result<Arc<WeightModule>> {
        self.cache.irrep(spec, lambda)
    }
}

impl Default for Lab {
    fn default() -> Self {
        Self::new(LabConfig::default())
    }
}
