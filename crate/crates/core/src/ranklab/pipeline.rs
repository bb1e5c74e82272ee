use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cartan::{RootSystemSpec, Weight};
use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::ranklab::verdict::{theorem_conditions, verdict, RankVerdict, TheoremConditions, VerdictKind};
use crate::ranklab::Lab;
use crate::tensor::{equivariant_map_space, primitive_space, sym_primitive_vanishing, HomModule};

#[derive(Clone, Debug, Serialize)]
pub struct CandidateReport {
    /// `basis k` for the k-th primitive basis vector, `combination k` for a
    /// random combination of them.
    pub label: String,
    pub verdict: RankVerdict,
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineReport {
    pub root_system: String,
    pub nu: Weight,
    pub mu: Weight,
    pub lambda: Weight,
    pub mu_dim: usize,
    pub lambda_dim: usize,
    pub multiplicity: usize,
    pub conditions: TheoremConditions,
    pub candidates: Vec<CandidateReport>,
    /// Whether `Sym^{d+1} V(ν)` has no primitive vector of weight
    /// `(d+1)ν − αᵢ`; checked only when the conditions hold.
    pub sym_vanishing: Option<bool>,
    /// Violations of the classification; empty when consistent.
    pub issues: Vec<String>,
}

impl PipelineReport {
    pub fn is_consistent(&self) -> bool {
        self.issues.is_empty()
    }

    pub fn kinds(&self) -> Vec<VerdictKind> {
        self.candidates.iter().map(|c| c.verdict.kind).collect()
    }
}

/// Analyzes every inclusion `V(ν) → Hom(V(μ), V(λ))` given by the primitive
/// matrices of weight `ν`, and cross-checks the verdicts against the
/// structural conditions.
pub fn corank1_pipeline(
    lab: &Lab,
    spec: RootSystemSpec,
    nu: &Weight,
    mu: &Weight,
    lambda: &Weight,
) -> Result<PipelineReport> {
    let cfg = &lab.config;
    let rs = lab.root_system(spec)?;
    for w in [nu, mu, lambda] {
        rs.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.clone()));
        }
    }
    let source = lab.irrep(spec, mu)?;
    let target = lab.irrep(spec, lambda)?;
    let hom = HomModule::new(source.clone(), target.clone())?;
    let prim = primitive_space(&hom, nu);
    let conditions = theorem_conditions(&rs, nu, mu, lambda)?;
    let mut report = PipelineReport {
        root_system: spec.to_string(),
        nu: nu.clone(),
        mu: mu.clone(),
        lambda: lambda.clone(),
        mu_dim: source.dim(),
        lambda_dim: target.dim(),
        multiplicity: prim.len(),
        conditions,
        candidates: Vec::new(),
        sym_vanishing: None,
        issues: Vec::new(),
    };

    let mut combos: Vec<(String, Vec<Q>)> = prim
        .vectors
        .iter()
        .enumerate()
        .map(|(k, v)| (format!("basis {k}"), v.clone()))
        .collect();
    if prim.len() > 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(1);
        for k in 0..cfg.extra_combinations {
            let coeffs: Vec<i64> = loop {
                let c: Vec<i64> = (0..prim.len())
                    .map(|_| rng.gen_range(-cfg.coeff_bound..=cfg.coeff_bound))
                    .collect();
                if c.iter().any(|&x| x != 0) {
                    break c;
                }
            };
            let mut v = vec![Q::zero(); prim.keys.len()];
            for (c, basis) in coeffs.iter().zip(&prim.vectors) {
                for (x, y) in v.iter_mut().zip(basis) {
                    *x += q(*c) * y;
                }
            }
            combos.push((format!("combination {k}"), v));
        }
    }
    if !combos.is_empty() {
        let param = lab.irrep(spec, nu)?;
        for (label, v) in combos {
            let w0 = hom.matrix(&prim.keys, &v);
            let space = equivariant_map_space(&hom, param.clone(), w0)?;
            let verdict = verdict(&space, source.dim(), &conditions, cfg)?;
            report.candidates.push(CandidateReport { label, verdict });
        }
    }

    if let (true, Some(i), Some(d)) = (conditions.holds, conditions.i, conditions.d) {
        if report.multiplicity == 0 {
            report
                .issues
                .push("conditions hold but V(ν) is not a summand".into());
        }
        for c in &report.candidates {
            if c.verdict.kind != VerdictKind::ConstantCorankOneCertified {
                report.issues.push(format!(
                    "conditions hold but {} is {}",
                    c.label, c.verdict.kind
                ));
            }
        }
        let vanishing = sym_primitive_vanishing(&rs, nu, d as usize + 1, i, cfg.dim_guard)?;
        if !vanishing {
            report
                .issues
                .push(format!("Sym^{} V(ν) has a primitive vector of weight (d+1)ν − α{i}", d + 1));
        }
        report.sym_vanishing = Some(vanishing);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(spec: &str, nu: &[i64], mu: &[i64], lambda: &[i64]) -> PipelineReport {
        corank1_pipeline(
            &Lab::default(),
            spec.parse().unwrap(),
            &Weight(nu.to_vec()),
            &Weight(mu.to_vec()),
            &Weight(lambda.to_vec()),
        )
        .unwrap()
    }

    #[test]
    fn adjoint_sl2_is_certified() {
        let r = run("A1", &[2], &[2], &[2]);
        assert_eq!(r.multiplicity, 1);
        assert_eq!(r.kinds(), vec![VerdictKind::ConstantCorankOneCertified]);
        assert_eq!(r.candidates[0].verdict.rank_closed_orbit(), 2);
        assert!(r.is_consistent());
        assert_eq!(r.sym_vanishing, Some(true));
    }

    #[test]
    fn top_summand_of_sl2_endomorphisms_is_not_constant() {
        let r = run("A1", &[4], &[2], &[2]);
        assert_eq!(r.multiplicity, 1);
        assert_eq!(r.kinds(), vec![VerdictKind::CertifiedNotConstant]);
        assert_eq!(r.candidates[0].verdict.rank_closed_orbit(), 1);
        assert!(r.is_consistent());
    }

    #[test]
    fn symmetric_forms_family() {
        let r = run("A2", &[1, 0], &[2, 0], &[1, 1]);
        assert_eq!(r.multiplicity, 1);
        assert_eq!(r.mu_dim, 6);
        assert_eq!(r.kinds(), vec![VerdictKind::ConstantCorankOneCertified]);
        assert_eq!(r.candidates[0].verdict.rank_generic(), 5);
    }

    #[test]
    fn missing_summand_has_multiplicity_zero() {
        let r = run("A1", &[3], &[2], &[2]);
        assert_eq!(r.multiplicity, 0);
        assert!(r.candidates.is_empty());
    }

    #[test]
    fn multiplicity_two_adds_combinations() {
        // the adjoint module occurs twice in End(adjoint) for A2
        let r = run("A2", &[1, 1], &[1, 1], &[1, 1]);
        assert_eq!(r.multiplicity, 2);
        assert_eq!(r.candidates.len(), 4);
        assert!(r.is_consistent());
    }
}
