//! Irreducible highest-weight modules with explicit Chevalley generator
//! matrices.
//!
//! `build_irrep` descends from `v_λ` one depth at a time. At a weight `δ` the
//! candidate vectors are `fᵢ b` for basis vectors `b` of weight `δ + αᵢ`. Since
//! the only primitive vector of `V(λ)` is `v_λ`, a vector below the top is
//! determined by its images under all `eⱼ`; those images are computed from
//! `eⱼ fᵢ b = fᵢ eⱼ b + δᵢⱼ ⟨wt b, α̌ᵢ⟩ b` using data already built one and two
//! levels up. Exact echelon reduction of these signatures picks a basis (the
//! lexicographically first independent words) and expresses every other
//! candidate in it.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{Family, PositiveRoot, RootSystem, RootSystemSpec, Weight};
use crate::error::{Error, Result};
use crate::linalg::{fraction_string, q, QMatrix, SparseMatrix, Q};

pub const DEFAULT_DIM_GUARD: usize = 2000;

/// How the basis vectors of a module were produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisLabels {
    /// Basis vector `b` is `f_{w[k-1]} ⋯ f_{w[0]} v_λ` for `w = words[b]`, and
    /// equals `f_i` applied to basis vector `p` when `parents[b] = Some((p, i))`.
    Words {
        words: Vec<Vec<usize>>,
        parents: Vec<Option<(usize, usize)>>,
    },
    /// Dual basis of another module.
    Dual,
    /// Monomials of a symmetric power, as sorted multisets of basis indices.
    Multisets(Vec<Vec<usize>>),
}

#[derive(Clone, Debug)]
pub struct WeightModule {
    rs: Arc<RootSystem>,
    highest_weight: Weight,
    irreducible: bool,
    labels: BasisLabels,
    weights: Vec<Weight>,
    by_weight: HashMap<Weight, Vec<usize>>,
    e: Vec<SparseMatrix>,
    f: Vec<SparseMatrix>,
}

fn index_weights(weights: &[Weight]) -> HashMap<Weight, Vec<usize>> {
    let mut by_weight: HashMap<Weight, Vec<usize>> = HashMap::new();
    for (b, w) in weights.iter().enumerate() {
        by_weight.entry(w.clone()).or_default().push(b);
    }
    by_weight
}

impl WeightModule {
    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// Highest weight; for a symmetric power, the top weight `r·λ`.
    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn is_irreducible(&self) -> bool {
        self.irreducible
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn labels(&self) -> &BasisLabels {
        &self.labels
    }

    pub fn words(&self) -> Option<&[Vec<usize>]> {
        match &self.labels {
            BasisLabels::Words { words, .. } => Some(words),
            _ => None,
        }
    }

    pub fn parents(&self) -> Option<&[Option<(usize, usize)>]> {
        match &self.labels {
            BasisLabels::Words { parents, .. } => Some(parents),
            _ => None,
        }
    }

    pub fn weight_of(&self, b: usize) -> &Weight {
        &self.weights[b]
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Basis indices of the `γ` weight space.
    pub fn basis_at(&self, gamma: &Weight) -> &[usize] {
        self.by_weight.get(gamma).map_or(&[], Vec::as_slice)
    }

    pub fn support(&self) -> BTreeSet<Weight> {
        self.by_weight.keys().cloned().collect()
    }

    pub fn e(&self, i: usize) -> &SparseMatrix {
        &self.e[i]
    }

    pub fn f(&self, i: usize) -> &SparseMatrix {
        &self.f[i]
    }

    /// Diagonal of `hᵢ`: `⟨wt b, α̌ᵢ⟩` at basis index `b`.
    pub fn h_diagonal(&self, i: usize) -> Vec<Q> {
        self.weights.iter().map(|w| q(w.0[i])).collect()
    }

    /// Basis index of `v_λ` (0 for constructed modules).
    pub fn highest_vector(&self) -> Option<usize> {
        match self.basis_at(&self.highest_weight) {
            [b] => Some(*b),
            _ => None,
        }
    }

    /// Checks the defining identities exactly: `[Eᵢ, Fⱼ] = δᵢⱼ Hᵢ` with `Hᵢ`
    /// diagonal, weight grading of every generator, and for F-word modules the
    /// parent links (cyclicity from `v_λ`).
    pub fn check_invariants(&self) -> Result<()> {
        let n = self.rs.rank();
        let fail = |msg: String| Err(Error::Inconsistent(msg));
        for i in 0..n {
            for j in 0..n {
                let comm = self.e[i]
                    .mul_sparse(&self.f[j])
                    .sub_sparse(&self.f[j].mul_sparse(&self.e[i]));
                if i == j {
                    if !comm.is_diagonal_with(&self.h_diagonal(i)) {
                        return fail(format!("[E{i},F{i}] is not the weight diagonal"));
                    }
                } else if !comm.is_zero() {
                    return fail(format!("[E{i},F{j}] != 0"));
                }
            }
            let alpha = self.rs.simple_root(i);
            for (r, c, _) in self.e[i].entries() {
                if self.weights[r] != &self.weights[c] + &alpha {
                    return fail(format!("E{i} does not raise weight at column {c}"));
                }
            }
            for (r, c, _) in self.f[i].entries() {
                if self.weights[r] != &self.weights[c] - &alpha {
                    return fail(format!("F{i} does not lower weight at column {c}"));
                }
            }
        }
        if self.irreducible {
            if self.basis_at(&self.highest_weight).len() != 1 {
                return fail("highest weight space is not a line".into());
            }
            for w in self.by_weight.keys() {
                if self.rs.dominance_leq(w, &self.highest_weight).is_none() {
                    return fail(format!("weight {w} not below the highest weight"));
                }
            }
        }
        if let BasisLabels::Words { parents, .. } = &self.labels {
            for (b, parent) in parents.iter().enumerate() {
                match parent {
                    None if self.weights[b] == self.highest_weight => {}
                    None => return fail(format!("basis vector {b} has no parent")),
                    Some((p, i)) => {
                        if self.f[*i].column(*p) != [(b, Q::from_integer(1.into()))] {
                            return fail(format!("basis vector {b} is not f{i} of {p}"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// `V(n)` for sl₂ in the basis `v_{n−2k} = fᵏ v_n`, with
/// `e v_{n−2k} = k(n−k+1) v_{n−2k+2}`.
pub fn build_sl2(n: usize) -> WeightModule {
    let rs = Arc::new(
        RootSystem::new(RootSystemSpec {
            family: Family::A,
            rank: 1,
        })
        .expect("A1 is admissible"),
    );
    let dim = n + 1;
    let ni = n as i64;
    let weights: Vec<Weight> = (0..dim).map(|k| Weight(vec![ni - 2 * k as i64])).collect();
    let mut e_cols = vec![Vec::new(); dim];
    let mut f_cols = vec![Vec::new(); dim];
    for k in 0..dim {
        let ki = k as i64;
        if k >= 1 {
            e_cols[k].push((k - 1, q(ki * (ni - ki + 1))));
        }
        if k < n {
            f_cols[k].push((k + 1, q(1)));
        }
    }
    WeightModule {
        rs,
        highest_weight: Weight(vec![ni]),
        irreducible: true,
        labels: BasisLabels::Words {
            words: (0..dim).map(|k| vec![0; k]).collect(),
            parents: (0..dim).map(|k| k.checked_sub(1).map(|p| (p, 0))).collect(),
        },
        by_weight: index_weights(&weights),
        weights,
        e: vec![SparseMatrix::from_columns(dim, e_cols)],
        f: vec![SparseMatrix::from_columns(dim, f_cols)],
    }
}

fn check_guard(dim: &BigUint, guard: usize) -> Result<usize> {
    match dim.to_usize() {
        Some(d) if d <= guard => Ok(d),
        _ => Err(Error::DimensionGuard {
            dim: dim.to_string(),
            guard,
        }),
    }
}

pub fn weyl_dim(rs: &RootSystem, lambda: &Weight) -> Result<BigUint> {
    rs.weyl_dim(lambda)
}

/// Builds `V(λ)`; see the module docs for the algorithm.
pub fn build_irrep(rs: &Arc<RootSystem>, lambda: &Weight, guard: usize) -> Result<WeightModule> {
    rs.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let expected = check_guard(&rs.weyl_dim(lambda)?, guard)?;
    let n = rs.rank();
    let simple: Vec<Weight> = (0..n).map(|i| rs.simple_root(i)).collect();

    let mut weights = vec![lambda.clone()];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut parents: Vec<Option<(usize, usize)>> = vec![None];
    let mut by_weight: HashMap<Weight, Vec<usize>> = HashMap::from([(lambda.clone(), vec![0])]);
    // e_cols[i][b] is E_i applied to basis vector b; f_cols likewise, filled in
    // once the next level down has been built.
    let mut e_cols: Vec<Vec<Vec<(usize, Q)>>> = vec![vec![Vec::new()]; n];
    let mut f_cols: Vec<Vec<Vec<(usize, Q)>>> = vec![vec![Vec::new()]; n];
    let mut level = vec![lambda.clone()];

    while !level.is_empty() {
        let mut next: Vec<Weight> = level
            .iter()
            .flat_map(|w| simple.iter().map(move |a| w - a))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        next.sort_by(|a, b| b.cmp(a));

        let mut new_level = Vec::new();
        for delta in next {
            let mut cands: Vec<(Vec<usize>, usize, usize)> = Vec::new();
            for (i, alpha) in simple.iter().enumerate() {
                if let Some(bs) = by_weight.get(&(&delta + alpha)) {
                    for &b in bs {
                        let mut word = words[b].clone();
                        word.push(i);
                        cands.push((word, i, b));
                    }
                }
            }
            cands.sort();

            // Signature coordinates: one block per j, indexed by the basis of δ + αⱼ.
            let mut row_of: HashMap<usize, usize> = HashMap::new();
            let mut block_rows: Vec<usize> = Vec::new();
            for alpha in &simple {
                if let Some(bs) = by_weight.get(&(&delta + alpha)) {
                    for &b in bs {
                        row_of.insert(b, block_rows.len());
                        block_rows.push(b);
                    }
                }
            }
            // Distinct j give disjoint target weights, so one row index per
            // basis vector suffices.
            let mut sig = QMatrix::zeros(block_rows.len(), cands.len());
            for (c, (_, i, b)) in cands.iter().enumerate() {
                for j in 0..n {
                    for (up, x) in &e_cols[j][*b] {
                        for (d, y) in &f_cols[*i][*up] {
                            *sig.entry_mut(row_of[d], c) += x * y;
                        }
                    }
                    if *i == j {
                        *sig.entry_mut(row_of[b], c) += q(weights[*b].0[*i]);
                    }
                }
            }

            let (rref, pivots) = sig.rref();
            if pivots.is_empty() {
                continue;
            }
            let first = weights.len();
            for &p in &pivots {
                let (word, i, b) = &cands[p];
                weights.push(delta.clone());
                words.push(word.clone());
                parents.push(Some((*b, *i)));
                for (j, alpha) in simple.iter().enumerate() {
                    let target = &delta + alpha;
                    let col = by_weight.get(&target).map_or_else(Vec::new, |bs| {
                        bs.iter()
                            .filter_map(|&d| {
                                let v = sig[(row_of[&d], p)].clone();
                                (!v.is_zero()).then_some((d, v))
                            })
                            .collect()
                    });
                    e_cols[j].push(col);
                    f_cols[j].push(Vec::new());
                }
            }
            for (c, (_, i, b)) in cands.iter().enumerate() {
                f_cols[*i][*b] = (0..pivots.len())
                    .filter_map(|k| {
                        let v = rref[(k, c)].clone();
                        (!v.is_zero()).then_some((first + k, v))
                    })
                    .collect();
            }
            by_weight.insert(delta.clone(), (first..weights.len()).collect());
            new_level.push(delta);
        }
        level = new_level;
    }

    let dim = weights.len();
    if dim != expected {
        return Err(Error::Inconsistent(format!(
            "V{lambda} built with dimension {dim}, Weyl formula gives {expected}"
        )));
    }
    Ok(WeightModule {
        rs: rs.clone(),
        highest_weight: lambda.clone(),
        irreducible: true,
        labels: BasisLabels::Words { words, parents },
        by_weight,
        weights,
        e: e_cols
            .into_iter()
            .map(|c| SparseMatrix::from_columns(dim, c))
            .collect(),
        f: f_cols
            .into_iter()
            .map(|c| SparseMatrix::from_columns(dim, c))
            .collect(),
    })
}

pub fn weight_multiplicity(m: &WeightModule, gamma: &Weight) -> usize {
    m.basis_at(gamma).len()
}

/// `(p, q)` for the `α`-string through `γ`, after checking that the string is
/// unbroken and `⟨γ, α̌⟩ = q − p`.
pub fn root_string(m: &WeightModule, gamma: &Weight, root: &PositiveRoot) -> Result<(i64, i64)> {
    if m.basis_at(gamma).is_empty() {
        return Err(Error::NotAWeight(gamma.clone()));
    }
    let alpha = &root.weight;
    let k = alpha
        .0
        .iter()
        .position(|&c| c != 0)
        .expect("roots are nonzero");
    let mut steps: Vec<i64> = m
        .by_weight
        .keys()
        .filter_map(|w| {
            let diff = w - gamma;
            let s = diff.0[k] / alpha.0[k];
            (diff == alpha.scaled(s)).then_some(s)
        })
        .collect();
    steps.sort_unstable();
    let (lo, hi) = (steps[0], *steps.last().unwrap());
    let (p, qq) = (hi, -lo);
    if steps.len() as i64 != p + qq + 1 {
        return Err(Error::Inconsistent(format!(
            "root string through {gamma} along {alpha} has gaps"
        )));
    }
    let pairing = m.rs.coroot_pairing(gamma, root);
    if pairing != qq - p {
        return Err(Error::Inconsistent(format!(
            "<{gamma}, coroot of {alpha}> = {pairing} but q - p = {}",
            qq - p
        )));
    }
    Ok((p, qq))
}

/// Contragredient module on the dual basis: `E' = −Eᵀ`, `F' = −Fᵀ`, weights negated.
pub fn dual_module(m: &WeightModule) -> WeightModule {
    let neg = -Q::from_integer(1.into());
    let weights: Vec<Weight> = m.weights.iter().map(|w| -w).collect();
    WeightModule {
        rs: m.rs.clone(),
        highest_weight: if m.irreducible {
            m.rs.minus_w0(&m.highest_weight)
        } else {
            weights.iter().max().cloned().unwrap_or_else(|| -&m.highest_weight)
        },
        irreducible: m.irreducible,
        labels: BasisLabels::Dual,
        by_weight: index_weights(&weights),
        weights,
        e: m.e.iter().map(|x| x.transpose().scale(&neg)).collect(),
        f: m.f.iter().map(|x| x.transpose().scale(&neg)).collect(),
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `Symʳ M` on monomials in the basis of `M`; generators act as derivations.
pub fn symmetric_power_module(m: &WeightModule, r: usize, guard: usize) -> Result<WeightModule> {
    if r == 0 {
        return Err(Error::InvalidParameters("symmetric power needs r >= 1".into()));
    }
    let dim = check_guard(&binomial(m.dim() + r - 1, r), guard)?;
    let mut monomials: Vec<Vec<usize>> = Vec::with_capacity(dim);
    let mut current = vec![0usize; r];
    if m.dim() > 0 {
        loop {
            monomials.push(current.clone());
            // next non-decreasing sequence
            let Some(pos) = (0..r).rev().find(|&p| current[p] + 1 < m.dim()) else {
                break;
            };
            let v = current[pos] + 1;
            current[pos..].iter_mut().for_each(|c| *c = v);
        }
    }
    let index: HashMap<&[usize], usize> = monomials
        .iter()
        .enumerate()
        .map(|(k, mono)| (mono.as_slice(), k))
        .collect();
    let weights: Vec<Weight> = monomials
        .iter()
        .map(|mono| {
            mono.iter()
                .fold(Weight::zero(m.rs.rank()), |acc, &b| &acc + &m.weights[b])
        })
        .collect();
    let derive = |x: &SparseMatrix| {
        let cols = monomials
            .iter()
            .map(|mono| {
                let mut out = Vec::new();
                for t in 0..r {
                    for (c, v) in x.column(mono[t]) {
                        let mut image = mono.clone();
                        image[t] = *c;
                        image.sort_unstable();
                        out.push((index[image.as_slice()], v.clone()));
                    }
                }
                out
            })
            .collect();
        SparseMatrix::from_columns(monomials.len(), cols)
    };
    let e = m.e.iter().map(&derive).collect();
    let f = m.f.iter().map(&derive).collect();
    Ok(WeightModule {
        rs: m.rs.clone(),
        highest_weight: m.highest_weight.scaled(r as i64),
        irreducible: r == 1 && m.irreducible,
        by_weight: index_weights(&weights),
        weights,
        labels: BasisLabels::Multisets(monomials),
        e,
        f,
    })
}

/// Weight multiplicities of `V(λ)` from Freudenthal's recursion. Shares
/// nothing with `build_irrep` beyond the root system data.
pub fn freudenthal_multiplicities(rs: &RootSystem, lambda: &Weight) -> BTreeMap<Weight, u64> {
    let rho = rs.rho();
    let mut dominant: Vec<(u64, Weight)> = rs
        .dominant_weights_below(lambda)
        .into_iter()
        .map(|w| (rs.depth_below(lambda, &w).expect("below"), w))
        .collect();
    dominant.sort();
    let top = {
        let s = lambda + &rho;
        rs.inner_product(&s, &s)
    };
    let mut mult: HashMap<Weight, Q> = HashMap::new();
    for (_, mu) in &dominant {
        if mu == lambda {
            mult.insert(mu.clone(), q(1));
            continue;
        }
        let mut sum = Q::zero();
        for root in rs.positive_roots() {
            for k in 1.. {
                let shifted = mu + &root.weight.scaled(k);
                let Some(m) = mult.get(&rs.dominant_representative(&shifted).0) else {
                    break;
                };
                sum += m * rs.inner_product(&shifted, &root.weight);
            }
        }
        let s = mu + &rho;
        let value = q(2) * sum / (&top - rs.inner_product(&s, &s));
        mult.insert(mu.clone(), value);
    }
    let mut all = BTreeMap::new();
    for (mu, m) in mult {
        let m = m.to_integer().to_u64().expect("multiplicity fits u64");
        if m == 0 {
            continue;
        }
        for w in rs.weyl_orbit(&mu) {
            all.insert(w, m);
        }
    }
    all
}

/// `Conv(Wλ) ∩ (λ − NΔ)`, computed as the union of Weyl orbits of the dominant
/// weights below `λ`.
pub fn predicted_support(rs: &RootSystem, lambda: &Weight) -> BTreeSet<Weight> {
    rs.dominant_weights_below(lambda)
        .iter()
        .flat_map(|mu| rs.weyl_orbit(mu))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub index: usize,
    pub weight: Weight,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub word: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixEntry {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

/// Text form of a module for golden files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleExport {
    pub root_system: String,
    pub highest_weight: Weight,
    pub dim: usize,
    pub basis: Vec<BasisEntry>,
    pub e: Vec<Vec<MatrixEntry>>,
    pub f: Vec<Vec<MatrixEntry>>,
}

impl WeightModule {
    pub fn export(&self) -> ModuleExport {
        let words = self.words();
        let entries = |m: &SparseMatrix| {
            let mut out: Vec<MatrixEntry> = m
                .entries()
                .map(|(row, col, v)| MatrixEntry {
                    row,
                    col,
                    value: fraction_string(v),
                })
                .collect();
            out.sort_by_key(|e| (e.row, e.col));
            out
        };
        ModuleExport {
            root_system: self.rs.spec().to_string(),
            highest_weight: self.highest_weight.clone(),
            dim: self.dim(),
            basis: self
                .weights
                .iter()
                .enumerate()
                .map(|(index, weight)| BasisEntry {
                    index,
                    weight: weight.clone(),
                    word: words.map(|w| w[index].clone()),
                })
                .collect(),
            e: self.e.iter().map(entries).collect(),
            f: self.f.iter().map(entries).collect(),
        }
    }

    pub fn export_json(&self) -> String {
        serde_json::to_string_pretty(&self.export()).expect("serializable")
    }
}

/// Shared store of root systems and irreducible modules, keyed by type and
/// highest weight. Safe to use from several threads; a module may be built
/// twice under contention, and the first one stored wins.
#[derive(Debug)]
pub struct IrrepCache {
    guard: usize,
    systems: Mutex<HashMap<RootSystemSpec, Arc<RootSystem>>>,
    modules: Mutex<HashMap<(RootSystemSpec, Weight), Arc<WeightModule>>>,
}

impl IrrepCache {
    pub fn new(guard: usize) -> Self {
        Self {
            guard,
            systems: Mutex::default(),
            modules: Mutex::default(),
        }
    }

    pub fn guard(&self) -> usize {
        self.guard
    }

    pub fn root_system(&self, spec: RootSystemSpec) -> Result<Arc<RootSystem>> {
        if let Some(rs) = self.systems.lock().unwrap().get(&spec) {
            return Ok(rs.clone());
        }
        let rs = Arc::new(RootSystem::new(spec)?);
        Ok(self
            .systems
            .lock()
            .unwrap()
            .entry(spec)
            .or_insert(rs)
            .clone())
    }

    pub fn irrep(&self, spec: RootSystemSpec, lambda: &Weight) -> Result<Arc<WeightModule>> {
        let key = (spec, lambda.clone());
        if let Some(m) = self.modules.lock().unwrap().get(&key) {
            return Ok(m.clone());
        }
        let rs = self.root_system(spec)?;
        let m = Arc::new(build_irrep(&rs, lambda, self.guard)?);
        Ok(self
            .modules
            .lock()
            .unwrap()
            .entry(key)
            .or_insert(m)
            .clone())
    }

    /// Every module built so far, in a deterministic order.
    pub fn modules(&self) -> Vec<Arc<WeightModule>> {
        let map = self.modules.lock().unwrap();
        let mut keys: Vec<_> = map.keys().cloned().collect();
        keys.sort();
        keys.into_iter().map(|k| map[&k].clone()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> Arc<RootSystem> {
        Arc::new(RootSystem::new(s.parse().unwrap()).unwrap())
    }

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    #[test]
    fn sl2_closed_form() {
        let v0 = build_sl2(0);
        assert_eq!(v0.dim(), 1);
        assert!(v0.e(0).is_zero() && v0.f(0).is_zero());
        let v1 = build_sl2(1);
        assert_eq!(v1.e(0).get(0, 1), q(1));
        let v2 = build_sl2(2);
        assert_eq!(v2.e(0).get(1, 2), q(2));
        for n in 0..8 {
            build_sl2(n).check_invariants().unwrap();
        }
    }

    #[test]
    fn a2_fundamental() {
        let m = build_irrep(&rs("A2"), &w(&[1, 0]), DEFAULT_DIM_GUARD).unwrap();
        assert_eq!(m.dim(), 3);
        let support: Vec<Weight> = m.weights().to_vec();
        assert_eq!(support, vec![w(&[1, 0]), w(&[-1, 1]), w(&[0, -1])]);
        m.check_invariants().unwrap();
    }

    #[test]
    fn a1_dimensions_and_g2() {
        for n in 0..10 {
            assert_eq!(build_irrep(&rs("A1"), &w(&[n]), 100).unwrap().dim(), n as usize + 1);
        }
        let g = build_irrep(&rs("G2"), &w(&[1, 0]), 100).unwrap();
        assert_eq!(g.dim(), 7);
        g.check_invariants().unwrap();
    }

    #[test]
    fn rejects_bad_input() {
        let a2 = rs("A2");
        assert!(matches!(
            build_irrep(&a2, &w(&[-1, 0]), 100),
            Err(Error::NotDominant(_))
        ));
        assert!(matches!(
            build_irrep(&a2, &w(&[5, 5]), 100),
            Err(Error::DimensionGuard { .. })
        ));
        assert!(matches!(
            build_irrep(&a2, &w(&[1]), 100),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn adjoint_zero_weight() {
        let m = build_irrep(&rs("A2"), &w(&[1, 1]), 100).unwrap();
        assert_eq!(weight_multiplicity(&m, &w(&[0, 0])), 2);
        assert_eq!(weight_multiplicity(&m, &w(&[1, 1])), 1);
        // ν − αᵢ has multiplicity 1 iff ⟨ν, α̌ᵢ⟩ ≠ 0
        let a2 = rs("A2");
        let nu = w(&[2, 0]);
        let m = build_irrep(&a2, &nu, 100).unwrap();
        assert_eq!(weight_multiplicity(&m, &(&nu - &a2.simple_root(0))), 1);
        assert_eq!(weight_multiplicity(&m, &(&nu - &a2.simple_root(1))), 0);
    }

    #[test]
    fn root_strings() {
        let a1 = rs("A1");
        let trivial = build_irrep(&a1, &w(&[0]), 10).unwrap();
        let alpha = &a1.positive_roots()[0];
        assert_eq!(root_string(&trivial, &w(&[0]), alpha).unwrap(), (0, 0));
        let v2 = build_irrep(&a1, &w(&[2]), 10).unwrap();
        assert_eq!(root_string(&v2, &w(&[0]), alpha).unwrap(), (1, 1));
        assert_eq!(root_string(&v2, &w(&[2]), alpha).unwrap(), (0, 2));
        assert!(matches!(
            root_string(&v2, &w(&[1]), alpha),
            Err(Error::NotAWeight(_))
        ));
    }

    #[test]
    fn duals() {
        let a2 = rs("A2");
        let m = build_irrep(&a2, &w(&[1, 0]), 10).unwrap();
        let d = dual_module(&m);
        assert_eq!(d.highest_weight(), &w(&[0, 1]));
        d.check_invariants().unwrap();
        let dd = dual_module(&d);
        assert_eq!(dd.weights(), m.weights());
        assert_eq!(dd.e(0), m.e(0));
        let v3 = build_sl2(3);
        assert_eq!(dual_module(&v3).highest_weight(), &w(&[3]));
    }

    #[test]
    fn symmetric_powers() {
        let v1 = build_sl2(1);
        let s1 = symmetric_power_module(&v1, 1, 100).unwrap();
        assert_eq!(s1.weights(), v1.weights());
        assert_eq!(s1.e(0), v1.e(0));
        assert_eq!(s1.f(0), v1.f(0));
        let s2 = symmetric_power_module(&v1, 2, 100).unwrap();
        assert_eq!(s2.dim(), 3);
        s2.check_invariants().unwrap();
        let a2 = build_irrep(&rs("A2"), &w(&[1, 0]), 10).unwrap();
        let s = symmetric_power_module(&a2, 2, 100).unwrap();
        assert_eq!(s.dim(), 6);
        s.check_invariants().unwrap();
        assert!(matches!(
            symmetric_power_module(&a2, 10, 20),
            Err(Error::DimensionGuard { .. })
        ));
    }

    #[test]
    fn freudenthal_matches_known_values() {
        let a2 = rs("A2");
        let m = freudenthal_multiplicities(&a2, &w(&[1, 1]));
        assert_eq!(m[&w(&[0, 0])], 2);
        assert_eq!(m.values().sum::<u64>(), 8);
        let g2 = rs("G2");
        let m = freudenthal_multiplicities(&g2, &w(&[0, 1]));
        assert_eq!(m[&w(&[0, 0])], 2);
        assert_eq!(m.values().sum::<u64>(), 14);
    }

    #[test]
    fn construction_agrees_with_freudenthal() {
        for (spec, lambdas) in [
            ("A2", vec![vec![2, 1], vec![3, 0], vec![2, 2]]),
            ("A3", vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 2, 0]]),
            ("B2", vec![vec![1, 1], vec![2, 0], vec![0, 3]]),
            ("C3", vec![vec![0, 1, 0], vec![1, 0, 1]]),
            ("B3", vec![vec![0, 0, 1], vec![1, 0, 1]]),
            ("D4", vec![vec![0, 1, 0, 0], vec![1, 0, 1, 0]]),
            ("G2", vec![vec![1, 1], vec![2, 0], vec![0, 2]]),
        ] {
            let rs = rs(spec);
            for l in lambdas {
                let lambda = Weight(l);
                let m = build_irrep(&rs, &lambda, DEFAULT_DIM_GUARD).unwrap();
                m.check_invariants().unwrap();
                let expected = freudenthal_multiplicities(&rs, &lambda);
                let built: BTreeMap<Weight, u64> = m
                    .support()
                    .into_iter()
                    .map(|g| {
                        let k = weight_multiplicity(&m, &g) as u64;
                        (g, k)
                    })
                    .collect();
                assert_eq!(built, expected, "{spec} {lambda}");
                assert_eq!(m.support(), predicted_support(&rs, &lambda));
            }
        }
    }

    #[test]
    fn export_is_stable_json() {
        let m = build_irrep(&rs("A2"), &w(&[1, 0]), 10).unwrap();
        let json = m.export_json();
        let back: ModuleExport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m.export());
        assert_eq!(back.basis[1].word, Some(vec![0]));
    }
}
