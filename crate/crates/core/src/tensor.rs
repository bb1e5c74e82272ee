//! Tensor and Hom modules, primitive vectors, decompositions, and the
//! equivariant matrix spaces generated by primitive matrices.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{RootSystem, Weight};
use crate::error::{Error, Result};
use crate::irrep::{build_irrep, dual_module, symmetric_power_module, WeightModule};
use crate::linalg::{QMatrix, SparseMatrix, Q};
use crate::ranklab::space::LinearMatrixSpace;

/// A finite-dimensional module with a weight basis indexed by `Key` and
/// explicit raising and lowering operators.
pub trait GradedModule {
    type Key: Clone + Ord + Hash + Debug;

    fn root_system(&self) -> &Arc<RootSystem>;
    fn dim(&self) -> usize;
    fn support(&self) -> BTreeSet<Weight>;
    /// Basis keys of weight `γ`, in a fixed order.
    fn weight_space(&self, gamma: &Weight) -> Vec<Self::Key>;
    fn raise(&self, i: usize, key: &Self::Key) -> Vec<(Self::Key, Q)>;
    fn lower(&self, i: usize, key: &Self::Key) -> Vec<(Self::Key, Q)>;
}

impl GradedModule for WeightModule {
    type Key = usize;

    fn root_system(&self) -> &Arc<RootSystem> {
        WeightModule::root_system(self)
    }

    fn dim(&self) -> usize {
        WeightModule::dim(self)
    }

    fn support(&self) -> BTreeSet<Weight> {
        WeightModule::support(self)
    }

    fn weight_space(&self, gamma: &Weight) -> Vec<usize> {
        self.basis_at(gamma).to_vec()
    }

    fn raise(&self, i: usize, key: &usize) -> Vec<(usize, Q)> {
        self.e(i).column(*key).to_vec()
    }

    fn lower(&self, i: usize, key: &usize) -> Vec<(usize, Q)> {
        self.f(i).column(*key).to_vec()
    }
}

fn sum_support(a: &WeightModule, b: &WeightModule, negate_b: bool) -> BTreeSet<Weight> {
    let sb = b.support();
    a.support()
        .iter()
        .flat_map(|x| {
            sb.iter()
                .map(move |y| if negate_b { x - y } else { x + y })
        })
        .collect()
}

/// `M ⊗ N` on pairs of basis indices.
#[derive(Clone, Debug)]
pub struct TensorModule {
    left: Arc<WeightModule>,
    right: Arc<WeightModule>,
}

impl TensorModule {
    pub fn new(left: Arc<WeightModule>, right: Arc<WeightModule>) -> Result<Self> {
        if left.root_system().spec() != right.root_system().spec() {
            return Err(Error::InvalidParameters(
                "tensor factors belong to different root systems".into(),
            ));
        }
        Ok(Self { left, right })
    }

    pub fn left(&self) -> &WeightModule {
        &self.left
    }

    pub fn right(&self) -> &WeightModule {
        &self.right
    }

    fn act(&self, x: impl Fn(&WeightModule) -> &SparseMatrix, key: &(usize, usize)) -> Vec<((usize, usize), Q)> {
        let (a, b) = *key;
        let mut out: Vec<((usize, usize), Q)> = x(&self.left)
            .column(a)
            .iter()
            .map(|(r, v)| ((*r, b), v.clone()))
            .collect();
        out.extend(x(&self.right).column(b).iter().map(|(r, v)| ((a, *r), v.clone())));
        out
    }
}

impl GradedModule for TensorModule {
    type Key = (usize, usize);

    fn root_system(&self) -> &Arc<RootSystem> {
        self.left.root_system()
    }

    fn dim(&self) -> usize {
        self.left.dim() * self.right.dim()
    }

    fn support(&self) -> BTreeSet<Weight> {
        sum_support(&self.left, &self.right, false)
    }

    fn weight_space(&self, gamma: &Weight) -> Vec<(usize, usize)> {
        tensor_weight_space(&self.left, &self.right, gamma)
    }

    fn raise(&self, i: usize, key: &(usize, usize)) -> Vec<((usize, usize), Q)> {
        self.act(|m| m.e(i), key)
    }

    fn lower(&self, i: usize, key: &(usize, usize)) -> Vec<((usize, usize), Q)> {
        self.act(|m| m.f(i), key)
    }
}

/// All basis pairs `(a, b)` with `wt a + wt b = γ`, sorted.
pub fn tensor_weight_space(m: &WeightModule, n: &WeightModule, gamma: &Weight) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    for beta in n.support() {
        for &a in m.basis_at(&(gamma - &beta)) {
            for &b in n.basis_at(&beta) {
                pairs.push((a, b));
            }
        }
    }
    pairs.sort_unstable();
    pairs
}

/// `Hom(source, target)` as matrices of shape `dim target × dim source`, with
/// `X·T = X_target T − T X_source`. The key `(a, b)` is the matrix unit sending
/// source basis vector `b` to target basis vector `a`.
#[derive(Clone, Debug)]
pub struct HomModule {
    source: Arc<WeightModule>,
    target: Arc<WeightModule>,
    source_e_t: Vec<SparseMatrix>,
    source_f_t: Vec<SparseMatrix>,
}

impl HomModule {
    pub fn new(source: Arc<WeightModule>, target: Arc<WeightModule>) -> Result<Self> {
        if source.root_system().spec() != target.root_system().spec() {
            return Err(Error::InvalidParameters(
                "Hom arguments belong to different root systems".into(),
            ));
        }
        let n = source.root_system().rank();
        Ok(Self {
            source_e_t: (0..n).map(|i| source.e(i).transpose()).collect(),
            source_f_t: (0..n).map(|i| source.f(i).transpose()).collect(),
            source,
            target,
        })
    }

    pub fn source(&self) -> &Arc<WeightModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<WeightModule> {
        &self.target
    }

    /// Weight of the matrix unit `(a, b)`.
    pub fn unit_weight(&self, a: usize, b: usize) -> Weight {
        self.target.weight_of(a) - self.source.weight_of(b)
    }

    pub fn act_e(&self, i: usize, t: &QMatrix) -> QMatrix {
        &self.target.e(i).mul_dense(t) - &self.source.e(i).left_mul_dense(t)
    }

    pub fn act_f(&self, i: usize, t: &QMatrix) -> QMatrix {
        &self.target.f(i).mul_dense(t) - &self.source.f(i).left_mul_dense(t)
    }

    /// Assembles the matrix `Σ coeffs[k] · unit(keys[k])`.
    pub fn matrix(&self, keys: &[(usize, usize)], coeffs: &[Q]) -> QMatrix {
        let mut m = QMatrix::zeros(self.target.dim(), self.source.dim());
        for ((a, b), c) in keys.iter().zip(coeffs) {
            *m.entry_mut(*a, *b) += c;
        }
        m
    }

    /// The weight of `t` if it is a nonzero weight vector.
    pub fn weight_of_matrix(&self, t: &QMatrix) -> Option<Weight> {
        let mut weights = t.nonzero_entries().map(|(a, b, _)| self.unit_weight(a, b));
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    /// `Hom(target*, source*)`, which receives the transposes of matrices in
    /// this module equivariantly.
    pub fn transposed(&self) -> Result<HomModule> {
        HomModule::new(
            Arc::new(dual_module(&self.target)),
            Arc::new(dual_module(&self.source)),
        )
    }

    fn act(&self, x: &SparseMatrix, x_src_t: &SparseMatrix, key: &(usize, usize)) -> Vec<((usize, usize), Q)> {
        let (a, b) = *key;
        let mut out: Vec<((usize, usize), Q)> =
            x.column(a).iter().map(|(r, v)| ((*r, b), v.clone())).collect();
        out.extend(x_src_t.column(b).iter().map(|(c, v)| ((a, *c), -v)));
        out
    }
}

impl GradedModule for HomModule {
    type Key = (usize, usize);

    fn root_system(&self) -> &Arc<RootSystem> {
        self.source.root_system()
    }

    fn dim(&self) -> usize {
        self.source.dim() * self.target.dim()
    }

    fn support(&self) -> BTreeSet<Weight> {
        sum_support(&self.target, &self.source, true)
    }

    fn weight_space(&self, gamma: &Weight) -> Vec<(usize, usize)> {
        let mut keys = Vec::new();
        for beta in self.source.support() {
            for &a in self.target.basis_at(&(gamma + &beta)) {
                for &b in self.source.basis_at(&beta) {
                    keys.push((a, b));
                }
            }
        }
        keys.sort_unstable();
        keys
    }

    fn raise(&self, i: usize, key: &(usize, usize)) -> Vec<((usize, usize), Q)> {
        self.act(self.target.e(i), &self.source_e_t[i], key)
    }

    fn lower(&self, i: usize, key: &(usize, usize)) -> Vec<((usize, usize), Q)> {
        self.act(self.target.f(i), &self.source_f_t[i], key)
    }
}

/// Basis of the primitive vectors of one weight, as coordinate vectors over
/// `keys` (the basis of the weight space).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimitiveBasis<K> {
    pub weight: Weight,
    pub keys: Vec<K>,
    pub vectors: Vec<Vec<Q>>,
}

impl<K> PrimitiveBasis<K> {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

/// Joint kernel of all raising operators on the `γ` weight space.
pub fn primitive_space<M: GradedModule>(module: &M, gamma: &Weight) -> PrimitiveBasis<M::Key> {
    let keys = module.weight_space(gamma);
    if keys.is_empty() {
        return PrimitiveBasis {
            weight: gamma.clone(),
            keys,
            vectors: Vec::new(),
        };
    }
    let n = module.root_system().rank();
    let mut rows: HashMap<(usize, M::Key), usize> = HashMap::new();
    let mut entries: Vec<(usize, usize, Q)> = Vec::new();
    for (c, key) in keys.iter().enumerate() {
        for i in 0..n {
            for (image, v) in module.raise(i, key) {
                let next = rows.len();
                let r = *rows.entry((i, image)).or_insert(next);
                entries.push((r, c, v));
            }
        }
    }
    let mut system = QMatrix::zeros(rows.len(), keys.len());
    for (r, c, v) in entries {
        *system.entry_mut(r, c) += v;
    }
    PrimitiveBasis {
        weight: gamma.clone(),
        keys,
        vectors: system.nullspace(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub weight: Weight,
    pub multiplicity: usize,
    pub dim: usize,
}

/// Irreducible summands, by highest weight in decreasing lexicographic order.
pub fn decompose<M: GradedModule>(module: &M) -> Result<Vec<Summand>> {
    let rs = module.root_system().clone();
    let mut summands = Vec::new();
    let mut total = 0usize;
    for gamma in module.support().into_iter().rev().filter(Weight::is_dominant) {
        let multiplicity = primitive_space(module, &gamma).len();
        if multiplicity == 0 {
            continue;
        }
        let dim = rs
            .weyl_dim(&gamma)?
            .to_usize()
            .ok_or_else(|| Error::Inconsistent("summand dimension overflow".into()))?;
        total += multiplicity * dim;
        summands.push(Summand {
            weight: gamma,
            multiplicity,
            dim,
        });
    }
    if total != module.dim() {
        return Err(Error::Inconsistent(format!(
            "summands account for dimension {total}, module has {}",
            module.dim()
        )));
    }
    Ok(summands)
}

/// The copy of `V(ν)` generated by a primitive matrix `w0` of weight `ν`:
/// basis vector `b = f_i p` of `param` is sent to `act_F(i, A_p)`. The
/// intertwining identities are verified exactly before returning.
pub fn equivariant_map_space(
    hom: &HomModule,
    param: Arc<WeightModule>,
    w0: QMatrix,
) -> Result<LinearMatrixSpace> {
    let nu = param.highest_weight().clone();
    let not_primitive = |reason: &str| Error::NotPrimitive {
        weight: nu.clone(),
        reason: reason.into(),
    };
    if w0.rows() != hom.target().dim() || w0.cols() != hom.source().dim() {
        return Err(not_primitive("matrix shape does not match the Hom module"));
    }
    match hom.weight_of_matrix(&w0) {
        None if w0.is_zero() => return Err(not_primitive("zero matrix")),
        Some(w) if w == nu => {}
        _ => return Err(not_primitive("not a weight vector of the given weight")),
    }
    let n = hom.root_system().rank();
    if (0..n).any(|i| !hom.act_e(i, &w0).is_zero()) {
        return Err(not_primitive("not killed by every raising operator"));
    }
    let parents = param.parents().ok_or(Error::MissingWords)?;
    if param.highest_vector() != Some(0) {
        return Err(Error::MissingWords);
    }
    let mut matrices: Vec<QMatrix> = Vec::with_capacity(param.dim());
    matrices.push(w0);
    for parent in &parents[1..] {
        let (p, i) = parent.ok_or(Error::MissingWords)?;
        let next = hom.act_f(i, &matrices[p]);
        matrices.push(next);
    }
    let space = LinearMatrixSpace::new(Some(param), matrices)?;
    check_equivariance(hom, &space)?;
    Ok(space)
}

/// Checks `X·A_b = Σ_c X[c,b] A_c` for every generator `X` and basis index `b`.
pub fn check_equivariance(hom: &HomModule, space: &LinearMatrixSpace) -> Result<()> {
    let param = space
        .param()
        .ok_or_else(|| Error::InvalidParameters("space has no parameter module".into()))?;
    let combine = |col: &[(usize, Q)]| {
        let mut acc = QMatrix::zeros(space.rows(), space.cols());
        for (c, v) in col {
            acc.add_scaled(v, &space.matrices()[*c]);
        }
        acc
    };
    for i in 0..hom.root_system().rank() {
        for (b, a) in space.matrices().iter().enumerate() {
            if hom.act_e(i, a) != combine(param.e(i).column(b)) {
                return Err(Error::Inconsistent(format!("E{i} does not intertwine at basis {b}")));
            }
            if hom.act_f(i, a) != combine(param.f(i).column(b)) {
                return Err(Error::Inconsistent(format!("F{i} does not intertwine at basis {b}")));
            }
        }
    }
    Ok(())
}

/// `true` iff `Symʳ V(ν)` has no primitive vector of weight `rν − αᵢ`.
pub fn sym_primitive_vanishing(
    rs: &Arc<RootSystem>,
    nu: &Weight,
    r: usize,
    i: usize,
    guard: usize,
) -> Result<bool> {
    rs.check_index(i)?;
    sym_vanishing_for_module(&build_irrep(rs, nu, guard)?, r, i, guard)
}

/// `sym_primitive_vanishing` for an already built `V(ν)`.
pub fn sym_vanishing_for_module(base: &WeightModule, r: usize, i: usize, guard: usize) -> Result<bool> {
    let rs = base.root_system();
    rs.check_index(i)?;
    let sym = symmetric_power_module(base, r, guard)?;
    let target = &base.highest_weight().scaled(r as i64) - &rs.simple_root(i);
    Ok(primitive_space(&sym, &target).is_empty())
}

/// In `V(μ)*`, whether the weight spaces at `−μ + αᵢ` generate every weight
/// space above the lowest one under the raising operators.
pub fn b_generation_check(rs: &Arc<RootSystem>, mu: &Weight, guard: usize) -> Result<bool> {
    Ok(b_generation_for_module(&build_irrep(rs, mu, guard)?))
}

/// `b_generation_check` for an already built `V(μ)`.
pub fn b_generation_for_module(module: &WeightModule) -> bool {
    let rs = module.root_system();
    let dual = dual_module(module);
    let lowest = -module.highest_weight();
    let n = rs.rank();
    let mut pending: BTreeMap<(u64, Weight), Vec<Vec<Q>>> = BTreeMap::new();
    for i in 0..n {
        let gamma = &lowest + &rs.simple_root(i);
        let k = dual.basis_at(&gamma).len();
        if k > 0 {
            let rows = (0..k).map(|r| unit(k, r)).collect();
            pending.insert((1, gamma), rows);
        }
    }
    let mut reached = 0usize;
    let mut complete = true;
    while let Some(((h, gamma), vectors)) = pending.pop_first() {
        let basis = dual.basis_at(&gamma);
        let (rref, pivots) = QMatrix::from_rows(vectors).rref();
        reached += 1;
        if pivots.len() < basis.len() {
            complete = false;
        }
        for j in 0..n {
            let up = &gamma + &rs.simple_root(j);
            let up_basis = dual.basis_at(&up);
            if up_basis.is_empty() {
                continue;
            }
            let local: HashMap<usize, usize> =
                up_basis.iter().enumerate().map(|(k, &b)| (b, k)).collect();
            let images = pending.entry((h + 1, up)).or_default();
            for r in 0..pivots.len() {
                let mut image = vec![Q::zero(); up_basis.len()];
                for (k, &b) in basis.iter().enumerate() {
                    let x = rref.get(r, k);
                    if x.is_zero() {
                        continue;
                    }
                    for (t, v) in dual.e(j).column(b) {
                        image[local[t]] += x * v;
                    }
                }
                images.push(image);
            }
        }
    }
    complete && reached + 1 == dual.support().len()
}

fn unit(len: usize, k: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); len];
    v[k] = Q::from_integer(1.into());
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrvFlag {
    Smallest,
    Biggest,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrvCandidate {
    pub word: Vec<usize>,
    pub weight: Weight,
    pub flag: Option<PrvFlag>,
}

/// Dominant representatives of `μ − wλ` for every Weyl group element `w`.
/// These are summands of `Hom(V(λ), V(μ))`.
pub fn prv_candidates(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    cap: usize,
) -> Result<Vec<PrvCandidate>> {
    rs.check_weight(lambda)?;
    rs.check_weight(mu)?;
    for w in [lambda, mu] {
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.clone()));
        }
    }
    let rho = rs.rho();
    let minus_rho = -&rho;
    Ok(rs
        .weyl_group(cap)?
        .into_iter()
        .map(|word| {
            let flag = if word.is_empty() {
                Some(PrvFlag::Smallest)
            } else if rs.apply_word(&word, &rho) == minus_rho {
                Some(PrvFlag::Biggest)
            } else {
                None
            };
            let weight = rs
                .dominant_representative(&(mu - &rs.apply_word(&word, lambda)))
                .0;
            PrvCandidate { word, weight, flag }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irrep::{build_sl2, DEFAULT_DIM_GUARD};
    use crate::linalg::q;

    fn rs(s: &str) -> Arc<RootSystem> {
        Arc::new(RootSystem::new(s.parse().unwrap()).unwrap())
    }

    fn w(c: &[i64]) -> Weight {
        Weight(c.to_vec())
    }

    fn irrep(rs: &Arc<RootSystem>, c: &[i64]) -> Arc<WeightModule> {
        Arc::new(build_irrep(rs, &w(c), DEFAULT_DIM_GUARD).unwrap())
    }

    fn summands(d: &[Summand]) -> Vec<(Weight, usize)> {
        d.iter().map(|s| (s.weight.clone(), s.multiplicity)).collect()
    }

    #[test]
    fn tensor_weight_spaces() {
        let a1 = rs("A1");
        let v2 = irrep(&a1, &[2]);
        assert_eq!(tensor_weight_space(&v2, &v2, &w(&[4])).len(), 1);
        assert_eq!(tensor_weight_space(&v2, &v2, &w(&[0])).len(), 3);
        // λ = (d+1)ν − αᵢ in V(dν) ⊗ V(ν) only meets ν and ν − αᵢ in the second factor
        let a2 = rs("A2");
        let nu = w(&[1, 0]);
        let vd = irrep(&a2, &[2, 0]);
        let vn = irrep(&a2, &[1, 0]);
        let lambda = &nu.scaled(3) - &a2.simple_root(0);
        let gammas: BTreeSet<Weight> = tensor_weight_space(&vd, &vn, &lambda)
            .into_iter()
            .map(|(_, b)| vn.weight_of(b).clone())
            .collect();
        assert_eq!(gammas, BTreeSet::from([nu.clone(), &nu - &a2.simple_root(0)]));
        let t = TensorModule::new(vd, vn).unwrap();
        assert_eq!(primitive_space(&t, &lambda).len(), 1);
    }

    #[test]
    fn primitive_spaces() {
        let a2 = rs("A2");
        let m = irrep(&a2, &[2, 1]);
        assert_eq!(primitive_space(m.as_ref(), &w(&[2, 1])).len(), 1);
        assert_eq!(primitive_space(m.as_ref(), &w(&[0, 2])).len(), 0);
        assert!(primitive_space(m.as_ref(), &w(&[9, 9])).is_empty());
        let a1 = rs("A1");
        for (mm, n) in [(0, 0), (2, 4), (3, 5)] {
            let hom = HomModule::new(irrep(&a1, &[mm]), irrep(&a1, &[n])).unwrap();
            for k in 0..=mm {
                assert_eq!(primitive_space(&hom, &w(&[n - mm + 2 * k])).len(), 1);
            }
        }
    }

    #[test]
    fn decompositions() {
        let a1 = rs("A1");
        let hom = HomModule::new(irrep(&a1, &[2]), irrep(&a1, &[4])).unwrap();
        assert_eq!(
            summands(&decompose(&hom).unwrap()),
            vec![(w(&[6]), 1), (w(&[4]), 1), (w(&[2]), 1)]
        );
        let a2 = rs("A2");
        let t = TensorModule::new(irrep(&a2, &[0, 0]), irrep(&a2, &[2, 1])).unwrap();
        assert_eq!(summands(&decompose(&t).unwrap()), vec![(w(&[2, 1]), 1)]);
        let t = TensorModule::new(irrep(&a2, &[1, 0]), irrep(&a2, &[1, 0])).unwrap();
        assert_eq!(
            summands(&decompose(&t).unwrap()),
            vec![(w(&[2, 0]), 1), (w(&[0, 1]), 1)]
        );
        let hom = HomModule::new(irrep(&a2, &[1, 0]), irrep(&a2, &[0, 1])).unwrap();
        assert_eq!(
            summands(&decompose(&hom).unwrap()),
            vec![(w(&[1, 0]), 1), (w(&[0, 2]), 1)]
        );
    }

    #[test]
    fn adjoint_space_has_rank_two() {
        let a1 = rs("A1");
        let v2 = irrep(&a1, &[2]);
        let hom = HomModule::new(v2.clone(), v2.clone()).unwrap();
        let prim = primitive_space(&hom, &w(&[2]));
        let w0 = hom.matrix(&prim.keys, &prim.vectors[0]);
        let space = equivariant_map_space(&hom, v2, w0).unwrap();
        for m in space.matrices() {
            assert_eq!(m.rank(), 2);
        }
    }

    #[test]
    fn wedge_like_space_in_a2() {
        let a2 = rs("A2");
        let hom = HomModule::new(irrep(&a2, &[1, 0]), irrep(&a2, &[0, 1])).unwrap();
        let prim = primitive_space(&hom, &w(&[1, 0]));
        assert_eq!(prim.len(), 1);
        let w0 = hom.matrix(&prim.keys, &prim.vectors[0]);
        let space = equivariant_map_space(&hom, irrep(&a2, &[1, 0]), w0).unwrap();
        for u in [[1, 0, 0], [0, 1, 0], [1, 2, 3], [-4, 0, 7]] {
            let u: Vec<Q> = u.iter().map(|&x| q(x)).collect();
            assert_eq!(space.evaluate(&u).rank(), 2);
        }
    }

    #[test]
    fn invariant_matrix_gives_constant_space() {
        let a1 = rs("A1");
        let v3 = irrep(&a1, &[3]);
        let hom = HomModule::new(v3.clone(), v3).unwrap();
        let prim = primitive_space(&hom, &w(&[0]));
        let w0 = hom.matrix(&prim.keys, &prim.vectors[0]);
        assert_eq!(w0.rank(), 4);
        let space = equivariant_map_space(&hom, irrep(&a1, &[0]), w0.clone()).unwrap();
        assert_eq!(space.matrices(), &[w0]);
    }

    #[test]
    fn rejects_non_primitive() {
        let a1 = rs("A1");
        let v2 = irrep(&a1, &[2]);
        let hom = HomModule::new(v2.clone(), v2.clone()).unwrap();
        let mut m = QMatrix::zeros(3, 3);
        m.set(1, 2, q(1));
        assert!(matches!(
            equivariant_map_space(&hom, v2.clone(), m),
            Err(Error::NotPrimitive { .. })
        ));
        assert!(matches!(
            equivariant_map_space(&hom, v2, QMatrix::zeros(3, 3)),
            Err(Error::NotPrimitive { .. })
        ));
    }

    #[test]
    fn transpose_is_equivariant_without_sign() {
        let a2 = rs("A2");
        let hom = HomModule::new(irrep(&a2, &[1, 0]), irrep(&a2, &[2, 0])).unwrap();
        let dual = hom.transposed().unwrap();
        let prim = primitive_space(&hom, &w(&[1, 0]));
        let t = hom.matrix(&prim.keys, &prim.vectors[0]);
        let tt = t.transpose();
        for i in 0..2 {
            assert_eq!(dual.act_e(i, &tt), hom.act_e(i, &t).transpose());
            assert_eq!(dual.act_f(i, &tt), hom.act_f(i, &t).transpose());
        }
    }

    #[test]
    fn sym_vanishing_examples() {
        let a1 = rs("A1");
        assert!(sym_primitive_vanishing(&a1, &w(&[2]), 2, 0, 100).unwrap());
        let a2 = rs("A2");
        assert!(sym_primitive_vanishing(&a2, &w(&[1, 0]), 2, 0, 100).unwrap());
        assert!(sym_primitive_vanishing(&a2, &w(&[1, 0]), 2, 1, 100).unwrap());
        let s2 = symmetric_power_module(&build_sl2(2), 2, 100).unwrap();
        assert_eq!(
            summands(&decompose(&s2).unwrap()),
            vec![(w(&[4]), 1), (w(&[0]), 1)]
        );
    }

    #[test]
    fn b_generation_examples() {
        let a1 = rs("A1");
        for n in 1..6 {
            assert!(b_generation_check(&a1, &w(&[n]), 100).unwrap());
        }
        let a2 = rs("A2");
        assert!(b_generation_check(&a2, &w(&[1, 1]), 100).unwrap());
        assert!(b_generation_check(&a2, &w(&[2, 0]), 100).unwrap());
    }

    #[test]
    fn prv_examples() {
        let a1 = rs("A1");
        let c = prv_candidates(&a1, &w(&[2]), &w(&[5]), 10).unwrap();
        assert_eq!(c.len(), 2);
        assert_eq!((c[0].weight.clone(), c[0].flag), (w(&[3]), Some(PrvFlag::Smallest)));
        assert_eq!((c[1].weight.clone(), c[1].flag), (w(&[7]), Some(PrvFlag::Biggest)));
        let a2 = rs("A2");
        let c = prv_candidates(&a2, &w(&[0, 0]), &w(&[1, 2]), 10).unwrap();
        assert!(c.iter().all(|x| x.weight == w(&[1, 2])));
        let hom = HomModule::new(irrep(&a2, &[1, 0]), irrep(&a2, &[1, 0])).unwrap();
        let d: Vec<Weight> = decompose(&hom).unwrap().into_iter().map(|s| s.weight).collect();
        for cand in prv_candidates(&a2, &w(&[1, 0]), &w(&[1, 0]), 10).unwrap() {
            assert!(d.contains(&cand.weight));
        }
        assert!(matches!(
            prv_candidates(&rs("A4"), &w(&[0; 4]), &w(&[0; 4]), 100),
            Err(Error::WeylGroupTooLarge { .. })
        ));
    }
}
