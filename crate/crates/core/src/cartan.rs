//! Root systems of simple types A–D and G₂, weights in fundamental-weight
//! coordinates, the dominance order and the Weyl group action.
//!
//! Numbering follows Bourbaki. The Cartan matrix is stored with
//! `cartan[i][j] = ⟨αⱼ, α̌ᵢ⟩`, so column `j` holds the fundamental-weight
//! coordinates of the simple root `αⱼ`. All indices are 0-based.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{q, QMatrix, Q};

/// An integral weight, entry `i` being `⟨λ, α̌ᵢ⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ωᵢ`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i] = 1;
        Weight(w)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, s: i64) -> Self {
        Weight(self.0.iter().map(|c| c * s).collect())
    }

    /// `Some(d)` with `d ≥ 1` when `self = d·other` and `other ≠ 0`.
    pub fn positive_multiple_of(&self, other: &Weight) -> Option<i64> {
        let k = other.0.iter().position(|&c| c != 0)?;
        let (a, b) = (self.0[k], other.0[k]);
        if a % b != 0 {
            return None;
        }
        let d = a / b;
        (d >= 1 && *self == other.scaled(d)).then_some(d)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Err(Error::ParseWeight(s.to_string()));
        }
        s.split(',')
            .map(|p| p.trim().parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Weight)
            .map_err(|_| Error::ParseWeight(s.to_string()))
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootSystemSpec {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemSpec {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let spec = Self { family, rank };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let reason = match self.family {
            _ if self.rank == 0 => Some("rank must be positive"),
            Family::B | Family::C if self.rank < 2 => Some("types B and C need rank at least 2"),
            Family::D if self.rank < 3 => Some("type D needs rank at least 3"),
            Family::G if self.rank != 2 => Some("type G exists only in rank 2"),
            _ => None,
        };
        match reason {
            Some(r) => Err(Error::InadmissibleRootSystem {
                spec: self.to_string(),
                reason: r.to_string(),
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for RootSystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

impl FromStr for RootSystemSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut chars = t.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('G') => Family::G,
            _ => return Err(Error::ParseRootSystem(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseRootSystem(s.to_string()))?;
        Self::new(family, rank)
    }
}

/// A positive root in both coordinate systems, with its coroot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    /// Non-negative coordinates in the basis of simple roots.
    pub simple: Vec<i64>,
    /// Fundamental-weight coordinates.
    pub weight: Weight,
    /// Coordinates of `α̌` in the basis of simple coroots; `⟨λ, α̌⟩ = Σ coroot[j]·λⱼ`.
    pub coroot: Vec<i64>,
}

impl PositiveRoot {
    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    spec: RootSystemSpec,
    cartan: Vec<Vec<i64>>,
    cartan_inv: QMatrix,
    /// `dᵢ = (αᵢ, αᵢ)/2`, normalized with `d₀ = 1`.
    symmetrizer: Vec<Q>,
    positive_roots: Vec<PositiveRoot>,
}

fn cartan_matrix(spec: RootSystemSpec) -> Vec<Vec<i64>> {
    let n = spec.rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, ij: i64, ji: i64| {
        c[i][j] = ij;
        c[j][i] = ji;
    };
    match spec.family {
        Family::A => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Family::B => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -1, -2);
        }
        Family::C => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 2, n - 1, -2, -1);
        }
        Family::D => {
            (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(n - 3, n - 1, -1, -1);
        }
        Family::G => link(0, 1, -3, -1),
    }
    c
}

/// Number of positive roots from the classical tables.
pub fn classical_positive_root_count(spec: RootSystemSpec) -> usize {
    let n = spec.rank;
    match spec.family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::G => 6,
    }
}

impl RootSystem {
    pub fn new(spec: RootSystemSpec) -> Result<Self> {
        spec.validate()?;
        let cartan = cartan_matrix(spec);
        let n = spec.rank;

        let cartan_q = QMatrix::from_i64_rows(&cartan);
        let mut aug = QMatrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, cartan_q[(i, j)].clone());
            }
            aug.set(i, n + i, Q::one());
        }
        let (r, _) = aug.rref();
        let mut cartan_inv = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                cartan_inv.set(i, j, r[(i, n + j)].clone());
            }
        }

        // d_i C[i][j] = d_j C[j][i] along the (connected) Dynkin diagram.
        let mut symmetrizer: Vec<Option<Q>> = vec![None; n];
        symmetrizer[0] = Some(Q::one());
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if i != j && cartan[i][j] != 0 && symmetrizer[j].is_none() {
                    let di = symmetrizer[i].clone().unwrap();
                    symmetrizer[j] = Some(di * q(cartan[i][j]) / q(cartan[j][i]));
                    queue.push_back(j);
                }
            }
        }
        let symmetrizer: Vec<Q> = symmetrizer.into_iter().map(Option::unwrap).collect();

        let mut rs = Self {
            spec,
            cartan,
            cartan_inv,
            symmetrizer,
            positive_roots: Vec::new(),
        };
        rs.positive_roots = rs.generate_positive_roots();
        if rs.positive_roots.len() != classical_positive_root_count(spec) {
            return Err(Error::Inconsistent(format!(
                "{spec}: generated {} positive roots, expected {}",
                rs.positive_roots.len(),
                classical_positive_root_count(spec)
            )));
        }
        Ok(rs)
    }

    /// Closure of the simple roots under `β ↦ β + αᵢ` whenever the `αᵢ`-string
    /// through `β` extends upward (`p = q − ⟨β, α̌ᵢ⟩ > 0`).
    fn generate_positive_roots(&self) -> Vec<PositiveRoot> {
        let n = self.rank();
        let unit = |i: usize| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        };
        let mut seen: HashSet<Vec<i64>> = (0..n).map(unit).collect();
        let mut all: Vec<Vec<i64>> = (0..n).map(unit).collect();
        let mut layer = all.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                for i in 0..n {
                    if *beta == unit(i) {
                        continue;
                    }
                    let mut down = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if probe[i] < 0 || !seen.contains(&probe) {
                            break;
                        }
                        down += 1;
                    }
                    let pairing: i64 = (0..n).map(|j| beta[j] * self.cartan[i][j]).sum();
                    if down - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if seen.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            next.sort();
            all.extend(next.iter().cloned());
            layer = next;
        }
        all.into_iter().map(|s| self.make_root(s)).collect()
    }

    fn make_root(&self, simple: Vec<i64>) -> PositiveRoot {
        let n = self.rank();
        let weight = Weight(
            (0..n)
                .map(|j| (0..n).map(|i| simple[i] * self.cartan[j][i]).sum())
                .collect(),
        );
        // (β, β)/2 = ½ Σ kᵢ kⱼ dᵢ C[i][j]
        let mut half_norm = Q::zero();
        for i in 0..n {
            for j in 0..n {
                half_norm += &self.symmetrizer[i] * q(simple[i] * simple[j] * self.cartan[i][j]);
            }
        }
        half_norm /= q(2);
        let coroot = (0..n)
            .map(|j| {
                let c = q(simple[j]) * &self.symmetrizer[j] / &half_norm;
                assert!(c.is_integer(), "coroot coefficient must be integral");
                c.to_integer().to_i64().unwrap()
            })
            .collect();
        PositiveRoot {
            simple,
            weight,
            coroot,
        }
    }

    pub fn spec(&self) -> RootSystemSpec {
        self.spec
    }

    pub fn rank(&self) -> usize {
        self.spec.rank
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[Q] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    pub fn highest_root(&self) -> &PositiveRoot {
        self.positive_roots
            .iter()
            .max_by_key(|r| r.height())
            .expect("at least one positive root")
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                weight: w.clone(),
                expected: self.rank(),
                found: w.rank(),
            });
        }
        Ok(())
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// `αᵢ` in fundamental-weight coordinates (column `i` of the Cartan matrix).
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan.iter().map(|row| row[i]).collect())
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    /// `⟨λ, α̌ᵢ⟩`
    pub fn pairing(&self, lambda: &Weight, i: usize) -> Result<i64> {
        self.check_weight(lambda)?;
        self.check_index(i)?;
        Ok(lambda.0[i])
    }

    /// `⟨λ, α̌⟩` for a positive root `α`.
    pub fn coroot_pairing(&self, lambda: &Weight, root: &PositiveRoot) -> i64 {
        root.coroot.iter().zip(&lambda.0).map(|(a, b)| a * b).sum()
    }

    /// Simple-root coordinates of a weight (rational in general).
    pub fn to_simple_coords(&self, w: &Weight) -> Vec<Q> {
        let v: Vec<Q> = w.0.iter().map(|&c| q(c)).collect();
        self.cartan_inv.mul_vec(&v)
    }

    /// The invariant form, normalized by `(αᵢ, αᵢ) = 2dᵢ`.
    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Q {
        let x = self.to_simple_coords(a);
        x.iter()
            .zip(&self.symmetrizer)
            .zip(&b.0)
            .fold(Q::zero(), |acc, ((xi, di), bi)| acc + xi * di * q(*bi))
    }

    /// `λ ⪯ μ` iff `μ − λ ∈ NΔ`; returns the simple-root certificate when it holds.
    pub fn dominance_leq(&self, lambda: &Weight, mu: &Weight) -> Option<Vec<u64>> {
        let diff = mu - lambda;
        self.to_simple_coords(&diff)
            .into_iter()
            .map(|x| {
                (x.is_integer() && !x.is_negative()).then(|| x.to_integer().to_u64().unwrap())
            })
            .collect()
    }

    /// Height of `λ − γ` when `γ ⪯ λ`.
    pub fn depth_below(&self, lambda: &Weight, gamma: &Weight) -> Option<u64> {
        self.dominance_leq(gamma, lambda).map(|x| x.iter().sum())
    }

    /// `sᵢλ = λ − ⟨λ, α̌ᵢ⟩αᵢ`
    pub fn simple_reflection(&self, i: usize, lambda: &Weight) -> Weight {
        let c = lambda.0[i];
        Weight(
            lambda
                .0
                .iter()
                .zip(&self.cartan)
                .map(|(l, row)| l - c * row[i])
                .collect(),
        )
    }

    /// Applies `s_{w[0]}` first, then `s_{w[1]}`, and so on.
    pub fn apply_word(&self, word: &[usize], lambda: &Weight) -> Weight {
        word.iter()
            .fold(lambda.clone(), |acc, &i| self.simple_reflection(i, &acc))
    }

    pub fn weyl_orbit(&self, lambda: &Weight) -> BTreeSet<Weight> {
        let mut orbit = BTreeSet::from([lambda.clone()]);
        let mut queue = VecDeque::from([lambda.clone()]);
        while let Some(w) = queue.pop_front() {
            for i in 0..self.rank() {
                let r = self.simple_reflection(i, &w);
                if orbit.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        orbit
    }

    /// Reflects away negative coordinates until dominant. The word lists the
    /// reflections in the order applied.
    pub fn dominant_representative(&self, lambda: &Weight) -> (Weight, Vec<usize>) {
        let mut w = lambda.clone();
        let mut word = Vec::new();
        while let Some(i) = w.0.iter().position(|&c| c < 0) {
            w = self.simple_reflection(i, &w);
            word.push(i);
        }
        (w, word)
    }

    /// `−w₀λ`, the highest weight of `V(λ)*`.
    pub fn minus_w0(&self, lambda: &Weight) -> Weight {
        self.dominant_representative(&-lambda).0
    }

    /// One word per Weyl group element, found as the orbit of the regular
    /// weight ρ. Words are listed in BFS order, so the identity comes first and
    /// the longest element (sending ρ to −ρ) last.
    pub fn weyl_group(&self, cap: usize) -> Result<Vec<Vec<usize>>> {
        let rho = self.rho();
        let mut seen = HashSet::from([rho.clone()]);
        let mut queue = VecDeque::from([(rho, Vec::new())]);
        let mut words = Vec::new();
        while let Some((w, word)) = queue.pop_front() {
            words.push(word.clone());
            if words.len() > cap {
                return Err(Error::WeylGroupTooLarge { cap });
            }
            for i in 0..self.rank() {
                let r = self.simple_reflection(i, &w);
                if seen.insert(r.clone()) {
                    let mut next = word.clone();
                    next.push(i);
                    queue.push_back((r, next));
                }
            }
        }
        Ok(words)
    }

    /// Dominant weights `μ ⪯ λ`.
    pub fn dominant_weights_below(&self, lambda: &Weight) -> BTreeSet<Weight> {
        let mut found = BTreeSet::new();
        let mut seen = HashSet::from([lambda.clone()]);
        let mut queue = VecDeque::from([lambda.clone()]);
        while let Some(w) = queue.pop_front() {
            found.insert(w.clone());
            for root in &self.positive_roots {
                let next = &w - &root.weight;
                if next.is_dominant() && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        found
    }

    /// Product formula `Π ⟨λ+ρ, α̌⟩ / ⟨ρ, α̌⟩` over positive roots.
    pub fn weyl_dim(&self, lambda: &Weight) -> Result<BigUint> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.clone()));
        }
        let rho = self.rho();
        let shifted = lambda + &rho;
        let mut prod = BigRational::one();
        for root in &self.positive_roots {
            prod *= BigRational::new(
                BigInt::from(self.coroot_pairing(&shifted, root)),
                BigInt::from(self.coroot_pairing(&rho, root)),
            );
        }
        if !prod.is_integer() {
            return Err(Error::Inconsistent(format!(
                "Weyl dimension of {lambda} is not integral"
            )));
        }
        Ok(prod.to_integer().to_biguint().expect("positive"))
    }
}
