#![allow(clippy::needless_range_loop)]

//! Exact computations with Chevalley generators of simple Lie algebras:
//! irreducible modules, Hom and tensor decompositions, and rank profiles of the
//! equivariant matrix spaces `V(ν) → Hom(V(μ), V(λ))`.

pub mod cartan;
pub mod error;
pub mod irrep;
pub mod linalg;
pub mod ranklab;
pub mod tensor;

pub use cartan::{Family, PositiveRoot, RootSystem, RootSystemSpec, Weight};
pub use error::{Error, Result};
pub use irrep::{IrrepCache, WeightModule};
pub use linalg::{QMatrix, SparseMatrix, Q};
pub use ranklab::{Lab, LabConfig, LinearMatrixSpace, RankVerdict, VerdictKind};
pub use tensor::{GradedModule, HomModule, PrimitiveBasis, TensorModule};
