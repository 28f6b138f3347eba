//! Supermodules over a finite-dimensional superalgebra: tensor products and duals through
//! the Hopf structure, the Jacobson radical, simple modules, projective covers and syzygies.

mod category;
mod hom;
mod module;
mod radical;

pub use category::{ProjectiveCover, RepCategory, SimpleData};
pub use hom::{
    are_isomorphic, endomorphism_algebra, endomorphism_top_dim, evaluation_is_equivariant, hom_space,
    is_indecomposable, isomorphism,
};
pub use module::{
    direct_sum, dual, evaluation_map, regular_module, tensor, trivial_module, zero_module, ModuleMap,
    Supermodule,
};
pub(crate) use module::graded_kernel;
pub use radical::{is_nilpotent_ideal, radical, radical_of, AlgebraOracle, MatrixAlgebra};

use thiserror::Error;

use crate::enveloping::FiniteDimSuperalgebra;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("module data lives over a different field than the algebra")]
    FieldMismatch,
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error("grading violated: {0}")]
    Parity(String),
    #[error("subspace is not invariant under the action")]
    NotInvariant,
    #[error("operation needs the Hopf structure of an enveloping algebra")]
    NeedsHopf,
    #[error("module axioms fail: {0}")]
    AxiomFailure(String),
    #[error("the semisimple quotient does not split; enlarge the field to degree {degree}")]
    EnlargeField { degree: u32 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Complete list of simple modules up to isomorphism and parity shift.
pub fn simples(alg: &FiniteDimSuperalgebra) -> Result<Vec<Supermodule>, RepError> {
    Ok(RepCategory::new(alg)?
        .simples()
        .iter()
        .map(|s| s.module.clone())
        .collect())
}

/// Projective cover computed in a fresh category for the module's algebra.
pub fn projective_cover(m: &Supermodule) -> Result<ProjectiveCover, RepError> {
    RepCategory::new(m.algebra())?.projective_cover(m)
}

pub fn is_projective(m: &Supermodule) -> Result<bool, RepError> {
    RepCategory::new(m.algebra())?.is_projective(m)
}

#[cfg(test)]
mod tests;
