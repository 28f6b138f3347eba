//! Exact linear algebra over `F_p` and `F_{p^e}`.

mod coords;
mod field;
mod matrix;
mod poly;
mod sparse;
mod subspace;

pub use coords::CoordinateBasis;
pub use field::{is_irreducible, is_prime, Field, Scalar, MAX_EXTENSION_DEGREE};
pub use matrix::{Echelon, Matrix};
pub use poly::Poly;
pub use sparse::{SparseEchelon, SparseRow};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("characteristic {0} is not an odd prime (p > 2 is required)")]
    BadCharacteristic(u32),
    #[error("modulus {0:?} is not a monic polynomial of supported degree")]
    BadModulus(Vec<u32>),
    #[error("modulus {0:?} is reducible")]
    Reducible(Vec<u32>),
    #[error("value {0} is not an element of the field")]
    OutOfRange(u32),
    #[error("entries come from different fields")]
    FieldMismatch,
    #[error("expected {} entries for a {}x{} matrix, found {found}", expected.0 * expected.1, expected.0, expected.1)]
    Shape { expected: (usize, usize), found: usize },
    #[error("cannot infer a field from an empty entry list")]
    EmptyScalarList,
}
