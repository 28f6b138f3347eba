//! Restricted enveloping algebras of Lie superalgebras in odd characteristic and their
//! finite-dimensional supermodules: radicals, simples, projective covers, minimal
//! resolutions, cohomology and support varieties.

pub mod linalg;
pub mod liesuper;
pub mod enveloping;
pub mod repcat;
pub mod cohomology;
pub mod varieties;
