//! Restricted enveloping algebras `u(g)`: PBW basis, multiplication by straightening, the
//! braided Hopf structure, and filtrations with their associated graded algebras.

mod algebra;
mod filtration;
mod hopf;
mod pbw;

pub use algebra::{FiniteDimSuperalgebra, PBWMonomial, PbwData, SparseVec};
pub use filtration::{
    augmentation_filtration, gr_algebra, nilpotency_bound, pbw_filtration, pbw_series, Filtration,
    FiltrationKind, GradedAlgebra,
};
pub use hopf::{hopf_structure, tensor_parity, HopfReport, HopfStructure, Tensor2};
pub use pbw::{build_uea, normal_form, MAX_UEA_DIM};

use thiserror::Error;

use crate::liesuper::AxiomReport;

#[derive(Debug, Error, Clone)]
pub enum EnvelopingError {
    #[error("the Lie superalgebra fails its axioms:\n{0}")]
    AxiomsFailed(Box<AxiomReport>),
    #[error("generator index {0} is out of range")]
    BadGenerator(usize),
    #[error("u(g) would have dimension {dim}, above the supported limit {limit}")]
    TooLarge { dim: usize, limit: usize },
    #[error("algebra carries no PBW presentation")]
    NoPbw,
    #[error("augmentation ideal is not nilpotent: I^{power} = I^{next} has dimension {stable_dim}", next = power + 1)]
    NotNilpotent { stable_dim: usize, power: usize },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::liesuper::catalog;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn products_are_associative_and_graded(
            idx in 0usize..5,
            p in prop::sample::select(vec![3u32, 5]),
            a in proptest::collection::vec(0u32..3, 36),
            b in proptest::collection::vec(0u32..3, 36),
            c in proptest::collection::vec(0u32..3, 36),
        ) {
            let name = ["gl(1|1)", "abelian(1|1)", "abelian(0|2)", "odd_heisenberg", "abelian(1|0)"][idx];
            let alg = build_uea(&catalog(name, p).unwrap()).unwrap();
            let d = alg.dim();
            let take = |v: &[u32]| -> Vec<u32> { (0..d).map(|i| v[i % v.len()]).collect() };
            let (a, b, c) = (take(&a), take(&b), take(&c));
            prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
            prop_assert!(alg.parity_is_multiplicative());
            prop_assert!(alg.unit_laws_hold());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liesuper::catalog;

    #[test]
    fn dimension_formula_for_catalog() {
        for p in [3u32, 5, 7] {
            for name in ["gl(1|1)", "abelian(1|0)", "abelian(0|1)", "abelian(0|2)", "abelian(1|1)", "odd_heisenberg"] {
                let g = catalog(name, p).unwrap();
                let a = build_uea(&g).unwrap();
                let expect = (p as usize).pow(g.even_dim() as u32) << g.odd_dim();
                assert_eq!(a.dim(), expect, "{name} p={p}");
            }
        }
    }

    #[test]
    fn associativity_exhaustive_and_sampled() {
        let a = build_uea(&catalog("gl(1|1)", 5).unwrap()).unwrap();
        assert!(a.associativity_witness(120, 0, 0).is_none());
        let b = build_uea(&catalog("gl(1|1)", 7).unwrap()).unwrap();
        assert_eq!(b.dim(), 196);
        assert!(b.associativity_witness(120, 10_000, 3).is_none());
    }
}
