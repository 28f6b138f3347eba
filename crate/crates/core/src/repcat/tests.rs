use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::enveloping::{build_uea, hopf_structure, FiniteDimSuperalgebra};
use crate::linalg::{Field, Matrix, Subspace};
use crate::liesuper::{catalog, LieSuperAlgebraSpec, Parity};

fn uea(name: &str, p: u32) -> FiniteDimSuperalgebra {
    build_uea(&catalog(name, p).unwrap()).unwrap()
}

/// Quotient of the regular module by the submodule generated by a few random homogeneous
/// vectors.
fn random_module(alg: &FiniteDimSuperalgebra, rng: &mut ChaCha8Rng, relations: usize) -> Supermodule {
    let reg = regular_module(alg);
    let f = alg.field();
    let vs: Vec<Vec<u32>> = (0..relations)
        .map(|_| {
            let par = if rng.gen_bool(0.5) { Parity::Even } else { Parity::Odd };
            (0..alg.dim())
                .map(|i| {
                    if alg.parity(i) == par && i != alg.unit() && rng.gen_bool(0.4) {
                        rng.gen_range(0..f.order())
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let sub = reg.generated_submodule(&vs);
    reg.quotient(&sub).unwrap().0
}

#[test]
fn regular_module_basics() {
    let a = uea("abelian(0|1)", 3);
    let reg = regular_module(&a);
    assert_eq!((reg.dim_even(), reg.dim_odd()), (1, 1));
    assert_eq!(*reg.action(a.unit()), Matrix::identity(a.field(), 2));
    reg.check_all_basis_pairs().unwrap();
    let g = uea("gl(1|1)", 3);
    let rg = regular_module(&g);
    rg.check_axioms().unwrap();
    rg.check_all_basis_pairs().unwrap();
}

#[test]
fn presentation_check_catches_bad_action() {
    let a = uea("abelian(0|2)", 3);
    let f = a.field();
    // y1 y2 + y2 y1 acts as the identity instead of zero
    let mut y1 = Matrix::zeros(f, 2, 2);
    y1.set(1, 0, 1);
    let y2 = y1.transpose();
    let m = Supermodule::new(&a, vec![Parity::Even, Parity::Odd], vec![y1, y2]).unwrap();
    assert!(m.check_axioms().is_err());
}

#[test]
fn tensor_with_trivial_is_identity() {
    let a = uea("gl(1|1)", 3);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let m = random_module(&a, &mut rng, 2);
    let k = trivial_module(&a).unwrap();
    let mk = tensor(&m, &k).unwrap();
    let km = tensor(&k, &m).unwrap();
    assert_eq!(mk.gen_actions(), m.gen_actions());
    assert_eq!(km.gen_actions(), m.gen_actions());
}

#[test]
fn tensor_grading_and_axioms() {
    let a = uea("abelian(0|2)", 3);
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..5 {
        let m = random_module(&a, &mut rng, 1);
        let n = random_module(&a, &mut rng, 1);
        let t = tensor(&m, &n).unwrap();
        assert_eq!(t.dim_even(), m.dim_even() * n.dim_even() + m.dim_odd() * n.dim_odd());
        t.check_all_basis_pairs().unwrap();
    }
}

#[test]
fn tensor_agrees_with_comultiplication() {
    // every basis element acts on M ⊗ N by Σ (-1)^{|b2||m|} ρ(b1) ⊗ ρ(b2)
    let a = uea("odd_heisenberg", 3);
    let h = hopf_structure(&a).unwrap();
    let f = a.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let m = random_module(&a, &mut rng, 1);
    let n = regular_module(&a);
    let t = tensor(&m, &n).unwrap();
    for b in 0..a.dim() {
        let mut expect = Matrix::zeros(&f, t.dim(), t.dim());
        for (&(b1, b2), &c) in h.comultiply_basis(b) {
            let mut sign = Matrix::identity(&f, m.dim());
            for i in 0..m.dim() {
                if a.parity(b2 as usize).koszul(m.parity(i)) {
                    sign.set(i, i, f.neg(1));
                }
            }
            let term = m.action(b1 as usize).mul(&sign).kronecker(n.action(b2 as usize));
            expect.add_scaled(c, &term);
        }
        assert_eq!(t.action(b), &expect, "basis element {}", a.label(b));
    }
}

#[test]
fn tensor_is_associative() {
    let a = uea("abelian(1|1)", 3);
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (m, n, l) = (
        random_module(&a, &mut rng, 1),
        random_module(&a, &mut rng, 2),
        random_module(&a, &mut rng, 1),
    );
    let left = tensor(&tensor(&m, &n).unwrap(), &l).unwrap();
    let right = tensor(&m, &tensor(&n, &l).unwrap()).unwrap();
    assert_eq!(left.parities(), right.parities());
    assert_eq!(left.gen_actions(), right.gen_actions());
}

#[test]
fn dual_of_one_dimensional_module() {
    // E11 acts by a, E22 by -a, odd elements by 0; the dual negates the weights
    let a = uea("gl(1|1)", 3);
    let f = a.field().clone();
    let w = 1u32;
    let scalar = |v: u32| Matrix::from_raw(&f, 1, 1, vec![v]);
    let m = Supermodule::new(
        &a,
        vec![Parity::Even],
        vec![scalar(w), scalar(f.neg(w)), scalar(0), scalar(0)],
    )
    .unwrap();
    m.check_axioms().unwrap();
    let d = dual(&m).unwrap();
    assert_eq!(d.gen_action(0).get(0, 0), f.neg(w));
    assert_eq!(d.gen_action(1).get(0, 0), w);
    assert!(evaluation_is_equivariant(&m).unwrap());
}

#[test]
fn dual_properties() {
    let a = uea("gl(1|1)", 3);
    let k = trivial_module(&a).unwrap();
    assert!(are_isomorphic(&dual(&k).unwrap(), &k));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..4 {
        let m = random_module(&a, &mut rng, 2);
        let d = dual(&m).unwrap();
        d.check_axioms().unwrap();
        assert!(evaluation_is_equivariant(&m).unwrap());
        assert!(are_isomorphic(&dual(&d).unwrap(), &m));
        let n = random_module(&a, &mut rng, 3);
        let ds = dual(&direct_sum(&m, &n).unwrap()).unwrap();
        assert_eq!(ds.dim(), m.dim() + n.dim());
        assert!(are_isomorphic(&ds, &direct_sum(&d, &dual(&n).unwrap()).unwrap()));
    }
}

#[test]
fn simples_of_local_algebras() {
    for name in ["abelian(1|0)", "abelian(0|2)", "odd_heisenberg"] {
        let a = uea(name, 3);
        let cat = RepCategory::new(&a).unwrap();
        assert_eq!(cat.simples().len(), 1, "{name}");
        assert_eq!(cat.simples()[0].module.dim(), 1);
        assert_eq!(cat.trivial_index(), Some(0));
        // local: radical is the augmentation ideal
        assert_eq!(cat.radical().dim(), a.dim() - 1);
    }
}

#[test]
fn wedderburn_identity_gl11() {
    for p in [3u32, 5] {
        let a = uea("gl(1|1)", p);
        let cat = RepCategory::new(&a).unwrap();
        let sum: usize = cat.simples().iter().map(|s| s.module.dim().pow(2)).sum();
        assert_eq!(sum, a.dim() - cat.radical().dim(), "p={p}");
        assert_eq!(cat.simples().len(), (p * p) as usize - p as usize + p as usize);
        for s in cat.simples() {
            s.module.check_axioms().unwrap();
        }
    }
}

#[test]
fn semisimple_quotient_has_no_radical() {
    // A acts on the sum of its simples through A / rad, faithfully
    let a = uea("gl(1|1)", 3);
    let cat = RepCategory::new(&a).unwrap();
    let mut sum = zero_module(&a);
    for s in cat.simples() {
        sum = direct_sum(&sum, &s.module).unwrap();
    }
    let f = a.field();
    let mut span = Subspace::zero(f, sum.dim() * sum.dim());
    let mut mats = Vec::new();
    for b in 0..a.dim() {
        let m = sum.action(b).clone();
        if span.insert(m.data()) {
            mats.push(m);
        }
    }
    assert_eq!(mats.len(), a.dim() - cat.radical().dim());
    let image = MatrixAlgebra::new(f, mats);
    assert!(radical_of(&image).is_zero());
}

#[test]
fn projective_covers() {
    for (name, p, expect) in [("gl(1|1)", 3u32, 4usize), ("gl(1|1)", 5, 4), ("abelian(1|0)", 3, 3)] {
        let a = uea(name, p);
        let cat = RepCategory::new(&a).unwrap();
        let k = trivial_module(&a).unwrap();
        let cover = cat.projective_cover(&k).unwrap();
        assert_eq!(cover.module.dim(), expect, "{name} p={p}");
        assert!(cover.map.is_equivariant());
        assert_eq!(cover.tops, vec![(cat.trivial_index().unwrap(), Parity::Even)]);
    }
}

#[test]
fn cover_of_projective_is_itself_and_minimal() {
    let a = uea("gl(1|1)", 3);
    let cat = RepCategory::new(&a).unwrap();
    for s in cat.simples() {
        let cover = cat.projective_cover(&s.projective).unwrap();
        assert_eq!(cover.module.dim(), s.projective.dim());
        assert!(cover.map.matrix.inverse().is_some());
        assert!(is_indecomposable(&s.projective));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..4 {
        let m = random_module(&a, &mut rng, 2);
        let cover = cat.projective_cover(&m).unwrap();
        assert!(cover.map.is_equivariant());
        let rad_p = Subspace::span(a.field(), cover.module.dim(), &cat.module_radical(&cover.module));
        for v in cover.map.kernel_basis() {
            assert!(rad_p.contains(&v));
        }
    }
}

#[test]
fn projectivity() {
    let a = uea("abelian(0|1)", 3);
    let cat = RepCategory::new(&a).unwrap();
    assert!(cat.is_projective(&regular_module(&a)).unwrap());
    assert!(!cat.is_projective(&trivial_module(&a).unwrap()).unwrap());
    assert!(cat.is_projective(&zero_module(&a)).unwrap());
    let (omega, _, _) = cat.syzygy(&trivial_module(&a).unwrap()).unwrap();
    assert_eq!((omega.dim_even(), omega.dim_odd()), (0, 1));
}

#[test]
fn indecomposability() {
    let a = uea("abelian(0|2)", 3);
    let k = trivial_module(&a).unwrap();
    assert!(is_indecomposable(&k));
    assert!(!is_indecomposable(&direct_sum(&k, &k).unwrap()));
    assert!(is_indecomposable(&regular_module(&a)));
}

fn twisted_torus(p: u32) -> LieSuperAlgebraSpec {
    let mut s = LieSuperAlgebraSpec::new(p, vec!["x1".into(), "x2".into()], vec![]).unwrap();
    s.set_pmap(0, vec![0, 1]);
    s.set_pmap(1, vec![1, 0]);
    s
}

#[test]
fn non_split_quotient_needs_extension() {
    let a = build_uea(&twisted_torus(3)).unwrap();
    assert_eq!(RepCategory::new(&a).unwrap_err(), RepError::EnlargeField { degree: 2 });
    let f9 = Field::with_degree(3, 2).unwrap();
    let big = a.extend_scalars(&f9);
    let cat = RepCategory::new(&big).unwrap();
    assert_eq!(cat.simples().len(), 9);
    assert!(cat.radical().is_zero());
    assert!(cat.simples().iter().all(|s| s.module.dim() == 1));
}

mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn constructions_respect_dimensions_and_projectivity(
            which in 0usize..3,
            seed in any::<u64>(),
            relations in 1usize..4,
        ) {
            let alg = uea(["abelian(0|2)", "abelian(1|1)", "odd_heisenberg"][which], 3);
            let cat = RepCategory::new(&alg).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m = random_module(&alg, &mut rng, relations);
            let n = random_module(&alg, &mut rng, relations);
            prop_assert!(m.check_axioms().is_ok());
            let t = tensor(&m, &n).unwrap();
            prop_assert_eq!(t.dim(), m.dim() * n.dim());
            prop_assert_eq!(t.dim_even(), m.dim_even() * n.dim_even() + m.dim_odd() * n.dim_odd());
            let s = m.parity_shift();
            prop_assert_eq!((s.dim_even(), s.dim_odd()), (m.dim_odd(), m.dim_even()));
            let dd = dual(&dual(&m).unwrap()).unwrap();
            prop_assert_eq!((dd.dim_even(), dd.dim_odd()), (m.dim_even(), m.dim_odd()));
            let pk = cat.simples()[cat.trivial_index().unwrap()].projective.clone();
            let proj = cat.is_projective(&m).unwrap();
            prop_assert_eq!(cat.is_projective(&direct_sum(&m, &pk).unwrap()).unwrap(), proj);
            prop_assert_eq!(cat.is_projective(&s).unwrap(), proj);
            // the cover surjects and is no larger than needed
            let cover = cat.projective_cover(&m).unwrap();
            prop_assert!(cover.map.is_surjective());
            prop_assert_eq!(proj, cover.module.dim() == m.dim());
        }
    }
}
