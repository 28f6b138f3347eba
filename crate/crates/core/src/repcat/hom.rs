use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::module::{ModuleMap, Supermodule};
use super::radical::{radical_of, MatrixAlgebra};
use super::RepError;
use crate::linalg::{Matrix, Subspace};
use crate::liesuper::Parity;

const ISO_ATTEMPTS: usize = 30;
const ISO_SEED: u64 = 0x150_3017;

/// Basis of the homogeneous module maps `M → N` of the given parity, as matrices.
///
/// Unknowns are the entries of the map allowed by the grading; each generator contributes
/// the equations `X ρ_M(g) = (-1)^{|X||g|} ρ_N(g) X`.
pub fn hom_space(m: &Supermodule, n: &Supermodule, parity: Parity) -> Vec<Matrix> {
    let f = m.field();
    let alg = m.algebra();
    let mut slots: Vec<(usize, usize)> = Vec::new();
    let mut slot_of = vec![usize::MAX; n.dim() * m.dim()];
    for i in 0..n.dim() {
        for j in 0..m.dim() {
            if n.parity(i) == m.parity(j).plus(parity) {
                slot_of[i * m.dim() + j] = slots.len();
                slots.push((i, j));
            }
        }
    }
    let u = slots.len();
    if u == 0 {
        return Vec::new();
    }
    let mut rows = Subspace::zero(f, u);
    for (k, &g) in alg.generators().iter().enumerate() {
        let (rm, rn) = (m.gen_action(k), n.gen_action(k));
        let neg = parity.koszul(alg.parity(g));
        for i in 0..n.dim() {
            for j in 0..m.dim() {
                // (X ρ_M)[i][j] - s (ρ_N X)[i][j]
                let mut eq = vec![0u32; u];
                for t in 0..m.dim() {
                    let s = slot_of[i * m.dim() + t];
                    let c = rm.get(t, j);
                    if s != usize::MAX && c != 0 {
                        eq[s] = f.add(eq[s], c);
                    }
                }
                for t in 0..n.dim() {
                    let s = slot_of[t * m.dim() + j];
                    let c = rn.get(i, t);
                    if s != usize::MAX && c != 0 {
                        eq[s] = if neg { f.add(eq[s], c) } else { f.sub(eq[s], c) };
                    }
                }
                if eq.iter().any(|&x| x != 0) {
                    rows.insert(&eq);
                }
            }
        }
    }
    null_space(&rows)
        .into_iter()
        .map(|sol| {
            let mut x = Matrix::zeros(f, n.dim(), m.dim());
            for (&(i, j), &c) in slots.iter().zip(&sol) {
                x.set(i, j, c);
            }
            x
        })
        .collect()
}

/// Vectors orthogonal to every row of an echelon row space.
fn null_space(rows: &Subspace) -> Vec<Vec<u32>> {
    let f = rows.field();
    let n = rows.ambient();
    let free = rows.standard_complement();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u32; n];
            v[fc] = 1;
            for (row, &pc) in rows.basis().iter().zip(rows.pivots()) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

/// An even isomorphism `M → N` if one exists, found among seeded random combinations of
/// the even Hom basis.
pub fn isomorphism(m: &Supermodule, n: &Supermodule) -> Option<ModuleMap> {
    if m.dim_even() != n.dim_even() || m.dim_odd() != n.dim_odd() {
        return None;
    }
    if m.dim() == 0 {
        return ModuleMap::new(m, n, Matrix::zeros(m.field(), 0, 0), Parity::Even).ok();
    }
    let homs = hom_space(m, n, Parity::Even);
    if homs.is_empty() {
        return None;
    }
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(ISO_SEED);
    let candidates = homs.iter().cloned().chain((0..ISO_ATTEMPTS).map(|_| {
        let mut x = Matrix::zeros(f, n.dim(), m.dim());
        for h in &homs {
            x.add_scaled(rng.gen_range(0..f.order()), h);
        }
        x
    }));
    for x in candidates {
        if x.rank() == m.dim() {
            return ModuleMap::new(m, n, x, Parity::Even).ok();
        }
    }
    None
}

pub fn are_isomorphic(m: &Supermodule, n: &Supermodule) -> bool {
    isomorphism(m, n).is_some()
}

/// Even endomorphisms as a matrix algebra.
pub fn endomorphism_algebra(m: &Supermodule) -> MatrixAlgebra {
    MatrixAlgebra::new(m.field(), hom_space(m, m, Parity::Even))
}

/// `dim End_0(M) - dim rad End_0(M)`; equal to 1 exactly when `M` is indecomposable with a
/// split endomorphism ring.
pub fn endomorphism_top_dim(m: &Supermodule) -> usize {
    if m.dim() == 0 {
        return 0;
    }
    let e = endomorphism_algebra(m);
    let total = super::radical::AlgebraOracle::dim(&e);
    total - radical_of(&e).dim()
}

pub fn is_indecomposable(m: &Supermodule) -> bool {
    endomorphism_top_dim(m) == 1
}

/// Evaluation map check used by the tests and the property suite.
pub fn evaluation_is_equivariant(m: &Supermodule) -> Result<bool, RepError> {
    Ok(super::module::evaluation_map(m)?.is_equivariant())
}
