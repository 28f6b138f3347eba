use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::algebra::{FiniteDimSuperalgebra, SparseVec};
use super::EnvelopingError;
use crate::liesuper::Parity;

/// Element of `A ⊗ A` as a map from basis pairs to coefficients.
pub type Tensor2 = BTreeMap<(u32, u32), u32>;

/// Comultiplication, counit and antipode of `u(g)` on the PBW basis.
///
/// The tensor square has basis `b_i ⊗ b_j` at index `i * dim + j`.
#[derive(Clone, Debug)]
pub struct HopfStructure {
    dim: usize,
    delta: Vec<Tensor2>,
    counit: Vec<u32>,
    antipode: Vec<SparseVec>,
}

/// Outcome of each Hopf axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub coassociative: bool,
    pub counit: bool,
    pub antipode: bool,
    pub braided_homomorphism: bool,
    pub super_cocommutative: bool,
    /// Number of basis pairs tested for the homomorphism law.
    pub pairs_tested: usize,
}

impl HopfReport {
    pub fn all_pass(&self) -> bool {
        self.coassociative
            && self.counit
            && self.antipode
            && self.braided_homomorphism
            && self.super_cocommutative
    }
}

fn add_t(acc: &mut Tensor2, key: (u32, u32), c: u32, alg: &FiniteDimSuperalgebra) {
    if c == 0 {
        return;
    }
    let f = alg.field();
    let e = acc.entry(key).or_insert(0);
    *e = f.add(*e, c);
    if *e == 0 {
        acc.remove(&key);
    }
}

/// Builds Δ, ε and S from the PBW presentation: Δ and S are extended from
/// `Δ(x) = 1⊗x + x⊗1` and `S(x) = -x` on generators.
pub fn hopf_structure(alg: &FiniteDimSuperalgebra) -> Result<HopfStructure, EnvelopingError> {
    let pbw = alg.pbw().ok_or(EnvelopingError::NoPbw)?;
    let f = alg.field().clone();
    let d = alg.dim();
    let unit = alg.unit() as u32;
    let mut delta: Vec<Tensor2> = vec![Tensor2::new(); d];
    let mut antipode: Vec<SparseVec> = vec![Vec::new(); d];
    let gens = &pbw.generator_index;
    for u in 0..d {
        let mono = &pbw.monomials[u];
        if mono.is_unit() {
            delta[u].insert((unit, unit), 1);
            antipode[u] = vec![(unit, 1)];
            continue;
        }
        let gpos = mono.exponents().position(|a| a != 0).expect("non-unit monomial");
        let g = gens[gpos];
        let mut rest_mono = mono.clone();
        let m = pbw.spec.even_dim();
        if gpos < m {
            rest_mono.even[gpos] -= 1;
        } else {
            rest_mono.odd[gpos - m] -= 1;
        }
        let rest = pbw.index_of(&rest_mono).expect("monomial present");
        let pg = alg.parity(g);
        // Δ(g u') = (1⊗g + g⊗1) Δ(u'), (1⊗g)(a⊗b) = (-1)^{|g||a|} a⊗gb
        let mut acc = Tensor2::new();
        for (&(a, b), &c) in &delta[rest] {
            let sign_neg = pg.koszul(alg.parity(a as usize));
            let cs = if sign_neg { f.neg(c) } else { c };
            for &(k, v) in alg.mul_basis(g, b as usize) {
                add_t(&mut acc, (a, k), f.mul(cs, v), alg);
            }
            for &(k, v) in alg.mul_basis(g, a as usize) {
                add_t(&mut acc, (k, b), f.mul(c, v), alg);
            }
        }
        delta[u] = acc;
        // S(g u') = (-1)^{|g||u'|} S(u') S(g), S(g) = -g
        let neg = !pg.koszul(alg.parity(rest));
        let coef = if neg { f.neg(1) } else { 1 };
        let mut out = vec![0u32; d];
        for &(k, c) in &antipode[rest] {
            for &(t, v) in alg.mul_basis(k as usize, g) {
                out[t as usize] = f.add(out[t as usize], f.mul(f.mul(coef, c), v));
            }
        }
        antipode[u] = out
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (i as u32, c))
            .collect();
    }
    Ok(HopfStructure {
        dim: d,
        delta,
        counit: alg.unit_vector(),
        antipode,
    })
}

impl HopfStructure {
    pub fn comultiply_basis(&self, i: usize) -> &Tensor2 {
        &self.delta[i]
    }

    pub fn counit(&self) -> &[u32] {
        &self.counit
    }

    pub fn antipode_basis(&self, i: usize) -> &[(u32, u32)] {
        &self.antipode[i]
    }

    /// Δ as a `dim² x dim` matrix in sparse column form: column `i` lists
    /// `(i_1 * dim + i_2, coefficient)`.
    pub fn comultiplication_columns(&self) -> Vec<Vec<(usize, u32)>> {
        self.delta
            .iter()
            .map(|t| {
                t.iter()
                    .map(|(&(a, b), &c)| (a as usize * self.dim + b as usize, c))
                    .collect()
            })
            .collect()
    }

    pub fn antipode_matrix(&self, alg: &FiniteDimSuperalgebra) -> crate::linalg::Matrix {
        let mut m = crate::linalg::Matrix::zeros(alg.field(), self.dim, self.dim);
        for (j, col) in self.antipode.iter().enumerate() {
            for &(i, c) in col {
                m.set(i as usize, j, c);
            }
        }
        m
    }

    fn comultiply(&self, alg: &FiniteDimSuperalgebra, v: &[u32]) -> Tensor2 {
        let f = alg.field();
        let mut acc = Tensor2::new();
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                for (&k, &x) in &self.delta[i] {
                    add_t(&mut acc, k, f.mul(c, x), alg);
                }
            }
        }
        acc
    }

    /// Product in the braided square: `(a1⊗a2)(b1⊗b2) = (-1)^{|a2||b1|} a1 b1 ⊗ a2 b2`.
    pub fn braided_product(&self, alg: &FiniteDimSuperalgebra, x: &Tensor2, y: &Tensor2) -> Tensor2 {
        let f = alg.field();
        let mut acc = Tensor2::new();
        for (&(a1, a2), &c) in x {
            for (&(b1, b2), &e) in y {
                let neg = alg.parity(a2 as usize).koszul(alg.parity(b1 as usize));
                let mut coef = f.mul(c, e);
                if neg {
                    coef = f.neg(coef);
                }
                for &(k1, v1) in alg.mul_basis(a1 as usize, b1 as usize) {
                    for &(k2, v2) in alg.mul_basis(a2 as usize, b2 as usize) {
                        add_t(&mut acc, (k1, k2), f.mul(coef, f.mul(v1, v2)), alg);
                    }
                }
            }
        }
        acc
    }

    /// Checks every Hopf axiom; the homomorphism law uses all basis pairs when there are at
    /// most `pair_samples` of them and seeded random pairs otherwise.
    pub fn check(&self, alg: &FiniteDimSuperalgebra, pair_samples: usize, seed: u64) -> HopfReport {
        let f = alg.field();
        let d = self.dim;

        let coassociative = (0..d).all(|i| {
            let mut left: BTreeMap<(u32, u32, u32), u32> = BTreeMap::new();
            let mut right: BTreeMap<(u32, u32, u32), u32> = BTreeMap::new();
            for (&(a, b), &c) in &self.delta[i] {
                for (&(a1, a2), &x) in &self.delta[a as usize] {
                    let e = left.entry((a1, a2, b)).or_insert(0);
                    *e = f.add(*e, f.mul(c, x));
                }
                for (&(b1, b2), &x) in &self.delta[b as usize] {
                    let e = right.entry((a, b1, b2)).or_insert(0);
                    *e = f.add(*e, f.mul(c, x));
                }
            }
            left.retain(|_, v| *v != 0);
            right.retain(|_, v| *v != 0);
            left == right
        });

        let counit = (0..d).all(|i| {
            let mut l = vec![0u32; d];
            let mut r = vec![0u32; d];
            for (&(a, b), &c) in &self.delta[i] {
                let ea = self.counit[a as usize];
                let eb = self.counit[b as usize];
                l[b as usize] = f.add(l[b as usize], f.mul(ea, c));
                r[a as usize] = f.add(r[a as usize], f.mul(eb, c));
            }
            let e = alg.basis_vector(i);
            l == e && r == e
        });

        let antipode = (0..d).all(|i| {
            let mut l = vec![0u32; d];
            let mut r = vec![0u32; d];
            for (&(a, b), &c) in &self.delta[i] {
                for &(s, x) in &self.antipode[a as usize] {
                    for &(k, v) in alg.mul_basis(s as usize, b as usize) {
                        l[k as usize] = f.add(l[k as usize], f.mul(c, f.mul(x, v)));
                    }
                }
                for &(s, x) in &self.antipode[b as usize] {
                    for &(k, v) in alg.mul_basis(a as usize, s as usize) {
                        r[k as usize] = f.add(r[k as usize], f.mul(c, f.mul(x, v)));
                    }
                }
            }
            let mut e = vec![0u32; d];
            e[alg.unit()] = self.counit[i];
            l == e && r == e
        });

        let pairs: Vec<(usize, usize)> = if d * d <= pair_samples {
            (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..pair_samples)
                .map(|_| (rng.gen_range(0..d), rng.gen_range(0..d)))
                .collect()
        };
        let braided_homomorphism = pairs.iter().all(|&(i, j)| {
            let ab = alg.mul(&alg.basis_vector(i), &alg.basis_vector(j));
            self.comultiply(alg, &ab) == self.braided_product(alg, &self.delta[i], &self.delta[j])
        });

        let super_cocommutative = (0..d).all(|i| {
            let mut flipped = Tensor2::new();
            for (&(a, b), &c) in &self.delta[i] {
                let neg = alg.parity(a as usize).koszul(alg.parity(b as usize));
                add_t(&mut flipped, (b, a), if neg { f.neg(c) } else { c }, alg);
            }
            flipped == self.delta[i]
        });

        HopfReport {
            coassociative,
            counit,
            antipode,
            braided_homomorphism,
            super_cocommutative,
            pairs_tested: pairs.len(),
        }
    }
}

/// Parity of a tensor-square basis element.
pub fn tensor_parity(alg: &FiniteDimSuperalgebra, a: usize, b: usize) -> Parity {
    alg.parity(a).plus(alg.parity(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enveloping::build_uea;
    use crate::liesuper::catalog;

    #[test]
    fn unit_and_generators() {
        let a = build_uea(&catalog("gl(1|1)", 3).unwrap()).unwrap();
        let h = hopf_structure(&a).unwrap();
        let u = a.unit() as u32;
        assert_eq!(h.comultiply_basis(0).len(), 1);
        assert_eq!(h.comultiply_basis(0)[&(u, u)], 1);
        assert_eq!(h.counit()[0], 1);
        assert_eq!(h.antipode_basis(0), &[(u, 1)]);
        for &g in a.generator_embedding().unwrap() {
            let d = h.comultiply_basis(g);
            assert_eq!(d.len(), 2);
            assert_eq!(d[&(u, g as u32)], 1);
            assert_eq!(d[&(g as u32, u)], 1);
            assert_eq!(h.antipode_basis(g), &[(g as u32, a.field().neg(1))]);
        }
    }

    #[test]
    fn odd_heisenberg_delta_y_squared() {
        let a = build_uea(&catalog("odd_heisenberg", 3).unwrap()).unwrap();
        let h = hopf_structure(&a).unwrap();
        let gens = a.generator_embedding().unwrap();
        let (x, y) = (gens[0], gens[1]);
        let dy = h.comultiply_basis(y).clone();
        let sq = h.braided_product(&a, &dy, &dy);
        assert_eq!(&sq, h.comultiply_basis(x));
    }

    #[test]
    fn axioms_hold_on_catalog() {
        for p in [3, 5] {
            for name in ["gl(1|1)", "abelian(1|1)", "abelian(0|2)", "odd_heisenberg"] {
                let a = build_uea(&catalog(name, p).unwrap()).unwrap();
                let r = hopf_structure(&a).unwrap().check(&a, 200, 5);
                assert!(r.all_pass(), "{name} p={p}: {r:?}");
            }
        }
    }
}
