use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Field, Matrix};
use crate::liesuper::{LieSuperAlgebraSpec, Parity};

/// Sparse coefficient vector: `(basis index, nonzero coefficient)` sorted by index.
pub type SparseVec = Vec<(u32, u32)>;

/// PBW basis element `x_1^{a_1} ... x_m^{a_m} y_1^{b_1} ... y_n^{b_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PBWMonomial {
    pub even: Vec<u8>,
    pub odd: Vec<u8>,
}

impl PBWMonomial {
    pub fn degree(&self) -> usize {
        self.even.iter().chain(&self.odd).map(|&a| a as usize).sum()
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit(self.odd.iter().sum::<u8>())
    }

    pub fn is_unit(&self) -> bool {
        self.degree() == 0
    }

    pub(crate) fn exponents(&self) -> impl Iterator<Item = u8> + '_ {
        self.even.iter().chain(&self.odd).copied()
    }

    pub fn render(&self, spec: &LieSuperAlgebraSpec) -> String {
        let mut parts = Vec::new();
        for (i, a) in self.exponents().enumerate() {
            match a {
                0 => {}
                1 => parts.push(spec.name(i).to_string()),
                _ => parts.push(format!("{}^{}", spec.name(i), a)),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }
}

/// The PBW presentation carried by an algebra built from a Lie superalgebra.
#[derive(Clone, Debug)]
pub struct PbwData {
    pub spec: LieSuperAlgebraSpec,
    pub monomials: Vec<PBWMonomial>,
    /// Basis index of the degree-one monomial of each generator.
    pub generator_index: Vec<usize>,
}

impl PbwData {
    pub fn degree(&self, basis: usize) -> usize {
        self.monomials[basis].degree()
    }

    pub fn index_of(&self, mono: &PBWMonomial) -> Option<usize> {
        self.monomials.iter().position(|m| m == mono)
    }
}

/// A finite-dimensional associative superalgebra given by structure constants on a
/// homogeneous basis.
#[derive(Clone)]
pub struct FiniteDimSuperalgebra {
    field: Field,
    parities: Arc<Vec<Parity>>,
    labels: Arc<Vec<String>>,
    unit: usize,
    table: Arc<Vec<SparseVec>>,
    generators: Arc<Vec<usize>>,
    /// `factors[b] = (k, r)` with `b_b = b_{generators[k]} * b_r`; `None` for the unit.
    factors: Arc<Vec<Option<(usize, usize)>>>,
    pbw: Option<Arc<PbwData>>,
}

impl fmt::Debug for FiniteDimSuperalgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteDimSuperalgebra")
            .field("dim", &self.dim())
            .field("p", &self.field.characteristic())
            .field("unit", &self.unit)
            .finish()
    }
}

impl FiniteDimSuperalgebra {
    /// `table[i * dim + j]` is the product `b_i b_j`. `generators` lists basis elements that
    /// generate the algebra; an empty list means "all basis elements".
    pub fn from_table(
        field: &Field,
        parities: Vec<Parity>,
        labels: Vec<String>,
        unit: usize,
        table: Vec<SparseVec>,
        generators: Vec<usize>,
    ) -> FiniteDimSuperalgebra {
        let dim = parities.len();
        assert_eq!(table.len(), dim * dim);
        assert_eq!(labels.len(), dim);
        let (generators, factors) = if generators.is_empty() {
            let factors = (0..dim)
                .map(|b| if b == unit { None } else { Some((b, unit)) })
                .collect();
            ((0..dim).collect(), factors)
        } else {
            (generators, vec![None; dim])
        };
        FiniteDimSuperalgebra {
            field: field.clone(),
            parities: Arc::new(parities),
            labels: Arc::new(labels),
            unit,
            table: Arc::new(table),
            generators: Arc::new(generators),
            factors: Arc::new(factors),
            pbw: None,
        }
    }

    pub(crate) fn with_pbw(mut self, pbw: PbwData, factors: Vec<Option<(usize, usize)>>) -> FiniteDimSuperalgebra {
        self.pbw = Some(Arc::new(pbw));
        self.factors = Arc::new(factors);
        self
    }

    /// The same structure constants read over an extension of the ground field.
    pub fn extend_scalars(&self, field: &Field) -> FiniteDimSuperalgebra {
        assert_eq!(field.characteristic(), self.field.characteristic());
        let mut out = self.clone();
        out.field = field.clone();
        out
    }

    /// `(k, r)` with `b_b = b_{generators[k]} b_r` and `r` earlier in the factor chain.
    pub fn factor(&self, b: usize) -> Option<(usize, usize)> {
        self.factors[b]
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn unit_vector(&self) -> Vec<u32> {
        self.basis_vector(self.unit)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn pbw(&self) -> Option<&PbwData> {
        self.pbw.as_deref()
    }

    /// Basis indices of the Lie superalgebra generators, for algebras built from one.
    pub fn generator_embedding(&self) -> Option<&[usize]> {
        self.pbw.as_ref().map(|p| p.generator_index.as_slice())
    }

    /// The augmentation `ε`: 1 on the unit monomial and 0 on every other PBW monomial.
    pub fn counit(&self) -> Option<Vec<u32>> {
        self.pbw.as_ref().map(|_| self.unit_vector())
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[(u32, u32)] {
        &self.table[i * self.dim() + j]
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0u32; self.dim()];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let c = f.mul(x, y);
                for &(k, v) in self.mul_basis(i, j) {
                    let k = k as usize;
                    out[k] = f.add(out[k], f.mul(c, v));
                }
            }
        }
        out
    }

    /// `b_i * a` for a basis element `b_i`.
    pub fn mul_basis_left(&self, i: usize, a: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0u32; self.dim()];
        for (j, &y) in a.iter().enumerate() {
            if y != 0 {
                for &(k, v) in self.mul_basis(i, j) {
                    out[k as usize] = f.add(out[k as usize], f.mul(y, v));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `b_i`; column `j` is `b_i b_j`.
    pub fn left_matrix(&self, i: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(&self.field, d, d);
        for j in 0..d {
            for &(k, v) in self.mul_basis(i, j) {
                m.set(k as usize, j, v);
            }
        }
        m
    }

    /// Matrix of left multiplication by an arbitrary element.
    pub fn left_matrix_of(&self, a: &[u32]) -> Matrix {
        let d = self.dim();
        let f = &self.field;
        let mut m = Matrix::zeros(f, d, d);
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for j in 0..d {
                for &(k, v) in self.mul_basis(i, j) {
                    let cur = m.get(k as usize, j);
                    m.set(k as usize, j, f.add(cur, f.mul(x, v)));
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by `b_i`; column `j` is `b_j b_i`.
    pub fn right_matrix(&self, i: usize) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(&self.field, d, d);
        for j in 0..d {
            for &(k, v) in self.mul_basis(j, i) {
                m.set(k as usize, j, v);
            }
        }
        m
    }

    /// Parity of a nonzero homogeneous element; `None` for zero or mixed elements.
    pub fn element_parity(&self, v: &[u32]) -> Option<Parity> {
        let mut found = None;
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                match found {
                    None => found = Some(self.parities[i]),
                    Some(p) if p != self.parities[i] => return None,
                    _ => {}
                }
            }
        }
        found
    }

    fn assoc_triple(&self, i: usize, j: usize, k: usize) -> bool {
        let f = &self.field;
        let d = self.dim();
        let mut left = vec![0u32; d];
        for &(t, c) in self.mul_basis(i, j) {
            for &(s, v) in self.mul_basis(t as usize, k) {
                left[s as usize] = f.add(left[s as usize], f.mul(c, v));
            }
        }
        let mut right = vec![0u32; d];
        for &(t, c) in self.mul_basis(j, k) {
            for &(s, v) in self.mul_basis(i, t as usize) {
                right[s as usize] = f.add(right[s as usize], f.mul(c, v));
            }
        }
        left == right
    }

    /// Associativity on all basis triples when `dim <= exhaustive_limit`, otherwise on
    /// `samples` seeded random triples. Returns the first failing triple.
    pub fn associativity_witness(
        &self,
        exhaustive_limit: usize,
        samples: usize,
        seed: u64,
    ) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        if d <= exhaustive_limit {
            for i in 0..d {
                for j in 0..d {
                    for k in 0..d {
                        if !self.assoc_triple(i, j, k) {
                            return Some((i, j, k));
                        }
                    }
                }
            }
            None
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..samples)
                .map(|_| (rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d)))
                .find(|&(i, j, k)| !self.assoc_triple(i, j, k))
        }
    }

    pub fn unit_laws_hold(&self) -> bool {
        let u = self.unit;
        (0..self.dim()).all(|i| {
            let e = [(i as u32, 1u32)];
            self.mul_basis(u, i) == e && self.mul_basis(i, u) == e
        })
    }

    pub fn parity_is_multiplicative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| {
            (0..d).all(|j| {
                let target = self.parities[i].plus(self.parities[j]);
                self.mul_basis(i, j)
                    .iter()
                    .all(|&(k, _)| self.parities[k as usize] == target)
            })
        })
    }

    /// First basis pair violating `ab = (-1)^{|a||b|} ba`.
    pub fn supercommutativity_witness(&self) -> Option<(usize, usize)> {
        let f = &self.field;
        let d = self.dim();
        for i in 0..d {
            for j in i..d {
                let ab = self.mul_basis(i, j);
                let ba = self.mul_basis(j, i);
                let neg = self.parities[i].koszul(self.parities[j]);
                let expect: SparseVec = if neg {
                    ba.iter().map(|&(k, v)| (k, f.neg(v))).collect()
                } else {
                    ba.to_vec()
                };
                if ab != expect.as_slice() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// The algebra structure on a multiplicatively closed subspace, e.g. a block `eA` for a
    /// central idempotent `e`.
    ///
    /// `basis` holds homogeneous vectors; `basis[0]` must act as the unit of the subspace.
    /// Returns `None` if some product leaves the span.
    pub fn restrict_to(&self, basis: &[Vec<u32>], labels: Vec<String>) -> Option<FiniteDimSuperalgebra> {
        let f = &self.field;
        let k = basis.len();
        let cols = Matrix::from_columns(f, self.dim(), basis);
        let mut table = Vec::with_capacity(k * k);
        for a in basis {
            for b in basis {
                let prod = self.mul(a, b);
                let coords = cols.solve(&prod)?;
                table.push(
                    coords
                        .iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(i, &c)| (i as u32, c))
                        .collect(),
                );
            }
        }
        let parities = basis
            .iter()
            .map(|v| self.element_parity(v).unwrap_or(Parity::Even))
            .collect();
        Some(FiniteDimSuperalgebra::from_table(f, parities, labels, 0, table, Vec::new()))
    }
}
