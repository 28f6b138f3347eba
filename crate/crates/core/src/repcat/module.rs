use std::sync::{Arc, OnceLock};

use super::RepError;
use crate::enveloping::FiniteDimSuperalgebra;
use crate::linalg::{CoordinateBasis, Field, Matrix};
use crate::liesuper::Parity;

struct ModuleInner {
    algebra: FiniteDimSuperalgebra,
    parities: Vec<Parity>,
    gen_actions: Vec<Matrix>,
    basis_actions: Vec<OnceLock<Matrix>>,
}

/// A finite-dimensional left supermodule on a homogeneous basis.
///
/// The action is stored on the algebra generators; the action of any basis element is
/// derived from the algebra's factorization and cached.
#[derive(Clone)]
pub struct Supermodule(Arc<ModuleInner>);

impl std::fmt::Debug for Supermodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Supermodule({}|{})", self.dim_even(), self.dim_odd())
    }
}

impl Supermodule {
    /// `gen_actions[k]` is the matrix of `algebra.generators()[k]`.
    pub fn new(
        algebra: &FiniteDimSuperalgebra,
        parities: Vec<Parity>,
        gen_actions: Vec<Matrix>,
    ) -> Result<Supermodule, RepError> {
        let n = parities.len();
        if gen_actions.len() != algebra.generators().len() {
            return Err(RepError::Shape(format!(
                "expected {} generator actions, found {}",
                algebra.generators().len(),
                gen_actions.len()
            )));
        }
        for (k, m) in gen_actions.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(RepError::Shape(format!(
                    "generator {k} acts by a {}x{} matrix on a module of dimension {n}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != algebra.field() {
                return Err(RepError::FieldMismatch);
            }
            let gp = algebra.parity(algebra.generators()[k]);
            for i in 0..n {
                for j in 0..n {
                    if m.get(i, j) != 0 && parities[i] != parities[j].plus(gp) {
                        return Err(RepError::Parity(format!(
                            "generator {} maps basis vector {j} outside the expected grade",
                            algebra.label(algebra.generators()[k])
                        )));
                    }
                }
            }
        }
        Ok(Supermodule(Arc::new(ModuleInner {
            algebra: algebra.clone(),
            basis_actions: (0..algebra.dim()).map(|_| OnceLock::new()).collect(),
            parities,
            gen_actions,
        })))
    }

    pub fn algebra(&self) -> &FiniteDimSuperalgebra {
        &self.0.algebra
    }

    pub fn field(&self) -> &Field {
        self.0.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.0.parities.len()
    }

    pub fn dim_even(&self) -> usize {
        self.0.parities.iter().filter(|&&p| p == Parity::Even).count()
    }

    pub fn dim_odd(&self) -> usize {
        self.dim() - self.dim_even()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.0.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.0.parities
    }

    pub fn gen_action(&self, k: usize) -> &Matrix {
        &self.0.gen_actions[k]
    }

    pub fn gen_actions(&self) -> &[Matrix] {
        &self.0.gen_actions
    }

    /// Matrix of the algebra basis element `b`.
    pub fn action(&self, b: usize) -> &Matrix {
        self.0.basis_actions[b].get_or_init(|| match self.algebra().factor(b) {
            None => {
                if b == self.algebra().unit() {
                    Matrix::identity(self.field(), self.dim())
                } else {
                    panic!("basis element {b} has no factorization")
                }
            }
            Some((k, rest)) => {
                if rest == self.algebra().unit() {
                    self.gen_action(k).clone()
                } else {
                    self.gen_action(k).mul(self.action(rest))
                }
            }
        })
    }

    /// Matrix of an arbitrary algebra element.
    pub fn action_of(&self, a: &[u32]) -> Matrix {
        let f = self.field();
        let mut m = Matrix::zeros(f, self.dim(), self.dim());
        for (b, &c) in a.iter().enumerate() {
            if c != 0 {
                m.add_scaled(c, self.action(b));
            }
        }
        m
    }

    /// `b · v` for every algebra basis element `b`, without forming basis matrices.
    pub fn orbit(&self, v: &[u32]) -> Vec<Vec<u32>> {
        let alg = self.algebra();
        let d = alg.dim();
        let mut out: Vec<Option<Vec<u32>>> = vec![None; d];
        fn fill(m: &Supermodule, b: usize, v: &[u32], out: &mut Vec<Option<Vec<u32>>>) {
            if out[b].is_some() {
                return;
            }
            let alg = m.algebra();
            let r = match alg.factor(b) {
                None => v.to_vec(),
                Some((k, rest)) => {
                    fill(m, rest, v, out);
                    m.gen_action(k).mul_vec(out[rest].as_ref().expect("filled"))
                }
            };
            out[b] = Some(r);
        }
        for b in 0..d {
            fill(self, b, v, &mut out);
        }
        out.into_iter().map(|x| x.expect("filled")).collect()
    }

    /// `a · v` for an algebra element `a`.
    pub fn act(&self, a: &[u32], v: &[u32]) -> Vec<u32> {
        let f = self.field();
        let orbit = self.orbit(v);
        let mut out = vec![0u32; self.dim()];
        for (b, &c) in a.iter().enumerate() {
            if c != 0 {
                f.axpy(&mut out, c, &orbit[b]);
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0u32; self.dim()];
        v[i] = 1;
        v
    }

    /// Parity of a nonzero homogeneous vector.
    pub fn vector_parity(&self, v: &[u32]) -> Option<Parity> {
        let mut found = None;
        for (i, &c) in v.iter().enumerate() {
            if c != 0 {
                match found {
                    None => found = Some(self.parity(i)),
                    Some(p) if p != self.parity(i) => return None,
                    _ => {}
                }
            }
        }
        found
    }

    /// Splits a vector into its even and odd components.
    pub fn split_parity(&self, v: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let mut even = v.to_vec();
        let mut odd = v.to_vec();
        for i in 0..self.dim() {
            match self.parity(i) {
                Parity::Even => odd[i] = 0,
                Parity::Odd => even[i] = 0,
            }
        }
        (even, odd)
    }

    /// The submodule on a homogeneous basis of an invariant subspace, with its inclusion.
    pub fn submodule(&self, basis: Vec<Vec<u32>>) -> Result<(Supermodule, ModuleMap), RepError> {
        let parities: Option<Vec<Parity>> = basis.iter().map(|v| self.vector_parity(v)).collect();
        let parities = parities.ok_or_else(|| RepError::Parity("submodule basis is not homogeneous".into()))?;
        let cb = CoordinateBasis::new(self.field(), self.dim(), basis);
        let mut actions = Vec::with_capacity(self.gen_actions().len());
        for g in self.gen_actions() {
            let images: Vec<Vec<u32>> = cb.basis().iter().map(|v| g.mul_vec(v)).collect();
            actions.push(
                cb.matrix_of_images(&images)
                    .ok_or(RepError::NotInvariant)?,
            );
        }
        let sub = Supermodule::new(self.algebra(), parities, actions)?;
        let inclusion = Matrix::from_columns(self.field(), self.dim(), cb.basis());
        let map = ModuleMap::new(&sub, self, inclusion, Parity::Even)?;
        Ok((sub, map))
    }

    /// Smallest submodule containing the given vectors; the result is a homogeneous basis.
    pub fn generated_submodule(&self, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let f = self.field();
        let mut span = crate::linalg::Subspace::zero(f, self.dim());
        let mut basis = Vec::new();
        let mut queue: Vec<Vec<u32>> = Vec::new();
        for v in vectors {
            let (e, o) = self.split_parity(v);
            queue.push(e);
            queue.push(o);
        }
        while let Some(v) = queue.pop() {
            if span.insert(&v) {
                for g in self.gen_actions() {
                    queue.push(g.mul_vec(&v));
                }
                basis.push(v);
            }
        }
        basis
    }

    /// Quotient by an invariant subspace given by a homogeneous basis.
    pub fn quotient(&self, sub_basis: &[Vec<u32>]) -> Result<(Supermodule, ModuleMap), RepError> {
        let f = self.field();
        let sub = crate::linalg::Subspace::span(f, self.dim(), sub_basis);
        let keep = sub.standard_complement();
        let parities: Vec<Parity> = keep.iter().map(|&i| self.parity(i)).collect();
        let project = |v: &[u32]| -> Vec<u32> {
            let r = sub.reduce(v);
            keep.iter().map(|&i| r[i]).collect()
        };
        let mut actions = Vec::new();
        for g in self.gen_actions() {
            let cols: Vec<Vec<u32>> = keep.iter().map(|&i| project(&g.column(i))).collect();
            actions.push(Matrix::from_columns(f, keep.len(), &cols));
        }
        for v in sub.basis() {
            for g in self.gen_actions() {
                if !sub.contains(&g.mul_vec(v)) {
                    return Err(RepError::NotInvariant);
                }
            }
        }
        let q = Supermodule::new(self.algebra(), parities, actions)?;
        let cols: Vec<Vec<u32>> = (0..self.dim()).map(|i| project(&self.basis_vector(i))).collect();
        let map = ModuleMap::new(self, &q, Matrix::from_columns(f, keep.len(), &cols), Parity::Even)?;
        Ok((q, map))
    }

    /// Relations of the defining presentation on the generator matrices, for algebras built
    /// from a Lie superalgebra; exhaustive basis-pair check otherwise.
    pub fn check_axioms(&self) -> Result<(), RepError> {
        let alg = self.algebra();
        let f = self.field();
        let Some(pbw) = alg.pbw() else {
            return self.check_all_basis_pairs();
        };
        let spec = &pbw.spec;
        let lie_action = |v: &[u32]| -> Matrix {
            let mut m = Matrix::zeros(f, self.dim(), self.dim());
            for (k, &c) in v.iter().enumerate() {
                if c != 0 {
                    m.add_scaled(c, self.gen_action(k));
                }
            }
            m
        };
        for g in 0..spec.dim() {
            for h in 0..spec.dim() {
                let (a, b) = (self.gen_action(g), self.gen_action(h));
                let mut lhs = a.mul(b);
                let ba = b.mul(a);
                if spec.parity(g).koszul(spec.parity(h)) {
                    lhs = lhs.add(&ba);
                } else {
                    lhs = lhs.sub(&ba);
                }
                if lhs != lie_action(spec.bracket_basis(g, h)) {
                    return Err(RepError::AxiomFailure(format!(
                        "bracket relation fails for ({}, {})",
                        spec.name(g),
                        spec.name(h)
                    )));
                }
            }
        }
        for x in 0..spec.even_dim() {
            if self.gen_action(x).pow(spec.p() as u64) != lie_action(spec.pmap_basis(x)) {
                return Err(RepError::AxiomFailure(format!(
                    "p-th power relation fails for {}",
                    spec.name(x)
                )));
            }
        }
        Ok(())
    }

    /// `ρ(1) = I` and `ρ(b_i) ρ(b_j) = ρ(b_i b_j)` on every basis pair.
    pub fn check_all_basis_pairs(&self) -> Result<(), RepError> {
        let alg = self.algebra();
        if *self.action(alg.unit()) != Matrix::identity(self.field(), self.dim()) {
            return Err(RepError::AxiomFailure("unit does not act as the identity".into()));
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = self.action(i).mul(self.action(j));
                let mut rhs = Matrix::zeros(self.field(), self.dim(), self.dim());
                for &(k, c) in alg.mul_basis(i, j) {
                    rhs.add_scaled(c, self.action(k as usize));
                }
                if lhs != rhs {
                    return Err(RepError::AxiomFailure(format!(
                        "action is not multiplicative on ({}, {})",
                        alg.label(i),
                        alg.label(j)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Same matrices with the grading of every basis vector flipped.
    pub fn parity_shift(&self) -> Supermodule {
        let parities = self.parities().iter().map(|p| p.plus(Parity::Odd)).collect();
        Supermodule::new(self.algebra(), parities, self.gen_actions().to_vec()).expect("shift keeps compatibility")
    }

    /// The same module with scalars read in an extension field.
    pub fn extend_scalars(&self, algebra: &FiniteDimSuperalgebra) -> Supermodule {
        let actions = self.gen_actions().iter().map(|m| m.with_field(algebra.field())).collect();
        Supermodule::new(algebra, self.parities().to_vec(), actions).expect("same shape")
    }
}

/// A homogeneous linear map between supermodules.
#[derive(Clone, Debug)]
pub struct ModuleMap {
    pub source: Supermodule,
    pub target: Supermodule,
    /// `target.dim() x source.dim()`.
    pub matrix: Matrix,
    pub parity: Parity,
}

impl ModuleMap {
    pub fn new(source: &Supermodule, target: &Supermodule, matrix: Matrix, parity: Parity) -> Result<ModuleMap, RepError> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(RepError::Shape(format!(
                "map matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(ModuleMap {
            source: source.clone(),
            target: target.clone(),
            matrix,
            parity,
        })
    }

    /// The matrix respects the grading shifted by the map's parity.
    pub fn is_homogeneous(&self) -> bool {
        (0..self.matrix.rows()).all(|i| {
            (0..self.matrix.cols()).all(|j| {
                self.matrix.get(i, j) == 0 || self.target.parity(i) == self.source.parity(j).plus(self.parity)
            })
        })
    }

    /// `f(a m) = (-1)^{|f||a|} a f(m)` for every generator `a`.
    pub fn is_equivariant(&self) -> bool {
        let alg = self.source.algebra();
        self.is_homogeneous()
            && alg.generators().iter().enumerate().all(|(k, &g)| {
                let lhs = self.matrix.mul(self.source.gen_action(k));
                let rhs = self.target.gen_action(k).mul(&self.matrix);
                if self.parity.koszul(alg.parity(g)) {
                    lhs == rhs.neg()
                } else {
                    lhs == rhs
                }
            })
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim()
    }

    /// Homogeneous basis of the kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        graded_kernel(&self.matrix, self.source.parities())
    }

    pub fn compose(&self, then: &ModuleMap) -> ModuleMap {
        ModuleMap {
            source: self.source.clone(),
            target: then.target.clone(),
            matrix: then.matrix.mul(&self.matrix),
            parity: self.parity.plus(then.parity),
        }
    }
}

/// Kernel of a homogeneous map, computed separately on the even and odd parts of the
/// source so that the basis is homogeneous.
pub(crate) fn graded_kernel(matrix: &Matrix, source_parities: &[Parity]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for par in [Parity::Even, Parity::Odd] {
        let cols: Vec<usize> = (0..source_parities.len())
            .filter(|&j| source_parities[j] == par)
            .collect();
        if cols.is_empty() {
            continue;
        }
        let rows: Vec<usize> = (0..matrix.rows()).collect();
        let sub = matrix.select(&rows, &cols);
        for k in sub.kernel() {
            let mut v = vec![0u32; source_parities.len()];
            for (&j, &c) in cols.iter().zip(&k) {
                v[j] = c;
            }
            out.push(v);
        }
    }
    out
}

/// Left regular module.
pub fn regular_module(alg: &FiniteDimSuperalgebra) -> Supermodule {
    let actions = alg.generators().iter().map(|&g| alg.left_matrix(g)).collect();
    Supermodule::new(alg, alg.parities().to_vec(), actions).expect("regular module is well formed")
}

/// The one-dimensional even module on which every Lie generator acts by 0.
pub fn trivial_module(alg: &FiniteDimSuperalgebra) -> Result<Supermodule, RepError> {
    let eps = alg.counit().ok_or(RepError::NeedsHopf)?;
    let f = alg.field();
    let actions = alg
        .generators()
        .iter()
        .map(|&g| Matrix::from_raw(f, 1, 1, vec![eps[g]]))
        .collect();
    Supermodule::new(alg, vec![Parity::Even], actions)
}

/// The zero module.
pub fn zero_module(alg: &FiniteDimSuperalgebra) -> Supermodule {
    let f = alg.field();
    let actions = alg.generators().iter().map(|_| Matrix::zeros(f, 0, 0)).collect();
    Supermodule::new(alg, Vec::new(), actions).expect("zero module")
}

pub fn direct_sum(m: &Supermodule, n: &Supermodule) -> Result<Supermodule, RepError> {
    same_algebra(m, n)?;
    let actions = m
        .gen_actions()
        .iter()
        .zip(n.gen_actions())
        .map(|(a, b)| a.direct_sum(b))
        .collect();
    let parities = m.parities().iter().chain(n.parities()).copied().collect();
    Supermodule::new(m.algebra(), parities, actions)
}

fn same_algebra(m: &Supermodule, n: &Supermodule) -> Result<(), RepError> {
    let (a, b) = (m.algebra(), n.algebra());
    if a.dim() != b.dim() || a.field() != b.field() || a.generators() != b.generators() {
        return Err(RepError::AlgebraMismatch);
    }
    Ok(())
}

/// Graded tensor product; basis `m_i ⊗ n_j` sits at index `i * dim N + j`.
///
/// A primitive generator `g` acts by `ρ_M(g) ⊗ 1 + D_g ⊗ ρ_N(g)` where `D_g` is the
/// diagonal Koszul sign `(-1)^{|g||m_i|}`.
pub fn tensor(m: &Supermodule, n: &Supermodule) -> Result<Supermodule, RepError> {
    same_algebra(m, n)?;
    let alg = m.algebra();
    alg.pbw().ok_or(RepError::NeedsHopf)?;
    let f = m.field();
    let id_n = Matrix::identity(f, n.dim());
    let mut actions = Vec::with_capacity(alg.generators().len());
    for (k, &g) in alg.generators().iter().enumerate() {
        let mut sign = Matrix::identity(f, m.dim());
        for i in 0..m.dim() {
            if alg.parity(g).koszul(m.parity(i)) {
                sign.set(i, i, f.neg(1));
            }
        }
        let a = m.gen_action(k).kronecker(&id_n).add(&sign.kronecker(n.gen_action(k)));
        actions.push(a);
    }
    let parities = m
        .parities()
        .iter()
        .flat_map(|&p| n.parities().iter().map(move |&q| p.plus(q)))
        .collect();
    Supermodule::new(alg, parities, actions)
}

/// Dual module with `(a f)(m) = (-1)^{|a||f|} f(S(a) m)`; on a generator
/// `ρ*(g)[i][j] = -(-1)^{|g||m_j|} ρ(g)[j][i]`.
pub fn dual(m: &Supermodule) -> Result<Supermodule, RepError> {
    let alg = m.algebra();
    alg.pbw().ok_or(RepError::NeedsHopf)?;
    let f = m.field();
    let n = m.dim();
    let mut actions = Vec::with_capacity(alg.generators().len());
    for (k, &g) in alg.generators().iter().enumerate() {
        let rho = m.gen_action(k);
        let mut a = Matrix::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                let v = rho.get(j, i);
                if v != 0 {
                    let positive = alg.parity(g).koszul(m.parity(j));
                    a.set(i, j, if positive { v } else { f.neg(v) });
                }
            }
        }
        actions.push(a);
    }
    Supermodule::new(alg, m.parities().to_vec(), actions)
}

/// Evaluation `M* ⊗ M → k`, `f_i ⊗ m_j ↦ δ_ij`.
pub fn evaluation_map(m: &Supermodule) -> Result<ModuleMap, RepError> {
    let md = dual(m)?;
    let t = tensor(&md, m)?;
    let k = trivial_module(m.algebra())?;
    let n = m.dim();
    let mut mat = Matrix::zeros(m.field(), 1, n * n);
    for i in 0..n {
        mat.set(0, i * n + i, 1);
    }
    ModuleMap::new(&t, &k, mat, Parity::Even)
}
