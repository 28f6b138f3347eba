use super::algebra::{FiniteDimSuperalgebra, SparseVec};
use super::EnvelopingError;
use crate::linalg::{Matrix, Subspace};
use crate::liesuper::Parity;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiltrationKind {
    /// Powers of the augmentation ideal, `I^0 ⊇ I^1 ⊇ ... ⊇ I^N = 0`.
    Augmentation,
    /// PBW degree, `F_0 ⊆ F_1 ⊆ ... ⊆ F_D = A` with `F_r` spanned by monomials of degree ≤ r.
    PbwDegree,
}

#[derive(Clone, Debug)]
pub struct Filtration {
    pub kind: FiltrationKind,
    pub pieces: Vec<Subspace>,
}

impl Filtration {
    /// For the augmentation filtration, the least `N` with `I^N = 0`.
    pub fn nilpotency_index(&self) -> Option<usize> {
        match self.kind {
            FiltrationKind::Augmentation => Some(self.pieces.len() - 1),
            FiltrationKind::PbwDegree => None,
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|s| s.dim()).collect()
    }

    /// `(larger, smaller)` pair whose quotient is the graded piece of degree `r`.
    fn graded_pair(&self, r: usize) -> (&Subspace, Option<&Subspace>) {
        match self.kind {
            FiltrationKind::Augmentation => (&self.pieces[r], self.pieces.get(r + 1)),
            FiltrationKind::PbwDegree => (&self.pieces[r], r.checked_sub(1).map(|s| &self.pieces[s])),
        }
    }

    fn num_degrees(&self) -> usize {
        match self.kind {
            FiltrationKind::Augmentation => self.pieces.len() - 1,
            FiltrationKind::PbwDegree => self.pieces.len(),
        }
    }
}

/// `m(p-1) + n + 1`.
pub fn nilpotency_bound(m: usize, n: usize, p: u32) -> usize {
    m * (p as usize - 1) + n + 1
}

/// Coefficients of `((1 - t^p)/(1 - t))^m (1 + t)^n`.
pub fn pbw_series(m: usize, n: usize, p: u32) -> Vec<u64> {
    let mut poly = vec![1u64];
    let mul = |a: &[u64], b: &[u64]| {
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    };
    let trunc = vec![1u64; p as usize];
    for _ in 0..m {
        poly = mul(&poly, &trunc);
    }
    for _ in 0..n {
        poly = mul(&poly, &[1, 1]);
    }
    poly
}

/// Powers of the augmentation ideal `I = ker ε`, using `I^{r+1} = Σ_g g I^r` over the Lie
/// generators `g`.
pub fn augmentation_filtration(alg: &FiniteDimSuperalgebra) -> Result<Filtration, EnvelopingError> {
    let pbw = alg.pbw().ok_or(EnvelopingError::NoPbw)?;
    let f = alg.field();
    let d = alg.dim();
    let mut pieces = vec![Subspace::full(f, d)];
    let aug: Vec<Vec<u32>> = (0..d)
        .filter(|&i| i != alg.unit())
        .map(|i| alg.basis_vector(i))
        .collect();
    let mut current = Subspace::span(f, d, &aug);
    let gens = &pbw.generator_index;
    while !current.is_zero() {
        pieces.push(current.clone());
        let mut next = Subspace::zero(f, d);
        for v in current.basis() {
            for &g in gens {
                next.insert(&alg.mul_basis_left(g, v));
            }
        }
        if next.dim() == current.dim() {
            return Err(EnvelopingError::NotNilpotent {
                stable_dim: next.dim(),
                power: pieces.len() - 1,
            });
        }
        current = next;
    }
    pieces.push(current);
    Ok(Filtration {
        kind: FiltrationKind::Augmentation,
        pieces,
    })
}

/// The ascending filtration by PBW degree.
pub fn pbw_filtration(alg: &FiniteDimSuperalgebra) -> Result<Filtration, EnvelopingError> {
    let pbw = alg.pbw().ok_or(EnvelopingError::NoPbw)?;
    let f = alg.field();
    let d = alg.dim();
    let top = (0..d).map(|i| pbw.degree(i)).max().unwrap_or(0);
    let pieces = (0..=top)
        .map(|r| {
            let vs: Vec<Vec<u32>> = (0..d)
                .filter(|&i| pbw.degree(i) <= r)
                .map(|i| alg.basis_vector(i))
                .collect();
            Subspace::span(f, d, &vs)
        })
        .collect();
    Ok(Filtration {
        kind: FiltrationKind::PbwDegree,
        pieces,
    })
}

/// Associated graded algebra together with the degree of each basis element.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    pub algebra: FiniteDimSuperalgebra,
    pub degrees: Vec<usize>,
}

impl GradedAlgebra {
    pub fn graded_dims(&self) -> Vec<usize> {
        let top = self.degrees.iter().copied().max().unwrap_or(0);
        let mut out = vec![0; top + 1];
        for &r in &self.degrees {
            out[r] += 1;
        }
        out
    }
}

/// `gr A = ⊕_r F_r / F_{r±1}` with the induced product.
///
/// Each graded piece gets a basis of homogeneous vectors complementing the smaller piece,
/// chosen from the larger piece's echelon basis in order. Products of classes of degrees `r`
/// and `s` are read off in the degree `r + s` complement.
pub fn gr_algebra(alg: &FiniteDimSuperalgebra, filt: &Filtration) -> Result<GradedAlgebra, EnvelopingError> {
    let f = alg.field();
    let d = alg.dim();
    let ndeg = filt.num_degrees();
    let mut complement: Vec<Vec<Vec<u32>>> = Vec::with_capacity(ndeg);
    for r in 0..ndeg {
        let (big, small) = filt.graded_pair(r);
        let small = small.cloned().unwrap_or_else(|| crate::linalg::Subspace::zero(f, d));
        // split the echelon basis by parity so every chosen vector is homogeneous
        let mut candidates: Vec<Vec<u32>> = Vec::new();
        for v in big.basis() {
            let mut ev = v.clone();
            let mut od = v.clone();
            for i in 0..d {
                match alg.parity(i) {
                    Parity::Even => od[i] = 0,
                    Parity::Odd => ev[i] = 0,
                }
            }
            candidates.push(ev);
            candidates.push(od);
        }
        candidates.retain(|v| v.iter().any(|&c| c != 0));
        complement.push(small.complement_from(&candidates));
    }
    let mut basis = Vec::with_capacity(d);
    let mut degrees = Vec::with_capacity(d);
    for (r, c) in complement.iter().enumerate() {
        for v in c {
            basis.push(v.clone());
            degrees.push(r);
        }
    }
    if basis.len() != d {
        return Err(EnvelopingError::Internal(format!(
            "graded pieces have total dimension {} instead of {d}",
            basis.len()
        )));
    }
    let inverse = Matrix::from_columns(f, d, &basis)
        .inverse()
        .ok_or_else(|| EnvelopingError::Internal("graded basis is not a basis".into()))?;
    let mut table: Vec<SparseVec> = Vec::with_capacity(d * d);
    for (a, &ra) in basis.iter().zip(&degrees) {
        for (b, &rb) in basis.iter().zip(&degrees) {
            let target = ra + rb;
            let coords = inverse.mul_vec(&alg.mul(a, b));
            let mut entry = Vec::new();
            for (k, &c) in coords.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let lands_outside = match filt.kind {
                    FiltrationKind::Augmentation => degrees[k] < target,
                    FiltrationKind::PbwDegree => degrees[k] > target,
                };
                if lands_outside {
                    return Err(EnvelopingError::Internal(format!(
                        "product of degrees {ra} and {rb} leaves filtration piece {target}"
                    )));
                }
                if degrees[k] == target {
                    entry.push((k as u32, c));
                }
            }
            table.push(entry);
        }
    }
    let parities: Vec<Parity> = basis
        .iter()
        .map(|v| alg.element_parity(v).unwrap_or(Parity::Even))
        .collect();
    let labels = degrees
        .iter()
        .enumerate()
        .map(|(i, r)| format!("gr{r}[{i}]"))
        .collect();
    let unit = (0..d)
        .find(|&i| degrees[i] == 0)
        .ok_or_else(|| EnvelopingError::Internal("empty degree zero piece".into()))?;
    let algebra = FiniteDimSuperalgebra::from_table(f, parities, labels, unit, table, Vec::new());
    if !algebra.unit_laws_hold() {
        return Err(EnvelopingError::Internal("degree zero piece is not spanned by the unit".into()));
    }
    Ok(GradedAlgebra { algebra, degrees })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enveloping::build_uea;
    use crate::liesuper::catalog;

    #[test]
    fn series_expansion() {
        assert_eq!(pbw_series(1, 1, 3), vec![1, 2, 2, 1]);
        assert_eq!(pbw_series(2, 2, 5)[..2], [1, 4]);
        assert_eq!(pbw_series(0, 0, 3), vec![1]);
    }

    #[test]
    fn abelian_indices() {
        let a = build_uea(&catalog("abelian(0|1)", 3).unwrap()).unwrap();
        assert_eq!(augmentation_filtration(&a).unwrap().nilpotency_index(), Some(2));
        let b = build_uea(&catalog("abelian(1|0)", 3).unwrap()).unwrap();
        assert_eq!(augmentation_filtration(&b).unwrap().nilpotency_index(), Some(3));
    }

    #[test]
    fn odd_heisenberg_is_truncated_polynomial() {
        let a = build_uea(&catalog("odd_heisenberg", 3).unwrap()).unwrap();
        let filt = augmentation_filtration(&a).unwrap();
        assert_eq!(filt.nilpotency_index(), Some(6));
        let gr = gr_algebra(&a, &filt).unwrap();
        assert_eq!(gr.graded_dims(), vec![1; 6]);
    }

    #[test]
    fn gl11_augmentation_ideal_is_not_nilpotent() {
        // E11 is idempotent under the matrix p-map, so E11^p = E11 lies in every power
        let a = build_uea(&catalog("gl(1|1)", 3).unwrap()).unwrap();
        assert!(matches!(
            augmentation_filtration(&a),
            Err(EnvelopingError::NotNilpotent { .. })
        ));
    }

    #[test]
    fn pbw_gr_is_supercommutative_with_product_series() {
        for name in ["gl(1|1)", "odd_heisenberg", "abelian(1|1)"] {
            let g = catalog(name, 3).unwrap();
            let a = build_uea(&g).unwrap();
            let gr = gr_algebra(&a, &pbw_filtration(&a).unwrap()).unwrap();
            assert!(gr.algebra.supercommutativity_witness().is_none(), "{name}");
            let expect: Vec<usize> = pbw_series(g.even_dim(), g.odd_dim(), 3)
                .iter()
                .map(|&c| c as usize)
                .collect();
            assert_eq!(gr.graded_dims(), expect, "{name}");
            assert!(gr.algebra.associativity_witness(200, 0, 0).is_none());
        }
    }
}
