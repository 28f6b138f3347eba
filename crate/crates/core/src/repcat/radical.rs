use crate::enveloping::FiniteDimSuperalgebra;
use crate::linalg::{Field, Matrix, Subspace};

/// An associative algebra presented by a basis: a product in basis coordinates and a
/// faithful matrix representation.
pub trait AlgebraOracle {
    fn field(&self) -> &Field;
    fn dim(&self) -> usize;
    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32>;
    fn represent(&self, a: &[u32]) -> Matrix;
}

impl AlgebraOracle for FiniteDimSuperalgebra {
    fn field(&self) -> &Field {
        FiniteDimSuperalgebra::field(self)
    }

    fn dim(&self) -> usize {
        FiniteDimSuperalgebra::dim(self)
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        FiniteDimSuperalgebra::mul(self, a, b)
    }

    fn represent(&self, a: &[u32]) -> Matrix {
        self.left_matrix_of(a)
    }
}

/// Subalgebra of `End(V)` spanned by the given matrices (assumed closed under products).
pub struct MatrixAlgebra {
    field: Field,
    basis: Vec<Matrix>,
    coords: crate::linalg::CoordinateBasis,
}

impl MatrixAlgebra {
    pub fn new(field: &Field, basis: Vec<Matrix>) -> MatrixAlgebra {
        let flat: Vec<Vec<u32>> = basis.iter().map(|m| m.data().to_vec()).collect();
        let ambient = basis.first().map(|m| m.rows() * m.cols()).unwrap_or(0);
        MatrixAlgebra {
            field: field.clone(),
            coords: crate::linalg::CoordinateBasis::new(field, ambient, flat),
            basis,
        }
    }

    pub fn element(&self, a: &[u32]) -> Matrix {
        let mut m = Matrix::zeros(&self.field, self.basis[0].rows(), self.basis[0].cols());
        for (b, &c) in self.basis.iter().zip(a) {
            if c != 0 {
                m.add_scaled(c, b);
            }
        }
        m
    }
}

impl AlgebraOracle for MatrixAlgebra {
    fn field(&self) -> &Field {
        &self.field
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let prod = self.element(a).mul(&self.element(b));
        self.coords
            .coordinates(prod.data())
            .expect("matrix algebra basis is closed under multiplication")
    }

    fn represent(&self, a: &[u32]) -> Matrix {
        self.element(a)
    }
}

/// An `F_{p^e}`-algebra viewed over `F_p` with basis `ω^j b_i` (`ω` the generator of the
/// extension), index `i * e + j`.
struct RestrictedScalars<'a, A: AlgebraOracle + ?Sized> {
    inner: &'a A,
    prime: Field,
    e: usize,
}

impl<A: AlgebraOracle + ?Sized> RestrictedScalars<'_, A> {
    fn to_big(&self, v: &[u32]) -> Vec<u32> {
        let p = self.prime.characteristic();
        v.chunks(self.e)
            .map(|digits| digits.iter().rev().fold(0u32, |acc, &d| acc * p + d))
            .collect()
    }

    fn to_small(&self, v: &[u32]) -> Vec<u32> {
        let p = self.prime.characteristic();
        let mut out = Vec::with_capacity(v.len() * self.e);
        for &x in v {
            let mut x = x;
            for _ in 0..self.e {
                out.push(x % p);
                x /= p;
            }
        }
        out
    }
}

impl<A: AlgebraOracle + ?Sized> AlgebraOracle for RestrictedScalars<'_, A> {
    fn field(&self) -> &Field {
        &self.prime
    }

    fn dim(&self) -> usize {
        self.inner.dim() * self.e
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        self.to_small(&self.inner.mul(&self.to_big(a), &self.to_big(b)))
    }

    fn represent(&self, a: &[u32]) -> Matrix {
        let big = self.inner.represent(&self.to_big(a));
        let f = self.inner.field();
        let e = self.e;
        let n = big.rows();
        let mut m = Matrix::zeros(&self.prime, n * e, n * e);
        for r in 0..n {
            for c in 0..n {
                let x = big.get(r, c);
                if x == 0 {
                    continue;
                }
                // block: multiplication by x on F_{p^e} in the basis 1, ω, ..., ω^{e-1}
                let mut basis_el = 1u32;
                let p = self.prime.characteristic();
                for j in 0..e {
                    let prod = f.mul(x, basis_el);
                    let mut y = prod;
                    for i in 0..e {
                        m.set(r * e + i, c * e + j, y % p);
                        y /= p;
                    }
                    basis_el *= p;
                }
            }
        }
        m
    }
}

/// `Tr(x^{p^i}) / p^i mod p` for an integer lift of `x` with entries in `0..p`.
fn trace_functional(x: &Matrix, p: u64, i: u32) -> u32 {
    if i == 0 {
        return x.trace();
    }
    let modulus = p.pow(i + 1);
    let n = x.rows();
    let lift: Vec<u64> = x.data().iter().map(|&v| v as u64).collect();
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut out = vec![0u64; n * n];
        for r in 0..n {
            for k in 0..n {
                let av = a[r * n + k];
                if av == 0 {
                    continue;
                }
                let brow = &b[k * n..(k + 1) * n];
                let orow = &mut out[r * n..(r + 1) * n];
                for (o, &bv) in orow.iter_mut().zip(brow) {
                    *o = (*o + av * bv) % modulus;
                }
            }
        }
        out
    };
    let mut pow = lift;
    for _ in 0..i {
        // raise to the p-th power by repeated squaring
        let mut result: Option<Vec<u64>> = None;
        let mut base = pow.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => mul(&r, &base),
                });
            }
            e >>= 1;
            if e > 0 {
                base = mul(&base, &base);
            }
        }
        pow = result.expect("p > 0");
    }
    let tr = (0..n).map(|r| pow[r * n + r]).sum::<u64>() % modulus;
    let scale = p.pow(i);
    assert_eq!(tr % scale, 0, "trace functional undefined off the previous ideal");
    ((tr / scale) % p) as u32
}

fn radical_prime<A: AlgebraOracle + ?Sized>(alg: &A) -> Subspace {
    let f = alg.field().clone();
    let p = f.characteristic() as u64;
    let k = alg.dim();
    if k == 0 {
        return Subspace::zero(&f, 0);
    }
    let n = alg.represent(&vec![0; k]).rows();
    let mut l = 0u32;
    while p.pow(l + 1) <= n as u64 {
        l += 1;
    }
    let standard: Vec<Vec<u32>> = (0..k)
        .map(|i| {
            let mut v = vec![0u32; k];
            v[i] = 1;
            v
        })
        .collect();
    let mut ideal = Subspace::full(&f, k);
    for i in 0..=l {
        if ideal.is_zero() {
            break;
        }
        let basis = ideal.basis().to_vec();
        let g: Vec<u32> = basis
            .iter()
            .map(|a| trace_functional(&alg.represent(a), p, i))
            .collect();
        // unknown c: Σ_k c_k g_i(a_k b) = 0 for every basis element b
        let r = basis.len();
        let mut system = Matrix::zeros(&f, k, r);
        for (kk, a) in basis.iter().enumerate() {
            for (l_idx, b) in standard.iter().enumerate() {
                let prod = alg.mul(a, b);
                let coords = ideal.coordinates_unchecked(&prod);
                system.set(l_idx, kk, f.dot(&coords, &g));
            }
        }
        let mut next = Subspace::zero(&f, k);
        for c in system.kernel() {
            let mut v = vec![0u32; k];
            for (a, &x) in basis.iter().zip(&c) {
                if x != 0 {
                    f.axpy(&mut v, x, a);
                }
            }
            next.insert(&v);
        }
        ideal = next;
    }
    ideal
}

/// Jacobson radical of a finite-dimensional algebra over `F_p` or `F_{p^e}`.
pub fn radical_of<A: AlgebraOracle + ?Sized>(alg: &A) -> Subspace {
    let f = alg.field().clone();
    if f.is_prime_field() {
        return radical_prime(alg);
    }
    let wrapped = RestrictedScalars {
        inner: alg,
        prime: f.prime_subfield(),
        e: f.degree() as usize,
    };
    let small = radical_prime(&wrapped);
    let mut out = Subspace::zero(&f, alg.dim());
    for v in small.basis() {
        out.insert(&wrapped.to_big(v));
    }
    out
}

/// Jacobson radical of a finite-dimensional superalgebra, as a subspace in basis
/// coordinates.
pub fn radical(alg: &FiniteDimSuperalgebra) -> Subspace {
    let f = alg.field();
    if f.is_prime_field() {
        return radical_of(alg);
    }
    // the radical is defined over the prime field and commutes with the scalar extension
    let base = alg.extend_scalars(&f.prime_subfield());
    let small = radical_of(&base);
    Subspace::span(f, alg.dim(), small.basis())
}

/// `rad^k = 0` for some `k <= dim`.
pub fn is_nilpotent_ideal(alg: &FiniteDimSuperalgebra, ideal: &Subspace) -> bool {
    let f = alg.field();
    let mut power = ideal.clone();
    for _ in 0..=alg.dim() {
        if power.is_zero() {
            return true;
        }
        let mut next = Subspace::zero(f, alg.dim());
        for a in ideal.basis() {
            for b in power.basis() {
                next.insert(&alg.mul(a, b));
            }
        }
        if next.dim() == power.dim() {
            return false;
        }
        power = next;
    }
    power.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enveloping::build_uea;
    use crate::liesuper::catalog;

    #[test]
    fn truncated_polynomial_radical() {
        let a = build_uea(&catalog("abelian(1|0)", 3).unwrap()).unwrap();
        let r = radical(&a);
        assert_eq!(r.dim(), 2);
        assert!(!r.contains(&a.unit_vector()));
        assert!(is_nilpotent_ideal(&a, &r));
    }

    #[test]
    fn exterior_algebra_radical() {
        for n in 1..=3 {
            let a = build_uea(&catalog(&format!("abelian(0|{n})"), 3).unwrap()).unwrap();
            assert_eq!(radical(&a).dim(), (1 << n) - 1);
        }
    }

    #[test]
    fn semisimple_field_algebra() {
        let a = build_uea(&catalog("abelian(0|0)", 5).unwrap()).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(radical(&a).is_zero());
    }

    #[test]
    fn gl11_radical_dimensions() {
        // u(gl(1|1)): p^2 - p projective simples of dimension 2 and p one-dimensional
        // simples with four-dimensional projective covers, so dim rad = 4p - p
        for (p, expect) in [(3u32, 9usize), (5, 15)] {
            let a = build_uea(&catalog("gl(1|1)", p).unwrap()).unwrap();
            let r = radical(&a);
            assert_eq!(r.dim(), expect, "p={p}");
            assert!(is_nilpotent_ideal(&a, &r));
        }
    }

    #[test]
    fn matrix_algebra_of_upper_triangular() {
        let f = Field::prime(3).unwrap();
        let e = |i: usize, j: usize| {
            let mut m = Matrix::zeros(&f, 2, 2);
            m.set(i, j, 1);
            m
        };
        let alg = MatrixAlgebra::new(&f, vec![e(0, 0), e(1, 1), e(0, 1)]);
        let r = radical_of(&alg);
        assert_eq!(r.dim(), 1);
        assert!(r.contains(&[0, 0, 1]));
    }

    #[test]
    fn extension_field_radical_matches() {
        let f9 = Field::with_degree(3, 2).unwrap();
        let a = build_uea(&catalog("odd_heisenberg", 3).unwrap()).unwrap();
        let big = a.extend_scalars(&f9);
        assert_eq!(radical_of(&big).dim(), radical(&a).dim());
    }
}
