use super::CohomologyError;
use crate::linalg::{Matrix, Subspace};
use crate::liesuper::Parity;
use crate::repcat::{zero_module, ModuleMap, RepCategory, Supermodule};

/// A minimal projective resolution `P_N → ⋯ → P_0 ↠ M` with its syzygies.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub module: Supermodule,
    pub projectives: Vec<Supermodule>,
    /// `d_0: P_0 ↠ M` and `d_n: P_n → P_{n-1}` for `n ≥ 1`.
    pub differentials: Vec<ModuleMap>,
    /// `(simple index, parity shift)` of the indecomposable summands of each `P_n`.
    pub tops: Vec<Vec<(usize, Parity)>>,
    /// `Ω^0 = M, Ω^1, …, Ω^{N+1}`.
    pub syzygies: Vec<Supermodule>,
    /// `P_n ↠ Ω^n`.
    pub covers: Vec<ModuleMap>,
    /// `Ω^{n+1} ↪ P_n`.
    pub inclusions: Vec<ModuleMap>,
}

/// A degree-`n` class of `H^n(A, k)`, represented by a functional on `P_n` that kills
/// `rad P_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub degree: usize,
    pub functional: Vec<u32>,
    pub parity: Parity,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.functional.iter().all(|&x| x == 0)
    }
}

/// Resolution of `M` through `P_steps`.
pub fn minimal_resolution(cat: &RepCategory, m: &Supermodule, steps: usize) -> Result<Resolution, CohomologyError> {
    let alg = cat.algebra();
    let mut res = Resolution {
        module: m.clone(),
        projectives: Vec::new(),
        differentials: Vec::new(),
        tops: Vec::new(),
        syzygies: vec![m.clone()],
        covers: Vec::new(),
        inclusions: Vec::new(),
    };
    for n in 0..=steps {
        let omega = res.syzygies[n].clone();
        let (next, inclusion, cover) = cat.syzygy(&omega)?;
        let d = if n == 0 {
            cover.map.clone()
        } else {
            cover.map.compose(&res.inclusions[n - 1])
        };
        res.projectives.push(cover.module.clone());
        res.differentials.push(d);
        res.tops.push(cover.tops.clone());
        res.covers.push(cover.map);
        res.inclusions.push(inclusion);
        res.syzygies.push(if next.dim() == 0 { zero_module(alg) } else { next });
    }
    Ok(res)
}

/// `Ω^n(M)` as an explicit module (`Ω^0 = M`).
pub fn syzygy(cat: &RepCategory, m: &Supermodule, n: usize) -> Result<Supermodule, CohomologyError> {
    let mut cur = m.clone();
    for _ in 0..n {
        if cur.dim() == 0 {
            break;
        }
        cur = cat.syzygy(&cur)?.0;
    }
    Ok(cur)
}

impl Resolution {
    /// Index of the last projective.
    pub fn length(&self) -> usize {
        self.projectives.len() - 1
    }

    pub fn dims(&self) -> Vec<usize> {
        self.projectives.iter().map(|p| p.dim()).collect()
    }

    pub fn syzygy_dims(&self) -> Vec<usize> {
        self.syzygies.iter().map(|s| s.dim()).collect()
    }

    /// `dim Ext^n(M, S)` for `n = 0..=N`, counting maps of both parities: the multiplicity
    /// of `P(S)` or `ΠP(S)` in `P_n`.
    pub fn ext_dims(&self, simple: usize) -> Vec<usize> {
        self.tops
            .iter()
            .map(|t| t.iter().filter(|(i, _)| *i == simple).count())
            .collect()
    }

    /// As `ext_dims`, split into (even, odd) maps.
    pub fn ext_dims_by_parity(&self, simple: usize) -> Vec<(usize, usize)> {
        self.tops
            .iter()
            .map(|t| {
                let even = t.iter().filter(|&&(i, p)| i == simple && p == Parity::Even).count();
                let odd = t.iter().filter(|&&(i, p)| i == simple && p == Parity::Odd).count();
                (even, odd)
            })
            .collect()
    }

    /// Exactness (by rank arithmetic, plus `d_{n-1} d_n = 0`) and minimality.
    pub fn verify(&self, cat: &RepCategory) -> Result<(), CohomologyError> {
        let bad = |what: String| Err(CohomologyError::Invariant(what));
        if !self.differentials[0].is_surjective() {
            return bad("d_0 is not surjective".into());
        }
        for (n, d) in self.differentials.iter().enumerate() {
            if !d.is_equivariant() {
                return bad(format!("d_{n} is not a module map"));
            }
        }
        for n in 1..self.differentials.len() {
            let (dn, dprev) = (&self.differentials[n], &self.differentials[n - 1]);
            let prod = dprev.matrix.mul(&dn.matrix);
            if prod.data().iter().any(|&x| x != 0) {
                return bad(format!("d_{} d_{} is not zero", n - 1, n));
            }
            let kernel_dim = self.projectives[n - 1].dim() - dprev.rank();
            if dn.rank() != kernel_dim {
                return bad(format!("homology at P_{} is nonzero", n - 1));
            }
        }
        let f = cat.field();
        for n in 1..self.differentials.len() {
            let p = &self.projectives[n - 1];
            let rad = Subspace::span(f, p.dim(), &cat.module_radical(p));
            let d = &self.differentials[n].matrix;
            for j in 0..d.cols() {
                if !rad.contains(&d.column(j)) {
                    return bad(format!("image of d_{n} leaves rad P_{}", n - 1));
                }
            }
        }
        Ok(())
    }

    /// Basis of `Hom(P_n, k)`: one functional per summand with trivial top, given by the
    /// counit on that summand's copy of `A ẽ`.
    pub fn cohomology_basis(&self, cat: &RepCategory, n: usize) -> Result<Vec<CohomologyClass>, CohomologyError> {
        let triv = cat.trivial_index().ok_or(CohomologyError::NoTrivial)?;
        let eps = cat.algebra().counit().ok_or(CohomologyError::NoTrivial)?;
        let f = cat.field();
        let tops = self.tops.get(n).ok_or(CohomologyError::Depth { degree: n, depth: self.length() })?;
        let dim = self.projectives[n].dim();
        let mut out = Vec::new();
        let mut offset = 0;
        for &(i, par) in tops {
            let s = &cat.simples()[i];
            if i == triv {
                let mut functional = vec![0u32; dim];
                for (t, w) in s.projective_basis.iter().enumerate() {
                    functional[offset + t] = f.dot(w, &eps);
                }
                out.push(CohomologyClass { degree: n, functional, parity: par });
            }
            offset += s.projective.dim();
        }
        Ok(out)
    }

    /// `Σ c_i ζ_i` over `cohomology_basis(n)`; the combination must be homogeneous.
    pub fn class_from_coords(
        &self,
        cat: &RepCategory,
        n: usize,
        coords: &[u32],
    ) -> Result<CohomologyClass, CohomologyError> {
        let basis = self.cohomology_basis(cat, n)?;
        if coords.len() != basis.len() {
            return Err(CohomologyError::Coordinates { expected: basis.len(), got: coords.len() });
        }
        let f = cat.field();
        let mut functional = vec![0u32; self.projectives[n].dim()];
        let mut parity = None;
        for (c, z) in coords.iter().zip(&basis) {
            let c = *c % f.order();
            if c == 0 {
                continue;
            }
            if parity.is_some_and(|p| p != z.parity) {
                return Err(CohomologyError::NotHomogeneous);
            }
            parity = Some(z.parity);
            f.axpy(&mut functional, c, &z.functional);
        }
        Ok(CohomologyClass { degree: n, functional, parity: parity.unwrap_or(Parity::Even) })
    }

    /// The map `Ω^n(M) → k` induced by a class: the unique `ψ` with `ψ ∘ (P_n ↠ Ω^n) = ζ`.
    pub fn induced_functional(&self, zeta: &CohomologyClass) -> Result<Vec<u32>, CohomologyError> {
        let n = zeta.degree;
        let cover = self.covers.get(n).ok_or(CohomologyError::Depth { degree: n, depth: self.length() })?;
        let ct: Matrix = cover.matrix.transpose();
        ct.solve(&zeta.functional)
            .ok_or_else(|| CohomologyError::Invariant("class does not factor through the syzygy".into()))
    }
}
