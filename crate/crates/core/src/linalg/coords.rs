use super::{Field, Matrix, Subspace};

/// A basis of a subspace together with the means to express members of the span in it.
///
/// The stored echelon rows remember which combination of the original basis vectors they
/// are, so coordinates cost one pass over the pivots.
#[derive(Clone, Debug)]
pub struct CoordinateBasis {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<u32>>,
    echelon: Vec<Vec<u32>>,
    combos: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl CoordinateBasis {
    /// Panics if the vectors are linearly dependent.
    pub fn new(field: &Field, ambient: usize, basis: Vec<Vec<u32>>) -> CoordinateBasis {
        let f = field;
        let k = basis.len();
        let mut echelon: Vec<Vec<u32>> = Vec::with_capacity(k);
        let mut combos: Vec<Vec<u32>> = Vec::with_capacity(k);
        let mut pivots: Vec<usize> = Vec::with_capacity(k);
        for (i, v) in basis.iter().enumerate() {
            assert_eq!(v.len(), ambient);
            let mut w = v.clone();
            let mut c = vec![0u32; k];
            c[i] = 1;
            for ((row, combo), &pc) in echelon.iter().zip(&combos).zip(&pivots) {
                let x = w[pc];
                if x != 0 {
                    let nx = f.neg(x);
                    f.axpy(&mut w, nx, row);
                    f.axpy(&mut c, nx, combo);
                }
            }
            let lead = w
                .iter()
                .position(|&x| x != 0)
                .expect("basis vectors must be linearly independent");
            let inv = f.inv(w[lead]);
            f.scale_in_place(&mut w, inv);
            f.scale_in_place(&mut c, inv);
            for (row, combo) in echelon.iter_mut().zip(combos.iter_mut()) {
                let x = row[lead];
                if x != 0 {
                    let nx = f.neg(x);
                    f.axpy(row, nx, &w);
                    f.axpy(combo, nx, &c);
                }
            }
            echelon.push(w);
            combos.push(c);
            pivots.push(lead);
        }
        CoordinateBasis {
            field: field.clone(),
            ambient,
            basis,
            echelon,
            combos,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<u32>> {
        self.basis
    }

    /// Coordinates of `v` if it lies in the span.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let f = &self.field;
        let mut w = v.to_vec();
        let mut out = vec![0u32; self.basis.len()];
        for ((row, combo), &pc) in self.echelon.iter().zip(&self.combos).zip(&self.pivots) {
            let x = w[pc];
            if x != 0 {
                f.axpy(&mut w, f.neg(x), row);
                f.axpy(&mut out, x, combo);
            }
        }
        if w.iter().all(|&x| x == 0) {
            Some(out)
        } else {
            None
        }
    }

    /// `Σ c_i basis_i`.
    pub fn combine(&self, coords: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut out = vec![0u32; self.ambient];
        for (v, &c) in self.basis.iter().zip(coords) {
            if c != 0 {
                f.axpy(&mut out, c, v);
            }
        }
        out
    }

    pub fn span(&self) -> Subspace {
        Subspace::span(&self.field, self.ambient, &self.basis)
    }

    /// Matrix of a linear map in this basis, given the images of the basis vectors.
    /// Returns `None` if some image leaves the span.
    pub fn matrix_of_images(&self, images: &[Vec<u32>]) -> Option<Matrix> {
        let cols: Option<Vec<Vec<u32>>> = images.iter().map(|v| self.coordinates(v)).collect();
        Some(Matrix::from_columns(&self.field, self.dim(), &cols?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let f = Field::prime(7).unwrap();
        let basis = vec![vec![1, 2, 0, 3], vec![0, 1, 1, 1], vec![2, 0, 5, 1]];
        let cb = CoordinateBasis::new(&f, 4, basis);
        let c = vec![3, 6, 2];
        let v = cb.combine(&c);
        assert_eq!(cb.coordinates(&v), Some(c));
        assert_eq!(cb.coordinates(&[0, 0, 0, 1]), None);
    }
}
