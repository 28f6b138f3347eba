use super::{Field, Matrix};

/// A subspace of `F^n` held as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Subspace {
        Subspace {
            field: field.clone(),
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Subspace {
        let mut s = Subspace::zero(field, ambient);
        for i in 0..ambient {
            let mut v = vec![0; ambient];
            v[i] = 1;
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }

    pub fn span<'a, I>(field: &Field, ambient: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = &'a Vec<u32>>,
    {
        let mut s = Subspace::zero(field, ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Echelon basis, sorted by pivot column.
    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the projection onto the echelon basis; the result is zero iff `v` lies in
    /// the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let f = &self.field;
        let mut w = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = w[pc];
            if c != 0 {
                f.axpy(&mut w, f.neg(c), row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates with respect to [`Subspace::basis`], if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let coords: Vec<u32> = self.pivots.iter().map(|&pc| v[pc]).collect();
        if self.contains(v) {
            Some(coords)
        } else {
            None
        }
    }

    /// Coordinates without the membership check.
    pub fn coordinates_unchecked(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&pc| v[pc]).collect()
    }

    /// Adds a vector; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let f = self.field.clone();
        let mut w = self.reduce(v);
        let Some(lead) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[lead]);
        f.scale_in_place(&mut w, inv);
        for row in self.rows.iter_mut() {
            let c = row[lead];
            if c != 0 {
                f.axpy(row, f.neg(c), &w);
            }
        }
        let pos = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(pos, lead);
        self.rows.insert(pos, w);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.rows {
            s.insert(v);
        }
        s
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|v| other.contains(v))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        // x in self ∩ other  <=>  x = Σ a_i s_i = Σ b_j o_j
        let f = &self.field;
        let n = self.ambient;
        let (k1, k2) = (self.dim(), other.dim());
        if k1 == 0 || k2 == 0 {
            return Subspace::zero(f, n);
        }
        let mut m = Matrix::zeros(f, n, k1 + k2);
        for (j, v) in self.rows.iter().enumerate() {
            for i in 0..n {
                m.set(i, j, v[i]);
            }
        }
        for (j, v) in other.rows.iter().enumerate() {
            for i in 0..n {
                m.set(i, k1 + j, f.neg(v[i]));
            }
        }
        let mut out = Subspace::zero(f, n);
        for kv in m.kernel() {
            let mut x = vec![0; n];
            for (j, v) in self.rows.iter().enumerate() {
                f.axpy(&mut x, kv[j], v);
            }
            out.insert(&x);
        }
        out
    }

    /// Vectors from `candidates` (in order) that extend this subspace to the span of both.
    pub fn complement_from(&self, candidates: &[Vec<u32>]) -> Vec<Vec<u32>> {
        let mut acc = self.clone();
        let mut chosen = Vec::new();
        for v in candidates {
            if acc.insert(v) {
                chosen.push(v.clone());
            }
        }
        chosen
    }

    /// Standard basis vectors completing this subspace to the whole space, in index order.
    pub fn standard_complement(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    /// Basis as the columns of an `ambient x dim` matrix.
    pub fn to_column_matrix(&self) -> Matrix {
        Matrix::from_columns(&self.field, self.ambient, &self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_coordinates() {
        let f = Field::prime(5).unwrap();
        let mut s = Subspace::zero(&f, 3);
        assert!(s.insert(&[1, 2, 3]));
        assert!(s.insert(&[0, 1, 1]));
        assert!(!s.insert(&[1, 3, 4]));
        assert_eq!(s.dim(), 2);
        let v = vec![2, 4, 1];
        let c = s.coordinates(&v).unwrap();
        let mut back = vec![0; 3];
        for (row, &x) in s.basis().iter().zip(&c) {
            f.axpy(&mut back, x, row);
        }
        assert_eq!(back, v);
        assert!(s.coordinates(&[0, 0, 1]).is_none());
    }

    #[test]
    fn intersection_dimension() {
        let f = Field::prime(3).unwrap();
        let a = Subspace::span(&f, 4, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0]]);
        let b = Subspace::span(&f, 4, &[vec![0, 1, 0, 0], vec![0, 0, 0, 1], vec![1, 0, 1, 0]]);
        let i = a.intersection(&b);
        assert_eq!(i.dim(), 2);
        assert_eq!(a.sum(&b).dim(), 4);
    }
}
