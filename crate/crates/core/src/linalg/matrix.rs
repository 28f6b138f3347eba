use std::fmt;

use super::{Field, LinalgError, Scalar};

/// Dense matrix over a finite field, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of row reduction.
pub struct Echelon {
    /// Reduced row echelon form, with the zero rows dropped.
    pub rows: Vec<Vec<u32>>,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from raw field values; every value must be a valid element of `field`.
    pub fn from_raw(field: &Field, rows: usize, cols: usize, data: Vec<u32>) -> Matrix {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&v| v < field.order()));
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Integer entries reduced into the prime subfield.
    pub fn from_i64_rows(field: &Field, rows: &[Vec<i64>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().map(|&v| field.from_i64(v)));
        }
        Matrix::from_raw(field, r, c, data)
    }

    /// Builds a matrix from scalars, rejecting entries from different fields.
    pub fn from_scalars(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Matrix, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::Shape {
                expected: (rows, cols),
                found: entries.len(),
            });
        }
        let field = match entries.first() {
            Some(s) => s.field.clone(),
            None => return Err(LinalgError::EmptyScalarList),
        };
        let mut data = Vec::with_capacity(entries.len());
        for s in entries {
            if s.field != field {
                return Err(LinalgError::FieldMismatch);
            }
            data.push(s.value);
        }
        Ok(Matrix::from_raw(&field, rows, cols, data))
    }

    pub fn from_columns(field: &Field, rows: usize, columns: &[Vec<u32>]) -> Matrix {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v;
            }
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<u32>]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Matrix::from_raw(field, rows.len(), cols, data)
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        let c = self.cols;
        &mut self.data[r * c..(r + 1) * c]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Moves the matrix to another field of the same characteristic containing every entry.
    pub fn with_field(&self, field: &Field) -> Matrix {
        assert_eq!(field.characteristic(), self.field.characteristic());
        debug_assert!(self.data.iter().all(|&v| v < field.order()));
        Matrix {
            field: field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
        }
    }

    fn same_field(&self, other: &Matrix) {
        assert!(self.field == other.field, "matrices over different fields");
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix::from_raw(f, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix::from_raw(f, self.rows, self.cols, data)
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: u32, other: &Matrix) {
        self.same_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field.clone();
        f.axpy(&mut self.data, c, &other.data);
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let mut m = self.clone();
        m.field.clone().scale_in_place(&mut m.data, c);
        m
    }

    pub fn neg(&self) -> Matrix {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.neg(a)).collect();
        Matrix::from_raw(f, self.rows, self.cols, data)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        if f.is_prime_field() {
            // accumulate in u64, reducing lazily
            let p = f.characteristic() as u64;
            let limit = u64::MAX / 2 - p * p;
            let mut acc = vec![0u64; other.cols];
            for r in 0..self.rows {
                acc.iter_mut().for_each(|x| *x = 0);
                for k in 0..self.cols {
                    let a = self.data[r * self.cols + k] as u64;
                    if a == 0 {
                        continue;
                    }
                    let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                    for (x, &b) in acc.iter_mut().zip(orow) {
                        *x += a * b as u64;
                        if *x > limit {
                            *x %= p;
                        }
                    }
                }
                for (c, x) in acc.iter().enumerate() {
                    out.data[r * other.cols + c] = (x % p) as u32;
                }
            }
        } else {
            for r in 0..self.rows {
                for k in 0..self.cols {
                    let a = self.data[r * self.cols + k];
                    if a == 0 {
                        continue;
                    }
                    let (lo, hi) = (k * other.cols, (k + 1) * other.cols);
                    let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
                    f.axpy(dst, a, &other.data[lo..hi]);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.field.dot(self.row(r), v))
            .collect()
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0; self.cols];
        for (r, &c) in v.iter().enumerate() {
            self.field.axpy(&mut out, c, self.row(r));
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Kronecker product; basis of the product ordered lexicographically, `(i, j) -> i * n + j`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        let f = &self.field;
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        let mut out = Matrix::zeros(f, r1 * r2, c1 * c2);
        for i in 0..r1 {
            for j in 0..c1 {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..r2 {
                    for l in 0..c2 {
                        let b = other.get(k, l);
                        if b != 0 {
                            out.set(i * r2 + k, j * c2 + l, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        self.same_field(other);
        let mut out = Matrix::zeros(&self.field, self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            out.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
        }
        for r in 0..other.rows {
            let c0 = self.cols;
            out.row_mut(self.rows + r)[c0..].copy_from_slice(other.row(r));
        }
        out
    }

    /// Submatrix with the given rows and columns, in the given order.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.get(r, c));
            }
        }
        out
    }

    /// Reduced row echelon form by Gaussian elimination, choosing in each column the first
    /// row with a nonzero entry as pivot.
    pub fn echelon(&self) -> Echelon {
        let f = &self.field;
        let mut work: Vec<Vec<u32>> = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for c in 0..self.cols {
            if top == work.len() {
                break;
            }
            let Some(pr) = (top..work.len()).find(|&r| work[r][c] != 0) else {
                continue;
            };
            work.swap(top, pr);
            let inv = f.inv(work[top][c]);
            f.scale_in_place(&mut work[top][c..], inv);
            let pivot_row = work[top].clone();
            for (r, row) in work.iter_mut().enumerate() {
                if r != top && row[c] != 0 {
                    let k = f.neg(row[c]);
                    f.axpy(&mut row[c..], k, &pivot_row[c..]);
                }
            }
            pivots.push(c);
            top += 1;
        }
        work.truncate(top);
        Echelon { rows: work, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Rank together with a basis of the right kernel `{v : A v = 0}`.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<u32>>) {
        let f = &self.field;
        let ech = self.echelon();
        let rank = ech.pivots.len();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let mut kernel = Vec::with_capacity(self.cols - rank);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
                v[pc] = f.neg(row[free]);
            }
            kernel.push(v);
        }
        (rank, kernel)
    }

    pub fn kernel(&self) -> Vec<Vec<u32>> {
        self.rank_and_kernel().1
    }

    /// Some `x` with `A x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let f = &self.field;
        let mut aug = Matrix::zeros(f, self.rows, self.cols + 1);
        for r in 0..self.rows {
            aug.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
            aug.set(r, self.cols, b[r]);
        }
        let ech = aug.echelon();
        if ech.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
            x[pc] = row[self.cols];
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let f = &self.field;
        let mut aug = Matrix::zeros(f, n, 2 * n);
        for r in 0..n {
            aug.row_mut(r)[..n].copy_from_slice(self.row(r));
            aug.set(r, n + r, 1);
        }
        let ech = aug.echelon();
        if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(f, n, n);
        for r in 0..n {
            inv.row_mut(r).copy_from_slice(&ech.rows[r][n..]);
        }
        Some(inv)
    }

    pub fn trace(&self) -> u32 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> Field {
        Field::prime(p).unwrap()
    }

    #[test]
    fn zero_matrix_rank_and_kernel() {
        let m = Matrix::zeros(&f(3), 3, 3);
        let (r, k) = m.rank_and_kernel();
        assert_eq!(r, 0);
        assert_eq!(k.len(), 3);
    }

    #[test]
    fn identity_rank() {
        for n in 0..6 {
            let (r, k) = Matrix::identity(&f(5), n).rank_and_kernel();
            assert_eq!(r, n);
            assert!(k.is_empty());
        }
    }

    #[test]
    fn singular_two_by_two_mod_three() {
        // det = 1*1 - 2*2 = -3 = 0 mod 3
        let a = Matrix::from_i64_rows(&f(3), &[vec![1, 2], vec![2, 1]]);
        let (r, k) = a.rank_and_kernel();
        assert_eq!(r, 1);
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(|&v| v == 0));
    }

    #[test]
    fn solve_edge_cases() {
        let fl = f(7);
        let id = Matrix::identity(&fl, 3);
        assert_eq!(id.solve(&[1, 5, 6]), Some(vec![1, 5, 6]));
        let z = Matrix::zeros(&fl, 3, 3);
        assert_eq!(z.solve(&[0, 1, 0]), None);
        assert_eq!(z.solve(&[0, 0, 0]), Some(vec![0, 0, 0]));
    }

    #[test]
    fn kronecker_identities() {
        let fl = f(5);
        assert_eq!(
            Matrix::identity(&fl, 2).kronecker(&Matrix::identity(&fl, 3)),
            Matrix::identity(&fl, 6)
        );
        let a = Matrix::from_i64_rows(&fl, &[vec![1, 2], vec![3, 4]]);
        assert!(a.kronecker(&Matrix::zeros(&fl, 2, 2)).is_zero());
    }

    #[test]
    fn mismatched_scalars_rejected() {
        let a = Scalar::new(&f(3), 1).unwrap();
        let b = Scalar::new(&f(5), 1).unwrap();
        assert!(matches!(
            Matrix::from_scalars(1, 2, vec![a.clone(), b]),
            Err(LinalgError::FieldMismatch)
        ));
        assert!(Matrix::from_scalars(1, 2, vec![a.clone(), a]).is_ok());
    }

    #[test]
    fn inverse_roundtrip() {
        let fl = Field::with_degree(3, 2).unwrap();
        let a = Matrix::from_raw(&fl, 2, 2, vec![1, 4, 7, 2]);
        if let Some(inv) = a.inverse() {
            assert_eq!(a.mul(&inv), Matrix::identity(&fl, 2));
        } else {
            assert_eq!(a.rank(), 1);
        }
    }
}
