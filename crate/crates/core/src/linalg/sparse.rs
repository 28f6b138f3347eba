use super::Field;

/// A sparse row: strictly increasing column indices with nonzero values.
pub type SparseRow = Vec<(u32, u32)>;

/// Incremental row echelon form for large sparse systems where only the rank is needed.
///
/// Rows are reduced by their leading entry against stored pivot rows (leading coefficient 1).
/// The stored form is echelon but not reduced, which keeps fill-in proportional to the rows
/// actually touched.
pub struct SparseEchelon {
    field: Field,
    ncols: usize,
    pivot_of_col: Vec<u32>,
    rows: Vec<SparseRow>,
}

const NONE: u32 = u32::MAX;

impl SparseEchelon {
    pub fn new(field: &Field, ncols: usize) -> SparseEchelon {
        SparseEchelon {
            field: field.clone(),
            ncols,
            pivot_of_col: vec![NONE; ncols],
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// `a - c * b` for sparse rows.
    fn sub_scaled(&self, a: &[(u32, u32)], c: u32, b: &[(u32, u32)]) -> SparseRow {
        let f = &self.field;
        let nc = f.neg(c);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
            let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
            if take_a {
                out.push(a[i]);
                i += 1;
            } else if take_b {
                out.push((b[j].0, f.mul(nc, b[j].1)));
                j += 1;
            } else {
                let v = f.add(a[i].1, f.mul(nc, b[j].1));
                if v != 0 {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
        out
    }

    /// Inserts a row (entries need not be sorted; zero values are dropped, repeated columns
    /// summed). Returns whether the rank grew.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.sort_unstable_by_key(|e| e.0);
        let f = self.field.clone();
        let mut merged: SparseRow = Vec::with_capacity(row.len());
        for (c, v) in row {
            match merged.last_mut() {
                Some(last) if last.0 == c => last.1 = f.add(last.1, v),
                _ => merged.push((c, v)),
            }
        }
        merged.retain(|e| e.1 != 0);
        let mut row = merged;
        while let Some(&(lead, val)) = row.first() {
            let pr = self.pivot_of_col[lead as usize];
            if pr == NONE {
                let inv = f.inv(val);
                for e in row.iter_mut() {
                    e.1 = f.mul(e.1, inv);
                }
                self.pivot_of_col[lead as usize] = self.rows.len() as u32;
                self.rows.push(row);
                return true;
            }
            let pivot = &self.rows[pr as usize];
            row = self.sub_scaled(&row, val, pivot);
        }
        false
    }
}
