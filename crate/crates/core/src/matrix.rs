//! Dense row-major matrices over a [`Field`], with Gauss–Jordan elimination.

use std::fmt;

use crate::gf::Field;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(cols: usize, rows: &[Vec<u16>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend_from_slice(r);
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u16 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u16) {
        self.data[r * self.cols + c] = v;
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u16] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u16] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[u16]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn push_row(&mut self, row: &[u16]) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (head, tail) = self.data.split_at_mut(hi * self.cols);
        head[lo * self.cols..(lo + 1) * self.cols].swap_with_slice(&mut tail[..self.cols]);
    }

    /// Columns `cols` of every row, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.data[r * cols.len() + j] = self.get(r, c);
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.data[c * self.rows + r] = self.get(r, c);
            }
        }
        out
    }

    pub fn mul_vec(&self, field: &Field, v: &[u16]) -> Vec<u16> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        self.iter_rows().map(|row| field.dot(row, v)).collect()
    }

    /// Reduces in place to reduced row-echelon form, dropping zero rows.
    /// Returns the pivot columns.
    pub fn rref(&mut self, field: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        let mut pivot_row = vec![0u16; self.cols];
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = field.inv(self.get(r, c)).expect("pivot is nonzero");
            field.scale(&mut self.row_mut(r)[c..], inv);
            pivot_row[c..].copy_from_slice(&self.row(r)[c..]);
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let coef = self.get(i, c);
                if coef != 0 {
                    let neg = field.neg(coef);
                    field.axpy(&mut self.row_mut(i)[c..], neg, &pivot_row[c..]);
                }
            }
            pivots.push(c);
            r += 1;
        }
        self.data.truncate(r * self.cols);
        self.rows = r;
        pivots
    }

    /// Rank by forward elimination only (no back-substitution).
    pub fn rank(&self, field: &Field) -> usize {
        let mut m = self.clone();
        m.forward_eliminate(field)
    }

    fn forward_eliminate(&mut self, field: &Field) -> usize {
        let mut r = 0;
        let mut pivot_row = vec![0u16; self.cols];
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = field.inv(self.get(r, c)).expect("pivot is nonzero");
            field.scale(&mut self.row_mut(r)[c..], inv);
            pivot_row[c..].copy_from_slice(&self.row(r)[c..]);
            for i in r + 1..self.rows {
                let coef = self.get(i, c);
                if coef != 0 {
                    let neg = field.neg(coef);
                    field.axpy(&mut self.row_mut(i)[c..], neg, &pivot_row[c..]);
                }
            }
            r += 1;
        }
        r
    }

    /// Basis of `{ w : M w = 0 }` read off an RREF matrix and its pivots.
    /// The result is not itself reduced.
    pub fn nullspace_of_rref(&self, field: &Field, pivots: &[usize]) -> Matrix {
        let mut is_pivot = vec![false; self.cols];
        for &p in pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut out = Matrix::zeros(free.len(), self.cols);
        for (k, &f) in free.iter().enumerate() {
            out.set(k, f, 1);
            for (i, &p) in pivots.iter().enumerate() {
                out.set(k, p, field.neg(self.get(i, f)));
            }
        }
        out
    }

    /// Reduces `v` against an RREF matrix: the result is the canonical
    /// representative of `v` modulo the row space, zero iff `v` lies in it.
    pub fn reduce_vector(&self, field: &Field, pivots: &[usize], v: &mut [u16]) {
        for (i, &p) in pivots.iter().enumerate() {
            let coef = v[p];
            if coef != 0 {
                field.axpy(v, field.neg(coef), self.row(i));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_small_gf3() {
        let f = Field::new(3, 1).unwrap();
        let mut m = Matrix::from_rows(3, &[vec![1, 2, 0], vec![2, 1, 0], vec![0, 1, 1]]);
        let piv = m.rref(&f);
        // Row 2 is 2 * row 1, so the rank is 2.
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(m.row(0), &[1, 0, 1]);
        assert_eq!(m.row(1), &[0, 1, 1]);
        assert_eq!(m.rank(&f), 2);
    }

    #[test]
    fn nullspace_is_orthogonal() {
        let f = Field::new(2, 2).unwrap();
        let mut m = Matrix::from_rows(4, &[vec![1, 2, 3, 0], vec![0, 1, 1, 1]]);
        let piv = m.rref(&f);
        let ns = m.nullspace_of_rref(&f, &piv);
        assert_eq!(ns.rows(), 2);
        for w in ns.iter_rows() {
            assert!(m.mul_vec(&f, w).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn reduce_vector_detects_membership() {
        let f = Field::new(5, 1).unwrap();
        let mut m = Matrix::from_rows(3, &[vec![1, 1, 1]]);
        let piv = m.rref(&f);
        let mut v = vec![3, 3, 3];
        m.reduce_vector(&f, &piv, &mut v);
        assert_eq!(v, vec![0, 0, 0]);
        let mut w = vec![3, 4, 3];
        m.reduce_vector(&f, &piv, &mut w);
        assert_eq!(w, vec![0, 1, 0]);
    }

    #[test]
    fn swap_and_transpose() {
        let mut m = Matrix::from_rows(2, &[vec![1, 2], vec![3, 4], vec![5, 6]]);
        m.swap_rows(0, 2);
        assert_eq!(m.row(0), &[5, 6]);
        let t = m.transpose();
        assert_eq!(t.row(1), &[6, 4, 2]);
        assert_eq!(Matrix::identity(2).row(1), &[0, 1]);
    }
}
