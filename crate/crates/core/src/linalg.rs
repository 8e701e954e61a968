//! Dense row-major matrices over a [`Field`], with Gauss-Jordan elimination.

use crate::galois::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            data.extend_from_slice(r);
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Reduces in place to reduced row echelon form, drops zero rows, and
    /// returns the pivot columns.
    pub fn rref(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        let cols = self.cols;
        for c in 0..cols {
            if lead >= self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            if pr != lead {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, lead * cols + j);
                }
            }
            let inv = f.inv(self.get(lead, c)).expect("pivot is nonzero");
            if inv != 1 {
                for j in c..cols {
                    let v = self.get(lead, j);
                    self.set(lead, j, f.mul(v, inv));
                }
            }
            let pivot_row: Vec<u32> = self.row(lead)[c..].to_vec();
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self.get(r, c);
                if factor == 0 {
                    continue;
                }
                let nf = f.neg(factor);
                let base = r * cols;
                for (off, &pv) in pivot_row.iter().enumerate() {
                    if pv != 0 {
                        let idx = base + c + off;
                        self.data[idx] = f.add(self.data[idx], f.mul(nf, pv));
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        self.rows = pivots.len();
        self.data.truncate(self.rows * cols);
        pivots
    }

    pub fn rank(&self, f: &Field) -> usize {
        let mut m = self.clone();
        m.rref(f).len()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self, f: &Field) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, n + r, 1);
        }
        let pivots = aug.rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, aug.get(r, n + c));
            }
        }
        Some(inv)
    }

    pub fn mul(&self, other: &Matrix, f: &Field) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        out
    }
}

/// Dot product under the standard bilinear form.
pub fn dot(a: &[u32], b: &[u32], f: &Field) -> u32 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `acc += s * v`
pub fn axpy(acc: &mut [u32], s: u32, v: &[u32], f: &Field) {
    if s == 0 {
        return;
    }
    for (a, &x) in acc.iter_mut().zip(v) {
        if x != 0 {
            *a = f.add(*a, f.mul(s, x));
        }
    }
}

pub fn weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::build_field;

    #[test]
    fn rref_drops_dependent_rows() {
        let f = build_field(3, 1).unwrap();
        let mut m = Matrix::from_rows(&[vec![1, 2, 0], vec![2, 1, 0], vec![0, 0, 1]], 3);
        let piv = m.rref(&f);
        assert_eq!(piv, vec![0, 2]);
        assert_eq!(m.to_rows(), vec![vec![1, 2, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn inverse_round_trip_gf16() {
        let f = build_field(2, 4).unwrap();
        let w = f.generator();
        let m = Matrix::from_rows(&[vec![1, w, 0], vec![0, 1, f.mul(w, w)], vec![w, 0, 1]], 3);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&inv, &f), Matrix::identity(3));
        let singular = Matrix::from_rows(&[vec![1, w], vec![1, w]], 2);
        assert!(singular.inverse(&f).is_none());
    }
}
