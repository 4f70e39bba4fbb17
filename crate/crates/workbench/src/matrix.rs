//! Dense exact rational matrices with deterministic earliest-column pivoting.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{rone, rzero, Rat};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>, // row-major
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![rzero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, rone());
        }
        m
    }

    /// Builds from integer rows; panics on ragged input.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut m = Mat::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, crate::rational::rint(*v));
            }
        }
        m
    }

    pub fn from_columns(rows: usize, cols: &[Vec<Rat>]) -> Self {
        let mut m = Mat::zeros(rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rat>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in mul");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).clone();
                    out.set(i, j, cur + a * b);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        let mut out = vec![rzero(); self.rows];
        for i in 0..self.rows {
            let mut acc = rzero();
            for j in 0..self.cols {
                let a = self.get(i, j);
                if !a.is_zero() && !v[j].is_zero() {
                    acc += a * &v[j];
                }
            }
            out[i] = acc;
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a -= b;
        }
        out
    }

    pub fn neg(&self) -> Mat {
        self.scale(&-rone())
    }

    pub fn scale(&self, s: &Rat) -> Mat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= s;
        }
        out
    }

    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        let mut out = Mat::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Reduced row echelon form; pivots are chosen in the earliest columns.
    /// Returns the reduced matrix and the pivot column indices.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            // first nonzero entry in this column at or below `row`
            let Some(p) = (row..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..m.cols {
                    let a = m.get(row, j).clone();
                    let b = m.get(p, j).clone();
                    m.set(row, j, b);
                    m.set(p, j, a);
                }
            }
            let inv = {
                let piv = m.get(row, col).clone();
                rone() / piv
            };
            for j in 0..m.cols {
                let v = m.get(row, j).clone() * &inv;
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i != row && !m.get(i, col).is_zero() {
                    let f = m.get(i, col).clone();
                    for j in 0..m.cols {
                        let v = m.get(i, j).clone() - &f * m.get(row, j);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the (right) nullspace, as columns; deterministic: free
    /// variables are set to 1 one at a time, in increasing column order.
    pub fn nullspace(&self) -> Mat {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|j| !pivot_set.contains(j)).collect();
        let mut basis = Mat::zeros(self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, rone());
            for (prow, &pcol) in pivots.iter().enumerate() {
                let v = -r.get(prow, f).clone();
                basis.set(pcol, k, v);
            }
        }
        basis
    }

    /// Deterministic basis of the column space: the pivot columns of the
    /// original matrix (earliest columns first).
    pub fn column_space_basis(&self) -> Mat {
        let (_, pivots) = self.rref();
        let cols: Vec<Vec<Rat>> = pivots.iter().map(|&j| self.column(j)).collect();
        Mat::from_columns(self.rows, &cols)
    }

    /// Solves `self * x = b` for a particular solution (free variables zero).
    pub fn solve(&self, b: &[Rat]) -> Result<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let bm = Mat::from_columns(self.rows, &[b.to_vec()]);
        let aug = self.hstack(&bm);
        let (r, pivots) = aug.rref();
        // inconsistent iff the last column is a pivot
        if pivots.contains(&self.cols) {
            return Err(Error::NoSolution);
        }
        let mut x = vec![rzero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = r.get(prow, self.cols).clone();
        }
        Ok(x)
    }

    /// Solves `self * X = B` columnwise.
    pub fn solve_mat(&self, b: &Mat) -> Result<Mat> {
        assert_eq!(b.rows(), self.rows);
        let mut cols = Vec::new();
        for j in 0..b.cols() {
            cols.push(self.solve(&b.column(j))?);
        }
        Ok(Mat::from_columns(self.cols, &cols))
    }

    /// Indices of columns of `cand` (relative to `cand`) that extend the
    /// column space of `self` to the joint column space, chosen greedily in
    /// increasing order.
    pub fn extending_columns(&self, cand: &Mat) -> Vec<usize> {
        assert_eq!(self.rows, cand.rows);
        let joint = self.hstack(cand);
        let (_, pivots) = joint.rref();
        pivots
            .into_iter()
            .filter(|&j| j >= self.cols)
            .map(|j| j - self.cols)
            .collect()
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Mat> {
        assert_eq!(self.rows, self.cols);
        let aug = self.hstack(&Mat::identity(self.rows));
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::NoSolution);
        }
        let mut inv = Mat::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in 0..self.rows {
                inv.set(i, j, r.get(i, self.rows + j).clone());
            }
        }
        Ok(inv)
    }

    pub fn pow(&self, k: usize) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut acc = Mat::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Subquotient `span(z) / span(b)` of an ambient space, with deterministic
/// representatives and a projection onto class coordinates.
///
/// `z` and `b` are matrices whose columns span the subspace and the
/// sub-subspace; the columns of `b` must lie in the span of `z`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    /// Ambient dimension.
    pub ambient_dim: usize,
    /// Basis of the denominator subspace (columns).
    pub denominator: Mat,
    /// Chosen class representatives (columns), extending the denominator
    /// inside the numerator by earliest-column pivoting.
    pub reps: Mat,
}

impl Subquotient {
    pub fn new(z: &Mat, b: &Mat) -> Self {
        assert_eq!(z.rows(), b.rows());
        let bb = b.column_space_basis();
        let picked = bb.extending_columns(z);
        let cols: Vec<Vec<Rat>> = picked.iter().map(|&j| z.column(j)).collect();
        Subquotient {
            ambient_dim: z.rows(),
            denominator: bb,
            reps: Mat::from_columns(z.rows(), &cols),
        }
    }

    pub fn dim(&self) -> usize {
        self.reps.cols()
    }

    /// Class coordinates of a vector of the numerator subspace.
    /// Fails when the vector is not in `span(b) + span(reps)`.
    pub fn project(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        let joint = self.denominator.hstack(&self.reps);
        let x = joint.solve(v)?;
        Ok(x[self.denominator.cols()..].to_vec())
    }

    /// Representative vector of a class given by coordinates.
    pub fn representative(&self, coords: &[Rat]) -> Vec<Rat> {
        self.reps.mul_vec(coords)
    }
}
