//! Dense and column-sparse integer matrices over arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        let data = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        Matrix { rows: rows.len(), cols, data }
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Panics on a shape mismatch.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "vector length does not match");
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Matrix {
        let mut out = Matrix::zeros(r1 - r0, c1 - c0);
        for i in r0..r1 {
            for j in c0..c1 {
                out.set(i - r0, j - c0, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// `row[dst] += k * row[src]`.
    pub fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * k;
            if !v.is_zero() {
                self.data[dst * self.cols + j] += v;
            }
        }
    }

    /// `col[dst] += k * col[src]`.
    pub fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * k;
            if !v.is_zero() {
                self.data[i * self.cols + dst] += v;
            }
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = &mut self.data[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let v = &mut self.data[i * self.cols + j];
            *v = -std::mem::take(v);
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Panics unless square.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)).div_floor(&prev);
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1).clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        let columns = (0..self.cols)
            .map(|j| (0..self.rows).filter_map(|i| nonzero(i, self.get(i, j))).collect())
            .collect();
        SparseMatrix { rows: self.rows, cols: self.cols, columns }
    }
}

fn nonzero(i: usize, v: &BigInt) -> Option<(usize, BigInt)> {
    (!v.is_zero()).then(|| (i, v.clone()))
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}", self.rows, self.cols)?;
        f.debug_list().entries((0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect::<Vec<_>>())).finish()
    }
}

/// A column-sparse integer matrix; each column lists its nonzero entries by increasing row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix { rows: n, cols: n, columns: (0..n).map(|i| vec![(i, BigInt::one())]).collect() }
    }

    /// Builds from per-column entry lists; repeated rows are summed and zeros dropped.
    /// Panics on an out-of-range row.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, BigInt)>>) -> Self {
        let cols = columns.len();
        let columns = columns.into_iter().map(|c| canonical(c, rows)).collect();
        SparseMatrix { rows, cols, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, BigInt)] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[Vec<(usize, BigInt)>] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.columns[j].iter().find(|(r, _)| *r == i).map_or_else(BigInt::zero, |(_, v)| v.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                m.set(*i, j, v.clone());
            }
        }
        m
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut columns = vec![Vec::new(); self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                columns[*i].push((j, v.clone()));
            }
        }
        SparseMatrix { rows: self.cols, cols: self.rows, columns }
    }

    /// Panics on a shape mismatch.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc = Vec::new();
                for (k, b) in col {
                    acc.extend(self.columns[*k].iter().map(|(i, a)| (*i, a * b)));
                }
                canonical(acc, self.rows)
            })
            .collect();
        SparseMatrix { rows: self.rows, cols: other.cols, columns }
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "vector length does not match");
        let mut out = vec![BigInt::zero(); self.rows];
        for (col, x) in self.columns.iter().zip(v) {
            if x.is_zero() {
                continue;
            }
            for (i, a) in col {
                out[*i] += a * x;
            }
        }
        out
    }

    pub fn neg(&self) -> SparseMatrix {
        let columns = self.columns.iter().map(|c| c.iter().map(|(i, v)| (*i, -v)).collect()).collect();
        SparseMatrix { rows: self.rows, cols: self.cols, columns }
    }

    /// `[[a, b], [c, d]]` assembled from four blocks with matching shapes.
    pub fn block2(a: &SparseMatrix, b: &SparseMatrix, c: &SparseMatrix, d: &SparseMatrix) -> SparseMatrix {
        assert!(a.rows == b.rows && c.rows == d.rows && a.cols == c.cols && b.cols == d.cols, "block shapes");
        let top = a.rows;
        let mut columns = Vec::with_capacity(a.cols + b.cols);
        for (upper, lower) in a.columns.iter().zip(&c.columns).chain(b.columns.iter().zip(&d.columns)) {
            let mut col = upper.clone();
            col.extend(lower.iter().map(|(i, v)| (i + top, v.clone())));
            columns.push(col);
        }
        SparseMatrix { rows: a.rows + c.rows, cols: a.cols + b.cols, columns }
    }
}

fn canonical(mut col: Vec<(usize, BigInt)>, rows: usize) -> Vec<(usize, BigInt)> {
    col.sort_by_key(|(i, _)| *i);
    let mut out: Vec<(usize, BigInt)> = Vec::with_capacity(col.len());
    for (i, v) in col {
        assert!(i < rows, "row {i} out of range for {rows} rows");
        match out.last_mut() {
            Some((j, acc)) if *j == i => *acc += v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}
