use serde::{Deserialize, Serialize};

use super::domain::EuclideanDomain;

/// Dense row-major matrix; rows are stored separately so row operations
/// can run in parallel.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<E>>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, z: E) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![vec![z; cols]; rows],
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i][j] = v;
    }

    pub fn transpose(&self) -> Self {
        let data = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.data[i][j].clone()).collect())
            .collect();
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.data[i][j].clone()).collect()
    }

    pub fn map<F, T: Clone>(&self, f: F) -> Matrix<T>
    where
        F: Fn(&E) -> T,
    {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: perm.iter().map(|&i| self.data[i].clone()).collect(),
        }
    }

    pub fn permute_cols(&self, perm: &[usize]) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .map(|r| perm.iter().map(|&j| r[j].clone()).collect())
                .collect(),
        }
    }
}

pub fn identity<D: EuclideanDomain>(d: &D, n: usize) -> Matrix<D::Elem> {
    let mut m = Matrix::filled(n, n, d.zero());
    for i in 0..n {
        m.data[i][i] = d.one();
    }
    m
}

pub fn mat_mul<D: EuclideanDomain>(
    d: &D,
    a: &Matrix<D::Elem>,
    b: &Matrix<D::Elem>,
) -> Matrix<D::Elem> {
    assert_eq!(a.cols, b.rows, "dimension mismatch");
    let mut out = Matrix::filled(a.rows, b.cols, d.zero());
    for i in 0..a.rows {
        for (k, aik) in a.data[i].iter().enumerate() {
            if d.is_zero(aik) {
                continue;
            }
            for j in 0..b.cols {
                let bkj = &b.data[k][j];
                if !d.is_zero(bkj) {
                    out.data[i][j] = d.add(&out.data[i][j], &d.mul(aik, bkj));
                }
            }
        }
    }
    out
}

pub fn mat_vec<D: EuclideanDomain>(d: &D, a: &Matrix<D::Elem>, v: &[D::Elem]) -> Vec<D::Elem> {
    assert_eq!(a.cols, v.len(), "dimension mismatch");
    a.data
        .iter()
        .map(|row| {
            row.iter().zip(v).fold(d.zero(), |acc, (x, y)| {
                if d.is_zero(x) || d.is_zero(y) {
                    acc
                } else {
                    d.add(&acc, &d.mul(x, y))
                }
            })
        })
        .collect()
}

pub fn is_zero_matrix<D: EuclideanDomain>(d: &D, a: &Matrix<D::Elem>) -> bool {
    a.data.iter().all(|r| r.iter().all(|x| d.is_zero(x)))
}

/// Sparse matrix as `(row, col, value)` triplets sorted by column then row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SparseMatrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, E)>,
}

impl<E: Clone> SparseMatrix<E> {
    pub fn new(rows: usize, cols: usize, mut entries: Vec<(usize, usize, E)>) -> Self {
        entries.sort_by_key(|e| (e.1, e.0));
        SparseMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn transpose(&self) -> Self {
        Self::new(
            self.cols,
            self.rows,
            self.entries
                .iter()
                .map(|(i, j, v)| (*j, *i, v.clone()))
                .collect(),
        )
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn to_dense(&self, zero: E) -> Matrix<E> {
        let mut m = Matrix::filled(self.rows, self.cols, zero);
        for (i, j, v) in &self.entries {
            m.data[*i][*j] = v.clone();
        }
        m
    }

    pub fn map<F, T: Clone>(&self, f: F) -> SparseMatrix<T>
    where
        F: Fn(&E) -> T,
    {
        SparseMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|(i, j, v)| (*i, *j, f(v)))
                .collect(),
        }
    }
}
