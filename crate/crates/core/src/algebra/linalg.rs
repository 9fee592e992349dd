//! Dense exact linear algebra over the rationals.

use num_traits::{One, Zero};

use super::rational::{bit_size, is_unit, Rational};

/// A dense matrix stored row-major. For the matrix of a linear map the
/// columns are the images of the source basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<Rational>>,
}

impl Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Matrix {
            nrows,
            ncols,
            rows: vec![vec![Rational::zero(); ncols]; nrows],
        }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(nrows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(nrows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), nrows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                m.rows[i][j] = v.clone();
            }
        }
        m
    }

    pub fn from_rows(ncols: usize, rows: Vec<Vec<Rational>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "row length mismatch");
        Matrix {
            nrows: rows.len(),
            ncols,
            rows,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Rational>> {
        (0..self.ncols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().flatten().all(Zero::is_zero)
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        Echelon::new(self.ncols, self.rows.clone()).rank()
    }

    /// Basis of the kernel, one vector per free column of the reduced row
    /// echelon form. Each vector has a 1 in its own free column and zeros in
    /// the other free columns.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let ech = Echelon::new(self.ncols, self.rows.clone());
        ech.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec![Rational::zero(); self.ncols];
                v[f] = Rational::one();
                for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect()
    }

    /// A solution of `self * x = rhs` with every free variable set to zero,
    /// or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(rhs.len(), self.nrows, "right-hand side length mismatch");
        let augmented: Vec<Vec<Rational>> = self
            .rows
            .iter()
            .zip(rhs)
            .map(|(row, b)| {
                let mut r = row.clone();
                r.push(b.clone());
                r
            })
            .collect();
        let ech = Echelon::new(self.ncols + 1, augmented);
        if ech.pivots.contains(&self.ncols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.ncols];
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            x[p] = row[self.ncols].clone();
        }
        Some(x)
    }
}

/// Reduced row echelon form of a set of row vectors.
///
/// Pivots are taken in column order, so columns listed first are eliminated
/// first. Among the candidate rows for a pivot the entry with the fewest
/// bits is chosen, which keeps intermediate fractions small; the reduced
/// form itself does not depend on that choice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(ncols: usize, mut rows: Vec<Vec<Rational>>) -> Self {
        rows.retain(|r| r.iter().any(|v| !v.is_zero()));
        let mut pivots = Vec::new();
        let mut top = 0;
        for col in 0..ncols {
            if top == rows.len() {
                break;
            }
            let Some(best) = (top..rows.len())
                .filter(|&r| !rows[r][col].is_zero())
                .min_by_key(|&r| (!is_unit(&rows[r][col]), bit_size(&rows[r][col]), r))
            else {
                continue;
            };
            rows.swap(top, best);
            let inv = Rational::one() / &rows[top][col];
            if !inv.is_one() {
                for v in rows[top].iter_mut().skip(col) {
                    *v *= &inv;
                }
            }
            let pivot_row = rows[top].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == top || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !p.is_zero() {
                        *v -= &factor * p;
                    }
                }
            }
            pivots.push(col);
            top += 1;
        }
        rows.truncate(top);
        Echelon { ncols, rows, pivots }
    }

    pub fn empty(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Subtracts multiples of the rows so that every pivot entry of `v`
    /// becomes zero. The result is congruent to `v` modulo the row span.
    pub fn reduce(&self, v: &mut [Rational]) {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let factor = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x -= &factor * r;
                }
            }
        }
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }
}
