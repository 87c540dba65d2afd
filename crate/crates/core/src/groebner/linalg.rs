use std::fmt;
use std::ops::Mul;

use crate::groebner::UniPoly;
use crate::scalar::Scalar;

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// The submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut out = Self::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                out.set(i, j, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        (0..e).fold(Self::identity(self.rows), |acc, _| &acc * self)
    }

    /// Row echelon form by exact Gaussian elimination; returns the rank.
    pub fn rank(&self) -> usize {
        self.echelon().1
    }

    fn echelon(&self) -> (Matrix<F>, usize, bool) {
        let mut m = self.clone();
        let mut rank = 0;
        let mut odd_swaps = false;
        for col in 0..m.cols {
            let Some(p) = (rank..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != rank {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, rank * m.cols + c);
                }
                odd_swaps = !odd_swaps;
            }
            let pivot = m.get(rank, col).clone();
            for r in rank + 1..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone() / &pivot;
                for c in col..m.cols {
                    let sub = m.get(rank, c).clone() * &factor;
                    let v = m.get(r, c).clone() - sub;
                    m.set(r, c, v);
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        (m, rank, odd_swaps)
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let (m, rank, odd) = self.echelon();
        if rank < self.rows {
            return F::zero();
        }
        let mut det = (0..self.rows).fold(F::one(), |acc, i| acc * m.get(i, i));
        if odd {
            det = -det;
        }
        det
    }

    /// Characteristic polynomial `det(x·I − A)` by Berkowitz's
    /// division-free recursion over leading principal submatrices.
    pub fn char_poly(&self) -> UniPoly<F> {
        assert!(
            self.is_square(),
            "characteristic polynomial of a non-square matrix"
        );
        let n = self.rows;
        // Coefficients listed from the highest degree down.
        let mut poly: Vec<F> = vec![F::one()];
        for r in 1..=n {
            let k = r - 1;
            let a = self.get(k, k).clone();
            // toeplitz = [1, −a, −R·C, −R·A·C, …, −R·A^{r−2}·C]
            let mut toeplitz = Vec::with_capacity(r + 1);
            toeplitz.push(F::one());
            toeplitz.push(-a);
            let mut v: Vec<F> = (0..k).map(|i| self.get(i, k).clone()).collect();
            for step in 0..k {
                let rc = (0..k).fold(F::zero(), |acc, j| acc + self.get(k, j).clone() * &v[j]);
                toeplitz.push(-rc);
                if step + 1 < k {
                    v = (0..k)
                        .map(|i| {
                            (0..k).fold(F::zero(), |acc, j| acc + self.get(i, j).clone() * &v[j])
                        })
                        .collect();
                }
            }
            let mut next = vec![F::zero(); r + 1];
            for (col, p) in poly.iter().enumerate() {
                for (row, t) in toeplitz.iter().enumerate().take(r + 1 - col) {
                    next[row + col] += t.clone() * p;
                }
            }
            poly = next;
        }
        poly.reverse();
        UniPoly::new(poly)
    }
}

impl<F: Scalar> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a.clone() * b;
                    }
                }
            }
        }
        out
    }
}

impl<F: Scalar> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        f.write_str("]")
    }
}
