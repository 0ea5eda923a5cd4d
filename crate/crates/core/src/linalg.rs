//! Dense exact matrices over the rationals.
//!
//! Rank, kernel, and linear solving go through fraction-free (Bareiss)
//! elimination on a denominator-cleared integer copy, which keeps
//! intermediate coefficient growth bounded by minors of the input instead
//! of blowing up denominators. Everything else is straightforward dense
//! arithmetic with zero-skipping, since the boundary and operator matrices
//! this crate produces are sparse in practice.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::rational::Rational;

/// A rows × cols matrix of [`Rational`] entries, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has length {}, expected {ncols}",
                    r.len()
                )));
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_cols(cols: Vec<Vec<Rational>>) -> Result<Self, Error> {
        Ok(Matrix::from_rows(cols)?.transpose())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        debug_assert!(i < self.rows && j < self.cols);
        self.data[i * self.cols + j] = value;
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        self.check_same_shape(rhs)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        self.check_same_shape(rhs)?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    fn check_same_shape(&self, rhs: &Matrix) -> Result<(), Error> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}×{} vs {}×{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix, Error> {
        if self.cols != rhs.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}×{} by {}×{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.data[idx] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>, Error> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {}×{} matrix",
                x.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = vec![Rational::zero(); self.rows];
        for (k, xk) in x.iter().enumerate() {
            if xk.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = self.get(i, k);
                if !a.is_zero() {
                    out[i] += &(a * xk);
                }
            }
        }
        Ok(out)
    }

    /// Kth power of a square matrix.
    pub fn pow(&self, k: usize) -> Result<Matrix, Error> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "pow of non-square {}×{} matrix",
                self.rows, self.cols
            )));
        }
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Kronecker product with index convention `(i₁,i₂) ↦ i₁·dim₂ + i₂`.
    pub fn kronecker(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        let b = rhs.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i1 * rhs.rows + i2, j1 * rhs.cols + j2, a * b);
                    }
                }
            }
        }
        out
    }

    /// Exact rank over ℚ.
    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the right null space, returned as the columns of a matrix
    /// with `cols() - rank()` columns. The product `self · kernel` is
    /// exactly zero.
    pub fn kernel(&self) -> Matrix {
        let ech = self.echelon();
        let rank = ech.pivots.len();
        let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let free_cols: Vec<usize> =
            (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();

        let mut basis = Vec::with_capacity(free_cols.len());
        for &f in &free_cols {
            let mut x = vec![Rational::zero(); self.cols];
            x[f] = Rational::one();
            // Pivot columns strictly increase with row index, so a bottom-up
            // sweep only ever references already-determined coordinates.
            for t in (0..rank).rev() {
                let (row, pcol) = ech.pivots[t];
                let mut acc = Rational::zero();
                for j in (pcol + 1)..self.cols {
                    if ech.mat[row][j].is_zero() || x[j].is_zero() {
                        continue;
                    }
                    acc += &(&big_to_rat(&ech.mat[row][j]) * &x[j]);
                }
                if acc.is_zero() {
                    x[pcol] = Rational::zero();
                } else {
                    x[pcol] = (-acc)
                        .checked_div(&big_to_rat(&ech.mat[row][pcol]))
                        .expect("pivot entries are nonzero");
                }
            }
            basis.push(x);
        }
        if basis.is_empty() {
            return Matrix::zeros(self.cols, 0);
        }
        Matrix::from_cols(basis).expect("kernel columns share the ambient dimension")
    }

    /// Solves `self · X = rhs` exactly, returning one solution (free
    /// variables set to zero) or `None` when the system is inconsistent.
    pub fn solve_multi(&self, rhs: &Matrix) -> Result<Option<Matrix>, Error> {
        if rhs.rows != self.rows {
            return Err(Error::ShapeMismatch(format!(
                "solve: {} equations vs rhs with {} rows",
                self.rows, rhs.rows
            )));
        }
        let mut aug = Matrix::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                aug.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        let ech = aug.echelon();
        if ech.pivots.iter().any(|&(_, c)| c >= self.cols) {
            return Ok(None);
        }
        let rank = ech.pivots.len();
        let mut out = Matrix::zeros(self.cols, rhs.cols);
        for b in 0..rhs.cols {
            let bcol = self.cols + b;
            for t in (0..rank).rev() {
                let (row, pcol) = ech.pivots[t];
                let mut acc = big_to_rat(&ech.mat[row][bcol]);
                for j in (pcol + 1)..self.cols {
                    if ech.mat[row][j].is_zero() {
                        continue;
                    }
                    let xj = out.get(j, b);
                    if !xj.is_zero() {
                        acc -= &(&big_to_rat(&ech.mat[row][j]) * xj);
                    }
                }
                let x = acc
                    .checked_div(&big_to_rat(&ech.mat[row][pcol]))
                    .expect("pivot entries are nonzero");
                out.set(pcol, b, x);
            }
        }
        Ok(Some(out))
    }

    pub fn solve(&self, b: &[Rational]) -> Result<Option<Vec<Rational>>, Error> {
        let rhs = Matrix::from_cols(vec![b.to_vec()])?;
        Ok(self.solve_multi(&rhs)?.map(|x| x.col(0)))
    }

    /// Exact inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Result<Option<Matrix>, Error> {
        if !self.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "inverse of non-square {}×{} matrix",
                self.rows, self.cols
            )));
        }
        self.solve_multi(&Matrix::identity(self.rows))
    }

    /// Fraction-free echelon form of a denominator-cleared integer copy.
    /// Row scaling by positive integers changes neither rank nor kernel.
    fn echelon(&self) -> Echelon {
        let mut mat: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let lcm = row
                    .iter()
                    .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
                row.iter()
                    .map(|r| r.numer() * (&lcm / r.denom()))
                    .collect()
            })
            .collect();

        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r >= self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !mat[i][c].is_zero()) else {
                continue;
            };
            mat.swap(r, p);
            for i in (r + 1)..self.rows {
                for j in (c + 1)..self.cols {
                    // Bareiss one-step rule: division by the previous pivot
                    // is exact.
                    let t = (&mat[r][c] * &mat[i][j] - &mat[i][c] * &mat[r][j]) / &prev;
                    mat[i][j] = t;
                }
                mat[i][c] = BigInt::zero();
            }
            prev = mat[r][c].clone();
            pivots.push((r, c));
            r += 1;
        }
        Echelon { mat, pivots }
    }
}

struct Echelon {
    mat: Vec<Vec<BigInt>>,
    pivots: Vec<(usize, usize)>,
}

fn big_to_rat(n: &BigInt) -> Rational {
    Rational::new(n.clone(), BigInt::one()).expect("unit denominator")
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}×{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|r| r.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// True when every coordinate is zero.
pub fn vec_is_zero(v: &[Rational]) -> bool {
    v.iter().all(Rational::is_zero)
}

/// `dst += c · src`, coordinatewise.
pub fn vec_add_scaled(dst: &mut [Rational], src: &[Rational], c: &Rational) {
    debug_assert_eq!(dst.len(), src.len());
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += &(s * c);
        }
    }
}
