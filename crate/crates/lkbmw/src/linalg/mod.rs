//! Dense exact linear algebra over Q(l, r).
//!
//! Determinants are computed by fraction-free (Bareiss) elimination on a
//! common-denominator lift; kernels, inverses and linear solving run reduced
//! row echelon elimination with structural pivot selection.  Matrices whose
//! entries are all rational constants dispatch to a plain big-rational
//! elimination.

mod elim;
mod subspace;

pub use subspace::Subspace;

use std::fmt;
use std::ops::Mul;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::exact::{LaurentPoly, RatFunc};
use elim::{kernel_basis, rref_in_place, solve_particular};

/// Dense row-major matrix over Q(l, r).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<RatFunc>,
}

impl Matrix {
    /// The zero matrix of the given shape.
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![RatFunc::zero(); rows * cols],
        }
    }

    /// The identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, RatFunc::one());
        }
        m
    }

    /// Builds a matrix from a function of `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RatFunc) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Builds a matrix from row vectors; all rows must share a length.
    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self {
            rows: nrows,
            cols: ncols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Entry at `(row, col)`.
    pub fn at(&self, row: usize, col: usize) -> &RatFunc {
        &self.entries[row * self.cols + col]
    }

    /// Replaces the entry at `(row, col)`.
    pub fn set(&mut self, row: usize, col: usize, value: RatFunc) {
        self.entries[row * self.cols + col] = value;
    }

    /// The rows as vectors.
    pub fn to_row_vecs(&self) -> Vec<Vec<RatFunc>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).clone()).collect())
            .collect()
    }

    /// Column `col` as a vector.
    pub fn col_vec(&self, col: usize) -> Vec<RatFunc> {
        (0..self.rows).map(|i| self.at(i, col).clone()).collect()
    }

    /// True when every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFunc::is_zero)
    }

    /// Exact sum; errors on shape mismatch.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Exact difference; errors on shape mismatch.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Scales every entry by `c`.
    pub fn scale(&self, c: &RatFunc) -> Self {
        let entries = self.entries.iter().map(|e| e.mul(c)).collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Exact product; errors when `self.cols != other.rows`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let acc = out.at(i, j).add(&a.mul(b));
                    out.set(i, j, acc);
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product; errors when lengths mismatch.
    pub fn mul_vec(&self, v: &[RatFunc]) -> Result<Vec<RatFunc>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} by vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = vec![RatFunc::zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (j, x) in v.iter().enumerate() {
                let a = self.at(i, j);
                if !a.is_zero() && !x.is_zero() {
                    *o = o.add(&a.mul(x));
                }
            }
        }
        Ok(out)
    }

    /// The transpose.
    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Sum of the diagonal entries; errors when not square.
    pub fn trace(&self) -> Result<RatFunc> {
        self.require_square()?;
        let mut acc = RatFunc::zero();
        for i in 0..self.rows {
            acc = acc.add(self.at(i, i));
        }
        Ok(acc)
    }

    /// Exact determinant via fraction-free (Bareiss) elimination on a
    /// common-denominator lift; errors when not square.
    pub fn det(&self) -> Result<RatFunc> {
        self.require_square()?;
        if self.rows == 0 {
            return Ok(RatFunc::one());
        }
        if let Some(rows) = self.to_rational_rows() {
            return Ok(RatFunc::from_rational(&rational_det(rows)));
        }
        // Lift each row to Laurent polynomials by its denominator lcm.
        let mut lifted: Vec<Vec<LaurentPoly>> = Vec::with_capacity(self.rows);
        let mut scale = RatFunc::one();
        for i in 0..self.rows {
            let mut lcd = LaurentPoly::one();
            for j in 0..self.cols {
                lcd = lcd.lcm(self.at(i, j).denom());
            }
            let row: Vec<LaurentPoly> = (0..self.cols)
                .map(|j| {
                    let e = self.at(i, j);
                    let cof = lcd.exact_div(e.denom()).expect("lcm divisible by part");
                    e.numer().mul(&cof)
                })
                .collect();
            scale = scale.mul(&RatFunc::from_poly(lcd));
            lifted.push(row);
        }
        let d = bareiss_det(lifted);
        RatFunc::from_poly(d).div(&scale)
    }

    /// Rank via row reduction.
    pub fn rank(&self) -> usize {
        if let Some(mut rows) = self.to_rational_rows() {
            rref_in_place(&mut rows, self.cols).len()
        } else {
            let mut rows = self.to_row_vecs();
            rref_in_place(&mut rows, self.cols).len()
        }
    }

    /// Reduced basis of the right null space `{v : Av = 0}`.
    pub fn kernel(&self) -> Subspace {
        let basis = if let Some(rows) = self.to_rational_rows() {
            kernel_basis(&rows, self.cols)
                .into_iter()
                .map(|v| v.iter().map(RatFunc::from_rational).collect())
                .collect()
        } else {
            kernel_basis(&self.to_row_vecs(), self.cols)
        };
        Subspace::from_spanning(self.cols, basis)
    }

    /// A particular solution of `A x = rhs` in reduced form (free variables
    /// zero), or `None` when the system is inconsistent.  Errors when the
    /// right-hand side length differs from the row count.
    pub fn solve(&self, rhs: &[RatFunc]) -> Result<Option<Vec<RatFunc>>> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve with {} rows and rhs of length {}",
                self.rows,
                rhs.len()
            )));
        }
        if let Some(rows) = self.to_rational_rows() {
            if let Some(b) = rationals_of(rhs) {
                return Ok(solve_particular(&rows, &b, self.cols)
                    .map(|v| v.iter().map(RatFunc::from_rational).collect()));
            }
        }
        Ok(solve_particular(&self.to_row_vecs(), rhs, self.cols))
    }

    /// Exact inverse; errors when not square or singular.
    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let mut work: Vec<Vec<RatFunc>> = self
            .to_row_vecs()
            .into_iter()
            .enumerate()
            .map(|(i, mut row)| {
                for j in 0..n {
                    row.push(if i == j {
                        RatFunc::one()
                    } else {
                        RatFunc::zero()
                    });
                }
                row
            })
            .collect();
        let pivots = rref_in_place(&mut work, n);
        if pivots.len() < n {
            return Err(Error::SingularMatrix);
        }
        Ok(Self::from_fn(n, n, |i, j| work[i][n + j].clone()))
    }

    /// Applies a map to every entry.
    pub fn map_entries(&self, mut f: impl FnMut(&RatFunc) -> RatFunc) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| f(e)).collect(),
        }
    }

    /// All entries as rational constants, when they are.
    fn to_rational_rows(&self) -> Option<Vec<Vec<BigRational>>> {
        let mut out = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = Vec::with_capacity(self.cols);
            for j in 0..self.cols {
                row.push(self.at(i, j).as_rational()?);
            }
            out.push(row);
        }
        Some(out)
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn require_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "square matrix required, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        Matrix::mul(self, rhs).expect("matrix dimension mismatch")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strings: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).to_string()).collect())
            .collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| strings.iter().map(|row| row[j].len()).max().unwrap_or(0))
            .collect();
        for row in &strings {
            write!(f, "[ ")?;
            for (j, s) in row.iter().enumerate() {
                write!(f, "{:>width$} ", s, width = widths[j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Plain fraction elimination determinant for all-constant matrices.
fn rational_det(mut rows: Vec<Vec<BigRational>>) -> BigRational {
    use num_traits::{One, Zero};
    let n = rows.len();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !rows[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            rows.swap(p, k);
            det = -det;
        }
        let pivot = rows[k][k].clone();
        det *= &pivot;
        for r in k + 1..n {
            if rows[r][k].is_zero() {
                continue;
            }
            let factor = rows[r][k].clone() / pivot.clone();
            for c in k..n {
                let sub = &factor * &rows[k][c];
                rows[r][c] -= sub;
            }
        }
    }
    det
}

/// Bareiss fraction-free determinant over the Laurent polynomial ring.
fn bareiss_det(mut a: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = a.len();
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        // Structurally smallest nonzero pivot.
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in a.iter().enumerate().skip(k) {
            if !row[k].is_zero() {
                let c = row[k].num_terms();
                if best.map(|(_, bc)| c < bc).unwrap_or(true) {
                    best = Some((r, c));
                }
            }
        }
        let Some((p, _)) = best else {
            return LaurentPoly::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        if k + 1 == n {
            break;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            for j in k + 1..n {
                let t = pivot_row[k]
                    .mul(&row[j])
                    .sub(&row[k].mul(&pivot_row[j]));
                row[j] = t.exact_div(&prev).expect("Bareiss division is exact");
            }
            row[k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        d.neg()
    } else {
        d
    }
}

fn rationals_of(v: &[RatFunc]) -> Option<Vec<BigRational>> {
    v.iter().map(RatFunc::as_rational).collect()
}
