//! Field-generic Gaussian elimination.
//!
//! One implementation serves two scalar types: symbolic [`RatFunc`] entries
//! and the plain-rational fast path used when every entry is a constant
//! (numeric parameter scans call kernels hundreds of times).  Pivots are
//! chosen by structural size to limit expression swell in the symbolic case.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact::RatFunc;

/// Minimal field interface for elimination.
pub(crate) trait FieldScalar: Clone + PartialEq {
    fn f_zero() -> Self;
    fn f_one() -> Self;
    fn f_is_zero(&self) -> bool;
    fn f_sub(&self, o: &Self) -> Self;
    fn f_mul(&self, o: &Self) -> Self;
    /// Division by a nonzero element.
    fn f_div(&self, o: &Self) -> Self;
    fn f_neg(&self) -> Self;
    /// Structural size used for pivot selection (smaller is better).
    fn f_complexity(&self) -> usize;
}

impl FieldScalar for RatFunc {
    fn f_zero() -> Self {
        RatFunc::zero()
    }
    fn f_one() -> Self {
        RatFunc::one()
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn f_sub(&self, o: &Self) -> Self {
        self.sub(o)
    }
    fn f_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn f_div(&self, o: &Self) -> Self {
        self.div(o).expect("division by zero pivot")
    }
    fn f_neg(&self) -> Self {
        self.neg()
    }
    fn f_complexity(&self) -> usize {
        self.complexity()
    }
}

impl FieldScalar for BigRational {
    fn f_zero() -> Self {
        BigRational::zero()
    }
    fn f_one() -> Self {
        BigRational::one()
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn f_sub(&self, o: &Self) -> Self {
        self - o
    }
    fn f_mul(&self, o: &Self) -> Self {
        self * o
    }
    fn f_div(&self, o: &Self) -> Self {
        self / o
    }
    fn f_neg(&self) -> Self {
        -self
    }
    fn f_complexity(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

/// Reduces `rows` to reduced row echelon form in place, considering only the
/// first `pivot_cols` columns as pivot candidates (trailing columns ride
/// along, e.g. an augmented right-hand side).  Returns the pivot columns in
/// increasing order.
pub(crate) fn rref_in_place<F: FieldScalar>(rows: &mut [Vec<F>], pivot_cols: usize) -> Vec<usize> {
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..pivot_cols {
        if pivot_row >= nrows {
            break;
        }
        // Structurally smallest nonzero candidate.
        let mut best: Option<(usize, usize)> = None;
        for (r, row) in rows.iter().enumerate().skip(pivot_row) {
            if !row[col].f_is_zero() {
                let c = row[col].f_complexity();
                if best.map(|(_, bc)| c < bc).unwrap_or(true) {
                    best = Some((r, c));
                }
            }
        }
        let Some((r, _)) = best else { continue };
        rows.swap(pivot_row, r);
        let pivot = rows[pivot_row][col].clone();
        if !pivot.f_is_zero() && pivot != F::f_one() {
            for x in rows[pivot_row].iter_mut() {
                if !x.f_is_zero() {
                    *x = x.f_div(&pivot);
                }
            }
        }
        for r in 0..nrows {
            if r == pivot_row || rows[r][col].f_is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            let (head, tail) = if r < pivot_row {
                let (a, b) = rows.split_at_mut(pivot_row);
                (&mut a[r], &b[0])
            } else {
                let (a, b) = rows.split_at_mut(r);
                (&mut b[0], &a[pivot_row])
            };
            for (x, p) in head.iter_mut().zip(tail.iter()) {
                if !p.f_is_zero() {
                    *x = x.f_sub(&factor.f_mul(p));
                }
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    pivots
}

/// Basis of the right null space of the matrix given as rows over `F`.
///
/// Each basis vector has entry 1 at its free column and 0 at every other
/// free column.
pub(crate) fn kernel_basis<F: FieldScalar>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut work: Vec<Vec<F>> = rows.to_vec();
    let pivots = rref_in_place(&mut work, ncols);
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for fc in (0..ncols).filter(|c| !pivot_set[*c]) {
        let mut v = vec![F::f_zero(); ncols];
        v[fc] = F::f_one();
        for (row_idx, &pc) in pivots.iter().enumerate() {
            v[pc] = work[row_idx][fc].f_neg();
        }
        basis.push(v);
    }
    basis
}

/// A particular solution of `A x = b` with free variables set to zero, or
/// `None` when the system is inconsistent.
pub(crate) fn solve_particular<F: FieldScalar>(
    rows: &[Vec<F>],
    rhs: &[F],
    ncols: usize,
) -> Option<Vec<F>> {
    assert_eq!(rows.len(), rhs.len());
    let mut work: Vec<Vec<F>> = rows
        .iter()
        .zip(rhs.iter())
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref_in_place(&mut work, ncols);
    // A pivot row maps to a solved variable; a zero row with nonzero rhs is
    // inconsistent.
    for (idx, row) in work.iter().enumerate() {
        if idx >= pivots.len() && !row[ncols].f_is_zero() {
            return None;
        }
    }
    let mut x = vec![F::f_zero(); ncols];
    for (row_idx, &pc) in pivots.iter().enumerate() {
        x[pc] = work[row_idx][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn rref_and_kernel_of_rank_one_matrix() {
        let rows = vec![vec![q(1), q(1)], vec![q(1), q(1)]];
        let basis = kernel_basis(&rows, 2);
        assert_eq!(basis, vec![vec![q(-1), q(1)]]);
    }

    #[test]
    fn solve_underdetermined_and_inconsistent() {
        // [1 1] x = (5): particular solution (5, 0).
        let sol = solve_particular(&[vec![q(1), q(1)]], &[q(5)], 2).unwrap();
        assert_eq!(sol, vec![q(5), q(0)]);
        // [[1],[1]] x = (1,2): inconsistent.
        assert!(solve_particular(&[vec![q(1)], vec![q(1)]], &[q(1), q(2)], 1).is_none());
    }
}
