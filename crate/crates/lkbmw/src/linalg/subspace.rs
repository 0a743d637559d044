//! Canonical subspaces of Q(l, r)^d.
//!
//! A [`Subspace`] stores its basis as the reduced row echelon form of any
//! spanning set, so equality of subspaces is structural comparison of bases.

use super::elim::{kernel_basis, rref_in_place};
use super::Matrix;
use crate::error::{Error, Result};
use crate::exact::RatFunc;

/// A linear subspace in reduced echelon form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    // Rows of the unique RREF of the row space; pivot columns strictly
    // increase and each pivot column is zero in every other row.
    basis: Vec<Vec<RatFunc>>,
}

impl Subspace {
    /// The zero subspace of the given ambient dimension.
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    /// The full ambient space.
    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| {
                let mut v = vec![RatFunc::zero(); ambient_dim];
                v[i] = RatFunc::one();
                v
            })
            .collect();
        Self { ambient_dim, basis }
    }

    /// The span of the given vectors, canonicalized; panics on a length
    /// mismatch with `ambient_dim`.
    pub fn from_spanning(ambient_dim: usize, vectors: Vec<Vec<RatFunc>>) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient_dim),
            "spanning vector has wrong length"
        );
        let mut rows = vectors;
        let pivots = rref_in_place(&mut rows, ambient_dim);
        rows.truncate(pivots.len());
        Self {
            ambient_dim,
            basis: rows,
        }
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// True for the zero subspace.
    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// The canonical basis vectors.
    pub fn basis(&self) -> &[Vec<RatFunc>] {
        &self.basis
    }

    /// The basis vectors as the columns of an `ambient_dim x dim` matrix.
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_fn(self.ambient_dim, self.basis.len(), |i, j| {
            self.basis[j][i].clone()
        })
    }

    /// Membership test by reduction against the echelon basis.
    pub fn contains(&self, v: &[RatFunc]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector has wrong length");
        let mut rem = v.to_vec();
        for row in &self.basis {
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("echelon rows are nonzero");
            if rem[pivot].is_zero() {
                continue;
            }
            let c = rem[pivot].clone();
            for (x, b) in rem.iter_mut().zip(row.iter()) {
                if !b.is_zero() {
                    *x = x.sub(&c.mul(b));
                }
            }
        }
        rem.iter().all(RatFunc::is_zero)
    }

    /// True when every basis vector of `other` lies in `self`.
    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Intersection of two subspaces of the same ambient space.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "intersection of subspaces of R^{} and R^{}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient_dim));
        }
        // Columns [A | -B]; kernel vectors (alpha, beta) give A*alpha.
        let ka = self.dim();
        let kb = other.dim();
        let rows: Vec<Vec<RatFunc>> = (0..self.ambient_dim)
            .map(|coord| {
                let mut row = Vec::with_capacity(ka + kb);
                for v in &self.basis {
                    row.push(v[coord].clone());
                }
                for w in &other.basis {
                    row.push(w[coord].neg());
                }
                row
            })
            .collect();
        let combos = kernel_basis(&rows, ka + kb);
        let vectors = combos
            .into_iter()
            .map(|c| {
                let mut v = vec![RatFunc::zero(); self.ambient_dim];
                for (alpha, basis_vec) in c.iter().take(ka).zip(&self.basis) {
                    if alpha.is_zero() {
                        continue;
                    }
                    for (x, b) in v.iter_mut().zip(basis_vec.iter()) {
                        *x = x.add(&alpha.mul(b));
                    }
                }
                v
            })
            .collect();
        Ok(Self::from_spanning(self.ambient_dim, vectors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> Vec<RatFunc> {
        let mut v = vec![RatFunc::zero(); n];
        v[i] = RatFunc::one();
        v
    }

    #[test]
    fn canonical_form_is_order_independent() {
        let a = Subspace::from_spanning(3, vec![e(3, 0), e(3, 1)]);
        let mut sum = e(3, 0);
        sum[1] = RatFunc::from_int(5);
        let b = Subspace::from_spanning(3, vec![e(3, 1), sum]);
        assert_eq!(a, b);
    }

    #[test]
    fn intersection_examples() {
        let a = Subspace::from_spanning(2, vec![e(2, 0)]);
        let b = Subspace::from_spanning(2, vec![e(2, 1)]);
        assert!(a.intersect(&b).unwrap().is_zero());
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn intersection_is_commutative_and_finds_common_line() {
        let mut diag = e(3, 0);
        diag[1] = RatFunc::one();
        let a = Subspace::from_spanning(3, vec![e(3, 0), e(3, 1)]);
        let b = Subspace::from_spanning(3, vec![diag.clone(), e(3, 2)]);
        let ab = a.intersect(&b).unwrap();
        let ba = b.intersect(&a).unwrap();
        assert_eq!(ab, ba);
        assert_eq!(ab.dim(), 1);
        assert!(ab.contains(&diag));
    }

    #[test]
    fn membership() {
        let s = Subspace::from_spanning(3, vec![e(3, 0), e(3, 2)]);
        assert!(s.contains(&e(3, 0)));
        assert!(!s.contains(&e(3, 1)));
        let mut v = e(3, 0);
        v[2] = RatFunc::param_r();
        assert!(s.contains(&v));
    }

    #[test]
    fn ambient_mismatch_reported() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(a.intersect(&b).is_err());
    }
}
