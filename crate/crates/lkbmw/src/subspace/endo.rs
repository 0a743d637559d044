//! Equivariant endomorphisms and the invariant-complement test.
//!
//! Both questions are linear: the commutant `{X : X nu_i = nu_i X}` is the
//! kernel of a stacked linear system in the entries of `X`, and an invariant
//! complement of an invariant subspace `W` exists exactly when some
//! equivariant projection onto `W` exists, which is a linear feasibility
//! problem once the projection is parametrized as `P = B Y` with `B` a basis
//! matrix of `W` (then `P^2 = P` is automatic from `Y B = I`).

use crate::error::{Error, Result};
use crate::exact::RatFunc;
use crate::linalg::{Matrix, Subspace};
use crate::rep::LKRep;

/// Basis of the commutant `{X : X nu_i = nu_i X for all i}` as a subspace of
/// the `d^2`-dimensional matrix space (row-major flattening).
pub fn equivariant_endomorphisms(rep: &LKRep) -> Subspace {
    let d = rep.dim();
    let mut rows: Vec<Vec<RatFunc>> = Vec::with_capacity((rep.n - 1) * d * d);
    for k in 1..rep.n {
        let nu = rep.nu(k);
        // Entry (a, b) of nu X - X nu is sum_p nu[a,p] X[p,b] - sum_q X[a,q] nu[q,b].
        for a in 0..d {
            for b in 0..d {
                let mut row = vec![RatFunc::zero(); d * d];
                for p in 0..d {
                    let c = nu.at(a, p);
                    if !c.is_zero() {
                        row[p * d + b] = row[p * d + b].add(c);
                    }
                }
                for q in 0..d {
                    let c = nu.at(q, b);
                    if !c.is_zero() {
                        row[a * d + q] = row[a * d + q].sub(c);
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    Matrix::from_rows(rows).kernel()
}

/// Whether the invariant subspace `W` admits an invariant complement: a
/// projection `P` with image `W`, `P|_W = id`, commuting with every `nu_i`.
///
/// Errors with [`Error::NotInvariant`] when `W` is not invariant under the
/// representation.  The trivial subspaces always have complements.
pub fn has_invariant_complement(rep: &LKRep, w: &Subspace) -> Result<bool> {
    let d = rep.dim();
    if w.ambient_dim() != d {
        return Err(Error::DimensionMismatch(format!(
            "subspace of R^{} against representation of degree {d}",
            w.ambient_dim()
        )));
    }
    for k in 1..rep.n {
        for v in w.basis() {
            let img = rep.nu(k).mul_vec(v)?;
            if !w.contains(&img) {
                return Err(Error::NotInvariant);
            }
        }
    }
    let kdim = w.dim();
    if kdim == 0 || kdim == d {
        return Ok(true);
    }
    // Unknowns: Y (kdim x d), row-major index a*d + b.
    let b_mat = w.basis_matrix(); // d x kdim
    let unknowns = kdim * d;
    let mut rows: Vec<Vec<RatFunc>> = Vec::new();
    let mut rhs: Vec<RatFunc> = Vec::new();
    // Y B = I_k.
    for p in 0..kdim {
        for q in 0..kdim {
            let mut row = vec![RatFunc::zero(); unknowns];
            for bb in 0..d {
                let c = b_mat.at(bb, q);
                if !c.is_zero() {
                    row[p * d + bb] = c.clone();
                }
            }
            rows.push(row);
            rhs.push(if p == q {
                RatFunc::one()
            } else {
                RatFunc::zero()
            });
        }
    }
    // B Y nu_k = nu_k B Y for every k, entrywise:
    // sum_{c,e} B[a,c] Y[c,e] nu[e,b] - sum_e (nu B)[a,e] Y[e,b] = 0.
    for k in 1..rep.n {
        let nu = rep.nu(k);
        let nb = nu.mul(&b_mat)?;
        for a in 0..d {
            for b in 0..d {
                let mut row = vec![RatFunc::zero(); unknowns];
                for c in 0..kdim {
                    let bac = b_mat.at(a, c);
                    if bac.is_zero() {
                        continue;
                    }
                    for e in 0..d {
                        let neb = nu.at(e, b);
                        if !neb.is_zero() {
                            row[c * d + e] = row[c * d + e].add(&bac.mul(neb));
                        }
                    }
                }
                for e in 0..kdim {
                    let c = nb.at(a, e);
                    if !c.is_zero() {
                        row[e * d + b] = row[e * d + b].sub(c);
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                    rhs.push(RatFunc::zero());
                }
            }
        }
    }
    let system = Matrix::from_rows(rows);
    Ok(system.solve(&rhs)?.is_some())
}

/// The matrix of `nu_k` restricted to the invariant subspace `W`, in the
/// basis of `W`: the unique `T` with `nu_k B = B T`.
pub fn restriction_matrix(rep: &LKRep, w: &Subspace, k: usize) -> Result<Matrix> {
    let b = w.basis_matrix();
    let nb = rep.nu(k).mul(&b)?;
    let kdim = w.dim();
    let mut t = Matrix::zero(kdim, kdim);
    for col in 0..kdim {
        let target = nb.col_vec(col);
        let coords = b
            .solve(&target)?
            .ok_or(Error::NotInvariant)?;
        for (row, c) in coords.into_iter().enumerate() {
            t.set(row, col, c);
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ParamSpec;
    use crate::subspace::kspace::compute_k;
    use num_rational::BigRational;

    fn numeric(l: i64, r: i64, n: usize) -> ParamSpec {
        ParamSpec::numeric(
            BigRational::from_integer(l.into()),
            BigRational::from_integer(r.into()),
            n,
        )
        .unwrap()
    }

    #[test]
    fn generic_commutant_is_scalars_only() {
        let rep = LKRep::build(4, ParamSpec::generic(4), false).unwrap();
        let endos = equivariant_endomorphisms(&rep);
        assert_eq!(endos.dim(), 1);
        // The identity matrix is in the commutant.
        let ident: Vec<RatFunc> = Matrix::identity(6)
            .to_row_vecs()
            .into_iter()
            .flatten()
            .collect();
        assert!(endos.contains(&ident));
    }

    #[test]
    fn reducible_point_still_has_scalar_commutant() {
        // At l = r = 2 the module is reducible (K(4) is a plane) yet its
        // endomorphism ring stays one-dimensional: no nontrivial idempotent
        // exists, so the module is indecomposable.
        let rep = LKRep::build(4, numeric(2, 2, 4), false).unwrap();
        assert_eq!(compute_k(&rep).dim(), 2);
        let endos = equivariant_endomorphisms(&rep);
        assert_eq!(endos.dim(), 1);
    }

    #[test]
    fn trivial_subspaces_have_complements() {
        let rep = LKRep::build(4, numeric(2, 2, 4), false).unwrap();
        assert!(has_invariant_complement(&rep, &Subspace::zero(6)).unwrap());
        assert!(has_invariant_complement(&rep, &Subspace::full(6)).unwrap());
    }

    #[test]
    fn k4_has_no_invariant_complement_at_l_equals_r() {
        let rep = LKRep::build(4, numeric(2, 2, 4), false).unwrap();
        let k = compute_k(&rep);
        assert_eq!(k.dim(), 2);
        assert!(!has_invariant_complement(&rep, &k).unwrap());
    }

    #[test]
    fn non_invariant_subspace_is_rejected() {
        let rep = LKRep::build(4, numeric(2, 2, 4), false).unwrap();
        let mut v = vec![RatFunc::zero(); 6];
        v[0] = RatFunc::one();
        let w = Subspace::from_spanning(6, vec![v]);
        assert_eq!(
            has_invariant_complement(&rep, &w),
            Err(Error::NotInvariant)
        );
    }

    #[test]
    fn restriction_reproduces_invariant_action() {
        let rep = LKRep::build(4, numeric(2, 2, 4), false).unwrap();
        let k = compute_k(&rep);
        let b = k.basis_matrix();
        for gen in 1..4 {
            let t = restriction_matrix(&rep, &k, gen).unwrap();
            assert_eq!(rep.nu(gen).mul(&b).unwrap(), b.mul(&t).unwrap());
        }
    }
}
