//! The kernel-intersection subspace `K(n)` and the reducibility decision.
//!
//! `K(n)` is the intersection of the kernels of all `nu(c_{ij})`.  It is an
//! invariant subspace, and every proper invariant subspace is contained in
//! it, so the representation at a specialization is reducible exactly when
//! `K(n)` is nonzero.

use crate::error::Result;
use crate::exact::{guard_check, ParamSpec, RatFunc};
use crate::linalg::{Matrix, Subspace};
use crate::rep::{build_cij, LKRep};

/// Outcome of the reducibility decision at one specialization.
#[derive(Debug, Clone)]
pub struct ReducibilityVerdict {
    /// Strand count.
    pub n: usize,
    /// The specialization that was probed.
    pub spec: ParamSpec,
    /// Dimension of `K(n)`.
    pub k_dim: usize,
    /// `K(n)` nonzero.
    pub reducible: bool,
    /// Whether the semisimplicity guard held; the verdict is informational
    /// only when it did not.
    pub guard_ok: bool,
}

/// Computes `K(n)` as the intersection of the kernels of all `nu(c_{ij})`,
/// and asserts its invariance under every `nu_i`.
///
/// The intersection is built incrementally: the current subspace is carried
/// as a column basis `B`, and the next kernel constraint restricts it to
/// `B * ker(C B)`.
pub fn compute_k(rep: &LKRep) -> Subspace {
    let dim = rep.dim();
    let mut basis: Option<Matrix> = None;
    'outer: for i in 1..rep.n {
        for j in i + 1..=rep.n {
            let c = build_cij(rep, i, j);
            basis = match basis {
                None => {
                    let k = c.kernel();
                    if k.is_zero() {
                        basis = None;
                        break 'outer;
                    }
                    Some(k.basis_matrix())
                }
                Some(b) => {
                    let cb = c.mul(&b).expect("square times basis");
                    let inner = cb.kernel();
                    if inner.is_zero() {
                        basis = None;
                        break 'outer;
                    }
                    Some(b.mul(&inner.basis_matrix()).expect("basis restriction"))
                }
            };
            if basis.is_none() {
                break 'outer;
            }
        }
    }
    let subspace = match basis {
        None => Subspace::zero(dim),
        Some(b) => {
            let cols = (0..b.ncols()).map(|c| b.col_vec(c)).collect();
            Subspace::from_spanning(dim, cols)
        }
    };
    // Proposition-2 sanity: K(n) must be invariant under every generator.
    for k in 1..rep.n {
        for v in subspace.basis() {
            let image = rep.nu(k).mul_vec(v).expect("ambient dimensions agree");
            assert!(
                subspace.contains(&image),
                "K(n) failed invariance under generator {k}"
            );
        }
    }
    subspace
}

/// Builds the representation at `spec`, computes `K(n)` and reports the
/// verdict; the guard result is recorded, not enforced.
pub fn decide_reducible(n: usize, spec: ParamSpec) -> Result<ReducibilityVerdict> {
    let guard_ok = guard_check(&spec, n);
    let rep = LKRep::build(n, spec.clone(), false)?;
    let k = compute_k(&rep);
    Ok(ReducibilityVerdict {
        n,
        spec,
        k_dim: k.dim(),
        reducible: k.dim() > 0,
        guard_ok,
    })
}

/// True when some one-dimensional invariant subspace exists: a common
/// eigenvector of all `nu_i`.  The candidate eigenvalues are the two roots
/// `r` and `-1/r` of the quadratic `X^2 + mX - 1`, so the search intersects
/// the two families of eigenspaces exactly.
pub fn one_dim_invariant_exists(rep: &LKRep) -> bool {
    let dim = rep.dim();
    let r = rep.scalars().r.clone();
    let candidates = [r.clone(), r.inv().expect("r nonzero").neg()];
    for gamma in candidates {
        // Stack nu_i - gamma*I for all i and take the kernel.
        let mut rows: Vec<Vec<RatFunc>> = Vec::with_capacity((rep.n - 1) * dim);
        for k in 1..rep.n {
            let m = rep.nu(k);
            for row in 0..dim {
                let mut v: Vec<RatFunc> = (0..dim).map(|col| m.at(row, col).clone()).collect();
                v[row] = v[row].sub(&gamma);
                rows.push(v);
            }
        }
        if !Matrix::from_rows(rows).kernel().is_zero() {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Sign;
    use crate::roots::{enumerate_roots, root_index};
    use crate::subspace::vectors::prop3_vectors;
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
    fn kernel_of_e1_has_codimension_one() {
        // Every column of E_1 is a multiple of x_{alpha_1} and some column is
        // nonzero, so E_1 has rank exactly 1 and nullity dim - 1.
        let rep = LKRep::build(3, ParamSpec::generic(3), false).unwrap();
        let e1 = rep.e(1);
        let alpha1 = root_index(3, crate::roots::PosRoot::new(1, 2));
        let mut some_nonzero = false;
        for col in 0..rep.dim() {
            for row in 0..rep.dim() {
                if row != alpha1 {
                    assert!(e1.at(row, col).is_zero());
                } else if !e1.at(row, col).is_zero() {
                    some_nonzero = true;
                }
            }
        }
        assert!(some_nonzero);
        assert_eq!(e1.kernel().dim(), 2);
    }

    #[test]
    fn generic_k4_is_zero() {
        let rep = LKRep::build(4, ParamSpec::generic(4), false).unwrap();
        assert!(compute_k(&rep).is_zero());
    }

    #[test]
    fn k4_at_l_equals_r_is_the_prop3_plane() {
        // Numeric point r = 2.
        let rep = LKRep::build(4, numeric(2, 2, 4), false).unwrap();
        let k = compute_k(&rep);
        assert_eq!(k.dim(), 2);
        let (v1, v2) = prop3_vectors();
        let at_two = |v: &crate::subspace::NamedVector| -> Vec<RatFunc> {
            let two = BigRational::from_integer(2.into());
            v.coords
                .iter()
                .map(|c| {
                    RatFunc::from_rational(&c.eval_rational(&two, &two).unwrap())
                })
                .collect()
        };
        let span = Subspace::from_spanning(6, vec![at_two(&v1), at_two(&v2)]);
        assert_eq!(k, span);

        // Symbolic in r with l = r.
        let rep = LKRep::build(4, ParamSpec::l_subst(Sign::Plus, 1, 4), false).unwrap();
        let k = compute_k(&rep);
        assert_eq!(k.dim(), 2);
        let span = Subspace::from_spanning(6, vec![v1.coords, v2.coords]);
        assert_eq!(k, span);
    }

    #[test]
    fn reducibility_examples_at_r_two() {
        // l = r = 2: reducible.
        assert!(decide_reducible(4, numeric(2, 2, 4)).unwrap().reducible);
        // l = 7 off the exceptional list: irreducible.
        let v = decide_reducible(4, numeric(7, 2, 4)).unwrap();
        assert!(!v.reducible && v.guard_ok);
        // n = 3, l = -8 = -r^3: reducible.
        assert!(decide_reducible(3, numeric(-8, 2, 3)).unwrap().reducible);
    }

    #[test]
    fn k5_at_l_minus_r_cubed_contains_u1() {
        let rep = LKRep::build(5, numeric(-8, 2, 5), false).unwrap();
        let k = compute_k(&rep);
        assert!(k.dim() > 0);
        let two = BigRational::from_integer(2.into());
        let u1 = crate::subspace::vectors::thm5_u_vectors()[0].embed(5);
        let u1_at: Vec<RatFunc> = u1
            .coords
            .iter()
            .map(|c| RatFunc::from_rational(&c.eval_rational(&two, &two).unwrap()))
            .collect();
        assert!(k.contains(&u1_at));
    }

    #[test]
    fn one_dim_subspace_exists_exactly_at_the_theorem_values() {
        // n = 4, r = 2: the forced value is l = 1/r^5 = 1/32.
        let l = BigRational::new(1.into(), 32.into());
        let r = BigRational::from_integer(2.into());
        let spec = ParamSpec::numeric(l, r.clone(), 4).unwrap();
        let rep = LKRep::build(4, spec, false).unwrap();
        assert!(one_dim_invariant_exists(&rep));
        // l = r = 2 is reducible but with a 2-dimensional K(4), no line.
        let rep = LKRep::build(4, numeric(2, 2, 4), false).unwrap();
        assert!(!one_dim_invariant_exists(&rep));
        // Off-list point.
        let rep = LKRep::build(4, numeric(7, 2, 4), false).unwrap();
        assert!(!one_dim_invariant_exists(&rep));
        // n = 3: both l = 1/r^3 and l = -r^3 admit lines.
        let spec = ParamSpec::numeric(
            BigRational::new(1.into(), 8.into()),
            r.clone(),
            3,
        )
        .unwrap();
        let rep = LKRep::build(3, spec, false).unwrap();
        assert!(one_dim_invariant_exists(&rep));
        let rep = LKRep::build(3, numeric(-8, 2, 3), false).unwrap();
        assert!(one_dim_invariant_exists(&rep));
        // n = 3, l = 1 is reducible with a 2-dimensional subspace, no line.
        let rep = LKRep::build(3, numeric(1, 2, 3), false).unwrap();
        assert!(!one_dim_invariant_exists(&rep));
    }

    #[test]
    fn proper_invariant_subspaces_are_annihilated_by_every_e() {
        // Proposition 1 on the computed K(4) at l = r, numeric r = 2.
        let rep = LKRep::build(4, numeric(2, 2, 4), false).unwrap();
        let k = compute_k(&rep);
        assert!(k.dim() > 0);
        for i in 1..4 {
            for v in k.basis() {
                let img = rep.e(i).mul_vec(v).unwrap();
                assert!(img.iter().all(RatFunc::is_zero));
            }
        }
        let _ = enumerate_roots(4).unwrap();
    }
}
