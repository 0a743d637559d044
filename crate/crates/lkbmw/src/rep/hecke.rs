//! The two irreducible degree-(n-1) Hecke-algebra matrix families carried by
//! the relation sets (triangle) and (nabla), and the two explicit degree-5
//! families for five strands.
//!
//! In the basis `v_1 .. v_{n-1}` the triangle relations read
//! `nu_i(v_i) = -1/r v_i`, `nu_{i+1}(v_i) = r(v_i + v_{i+1})`,
//! `nu_{i-1}(v_i) = r v_i + 1/r v_{i-1}` and `nu_t(v_i) = r v_i` otherwise;
//! the nabla relations swap the roles of `r` and `-1/r`.  Both families
//! satisfy the braid relations and the quadratic `X^2 + m X = 1`, so each
//! defines a Hecke-algebra representation of degree `n-1`.  For `n >= 4` the
//! two families are inequivalent: all triangle matrices share the trace
//! `(n-2) r - 1/r` while all nabla matrices share the trace `r - (n-2)/r`,
//! and these differ exactly when `n >= 4` (they coincide for `n = 3`).

use crate::exact::RatFunc;
use crate::linalg::Matrix;

/// Which of the two degree-(n-1) relation families to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeckeFamily {
    /// The family with generic eigenvalue `r` (relations "triangle").
    Triangle,
    /// The conjugate family with generic eigenvalue `-1/r` (relations "nabla").
    Nabla,
}

/// The `n-1` matrices of size `n-1` of the requested family, over generic `r`.
pub fn hecke_degree_matrices(n: usize, family: HeckeFamily) -> Vec<Matrix> {
    assert!(n >= 3, "degree-(n-1) families need n >= 3");
    let size = n - 1;
    let r = RatFunc::param_r();
    let r_inv = RatFunc::monomial(0, -1);
    let (same, cross_up, cross_down, own) = match family {
        // nu_i(v_i) = -1/r v_i; nu_i(v_{i-1}) = r(v_{i-1} + v_i);
        // nu_i(v_{i+1}) = r v_{i+1} + 1/r v_i; nu_i(v_t) = r v_t otherwise.
        HeckeFamily::Triangle => (r.clone(), r.clone(), r_inv.clone(), r_inv.neg()),
        // nu_i(v_i) = r v_i; nu_i(v_{i-1}) = -1/r(v_{i-1} + v_i);
        // nu_i(v_{i+1}) = -1/r v_{i+1} - r v_i; nu_i(v_t) = -1/r v_t otherwise.
        HeckeFamily::Nabla => (r_inv.neg(), r_inv.neg(), r.neg(), r.clone()),
    };
    (1..=size)
        .map(|i| {
            let mut m = Matrix::zero(size, size);
            for col in 0..size {
                // Basis vector v_{col+1}.
                let t = col + 1;
                if t == i {
                    m.set(col, col, own.clone());
                } else {
                    m.set(col, col, same.clone());
                }
                if t == i - 1 {
                    // Coefficient of v_i in nu_i(v_{i-1}).
                    m.set(i - 1, col, cross_up.clone());
                }
                if t == i + 1 {
                    // Coefficient of v_i in nu_i(v_{i+1}).
                    m.set(i - 1, col, cross_down.clone());
                }
            }
            m
        })
        .collect()
}

/// The two explicit degree-5 matrix families `P_1..P_4` and `Q_1..Q_4`
/// realizing the inequivalent irreducible degree-5 representations of the
/// five-strand Hecke algebra (blanks are zeros; generic `r`).
pub fn fact1_matrices() -> (Vec<Matrix>, Vec<Matrix>) {
    let p = vec![
        mat5(&[
            &["r", "0", "0", "0", "0"],
            &["0", "r", "0", "0", "0"],
            &["0", "0", "r", "0", "0"],
            &["1", "0", "-r^2", "-r^-1", "0"],
            &["0", "1", "0", "0", "-r^-1"],
        ]),
        mat5(&[
            &["-r^-1", "0", "0", "1", "0"],
            &["0", "-r^-1", "1", "0", "1"],
            &["0", "0", "r", "0", "0"],
            &["0", "0", "0", "r", "0"],
            &["0", "0", "0", "0", "r"],
        ]),
        mat5(&[
            &["r", "0", "0", "0", "0"],
            &["0", "r", "0", "0", "0"],
            &["0", "1", "-r^-1", "0", "0"],
            &["1", "0", "0", "-r^-1", "-r^2"],
            &["0", "0", "0", "0", "r"],
        ]),
        mat5(&[
            &["0", "1", "-r", "0", "0"],
            &["1", "r - r^-1", "1", "0", "0"],
            &["0", "0", "r", "0", "0"],
            &["0", "0", "-r^2", "0", "1"],
            &["0", "0", "r", "1", "r - r^-1"],
        ]),
    ];
    let q = vec![
        mat5(&[
            &["-r^-1", "0", "0", "0", "0"],
            &["0", "-r^-1", "0", "0", "0"],
            &["0", "0", "-r^-1", "0", "0"],
            &["1", "0", "-r^-2", "r", "0"],
            &["0", "1", "0", "0", "r"],
        ]),
        mat5(&[
            &["r", "0", "0", "1", "0"],
            &["0", "r", "1", "0", "1"],
            &["0", "0", "-r^-1", "0", "0"],
            &["0", "0", "0", "-r^-1", "0"],
            &["0", "0", "0", "0", "-r^-1"],
        ]),
        mat5(&[
            &["-r^-1", "0", "0", "0", "0"],
            &["0", "-r^-1", "0", "0", "0"],
            &["0", "1", "r", "0", "0"],
            &["1", "0", "0", "r", "-r^-2"],
            &["0", "0", "0", "0", "-r^-1"],
        ]),
        mat5(&[
            &["0", "1", "r^-1", "0", "0"],
            &["1", "r - r^-1", "1", "0", "0"],
            &["0", "0", "-r^-1", "0", "0"],
            &["0", "0", "-r^-2", "0", "1"],
            &["0", "0", "-r^-1", "1", "r - r^-1"],
        ]),
    ];
    (p, q)
}

fn mat5(rows: &[&[&str; 5]; 5]) -> Matrix {
    Matrix::from_rows(
        rows.iter()
            .map(|row| {
                row.iter()
                    .map(|s| {
                        let p: crate::exact::LaurentPoly = s.parse().expect("literal entry");
                        RatFunc::from_poly(p)
                    })
                    .collect()
            })
            .collect(),
    )
}

/// Whether the matrix list satisfies the braid relations and the quadratic
/// `X^2 + m X = 1` (with `m = 1/r - r` symbolic).
pub fn hecke_relations_hold(mats: &[Matrix]) -> bool {
    if mats.is_empty() {
        return true;
    }
    let size = mats[0].nrows();
    let ident = Matrix::identity(size);
    let m = RatFunc::param_m();
    for x in mats {
        let lhs = x.mul(x).unwrap().add(&x.scale(&m)).unwrap();
        if lhs != ident {
            return false;
        }
    }
    for (a, x) in mats.iter().enumerate() {
        for (b, y) in mats.iter().enumerate().skip(a + 1) {
            if b - a == 1 {
                let lhs = x.mul(y).unwrap().mul(x).unwrap();
                let rhs = y.mul(x).unwrap().mul(y).unwrap();
                if lhs != rhs {
                    return false;
                }
            } else if x.mul(y).unwrap() != y.mul(x).unwrap() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_families_satisfy_the_hecke_relations() {
        for n in 3..=7 {
            for fam in [HeckeFamily::Triangle, HeckeFamily::Nabla] {
                let mats = hecke_degree_matrices(n, fam);
                assert_eq!(mats.len(), n - 1);
                assert!(hecke_relations_hold(&mats), "n={n} {fam:?}");
            }
        }
    }

    #[test]
    fn constant_trace_per_family() {
        for n in 3..=7 {
            let nn = n as i64;
            // triangle: (n-2) r - 1/r, nabla: r - (n-2)/r.
            let tri_expected = RatFunc::param_r()
                .mul_int(nn - 2)
                .sub(&RatFunc::monomial(0, -1));
            let nab_expected = RatFunc::param_r()
                .sub(&RatFunc::monomial(0, -1).mul_int(nn - 2));
            for mtx in hecke_degree_matrices(n, HeckeFamily::Triangle) {
                assert_eq!(mtx.trace().unwrap(), tri_expected);
            }
            for mtx in hecke_degree_matrices(n, HeckeFamily::Nabla) {
                assert_eq!(mtx.trace().unwrap(), nab_expected);
            }
            // The two traces coincide only at n = 3.
            assert_eq!(tri_expected == nab_expected, n == 3);
        }
    }

    #[test]
    fn fact1_families_are_hecke_and_conjugate_to_each_other() {
        let (p, q) = fact1_matrices();
        assert!(hecke_relations_hold(&p));
        assert!(hecke_relations_hold(&q));
        assert_eq!(*p[0].at(0, 0), RatFunc::param_r());
        assert_eq!(
            *q[0].at(0, 0),
            RatFunc::monomial(0, -1).neg()
        );
        // Q_i is P_i with r -> -1/r.
        for (pi, qi) in p.iter().zip(&q) {
            assert_eq!(pi.map_entries(|e| e.conjugate_r()), *qi);
        }
    }

    #[test]
    fn fact1_trace_profiles_differ() {
        let (p, q) = fact1_matrices();
        let tp: Vec<RatFunc> = p.iter().map(|x| x.trace().unwrap()).collect();
        let tq: Vec<RatFunc> = q.iter().map(|x| x.trace().unwrap()).collect();
        assert!(tp.iter().all(|t| *t == tp[0]));
        assert!(tq.iter().all(|t| *t == tq[0]));
        assert_ne!(tp[0], tq[0]);
    }
}
