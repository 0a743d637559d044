//! Verification of the eigen-relations satisfied by the printed vectors at
//! their special parameter values.

use crate::error::Result;
use crate::exact::{ParamSpec, RatFunc, Sign};
use crate::rep::{HeckeFamily, LKRep};
use crate::report::CheckReport;
use crate::subspace::vectors::{
    prop3_vectors, thm4_n3_vectors, thm4_vector, thm5_u_vectors, thm5_vectors, NamedVector,
};

fn vec_scale(v: &[RatFunc], c: &RatFunc) -> Vec<RatFunc> {
    v.iter().map(|x| x.mul(c)).collect()
}

fn vec_add(a: &[RatFunc], b: &[RatFunc]) -> Vec<RatFunc> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

/// One-dimensional invariant subspace: for `n >= 4`, at `l = 1/r^{2n-3}` the
/// vector with coordinates `r^{s+t}` is a common eigenvector of all `nu_i`
/// with eigenvalue `r`; for `n = 3` the two printed vectors are eigenvectors
/// at `l = 1/r^3` (eigenvalue `r`) and `l = -r^3` (eigenvalue `-1/r`).
pub fn check_thm4(n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("one-dimensional invariant subspace, n = {n}"));
    if n == 3 {
        let (u_r, u_conj) = thm4_n3_vectors();
        let rep = LKRep::build(3, ParamSpec::l_subst(Sign::Plus, -3, 3), false)?;
        let r = rep.scalars().r.clone();
        for i in 1..3 {
            let image = rep.nu(i).mul_vec(&u_r.coords)?;
            report.push(
                format!("l = 1/r^3: nu_{i} u = r u"),
                image == vec_scale(&u_r.coords, &r),
            );
        }
        let rep = LKRep::build(3, ParamSpec::l_subst(Sign::Minus, 3, 3), false)?;
        let gamma = rep.scalars().r.inv()?.neg();
        for i in 1..3 {
            let image = rep.nu(i).mul_vec(&u_conj.coords)?;
            report.push(
                format!("l = -r^3: nu_{i} u = -1/r u"),
                image == vec_scale(&u_conj.coords, &gamma),
            );
        }
        return Ok(report);
    }
    let power = -(2 * n as i64 - 3);
    let rep = LKRep::build(n, ParamSpec::l_subst(Sign::Plus, power, n), false)?;
    let u = thm4_vector(n);
    let r = rep.scalars().r.clone();
    for i in 1..n {
        let image = rep.nu(i).mul_vec(&u.coords)?;
        report.push(
            format!("l = 1/r^{}: nu_{i} u = r u", 2 * n - 3),
            image == vec_scale(&u.coords, &r),
        );
    }
    Ok(report)
}

/// Checks the full relation family (triangle or nabla) on a vector list
/// inside the given representation.
pub fn check_family_on_vectors(
    rep: &LKRep,
    vectors: &[NamedVector],
    family: HeckeFamily,
) -> CheckReport {
    let n = rep.n;
    assert_eq!(vectors.len(), n - 1, "one vector per generator index");
    let r = rep.scalars().r.clone();
    let r_inv = r.inv().expect("r nonzero");
    // (eigen_other, eigen_self, coeff on v_{i+1} in nu_{i+1}(v_i),
    //  coeff on v_{i-1} in nu_{i-1}(v_i)) -- and the matching self terms.
    let (other, own, up_self, up_new, down_self, down_new) = match family {
        HeckeFamily::Triangle => (
            r.clone(),
            r_inv.neg(),
            r.clone(),
            r.clone(),
            r.clone(),
            r_inv.clone(),
        ),
        HeckeFamily::Nabla => (
            r_inv.neg(),
            r.clone(),
            r_inv.neg(),
            r_inv.neg(),
            r_inv.neg(),
            r.neg(),
        ),
    };
    let mut report = CheckReport::new(format!("relation family on {} vectors, n = {n}", vectors.len()));
    for (idx, v) in vectors.iter().enumerate() {
        let i = idx + 1;
        for t in 1..n {
            let image = rep.nu(t).mul_vec(&v.coords).expect("ambient dims");
            let expected = if t == i {
                vec_scale(&v.coords, &own)
            } else if t == i + 1 {
                vec_add(
                    &vec_scale(&v.coords, &up_self),
                    &vec_scale(&vectors[idx + 1].coords, &up_new),
                )
            } else if t + 1 == i {
                vec_add(
                    &vec_scale(&v.coords, &down_self),
                    &vec_scale(&vectors[idx - 1].coords, &down_new),
                )
            } else {
                vec_scale(&v.coords, &other)
            };
            report.push(format!("nu_{t}({})", v.label), image == expected);
        }
    }
    report
}

/// Degree-(n-1) invariant subspace: the printed `v_i` satisfy the triangle
/// relations at `l = sign * r^{-(n-3)}`.  For `n = 4` this covers
/// `l = 1/r` and `l = -1/r`; the `l = -r^3` case has its own vectors, see
/// [`check_thm5_n4_u`].
pub fn check_thm5(n: usize, sign: Sign) -> Result<CheckReport> {
    let rep = LKRep::build(
        n,
        ParamSpec::l_subst(sign, -(n as i64 - 3), n),
        false,
    )?;
    let vectors = thm5_vectors(n, sign)?;
    let mut report = CheckReport::new(format!(
        "degree-{} invariant family at l = {}r^-({}), n = {n}",
        n - 1,
        if sign == Sign::Plus { "" } else { "-" },
        n as i64 - 3
    ));
    report.extend(check_family_on_vectors(&rep, &vectors, HeckeFamily::Triangle));
    // The span must be full rank: n-1 linearly independent vectors.
    let span = crate::linalg::Subspace::from_spanning(
        rep.dim(),
        vectors.iter().map(|v| v.coords.clone()).collect(),
    );
    report.push(
        format!("v_1..v_{} linearly independent", n - 1),
        span.dim() == n - 1,
    );
    Ok(report)
}

/// Four strands at `l = -r^3`: the printed `u_1, u_2, u_3` satisfy the nabla
/// relations and are linearly independent.
pub fn check_thm5_n4_u() -> Result<CheckReport> {
    let rep = LKRep::build(4, ParamSpec::l_subst(Sign::Minus, 3, 4), false)?;
    let vectors = thm5_u_vectors();
    let mut report = CheckReport::new("three-dimensional invariant family at l = -r^3, n = 4");
    report.extend(check_family_on_vectors(&rep, &vectors, HeckeFamily::Nabla));
    let span = crate::linalg::Subspace::from_spanning(
        rep.dim(),
        vectors.iter().map(|v| v.coords.clone()).collect(),
    );
    report.push("u_1, u_2, u_3 linearly independent", span.dim() == 3);
    Ok(report)
}

/// The two-dimensional plane of `K(4)` at `l = r`: eigen-relations of the
/// printed pair, their independence, and `K(4)` equal to their span (checked
/// symbolically in `r` by the caller through `compute_k`).
pub fn check_prop3() -> Result<CheckReport> {
    let rep = LKRep::build(4, ParamSpec::l_subst(Sign::Plus, 1, 4), false)?;
    let (v1, v2) = prop3_vectors();
    let r = rep.scalars().r.clone();
    let neg_r_inv = r.inv()?.neg();
    let mut report = CheckReport::new("two-dimensional invariant plane at l = r, n = 4");
    // nu_1 v1 = -1/r v1, nu_2 v2 ... relations as printed.
    let checks: Vec<(&str, usize, &NamedVector, Vec<RatFunc>)> = vec![
        ("nu_1 v1 = -1/r v1", 1, &v1, vec_scale(&v1.coords, &neg_r_inv)),
        ("nu_2 v2 = -1/r v2", 2, &v2, vec_scale(&v2.coords, &neg_r_inv)),
        ("nu_3 v1 = -1/r v1", 3, &v1, vec_scale(&v1.coords, &neg_r_inv)),
        (
            "nu_2 v1 = r v1 + v2",
            2,
            &v1,
            vec_add(&vec_scale(&v1.coords, &r), &v2.coords),
        ),
        (
            "nu_1 v2 = v1 + r v2",
            1,
            &v2,
            vec_add(&v1.coords, &vec_scale(&v2.coords, &r)),
        ),
        (
            "nu_3 v2 = v1 + r v2",
            3,
            &v2,
            vec_add(&v1.coords, &vec_scale(&v2.coords, &r)),
        ),
    ];
    for (name, gen, v, expected) in checks {
        let image = rep.nu(gen).mul_vec(&v.coords)?;
        report.push(name, image == expected);
    }
    let span = crate::linalg::Subspace::from_spanning(6, vec![v1.coords, v2.coords]);
    report.push("v1, v2 linearly independent", span.dim() == 2);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm4_families_pass() {
        for n in [3, 4, 5] {
            let report = check_thm4(n).unwrap();
            assert!(
                report.all_pass(),
                "failures at n={n}: {:?}",
                report.failures().map(|e| &e.name).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn thm5_triangle_families_pass() {
        for n in [3, 5] {
            for sign in [Sign::Plus, Sign::Minus] {
                let report = check_thm5(n, sign).unwrap();
                assert!(
                    report.all_pass(),
                    "failures at n={n} {sign:?}: {:?}",
                    report.failures().map(|e| &e.name).collect::<Vec<_>>()
                );
            }
        }
    }

    #[test]
    fn thm5_four_strand_families_pass() {
        // The v-family at l = 1/r and l = -1/r.
        for sign in [Sign::Plus, Sign::Minus] {
            assert!(check_thm5(4, sign).unwrap().all_pass());
        }
        // The u-family at l = -r^3.
        assert!(check_thm5_n4_u().unwrap().all_pass());
    }

    #[test]
    fn prop3_relations_pass() {
        assert!(check_prop3().unwrap().all_pass());
    }
}
