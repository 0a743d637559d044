//! Closed-form action rules of the conjugated idempotents `c_{ij}` on basis
//! vectors, and the membership of the printed vectors in `K(n)`.
//!
//! For `1 <= i < j <= n` the matrix of `c_{ij}` sends certain basis vectors
//! to multiples of `w_{ij}`:
//!
//! - `(R_k)`       `c_{ij} w_{i,j-k}   = 1/(l r^{k-1}) w_{ij}`, `1 <= k <= j-i-1`
//! - `(L_{j-i,k})` `c_{ij} w_{i-k,i}   = 1/r^{(k-1)+(j-i-1)} w_{ij}`, `1 <= k <= i-1`
//! - `(C_{t,s})`   `c_{ij} w_{i-t,j-s} = (1/r^{t+s-1} - 1/r^{t+s-3})(1/l - 1/r) w_{ij}`,
//!   `1 <= t <= i-1`, `1 <= s <= j-i-1`
//!
//! At `l = r` the `(C_{t,s})` coefficient vanishes, which is what puts the
//! two-dimensional plane of `K(4)` inside `K(n)` for every larger `n`.

use crate::error::Result;
use crate::exact::{specialize, ParamSpec, RatFunc, Sign};
use crate::rep::{build_cij, LKRep};
use crate::report::CheckReport;
use crate::roots::{root_index, PosRoot};
use crate::subspace::vectors::{prop3_vectors, thm5_u_vectors, NamedVector};

/// Verifies the three rule families against the matrices of the `c_{ij}` for
/// every admissible index tuple, under the given specialization.
pub fn cij_rules_check(n: usize, spec: &ParamSpec) -> Result<CheckReport> {
    assert!(n >= 4, "rule families need n >= 4");
    let rep = LKRep::build(n, spec.clone(), false)?;
    let dim = rep.dim();
    let mut report = CheckReport::new(format!("c_ij action rules, n = {n}"));
    let l_inv = RatFunc::param_l().inv()?;
    let r_inv = RatFunc::monomial(0, -1);
    for i in 1..n {
        for j in i + 1..=n {
            let c = build_cij(&rep, i, j);
            let target = root_index(n, PosRoot::new(i, j));
            let d = (j - i) as i64;
            // (R_k): input w_{i,j-k}, coefficient 1/(l r^{k-1}).
            for k in 1..=(j - i - 1) {
                let kk = k as i64;
                let input = root_index(n, PosRoot::new(i, j - k));
                let coeff = specialize(&RatFunc::monomial(-1, 1 - kk), spec)?;
                report.push(
                    format!("(R_{k}) c_{{{i},{j}}}"),
                    column_is_multiple(&c, input, target, &coeff, dim),
                );
            }
            // (L_{j-i,k}): input w_{i-k,i}, coefficient 1/r^{(k-1)+(j-i-1)}.
            for k in 1..=(i.saturating_sub(1)) {
                let kk = k as i64;
                let input = root_index(n, PosRoot::new(i - k, i));
                let coeff = specialize(&RatFunc::monomial(0, -(kk - 1) - (d - 1)), spec)?;
                report.push(
                    format!("(L_{{{},{}}}) c_{{{i},{j}}}", j - i, k),
                    column_is_multiple(&c, input, target, &coeff, dim),
                );
            }
            // (C_{t,s}): input w_{i-t,j-s}.
            for t in 1..=(i.saturating_sub(1)) {
                for s in 1..=(j - i - 1) {
                    let (tt, ss) = (t as i64, s as i64);
                    let input = root_index(n, PosRoot::new(i - t, j - s));
                    let sym = RatFunc::monomial(0, 1 - tt - ss)
                        .sub(&RatFunc::monomial(0, 3 - tt - ss))
                        .mul(&l_inv.sub(&r_inv));
                    let coeff = specialize(&sym, spec)?;
                    report.push(
                        format!("(C_{{{t},{s}}}) c_{{{i},{j}}}"),
                        column_is_multiple(&c, input, target, &coeff, dim),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// True when column `input` of `c` equals `coeff` times the `target` basis
/// vector.
fn column_is_multiple(
    c: &crate::linalg::Matrix,
    input: usize,
    target: usize,
    coeff: &RatFunc,
    dim: usize,
) -> bool {
    (0..dim).all(|row| {
        let got = c.at(row, input);
        if row == target {
            got == coeff
        } else {
            got.is_zero()
        }
    })
}

/// Membership of the printed vectors in `K(n)`, symbolically in `r`:
/// `v_1` of the four-strand plane at `l = r`, and `u_1` at `l = -r^3`.
///
/// Membership is checked against the definition: `nu(c_{ij}) v = 0` for all
/// `i < j`.
pub fn membership_checks(n: usize) -> Result<CheckReport> {
    assert!(n >= 4, "membership families start at n = 4");
    let mut report = CheckReport::new(format!("K({n}) membership of printed vectors"));
    let v1 = prop3_vectors().0.embed(n);
    let rep_r = LKRep::build(n, ParamSpec::l_subst(Sign::Plus, 1, n), false)?;
    report.extend(annihilated_by_all_cij(&rep_r, &v1, "l = r"));
    let u1 = thm5_u_vectors()[0].embed(n);
    let rep_rc = LKRep::build(n, ParamSpec::l_subst(Sign::Minus, 3, n), false)?;
    report.extend(annihilated_by_all_cij(&rep_rc, &u1, "l = -r^3"));
    Ok(report)
}

/// One entry per pair `i < j`: whether `nu(c_{ij})` annihilates the vector.
pub fn annihilated_by_all_cij(rep: &LKRep, v: &NamedVector, context: &str) -> CheckReport {
    assert_eq!(v.n, rep.n, "vector lives in the wrong space");
    let mut report = CheckReport::new(format!("{} in K({}) at {context}", v.label, rep.n));
    for i in 1..rep.n {
        for j in i + 1..=rep.n {
            let c = build_cij(rep, i, j);
            let image = c.mul_vec(&v.coords).expect("square matrix");
            report.push(
                format!("c_{{{i},{j}}} {} = 0 ({context})", v.label),
                image.iter().all(RatFunc::is_zero),
            );
        }
    }
    report
}
