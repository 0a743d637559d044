//! Scans of the reducibility verdict over the exceptional parameter values,
//! and the trace witness separating the two degree-(n-1) Hecke families.
//!
//! The exceptional `l`-lists: for `n >= 4` the representation is reducible
//! exactly at `l` in `{r, -r^3, 1/r^{2n-3}, 1/r^{n-3}, -1/r^{n-3}}`; for
//! `n = 3` at `l` in `{-r^3, 1/r^3, 1, -1}`.  The conjugate representation
//! (`r -> -1/r`) is reducible exactly at the image of this list, which for
//! `n >= 4` is `{-1/r, 1/r^3, -r^{2n-3}, r^{n-3}, -r^{n-3}}` and for `n = 3`
//! the same set as the plain list.

use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{guard_check, ParamSpec};
use crate::linalg::Subspace;
use crate::rep::{fact1_matrices, hecke_degree_matrices, HeckeFamily, LKRep};
use crate::report::{CheckReport, ScanReport, ScanRow};
use crate::subspace::kspace::compute_k;

fn pow(r: &BigRational, k: i64) -> BigRational {
    let p = num_traits::pow::pow(r.clone(), k.unsigned_abs() as usize);
    if k < 0 {
        BigRational::one() / p
    } else {
        p
    }
}

/// The exceptional `l` values of the main statement at a numeric `r`.
pub fn exceptional_l_values(n: usize, r: &BigRational) -> Vec<BigRational> {
    assert!(n >= 3);
    if n == 3 {
        vec![
            -pow(r, 3),
            pow(r, -3),
            BigRational::one(),
            -BigRational::one(),
        ]
    } else {
        let k = n as i64;
        vec![
            r.clone(),
            -pow(r, 3),
            pow(r, -(2 * k - 3)),
            pow(r, -(k - 3)),
            -pow(r, -(k - 3)),
        ]
    }
}

/// The exceptional `l` values for the conjugate representation (the image of
/// the main list under `r -> -1/r`).
pub fn conjugate_exceptional_l_values(n: usize, r: &BigRational) -> Vec<BigRational> {
    assert!(n >= 3);
    if n == 3 {
        // The n = 3 list is stable under the substitution.
        exceptional_l_values(3, r)
    } else {
        let k = n as i64;
        vec![
            -pow(r, -1),
            pow(r, -3),
            -pow(r, 2 * k - 3),
            pow(r, k - 3),
            -pow(r, k - 3),
        ]
    }
}

fn scan(
    n: usize,
    r_value: &BigRational,
    extra_l: &[BigRational],
    conjugate: bool,
) -> Result<ScanReport> {
    let probe = ParamSpec::numeric(BigRational::one(), r_value.clone(), n)
        .map_err(|_| Error::GuardViolation {
            n,
            r: r_value.to_string(),
        })?;
    if !guard_check(&probe, n) {
        return Err(Error::GuardViolation {
            n,
            r: r_value.to_string(),
        });
    }
    let exceptional = if conjugate {
        conjugate_exceptional_l_values(n, r_value)
    } else {
        exceptional_l_values(n, r_value)
    };
    let mut points: Vec<BigRational> = Vec::new();
    for l in exceptional.iter().chain(extra_l.iter()) {
        if !points.contains(l) {
            points.push(l.clone());
        }
    }
    let rows: Result<Vec<ScanRow>> = points
        .par_iter()
        .map(|l| {
            let spec = ParamSpec::numeric(l.clone(), r_value.clone(), n)?;
            let rep = LKRep::build(n, spec, conjugate)?;
            let k = compute_k(&rep);
            let reducible = k.dim() > 0;
            let predicted = exceptional.contains(l);
            Ok(ScanRow {
                n,
                l: l.to_string(),
                r: r_value.to_string(),
                conjugate,
                k_dim: k.dim(),
                reducible,
                predicted,
                agree: reducible == predicted,
            })
        })
        .collect();
    Ok(ScanReport { rows: rows? })
}

/// Scans the plain representation over the exceptional list for `n` plus any
/// extra probe values of `l`; errors when `r` fails the semisimplicity guard.
pub fn scan_main_theorem(
    n: usize,
    r_value: &BigRational,
    extra_l: &[BigRational],
) -> Result<ScanReport> {
    scan(n, r_value, extra_l, false)
}

/// The same scan protocol for the conjugate representation against its
/// exceptional list.
pub fn scan_conjugate(
    n: usize,
    r_value: &BigRational,
    extra_l: &[BigRational],
) -> Result<ScanReport> {
    scan(n, r_value, extra_l, true)
}

/// Trace witness for the inequivalence of the two degree-(n-1) Hecke
/// families, plus (for five strands) the explicit degree-5 pair.
///
/// Every triangle matrix has trace `(n-2) r - 1/r` and every nabla matrix has
/// trace `r - (n-2)/r`; the two values differ exactly when `n >= 4`, and the
/// families are equivalent for `n = 3`.
pub fn hecke_equivalence_witness(n: usize) -> CheckReport {
    use crate::exact::RatFunc;
    assert!(n >= 3);
    let mut report = CheckReport::new(format!("degree-{} Hecke family traces, n = {n}", n - 1));
    let tri = hecke_degree_matrices(n, HeckeFamily::Triangle);
    let nab = hecke_degree_matrices(n, HeckeFamily::Nabla);
    report.push(
        "triangle family satisfies braid + quadratic relations",
        crate::rep::hecke_relations_hold(&tri),
    );
    report.push(
        "nabla family satisfies braid + quadratic relations",
        crate::rep::hecke_relations_hold(&nab),
    );
    let nn = n as i64;
    let tri_trace = RatFunc::param_r()
        .mul_int(nn - 2)
        .sub(&RatFunc::monomial(0, -1));
    let nab_trace = RatFunc::param_r().sub(&RatFunc::monomial(0, -1).mul_int(nn - 2));
    report.push(
        format!("every triangle matrix has trace ({} )r - 1/r", n - 2),
        tri.iter().all(|m| m.trace().unwrap() == tri_trace),
    );
    report.push(
        format!("every nabla matrix has trace r - ({})/r", n - 2),
        nab.iter().all(|m| m.trace().unwrap() == nab_trace),
    );
    if n >= 4 {
        report.push(
            "the two traces differ (inequivalence witness)",
            tri_trace != nab_trace,
        );
    } else {
        report.push("the two trace profiles coincide at n = 3", tri_trace == nab_trace);
    }
    if n == 5 {
        let (p, q) = fact1_matrices();
        report.push(
            "degree-5 P family satisfies the Hecke relations",
            crate::rep::hecke_relations_hold(&p),
        );
        report.push(
            "degree-5 Q family satisfies the Hecke relations",
            crate::rep::hecke_relations_hold(&q),
        );
        let tp = p[0].trace().unwrap();
        let tq = q[0].trace().unwrap();
        report.push(
            "degree-5 trace profiles are constant and distinct",
            p.iter().all(|m| m.trace().unwrap() == tp)
                && q.iter().all(|m| m.trace().unwrap() == tq)
                && tp != tq,
        );
    }
    report
}

/// At `l = r` (numeric `r`), when `K(5)` is five-dimensional the restricted
/// Hecke action must carry the P-family trace profile and not the Q-family's.
pub fn k5_trace_profile_check(r_value: &BigRational) -> Result<CheckReport> {
    let spec = ParamSpec::numeric(r_value.clone(), r_value.clone(), 5)?;
    let rep = LKRep::build(5, spec, false)?;
    let k = compute_k(&rep);
    let mut report = CheckReport::new("K(5) restricted trace profile at l = r");
    report.push_detail("K(5) is nonzero at l = r", k.dim() > 0, format!("dim = {}", k.dim()));
    if k.dim() == 5 {
        let (p, q) = fact1_matrices();
        let eval = |m: &crate::linalg::Matrix| -> Result<crate::exact::RatFunc> {
            let spec = ParamSpec::numeric(r_value.clone(), r_value.clone(), 5)?;
            crate::exact::specialize(&m.trace()?, &spec)
        };
        let p_trace = eval(&p[0])?;
        let q_trace = eval(&q[0])?;
        let mut all_p = true;
        for gen in 1..5 {
            let t = crate::subspace::endo::restriction_matrix(&rep, &k, gen)?.trace()?;
            if t != p_trace {
                all_p = false;
            }
            report.push_detail(
                format!("trace of nu_{gen} restricted to K(5)"),
                t == p_trace && t != q_trace,
                format!("trace = {t}"),
            );
        }
        report.push("restricted action carries the P-profile", all_p);
    }
    let _ = Subspace::zero(1);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn exceptional_lists_at_r_two() {
        let r = rat(2, 1);
        assert_eq!(
            exceptional_l_values(4, &r),
            vec![rat(2, 1), rat(-8, 1), rat(1, 32), rat(1, 2), rat(-1, 2)]
        );
        assert_eq!(
            exceptional_l_values(3, &r),
            vec![rat(-8, 1), rat(1, 8), rat(1, 1), rat(-1, 1)]
        );
        assert_eq!(
            conjugate_exceptional_l_values(4, &r),
            vec![rat(-1, 2), rat(1, 8), rat(-32, 1), rat(2, 1), rat(-2, 1)]
        );
    }

    #[test]
    fn scan_n3_agrees_with_prediction() {
        let r = rat(2, 1);
        let report = scan_main_theorem(3, &r, &[rat(5, 1), rat(7, 1)]).unwrap();
        assert!(report.all_agree());
        assert_eq!(report.rows.len(), 6);
    }

    #[test]
    fn scan_n4_agrees_including_probes() {
        let r = rat(2, 1);
        let report = scan_main_theorem(4, &r, &[rat(5, 1), rat(7, 1)]).unwrap();
        assert!(report.all_agree());
        // Probe rows are irreducible.
        for row in report.rows.iter().filter(|r| r.l == "5" || r.l == "7") {
            assert!(!row.reducible);
        }
    }

    #[test]
    fn conjugate_scan_n4_agrees() {
        let r = rat(2, 1);
        let report = scan_conjugate(4, &r, &[rat(7, 1)]).unwrap();
        assert!(report.all_agree());
    }

    #[test]
    fn guard_violation_is_reported() {
        assert!(matches!(
            scan_main_theorem(3, &rat(1, 1), &[]),
            Err(Error::GuardViolation { .. })
        ));
        assert!(matches!(
            scan_main_theorem(3, &rat(-1, 1), &[]),
            Err(Error::GuardViolation { .. })
        ));
    }

    #[test]
    fn witness_reports_pass() {
        for n in [3, 4, 5] {
            let report = hecke_equivalence_witness(n);
            assert!(
                report.all_pass(),
                "failures at n={n}: {:?}",
                report.failures().map(|e| &e.name).collect::<Vec<_>>()
            );
        }
    }
}
