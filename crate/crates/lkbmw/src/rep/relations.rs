//! Exhaustive verification of the defining and derived algebra relations on
//! the matrix images, and the determinant recursion for the image of `g_1`.
//!
//! Every admissible index instance is checked by exact matrix identity, never
//! a sample.  Relation numbers refer to the standard presentation:
//!
//! 1. `g_i g_j = g_j g_i` for `|i-j| >= 2`
//! 2. `g_i g_j g_i = g_j g_i g_j` for `|i-j| = 1`
//! 3. `e_i = (l/m)(g_i^2 + m g_i - 1)`
//! 4. `g_i e_i = l^{-1} e_i`
//! 5. `e_i g_j e_i = l e_i` for `|i-j| = 1`
//! 6. `e_i g_i = l^{-1} e_i`
//! 7. `g_i^2 = 1 - m g_i + m l^{-1} e_i`
//! 8. `g_i^{-1} = g_i + m - m e_i`
//! 9. `g_i g_j e_i = e_j e_i` for `|i-j| = 1`
//! 10. `g_i e_j e_i = g_j e_i + m(e_i - e_j e_i)` for `|i-j| = 1`
//! 11. `e_j e_i g_j = e_j g_i^{-1}` for `|i-j| = 1`
//! 12. `e_i e_j e_i = e_i` for `|i-j| = 1`
//! 13. `e_j g_{j-1}..g_{i+1} e_i..e_1 = e_j..e_1 g_j^{-1}..g_{i+2}^{-1}`
//!
//! plus the annihilation `e_i e_j = 0` for `|i-j| >= 2`, which holds in the
//! quotient the representation factors through.

use rayon::prelude::*;

use super::word::{eval_word, BMWWord, GenKind};
use super::{build_nu, LKRep};
use crate::error::Result;
use crate::exact::{specialize, ParamSpec, RatFunc};
use crate::linalg::Matrix;
use crate::report::CheckReport;

/// Runs every relation instance for the representation; failures become
/// report entries, not errors.
pub fn verify_relations(rep: &LKRep) -> CheckReport {
    let n = rep.n;
    let mut jobs: Vec<(String, Box<dyn Fn() -> bool + Sync + Send>)> = Vec::new();
    let s = rep.scalars().clone();
    let ident = Matrix::identity(rep.dim());

    let pairs_far: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i < j && j - i >= 2)
        .collect();
    let pairs_adjacent: Vec<(usize, usize)> = (1..n)
        .flat_map(|i| (1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| i != j && i.abs_diff(j) == 1)
        .collect();

    for &(i, j) in &pairs_far {
        let (gi, gj) = (rep.nu(i).clone(), rep.nu(j).clone());
        jobs.push((
            format!("(1) g{i} g{j} = g{j} g{i}"),
            Box::new(move || gi.mul(&gj).unwrap() == gj.mul(&gi).unwrap()),
        ));
    }
    for &(i, j) in &pairs_adjacent {
        if i < j {
            let (gi, gj) = (rep.nu(i).clone(), rep.nu(j).clone());
            jobs.push((
                format!("(2) g{i} g{j} g{i} = g{j} g{i} g{j}"),
                Box::new(move || {
                    gi.mul(&gj).unwrap().mul(&gi).unwrap()
                        == gj.mul(&gi).unwrap().mul(&gj).unwrap()
                }),
            ));
        }
    }
    for i in 1..n {
        let (gi, ei) = (rep.nu(i).clone(), rep.e(i).clone());
        let (m, l, l_inv) = (s.m.clone(), s.l.clone(), s.l_inv.clone());
        let id = ident.clone();
        jobs.push((
            format!("(3) e{i} = (l/m)(g{i}^2 + m g{i} - 1)"),
            Box::new(move || {
                let combo = gi
                    .mul(&gi)
                    .unwrap()
                    .add(&gi.scale(&m))
                    .unwrap()
                    .sub(&id)
                    .unwrap()
                    .scale(&l.div(&m).unwrap());
                combo == ei
            }),
        ));
        let (gi, ei) = (rep.nu(i).clone(), rep.e(i).clone());
        let li = l_inv.clone();
        jobs.push((
            format!("(4) g{i} e{i} = l^-1 e{i}"),
            Box::new(move || gi.mul(&ei).unwrap() == ei.scale(&li)),
        ));
        let (gi, ei) = (rep.nu(i).clone(), rep.e(i).clone());
        let li = s.l_inv.clone();
        jobs.push((
            format!("(6) e{i} g{i} = l^-1 e{i}"),
            Box::new(move || ei.mul(&gi).unwrap() == ei.scale(&li)),
        ));
        let (gi, ei) = (rep.nu(i).clone(), rep.e(i).clone());
        let (m, l_inv) = (s.m.clone(), s.l_inv.clone());
        let id = ident.clone();
        jobs.push((
            format!("(7) g{i}^2 = 1 - m g{i} + m l^-1 e{i}"),
            Box::new(move || {
                let rhs = id
                    .sub(&gi.scale(&m))
                    .unwrap()
                    .add(&ei.scale(&m.mul(&l_inv)))
                    .unwrap();
                gi.mul(&gi).unwrap() == rhs
            }),
        ));
        let (gi, gi_inv) = (rep.nu(i).clone(), rep.nu_inv(i).clone());
        let id = ident.clone();
        jobs.push((
            format!("(8) g{i} (g{i} + m - m e{i}) = 1"),
            Box::new(move || gi.mul(&gi_inv).unwrap() == id),
        ));
    }
    for &(i, j) in &pairs_adjacent {
        let (ei, gj) = (rep.e(i).clone(), rep.nu(j).clone());
        let l = s.l.clone();
        jobs.push((
            format!("(5) e{i} g{j} e{i} = l e{i}"),
            Box::new(move || {
                ei.mul(&gj).unwrap().mul(&ei).unwrap() == ei.scale(&l)
            }),
        ));
        let (gi, gj, ei, ej) = (
            rep.nu(i).clone(),
            rep.nu(j).clone(),
            rep.e(i).clone(),
            rep.e(j).clone(),
        );
        jobs.push((
            format!("(9) g{i} g{j} e{i} = e{j} e{i}"),
            Box::new(move || {
                gi.mul(&gj).unwrap().mul(&ei).unwrap() == ej.mul(&ei).unwrap()
            }),
        ));
        let (gi, gj, ei, ej) = (
            rep.nu(i).clone(),
            rep.nu(j).clone(),
            rep.e(i).clone(),
            rep.e(j).clone(),
        );
        let m = s.m.clone();
        jobs.push((
            format!("(10) g{i} e{j} e{i} = g{j} e{i} + m(e{i} - e{j} e{i})"),
            Box::new(move || {
                let eji = ej.mul(&ei).unwrap();
                let lhs = gi.mul(&eji).unwrap();
                let rhs = gj
                    .mul(&ei)
                    .unwrap()
                    .add(&ei.sub(&eji).unwrap().scale(&m))
                    .unwrap();
                lhs == rhs
            }),
        ));
        let (gj, ei, ej) = (rep.nu(j).clone(), rep.e(i).clone(), rep.e(j).clone());
        let gi_inv = rep.nu_inv(i).clone();
        jobs.push((
            format!("(11) e{j} e{i} g{j} = e{j} g{i}^-1"),
            Box::new(move || {
                ej.mul(&ei).unwrap().mul(&gj).unwrap() == ej.mul(&gi_inv).unwrap()
            }),
        ));
        let (ei, ej) = (rep.e(i).clone(), rep.e(j).clone());
        jobs.push((
            format!("(12) e{i} e{j} e{i} = e{i}"),
            Box::new(move || {
                ei.mul(&ej).unwrap().mul(&ei).unwrap() == ei
            }),
        ));
    }
    // (13): e_j g_{j-1,i+1} e_{i,1} = e_{j,1} g_j^{-1} .. g_{i+2}^{-1},  1 <= i < j <= n-1.
    for j in 2..n {
        for i in 1..j {
            let mut lhs = BMWWord::identity();
            lhs.push(j, GenKind::E);
            for k in (i + 1..j).rev() {
                lhs.push(k, GenKind::G);
            }
            for k in (1..=i).rev() {
                lhs.push(k, GenKind::E);
            }
            let mut rhs = BMWWord::identity();
            for k in (1..=j).rev() {
                rhs.push(k, GenKind::E);
            }
            for k in (i + 2..=j).rev() {
                rhs.push(k, GenKind::GInv);
            }
            let rep2 = rep.clone();
            jobs.push((
                format!("(13) i={i} j={j}"),
                Box::new(move || eval_word(&rep2, &lhs) == eval_word(&rep2, &rhs)),
            ));
        }
    }
    // Annihilation e_i e_j = 0 for |i-j| >= 2 (both orders).
    for &(i, j) in &pairs_far {
        let (ei, ej) = (rep.e(i).clone(), rep.e(j).clone());
        jobs.push((
            format!("e{i} e{j} = 0 and e{j} e{i} = 0"),
            Box::new(move || {
                ei.mul(&ej).unwrap().is_zero() && ej.mul(&ei).unwrap().is_zero()
            }),
        ));
    }

    let results: Vec<(String, bool)> = jobs
        .into_par_iter()
        .map(|(name, f)| {
            let ok = f();
            (name, ok)
        })
        .collect();
    let mut report = CheckReport::new(format!(
        "BMW relations on matrix images, n = {n}{}",
        if rep.conjugated { " (conjugate)" } else { "" }
    ));
    for (name, pass) in results {
        report.push(name, pass);
    }
    report
}

/// Verifies `det G_1(3) = -1/l` and `det G_1(n) = -r^{n-3} det G_1(n-1)` for
/// `4 <= n <= n_max` under the given specialization.
pub fn det_g1_recursion_check(n_max: usize, spec: &ParamSpec) -> Result<CheckReport> {
    assert!(n_max >= 3, "determinant recursion starts at n = 3");
    let mut report = CheckReport::new(format!("det G_1(n) recursion up to n = {n_max}"));
    let minus_l_inv = specialize(&RatFunc::param_l().inv()?.neg(), spec)?;
    let mut prev = build_nu(3, 1, spec, false)?.det()?;
    report.push_detail(
        "det G_1(3) = -1/l",
        prev == minus_l_inv,
        format!("det = {prev}"),
    );
    for n in 4..=n_max {
        let det_n = build_nu(n, 1, spec, false)?.det()?;
        let factor = specialize(
            &RatFunc::monomial(0, (n as i64) - 3).neg(),
            spec,
        )?;
        let expected = factor.mul(&prev);
        report.push_detail(
            format!("det G_1({n}) = -r^{} det G_1({})", n - 3, n - 1),
            det_n == expected,
            format!("det = {det_n}"),
        );
        prev = det_n;
    }
    Ok(report)
}
