//! The Lawrence-Krammer representation of the BMW algebra of type `A_{n-1}`.
//!
//! For each generator `g_k` the matrix `nu_k` acts on the basis vector
//! `x_beta` (indexed by positive roots in the canonical order) according to
//! the six-case table:
//!
//! - (a)  `r * x_beta`
//! - (b)  `1/l * x_beta`
//! - (c)  `x_{beta+alpha_k}`
//! - (c') `x_{beta+alpha_k} + m r^{ht(beta)-1} x_{alpha_k} - m x_beta`
//! - (d)  `x_{beta-alpha_k} + m/(l r^{ht(beta)-2}) x_{alpha_k} - m x_beta`
//! - (d') `x_{beta-alpha_k}`
//!
//! The images `E_k` of the `e_k` send every basis vector to a multiple of
//! `x_{alpha_k}`; the multiple is `0`, `1 - (l - 1/l)/m`, `r^{-(ht-1)}`,
//! `r^{ht-1}`, `1/(l r^{ht-2})` or `l r^{ht-2}` per case.
//!
//! The conjugate representation replaces every `r` by `-1/r` before
//! specialization; `m` is invariant under this substitution.

mod hecke;
mod relations;
mod word;

pub use hecke::{fact1_matrices, hecke_degree_matrices, hecke_relations_hold, HeckeFamily};
pub use relations::{det_g1_recursion_check, verify_relations};
pub use word::{build_cij, cij_word, eval_word, BMWWord, GenKind};

use crate::error::{Error, Result};
use crate::exact::{specialize, ParamSpec, RatFunc};
use crate::linalg::Matrix;
use crate::roots::{add_simple, classify, enumerate_roots, root_index, sub_simple, CaseTag, PosRoot};

/// The representation at a fixed strand count and parameter specialization.
///
/// Holds the matrices of `g_1..g_{n-1}`, their inverses (by the closed form
/// `g^{-1} = g + m - m e`), and the images of `e_1..e_{n-1}`.
#[derive(Debug, Clone)]
pub struct LKRep {
    /// Strand count; the matrices have size `n(n-1)/2`.
    pub n: usize,
    /// The parameter specialization the matrices were built at.
    pub spec: ParamSpec,
    /// Whether the conjugate representation (`r -> -1/r`) was built.
    pub conjugated: bool,
    nu: Vec<Matrix>,
    nu_inv: Vec<Matrix>,
    e: Vec<Matrix>,
    scalars: Scalars,
}

/// The parameter values as elements of the specialized coefficient field.
#[derive(Debug, Clone)]
pub struct Scalars {
    /// Image of `l`.
    pub l: RatFunc,
    /// Image of `1/l`.
    pub l_inv: RatFunc,
    /// Image of `m = 1/r - r` (fixed by conjugation).
    pub m: RatFunc,
    /// Image of the Hecke eigenvalue: `r`, or `-1/r` for the conjugate
    /// representation.
    pub r: RatFunc,
}

impl LKRep {
    /// Builds the representation; requires `n >= 3` and a specialization
    /// without poles (`l, r` nonzero).
    pub fn build(n: usize, spec: ParamSpec, conjugated: bool) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidN(n));
        }
        let mut nu = Vec::with_capacity(n - 1);
        let mut e = Vec::with_capacity(n - 1);
        for k in 1..n {
            nu.push(build_nu(n, k, &spec, conjugated)?);
            e.push(build_e(n, k, &spec, conjugated)?);
        }
        let scalars = Scalars {
            l: pipeline(&RatFunc::param_l(), &spec, conjugated)?,
            l_inv: pipeline(&RatFunc::param_l().inv()?, &spec, conjugated)?,
            m: pipeline(&RatFunc::param_m(), &spec, conjugated)?,
            r: pipeline(&RatFunc::param_r(), &spec, conjugated)?,
        };
        // g^{-1} = g + m - m e, entrywise.
        let dim = n * (n - 1) / 2;
        let ident = Matrix::identity(dim);
        let nu_inv = nu
            .iter()
            .zip(&e)
            .map(|(g, ee)| {
                let mi = ident.scale(&scalars.m);
                let me = ee.scale(&scalars.m);
                g.add(&mi).and_then(|s| s.sub(&me))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n,
            spec,
            conjugated,
            nu,
            nu_inv,
            e,
            scalars,
        })
    }

    /// Dimension of the representation, `n(n-1)/2`.
    pub fn dim(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// The matrix of `g_k`, `1 <= k <= n-1`.
    pub fn nu(&self, k: usize) -> &Matrix {
        &self.nu[k - 1]
    }

    /// The matrix of `g_k^{-1}` (closed form `g + m - m e`).
    pub fn nu_inv(&self, k: usize) -> &Matrix {
        &self.nu_inv[k - 1]
    }

    /// The matrix of `e_k`.
    pub fn e(&self, k: usize) -> &Matrix {
        &self.e[k - 1]
    }

    /// The specialized parameter scalars.
    pub fn scalars(&self) -> &Scalars {
        &self.scalars
    }

    /// The positive roots indexing rows and columns.
    pub fn basis(&self) -> Vec<PosRoot> {
        enumerate_roots(self.n).expect("n >= 3")
    }
}

/// Applies conjugation (when requested) and then the specialization.
fn pipeline(x: &RatFunc, spec: &ParamSpec, conjugated: bool) -> Result<RatFunc> {
    let y = if conjugated { x.conjugate_r() } else { x.clone() };
    specialize(&y, spec)
}

/// The matrix of `nu_k` on the Lawrence-Krammer space for `n` strands.
///
/// Column `beta` holds the coordinates of `nu_k(x_beta)`.
pub fn build_nu(n: usize, k: usize, spec: &ParamSpec, conjugated: bool) -> Result<Matrix> {
    assert!(n >= 2 && (1..n).contains(&k), "generator index out of range");
    let roots = enumerate_roots(n)?;
    let dim = roots.len();
    let mut mat = Matrix::zero(dim, dim);
    let r = RatFunc::param_r();
    let l_inv = RatFunc::param_l().inv()?;
    let m = RatFunc::param_m();
    let alpha_k = root_index(n, PosRoot::new(k, k + 1));
    for (col, &beta) in roots.iter().enumerate() {
        let ht = beta.height() as i64;
        match classify(beta, k) {
            CaseTag::AZero => {
                mat.set(col, col, pipeline(&r, spec, conjugated)?);
            }
            CaseTag::BSimple => {
                mat.set(col, col, pipeline(&l_inv, spec, conjugated)?);
            }
            CaseTag::Cc => {
                let up = root_index(n, add_simple(beta, k).expect("case (c)"));
                mat.set(up, col, RatFunc::one());
            }
            CaseTag::CcPrime => {
                let up = root_index(n, add_simple(beta, k).expect("case (c')"));
                mat.set(up, col, RatFunc::one());
                let coeff = m.mul(&RatFunc::monomial(0, ht - 1));
                mat.set(alpha_k, col, pipeline(&coeff, spec, conjugated)?);
                mat.set(col, col, pipeline(&m.neg(), spec, conjugated)?);
            }
            CaseTag::Dd => {
                let down = root_index(n, sub_simple(beta, k).expect("case (d)"));
                mat.set(down, col, RatFunc::one());
                let coeff = m.mul(&RatFunc::monomial(-1, 2 - ht));
                mat.set(alpha_k, col, pipeline(&coeff, spec, conjugated)?);
                mat.set(col, col, pipeline(&m.neg(), spec, conjugated)?);
            }
            CaseTag::DdPrime => {
                let down = root_index(n, sub_simple(beta, k).expect("case (d')"));
                mat.set(down, col, RatFunc::one());
            }
        }
    }
    Ok(mat)
}

/// The matrix of `nu(e_k)`; every nonzero column is a multiple of the basis
/// vector of `alpha_k`.
pub fn build_e(n: usize, k: usize, spec: &ParamSpec, conjugated: bool) -> Result<Matrix> {
    assert!(n >= 2 && (1..n).contains(&k), "generator index out of range");
    let roots = enumerate_roots(n)?;
    let dim = roots.len();
    let mut mat = Matrix::zero(dim, dim);
    let alpha_k = root_index(n, PosRoot::new(k, k + 1));
    for (col, &beta) in roots.iter().enumerate() {
        let ht = beta.height() as i64;
        let coeff = match classify(beta, k) {
            CaseTag::AZero => continue,
            // 1 - (l - 1/l)/m
            CaseTag::BSimple => {
                let l = RatFunc::param_l();
                let diff = l.sub(&l.inv()?);
                RatFunc::one().sub(&diff.div(&RatFunc::param_m())?)
            }
            CaseTag::Cc => RatFunc::monomial(0, 1 - ht),
            CaseTag::CcPrime => RatFunc::monomial(0, ht - 1),
            CaseTag::Dd => RatFunc::monomial(-1, 2 - ht),
            CaseTag::DdPrime => RatFunc::monomial(1, ht - 2),
        };
        mat.set(alpha_k, col, pipeline(&coeff, spec, conjugated)?);
    }
    Ok(mat)
}
