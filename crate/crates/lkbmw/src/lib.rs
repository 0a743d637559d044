//! Exact construction and analysis of the Lawrence-Krammer representation of
//! the BMW algebra of type `A_{n-1}`.
//!
//! The crate builds the degree `n(n-1)/2` matrices of the generators `g_i`
//! and of the idempotent-like elements `e_i` over the rational-function field
//! Q(l, r), verifies the defining and derived relations of the algebra on the
//! matrix images, constructs the explicit invariant subspaces that exist at
//! special parameter values, and decides reducibility at exact rational
//! parameter points through the kernel-intersection subspace `K(n)`.
//!
//! All arithmetic is exact: integer-coefficient Laurent polynomials in `l`
//! and `r`, their fraction field, and arbitrary-precision rationals.  No
//! floating point anywhere.
//!
//! Module map:
//!
//! - [`exact`] - Laurent polynomials, the field Q(l, r), specializations
//! - [`linalg`] - dense exact linear algebra over Q(l, r) (Bareiss
//!   determinant, kernels, echelon subspaces, linear solving)
//! - [`roots`] - type `A_{n-1}` positive-root combinatorics and the basis
//!   order of the Lawrence-Krammer space
//! - [`rep`] - the representation matrices, algebra words, conjugates
//!   `c_{ij}`, relation verification, Hecke-family matrices
//! - [`subspace`] - explicit invariant vectors, `K(n)`, reducibility and
//!   indecomposability tests, parameter scans
//! - [`report`] - pass/fail report structures shared with the CLI

pub mod error;
pub mod exact;
pub mod linalg;
pub mod report;
pub mod rep;
pub mod roots;
pub mod subspace;

pub use error::{Error, Result};
pub use exact::{guard_check, specialize, LaurentPoly, ParamMode, ParamSpec, RatFunc, Sign};
pub use linalg::{Matrix, Subspace};
pub use rep::{build_cij, build_e, build_nu, eval_word, BMWWord, GenKind, LKRep};
pub use report::{CheckEntry, CheckReport, ScanReport, ScanRow};
pub use roots::{classify, enumerate_roots, CaseTag, PosRoot};
pub use subspace::{NamedVector, ReducibilityVerdict};
