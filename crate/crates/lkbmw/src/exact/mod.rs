//! Exact arithmetic: Laurent polynomials in `l`, `r`, the fraction field
//! Q(l, r), and parameter specializations.

pub mod laurent;
pub mod param;
pub mod ratfunc;

pub use laurent::{LaurentPoly, ParsePolyError};
pub use param::{guard_check, specialize, ParamMode, ParamSpec, Sign};
pub use ratfunc::RatFunc;
