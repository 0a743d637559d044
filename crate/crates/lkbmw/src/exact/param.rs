//! Parameter specializations of Q(l, r) and the semisimplicity guard.
//!
//! A [`ParamSpec`] is either fully symbolic, a substitution `l = ±r^k`
//! (univariate in `r`), or an exact rational point `(l, r)`.  Specialization
//! is a ring homomorphism; the guard `r^{2k} != 1` for `k = 1..n` is the
//! standing semisimplicity assumption for the Hecke algebra on `n` strands.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Sign of the `l = ±r^k` substitution.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    /// `+1`
    Plus,
    /// `-1`
    Minus,
}

impl Sign {
    /// The sign as `+1` or `-1`.
    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// How the parameters are specialized.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ParamMode {
    /// Fully symbolic `(l, r)`.
    Generic,
    /// Substitute `l = sign * r^power`; `r` stays symbolic.
    LSubst {
        /// Sign of the substituted power of `r`.
        sign: Sign,
        /// Exponent `k` in `l = sign * r^k` (may be negative).
        power: i64,
    },
    /// Exact rational values for both parameters (both nonzero).
    Numeric {
        /// Value of `l`.
        l: BigRational,
        /// Value of `r`.
        r: BigRational,
    },
}

/// A parameter specialization together with the strand count whose
/// semisimplicity guard it is expected to satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamSpec {
    /// The substitution performed by [`specialize`].
    pub mode: ParamMode,
    /// The `n` whose guard `r^{2k} != 1` (k = 1..n) is intended to hold.
    pub guard_n: usize,
}

impl ParamSpec {
    /// Fully symbolic parameters.
    pub fn generic(guard_n: usize) -> Self {
        Self {
            mode: ParamMode::Generic,
            guard_n,
        }
    }

    /// The substitution `l = sign * r^power`.
    pub fn l_subst(sign: Sign, power: i64, guard_n: usize) -> Self {
        Self {
            mode: ParamMode::LSubst { sign, power },
            guard_n,
        }
    }

    /// An exact rational point; errors when `l` or `r` is zero.
    pub fn numeric(l: BigRational, r: BigRational, guard_n: usize) -> Result<Self> {
        if l.is_zero() || r.is_zero() {
            return Err(Error::PoleAtSpecialization);
        }
        Ok(Self {
            mode: ParamMode::Numeric { l, r },
            guard_n,
        })
    }

    /// True when the parameters are fully symbolic.
    pub fn is_generic(&self) -> bool {
        matches!(self.mode, ParamMode::Generic)
    }

    /// The numeric `r` value, when in numeric mode.
    pub fn numeric_r(&self) -> Option<&BigRational> {
        match &self.mode {
            ParamMode::Numeric { r, .. } => Some(r),
            _ => None,
        }
    }

    /// The numeric `l` value, when in numeric mode.
    pub fn numeric_l(&self) -> Option<&BigRational> {
        match &self.mode {
            ParamMode::Numeric { l, .. } => Some(l),
            _ => None,
        }
    }
}

/// Applies the specialization to a rational function.
///
/// `Generic` is the identity; `LSubst` substitutes `l = ±r^k`; `Numeric`
/// evaluates to a rational constant.  Errors with
/// [`Error::PoleAtSpecialization`] when a denominator vanishes.
pub fn specialize(x: &RatFunc, spec: &ParamSpec) -> Result<RatFunc> {
    match &spec.mode {
        ParamMode::Generic => Ok(x.clone()),
        ParamMode::LSubst { sign, power } => x.subst_l_signed_power(sign.as_int(), *power),
        ParamMode::Numeric { l, r } => {
            let v = x.eval_rational(l, r)?;
            Ok(RatFunc::from_rational(&v))
        }
    }
}

/// Checks the semisimplicity guard `r^{2k} != 1` for all `k = 1..n`.
///
/// Symbolic `r` (generic or `LSubst` mode) passes vacuously.
pub fn guard_check(spec: &ParamSpec, n: usize) -> bool {
    match &spec.mode {
        ParamMode::Generic | ParamMode::LSubst { .. } => true,
        ParamMode::Numeric { r, .. } => {
            let r2 = r * r;
            let mut pow = BigRational::one();
            for _ in 1..=n {
                pow *= &r2;
                if pow.is_one() {
                    return false;
                }
            }
            true
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn specialize_l_substitution() {
        // m/l at l = +r^{-5} gives m * r^5.
        let x = RatFunc::param_m()
            .div(&RatFunc::param_l())
            .unwrap();
        let spec = ParamSpec::l_subst(Sign::Plus, -5, 3);
        let got = specialize(&x, &spec).unwrap();
        let want = RatFunc::param_m().mul(&RatFunc::monomial(0, 5));
        assert_eq!(got, want);
    }

    #[test]
    fn specialize_numeric_point() {
        // (1/r - r) at (l=3, r=2) = -3/2.
        let m = RatFunc::param_m();
        let spec = ParamSpec::numeric(rat(3, 1), rat(2, 1), 3).unwrap();
        let got = specialize(&m, &spec).unwrap();
        assert_eq!(got.as_rational().unwrap(), rat(-3, 2));
    }

    #[test]
    fn specialize_detects_pole() {
        // 1/(l*r^5 - 1) at a point with l*r^5 = 1.
        let den = RatFunc::param_l().mul(&RatFunc::monomial(0, 5)) - RatFunc::one();
        let x = RatFunc::one().div(&den).unwrap();
        let spec = ParamSpec::numeric(rat(1, 32), rat(2, 1), 3).unwrap();
        assert_eq!(specialize(&x, &spec), Err(Error::PoleAtSpecialization));
        // The same substitution performed symbolically is also a pole.
        let sym = ParamSpec::l_subst(Sign::Plus, -5, 3);
        assert_eq!(specialize(&x, &sym), Err(Error::PoleAtSpecialization));
    }

    #[test]
    fn guard_examples() {
        let ok = ParamSpec::numeric(rat(5, 1), rat(2, 1), 6).unwrap();
        assert!(guard_check(&ok, 6));
        let bad = ParamSpec::numeric(rat(5, 1), rat(1, 1), 3).unwrap();
        assert!(!guard_check(&bad, 3));
        let bad_neg = ParamSpec::numeric(rat(5, 1), rat(-1, 1), 3).unwrap();
        assert!(!guard_check(&bad_neg, 3));
        assert!(guard_check(&ParamSpec::generic(4), 4));
    }

    #[test]
    fn zero_parameters_rejected() {
        assert!(ParamSpec::numeric(rat(0, 1), rat(2, 1), 3).is_err());
        assert!(ParamSpec::numeric(rat(2, 1), rat(0, 1), 3).is_err());
    }
}
