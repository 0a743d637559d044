//! The fraction field Q(l, r), represented as normalized ratios of
//! integer-coefficient Laurent polynomials.
//!
//! Normal form: the numerator and denominator share no polynomial factor and
//! no integer content, and the denominator's trailing monomial (the
//! lexicographically least exponent pair) is exactly `+1 * l^0 * r^0`.  This
//! makes equality structural, so rational functions can be hashed and
//! compared directly.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

/// An element of Q(l, r) in normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    /// Builds `num / den`, normalizing; errors when `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            };
        }
        // Cancel the polynomial gcd of the ordinary-polynomial parts.
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() || g.is_monomial() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        // Cancel the shared integer content.
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_bigint_exact(&c);
            den = den.div_bigint_exact(&c);
        }
        // Unit normalization: make the denominator's trailing monomial +1*l^0*r^0.
        let (ta, tb) = den.trailing_exponents().expect("nonzero denominator");
        if (ta, tb) != (0, 0) {
            num = num.mul_monomial(-ta, -tb);
            den = den.mul_monomial(-ta, -tb);
        }
        if den.trailing_coeff().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Self { num, den }
    }

    /// The zero function.
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    /// The constant 1.
    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The integer constant `c`.
    pub fn from_int(c: i64) -> Self {
        Self {
            num: LaurentPoly::from_int(c),
            den: LaurentPoly::one(),
        }
    }

    /// A polynomial viewed as a rational function.
    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// The exact rational constant `q`.
    pub fn from_rational(q: &BigRational) -> Self {
        Self::normalized(
            LaurentPoly::from_bigint(q.numer().clone()),
            LaurentPoly::from_bigint(q.denom().clone()),
        )
    }

    /// The parameter `l`.
    pub fn param_l() -> Self {
        Self::from_poly(LaurentPoly::var_l())
    }

    /// The parameter `r`.
    pub fn param_r() -> Self {
        Self::from_poly(LaurentPoly::var_r())
    }

    /// The derived parameter `m = 1/r - r`.
    pub fn param_m() -> Self {
        Self::from_poly(LaurentPoly::m())
    }

    /// The monomial `l^a * r^b`.
    pub fn monomial(a: i64, b: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(a, b, BigInt::one()))
    }

    /// Numerator in normal form.
    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    /// Denominator in normal form.
    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    /// True for the zero function.
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True for the constant 1.
    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Term count of numerator plus denominator; used as the structural size
    /// for pivot selection.
    pub fn complexity(&self) -> usize {
        self.num.num_terms() + self.den.num_terms()
    }

    /// True when the value is a rational constant (no `l`, `r` dependence).
    pub fn is_constant(&self) -> bool {
        self.as_rational().is_some()
    }

    /// The value as an exact rational constant, when it is one.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        // In normal form a constant is integer/integer with den trailing 1.
        let (na, nb) = self.num.leading_exponents()?;
        let (da, db) = self.den.leading_exponents()?;
        if self.num.is_monomial()
            && self.den.is_monomial()
            && (na, nb) == (0, 0)
            && (da, db) == (0, 0)
        {
            Some(BigRational::new(
                self.num.coeff(0, 0),
                self.den.coeff(0, 0),
            ))
        } else {
            None
        }
    }

    /// Exact sum.
    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let num = self
            .num
            .mul(&other.den)
            .add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::normalized(num, den)
    }

    /// Exact difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        Self::normalized(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Exact quotient; errors on division by the zero function.
    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        Ok(Self::normalized(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    /// Integer power (negative exponents invert; errors on 0^negative).
    pub fn pow(&self, exp: i64) -> Result<Self> {
        if exp == 0 {
            return Ok(Self::one());
        }
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Scales by an integer.
    pub fn mul_int(&self, c: i64) -> Self {
        self.mul(&Self::from_int(c))
    }

    /// The conjugation endomorphism `r -> -1/r` of Q(l, r).
    pub fn conjugate_r(&self) -> Self {
        Self::normalized(self.num.subst_r_neg_inv(), self.den.subst_r_neg_inv())
    }

    /// Substitutes `l -> sign * r^k`; errors when the denominator collapses
    /// to zero under the substitution.
    pub fn subst_l_signed_power(&self, sign: i64, k: i64) -> Result<Self> {
        let den = self.den.subst_l_signed_power(sign, k);
        if den.is_zero() {
            return Err(Error::PoleAtSpecialization);
        }
        Ok(Self::normalized(
            self.num.subst_l_signed_power(sign, k),
            den,
        ))
    }

    /// Evaluates at exact rational values of `l` and `r` (both nonzero);
    /// errors when the denominator vanishes at the point.
    pub fn eval_rational(&self, l0: &BigRational, r0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(l0, r0);
        if d.is_zero() {
            return Err(Error::PoleAtSpecialization);
        }
        Ok(self.num.eval(l0, r0) / d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait for &RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$inner(self, rhs)
            }
        }
        impl $trait for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                RatFunc::$inner(&self, &rhs)
            }
        }
        impl $trait<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &RatFunc) -> RatFunc {
                RatFunc::$inner(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::div(self, rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(self)
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::neg(&self)
    }
}
