//! Integer-coefficient Laurent polynomials in the two parameters `l` and `r`.
//!
//! A [`LaurentPoly`] is a finite map from exponent pairs `(a, b)` (the
//! monomial `l^a * r^b`, exponents may be negative) to nonzero [`BigInt`]
//! coefficients.  The zero polynomial is the empty map.  All arithmetic is
//! exact.
//!
//! The canonical string form prints monomials in descending lexicographic
//! order of `(a, b)`; see [`LaurentPoly::to_canonical_string`] for the
//! grammar.  The parameter `m` never appears as its own symbol: it is always
//! the derived value `1/r - r`, available as [`LaurentPoly::m`].

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(a, b)` for the monomial `l^a * r^b`.
pub type Exponents = (i64, i64);

/// An integer-coefficient Laurent polynomial in `l` and `r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    // Invariant: no stored coefficient is zero.
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    /// The zero polynomial (empty term map).
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The constant polynomial `c`.
    pub fn from_int(c: i64) -> Self {
        Self::from_bigint(BigInt::from(c))
    }

    /// The constant polynomial with the given big-integer value.
    pub fn from_bigint(c: BigInt) -> Self {
        Self::monomial(0, 0, c)
    }

    /// The single monomial `coeff * l^a * r^b` (zero coefficient gives 0).
    pub fn monomial(a: i64, b: i64, coeff: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((a, b), coeff);
        }
        Self { terms }
    }

    /// The variable `l`.
    pub fn var_l() -> Self {
        Self::monomial(1, 0, BigInt::one())
    }

    /// The variable `r`.
    pub fn var_r() -> Self {
        Self::monomial(0, 1, BigInt::one())
    }

    /// The quadratic-relation parameter `m = 1/r - r`.
    pub fn m() -> Self {
        Self::from_terms(vec![((0, -1), BigInt::one()), ((0, 1), -BigInt::one())])
    }

    /// Builds a polynomial from a raw term list, merging like monomials and
    /// dropping zero coefficients.
    pub fn from_terms<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, BigInt)>,
    {
        let mut terms: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (exp, coeff) in raw {
            if coeff.is_zero() {
                continue;
            }
            let entry = terms.entry(exp).or_insert_with(BigInt::zero);
            *entry += coeff;
            if entry.is_zero() {
                terms.remove(&exp);
            }
        }
        Self { terms }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// Number of stored monomials.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True when the polynomial is a single monomial (or zero).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() <= 1
    }

    /// Iterates over `(exponents, coefficient)` pairs in ascending lex order.
    pub fn iter(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient of the monomial `l^a * r^b` (zero when absent).
    pub fn coeff(&self, a: i64, b: i64) -> BigInt {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The lexicographically least exponent pair, i.e. the trailing monomial.
    pub fn trailing_exponents(&self) -> Option<Exponents> {
        self.terms.keys().next().copied()
    }

    /// The lexicographically greatest exponent pair.
    pub fn leading_exponents(&self) -> Option<Exponents> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient at the trailing (lex-least) monomial.
    pub fn trailing_coeff(&self) -> BigInt {
        self.trailing_exponents()
            .map(|e| self.terms[&e].clone())
            .unwrap_or_else(BigInt::zero)
    }

    /// Minimal exponents of `l` and `r` over all terms (zero polynomial gives
    /// `(0, 0)`).
    pub fn min_exponents(&self) -> Exponents {
        let mut min_a = i64::MAX;
        let mut min_b = i64::MAX;
        for &(a, b) in self.terms.keys() {
            min_a = min_a.min(a);
            min_b = min_b.min(b);
        }
        if self.terms.is_empty() {
            (0, 0)
        } else {
            (min_a, min_b)
        }
    }

    /// Maximal exponents of `l` and `r` over all terms.
    pub fn max_exponents(&self) -> Exponents {
        let mut max_a = i64::MIN;
        let mut max_b = i64::MIN;
        for &(a, b) in self.terms.keys() {
            max_a = max_a.max(a);
            max_b = max_b.max(b);
        }
        if self.terms.is_empty() {
            (0, 0)
        } else {
            (max_a, max_b)
        }
    }

    /// Multiplies by the monomial `l^a * r^b`.
    pub fn mul_monomial(&self, a: i64, b: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(x, y), c)| ((x + a, y + b), c.clone()))
            .collect();
        Self { terms }
    }

    /// Multiplies every coefficient by the integer `c`.
    pub fn mul_bigint(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(&e, coeff)| (e, coeff * c))
            .collect();
        Self { terms }
    }

    /// Negation.
    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(&e, c)| (e, -c)).collect();
        Self { terms }
    }

    /// Exact sum.
    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&e, c) in &other.terms {
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        Self { terms }
    }

    /// Exact difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // Single-monomial factors are the common case in the representation
        // matrices; avoid the map merge.
        if other.terms.len() == 1 {
            let (&(a, b), c) = other.terms.iter().next().unwrap();
            return self.mul_monomial(a, b).mul_bigint(c);
        }
        if self.terms.len() == 1 {
            return other.mul(self);
        }
        let mut terms: BTreeMap<Exponents, BigInt> = BTreeMap::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                let e = (a1 + a2, b1 + b2);
                let entry = terms.entry(e).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
                if entry.is_zero() {
                    terms.remove(&e);
                }
            }
        }
        Self { terms }
    }

    /// Integer content: positive gcd of all coefficients (zero poly gives 0).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `c`; panics if the division is not exact.
    pub fn div_bigint_exact(&self, c: &BigInt) -> Self {
        assert!(!c.is_zero(), "division of polynomial by zero integer");
        let terms = self
            .terms
            .iter()
            .map(|(&e, coeff)| {
                let (q, rem) = coeff.div_rem(c);
                assert!(rem.is_zero(), "inexact integer division of coefficients");
                (e, q)
            })
            .collect();
        Self { terms }
    }

    /// The conjugation endomorphism `r -> -1/r` (fixes `l` and `m`).
    pub fn subst_r_neg_inv(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(&(a, b), c)| {
                let coeff = if b.rem_euclid(2) == 1 { -c } else { c.clone() };
                ((a, -b), coeff)
            })
            .collect();
        Self { terms }
    }

    /// Substitutes `l -> sign * r^k`, producing a Laurent polynomial in `r`
    /// alone.
    pub fn subst_l_signed_power(&self, sign: i64, k: i64) -> Self {
        debug_assert!(sign == 1 || sign == -1);
        Self::from_terms(self.terms.iter().map(|(&(a, b), c)| {
            let coeff = if sign == -1 && a.rem_euclid(2) == 1 {
                -c
            } else {
                c.clone()
            };
            ((0, k * a + b), coeff)
        }))
    }

    /// Evaluates at exact rational values; `l0` and `r0` must be nonzero when
    /// negative exponents occur.
    pub fn eval(&self, l0: &BigRational, r0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for (&(a, b), c) in &self.terms {
            let term = rational_pow(l0, a) * rational_pow(r0, b) * BigRational::from(c.clone());
            acc += term;
        }
        acc
    }

    /// Exact division; returns `None` when `other` does not divide `self`.
    ///
    /// Division proceeds on the ordinary-polynomial parts (monomial factors
    /// are units of the Laurent ring and are divided out first).
    pub fn exact_div(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division of polynomial by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if other.is_monomial() {
            let (&(a, b), c) = other.terms.iter().next().unwrap();
            let shifted = self.mul_monomial(-a, -b);
            let mut out = BTreeMap::new();
            for (&e, coeff) in &shifted.terms {
                let (q, rem) = coeff.div_rem(c);
                if !rem.is_zero() {
                    return None;
                }
                out.insert(e, q);
            }
            return Some(Self { terms: out });
        }
        let (sa, sb) = self.min_exponents();
        let (oa, ob) = other.min_exponents();
        let p = nested::from_laurent(&self.mul_monomial(-sa, -sb));
        let q = nested::from_laurent(&other.mul_monomial(-oa, -ob));
        let quotient = nested::exact_div(&p, &q)?;
        Some(nested::to_laurent(&quotient).mul_monomial(sa - oa, sb - ob))
    }

    /// Greatest common divisor of the ordinary-polynomial parts of `self` and
    /// `other` (monomial unit factors are not included).  The result is
    /// normalized with positive leading coefficient; gcd of two zeros is zero.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return normalize_sign(other.clone());
        }
        if other.is_zero() {
            return normalize_sign(self.clone());
        }
        // Monomials polynomialize to integer constants: only contents matter.
        if self.is_monomial() || other.is_monomial() {
            let g = self.content().gcd(&other.content());
            return Self::from_bigint(g);
        }
        let (sa, sb) = self.min_exponents();
        let (oa, ob) = other.min_exponents();
        let p = nested::from_laurent(&self.mul_monomial(-sa, -sb));
        let q = nested::from_laurent(&other.mul_monomial(-oa, -ob));
        nested::to_laurent(&nested::gcd(&p, &q))
    }

    /// Least common multiple up to units, via `a * b / gcd(a, b)`.
    pub fn lcm(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(other);
        let prod = self.mul(other);
        prod.exact_div(&g).expect("gcd divides the product")
    }

    /// Canonical string form: monomials in descending lex order of
    /// `(l-exponent, r-exponent)`, ASCII operators.
    ///
    /// Grammar (also accepted by [`LaurentPoly::from_str`]):
    ///
    /// ```text
    /// poly    := term { (" + " | " - ") unsigned }
    /// term    := [ "-" ] unsigned
    /// unsigned:= integer | integer "*" factors | factors
    /// factors := factor { "*" factor }
    /// factor  := ("l" | "r") [ "^" integer ]
    /// ```
    ///
    /// The coefficient magnitude is printed only when it is not 1 or when the
    /// monomial is constant; exponent 1 prints as the bare variable; zero is
    /// `"0"`.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (&(a, b), coeff)) in self.terms.iter().rev().enumerate() {
            let neg = coeff.is_negative();
            let mag = coeff.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut factors = Vec::new();
            if a != 0 {
                factors.push(if a == 1 {
                    "l".to_string()
                } else {
                    format!("l^{a}")
                });
            }
            if b != 0 {
                factors.push(if b == 1 {
                    "r".to_string()
                } else {
                    format!("r^{b}")
                });
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&factors.join("*"));
            } else {
                out.push_str(&mag.to_string());
                out.push('*');
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

fn normalize_sign(p: LaurentPoly) -> LaurentPoly {
    match p.leading_exponents() {
        Some(e) if p.coeff(e.0, e.1).is_negative() => p.neg(),
        _ => p,
    }
}

fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    if exp == 0 {
        return BigRational::one();
    }
    let p = num_traits::pow::pow(base.clone(), exp.unsigned_abs() as usize);
    if exp < 0 {
        assert!(!p.is_zero(), "negative power of zero");
        p.recip()
    } else {
        p
    }
}

/// Parse error for the canonical polynomial grammar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePolyError(pub String);

impl fmt::Display for ParsePolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid polynomial: {}", self.0)
    }
}

impl std::error::Error for ParsePolyError {}

impl FromStr for LaurentPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParsePolyError("empty input".into()));
        }
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut terms: Vec<(Exponents, BigInt)> = Vec::new();
        // Split into signed chunks on " + " / " - " while honoring a leading "-".
        let mut rest = s;
        let mut sign = 1i64;
        if let Some(tail) = rest.strip_prefix('-') {
            sign = -1;
            rest = tail.trim_start();
        }
        loop {
            let (chunk, next) = match (rest.find(" + "), rest.find(" - ")) {
                (Some(p), Some(q)) if p < q => (&rest[..p], Some((1, &rest[p + 3..]))),
                (Some(_), Some(q)) => (&rest[..q], Some((-1, &rest[q + 3..]))),
                (Some(p), None) => (&rest[..p], Some((1, &rest[p + 3..]))),
                (None, Some(q)) => (&rest[..q], Some((-1, &rest[q + 3..]))),
                (None, None) => (rest, None),
            };
            let (exp, coeff) = parse_unsigned_term(chunk)?;
            terms.push((exp, coeff * BigInt::from(sign)));
            match next {
                Some((s2, tail)) => {
                    sign = s2;
                    rest = tail;
                }
                None => break,
            }
        }
        Ok(Self::from_terms(terms))
    }
}

fn parse_unsigned_term(s: &str) -> std::result::Result<(Exponents, BigInt), ParsePolyError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParsePolyError("empty term".into()));
    }
    let mut coeff = BigInt::one();
    let mut a = 0i64;
    let mut b = 0i64;
    let mut seen_coeff = false;
    let mut seen_l = false;
    let mut seen_r = false;
    for factor in s.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(ParsePolyError(format!("empty factor in {s:?}")));
        }
        if let Some(stripped) = factor.strip_prefix('l') {
            if seen_l {
                return Err(ParsePolyError(format!("repeated l factor in {s:?}")));
            }
            seen_l = true;
            a = parse_exponent(stripped)?;
        } else if let Some(stripped) = factor.strip_prefix('r') {
            if seen_r {
                return Err(ParsePolyError(format!("repeated r factor in {s:?}")));
            }
            seen_r = true;
            b = parse_exponent(stripped)?;
        } else {
            if seen_coeff || seen_l || seen_r {
                return Err(ParsePolyError(format!("misplaced coefficient in {s:?}")));
            }
            seen_coeff = true;
            coeff = factor
                .parse::<BigInt>()
                .map_err(|_| ParsePolyError(format!("bad coefficient {factor:?}")))?;
        }
    }
    Ok(((a, b), coeff))
}

fn parse_exponent(s: &str) -> std::result::Result<i64, ParsePolyError> {
    if s.is_empty() {
        return Ok(1);
    }
    let body = s
        .strip_prefix('^')
        .ok_or_else(|| ParsePolyError(format!("expected ^ before exponent in {s:?}")))?;
    body.parse::<i64>()
        .map_err(|_| ParsePolyError(format!("bad exponent {body:?}")))
}

/// Nested dense representation used for gcd and exact division: a polynomial
/// in `l` whose coefficients are dense polynomials in `r` over the integers.
mod nested {
    use super::*;

    /// Dense univariate polynomial in `r`; index = degree.
    pub(super) type UPoly = Vec<BigInt>;
    /// Dense polynomial in `l` with `UPoly` coefficients; index = `l`-degree.
    pub(super) type NPoly = Vec<UPoly>;

    fn utrim(mut p: UPoly) -> UPoly {
        while p.last().map(|c| c.is_zero()).unwrap_or(false) {
            p.pop();
        }
        p
    }

    fn ntrim(mut p: NPoly) -> NPoly {
        while p.last().map(|c| c.is_empty()).unwrap_or(false) {
            p.pop();
        }
        p
    }

    pub(super) fn from_laurent(p: &LaurentPoly) -> NPoly {
        let (ma, mb) = p.min_exponents();
        debug_assert!(ma >= 0 && mb >= 0, "from_laurent expects ordinary exponents");
        let (da, db) = p.max_exponents();
        let mut out: NPoly = vec![vec![BigInt::zero(); (db + 1) as usize]; (da + 1) as usize];
        for (&(a, b), c) in p.iter() {
            out[a as usize][b as usize] = c.clone();
        }
        ntrim(out.into_iter().map(utrim).collect())
    }

    pub(super) fn to_laurent(p: &NPoly) -> LaurentPoly {
        let mut terms = Vec::new();
        for (a, up) in p.iter().enumerate() {
            for (b, c) in up.iter().enumerate() {
                if !c.is_zero() {
                    terms.push(((a as i64, b as i64), c.clone()));
                }
            }
        }
        LaurentPoly::from_terms(terms)
    }

    fn uis_zero(p: &UPoly) -> bool {
        p.is_empty()
    }

    fn uneg(p: &UPoly) -> UPoly {
        p.iter().map(|c| -c).collect()
    }

    fn uadd(p: &UPoly, q: &UPoly) -> UPoly {
        let n = p.len().max(q.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in p.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in q.iter().enumerate() {
            out[i] += c;
        }
        utrim(out)
    }

    fn usub(p: &UPoly, q: &UPoly) -> UPoly {
        uadd(p, &uneg(q))
    }

    fn umul(p: &UPoly, q: &UPoly) -> UPoly {
        if uis_zero(p) || uis_zero(q) {
            return Vec::new();
        }
        let mut out = vec![BigInt::zero(); p.len() + q.len() - 1];
        for (i, a) in p.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in q.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        utrim(out)
    }

    fn umul_int(p: &UPoly, c: &BigInt) -> UPoly {
        if c.is_zero() {
            return Vec::new();
        }
        p.iter().map(|x| x * c).collect()
    }

    fn ucontent(p: &UPoly) -> BigInt {
        let mut g = BigInt::zero();
        for c in p {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn udiv_int_exact(p: &UPoly, c: &BigInt) -> UPoly {
        p.iter()
            .map(|x| {
                let (q, rem) = x.div_rem(c);
                assert!(rem.is_zero(), "inexact content division");
                q
            })
            .collect()
    }

    /// Exact univariate division; `None` if not exact.
    pub(super) fn uexact_div(p: &UPoly, q: &UPoly) -> Option<UPoly> {
        assert!(!uis_zero(q));
        if uis_zero(p) {
            return Some(Vec::new());
        }
        if p.len() < q.len() {
            return None;
        }
        let mut rem = p.clone();
        let mut quot = vec![BigInt::zero(); p.len() - q.len() + 1];
        let qlead = q.last().unwrap();
        while !uis_zero(&rem) && rem.len() >= q.len() {
            let (c, crem) = rem.last().unwrap().div_rem(qlead);
            if !crem.is_zero() {
                return None;
            }
            let shift = rem.len() - q.len();
            quot[shift] = c.clone();
            let mut sub = vec![BigInt::zero(); shift];
            sub.extend(umul_int(q, &c));
            rem = usub(&rem, &sub);
        }
        if uis_zero(&rem) {
            Some(utrim(quot))
        } else {
            None
        }
    }

    fn upow_int(base: &BigInt, exp: usize) -> BigInt {
        let mut acc = BigInt::one();
        for _ in 0..exp {
            acc *= base;
        }
        acc
    }

    /// Subresultant-PRS gcd in `Z[r]`, positive leading coefficient.
    ///
    /// Each pseudo-remainder is divided by the Collins factor `g h^delta`,
    /// which keeps coefficient growth polynomial (the naive primitive PRS
    /// explodes on dense inputs).
    pub(super) fn ugcd(p: &UPoly, q: &UPoly) -> UPoly {
        if uis_zero(p) {
            return upositive(q.clone());
        }
        if uis_zero(q) {
            return upositive(p.clone());
        }
        let cont = ucontent(p).gcd(&ucontent(q));
        let mut a = uprimitive(p);
        let mut b = uprimitive(q);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        if a.len() == 1 || b.len() == 1 {
            // A nonzero constant divides only through the content.
            return vec![cont];
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.len() - b.len();
            let r = upseudo_rem(&a, &b);
            if uis_zero(&r) {
                return upositive(umul_int(&uprimitive(&b), &cont));
            }
            if r.len() == 1 {
                // Coprime primitive parts.
                return vec![cont];
            }
            let divisor = &g * upow_int(&h, delta);
            a = b;
            b = udiv_int_exact(&r, &divisor);
            g = a.last().unwrap().clone();
            if delta > 0 {
                let num = upow_int(&g, delta);
                let den = upow_int(&h, delta - 1);
                let (q, rem) = num.div_rem(&den);
                debug_assert!(rem.is_zero());
                h = q;
            }
        }
    }

    fn upositive(p: UPoly) -> UPoly {
        match p.last() {
            Some(c) if c.is_negative() => uneg(&p),
            _ => p,
        }
    }

    fn uprimitive(p: &UPoly) -> UPoly {
        if uis_zero(p) {
            return Vec::new();
        }
        udiv_int_exact(p, &ucontent(p))
    }

    /// Pseudo-remainder of `a` by `b` in `Z[r]`.
    fn upseudo_rem(a: &UPoly, b: &UPoly) -> UPoly {
        let mut rem = a.clone();
        let blead = b.last().unwrap().clone();
        while !uis_zero(&rem) && rem.len() >= b.len() {
            let shift = rem.len() - b.len();
            let rlead = rem.last().unwrap().clone();
            let mut sub = vec![BigInt::zero(); shift];
            sub.extend(umul_int(b, &rlead));
            rem = usub(&umul_int(&rem, &blead), &sub);
        }
        rem
    }

    fn nis_zero(p: &NPoly) -> bool {
        p.is_empty()
    }

    fn ncontent(p: &NPoly) -> UPoly {
        let mut g: UPoly = Vec::new();
        for c in p {
            g = ugcd(&g, c);
        }
        g
    }

    fn ndiv_ucoeff_exact(p: &NPoly, c: &UPoly) -> NPoly {
        p.iter()
            .map(|co| {
                if uis_zero(co) {
                    Vec::new()
                } else {
                    uexact_div(co, c).expect("inexact nested content division")
                }
            })
            .collect()
    }

    fn nmul_ucoeff(p: &NPoly, c: &UPoly) -> NPoly {
        p.iter().map(|co| umul(co, c)).collect()
    }

    fn nsub(p: &NPoly, q: &NPoly) -> NPoly {
        let n = p.len().max(q.len());
        let mut out: NPoly = vec![Vec::new(); n];
        for (i, c) in p.iter().enumerate() {
            out[i] = c.clone();
        }
        for (i, c) in q.iter().enumerate() {
            out[i] = usub(&out[i], c);
        }
        ntrim(out)
    }

    fn nprimitive(p: &NPoly) -> NPoly {
        if nis_zero(p) {
            return Vec::new();
        }
        ndiv_ucoeff_exact(p, &ncontent(p))
    }

    /// Pseudo-remainder of `a` by `b` in `(Z[r])[l]`.
    fn npseudo_rem(a: &NPoly, b: &NPoly) -> NPoly {
        let mut rem = a.clone();
        let blead = b.last().unwrap().clone();
        while !nis_zero(&rem) && rem.len() >= b.len() {
            let shift = rem.len() - b.len();
            let rlead = rem.last().unwrap().clone();
            let mut sub: NPoly = vec![Vec::new(); shift];
            sub.extend(nmul_ucoeff(b, &rlead));
            rem = nsub(&nmul_ucoeff(&rem, &blead), &sub);
        }
        rem
    }

    fn upow(base: &UPoly, exp: usize) -> UPoly {
        let mut acc = vec![BigInt::one()];
        for _ in 0..exp {
            acc = umul(&acc, base);
        }
        acc
    }

    /// Content/primitive-part gcd recursion on `l` then `r`, with the
    /// subresultant PRS in the outer variable.
    pub(super) fn gcd(p: &NPoly, q: &NPoly) -> NPoly {
        if nis_zero(p) {
            return npositive(q.clone());
        }
        if nis_zero(q) {
            return npositive(p.clone());
        }
        if p.len() == 1 || q.len() == 1 {
            // At least one side is free of `l` after the shift: only the
            // `l`-contents can be shared.
            return vec![ugcd(&ncontent(p), &ncontent(q))];
        }
        let cont = ugcd(&ncontent(p), &ncontent(q));
        let mut a = nprimitive(p);
        let mut b = nprimitive(q);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        let mut g: UPoly = vec![BigInt::one()];
        let mut h: UPoly = vec![BigInt::one()];
        loop {
            let delta = a.len() - b.len();
            let r = npseudo_rem(&a, &b);
            if nis_zero(&r) {
                return npositive(nmul_ucoeff(&nprimitive(&b), &cont));
            }
            if r.len() == 1 {
                // A common divisor of l-degree zero would divide the trivial
                // l-contents, so the primitive parts are coprime.
                return npositive(vec![cont]);
            }
            let divisor = umul(&g, &upow(&h, delta));
            a = b;
            b = ndiv_ucoeff_exact(&r, &divisor);
            g = a.last().unwrap().clone();
            if delta > 0 {
                let num = upow(&g, delta);
                let den = upow(&h, delta - 1);
                h = uexact_div(&num, &den).expect("subresultant h update is exact");
            }
        }
    }

    fn npositive(p: NPoly) -> NPoly {
        match p.last().and_then(|c| c.last()) {
            Some(c) if c.is_negative() => p.iter().map(|co| uneg(co)).collect(),
            _ => p,
        }
    }

    /// Exact division in `(Z[r])[l]`; `None` if not exact.
    pub(super) fn exact_div(p: &NPoly, q: &NPoly) -> Option<NPoly> {
        assert!(!nis_zero(q));
        if nis_zero(p) {
            return Some(Vec::new());
        }
        if p.len() < q.len() {
            return None;
        }
        let mut rem = p.clone();
        let mut quot: NPoly = vec![Vec::new(); p.len() - q.len() + 1];
        let qlead = q.last().unwrap();
        while !nis_zero(&rem) && rem.len() >= q.len() {
            let c = uexact_div(rem.last().unwrap(), qlead)?;
            let shift = rem.len() - q.len();
            quot[shift] = c.clone();
            let mut sub: NPoly = vec![Vec::new(); shift];
            sub.extend(nmul_ucoeff(q, &c));
            rem = nsub(&rem, &sub);
        }
        if nis_zero(&rem) {
            Some(ntrim(quot))
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_cancels_opposite_terms() {
        let q = LaurentPoly::from_terms(vec![
            ((0, 1), BigInt::from(1)),
            ((0, 1), BigInt::from(-1)),
        ]);
        assert!(q.is_zero());
    }

    #[test]
    fn normalize_builds_m() {
        let q = LaurentPoly::from_terms(vec![
            ((0, -1), BigInt::from(1)),
            ((0, 1), BigInt::from(-1)),
        ]);
        assert_eq!(q, LaurentPoly::m());
        assert_eq!(q.to_canonical_string(), "-r + r^-1");
    }

    #[test]
    fn normalize_merges_like_monomials() {
        let q = LaurentPoly::from_terms(vec![
            ((1, 0), BigInt::from(2)),
            ((1, 0), BigInt::from(3)),
        ]);
        assert_eq!(q, p("5*l"));
    }

    #[test]
    fn string_round_trip() {
        for s in [
            "0",
            "1",
            "-1",
            "l",
            "-r + r^-1",
            "5*l",
            "l - 7 + 2*l^-1*r^2",
            "l^3*r^-4 - 3*r",
        ] {
            assert_eq!(p(s).to_canonical_string(), s);
        }
    }

    #[test]
    fn exact_division_of_products() {
        let a = p("l^2*r - r^3 + 2");
        let b = p("l*r^-1 + 3*r");
        let prod = a.mul(&b);
        assert_eq!(prod.exact_div(&b).unwrap(), a);
        assert_eq!(prod.exact_div(&a).unwrap(), b);
        assert_eq!(p("l + 1").exact_div(&p("l - 1")), None);
    }

    #[test]
    fn gcd_of_common_factor() {
        let g = p("l*r + 1");
        let a = g.mul(&p("l - r"));
        let b = g.mul(&p("r^2 + 2"));
        let got = a.gcd(&b);
        // gcd is defined up to monomial units; contents here are trivial.
        assert_eq!(got, g);
    }

    #[test]
    fn gcd_univariate_in_r() {
        let a = p("r^2 - 1");
        let b = p("r - 1");
        assert_eq!(a.gcd(&b), b);
    }

    #[test]
    fn conjugation_fixes_m() {
        assert_eq!(LaurentPoly::m().subst_r_neg_inv(), LaurentPoly::m());
        assert_eq!(
            LaurentPoly::var_r().subst_r_neg_inv(),
            p("-r^-1")
        );
    }

    #[test]
    fn substitute_l_power() {
        // l^2 * r at l = -r^3 gives (+1) r^7.
        let q = p("l^2*r").subst_l_signed_power(-1, 3);
        assert_eq!(q, p("r^7"));
        // l at l = -r^3 gives -r^3.
        assert_eq!(p("l").subst_l_signed_power(-1, 3), p("-r^3"));
    }

    #[test]
    fn evaluation() {
        let q = LaurentPoly::m();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let two = BigRational::from(BigInt::from(2));
        // m(r=2) = 1/2 - 2 = -3/2
        assert_eq!(
            q.eval(&BigRational::one(), &two),
            half.clone() - two.clone()
        );
    }
}
