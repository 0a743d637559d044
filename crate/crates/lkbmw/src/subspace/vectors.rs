//! The explicit invariant vectors printed in the source results: the
//! one-dimensional spanning vector, the degree-(n-1) family `v_i`, the
//! four-strand `u_1, u_2, u_3`, and the two-dimensional pair of `K(4)`.

use crate::error::{Error, Result};
use crate::exact::{RatFunc, Sign};
use crate::roots::{enumerate_roots, root_index, PosRoot};

/// A labeled vector of the Lawrence-Krammer space, with coordinates indexed
/// by the canonical positive-root order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedVector {
    /// Which printed vector this is (e.g. `"Thm4_u"`, `"Thm5_v_2"`).
    pub label: String,
    /// The strand count fixing the ambient space.
    pub n: usize,
    /// Coordinates in the canonical root order; length `n(n-1)/2`.
    pub coords: Vec<RatFunc>,
}

impl NamedVector {
    /// The zero vector with the given label.
    pub fn zero(label: impl Into<String>, n: usize) -> Self {
        Self {
            label: label.into(),
            n,
            coords: vec![RatFunc::zero(); n * (n - 1) / 2],
        }
    }

    /// Adds `value` to the coordinate of `w_{i,j}`.
    pub fn add_coord(&mut self, root: PosRoot, value: RatFunc) {
        let idx = root_index(self.n, root);
        self.coords[idx] = self.coords[idx].add(&value);
    }

    /// The coordinate of `w_{i,j}`.
    pub fn coeff(&self, root: PosRoot) -> &RatFunc {
        &self.coords[root_index(self.n, root)]
    }

    /// True when every coordinate is zero.
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(RatFunc::is_zero)
    }

    /// The same vector viewed in the Lawrence-Krammer space of a larger
    /// strand count (coordinates carried over by root label).
    pub fn embed(&self, n_target: usize) -> Self {
        assert!(n_target >= self.n, "embedding must not shrink the space");
        let mut out = Self::zero(self.label.clone(), n_target);
        for root in enumerate_roots(self.n).expect("valid source n") {
            let c = self.coeff(root).clone();
            if !c.is_zero() {
                out.add_coord(root, c);
            }
        }
        out
    }
}

/// The one-dimensional spanning vector `sum over s < t of r^{s+t} w_{st}`.
pub fn thm4_vector(n: usize) -> NamedVector {
    assert!(n >= 3);
    let mut v = NamedVector::zero("Thm4_u", n);
    for root in enumerate_roots(n).expect("n >= 3") {
        let (s, t) = (root.i as i64, root.j as i64);
        v.add_coord(root, RatFunc::monomial(0, s + t));
    }
    v
}

/// The two printed three-strand vectors: `w12 + r w13 + r^2 w23` (eigenvalue
/// `r` at `l = 1/r^3`) and `w12 - 1/r w13 + 1/r^2 w23` (eigenvalue `-1/r` at
/// `l = -r^3`).
pub fn thm4_n3_vectors() -> (NamedVector, NamedVector) {
    let w12 = PosRoot::new(1, 2);
    let w13 = PosRoot::new(1, 3);
    let w23 = PosRoot::new(2, 3);
    let mut u_r = NamedVector::zero("Thm4_u_r", 3);
    u_r.add_coord(w12, RatFunc::one());
    u_r.add_coord(w13, RatFunc::monomial(0, 1));
    u_r.add_coord(w23, RatFunc::monomial(0, 2));
    let mut u_conj = NamedVector::zero("Thm4_u_conj", 3);
    u_conj.add_coord(w12, RatFunc::one());
    u_conj.add_coord(w13, RatFunc::monomial(0, -1).neg());
    u_conj.add_coord(w23, RatFunc::monomial(0, -2));
    (u_r, u_conj)
}

/// The degree-(n-1) family `v_1 .. v_{n-1}` with `l` substituted by
/// `sign * r^{-(n-3)}`:
///
/// `v_i = (1/r - 1/l) w_{i,i+1}
///      + sum_{s=i+2..n} r^{s-i-2} (w_{i,s} - 1/r w_{i+1,s})
///      + eps sum_{t=1..i-1} r^{n-i-2+t} (w_{t,i} - 1/r w_{t,i+1})`
///
/// where `eps = +1` for `l = 1/r^{n-3}` and `-1` for `l = -1/r^{n-3}`.
pub fn thm5_vectors(n: usize, sign: Sign) -> Result<Vec<NamedVector>> {
    if n < 3 {
        return Err(Error::InvalidN(n));
    }
    let nn = n as i64;
    let eps = sign.as_int();
    // 1/l = sign * r^{n-3}, so zeta = 1/r - sign * r^{n-3}.
    let zeta = RatFunc::monomial(0, -1).sub(&RatFunc::monomial(0, nn - 3).mul_int(eps));
    let mut out = Vec::with_capacity(n - 1);
    for i in 1..n {
        let ii = i as i64;
        let mut v = NamedVector::zero(format!("Thm5_v_{i}"), n);
        v.add_coord(PosRoot::new(i, i + 1), zeta.clone());
        for s in i + 2..=n {
            let ss = s as i64;
            v.add_coord(PosRoot::new(i, s), RatFunc::monomial(0, ss - ii - 2));
            v.add_coord(
                PosRoot::new(i + 1, s),
                RatFunc::monomial(0, ss - ii - 3).neg(),
            );
        }
        for t in 1..i {
            let tt = t as i64;
            v.add_coord(
                PosRoot::new(t, i),
                RatFunc::monomial(0, nn - ii - 2 + tt).mul_int(eps),
            );
            v.add_coord(
                PosRoot::new(t, i + 1),
                RatFunc::monomial(0, nn - ii - 3 + tt).mul_int(-eps),
            );
        }
        out.push(v);
    }
    Ok(out)
}

/// The three four-strand vectors spanning the irreducible 3-dimensional
/// invariant subspace at `l = -r^3`.
pub fn thm5_u_vectors() -> Vec<NamedVector> {
    let w = PosRoot::new;
    let mono = RatFunc::monomial;
    let mut u1 = NamedVector::zero("Thm5_u1", 4);
    u1.add_coord(w(2, 3), mono(0, 1));
    u1.add_coord(w(1, 3), RatFunc::one());
    u1.add_coord(w(3, 4), mono(0, -1).add(&mono(0, -3)));
    u1.add_coord(w(2, 4), RatFunc::one().neg());
    u1.add_coord(w(1, 4), mono(0, -1).neg());
    let mut u2 = NamedVector::zero("Thm5_u2", 4);
    u2.add_coord(w(1, 2), mono(0, 1).neg());
    u2.add_coord(w(1, 3), mono(0, 2).neg());
    u2.add_coord(w(3, 4), mono(0, -1).neg());
    u2.add_coord(w(2, 4), mono(0, -2).neg());
    u2.add_coord(w(1, 4), mono(0, 1).add(&mono(0, -1)));
    // The w12 coefficient of u3 is forced by u2 through the relation
    // u3 = -r nu_3(u2) - u2, which gives r + r^3.
    let mut u3 = NamedVector::zero("Thm5_u3", 4);
    u3.add_coord(w(1, 2), mono(0, 1).add(&mono(0, 3)));
    u3.add_coord(w(2, 3), mono(0, -1));
    u3.add_coord(w(1, 3), RatFunc::one().neg());
    u3.add_coord(w(2, 4), RatFunc::one());
    u3.add_coord(w(1, 4), mono(0, 1).neg());
    vec![u1, u2, u3]
}

/// The two vectors spanning `K(4)` at `l = r`:
/// `v1 = w13 - 1/r w23 + 1/r^2 w24 - 1/r w14` and
/// `v2 = w12 - 1/r w13 - 1/r w24 + 1/r^2 w34`.
pub fn prop3_vectors() -> (NamedVector, NamedVector) {
    let w = PosRoot::new;
    let mono = RatFunc::monomial;
    let mut v1 = NamedVector::zero("Prop3_v1", 4);
    v1.add_coord(w(1, 3), RatFunc::one());
    v1.add_coord(w(2, 3), mono(0, -1).neg());
    v1.add_coord(w(2, 4), mono(0, -2));
    v1.add_coord(w(1, 4), mono(0, -1).neg());
    let mut v2 = NamedVector::zero("Prop3_v2", 4);
    v2.add_coord(w(1, 2), RatFunc::one());
    v2.add_coord(w(1, 3), mono(0, -1).neg());
    v2.add_coord(w(2, 4), mono(0, -1).neg());
    v2.add_coord(w(3, 4), mono(0, -2));
    (v1, v2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thm4_coords_are_r_powers() {
        let u = thm4_vector(5);
        assert_eq!(*u.coeff(PosRoot::new(1, 2)), RatFunc::monomial(0, 3));
        assert_eq!(*u.coeff(PosRoot::new(3, 5)), RatFunc::monomial(0, 8));
        assert!(u.coords.iter().all(|c| !c.is_zero()));
    }

    #[test]
    fn thm4_n3_vectors_are_conjugate_up_to_scaling() {
        let (u_r, u_conj) = thm4_n3_vectors();
        let conj: Vec<RatFunc> = u_r.coords.iter().map(|c| c.conjugate_r()).collect();
        assert_eq!(conj, u_conj.coords);
    }

    #[test]
    fn thm5_n3_zeta_collapses_to_integer() {
        // For n = 3 the substituted l is +-1 and zeta = 1/r -+ 1.
        let v = thm5_vectors(3, Sign::Plus).unwrap();
        assert_eq!(v.len(), 2);
        let zeta = RatFunc::monomial(0, -1).sub(&RatFunc::one());
        assert_eq!(*v[0].coeff(PosRoot::new(1, 2)), zeta);
        assert!(thm5_vectors(2, Sign::Plus).is_err());
    }

    #[test]
    fn u_vectors_match_printed_coefficients() {
        let us = thm5_u_vectors();
        assert_eq!(
            *us[0].coeff(PosRoot::new(3, 4)),
            RatFunc::monomial(0, -1).add(&RatFunc::monomial(0, -3))
        );
        assert_eq!(*us[1].coeff(PosRoot::new(2, 3)), RatFunc::zero());
        assert_eq!(
            *us[2].coeff(PosRoot::new(1, 2)),
            RatFunc::monomial(0, 1).add(&RatFunc::monomial(0, 3))
        );
    }

    #[test]
    fn embedding_preserves_labels_and_coords() {
        let (v1, _) = prop3_vectors();
        let big = v1.embed(6);
        assert_eq!(big.n, 6);
        assert_eq!(big.coeff(PosRoot::new(2, 4)), v1.coeff(PosRoot::new(2, 4)));
        assert_eq!(*big.coeff(PosRoot::new(5, 6)), RatFunc::zero());
    }
}
