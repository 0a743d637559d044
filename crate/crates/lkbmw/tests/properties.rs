//! Property-based tests: field axioms of Q(l, r), homomorphism laws of
//! specialization, canonical-form round trips, and linear-algebra laws on
//! randomized inputs.  Everything asserts exact equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use lkbmw::exact::{guard_check, specialize, LaurentPoly, ParamSpec, RatFunc, Sign};
use lkbmw::linalg::{Matrix, Subspace};

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-3i64..=3, -3i64..=3), -9i64..=9), 0..4).prop_map(|terms| {
        LaurentPoly::from_terms(
            terms
                .into_iter()
                .map(|((a, b), c)| ((a, b), BigInt::from(c))),
        )
    })
}

fn arb_nonzero_poly() -> impl Strategy<Value = LaurentPoly> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_ratfunc() -> impl Strategy<Value = RatFunc> {
    (arb_poly(), arb_nonzero_poly())
        .prop_map(|(num, den)| RatFunc::new(num, den).expect("nonzero denominator"))
}

fn arb_nonzero_ratfunc() -> impl Strategy<Value = RatFunc> {
    arb_ratfunc().prop_filter("nonzero", |x| !x.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_associative_and_commutative(
        a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()
    ) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn multiplication_is_associative_and_commutative(
        a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()
    ) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn multiplication_distributes_over_addition(
        a in arb_ratfunc(), b in arb_ratfunc(), c in arb_ratfunc()
    ) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn inverses_cancel(a in arb_ratfunc(), b in arb_nonzero_ratfunc()) {
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(b.mul(&b.inv().unwrap()), RatFunc::one());
        prop_assert_eq!(b.div(&b).unwrap(), RatFunc::one());
    }

    #[test]
    fn equality_agrees_with_cross_multiplication(
        num1 in arb_poly(), den1 in arb_nonzero_poly(),
        num2 in arb_poly(), den2 in arb_nonzero_poly()
    ) {
        let x = RatFunc::new(num1.clone(), den1.clone()).unwrap();
        let y = RatFunc::new(num2.clone(), den2.clone()).unwrap();
        let cross = num1.mul(&den2) == num2.mul(&den1);
        prop_assert_eq!(x == y, cross);
    }

    #[test]
    fn polynomial_string_form_round_trips(p in arb_poly()) {
        let s = p.to_canonical_string();
        let back: LaurentPoly = s.parse().unwrap();
        prop_assert_eq!(back.clone(), p);
        // Canonical emission is stable.
        prop_assert_eq!(back.to_canonical_string(), s);
    }

    #[test]
    fn conjugation_is_a_ring_involution(a in arb_ratfunc(), b in arb_ratfunc()) {
        prop_assert_eq!(a.conjugate_r().conjugate_r(), a.clone());
        prop_assert_eq!(a.add(&b).conjugate_r(), a.conjugate_r().add(&b.conjugate_r()));
        prop_assert_eq!(a.mul(&b).conjugate_r(), a.conjugate_r().mul(&b.conjugate_r()));
    }

    #[test]
    fn l_substitution_is_a_ring_homomorphism(
        a in arb_ratfunc(), b in arb_ratfunc(),
        sign in prop::sample::select(vec![Sign::Plus, Sign::Minus]),
        power in -4i64..=4
    ) {
        let spec = ParamSpec::l_subst(sign, power, 4);
        let (sa, sb) = (specialize(&a, &spec), specialize(&b, &spec));
        // Skip inputs whose denominators collapse under the substitution.
        prop_assume!(sa.is_ok() && sb.is_ok());
        let (sa, sb) = (sa.unwrap(), sb.unwrap());
        prop_assert_eq!(specialize(&a.add(&b), &spec).unwrap(), sa.add(&sb));
        prop_assert_eq!(specialize(&a.mul(&b), &spec).unwrap(), sa.mul(&sb));
    }

    #[test]
    fn numeric_evaluation_is_a_ring_homomorphism(
        a in arb_ratfunc(), b in arb_ratfunc(),
        ln in 1i64..=5, rn in 2i64..=5
    ) {
        let spec = ParamSpec::numeric(
            BigRational::new(ln.into(), 3.into()),
            BigRational::from_integer(rn.into()),
            4,
        ).unwrap();
        prop_assert!(guard_check(&spec, 4));
        let (sa, sb) = (specialize(&a, &spec), specialize(&b, &spec));
        prop_assume!(sa.is_ok() && sb.is_ok());
        let (sa, sb) = (sa.unwrap(), sb.unwrap());
        prop_assert_eq!(specialize(&a.add(&b), &spec).unwrap(), sa.add(&sb));
        prop_assert_eq!(specialize(&a.mul(&b), &spec).unwrap(), sa.mul(&sb));
    }
}

// Small entries for the matrix laws: products and determinants of random
// dense symbolic matrices grow much faster than anything the representation
// itself produces.
fn arb_small_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-1i64..=1, -1i64..=1), -3i64..=3), 0..3).prop_map(|terms| {
        LaurentPoly::from_terms(
            terms
                .into_iter()
                .map(|((a, b), c)| ((a, b), BigInt::from(c))),
        )
    })
}

fn arb_small_ratfunc() -> impl Strategy<Value = RatFunc> {
    (
        arb_small_poly(),
        arb_small_poly().prop_filter("nonzero", |p| !p.is_zero()),
    )
        .prop_map(|(num, den)| RatFunc::new(num, den).expect("nonzero denominator"))
}

fn arb_matrix3() -> impl Strategy<Value = Matrix> {
    prop::collection::vec(arb_small_ratfunc(), 9).prop_map(|entries| {
        Matrix::from_fn(3, 3, |i, j| entries[3 * i + j].clone())
    })
}

fn arb_vectors4() -> impl Strategy<Value = Vec<Vec<RatFunc>>> {
    prop::collection::vec(prop::collection::vec(arb_small_ratfunc(), 4), 0..3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn determinant_is_multiplicative(a in arb_matrix3(), b in arb_matrix3()) {
        let lhs = a.mul(&b).unwrap().det().unwrap();
        let rhs = a.det().unwrap().mul(&b.det().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rank_plus_nullity_is_the_column_count(a in arb_matrix3()) {
        prop_assert_eq!(a.rank() + a.kernel().dim(), a.ncols());
    }

    #[test]
    fn double_inverse_is_identity(a in arb_matrix3()) {
        prop_assume!(!a.det().unwrap().is_zero());
        let inv = a.inverse().unwrap();
        prop_assert_eq!(inv.inverse().unwrap(), a.clone());
        prop_assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(3));
    }

    #[test]
    fn subspace_intersection_laws(
        va in arb_vectors4(), vb in arb_vectors4(), vc in arb_vectors4()
    ) {
        let a = Subspace::from_spanning(4, va);
        let b = Subspace::from_spanning(4, vb);
        let c = Subspace::from_spanning(4, vc);
        let ab = a.intersect(&b).unwrap();
        prop_assert_eq!(ab.clone(), b.intersect(&a).unwrap());
        prop_assert_eq!(a.intersect(&a).unwrap(), a.clone());
        let abc1 = ab.intersect(&c).unwrap();
        let abc2 = a.intersect(&b.intersect(&c).unwrap()).unwrap();
        prop_assert_eq!(abc1, abc2);
    }
}
