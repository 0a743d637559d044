//! Positive roots of type `A_{n-1}` and the basis order of the
//! Lawrence-Krammer space.
//!
//! A positive root `alpha_i + ... + alpha_{j-1}` is encoded as the node pair
//! `(i, j)` with `1 <= i < j <= n` and printed `w_{i,j}`.  The canonical
//! enumeration groups roots by the larger endpoint `j` ascending, with `i`
//! descending inside a group; this matches the spanning-set order
//! `e_1, e_2 e_1, g_2 e_1, e_3 e_2 e_1, ...` of the module construction and
//! pins the row/column indexing of every representation matrix, so the
//! determinant recursion for the image of `g_1` is reproducible entry for
//! entry.

use num_rational::Rational64;

use crate::error::{Error, Result};

/// A positive root `alpha_i + ... + alpha_{j-1}` of type `A_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosRoot {
    /// Left endpoint, `1 <= i`.
    pub i: usize,
    /// Right endpoint, `i < j <= n`.
    pub j: usize,
}

impl PosRoot {
    /// Builds `(i, j)`; panics unless `1 <= i < j`.
    pub fn new(i: usize, j: usize) -> Self {
        assert!(1 <= i && i < j, "invalid positive root ({i},{j})");
        Self { i, j }
    }

    /// Height: the number of simple roots in the support, `j - i`.
    pub fn height(&self) -> usize {
        self.j - self.i
    }

    /// True when the root is the simple root `alpha_k`.
    pub fn is_simple(&self, k: usize) -> bool {
        self.i == k && self.j == k + 1
    }

    /// Support as simple-root indices `i ..= j-1`.
    pub fn support(&self) -> std::ops::RangeInclusive<usize> {
        self.i..=self.j - 1
    }

    /// Serialized form `w_{i,j}` used by the CLI.
    pub fn label(&self) -> String {
        format!("w_{{{},{}}}", self.i, self.j)
    }
}

/// Which line of the action case table applies to a pair (root, generator).
///
/// The tags mirror the six cases (a), (b), (c), (c'), (d), (d') of the
/// explicit action formulas.  Classification is pure support arithmetic on
/// `(i, j, k)`; the inner-product values are derived documentation, never
/// evaluated as cosines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    /// (a): support of the root misses `{k-1, k, k+1}` entirely or contains
    /// it entirely; the generator scales the basis vector by `r`.
    AZero,
    /// (b): the root is `alpha_k` itself.
    BSimple,
    /// (c): the root ends at node `k-1` (i.e. `j = k`).
    Cc,
    /// (c'): the root starts at node `k+1`.
    CcPrime,
    /// (d): the root ends at node `k` with `i < k`.
    Dd,
    /// (d'): the root starts at node `k` with `j > k+1`.
    DdPrime,
}

/// The `n(n-1)/2` positive roots in canonical order; errors for `n < 2`.
pub fn enumerate_roots(n: usize) -> Result<Vec<PosRoot>> {
    if n < 2 {
        return Err(Error::InvalidN(n));
    }
    let mut out = Vec::with_capacity(n * (n - 1) / 2);
    for j in 2..=n {
        for i in (1..j).rev() {
            out.push(PosRoot::new(i, j));
        }
    }
    Ok(out)
}

/// Index of a root in the canonical order for strand count `n`.
pub fn root_index(n: usize, root: PosRoot) -> usize {
    debug_assert!(root.j <= n);
    // Roots with larger endpoint < j come first: (j-1)(j-2)/2 of them, then
    // i descends from j-1.
    (root.j - 1) * (root.j - 2) / 2 + (root.j - 1 - root.i)
}

/// Classifies the action of generator `k` on the root; the six tags are
/// mutually exclusive and exhaustive.
pub fn classify(beta: PosRoot, k: usize) -> CaseTag {
    debug_assert!(k >= 1);
    let (i, j) = (beta.i, beta.j);
    if beta.is_simple(k) {
        CaseTag::BSimple
    } else if j == k {
        CaseTag::Cc
    } else if i == k + 1 {
        CaseTag::CcPrime
    } else if j == k + 1 {
        CaseTag::Dd
    } else if i == k {
        CaseTag::DdPrime
    } else {
        CaseTag::AZero
    }
}

/// The inner product `(beta | alpha_k)` of the Coxeter bilinear form,
/// computed combinatorially from the case classification.
pub fn inner(beta: PosRoot, k: usize) -> Rational64 {
    match classify(beta, k) {
        CaseTag::AZero => Rational64::new(0, 1),
        CaseTag::BSimple => Rational64::new(1, 1),
        CaseTag::Cc | CaseTag::CcPrime => Rational64::new(-1, 2),
        CaseTag::Dd | CaseTag::DdPrime => Rational64::new(1, 2),
    }
}

/// `beta + alpha_k` when the classification admits it (cases (c), (c')).
pub fn add_simple(beta: PosRoot, k: usize) -> Option<PosRoot> {
    match classify(beta, k) {
        CaseTag::Cc => Some(PosRoot::new(beta.i, beta.j + 1)),
        CaseTag::CcPrime => Some(PosRoot::new(beta.i - 1, beta.j)),
        _ => None,
    }
}

/// `beta - alpha_k` when the classification admits it (cases (d), (d')).
pub fn sub_simple(beta: PosRoot, k: usize) -> Option<PosRoot> {
    match classify(beta, k) {
        CaseTag::Dd => Some(PosRoot::new(beta.i, beta.j - 1)),
        CaseTag::DdPrime => Some(PosRoot::new(beta.i + 1, beta.j)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_order_matches_spanning_set() {
        assert_eq!(
            enumerate_roots(3).unwrap(),
            vec![PosRoot::new(1, 2), PosRoot::new(2, 3), PosRoot::new(1, 3)]
        );
        assert_eq!(enumerate_roots(2).unwrap(), vec![PosRoot::new(1, 2)]);
        assert_eq!(enumerate_roots(4).unwrap().len(), 6);
        assert_eq!(enumerate_roots(1), Err(Error::InvalidN(1)));
    }

    #[test]
    fn root_index_is_position_in_enumeration() {
        for n in 2..=8 {
            for (idx, root) in enumerate_roots(n).unwrap().into_iter().enumerate() {
                assert_eq!(root_index(n, root), idx);
            }
        }
    }

    #[test]
    fn heights() {
        assert_eq!(PosRoot::new(1, 2).height(), 1);
        assert_eq!(PosRoot::new(1, 4).height(), 3);
        assert_eq!(PosRoot::new(2, 5).height(), 3);
    }

    #[test]
    fn inner_product_examples() {
        assert_eq!(inner(PosRoot::new(2, 3), 2), Rational64::new(1, 1));
        assert_eq!(inner(PosRoot::new(3, 4), 1), Rational64::new(0, 1));
        assert_eq!(inner(PosRoot::new(1, 3), 3), Rational64::new(-1, 2));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify(PosRoot::new(1, 3), 3), CaseTag::Cc);
        assert_eq!(classify(PosRoot::new(2, 4), 1), CaseTag::CcPrime);
        assert_eq!(classify(PosRoot::new(1, 3), 2), CaseTag::Dd);
        assert_eq!(classify(PosRoot::new(1, 2), 1), CaseTag::BSimple);
        assert_eq!(classify(PosRoot::new(3, 4), 1), CaseTag::AZero);
        assert_eq!(classify(PosRoot::new(1, 4), 2), CaseTag::AZero);
        assert_eq!(classify(PosRoot::new(1, 4), 1), CaseTag::DdPrime);
    }

    #[test]
    fn classification_is_exhaustive_and_consistent_with_support() {
        for n in 2..=8 {
            for beta in enumerate_roots(n).unwrap() {
                for k in 1..n {
                    let tag = classify(beta, k);
                    // The (a) tag agrees with the support characterization,
                    // with the triple {k-1, k, k+1} read inside the integers
                    // (node 0 is never in a support).
                    let hits: Vec<bool> = [k.wrapping_sub(1), k, k + 1]
                        .iter()
                        .map(|&node| node >= 1 && beta.support().contains(&node))
                        .collect();
                    let disjoint = hits.iter().all(|&h| !h);
                    let contained = hits.iter().all(|&h| h);
                    assert_eq!(
                        tag == CaseTag::AZero,
                        disjoint || contained,
                        "support check failed at n={n} beta={beta:?} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn root_closure_under_case_moves() {
        for n in 2..=8 {
            let roots = enumerate_roots(n).unwrap();
            for &beta in &roots {
                for k in 1..n {
                    match classify(beta, k) {
                        CaseTag::Cc | CaseTag::CcPrime => {
                            let up = add_simple(beta, k).unwrap();
                            assert!(up.j <= n && roots.contains(&up));
                        }
                        CaseTag::Dd | CaseTag::DdPrime => {
                            let down = sub_simple(beta, k).unwrap();
                            assert!(roots.contains(&down));
                        }
                        _ => {
                            assert!(add_simple(beta, k).is_none());
                            assert!(sub_simple(beta, k).is_none());
                        }
                    }
                }
            }
        }
    }
}
