//! Words in the BMW generators and their matrix evaluation, including the
//! conjugated idempotents `c_{ij} = g_{j-1}..g_{i+1} e_i g_{i+1}^{-1}..g_{j-1}^{-1}`.

use super::LKRep;
use crate::linalg::Matrix;

/// One letter of a word: a generator index with its kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    /// `g_k`
    G,
    /// `g_k^{-1}`
    GInv,
    /// `e_k`
    E,
}

/// A word in the generators `g_k`, `g_k^{-1}`, `e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BMWWord {
    /// Letters in product order (leftmost acts last on column vectors).
    pub letters: Vec<(usize, GenKind)>,
}

impl BMWWord {
    /// The empty word (identity).
    pub fn identity() -> Self {
        Self::default()
    }

    /// Builds a word from `(index, kind)` letters.
    pub fn from_letters(letters: Vec<(usize, GenKind)>) -> Self {
        Self { letters }
    }

    /// Appends a letter.
    pub fn push(&mut self, index: usize, kind: GenKind) {
        self.letters.push((index, kind));
    }
}

/// Evaluates a word as the product of the corresponding matrices; the empty
/// word gives the identity.  Inverse letters use the closed form
/// `g^{-1} = g + m - m e`.
pub fn eval_word(rep: &LKRep, word: &BMWWord) -> Matrix {
    let mut acc = Matrix::identity(rep.dim());
    for &(k, kind) in &word.letters {
        assert!(
            (1..rep.n).contains(&k),
            "word letter index {k} out of range for n = {}",
            rep.n
        );
        let m = match kind {
            GenKind::G => rep.nu(k),
            GenKind::GInv => rep.nu_inv(k),
            GenKind::E => rep.e(k),
        };
        acc = acc.mul(m).expect("square matrices of equal size");
    }
    acc
}

/// The word of `c_{ij}`: `e_i` when `j = i+1`, otherwise
/// `g_{j-1} ... g_{i+1} e_i g_{i+1}^{-1} ... g_{j-1}^{-1}`.
pub fn cij_word(i: usize, j: usize) -> BMWWord {
    assert!(1 <= i && i < j, "c_{{ij}} needs 1 <= i < j");
    let mut letters = Vec::new();
    for k in (i + 1..j).rev() {
        letters.push((k, GenKind::G));
    }
    letters.push((i, GenKind::E));
    for k in i + 1..j {
        letters.push((k, GenKind::GInv));
    }
    BMWWord::from_letters(letters)
}

/// The matrix of `c_{ij}` in the representation; requires `i < j <= n`.
pub fn build_cij(rep: &LKRep, i: usize, j: usize) -> Matrix {
    assert!(j <= rep.n, "c_{{ij}} needs j <= n");
    eval_word(rep, &cij_word(i, j))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ParamSpec;

    #[test]
    fn empty_word_is_identity() {
        let rep = LKRep::build(3, ParamSpec::generic(3), false).unwrap();
        assert_eq!(
            eval_word(&rep, &BMWWord::identity()),
            Matrix::identity(3)
        );
    }

    #[test]
    fn g_ginv_cancels() {
        let rep = LKRep::build(4, ParamSpec::generic(4), false).unwrap();
        let word = BMWWord::from_letters(vec![(1, GenKind::G), (1, GenKind::GInv)]);
        assert_eq!(eval_word(&rep, &word), Matrix::identity(rep.dim()));
    }

    #[test]
    fn cij_words() {
        // c_{i,i+1} = e_i
        assert_eq!(
            cij_word(2, 3),
            BMWWord::from_letters(vec![(2, GenKind::E)])
        );
        // c_{13} = g_2 e_1 g_2^{-1}
        assert_eq!(
            cij_word(1, 3),
            BMWWord::from_letters(vec![(2, GenKind::G), (1, GenKind::E), (2, GenKind::GInv)])
        );
        // c_{14} = g_3 g_2 e_1 g_2^{-1} g_3^{-1}
        assert_eq!(
            cij_word(1, 4),
            BMWWord::from_letters(vec![
                (3, GenKind::G),
                (2, GenKind::G),
                (1, GenKind::E),
                (2, GenKind::GInv),
                (3, GenKind::GInv),
            ])
        );
    }

    #[test]
    fn c_adjacent_is_e() {
        let rep = LKRep::build(4, ParamSpec::generic(4), false).unwrap();
        for i in 1..4 {
            assert_eq!(build_cij(&rep, i, i + 1), *rep.e(i));
        }
    }

    #[test]
    fn c13_matches_explicit_product() {
        let rep = LKRep::build(4, ParamSpec::generic(4), false).unwrap();
        let explicit = rep
            .nu(2)
            .mul(rep.e(1))
            .unwrap()
            .mul(rep.nu_inv(2))
            .unwrap();
        assert_eq!(build_cij(&rep, 1, 3), explicit);
    }
}
