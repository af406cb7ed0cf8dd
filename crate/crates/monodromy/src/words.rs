//! Words over the generator alphabet {A, B, a, b}.
//!
//! Lowercase letters denote inverses. Words are stored freely reduced (no
//! adjacent letter-inverse pair survives construction) and are read left to
//! right as actions on column vectors, so the matrix of `w = l1 l2 ... lk`
//! is `M(lk) ... M(l2) M(l1)`: each successive letter left-multiplies the
//! accumulator. The `"Ba"` test below pins that convention — it must
//! evaluate to `A^{-1} B`, not `B A^{-1}`.

use std::fmt;

use crate::exact::ExactMatrix;
use crate::hypergeo::HyperCase;

/// One generator letter. The derived order `A < B < a < b` matches ASCII
/// and fixes every deterministic enumeration in the crate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    A,
    B,
    AInv,
    BInv,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::AInv, Letter::BInv];

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'A' => Some(Letter::A),
            'B' => Some(Letter::B),
            'a' => Some(Letter::AInv),
            'b' => Some(Letter::BInv),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::AInv => 'a',
            Letter::BInv => 'b',
        }
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
        }
    }

    /// The matrix of this letter in the given case.
    pub fn matrix(self, case: &HyperCase) -> &ExactMatrix {
        match self {
            Letter::A => &case.a_mat,
            Letter::B => &case.b_mat,
            Letter::AInv => &case.a_inv,
            Letter::BInv => &case.b_inv,
        }
    }
}

/// Word text contained a character outside {A, B, a, b}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordError {
    pub character: char,
    pub position: usize,
}

impl fmt::Display for WordError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "invalid character '{}' at position {} (alphabet is A, B, a, b)",
            self.character, self.position
        )
    }
}

impl std::error::Error for WordError {}

/// Freely reduced word over {A, B, a, b}.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    /// Parses and freely reduces text. Adjacent inverse pairs cancel until
    /// a fixpoint, so `"ABba"` collapses to the empty word.
    pub fn parse(text: &str) -> Result<Word, WordError> {
        let mut word = Word::empty();
        for (position, c) in text.chars().enumerate() {
            let letter = Letter::from_char(c).ok_or(WordError {
                character: c,
                position,
            })?;
            word.push(letter);
        }
        Ok(word)
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut word = Word::empty();
        for l in letters {
            word.push(l);
        }
        word
    }

    /// Appends one letter, cancelling it against the current last letter
    /// when they are inverse. Stack cancellation keeps the word reduced.
    pub fn push(&mut self, letter: Letter) {
        if self.letters.last() == Some(&letter.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// Reduced concatenation `self . other` (string order).
    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    /// The inverse word: reversed with every letter case-swapped.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Evaluates the word in a case: letters are consumed left to right and
    /// each left-multiplies the accumulator, per the reading convention.
    pub fn evaluate(&self, case: &HyperCase) -> ExactMatrix {
        let mut acc = ExactMatrix::identity(case.degree());
        for &l in &self.letters {
            acc = l.matrix(case) * &acc;
        }
        acc
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::registry;

    #[test]
    fn reduction_cancels_adjacent_inverses() {
        assert!(Word::parse("Aa").unwrap().is_empty());
        assert!(Word::parse("aA").unwrap().is_empty());
        assert!(Word::parse("Bb").unwrap().is_empty());
        // cascading cancellation
        assert!(Word::parse("ABba").unwrap().is_empty());
        assert_eq!(Word::parse("ABbB").unwrap().to_string(), "AB");
    }

    #[test]
    fn parse_rejects_foreign_characters() {
        let err = Word::parse("ABx").unwrap_err();
        assert_eq!(err.character, 'x');
        assert_eq!(err.position, 2);
    }

    #[test]
    fn inversion_is_an_involution() {
        let w = Word::parse("ABaBB").unwrap();
        assert_eq!(w.inverse().to_string(), "bbAba");
        assert_eq!(w.inverse().inverse(), w);
        assert!(Word::empty().inverse().is_empty());
    }

    #[test]
    fn empty_word_evaluates_to_identity() {
        let case = registry::builtin_case("C-47").unwrap();
        assert!(Word::empty().evaluate(&case).is_identity());
    }

    #[test]
    fn ba_evaluates_to_t() {
        // the convention pin: M("Ba") = M(a) M(B) = A^{-1} B = T
        let case = registry::builtin_case("C-47").unwrap();
        let w = Word::parse("Ba").unwrap();
        assert_eq!(w.evaluate(&case), case.t_matrix());
        // and the opposite order gives a different matrix
        let w_rev = Word::parse("aB").unwrap();
        assert_ne!(w_rev.evaluate(&case), case.t_matrix());
    }

    #[test]
    fn inverse_word_evaluates_to_inverse_matrix() {
        let case = registry::builtin_case("C-55").unwrap();
        let w = Word::parse("ABab").unwrap();
        let product = &w.inverse().evaluate(&case) * &w.evaluate(&case);
        assert!(product.is_identity());
    }

    #[test]
    fn concat_reverses_under_evaluation() {
        // M(uv) = M(v) M(u) per the left-to-right action convention
        let case = registry::builtin_case("C-47").unwrap();
        let u = Word::parse("AB").unwrap();
        let v = Word::parse("bA").unwrap();
        let direct = u.concat(&v).evaluate(&case);
        let split = &v.evaluate(&case) * &u.evaluate(&case);
        assert_eq!(direct, split);
    }
}
