//! Containment relations, the window extractor, and the self-avoidance
//! predicate.
//!
//! A word `x` of length `n` is self-avoiding under a given [`AvoidanceSpec`]
//! when no window `x[i..2i]` is contained in a later window `x[j..2j]`, for
//! `min_index <= i < j` and `2j <= n`. With the subword relation this is the
//! "weak" variant; with the subsequence relation and `min_index = 1` it is
//! Friedman's original notion.

use crate::error::WordError;
use crate::word::Word;

/// The containment relation used when comparing two windows.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    /// Contiguous containment: `y` is a subword (factor) of `z`.
    Subword,
    /// Order-preserving containment: `y` is a subsequence of `z`.
    Subsequence,
}

/// Which variant of self-avoidance to test.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AvoidanceSpec {
    pub relation: Relation,
    /// Smallest window index the constraint applies to. `1` is the standard
    /// definition; `2` is the offset variant.
    pub min_index: usize,
}

impl AvoidanceSpec {
    pub fn new(relation: Relation, min_index: usize) -> Result<Self, WordError> {
        if min_index == 0 {
            return Err(WordError::BadMinIndex);
        }
        Ok(AvoidanceSpec {
            relation,
            min_index,
        })
    }

    /// Weakly self-avoiding: subword relation, all window indices.
    pub fn weak() -> Self {
        AvoidanceSpec {
            relation: Relation::Subword,
            min_index: 1,
        }
    }

    /// Friedman's original: subsequence relation, all window indices.
    pub fn friedman() -> Self {
        AvoidanceSpec {
            relation: Relation::Subsequence,
            min_index: 1,
        }
    }
}

/// A witness that a word is not self-avoiding: window `i` embeds in
/// window `j`. Both indices are 1-based and satisfy `i < j`, `2j <= n`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Violation {
    pub i: usize,
    pub j: usize,
}

/// True iff `y` occurs as a contiguous block of `z`.
///
/// The empty word is a subword of every word.
pub fn is_subword(y: &Word, z: &Word) -> bool {
    subword_slices(y.symbols(), z.symbols())
}

/// True iff `y` can be obtained from `z` by striking out zero or more
/// symbols.
pub fn is_subsequence(y: &Word, z: &Word) -> bool {
    subsequence_slices(y.symbols(), z.symbols())
}

/// The window `x[i..2i]`, a word of length `i + 1`.
pub fn window(x: &Word, i: usize) -> Result<Word, WordError> {
    let n = x.len();
    if i == 0 || 2 * i > n {
        return Err(WordError::WindowOutOfRange { i, len: n });
    }
    Word::new(x.symbols()[i - 1..2 * i].to_vec(), x.alphabet_size())
}

/// The first violating pair, scanning `j` ascending and `i` ascending, or
/// `None` if the word is self-avoiding. The scan order makes the result
/// deterministic and means appending symbols can only add violations with
/// larger `j`, never change an already-reported one.
pub fn first_violation(x: &Word, spec: &AvoidanceSpec) -> Option<Violation> {
    let n = x.len();
    for j in spec.min_index + 1..=n / 2 {
        if let Some(v) = violation_at(x.symbols(), spec, j) {
            return Some(v);
        }
    }
    None
}

/// True iff `first_violation` finds nothing. Words too short to hold two
/// windows are vacuously self-avoiding.
pub fn is_self_avoiding(x: &Word, spec: &AvoidanceSpec) -> bool {
    first_violation(x, spec).is_none()
}

/// Checks only pairs with the given `j` (all `min_index <= i < j`).
/// Requires `2j <= symbols.len()`. Used by the incremental tree search,
/// where appending a symbol can only create violations at `j = n/2`.
pub(crate) fn violation_at(symbols: &[u8], spec: &AvoidanceSpec, j: usize) -> Option<Violation> {
    debug_assert!(2 * j <= symbols.len());
    let wj = &symbols[j - 1..2 * j];
    for i in spec.min_index..j {
        let wi = &symbols[i - 1..2 * i];
        let contained = match spec.relation {
            Relation::Subword => subword_slices(wi, wj),
            Relation::Subsequence => subsequence_slices(wi, wj),
        };
        if contained {
            return Some(Violation { i, j });
        }
    }
    None
}

/// Subword test by failure-function (KMP) matching, O(|y| + |z|).
fn subword_slices(y: &[u8], z: &[u8]) -> bool {
    if y.is_empty() {
        return true;
    }
    if y.len() > z.len() {
        return false;
    }
    // failure[i] = length of the longest proper border of y[..=i]
    let mut failure = vec![0usize; y.len()];
    let mut k = 0;
    for i in 1..y.len() {
        while k > 0 && y[i] != y[k] {
            k = failure[k - 1];
        }
        if y[i] == y[k] {
            k += 1;
        }
        failure[i] = k;
    }
    let mut matched = 0;
    for &c in z {
        while matched > 0 && c != y[matched] {
            matched = failure[matched - 1];
        }
        if c == y[matched] {
            matched += 1;
        }
        if matched == y.len() {
            return true;
        }
    }
    false
}

/// Greedy two-pointer subsequence test, O(|z|).
fn subsequence_slices(y: &[u8], z: &[u8]) -> bool {
    let mut it = y.iter();
    let mut next = it.next();
    for &c in z {
        match next {
            Some(&want) if want == c => next = it.next(),
            Some(_) => {}
            None => break,
        }
    }
    next.is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::from_digits(s, None).unwrap()
    }

    #[test]
    fn subword_examples() {
        // "duct" / "introduction" over a letter alphabet, mapped to digits
        assert!(subword_slices(b"duct", b"introduction"));
        assert!(is_subword(&w(""), &w("010")));
        assert!(!is_subword(&Word::from_digits("00", Some(2)).unwrap(), &w("010")));
        assert!(is_subword(&w("01"), &w("101")));
    }

    #[test]
    fn subsequence_examples() {
        assert!(subsequence_slices(b"iron", b"introduction"));
        assert!(is_subsequence(&w(""), &w("010")));
        assert!(is_subsequence(&Word::from_digits("00", Some(2)).unwrap(), &w("010")));
        assert!(!is_subsequence(&w("110"), &w("011")));
    }

    #[test]
    fn window_examples() {
        let x = w("0000");
        assert_eq!(window(&x, 1).unwrap().to_string(), "00");
        assert_eq!(window(&x, 2).unwrap().to_string(), "000");
        let y = w("220101");
        assert_eq!(window(&y, 3).unwrap().to_string(), "0101");
    }

    #[test]
    fn window_out_of_range_is_an_error() {
        let x = w("0000");
        assert_eq!(
            window(&x, 0),
            Err(WordError::WindowOutOfRange { i: 0, len: 4 })
        );
        assert_eq!(
            window(&x, 3),
            Err(WordError::WindowOutOfRange { i: 3, len: 4 })
        );
    }

    #[test]
    fn window_length_is_i_plus_one() {
        let x = w("0010111111010");
        for i in 1..=x.len() / 2 {
            assert_eq!(window(&x, i).unwrap().len(), i + 1);
        }
    }

    #[test]
    fn first_violation_examples() {
        let spec = AvoidanceSpec::weak();
        assert_eq!(first_violation(&w("000"), &spec), None);
        assert_eq!(
            first_violation(&w("0000"), &spec),
            Some(Violation { i: 1, j: 2 })
        );
        assert_eq!(first_violation(&w("0010111111010"), &spec), None);
    }

    #[test]
    fn self_avoiding_examples() {
        let spec = AvoidanceSpec::weak();
        assert!(!is_self_avoiding(&w("0101"), &spec));
        for s in ["", "0", "01", "111"] {
            assert!(is_self_avoiding(&Word::from_digits(s, Some(2)).unwrap(), &spec));
        }
    }

    #[test]
    fn min_index_shifts_the_constraint() {
        // 0101: window(1)=01 inside window(2)=101 — violation only for i >= 1
        let spec2 = AvoidanceSpec::new(Relation::Subword, 2).unwrap();
        assert!(is_self_avoiding(&w("0101"), &spec2));
        assert!(AvoidanceSpec::new(Relation::Subword, 0).is_err());
    }
}
