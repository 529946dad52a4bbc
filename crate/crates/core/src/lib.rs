//! Self-avoiding words under the subword and subsequence orders.
//!
//! A word `x` is *self-avoiding* when no window `x[i..2i]` is contained in a
//! later window `x[j..2j]` (indices 1-based, `i < j`, and `2j <= |x|` in the
//! finite case). The containment relation is configurable: the subsequence
//! relation gives Friedman's original notion, the subword (factor) relation
//! gives the weak variant.
//!
//! The crate provides:
//!
//! - [`avoid`]: containment tests, window extraction, and the violation scan;
//! - [`search`]: breadth-first enumeration of the minimal-violator tree and
//!   longest-word search, for any alphabet size and variant;
//! - [`constructions`]: generators for the two explicit infinite words (the
//!   ternary weakly self-avoiding word and the binary offset-2 word) and the
//!   structural checks behind them.
//!
//! The `avoidance` binary exposes all of this on the command line.

pub mod avoid;
pub mod constructions;
pub mod error;
pub mod search;
pub mod word;

pub use avoid::{
    first_violation, is_self_avoiding, is_subsequence, is_subword, window, AvoidanceSpec,
    Relation, Violation,
};
pub use constructions::{
    block_lengths, g_term, generate, two_zero_window_check, verify_weak_self_avoidance,
    zero_position, ConstructionId,
};
pub use error::{RangeError, SearchError, WordError};
pub use search::{enumerate_tree, longest_words, LongestResult, SearchConfig, TreeSummary};
pub use word::Word;
