//! Breadth-first enumeration of the minimal-violator tree.
//!
//! The root of the tree is a self-avoiding word (the empty word by default).
//! A node labeled `q` that is self-avoiding has `k` children `q0 .. q(k-1)`;
//! a node that is not self-avoiding is a leaf. Leaves are therefore minimal
//! violators: every proper prefix of a leaf is self-avoiding. If the tree is
//! finite its leaf list, in breadth-first order, is a proof that a longest
//! self-avoiding word exists.

use std::collections::VecDeque;

use crate::avoid::{self, is_self_avoiding, AvoidanceSpec};
use crate::error::SearchError;
use crate::word::Word;

pub const DEFAULT_NODE_BUDGET: usize = 10_000_000;

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub alphabet_size: u8,
    pub spec: AvoidanceSpec,
    /// Self-avoiding words of this length are not extended; `None` runs to
    /// exhaustion (which never happens for the infinite variants).
    pub depth_limit: Option<usize>,
    /// Fixed starting prefix; must itself be self-avoiding. `None` means the
    /// empty word.
    pub root: Option<Word>,
    /// Hard cap on popped nodes; exceeding it is a resource error, never a
    /// silently truncated result.
    pub node_budget: usize,
    /// Recompute every violation check from scratch instead of using the
    /// incremental newest-window check. For cross-validation.
    pub full_recheck: bool,
}

impl SearchConfig {
    pub fn new(alphabet_size: u8, spec: AvoidanceSpec) -> Self {
        SearchConfig {
            alphabet_size,
            spec,
            depth_limit: None,
            root: None,
            node_budget: DEFAULT_NODE_BUDGET,
            full_recheck: false,
        }
    }

    pub fn with_root(mut self, root: Word) -> Self {
        self.root = Some(root);
        self
    }

    pub fn with_depth_limit(mut self, limit: usize) -> Self {
        self.depth_limit = Some(limit);
        self
    }
}

/// Result of one breadth-first traversal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TreeSummary {
    /// Leaves in breadth-first discovery order, i.e. sorted by
    /// (length, lexicographic).
    pub leaves: Vec<Word>,
    pub leaf_count: usize,
    pub max_leaf_length: usize,
    /// Length of the deepest self-avoiding node seen.
    pub max_self_avoiding_length: usize,
    /// All self-avoiding nodes of maximal length, in discovery order.
    pub longest_self_avoiding: Vec<Word>,
    /// True iff some self-avoiding node hit the depth limit and was not
    /// extended. A truncated summary is a lower bound, not a proof.
    pub truncated: bool,
}

/// Breadth-first traversal: pop the front of the queue, test it, emit it as
/// a leaf if it fails, otherwise push its `k` extensions in symbol order.
pub fn enumerate_tree(config: &SearchConfig) -> Result<TreeSummary, SearchError> {
    let k = config.alphabet_size;
    let root = match &config.root {
        Some(r) => {
            if r.alphabet_size() != k {
                return Err(SearchError::RootAlphabetMismatch {
                    root: r.alphabet_size(),
                    search: k,
                });
            }
            if !is_self_avoiding(r, &config.spec) {
                return Err(SearchError::RootNotSelfAvoiding);
            }
            r.clone()
        }
        None => Word::empty(k)?,
    };
    let root_len = root.len();

    let mut queue: VecDeque<Word> = VecDeque::new();
    queue.push_back(root);

    let mut leaves = Vec::new();
    let mut max_leaf_length = 0;
    let mut max_sa_length = 0;
    let mut longest_sa = Vec::new();
    let mut truncated = false;
    let mut popped = 0usize;

    while let Some(q) = queue.pop_front() {
        popped += 1;
        if popped > config.node_budget {
            return Err(SearchError::NodeBudgetExhausted(config.node_budget));
        }

        let self_avoiding = if config.full_recheck || q.len() == root_len {
            // The root may have violations at any j; everything below it was
            // pushed by a self-avoiding parent.
            is_self_avoiding(&q, &config.spec)
        } else {
            // Only the window ending at the new last position can be new.
            let n = q.len();
            n % 2 != 0
                || n / 2 <= config.spec.min_index
                || avoid::violation_at(q.symbols(), &config.spec, n / 2).is_none()
        };

        if !self_avoiding {
            max_leaf_length = max_leaf_length.max(q.len());
            leaves.push(q);
            continue;
        }

        if q.len() > max_sa_length || (q.is_empty() && longest_sa.is_empty()) {
            max_sa_length = q.len();
            longest_sa.clear();
        }
        if q.len() == max_sa_length {
            longest_sa.push(q.clone());
        }

        if config.depth_limit.is_some_and(|limit| q.len() >= limit) {
            truncated = true;
            continue;
        }
        for c in 0..k {
            queue.push_back(q.with_symbol(c)?);
        }
    }

    Ok(TreeSummary {
        leaf_count: leaves.len(),
        max_leaf_length,
        max_self_avoiding_length: max_sa_length,
        longest_self_avoiding: longest_sa,
        truncated,
        leaves,
    })
}

/// All self-avoiding words of maximal length reachable from the config's
/// root (the full k-ary tree when the root is the empty word).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LongestResult {
    pub length: usize,
    pub words: Vec<Word>,
    /// When set, `length` is only a lower bound.
    pub truncated: bool,
}

pub fn longest_words(config: &SearchConfig) -> Result<LongestResult, SearchError> {
    let summary = enumerate_tree(config)?;
    Ok(LongestResult {
        length: summary.max_self_avoiding_length,
        words: summary.longest_self_avoiding,
        truncated: summary.truncated,
    })
}
