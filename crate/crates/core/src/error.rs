use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("symbol {symbol} out of range for alphabet of size {alphabet_size}")]
    SymbolOutOfRange { symbol: u8, alphabet_size: u8 },
    #[error("invalid character {0:?}: words are strings of digits '0'..'9'")]
    InvalidCharacter(char),
    #[error("alphabet size {0} out of range (must be 1..=10)")]
    BadAlphabetSize(u8),
    #[error("window index {i} out of range: need 1 <= i and 2i <= {len}")]
    WindowOutOfRange { i: usize, len: usize },
    #[error("min_index must be >= 1")]
    BadMinIndex,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("root word is not self-avoiding under the given spec")]
    RootNotSelfAvoiding,
    #[error("root word uses alphabet of size {root}, search alphabet is {search}")]
    RootAlphabetMismatch { root: u8, search: u8 },
    #[error("node budget of {0} exhausted; raise AVOIDANCE_NODE_BUDGET or set a depth limit")]
    NodeBudgetExhausted(usize),
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RangeError {
    #[error("index {0} out of supported range (u64 overflow)")]
    Overflow(u64),
    #[error("index must be >= 1")]
    ZeroIndex,
}
