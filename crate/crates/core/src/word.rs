//! Words over a small integer alphabet `{0, .., k-1}`.
//!
//! Textual I/O maps the digit characters `'0'..'9'` to symbols, so the
//! alphabet size is capped at 10. The empty string denotes the empty word.

use std::fmt;
use std::str::FromStr;

use crate::error::WordError;

/// Largest alphabet representable with one digit character per symbol.
pub const MAX_ALPHABET: u8 = 10;

/// A finite word over the alphabet `{0, .., alphabet_size - 1}`.
///
/// Symbols are stored 0-based internally; all position-taking operations
/// (`window`, violation witnesses) use 1-based positions, matching the usual
/// convention where the first letter of `x` is `x[1]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet_size: u8,
}

impl Word {
    pub fn new(symbols: Vec<u8>, alphabet_size: u8) -> Result<Self, WordError> {
        if alphabet_size == 0 || alphabet_size > MAX_ALPHABET {
            return Err(WordError::BadAlphabetSize(alphabet_size));
        }
        if let Some(&s) = symbols.iter().find(|&&s| s >= alphabet_size) {
            return Err(WordError::SymbolOutOfRange {
                symbol: s,
                alphabet_size,
            });
        }
        Ok(Word {
            symbols,
            alphabet_size,
        })
    }

    /// The empty word over an alphabet of size `k`.
    pub fn empty(alphabet_size: u8) -> Result<Self, WordError> {
        Word::new(Vec::new(), alphabet_size)
    }

    /// Parses a digit string. The alphabet size is `1 + max digit` unless
    /// given explicitly; an empty string with no explicit size is a word
    /// over the unary alphabet.
    pub fn from_digits(text: &str, alphabet_size: Option<u8>) -> Result<Self, WordError> {
        let mut symbols = Vec::with_capacity(text.len());
        for c in text.chars() {
            let d = c.to_digit(10).ok_or(WordError::InvalidCharacter(c))? as u8;
            symbols.push(d);
        }
        let k = match alphabet_size {
            Some(k) => k,
            None => symbols.iter().copied().max().map_or(1, |m| m + 1),
        };
        Word::new(symbols, k)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alphabet_size(&self) -> u8 {
        self.alphabet_size
    }

    /// 1-based letter access: `get(1)` is the first letter.
    pub fn get(&self, position: usize) -> Option<u8> {
        if position == 0 {
            return None;
        }
        self.symbols.get(position - 1).copied()
    }

    /// The word extended by one symbol.
    pub fn with_symbol(&self, symbol: u8) -> Result<Self, WordError> {
        if symbol >= self.alphabet_size {
            return Err(WordError::SymbolOutOfRange {
                symbol,
                alphabet_size: self.alphabet_size,
            });
        }
        let mut symbols = Vec::with_capacity(self.symbols.len() + 1);
        symbols.extend_from_slice(&self.symbols);
        symbols.push(symbol);
        Ok(Word {
            symbols,
            alphabet_size: self.alphabet_size,
        })
    }

    /// The prefix consisting of the first `len` symbols.
    pub fn prefix(&self, len: usize) -> Self {
        Word {
            symbols: self.symbols[..len.min(self.symbols.len())].to_vec(),
            alphabet_size: self.alphabet_size,
        }
    }

    /// Sort key for the breadth-first (length-then-lexicographic) order.
    pub fn length_lex_key(&self) -> (usize, &[u8]) {
        (self.symbols.len(), &self.symbols)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            write!(f, "{}", s)?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Word::from_digits(s, None)
    }
}
