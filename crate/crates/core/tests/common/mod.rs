#![allow(dead_code)]

//! Definition-based oracles, kept independent of the production code paths
//! they are used to check.

use avoidance::{AvoidanceSpec, Relation, Word};

/// Subword by definition: some contiguous slice of `z` equals `y`.
pub fn naive_subword(y: &Word, z: &Word) -> bool {
    let (y, z) = (y.symbols(), z.symbols());
    if y.is_empty() {
        return true;
    }
    if y.len() > z.len() {
        return false;
    }
    z.windows(y.len()).any(|slice| slice == y)
}

/// Subsequence by definition, as a table over "strike out or match":
/// `y[a..]` embeds in `z[b..]` iff we can match the heads or skip `z[b]`.
pub fn naive_subsequence(y: &Word, z: &Word) -> bool {
    let (y, z) = (y.symbols(), z.symbols());
    let mut embeds = vec![vec![false; z.len() + 1]; y.len() + 1];
    embeds[y.len()].iter_mut().for_each(|v| *v = true);
    for a in (0..y.len()).rev() {
        for b in (0..z.len()).rev() {
            embeds[a][b] = (y[a] == z[b] && embeds[a + 1][b + 1]) || embeds[a][b + 1];
        }
    }
    embeds[0][0]
}

/// Self-avoidance straight from the definition, built on the naive
/// containment oracles and explicit window slices.
pub fn naive_is_self_avoiding(x: &Word, spec: &AvoidanceSpec) -> bool {
    let n = x.len();
    for j in spec.min_index + 1..=n / 2 {
        let wj = Word::new(x.symbols()[j - 1..2 * j].to_vec(), x.alphabet_size()).unwrap();
        for i in spec.min_index..j {
            let wi = Word::new(x.symbols()[i - 1..2 * i].to_vec(), x.alphabet_size()).unwrap();
            let contained = match spec.relation {
                Relation::Subword => naive_subword(&wi, &wj),
                Relation::Subsequence => naive_subsequence(&wi, &wj),
            };
            if contained {
                return false;
            }
        }
    }
    true
}

/// All words of the given length over `{0, .., k-1}`, in lexicographic order.
pub fn all_words(k: u8, len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut current = vec![0u8; len];
    loop {
        out.push(Word::new(current.clone(), k).unwrap());
        let mut pos = len;
        while pos > 0 {
            if current[pos - 1] + 1 < k {
                current[pos - 1] += 1;
                current[pos..].iter_mut().for_each(|c| *c = 0);
                break;
            }
            pos -= 1;
        }
        if pos == 0 {
            return out;
        }
    }
}

/// The 0 <-> 1 complement of a binary word.
pub fn complement(w: &Word) -> Word {
    let symbols = w.symbols().iter().map(|&c| 1 - c).collect();
    Word::new(symbols, w.alphabet_size()).unwrap()
}
