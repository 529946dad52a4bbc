//! The two explicit infinite words and the structural checks from their
//! proofs.
//!
//! The ternary word `2 2 0 1 0 1^2 0 1^3 0 1^5 ...` is weakly self-avoiding;
//! its zeros sit exactly at the positions `f_i` given by
//! `f_{2n+1} = 5*2^n - 2` and `f_{2n} = 7*2^{n-1} - 2`. The binary word
//! `0 0 1 0 0 1^{g_1} 0 1^{g_2} 0 ...` with `g_1 = 3`, `g_2 = 2`,
//! `g_n = 2 g_{n-2} + 1` satisfies the offset variant (no window containment
//! for `2 <= i < j`).
//!
//! Both generators work from the run-length schedule; the closed forms are
//! kept as an independent cross-check rather than the generation path.

use crate::avoid::{first_violation, AvoidanceSpec, Relation, Violation};
use crate::error::RangeError;
use crate::word::Word;

/// Selector for the two explicit infinite words.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConstructionId {
    /// Ternary weakly self-avoiding word (zeros at the `f_i` positions).
    TernaryWsa,
    /// Binary word avoiding window containment for `2 <= i < j`.
    BinaryOffset2,
}

impl ConstructionId {
    /// The avoidance spec each construction is claimed to satisfy.
    pub fn claimed_spec(self) -> AvoidanceSpec {
        match self {
            ConstructionId::TernaryWsa => AvoidanceSpec::weak(),
            ConstructionId::BinaryOffset2 => AvoidanceSpec {
                relation: Relation::Subword,
                min_index: 2,
            },
        }
    }

    /// Smallest window index for which every window holds exactly two zeros.
    pub fn two_zero_min_index(self) -> usize {
        match self {
            ConstructionId::TernaryWsa => 3,
            ConstructionId::BinaryOffset2 => 2,
        }
    }

    pub fn alphabet_size(self) -> u8 {
        match self {
            ConstructionId::TernaryWsa => 3,
            ConstructionId::BinaryOffset2 => 2,
        }
    }
}

/// 1-based position of the `index`'th zero of the ternary word, by the
/// closed forms. Checked arithmetic: huge indices are a range error, never
/// a silent wraparound.
pub fn zero_position(index: u64) -> Result<u64, RangeError> {
    if index == 0 {
        return Err(RangeError::ZeroIndex);
    }
    let overflow = || RangeError::Overflow(index);
    if index % 2 == 1 {
        // f_{2n+1} = 5 * 2^n - 2, n >= 0
        let n = (index - 1) / 2;
        let pow = 1u64.checked_shl(u32::try_from(n).map_err(|_| overflow())?).ok_or_else(overflow)?;
        Ok(5u64.checked_mul(pow).ok_or_else(overflow)? - 2)
    } else {
        // f_{2n} = 7 * 2^{n-1} - 2, n >= 1
        let n = index / 2;
        let pow = 1u64.checked_shl(u32::try_from(n - 1).map_err(|_| overflow())?).ok_or_else(overflow)?;
        Ok(7u64.checked_mul(pow).ok_or_else(overflow)? - 2)
    }
}

/// The `n`'th 1-run length of the binary word: `g_1 = 3`, `g_2 = 2`,
/// `g_n = 2 g_{n-2} + 1`.
pub fn g_term(n: u64) -> Result<u64, RangeError> {
    run_term(n, 3, 2)
}

/// Shared recurrence `a_n = 2 a_{n-2} + 1` with the given two seeds. The
/// ternary word's 1-runs follow the same recurrence with seeds (1, 2).
fn run_term(n: u64, seed1: u64, seed2: u64) -> Result<u64, RangeError> {
    match n {
        0 => Err(RangeError::ZeroIndex),
        1 => Ok(seed1),
        2 => Ok(seed2),
        _ => {
            let prev = run_term(n - 2, seed1, seed2)?;
            prev.checked_mul(2)
                .and_then(|v| v.checked_add(1))
                .ok_or(RangeError::Overflow(n))
        }
    }
}

/// Iterator over the scheduled 1-run lengths, after the fixed prefix
/// (`220` for the ternary word, `00100` for the binary one).
fn scheduled_runs(id: ConstructionId) -> impl Iterator<Item = u64> {
    let mut pair = match id {
        ConstructionId::TernaryWsa => (1u64, 2u64),
        ConstructionId::BinaryOffset2 => (3, 2),
    };
    std::iter::from_fn(move || {
        let out = pair.0;
        pair = (pair.1, 2 * pair.0 + 1);
        Some(out)
    })
}

/// Everything up to and including the first scheduled zero.
fn fixed_prefix(id: ConstructionId) -> &'static [u8] {
    match id {
        ConstructionId::TernaryWsa => &[2, 2, 0],
        ConstructionId::BinaryOffset2 => &[0, 0, 1, 0, 0],
    }
}

/// The exact length-`length` prefix of the chosen infinite word, built from
/// the run-length schedule.
pub fn generate(id: ConstructionId, length: usize) -> Word {
    let prefix = fixed_prefix(id);
    let mut symbols: Vec<u8> = prefix[..prefix.len().min(length)].to_vec();
    'outer: for run in scheduled_runs(id) {
        for _ in 0..run {
            if symbols.len() >= length {
                break 'outer;
            }
            symbols.push(1);
        }
        if symbols.len() >= length {
            break;
        }
        symbols.push(0);
    }
    Word::new(symbols, id.alphabet_size()).expect("generator emits only valid symbols")
}

/// 1-based positions of the zeros of `generate(id, length)`, derived from
/// the run-length schedule (not the closed forms).
pub fn zero_schedule(id: ConstructionId, length: u64) -> Vec<u64> {
    let mut positions: Vec<u64> = fixed_prefix(id)
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c == 0)
        .map(|(idx, _)| idx as u64 + 1)
        .collect();
    let mut pos = *positions.last().expect("prefix ends with a zero");
    for run in scheduled_runs(id) {
        pos = match pos.checked_add(run).and_then(|p| p.checked_add(1)) {
            Some(p) => p,
            None => break,
        };
        if pos > length {
            break;
        }
        positions.push(pos);
    }
    positions.retain(|&p| p <= length);
    positions
}

/// Smallest `i >= i_min` with `2i <= |x|` whose window does not hold exactly
/// two zeros, or `None` if all windows pass. Runs in O(|x|) via prefix
/// counts.
pub fn two_zero_window_check(x: &Word, i_min: usize) -> Option<usize> {
    let s = x.symbols();
    let n = s.len();
    // zeros_upto[p] = number of zeros among the first p letters
    let mut zeros_upto = Vec::with_capacity(n + 1);
    zeros_upto.push(0u32);
    for &c in s {
        zeros_upto.push(zeros_upto.last().unwrap() + u32::from(c == 0));
    }
    (i_min.max(1)..=n / 2).find(|&i| zeros_upto[2 * i] - zeros_upto[i - 1] != 2)
}

/// Lengths of the maximal runs of the symbol 1, in order of occurrence.
pub fn block_lengths(x: &Word) -> Vec<usize> {
    let mut lengths = Vec::new();
    let mut run = 0usize;
    for &c in x.symbols() {
        if c == 1 {
            run += 1;
        } else if run > 0 {
            lengths.push(run);
            run = 0;
        }
    }
    if run > 0 {
        lengths.push(run);
    }
    lengths
}

/// Runs `first_violation` on the generated prefix under the construction's
/// claimed spec. A returned witness falsifies the claim (or the generator).
pub fn verify_weak_self_avoidance(id: ConstructionId, length: usize) -> Option<Violation> {
    first_violation(&generate(id, length), &id.claimed_spec())
}

/// A structural check that failed, with a human-readable witness.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{check} failed: {witness}")]
pub struct StructuralViolation {
    pub check: &'static str,
    pub witness: String,
}

fn fail(check: &'static str, witness: String) -> Result<(), StructuralViolation> {
    Err(StructuralViolation { check, witness })
}

/// Zeros of the generated prefix must match the closed forms (ternary) or
/// the `g` recurrence run lengths (binary).
pub fn check_schedule_consistency(
    id: ConstructionId,
    x: &Word,
) -> Result<(), StructuralViolation> {
    let positions = zero_schedule(id, x.len() as u64);
    let mut from_word = Vec::new();
    for (idx, &c) in x.symbols().iter().enumerate() {
        if c == 0 {
            from_word.push(idx as u64 + 1);
        }
    }
    if from_word != positions {
        return fail(
            "schedule-consistency",
            format!("generated zeros {from_word:?} != schedule {positions:?}"),
        );
    }
    match id {
        ConstructionId::TernaryWsa => {
            for (idx, &p) in positions.iter().enumerate() {
                let f = zero_position(idx as u64 + 1)
                    .map_err(|e| StructuralViolation {
                        check: "schedule-consistency",
                        witness: e.to_string(),
                    })?;
                if f != p {
                    return fail(
                        "schedule-consistency",
                        format!("zero #{} at {p}, closed form gives {f}", idx + 1),
                    );
                }
            }
        }
        ConstructionId::BinaryOffset2 => {
            // blocks after the isolated 1 of the 00100 prefix are g_1, g_2, ...
            let blocks = block_lengths(x);
            let complete = blocks.len().saturating_sub(2); // skip prefix run, drop clipped tail
            for (n, &b) in blocks.iter().skip(1).take(complete).enumerate() {
                let g = g_term(n as u64 + 1).expect("small index");
                if b as u64 != g {
                    return fail(
                        "schedule-consistency",
                        format!("run #{} has length {b}, recurrence gives {g}", n + 1),
                    );
                }
            }
        }
    }
    Ok(())
}

/// Every 1-block of the generated prefix (ignoring a possibly clipped final
/// run) has a distinct length.
pub fn check_distinct_blocks(x: &Word) -> Result<(), StructuralViolation> {
    let mut blocks = block_lengths(x);
    if x.symbols().last() == Some(&1) {
        blocks.pop();
    }
    let mut seen = std::collections::HashSet::new();
    for (idx, &b) in blocks.iter().enumerate() {
        if !seen.insert(b) {
            return fail(
                "distinct-blocks",
                format!("duplicate 1-block length {b} at block #{}", idx + 1),
            );
        }
    }
    Ok(())
}

/// The two-interval case analysis for the ternary word: for
/// `5*2^n - 1 <= i < 7*2^n - 1` the window's zeros sit at absolute positions
/// `7*2^n - 2` and `5*2^{n+1} - 2`; for `7*2^{n-1} - 1 <= i < 5*2^n - 1`
/// they sit at `5*2^n - 2` and `7*2^n - 2`. Checked for `n <= max_n`
/// against the generated prefix.
pub fn check_interval_cases(x: &Word, max_n: u32) -> Result<(), StructuralViolation> {
    let s = x.symbols();
    let zeros_in = |i: usize| -> Vec<u64> {
        s[i - 1..2 * i]
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == 0)
            .map(|(off, _)| (i + off) as u64)
            .collect()
    };
    let expect = |i: usize, want: [u64; 2]| -> Result<(), StructuralViolation> {
        if 2 * i > s.len() {
            return Ok(());
        }
        let got = zeros_in(i);
        if got != want {
            return fail(
                "interval-cases",
                format!("window i={i}: zeros at {got:?}, expected {want:?}"),
            );
        }
        Ok(())
    };
    for n in 0..=max_n {
        let p = 1u64 << n;
        for i in 5 * p - 1..7 * p - 1 {
            expect(i as usize, [7 * p - 2, 10 * p - 2])?;
        }
        if n >= 1 {
            let h = p / 2;
            for i in 7 * h - 1..5 * p - 1 {
                expect(i as usize, [5 * p - 2, 7 * p - 2])?;
            }
        }
    }
    Ok(())
}

/// Structural form of the middle-block rigidity argument: every window
/// `x[i..2i]` with `i >= i_min` decomposes as `1^u 0 1^v 0 1^w` where the
/// two zeros are consecutive entries of the zero schedule. The zero-pair
/// index is non-decreasing in `i`, and within one pair `u = p - i` is
/// strictly decreasing, so together with distinct block lengths no such
/// window can be a subword of a later one.
pub fn check_middle_block_rigidity(
    id: ConstructionId,
    x: &Word,
) -> Result<(), StructuralViolation> {
    let n = x.len() as u64;
    let schedule = zero_schedule(id, n);
    let i_min = id.two_zero_min_index() as u64;
    let mut prev_pair_idx = 0usize;
    for i in i_min..=n / 2 {
        // first schedule entry >= i
        let idx = schedule.partition_point(|&p| p < i);
        let in_window =
            |k: usize| -> bool { schedule.get(k).is_some_and(|&p| p >= i && p <= 2 * i) };
        if !(in_window(idx) && in_window(idx + 1)) || in_window(idx + 2) {
            return fail(
                "middle-block-rigidity",
                format!("window i={i} does not hold exactly two scheduled zeros"),
            );
        }
        if idx < prev_pair_idx {
            return fail(
                "middle-block-rigidity",
                format!("zero-pair index decreased at window i={i}"),
            );
        }
        prev_pair_idx = idx;
    }
    Ok(())
}

/// All structural checks for one construction at the given prefix length,
/// in a fixed order. Returns the passing check names, or the first failure.
pub fn verify_structural(
    id: ConstructionId,
    length: usize,
) -> Result<Vec<&'static str>, StructuralViolation> {
    let x = generate(id, length);
    let mut passed = Vec::new();
    check_schedule_consistency(id, &x)?;
    passed.push("schedule-consistency");
    if let Some(i) = two_zero_window_check(&x, id.two_zero_min_index()) {
        return Err(StructuralViolation {
            check: "two-zero-windows",
            witness: format!("window i={i} does not hold exactly two zeros"),
        });
    }
    passed.push("two-zero-windows");
    check_distinct_blocks(&x)?;
    passed.push("distinct-blocks");
    if id == ConstructionId::TernaryWsa {
        check_interval_cases(&x, 6)?;
        passed.push("interval-cases");
    }
    check_middle_block_rigidity(id, &x)?;
    passed.push("middle-block-rigidity");
    Ok(passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_positions_match_the_listed_values() {
        let want = [3u64, 5, 8, 12, 18, 26, 38, 54, 78, 110, 158];
        for (idx, &f) in want.iter().enumerate() {
            assert_eq!(zero_position(idx as u64 + 1).unwrap(), f);
        }
        assert_eq!(zero_position(12).unwrap(), 222);
        assert_eq!(zero_position(0), Err(RangeError::ZeroIndex));
        assert!(matches!(zero_position(1000), Err(RangeError::Overflow(_))));
    }

    #[test]
    fn g_terms_match_the_expansion() {
        let want = [3u64, 2, 7, 5, 15, 11, 31, 23];
        for (n, &g) in want.iter().enumerate() {
            assert_eq!(g_term(n as u64 + 1).unwrap(), g);
        }
        assert_eq!(g_term(10).unwrap(), 47);
        assert!(matches!(g_term(500), Err(RangeError::Overflow(_))));
    }

    #[test]
    fn generated_prefixes_match_the_displayed_words() {
        assert_eq!(
            generate(ConstructionId::TernaryWsa, 12).to_string(),
            "220101101110"
        );
        assert_eq!(generate(ConstructionId::TernaryWsa, 2).to_string(), "22");
        assert_eq!(generate(ConstructionId::TernaryWsa, 1).to_string(), "2");
        assert_eq!(
            generate(ConstructionId::BinaryOffset2, 12).to_string(),
            "001001110110"
        );
        assert_eq!(
            generate(ConstructionId::BinaryOffset2, 5).to_string(),
            "00100"
        );
    }

    #[test]
    fn ternary_zeros_sit_exactly_at_the_f_positions() {
        let x = generate(ConstructionId::TernaryWsa, 400);
        let mut want = Vec::new();
        for idx in 1.. {
            match zero_position(idx) {
                Ok(p) if p <= 400 => want.push(p),
                _ => break,
            }
        }
        let got: Vec<u64> = x
            .symbols()
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == 0)
            .map(|(i, _)| i as u64 + 1)
            .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn block_lengths_examples() {
        let t = generate(ConstructionId::TernaryWsa, 160);
        assert_eq!(&block_lengths(&t)[..10], &[1, 2, 3, 5, 7, 11, 15, 23, 31, 47]);
        let b = generate(ConstructionId::BinaryOffset2, 100);
        assert_eq!(&block_lengths(&b)[..7], &[1, 3, 2, 7, 5, 15, 11]);
        let zeros = Word::from_digits("0000", None).unwrap();
        assert!(block_lengths(&zeros).is_empty());
    }

    #[test]
    fn ternary_blocks_are_first_differences_of_zero_positions_minus_one() {
        let x = generate(ConstructionId::TernaryWsa, 200_000);
        let blocks = block_lengths(&x);
        for n in 0..20 {
            let gap = zero_position(n + 2).unwrap() - zero_position(n + 1).unwrap() - 1;
            assert_eq!(blocks[n as usize] as u64, gap, "block #{n}");
        }
    }

    #[test]
    fn two_zero_windows() {
        let t = generate(ConstructionId::TernaryWsa, 1000);
        assert_eq!(two_zero_window_check(&t, 3), None);
        assert_eq!(two_zero_window_check(&t, 1), Some(1)); // window 22 has no zero
        let b = generate(ConstructionId::BinaryOffset2, 1000);
        assert_eq!(two_zero_window_check(&b, 2), None);
    }

    #[test]
    fn verify_weak_self_avoidance_small() {
        assert_eq!(
            verify_weak_self_avoidance(ConstructionId::TernaryWsa, 316),
            None
        );
        assert_eq!(
            verify_weak_self_avoidance(ConstructionId::TernaryWsa, 4),
            None
        );
        assert_eq!(
            verify_weak_self_avoidance(ConstructionId::BinaryOffset2, 512),
            None
        );
    }

    #[test]
    fn binary_offset2_fails_at_min_index_1() {
        // Negative control: the claim starts at i = 2, and i = 1 does break.
        let x = generate(ConstructionId::BinaryOffset2, 64);
        let spec = AvoidanceSpec::weak();
        let v = first_violation(&x, &spec).expect("expected a violation with i = 1");
        assert_eq!(v.i, 1);
    }

    #[test]
    fn structural_checks_pass_at_moderate_length() {
        assert!(verify_structural(ConstructionId::TernaryWsa, 1 << 14).is_ok());
        assert!(verify_structural(ConstructionId::BinaryOffset2, 1 << 14).is_ok());
    }

    #[test]
    fn prefix_stability() {
        for id in [ConstructionId::TernaryWsa, ConstructionId::BinaryOffset2] {
            let long = generate(id, 4096);
            for len in [1usize, 2, 3, 5, 100, 1000, 4095] {
                assert_eq!(generate(id, len), long.prefix(len), "{id:?} len {len}");
            }
        }
    }
}
