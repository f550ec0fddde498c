//! Feedback shift register construction of fermionic necklaces.
//!
//! Start from an arbitrary `(n-1)`-bit seed and repeatedly append a bit by
//! the linear feedback rule: append `0` if the last `n - 1` bits have odd
//! sum, `1` if even. By construction every window of `n` consecutive bits
//! then has odd sum, which forces the sequence to be periodic with period
//! `n` (two overlapping odd windows differ in their end bits, so
//! `s[t] = s[t - n]`). Extracting one full period therefore yields a word
//! with an odd number of `1` beads, and the distinct cycles obtained from
//! all seeds are in one-to-one correspondence with the fermionic necklaces
//! of length `n`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::necklace::BinaryWord;

/// Maximum register length for exhaustive cycle extraction.
pub const MAX_LFSR_LEN: usize = 24;

/// The feedback rule for a register of length `window.len() + 1`: the
/// appended bit is `0` if the window's bit sum is odd and `1` if it is even,
/// making the completed window sum odd. Rejects the empty window.
pub fn lfsr_step(window: &BinaryWord) -> Result<u8> {
    if window.is_empty() {
        return Err(Error::Domain(
            "feedback rule requires a register length of at least 2".into(),
        ));
    }
    Ok(if window.fermionic_beads() % 2 == 1 {
        0
    } else {
        1
    })
}

/// Infinite bit stream of the register: the seed bits first, then bits
/// generated by the feedback rule applied to the last `n - 1` emitted bits.
pub struct Lfsr {
    window_len: usize,
    seed: BinaryWord,
    emitted: usize,
    window: u64, // last `window_len` bits, most recent in bit 0
}

impl Lfsr {
    /// Creates a register of cell length `seed.len() + 1` from a non-empty
    /// seed.
    pub fn new(seed: BinaryWord) -> Result<Self> {
        if seed.is_empty() {
            return Err(Error::Domain(
                "register seed must have at least one bit".into(),
            ));
        }
        if seed.len() >= 64 {
            return Err(Error::Range(
                "register cell length would exceed the packed word limit".into(),
            ));
        }
        Ok(Lfsr {
            window_len: seed.len(),
            seed,
            emitted: 0,
            window: 0,
        })
    }

    /// The register (elementary cell) length `n`.
    pub fn cell_len(&self) -> usize {
        self.window_len + 1
    }
}

impl Iterator for Lfsr {
    type Item = u8;

    fn next(&mut self) -> Option<u8> {
        let bit = if self.emitted < self.seed.len() {
            self.seed.bead(self.emitted)
        } else {
            // Window is full here: seed.len() = window_len bits emitted.
            if (self.window.count_ones() as usize) % 2 == 1 {
                0
            } else {
                1
            }
        };
        self.emitted += 1;
        self.window = ((self.window << 1) | u64::from(bit)) & ((1u64 << self.window_len) - 1);
        Some(bit)
    }
}

/// The first `len` bits of the register stream seeded with `seed`: the seed
/// itself (truncated if `len` is shorter) followed by generated bits.
pub fn lfsr_sequence(seed: &BinaryWord, len: usize) -> Result<Vec<u8>> {
    Ok(Lfsr::new(*seed)?.take(len).collect())
}

/// Runs the register from every `(n-1)`-bit seed, extracts the first full
/// period after the seed window and canonicalizes it; returns the distinct
/// cells. Their number equals the count of fermionic necklaces of length
/// `n`. Supported for `2 <= n <= 24`.
pub fn lfsr_cycles(n: usize) -> Result<BTreeSet<BinaryWord>> {
    if n < 2 {
        return Err(Error::Domain("cycle extraction requires n >= 2".into()));
    }
    if n > MAX_LFSR_LEN {
        return Err(Error::Range(format!(
            "n = {n} exceeds the cycle-extraction limit of {MAX_LFSR_LEN}"
        )));
    }
    let mut cycles = BTreeSet::new();
    for seed_bits in 0..(1u64 << (n - 1)) {
        let seed = BinaryWord::new(n - 1, seed_bits)?;
        let bits = lfsr_sequence(&seed, 2 * n - 1)?;
        let cell = BinaryWord::from_beads(&bits[n - 1..2 * n - 1])?;
        cycles.insert(cell.canonical_form());
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::fermionic_count;
    use num_bigint::BigInt;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    fn bits_to_string(bits: &[u8]) -> String {
        bits.iter().map(|b| char::from(b'0' + b)).collect()
    }

    #[test]
    fn step_examples() {
        assert_eq!(lfsr_step(&w("000")).unwrap(), 1);
        assert_eq!(lfsr_step(&w("111")).unwrap(), 0);
        assert_eq!(lfsr_step(&w("001")).unwrap(), 0);
        assert!(lfsr_step(&BinaryWord::empty()).is_err());
    }

    #[test]
    fn sequence_examples() {
        let s = lfsr_sequence(&w("010"), 18).unwrap();
        assert_eq!(bits_to_string(&s), "010001000100010001");
        let s = lfsr_sequence(&w("110"), 18).unwrap();
        assert_eq!(bits_to_string(&s), "110111011101110111");
        // Truncation below the seed length is allowed.
        assert_eq!(lfsr_sequence(&w("110"), 2).unwrap(), vec![1, 1]);
        assert_eq!(lfsr_sequence(&w("110"), 0).unwrap(), Vec::<u8>::new());
    }

    #[test]
    fn equivalent_seeds_share_a_cell() {
        // Seeds 010 and 100 generate rotations of the same 4-bead cell.
        let extract = |seed: &str| {
            let bits = lfsr_sequence(&w(seed), 7).unwrap();
            BinaryWord::from_beads(&bits[3..7])
                .unwrap()
                .canonical_form()
        };
        assert_eq!(extract("010"), extract("100"));
        assert_eq!(extract("010"), w("0001"));
    }

    #[test]
    fn cycles_examples() {
        let cycles4 = lfsr_cycles(4).unwrap();
        let want: BTreeSet<BinaryWord> = [w("0001"), w("0111")].into_iter().collect();
        assert_eq!(cycles4, want);

        let cycles2 = lfsr_cycles(2).unwrap();
        assert_eq!(cycles2, [w("01")].into_iter().collect());

        assert!(lfsr_cycles(1).is_err());
        assert!(lfsr_cycles(25).is_err());
    }

    #[test]
    fn cycle_count_matches_fermionic_count() {
        for n in 2..=14 {
            assert_eq!(
                BigInt::from(lfsr_cycles(n).unwrap().len()),
                fermionic_count(n).unwrap(),
                "n = {n}"
            );
        }
    }

    #[test]
    fn every_cell_is_fermionic() {
        for n in 2..=12 {
            for cell in lfsr_cycles(n).unwrap() {
                assert_eq!(cell.fermionic_beads() % 2, 1, "cell {cell}");
            }
        }
    }

    #[test]
    fn emitted_windows_have_odd_parity_and_period_n() {
        for n in 2..=10usize {
            for seed_bits in 0..(1u64 << (n - 1)) {
                let seed = BinaryWord::new(n - 1, seed_bits).unwrap();
                let bits = lfsr_sequence(&seed, 4 * n).unwrap();
                // Every full n-window has odd sum.
                for t in 0..=bits.len() - n {
                    let sum: u32 = bits[t..t + n].iter().map(|&b| u32::from(b)).sum();
                    assert_eq!(sum % 2, 1, "seed {seed}, window at {t}");
                }
                // The n-th generated figure reproduces the first: period n
                // from the very start.
                for t in 0..bits.len() - n {
                    assert_eq!(bits[t], bits[t + n], "seed {seed}, t = {t}");
                }
            }
        }
    }
}
