//! The word/necklace model: rotations, fermionic sign tracking, canonical
//! forms and the allowed/forbidden classification.
//!
//! A [`BinaryWord`] is a fixed-length cyclic sequence of beads, `0` for a
//! bosonic and `1` for a fermionic creation operator. Rotating the word
//! right by one moves the last bead to the front, exactly like cycling the
//! last operator out of a trace; if the moved bead is fermionic it picks up
//! a sign `(-1)^(F-1)` from anticommuting past the other `F - 1` fermionic
//! operators.
//!
//! A rotation class is *Pauli-forbidden* when some rotation maps the word to
//! itself with sign `-1` (the trace then equals minus itself and vanishes).
//! Equivalently, in terms of the symmetry of the word: the class is
//! forbidden iff its symmetry order `k0 = n / p` (`p` = minimal period) is
//! even and `F / k0` is odd. [`BinaryWord::classify`] computes the status
//! both ways and insists they agree.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactmath::divisor_list;

/// A binary word of up to 64 beads, packed into a `u64`.
///
/// Bead `i` (leftmost = 0) is stored at bit `len - 1 - i`, so that for equal
/// lengths the numeric order of `bits` is the lexicographic order of the
/// words. Counting-only code paths never materialize words; 64 beads is
/// ample for every enumeration range supported by the sieve.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    len: u8,
    bits: u64,
}

/// Maximum number of beads in a packed word.
pub const MAX_WORD_LEN: usize = 64;

#[inline]
fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl BinaryWord {
    /// The empty word (the Fock vacuum). It is a valid word; classification
    /// operations reject it, counting operations special-case it.
    pub fn empty() -> Self {
        BinaryWord { len: 0, bits: 0 }
    }

    /// Builds a word of `len` beads from packed bits (bead 0 at bit
    /// `len - 1`). Bits above `len` must be clear.
    pub fn new(len: usize, bits: u64) -> Result<Self> {
        if len > MAX_WORD_LEN {
            return Err(Error::Range(format!(
                "word length {len} exceeds the packed maximum of {MAX_WORD_LEN}"
            )));
        }
        if bits & !mask(len) != 0 {
            return Err(Error::Domain(format!(
                "bit pattern {bits:#x} does not fit in {len} beads"
            )));
        }
        Ok(BinaryWord {
            len: len as u8,
            bits,
        })
    }

    /// Builds a word from a slice of beads (each 0 or 1), leftmost first.
    pub fn from_beads(beads: &[u8]) -> Result<Self> {
        if beads.len() > MAX_WORD_LEN {
            return Err(Error::Range(format!(
                "word length {} exceeds the packed maximum of {MAX_WORD_LEN}",
                beads.len()
            )));
        }
        let mut bits = 0u64;
        for &b in beads {
            if b > 1 {
                return Err(Error::Domain(format!("bead value {b} is not 0 or 1")));
            }
            bits = (bits << 1) | u64::from(b);
        }
        Ok(BinaryWord {
            len: beads.len() as u8,
            bits,
        })
    }

    /// Number of beads `n`.
    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// The packed bit pattern (bead 0 at the most significant used bit).
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Number of bosonic beads `B` (zeros).
    pub fn bosonic_beads(&self) -> usize {
        self.len() - self.fermionic_beads()
    }

    /// Number of fermionic beads `F` (ones).
    pub fn fermionic_beads(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// The bead at position `i` (0 = leftmost).
    pub fn bead(&self, i: usize) -> u8 {
        assert!(i < self.len(), "bead index {i} out of range");
        ((self.bits >> (self.len() - 1 - i)) & 1) as u8
    }

    /// The beads as a vector, leftmost first.
    pub fn beads(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.bead(i)).collect()
    }

    /// Cyclic rotation by `s` positions; one right-rotation moves the last
    /// bead to the front. `s` is taken modulo `n`; negative `s` rotates the
    /// other way. The empty word rotates to itself.
    pub fn rotate(&self, s: isize) -> BinaryWord {
        let n = self.len();
        if n == 0 {
            return *self;
        }
        let s = s.rem_euclid(n as isize) as usize;
        if s == 0 {
            return *self;
        }
        // Bead n-1 sits at bit 0, so rotating beads right is a bitwise
        // right rotation within the low n bits.
        let bits = ((self.bits >> s) | (self.bits << (n - s))) & mask(n);
        BinaryWord {
            len: self.len,
            bits,
        }
    }

    /// The fermionic sign accumulated by rotating right `s` times.
    ///
    /// Each right-rotation moves the last operator past the other `n - 1`;
    /// a fermionic operator anticommutes with the `F - 1` remaining
    /// fermionic ones and contributes `(-1)^(F-1)`, a bosonic operator
    /// contributes `+1`. A full turn performs `F (F - 1)` transpositions,
    /// always even, so the sign only depends on `s mod n`.
    pub fn rotation_sign(&self, s: isize) -> i32 {
        let n = self.len();
        if n == 0 {
            return 1;
        }
        let s = s.rem_euclid(n as isize) as usize;
        let f = self.fermionic_beads();
        // Beads moved to the front are the last s, i.e. the low s bits.
        let moved_fermions = (self.bits & mask(s)).count_ones() as usize;
        if f.is_multiple_of(2) && moved_fermions % 2 == 1 {
            // (F - 1) odd and an odd number of fermions moved past the rest.
            -1
        } else {
            1
        }
    }

    /// The lexicographically least rotation (Booth's algorithm, O(n)).
    /// Equal for every member of a rotation class.
    pub fn canonical_form(&self) -> BinaryWord {
        let n = self.len();
        if n <= 1 {
            return *self;
        }
        let mut beads = [0u8; MAX_WORD_LEN];
        for (i, bead) in beads[..n].iter_mut().enumerate() {
            *bead = self.bead(i);
        }
        let start = least_rotation_start(&beads[..n]);
        // Left-rotating by `start` brings the least rotation to the front.
        self.rotate(-(start as isize))
    }

    /// True when the word equals its own canonical form.
    pub(crate) fn is_canonical(&self) -> bool {
        let n = self.len();
        for s in 1..n {
            if self.rotate(s as isize).bits < self.bits {
                return false;
            }
        }
        true
    }

    /// The smallest `p >= 1` with `p | n` and `rotate(p) == self`.
    /// Rejects the empty word.
    pub fn minimal_period(&self) -> Result<usize> {
        let n = self.len();
        if n == 0 {
            return Err(Error::Domain("the empty word has no period".into()));
        }
        for p in divisor_list(n) {
            if self.rotate(p as isize) == *self {
                return Ok(p);
            }
        }
        unreachable!("rotation by n is the identity");
    }

    /// Symmetry-based forbidden test: the class is forbidden iff the
    /// symmetry order `k0 = n / p` is even and `F / k0` is odd.
    pub fn forbidden_by_symmetry(&self) -> Result<bool> {
        let p = self.minimal_period()?;
        let k0 = self.len() / p;
        // F is a multiple of k0: the word is a p-cell repeated k0 times.
        let f = self.fermionic_beads();
        Ok(k0.is_multiple_of(2) && (f / k0) % 2 == 1)
    }

    /// Sign-based forbidden test: the class is forbidden iff some rotation
    /// maps the word to itself with sign `-1`.
    pub fn forbidden_by_sign(&self) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::Domain("the empty word cannot be classified".into()));
        }
        let n = self.len() as isize;
        for s in 1..=n {
            if self.rotate(s) == *self && self.rotation_sign(s) == -1 {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Full classification of the word's rotation class. Rejects the empty
    /// word. The forbidden status is computed independently by the symmetry
    /// test and the sign test; the two must agree.
    pub fn classify(&self) -> Result<NecklaceClass> {
        let p = self.minimal_period()?;
        let n = self.len();
        let k0 = n / p;
        let f = self.fermionic_beads();
        let by_symmetry = k0.is_multiple_of(2) && (f / k0) % 2 == 1;
        let by_sign = self.forbidden_by_sign()?;
        assert_eq!(
            by_symmetry, by_sign,
            "classification disagreement on {self}: symmetry {by_symmetry}, sign {by_sign}"
        );
        Ok(NecklaceClass {
            canonical: self.canonical_form(),
            minimal_period: p,
            symmetry_order: k0,
            statistics: if f % 2 == 1 {
                Statistics::Fermionic
            } else {
                Statistics::Bosonic
            },
            status: if by_symmetry {
                Status::Forbidden
            } else {
                Status::Allowed
            },
        })
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            write!(f, "{}", self.bead(i))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryWord({self})")
    }
}

/// Accepts '0'/'1', or 'a'/'f' for bosonic/fermionic beads.
impl FromStr for BinaryWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut beads = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                '0' | 'a' => beads.push(0),
                '1' | 'f' => beads.push(1),
                other => {
                    return Err(Error::Parse(format!(
                        "invalid bead character {other:?} (expected 0, 1, a or f)"
                    )))
                }
            }
        }
        BinaryWord::from_beads(&beads)
    }
}

/// Bead-count parity of a class: fermionic = odd `F`, bosonic = even `F`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistics {
    Bosonic,
    Fermionic,
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistics::Bosonic => write!(f, "bosonic"),
            Statistics::Fermionic => write!(f, "fermionic"),
        }
    }
}

/// Pauli status of a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Allowed,
    Forbidden,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Allowed => write!(f, "allowed"),
            Status::Forbidden => write!(f, "forbidden"),
        }
    }
}

/// A rotation class together with its derived data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecklaceClass {
    /// Lexicographically least rotation.
    pub canonical: BinaryWord,
    /// Smallest positive `p` with `rotate(p)` the identity; divides `n`.
    pub minimal_period: usize,
    /// `k0 = n / p`, the order of the rotational symmetry group.
    pub symmetry_order: usize,
    pub statistics: Statistics,
    pub status: Status,
}

impl NecklaceClass {
    pub fn n(&self) -> usize {
        self.canonical.len()
    }

    pub fn bosonic_beads(&self) -> usize {
        self.canonical.bosonic_beads()
    }

    pub fn fermionic_beads(&self) -> usize {
        self.canonical.fermionic_beads()
    }
}

/// Booth's least-rotation algorithm: index of the lexicographically
/// smallest rotation of `s`, in O(n).
fn least_rotation_start(s: &[u8]) -> usize {
    let n = s.len();
    let at = |i: usize| s[i % n];
    let mut failure = [-1i32; 2 * MAX_WORD_LEN];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = failure[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = failure[i as usize];
        }
        if i == -1 {
            if sj != at(k) {
                if sj < at(k) {
                    k = j;
                }
                failure[j - k] = -1;
            } else {
                failure[j - k] = 0;
            }
        } else {
            failure[j - k] = i + 1;
        }
    }
    k % n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    // Independent oracle: rotation on an unpacked vector.
    fn rotate_oracle(word: &BinaryWord, s: isize) -> BinaryWord {
        let n = word.len();
        if n == 0 {
            return *word;
        }
        let s = s.rem_euclid(n as isize) as usize;
        let beads = word.beads();
        let rotated: Vec<u8> = (0..n).map(|i| beads[(i + n - s) % n]).collect();
        BinaryWord::from_beads(&rotated).unwrap()
    }

    // Independent oracle: the sign of a rotation is the parity of the
    // permutation it induces on the fermionic operators alone, computed by
    // inversion counting on their positions.
    fn sign_oracle(word: &BinaryWord, s: isize) -> i32 {
        let n = word.len();
        if n == 0 {
            return 1;
        }
        let s = s.rem_euclid(n as isize) as usize;
        let positions: Vec<usize> = (0..n).filter(|&i| word.bead(i) == 1).collect();
        let images: Vec<usize> = positions.iter().map(|&p| (p + s) % n).collect();
        let mut inversions = 0;
        for i in 0..images.len() {
            for j in i + 1..images.len() {
                if images[i] > images[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    // Independent oracle: minimum over all rotations.
    fn canonical_oracle(word: &BinaryWord) -> BinaryWord {
        (0..word.len().max(1))
            .map(|s| word.rotate(s as isize))
            .min()
            .unwrap_or(*word)
    }

    #[test]
    fn rotate_examples() {
        assert_eq!(w("0101").rotate(1), w("1010"));
        assert_eq!(w("0011").rotate(2), w("1100"));
        for word in ["0", "0110", "10010", "111000111000"] {
            let word = w(word);
            assert_eq!(word.rotate(word.len() as isize), word);
        }
        assert_eq!(BinaryWord::empty().rotate(5), BinaryWord::empty());
    }

    #[test]
    fn rotate_matches_oracle() {
        for n in 0..=10usize {
            for bits in 0..(1u64 << n) {
                let word = BinaryWord::new(n, bits).unwrap();
                for s in -12..=12isize {
                    assert_eq!(word.rotate(s), rotate_oracle(&word, s));
                }
            }
        }
    }

    #[test]
    fn rotate_full_width_word() {
        let word = BinaryWord::new(64, u64::MAX - 1).unwrap();
        assert_eq!(word.rotate(64), word);
        assert_eq!(word.rotate(1).rotate(-1), word);
        assert_eq!(word.rotate(13).rotate(51), word);
    }

    #[test]
    fn rotation_sign_examples() {
        // Tr(a+ f+ a+ f+) = -Tr(f+ a+ f+ a+)
        assert_eq!(w("0101").rotation_sign(1), -1);
        // Tr(a+ a+ f+ f+) = +Tr(f+ f+ a+ a+)
        assert_eq!(w("0011").rotation_sign(2), 1);
        // A full turn is always even.
        for word in ["1111", "0101", "110110", "10101010"] {
            let word = w(word);
            assert_eq!(word.rotation_sign(word.len() as isize), 1);
        }
    }

    #[test]
    fn rotation_sign_matches_permutation_parity() {
        for n in 1..=10usize {
            for bits in 0..(1u64 << n) {
                let word = BinaryWord::new(n, bits).unwrap();
                for s in 0..=(2 * n) as isize {
                    assert_eq!(
                        word.rotation_sign(s),
                        sign_oracle(&word, s),
                        "word {word} shift {s}"
                    );
                }
            }
        }
    }

    #[test]
    fn rotation_sign_cocycle() {
        // sign(w, s + t) = sign(w, s) * sign(rotate(w, s), t)
        for n in 1..=8usize {
            for bits in 0..(1u64 << n) {
                let word = BinaryWord::new(n, bits).unwrap();
                for s in 0..n as isize {
                    for t in 0..n as isize {
                        assert_eq!(
                            word.rotation_sign(s + t),
                            word.rotation_sign(s) * word.rotate(s).rotation_sign(t)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_form_examples() {
        assert_eq!(w("0110").canonical_form(), w("0011"));
        assert_eq!(w("1000").canonical_form(), w("0001"));
        assert_eq!(w("010001").canonical_form(), w("100010").canonical_form());
        assert_eq!(BinaryWord::empty().canonical_form(), BinaryWord::empty());
    }

    #[test]
    fn canonical_form_matches_oracle() {
        for n in 1..=12usize {
            for bits in 0..(1u64 << n) {
                let word = BinaryWord::new(n, bits).unwrap();
                assert_eq!(
                    word.canonical_form(),
                    canonical_oracle(&word),
                    "word {word}"
                );
            }
        }
    }

    #[test]
    fn canonical_form_rotation_invariant() {
        for n in 1..=9usize {
            for bits in 0..(1u64 << n) {
                let word = BinaryWord::new(n, bits).unwrap();
                let canon = word.canonical_form();
                for s in 0..n as isize {
                    assert_eq!(word.rotate(s).canonical_form(), canon);
                }
            }
        }
    }

    #[test]
    fn minimal_period_examples() {
        assert_eq!(w("0101").minimal_period().unwrap(), 2);
        // (011011) has Z_2 symmetry: k0 = 2, p = 3.
        assert_eq!(w("011011").minimal_period().unwrap(), 3);
        assert_eq!(w("0111").minimal_period().unwrap(), 4);
        assert!(BinaryWord::empty().minimal_period().is_err());
    }

    #[test]
    fn minimal_period_is_smallest_fixing_shift() {
        for n in 1..=10usize {
            for bits in 0..(1u64 << n) {
                let word = BinaryWord::new(n, bits).unwrap();
                let naive = (1..=n).find(|&p| word.rotate(p as isize) == word).unwrap();
                assert_eq!(word.minimal_period().unwrap(), naive);
                assert_eq!(n % naive, 0);
            }
        }
    }

    #[test]
    fn classify_examples() {
        let c = w("0101").classify().unwrap();
        assert_eq!(c.status, Status::Forbidden);
        assert_eq!(c.symmetry_order, 2);
        assert_eq!(c.fermionic_beads() / c.symmetry_order, 1);

        assert_eq!(w("01010101").classify().unwrap().status, Status::Forbidden);
        assert_eq!(w("011011").classify().unwrap().status, Status::Allowed);

        // The faa cell repeated four times dies under a 3-bead rotation.
        let c = w("100100100100").classify().unwrap();
        assert_eq!(c.status, Status::Forbidden);
        assert_eq!(c.minimal_period, 3);

        let c = w("1111").classify().unwrap();
        assert_eq!(c.status, Status::Forbidden);
        assert_eq!(c.symmetry_order, 4);
        assert_eq!(w("1111").rotation_sign(1), -1);

        assert!(BinaryWord::empty().classify().is_err());
    }

    #[test]
    fn classify_aliases_and_display() {
        assert_eq!(w("faa"), w("100"));
        assert_eq!(w("affaff"), w("011011"));
        assert_eq!(w("0101").to_string(), "0101");
        assert!("01x".parse::<BinaryWord>().is_err());
        assert_eq!(w(""), BinaryWord::empty());
    }

    #[test]
    fn fermionic_words_always_allowed() {
        for n in 1..=12usize {
            for bits in 0..(1u64 << n) {
                let word = BinaryWord::new(n, bits).unwrap();
                if word.fermionic_beads() % 2 == 1 {
                    assert_eq!(word.classify().unwrap().status, Status::Allowed);
                    assert_eq!(word.classify().unwrap().statistics, Statistics::Fermionic);
                }
            }
        }
    }

    #[test]
    fn dual_tests_agree_exhaustively() {
        for n in 1..=12usize {
            for bits in 0..(1u64 << n) {
                let word = BinaryWord::new(n, bits).unwrap();
                assert_eq!(
                    word.forbidden_by_symmetry().unwrap(),
                    word.forbidden_by_sign().unwrap(),
                    "word {word}"
                );
            }
        }
    }

    #[test]
    fn word_construction_limits() {
        assert!(BinaryWord::new(65, 0).is_err());
        assert!(BinaryWord::new(3, 0b1000).is_err());
        assert!(BinaryWord::from_beads(&[0, 2]).is_err());
        assert!(BinaryWord::new(64, u64::MAX).is_ok());
    }

    #[test]
    fn classification_at_full_packed_width() {
        // (01)^32: symmetry order 32, F / k0 = 1 odd, forbidden.
        let alternating = w(&"01".repeat(32));
        let class = alternating.classify().unwrap();
        assert_eq!(class.minimal_period, 2);
        assert_eq!(class.symmetry_order, 32);
        assert_eq!(class.status, Status::Forbidden);

        // (0011)^16: F / k0 = 2 even, allowed.
        let paired = w(&"0011".repeat(16));
        let class = paired.classify().unwrap();
        assert_eq!(class.minimal_period, 4);
        assert_eq!(class.status, Status::Allowed);

        // All ones: one big orbit of signs, forbidden (F = 64, k0 = 64).
        let ones = BinaryWord::new(64, u64::MAX).unwrap();
        assert_eq!(ones.classify().unwrap().status, Status::Forbidden);
        assert_eq!(ones.rotation_sign(1), -1);

        // Canonical form still minimizes over all 64 rotations.
        let shifted = paired.rotate(23);
        assert_eq!(shifted.canonical_form(), paired);
    }
}
