//! Randomized property tests over the full packed word range and the
//! counting formulas at sampled sizes.

use proptest::prelude::*;

use pauli_necklaces::counting::{allowed, allowed_row, forbidden_row, polya, polya_row};
use pauli_necklaces::exactmath::binomial;
use pauli_necklaces::necklace::{BinaryWord, Statistics, Status};
use pauli_necklaces::sieve::scan_words;

prop_compose! {
    fn word(max_len: usize)(len in 1..=max_len)(
        len in Just(len),
        bits in 0..=(if len == 64 { u64::MAX } else { (1u64 << len) - 1 }),
    ) -> BinaryWord {
        BinaryWord::new(len, bits).unwrap()
    }
}

proptest! {
    #[test]
    fn canonical_form_is_rotation_invariant(w in word(64), s in -200isize..200) {
        prop_assert_eq!(w.rotate(s).canonical_form(), w.canonical_form());
    }

    #[test]
    fn canonical_form_is_minimal(w in word(64)) {
        let canon = w.canonical_form();
        for s in 0..w.len() as isize {
            prop_assert!(canon <= w.rotate(s));
        }
    }

    #[test]
    fn rotation_sign_cocycle(w in word(64), s in 0isize..128, t in 0isize..128) {
        prop_assert_eq!(
            w.rotation_sign(s + t),
            w.rotation_sign(s) * w.rotate(s).rotation_sign(t)
        );
    }

    #[test]
    fn fermionic_words_are_allowed(w in word(24)) {
        let class = w.classify().unwrap();
        if class.statistics == Statistics::Fermionic {
            prop_assert_eq!(class.status, Status::Allowed);
        }
        // And both routes always agree, word by word.
        prop_assert_eq!(
            w.forbidden_by_symmetry().unwrap(),
            w.forbidden_by_sign().unwrap()
        );
    }

    #[test]
    fn binomial_symmetry_sampled(a in 0usize..=2000, k in 0.0f64..=1.0) {
        let b = ((a as f64) * k).round() as usize;
        prop_assert_eq!(binomial(a, b as isize), binomial(a, (a - b) as isize));
    }

    #[test]
    fn rows_match_scalar_formulas(n in 1usize..=80) {
        let pr = polya_row(n);
        let ar = allowed_row(n);
        let fr = forbidden_row(n);
        for f in 0..=n {
            prop_assert_eq!(&pr[f], &polya(n - f, f));
            prop_assert_eq!(&ar[f], &allowed(n - f, f));
            prop_assert_eq!(&(&ar[f] + &fr[f]), &pr[f]);
        }
    }

    #[test]
    fn scan_partition_independence(n in 2usize..=12, cut_seed in any::<u64>()) {
        let space = 1u64 << n;
        let cut = cut_seed % (space + 1);
        let mut merged: Vec<u64> = scan_words(n, 0..cut).unwrap()
            .chain(scan_words(n, cut..space).unwrap())
            .map(|c| c.canonical.bits())
            .collect();
        merged.sort_unstable();
        let mut full: Vec<u64> = scan_words(n, 0..space).unwrap()
            .map(|c| c.canonical.bits())
            .collect();
        full.sort_unstable();
        prop_assert_eq!(merged, full);
    }
}
