//! Closed-form counting of binary necklaces and of their split into
//! Pauli-allowed and Pauli-forbidden classes.
//!
//! - [`total_necklaces`]: MacMahon's formula `N(n) = (1/n) sum_{d|n} phi(d) 2^(n/d)`.
//! - [`polya`]: Polya's fixed-content count
//!   `N(B, F) = (1/(B+F)) sum_{d | gcd(B,F)} phi(d) C(B/d + F/d, F/d)`.
//! - [`fermionic_count`]: necklaces with odd `F` (A000016),
//!   `(1/2n) sum_{d|n, d odd} phi(d) 2^(n/d)`.
//! - [`allowed_total`] / [`forbidden_total`]: the same divisor sum restricted
//!   to odd / even `d`; restricting MacMahon's divisors by parity is exactly
//!   the Pauli split.
//! - [`forbidden`]: `N(B/2^r, F/2^r)` where `r` is the unique exponent with
//!   `F/2^r` odd and `2^r | B` ([`pauli_exponent`]), zero when no such `r`
//!   exists.
//! - [`allowed`]: `N(B, F) - forbidden(B, F)`.
//! - [`consistency_check`]: equality of the per-cell forbidden sum over a
//!   full row, the even-divisor total, and the telescoped sum
//!   `sum_{m=1..r} fermionic_count(n / 2^m)` for `n = 2^r q`.
//!
//! The `*_row` builders produce a whole `B + F = n` row and the `*_diagonal`
//! builders a whole `B + 2F = n` diagonal with incrementally updated
//! binomials, which keeps full-table emission and the index sweeps linear in
//! the number of cells instead of quadratic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{divisor_list, exact_div, phi, pow2, two_adic_valuation};
use crate::sieve::SieveReport;

/// MacMahon's count of all binary necklaces with `n` beads; `n = 0` is the
/// vacuum, a single (allowed, bosonic) empty necklace.
pub fn total_necklaces(n: usize) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let sum: BigInt = divisor_list(n)
        .into_iter()
        .map(|d| BigInt::from(phi(d)) * pow2(n / d))
        .sum();
    exact_div(sum, n)
}

/// Polya's count of necklaces with `b` bosonic and `f` fermionic beads.
/// `(0, 0)` returns 1 by the vacuum convention; the divisor sum runs over
/// the common divisors of `b` and `f` with `gcd(0, m) = m`, which makes the
/// `b = 0` and `f = 0` edges come out as 1.
pub fn polya(b: usize, f: usize) -> BigInt {
    if b == 0 && f == 0 {
        return BigInt::one();
    }
    let n = b + f;
    let sum: BigInt = crate::exactmath::common_divisors(b, f)
        .expect("not both zero")
        .into_iter()
        .map(|d| BigInt::from(phi(d)) * crate::exactmath::binomial(n / d, (f / d) as isize))
        .sum();
    exact_div(sum, n)
}

fn parity_restricted_total(n: usize, want_even: bool) -> BigInt {
    divisor_list(n)
        .into_iter()
        .filter(|d| (d % 2 == 0) == want_even)
        .map(|d| BigInt::from(phi(d)) * pow2(n / d))
        .sum()
}

/// Count of fermionic necklaces (odd `F`) with `n` beads, equal to the
/// number of distinct feedback shift register cycles of length `n`
/// (OEIS A000016): `(1/2n) sum_{d|n, d odd} phi(d) 2^(n/d)`.
pub fn fermionic_count(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("fermionic count requires n >= 1".into()));
    }
    Ok(exact_div(parity_restricted_total(n, false), 2 * n))
}

/// Total number of Pauli-allowed necklaces with `n` beads: MacMahon's sum
/// restricted to odd divisors, which is twice [`fermionic_count`].
pub fn allowed_total(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("allowed total requires n >= 1".into()));
    }
    Ok(exact_div(parity_restricted_total(n, false), n))
}

/// Total number of Pauli-forbidden necklaces with `n` beads: MacMahon's sum
/// restricted to even divisors. Zero for odd `n`, which has none.
pub fn forbidden_total(n: usize) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::Domain("forbidden total requires n >= 1".into()));
    }
    Ok(exact_div(parity_restricted_total(n, true), n))
}

/// The unique `r >= 1` with `F / 2^r` odd and `B / 2^r` an integer, if it
/// exists. Absent whenever `F` or `B` is odd, or `F = 0`. Rejects `(0, 0)`.
pub fn pauli_exponent(b: usize, f: usize) -> Result<Option<u32>> {
    if b == 0 && f == 0 {
        return Err(Error::Domain(
            "pauli exponent is undefined at (0, 0)".into(),
        ));
    }
    if f == 0 {
        return Ok(None);
    }
    let r = two_adic_valuation(f);
    if r == 0 {
        return Ok(None); // F odd
    }
    if b.is_multiple_of(1usize << r) {
        Ok(Some(r))
    } else {
        Ok(None)
    }
}

/// Number of Pauli-forbidden necklaces with `b` bosonic and `f` fermionic
/// beads: `N(b / 2^r, f / 2^r)` when the [`pauli_exponent`] `r` exists
/// (each forbidden necklace is an elementary cell of that content repeated
/// `2^r` times), and 0 otherwise. Rejects `(0, 0)`.
pub fn forbidden(b: usize, f: usize) -> Result<BigInt> {
    Ok(match pauli_exponent(b, f)? {
        Some(r) => polya(b >> r, f >> r),
        None => BigInt::zero(),
    })
}

/// Number of Pauli-allowed necklaces with `b` bosonic and `f` fermionic
/// beads: `N(b, f) - forbidden(b, f)`. `(0, 0)` is the vacuum, allowed by
/// convention. When `b` or `f` is odd there is nothing to subtract and the
/// count coincides with Polya's.
pub fn allowed(b: usize, f: usize) -> BigInt {
    if b == 0 && f == 0 {
        return BigInt::one();
    }
    polya(b, f) - forbidden(b, f).expect("not both zero")
}

/// Result of [`consistency_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsistencyCheck {
    pub n: usize,
    /// `sum_F forbidden(n - F, F)` over the whole row.
    pub cell_sum: BigInt,
    /// `forbidden_total(n)`, the even-divisor closed form.
    pub closed_form: BigInt,
    /// `sum_{m=1..r} fermionic_count(n / 2^m)` for `n = 2^r q`, `q` odd.
    pub telescoped: BigInt,
    pub holds: bool,
}

/// Checks that the row sum of per-cell forbidden counts reproduces the
/// even-divisor total, and that both equal the telescoped sum of fermionic
/// counts at repeatedly halved lengths (an empty sum for odd `n`).
pub fn consistency_check(n: usize) -> Result<ConsistencyCheck> {
    if n == 0 {
        return Err(Error::Domain("consistency check requires n >= 1".into()));
    }
    let cell_sum: BigInt = forbidden_row(n).into_iter().sum();
    let closed_form = forbidden_total(n)?;
    let mut telescoped = BigInt::zero();
    let mut m = n;
    while m.is_multiple_of(2) {
        m /= 2;
        telescoped += fermionic_count(m)?;
    }
    let holds = cell_sum == closed_form && closed_form == telescoped;
    Ok(ConsistencyCheck {
        n,
        cell_sum,
        closed_form,
        telescoped,
        holds,
    })
}

/// `polya(n - f, f)` for `f = 0..=n`, via one incrementally updated binomial
/// lane per divisor of `n`. `polya_row(0) == [1]`.
pub fn polya_row(n: usize) -> Vec<BigInt> {
    if n == 0 {
        return vec![BigInt::one()];
    }
    let mut acc = vec![BigInt::zero(); n + 1];
    for d in divisor_list(n) {
        let phi_d = BigInt::from(phi(d));
        let m = n / d;
        // c walks C(m, j) for j = 0..=m; cell F = d * j.
        let mut c = BigInt::one();
        for j in 0..=m {
            acc[d * j] += &phi_d * &c;
            if j < m {
                c *= m - j;
                c = exact_div(c, j + 1);
            }
        }
    }
    acc.into_iter().map(|sum| exact_div(sum, n)).collect()
}

/// `forbidden(n - f, f)` for `f = 0..=n` (with the convention that the
/// `(0, 0)` cell counts 0). Nonzero entries sit at `F = 2^r j`, `j` odd,
/// `2^r | n`, where they equal the reduced Polya row at half, quarter, ...
/// length.
pub fn forbidden_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); n + 1];
    if n == 0 {
        return row;
    }
    let mut r = 1u32;
    while n.is_multiple_of(1usize << r) {
        let m = n >> r;
        let sub = polya_row(m);
        for j in (1..=m).step_by(2) {
            row[j << r] = sub[j].clone();
        }
        r += 1;
    }
    row
}

/// `allowed(n - f, f)` for `f = 0..=n`. `allowed_row(0) == [1]`.
pub fn allowed_row(n: usize) -> Vec<BigInt> {
    if n == 0 {
        return vec![BigInt::one()];
    }
    polya_row(n)
        .into_iter()
        .zip(forbidden_row(n))
        .map(|(total, forb)| total - forb)
        .collect()
}

/// `polya(n - 2f, f)` for `f = 0..=n/2` (the `B + 2F = n` diagonal), via one
/// incrementally updated binomial lane per divisor of `n`.
/// `polya_diagonal(0) == [1]`.
pub fn polya_diagonal(n: usize) -> Vec<BigInt> {
    if n == 0 {
        return vec![BigInt::one()];
    }
    let half = n / 2;
    let mut acc = vec![BigInt::zero(); half + 1];
    for d in divisor_list(n) {
        let phi_d = BigInt::from(phi(d));
        let m = n / d;
        // c walks C(m - j, j) for the reduced cells (m - 2j, j); the full
        // cell is F = d * j with B + F = n - d * j beads in total.
        let mut c = BigInt::one();
        let mut j = 0;
        loop {
            let f = d * j;
            if f > half {
                break;
            }
            acc[f] += &phi_d * &c;
            if d * (j + 1) > half {
                break;
            }
            // C(a - 1, b + 1) = C(a, b) (a - b)(a - b - 1) / (a (b + 1))
            let a = m - j;
            let b = j;
            c *= (a - b) * (a - b - 1);
            c = exact_div(c, a * (b + 1));
            j += 1;
        }
    }
    acc.into_iter()
        .enumerate()
        .map(|(f, sum)| exact_div(sum, n - f))
        .collect()
}

/// `forbidden(n - 2f, f)` for `f = 0..=n/2`. The reduced cells of a
/// forbidden entry stay on the diagonal of the halved length, so the
/// nonzero entries are read off the reduced diagonals directly.
pub fn forbidden_diagonal(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); n / 2 + 1];
    if n == 0 {
        return row;
    }
    let mut r = 1u32;
    while n.is_multiple_of(1usize << r) {
        let m = n >> r;
        let sub = polya_diagonal(m);
        for j in (1..=m / 2).step_by(2) {
            row[j << r] = sub[j].clone();
        }
        r += 1;
    }
    row
}

/// `allowed(n - 2f, f)` for `f = 0..=n/2`. `allowed_diagonal(0) == [1]`.
pub fn allowed_diagonal(n: usize) -> Vec<BigInt> {
    if n == 0 {
        return vec![BigInt::one()];
    }
    polya_diagonal(n)
        .into_iter()
        .zip(forbidden_diagonal(n))
        .map(|(total, forb)| total - forb)
        .collect()
}

/// Which count a [`CountTable`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableKind {
    Total,
    Allowed,
    Forbidden,
}

impl fmt::Display for TableKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableKind::Total => write!(f, "total"),
            TableKind::Allowed => write!(f, "allowed"),
            TableKind::Forbidden => write!(f, "forbidden"),
        }
    }
}

/// How the entries of a [`CountTable`] were produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    ClosedForm,
    Sieve,
}

/// A map `(B, F) -> count` with a kind and a provenance tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub kind: TableKind,
    pub provenance: Provenance,
    entries: BTreeMap<(usize, usize), BigInt>,
}

/// The closed-form value of one cell, with the vacuum conventions
/// (`total(0,0) = allowed(0,0) = 1`, `forbidden(0,0) = 0`).
pub fn cell_value(kind: TableKind, b: usize, f: usize) -> BigInt {
    match kind {
        TableKind::Total => polya(b, f),
        TableKind::Allowed => allowed(b, f),
        TableKind::Forbidden => {
            if b == 0 && f == 0 {
                BigInt::zero()
            } else {
                forbidden(b, f).expect("not both zero")
            }
        }
    }
}

impl CountTable {
    pub fn new(kind: TableKind, provenance: Provenance) -> Self {
        CountTable {
            kind,
            provenance,
            entries: BTreeMap::new(),
        }
    }

    /// Closed-form table of every cell with `B + F <= max_sum`.
    pub fn triangle(kind: TableKind, max_sum: usize) -> Self {
        let mut table = CountTable::new(kind, Provenance::ClosedForm);
        for n in 0..=max_sum {
            let row = match kind {
                TableKind::Total => polya_row(n),
                TableKind::Allowed => allowed_row(n),
                TableKind::Forbidden => forbidden_row(n),
            };
            for (f, value) in row.into_iter().enumerate() {
                table.insert(n - f, f, value);
            }
        }
        table
    }

    /// Closed-form table of every cell with `B <= max_b`, `F <= max_f`.
    pub fn rectangle(kind: TableKind, max_b: usize, max_f: usize) -> Self {
        let mut table = CountTable::new(kind, Provenance::ClosedForm);
        for b in 0..=max_b {
            for f in 0..=max_f {
                table.insert(b, f, cell_value(kind, b, f));
            }
        }
        table
    }

    /// The `B + F = n` row of a sieve run.
    pub fn from_sieve(report: &SieveReport, kind: TableKind) -> Self {
        let mut table = CountTable::new(kind, Provenance::Sieve);
        for cell in report.cells() {
            let value = match kind {
                TableKind::Total => cell.total.clone(),
                TableKind::Allowed => cell.allowed.clone(),
                TableKind::Forbidden => cell.forbidden.clone(),
            };
            table.insert(cell.b, cell.f, value);
        }
        table
    }

    pub fn insert(&mut self, b: usize, f: usize, value: BigInt) {
        self.entries.insert((b, f), value);
    }

    pub fn get(&self, b: usize, f: usize) -> Option<&BigInt> {
        self.entries.get(&(b, f))
    }

    /// Entries in ascending `(B, F)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(b, f), v)| (b, f, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
