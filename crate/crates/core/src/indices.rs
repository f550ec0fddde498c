//! Witten-like graded sums over allowed necklaces, the strong-coupling
//! mod-6 identity, Zagier's generating polynomial and the Catalan staircase.
//!
//! At weak coupling, supersymmetry pairs allowed necklaces of adjacent
//! fermion number at fixed `n = B + F`; the graded partial sums
//!
//! ```text
//! W(n; m) = sum_{F=0..m} (-1)^(F-m) allowed(n - F, F)
//! ```
//!
//! count unpaired states below the cut and must therefore be nonnegative,
//! with `W(n; n) = 0` expressing the exact boson/fermion balance.
//!
//! At strong coupling the pairing preserves `B + 2F` instead, and the
//! analogous sums run along diagonals after removing one zero-energy state
//! from each cell with even `F` and `B = F ± 1`:
//!
//! ```text
//! W~(n; m) = sum_{B+2F=n, F<=m/2} (-1)^(F-[m/2])
//!            (allowed(B, F) - [F even and |B - F| = 1])  >=  0
//! ```
//!
//! The full alternating diagonal sum collapses to a mod-6 indicator
//! ([`strsc_check`]), which also follows from Zagier's closed generating
//! polynomial ([`zagier_poly`]) after substituting `y = -x^2`. The removed
//! staircase cells `(F ± 1, F)` hold Catalan-many allowed necklaces
//! ([`staircase`]).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::counting::{allowed, allowed_diagonal, allowed_row};
use crate::error::{Error, Result};
use crate::exactmath::{binomial, divisor_list, exact_div, phi};

fn check_index_args(n: usize, m: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("graded sums require n >= 1".into()));
    }
    if m > n {
        return Err(Error::Domain(format!("m = {m} exceeds n = {n}")));
    }
    Ok(())
}

/// The graded partial sum `W(n; m) = sum_{F=0..m} (-1)^(F-m) allowed(n-F, F)`
/// over the `B + F = n` row. Rejects `m > n`.
pub fn witten(n: usize, m: usize) -> Result<BigInt> {
    check_index_args(n, m)?;
    let mut sum = BigInt::zero();
    for f in 0..=m {
        let term = allowed(n - f, f);
        if (m - f).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// `W(n; m)` for every `m = 0..=n`, via the recurrence
/// `W(n; m) = allowed(n - m, m) - W(n; m - 1)`.
pub fn witten_profile(n: usize) -> Result<Vec<BigInt>> {
    check_index_args(n, 0)?;
    let row = allowed_row(n);
    let mut profile = Vec::with_capacity(n + 1);
    let mut prev = BigInt::zero();
    for value in row {
        let next = value - prev;
        profile.push(next.clone());
        prev = next;
    }
    Ok(profile)
}

/// True when the staircase subtraction hits the diagonal cell `(b, f)`:
/// one zero-energy state per even `F` with `B = F ± 1`.
fn staircase_subtraction(b: usize, f: usize) -> bool {
    f.is_multiple_of(2) && (b + 1 == f || b == f + 1)
}

/// The strong-coupling graded sum along the `B + 2F = n` diagonal:
/// `sum_{F <= m/2} (-1)^(F - [m/2]) (allowed(n-2F, F) - subtraction)`.
/// Rejects `m > n`.
pub fn strong_witten(n: usize, m: usize) -> Result<BigInt> {
    check_index_args(n, m)?;
    let k = m / 2;
    let mut sum = BigInt::zero();
    for f in 0..=k {
        let b = n - 2 * f; // f <= m/2 <= n/2, so b >= 0
        let mut term = allowed(b, f);
        if staircase_subtraction(b, f) {
            term -= 1;
        }
        if (k - f).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// `W~(n; m)` for every `m = 0..=n`; entries with equal `[m/2]` coincide.
pub fn strong_witten_profile(n: usize) -> Result<Vec<BigInt>> {
    check_index_args(n, 0)?;
    let diag = allowed_diagonal(n);
    let mut partial = Vec::with_capacity(diag.len());
    let mut prev = BigInt::zero();
    for (f, value) in diag.into_iter().enumerate() {
        let mut term = value;
        if staircase_subtraction(n - 2 * f, f) {
            term -= 1;
        }
        let next = term - prev;
        partial.push(next.clone());
        prev = next;
    }
    Ok((0..=n).map(|m| partial[m / 2].clone()).collect())
}

/// Result of [`strsc_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrscCheck {
    pub n: usize,
    /// `sum_F (-1)^F allowed(n - 2F, F)`.
    pub lhs: BigInt,
    /// `1` when `n = +-1 (mod 6)`, else `0`.
    pub rhs: BigInt,
    pub holds: bool,
}

/// The strong-coupling identity: the alternating sum of allowed counts
/// along the `B + 2F = n` diagonal equals 1 exactly when `n = +-1 (mod 6)`
/// and 0 otherwise.
pub fn strsc_check(n: usize) -> Result<StrscCheck> {
    if n == 0 {
        return Err(Error::Domain(
            "the diagonal identity requires n >= 1".into(),
        ));
    }
    let mut lhs = BigInt::zero();
    for (f, value) in allowed_diagonal(n).into_iter().enumerate() {
        if f % 2 == 0 {
            lhs += value;
        } else {
            lhs -= value;
        }
    }
    let rhs = if n % 6 == 1 || n % 6 == 5 {
        BigInt::one()
    } else {
        BigInt::zero()
    };
    let holds = lhs == rhs;
    Ok(StrscCheck { n, lhs, rhs, holds })
}

/// A sparse polynomial in two formal variables with exact coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    // (x exponent, y exponent) -> coefficient; zero coefficients absent.
    terms: BTreeMap<(usize, usize), BigInt>,
}

impl BivariatePolynomial {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `coeff * x^xe * y^ye`, dropping the term if it cancels.
    pub fn add_term(&mut self, xe: usize, ye: usize, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((xe, ye)).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(xe, ye));
        }
    }

    /// The coefficient of `x^xe y^ye` (zero if absent).
    pub fn coefficient(&self, xe: usize, ye: usize) -> BigInt {
        self.terms.get(&(xe, ye)).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.terms.iter().map(|(&(xe, ye), c)| (xe, ye, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The common total degree of all terms, if the polynomial is
    /// homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|&(xe, ye)| xe + ye);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Substitutes `y = -x^2`: the term `c x^i y^j` becomes
    /// `(-1)^j c x^(i+2j)`. Returns the univariate coefficient map.
    pub fn substitute_y_neg_x2(&self) -> BTreeMap<usize, BigInt> {
        let mut out: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (xe, ye, coeff) in self.terms() {
            let signed = if ye % 2 == 0 { coeff.clone() } else { -coeff };
            let entry = out.entry(xe + 2 * ye).or_insert_with(BigInt::zero);
            *entry += signed;
            if entry.is_zero() {
                out.remove(&(xe + 2 * ye));
            }
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (xe, ye, coeff)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " {} ", if coeff.is_negative() { "-" } else { "+" })?;
            } else if coeff.is_negative() {
                write!(f, "-")?;
            }
            let mag = coeff.abs();
            let unit_coeff = mag.is_one() && (xe > 0 || ye > 0);
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match xe {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{xe}")?,
            }
            match ye {
                0 => {}
                1 => write!(f, "y")?,
                _ => write!(f, "y^{ye}")?,
            }
        }
        Ok(())
    }
}

/// Zagier's generating polynomial for allowed counts at fixed `n`:
///
/// ```text
/// Phi(x, y; n) = (1/n) sum_{d|n} phi(d) (x^d - (-y)^d)^(n/d)
/// ```
///
/// Homogeneous of degree `n`; the coefficient of `x^(n-F) y^F` equals
/// `allowed(n - F, F)`.
pub fn zagier_poly(n: usize) -> Result<BivariatePolynomial> {
    if n == 0 {
        return Err(Error::Domain(
            "the generating polynomial requires n >= 1".into(),
        ));
    }
    let mut sum: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for d in divisor_list(n) {
        let phi_d = BigInt::from(phi(d));
        let m = n / d;
        // (x^d - (-y)^d)^m expanded by the binomial theorem:
        // the j-th term is C(m, j) (-1)^((d+1)(m-j)) x^(dj) y^(d(m-j)).
        for j in 0..=m {
            let mut coeff = &phi_d * binomial(m, j as isize);
            if (d + 1) * (m - j) % 2 == 1 {
                coeff = -coeff;
            }
            *sum.entry((d * j, d * (m - j))).or_insert_with(BigInt::zero) += coeff;
        }
    }
    let mut poly = BivariatePolynomial::new();
    for ((xe, ye), coeff) in sum {
        poly.add_term(xe, ye, exact_div(coeff, n));
    }
    Ok(poly)
}

/// Result of [`zagier_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZagierCheck {
    pub n: usize,
    /// Every coefficient of the degree-`n` polynomial equals the
    /// corresponding `allowed(n - F, F)`.
    pub coefficients_match: bool,
    /// Substituting `y = -x^2` into the polynomials of degree
    /// `ceil(n/2)..=n` and collecting the `x^n` coefficients reproduces the
    /// alternating diagonal sum of [`strsc_check`].
    pub substitution_matches: bool,
}

impl ZagierCheck {
    pub fn holds(&self) -> bool {
        self.coefficients_match && self.substitution_matches
    }
}

/// Verifies Zagier's polynomial against the allowed counts, two ways.
///
/// The polynomial route expands `(x^d - (-y)^d)^(n/d)` with the binomial
/// theorem and never touches the forbidden-count machinery, so the
/// comparison is a genuine cross-check of the closed forms.
pub fn zagier_check(n: usize) -> Result<ZagierCheck> {
    let poly = zagier_poly(n)?;
    let row = allowed_row(n);
    let coefficients_match = poly.homogeneous_degree() == Some(n)
        && poly.num_terms() <= n + 1
        && (0..=n).all(|f| poly.coefficient(n - f, f) == row[f]);

    // x^n coefficients of Phi(x, -x^2; k) for k = ceil(n/2)..=n pick up the
    // cells with B + 2F = n, one per k.
    let mut collected = BigInt::zero();
    for k in n.div_ceil(2)..=n {
        if let Some(c) = zagier_poly(k)?.substitute_y_neg_x2().get(&n) {
            collected += c;
        }
    }
    let substitution_matches = collected == strsc_check(n)?.lhs;

    Ok(ZagierCheck {
        n,
        coefficients_match,
        substitution_matches,
    })
}

/// The two staircase cells at fermion count `f`:
/// `allowed(f + 1, f)` and, for `f >= 1`, `allowed(f - 1, f)`.
/// They equal the Catalan numbers `C_f` and `C_(f-1)`.
pub fn staircase(f: usize) -> (BigInt, Option<BigInt>) {
    let upper = allowed(f + 1, f);
    let lower = if f >= 1 {
        Some(allowed(f - 1, f))
    } else {
        None
    };
    (upper, lower)
}

/// Which graded sum a report holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexKind {
    /// Row-graded `W(n; m)`.
    Weak,
    /// Diagonal-graded `W~(n; m)`.
    Strong,
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexKind::Weak => write!(f, "weak"),
            IndexKind::Strong => write!(f, "strong"),
        }
    }
}

/// One graded partial sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexEntry {
    pub m: usize,
    pub value: BigInt,
    pub nonnegative: bool,
}

/// All graded partial sums of one kind at fixed `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedIndexReport {
    pub n: usize,
    pub kind: IndexKind,
    pub entries: Vec<IndexEntry>,
}

impl GradedIndexReport {
    pub fn weak(n: usize) -> Result<Self> {
        Ok(Self::from_profile(n, IndexKind::Weak, witten_profile(n)?))
    }

    pub fn strong(n: usize) -> Result<Self> {
        Ok(Self::from_profile(
            n,
            IndexKind::Strong,
            strong_witten_profile(n)?,
        ))
    }

    fn from_profile(n: usize, kind: IndexKind, profile: Vec<BigInt>) -> Self {
        let entries = profile
            .into_iter()
            .enumerate()
            .map(|(m, value)| IndexEntry {
                nonnegative: !value.is_negative(),
                m,
                value,
            })
            .collect();
        GradedIndexReport { n, kind, entries }
    }

    pub fn all_nonnegative(&self) -> bool {
        self.entries.iter().all(|e| e.nonnegative)
    }

    /// The top sum `W(n; n)` (or `W~(n; n)`).
    pub fn final_value(&self) -> &BigInt {
        &self.entries.last().expect("profiles are never empty").value
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::catalan;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn witten_examples() {
        assert_eq!(witten(4, 4).unwrap(), bi(0));
        assert_eq!(witten(4, 1).unwrap(), bi(0));
        assert_eq!(witten(5, 2).unwrap(), bi(2));
        assert!(witten(4, 5).is_err());
        assert!(witten(0, 0).is_err());
    }

    #[test]
    fn witten_profile_matches_direct_sum() {
        for n in 1..=30 {
            let profile = witten_profile(n).unwrap();
            for (m, value) in profile.iter().enumerate() {
                assert_eq!(*value, witten(n, m).unwrap(), "W({n}; {m})");
            }
            assert_eq!(profile[n], bi(0), "W({n}; {n})");
        }
    }

    #[test]
    fn strong_witten_examples() {
        // Worked term by term: the subtraction is inactive on the n = 6
        // diagonal, active at (3, 2) on the n = 7 diagonal.
        assert_eq!(strong_witten(6, 6).unwrap(), bi(0));
        assert_eq!(strong_witten(6, 4).unwrap(), bi(1));
        assert_eq!(strong_witten(7, 7).unwrap(), bi(0));
        assert_eq!(strong_witten(5, 5).unwrap(), bi(0));
        assert!(strong_witten(6, 7).is_err());
    }

    #[test]
    fn strong_witten_profile_matches_direct_sum() {
        for n in 1..=30 {
            let profile = strong_witten_profile(n).unwrap();
            for (m, value) in profile.iter().enumerate() {
                assert_eq!(*value, strong_witten(n, m).unwrap(), "W~({n}; {m})");
            }
        }
    }

    #[test]
    fn subtraction_inactive_for_odd_f() {
        assert!(!staircase_subtraction(2, 3));
        assert!(!staircase_subtraction(4, 3));
        assert!(staircase_subtraction(3, 2));
        assert!(staircase_subtraction(1, 2));
        assert!(!staircase_subtraction(2, 2));
        assert!(!staircase_subtraction(0, 1));
    }

    #[test]
    fn graded_sums_nonnegative_small_sweep() {
        for n in 1..=120 {
            let weak = GradedIndexReport::weak(n).unwrap();
            assert!(weak.all_nonnegative(), "W({n}; m) < 0");
            assert!(weak.final_value().is_zero(), "W({n}; {n}) != 0");
            let strong = GradedIndexReport::strong(n).unwrap();
            assert!(strong.all_nonnegative(), "W~({n}; m) < 0");
        }
    }

    #[test]
    fn strsc_examples() {
        let c5 = strsc_check(5).unwrap();
        assert!(c5.holds);
        assert_eq!(c5.lhs, bi(1));
        let c6 = strsc_check(6).unwrap();
        assert!(c6.holds);
        assert_eq!(c6.lhs, bi(0));
        let c7 = strsc_check(7).unwrap();
        assert!(c7.holds);
        assert_eq!(c7.lhs, bi(1));
        for n in 1..=200 {
            assert!(strsc_check(n).unwrap().holds, "n = {n}");
        }
    }

    #[test]
    fn zagier_poly_small() {
        let p1 = zagier_poly(1).unwrap();
        assert_eq!(p1.to_string(), "y + x");
        assert_eq!(p1.coefficient(1, 0), bi(1));
        assert_eq!(p1.coefficient(0, 1), bi(1));
        assert_eq!(p1.num_terms(), 2);

        let p2 = zagier_poly(2).unwrap();
        assert_eq!(p2.coefficient(2, 0), bi(1));
        assert_eq!(p2.coefficient(1, 1), bi(1));
        assert_eq!(p2.coefficient(0, 2), bi(0));
        assert_eq!(p2.num_terms(), 2);

        let p8 = zagier_poly(8).unwrap();
        assert_eq!(p8.coefficient(4, 4), bi(9));
        assert_eq!(p8.homogeneous_degree(), Some(8));
    }

    #[test]
    fn zagier_check_sweep() {
        for n in 1..=50 {
            let check = zagier_check(n).unwrap();
            assert!(check.coefficients_match, "coefficients at n = {n}");
            assert!(check.substitution_matches, "substitution at n = {n}");
        }
    }

    #[test]
    fn staircase_examples() {
        assert_eq!(staircase(4), (bi(14), Some(bi(5))));
        assert_eq!(staircase(0), (bi(1), None));
        assert_eq!(staircase(6), (bi(132), Some(bi(42))));
        for f in 0..=25 {
            let (upper, lower) = staircase(f);
            assert_eq!(upper, catalan(f), "allowed({}, {f})", f + 1);
            if f >= 1 {
                assert_eq!(lower.unwrap(), catalan(f - 1), "allowed({}, {f})", f - 1);
            }
        }
    }

    #[test]
    fn polynomial_display_and_substitution() {
        let mut p = BivariatePolynomial::new();
        p.add_term(2, 0, bi(3));
        p.add_term(0, 1, bi(-1));
        assert_eq!(p.to_string(), "-y + 3x^2");
        // y = -x^2 turns -y into +x^2, merging with 3x^2.
        let sub = p.substitute_y_neg_x2();
        assert_eq!(sub.get(&2), Some(&bi(4)));
        p.add_term(2, 0, bi(-3));
        assert_eq!(p.num_terms(), 1);
    }
}
