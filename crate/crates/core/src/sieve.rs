//! Brute-force enumeration oracle: generates every rotation class directly
//! and tallies the allowed/forbidden split, independently of all closed-form
//! counting formulas.
//!
//! Two generation methods are kept permanently so the oracle cross-checks
//! itself:
//!
//! - [`Method::Scan`] iterates all `2^n` words and keeps those equal to
//!   their canonical rotation (supported for `n <= 24`);
//! - [`Method::FixedDensity`] generates the necklaces of each `(B, F)` cell
//!   directly with the Fredricksen-Kessler-Maiorana recursion restricted to
//!   fixed content, in amortized O(1) per class (supported for `n <= 34`),
//!   streaming cell by cell so no full-length materialization is needed.
//!
//! The scan word space may be partitioned by leading-bit prefix via
//! [`scan_words`]; per-partition tallies merge associatively and the result
//! is independent of the partitioning.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::necklace::{BinaryWord, NecklaceClass, Status};

/// Maximum word length for the exhaustive scan method.
pub const MAX_SCAN_LEN: usize = 24;
/// Maximum word length for the fixed-density method.
pub const MAX_FIXED_DENSITY_LEN: usize = 34;

/// Generation method for the sieve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Exhaustive scan of all `2^n` words.
    Scan,
    /// Direct generation of fixed-content necklaces, cell by cell.
    FixedDensity,
}

impl Method {
    pub fn max_len(self) -> usize {
        match self {
            Method::Scan => MAX_SCAN_LEN,
            Method::FixedDensity => MAX_FIXED_DENSITY_LEN,
        }
    }

    fn check_len(self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::Domain("enumeration requires n >= 1".into()));
        }
        if n > self.max_len() {
            return Err(Error::Range(format!(
                "n = {n} exceeds the {self} limit of {}",
                self.max_len()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Scan => write!(f, "scan"),
            Method::FixedDensity => write!(f, "fixed-density"),
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "scan" => Ok(Method::Scan),
            "fixed-density" | "fixed_density" | "fkm" => Ok(Method::FixedDensity),
            other => Err(Error::Parse(format!("unknown sieve method {other:?}"))),
        }
    }
}

/// Yields each rotation class of length `n` exactly once, via its canonical
/// representative. The fixed-density method streams the cells in order of
/// ascending fermion count `F`.
pub fn enumerate_necklaces(n: usize, method: Method) -> Result<NecklaceIter> {
    method.check_len(n)?;
    Ok(match method {
        Method::Scan => NecklaceIter::Scan(ScanIter::new(n, 0..(1u64 << n))),
        Method::FixedDensity => NecklaceIter::Fixed(MultiCellIter::new(n)),
    })
}

/// Yields the rotation classes of a single `(B, F)` cell via fixed-density
/// generation. Requires `1 <= B + F <= 34`.
pub fn enumerate_cell(b: usize, f: usize) -> Result<FixedDensityIter> {
    Method::FixedDensity.check_len(b + f)?;
    Ok(FixedDensityIter::new(b, f))
}

/// Scans a sub-range of the raw word space `0..2^n` and yields the canonical
/// classes found there.
///
/// Partitioning the full space into disjoint ranges (for example by
/// leading-bit prefix) and merging the per-range tallies reproduces the
/// full-scan result; classes are attributed to the partition holding their
/// canonical representative.
pub fn scan_words(n: usize, range: Range<u64>) -> Result<ScanIter> {
    Method::Scan.check_len(n)?;
    let limit = 1u64 << n;
    if range.end > limit {
        return Err(Error::Range(format!(
            "scan range end {} exceeds 2^{n}",
            range.end
        )));
    }
    Ok(ScanIter::new(n, range))
}

/// Stream of necklace classes from [`enumerate_necklaces`].
pub enum NecklaceIter {
    Scan(ScanIter),
    Fixed(MultiCellIter),
}

impl Iterator for NecklaceIter {
    type Item = NecklaceClass;

    fn next(&mut self) -> Option<NecklaceClass> {
        match self {
            NecklaceIter::Scan(it) => it.next(),
            NecklaceIter::Fixed(it) => it.next(),
        }
    }
}

/// Exhaustive-scan iterator over a range of raw word values.
pub struct ScanIter {
    n: usize,
    range: Range<u64>,
}

impl ScanIter {
    fn new(n: usize, range: Range<u64>) -> Self {
        ScanIter { n, range }
    }
}

impl Iterator for ScanIter {
    type Item = NecklaceClass;

    fn next(&mut self) -> Option<NecklaceClass> {
        for bits in &mut self.range {
            let word = BinaryWord::new(self.n, bits).expect("scan bits fit the word length");
            if word.is_canonical() {
                return Some(word.classify().expect("scan words are non-empty"));
            }
        }
        None
    }
}

/// Fixed-density generation for one `(B, F)` cell.
///
/// Iterative form of the FKM necklace recursion restricted to fixed content:
/// positions are filled left to right, each bead is at least the bead one
/// period back, and a completed word is emitted iff its current period
/// divides `n`. Outputs arrive in lexicographic order and are already
/// canonical.
pub struct FixedDensityIter {
    n: usize,
    beads: Vec<u8>,        // 1-indexed; beads[0] = 0 is a sentinel
    remaining: [usize; 2], // unplaced zeros / ones
    stack: Vec<Frame>,     // frame i fills position i + 1
}

struct Frame {
    /// Period of the prefix before this position's bead is chosen.
    period: usize,
    /// Bead currently placed at this position, if any.
    placed: Option<u8>,
    /// Next candidate bead value to try.
    next: u8,
}

impl FixedDensityIter {
    fn new(b: usize, f: usize) -> Self {
        let n = b + f;
        let mut stack = Vec::with_capacity(n);
        stack.push(Frame {
            period: 1,
            placed: None,
            next: 0,
        });
        FixedDensityIter {
            n,
            beads: vec![0; n + 1],
            remaining: [b, f],
            stack,
        }
    }
}

impl Iterator for FixedDensityIter {
    type Item = NecklaceClass;

    fn next(&mut self) -> Option<NecklaceClass> {
        loop {
            let t = self.stack.len();
            let top = self.stack.last_mut()?;
            if let Some(v) = top.placed.take() {
                self.remaining[v as usize] += 1;
            }
            let low = self.beads[t - top.period];
            // `next` starts at `low` when the frame is pushed and only grows.
            let mut v = top.next;
            while v <= 1 && self.remaining[v as usize] == 0 {
                v += 1;
            }
            if v > 1 {
                self.stack.pop();
                continue;
            }
            top.next = v + 1;
            top.placed = Some(v);
            self.remaining[v as usize] -= 1;
            self.beads[t] = v;
            let period = if v == low { top.period } else { t };
            if t == self.n {
                if self.n.is_multiple_of(period) {
                    let word = BinaryWord::from_beads(&self.beads[1..])
                        .expect("generated beads are binary and fit");
                    debug_assert!(word.is_canonical());
                    return Some(word.classify().expect("generated words are non-empty"));
                }
            } else {
                let next_low = self.beads[t + 1 - period];
                self.stack.push(Frame {
                    period,
                    placed: None,
                    next: next_low,
                });
            }
        }
    }
}

/// Chains the fixed-density cells of a full length, `F = 0..=n`.
pub struct MultiCellIter {
    n: usize,
    f: usize,
    current: FixedDensityIter,
}

impl MultiCellIter {
    fn new(n: usize) -> Self {
        MultiCellIter {
            n,
            f: 0,
            current: FixedDensityIter::new(n, 0),
        }
    }
}

impl Iterator for MultiCellIter {
    type Item = NecklaceClass;

    fn next(&mut self) -> Option<NecklaceClass> {
        loop {
            if let Some(class) = self.current.next() {
                return Some(class);
            }
            if self.f == self.n {
                return None;
            }
            self.f += 1;
            self.current = FixedDensityIter::new(self.n - self.f, self.f);
        }
    }
}

/// Per-cell tallies of one sieve run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellTally {
    pub b: usize,
    pub f: usize,
    pub total: BigInt,
    pub allowed: BigInt,
    pub forbidden: BigInt,
}

/// Result of a sieve run over all classes of length `n`: per-(B, F) totals
/// and their allowed/forbidden split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SieveReport {
    pub n: usize,
    pub method: Method,
    cells: Vec<CellTally>, // indexed by f, b = n - f
}

impl SieveReport {
    /// The `(B, F)` cells in ascending `F` order.
    pub fn cells(&self) -> &[CellTally] {
        &self.cells
    }

    /// The tally of one cell, if `b + f == n`.
    pub fn cell(&self, b: usize, f: usize) -> Option<&CellTally> {
        if b + f == self.n {
            self.cells.get(f)
        } else {
            None
        }
    }

    pub fn grand_total(&self) -> BigInt {
        self.cells.iter().map(|c| &c.total).sum()
    }

    pub fn allowed_total(&self) -> BigInt {
        self.cells.iter().map(|c| &c.allowed).sum()
    }

    pub fn forbidden_total(&self) -> BigInt {
        self.cells.iter().map(|c| &c.forbidden).sum()
    }
}

/// Runs the sieve: enumerates every class of length `n` with the requested
/// method and tallies classification results per `(B, F)` cell.
pub fn sieve_counts(n: usize, method: Method) -> Result<SieveReport> {
    let mut totals = vec![0u64; n + 1];
    let mut allowed = vec![0u64; n + 1];
    for class in enumerate_necklaces(n, method)? {
        let f = class.fermionic_beads();
        totals[f] += 1;
        if class.status == Status::Allowed {
            allowed[f] += 1;
        }
    }
    Ok(SieveReport {
        n,
        method,
        cells: (0..=n)
            .map(|f| CellTally {
                b: n - f,
                f,
                total: BigInt::from(totals[f]),
                allowed: BigInt::from(allowed[f]),
                forbidden: BigInt::from(totals[f] - allowed[f]),
            })
            .collect(),
    })
}
