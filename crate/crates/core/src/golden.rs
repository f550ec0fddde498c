//! Bundled golden count tables and a diff facility.
//!
//! `data/golden_allowed.csv` holds the published reference table of
//! `allowed(B, F)` for `B + F <= 26` (produced there by a sieve) and
//! `data/golden_forbidden.csv` the reference table of `forbidden(B, F)` for
//! even `B <= 40`, even `F <= 36`. The closed forms are authoritative: any
//! divergence from a golden entry is reported as a [`Mismatch`] rather than
//! silently accepted, and a discrepancy that has been traced to a
//! typographical error in the printed source belongs in
//! `data/golden_allowlist.csv` with a justification.

use num_bigint::BigInt;

use crate::counting::{cell_value, TableKind};
use crate::error::{Error, Result};

const GOLDEN_ALLOWED: &str = include_str!("../data/golden_allowed.csv");
const GOLDEN_FORBIDDEN: &str = include_str!("../data/golden_forbidden.csv");
const GOLDEN_ALLOWLIST: &str = include_str!("../data/golden_allowlist.csv");

/// One golden table entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenCell {
    pub b: usize,
    pub f: usize,
    pub printed: BigInt,
}

/// A known, justified discrepancy between a golden entry and the closed
/// forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AllowlistEntry {
    pub kind: TableKind,
    pub b: usize,
    pub f: usize,
    pub printed: BigInt,
    pub computed: BigInt,
    pub note: String,
}

/// A golden entry that disagrees with the closed forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub b: usize,
    pub f: usize,
    pub printed: BigInt,
    pub computed: BigInt,
    /// True when the discrepancy is covered by the allowlist.
    pub allowlisted: bool,
}

fn data_lines(raw: &str) -> impl Iterator<Item = &str> {
    raw.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .skip(1) // header
}

fn parse_cells(raw: &str) -> Result<Vec<GoldenCell>> {
    data_lines(raw)
        .map(|line| {
            let mut fields = line.split(',');
            let err = || Error::Parse(format!("bad golden table line: {line:?}"));
            let b = fields.next().ok_or_else(err)?.parse().map_err(|_| err())?;
            let f = fields.next().ok_or_else(err)?.parse().map_err(|_| err())?;
            let printed = fields.next().ok_or_else(err)?.parse().map_err(|_| err())?;
            if fields.next().is_some() {
                return Err(err());
            }
            Ok(GoldenCell { b, f, printed })
        })
        .collect()
}

/// The golden `allowed(B, F)` table, every printed cell with `B + F <= 26`.
pub fn allowed_cells() -> Vec<GoldenCell> {
    parse_cells(GOLDEN_ALLOWED).expect("bundled golden table is well-formed")
}

/// The golden `forbidden(B, F)` table, even `B <= 40` and even `F <= 36`.
pub fn forbidden_cells() -> Vec<GoldenCell> {
    parse_cells(GOLDEN_FORBIDDEN).expect("bundled golden table is well-formed")
}

/// The allowlist of justified golden-table discrepancies (normally empty).
pub fn allowlist() -> Vec<AllowlistEntry> {
    data_lines(GOLDEN_ALLOWLIST)
        .map(|line| {
            let fields: Vec<&str> = line.splitn(6, ',').collect();
            assert!(fields.len() == 6, "bad allowlist line: {line:?}");
            let kind = match fields[0] {
                "allowed" => TableKind::Allowed,
                "forbidden" => TableKind::Forbidden,
                other => panic!("bad allowlist table name: {other:?}"),
            };
            AllowlistEntry {
                kind,
                b: fields[1].parse().expect("allowlist B"),
                f: fields[2].parse().expect("allowlist F"),
                printed: fields[3].parse().expect("allowlist printed value"),
                computed: fields[4].parse().expect("allowlist computed value"),
                note: fields[5].to_string(),
            }
        })
        .collect()
}

/// Diffs one golden table against the closed forms. Returns every
/// mismatching cell; an empty result means exact reproduction.
pub fn diff(kind: TableKind) -> Vec<Mismatch> {
    let cells = match kind {
        TableKind::Allowed => allowed_cells(),
        TableKind::Forbidden => forbidden_cells(),
        TableKind::Total => panic!("no golden table of totals is bundled"),
    };
    let allowlist = allowlist();
    cells
        .into_iter()
        .filter_map(|cell| {
            let computed = cell_value(kind, cell.b, cell.f);
            if computed == cell.printed {
                return None;
            }
            let allowlisted = allowlist.iter().any(|e| {
                e.kind == kind
                    && e.b == cell.b
                    && e.f == cell.f
                    && e.printed == cell.printed
                    && e.computed == computed
            });
            Some(Mismatch {
                b: cell.b,
                f: cell.f,
                printed: cell.printed,
                computed,
                allowlisted,
            })
        })
        .collect()
}
