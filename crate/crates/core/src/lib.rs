//! Exact enumeration and counting of binary necklaces under the Pauli
//! exclusion principle.
//!
//! A binary necklace is an equivalence class of cyclic 0/1 strings under
//! rotation. Reading the beads as bosonic (`0`) and fermionic (`1`) creation
//! operators inside a trace, anticommutation kills some necklaces outright:
//! a necklace with `Z_k` rotational symmetry, `k` even and `F/k` odd (`F` =
//! number of fermionic beads) equals minus itself and therefore vanishes.
//! Necklaces are accordingly split into *Pauli-allowed* and
//! *Pauli-forbidden* classes.
//!
//! The crate provides, all in exact integer arithmetic:
//!
//! - [`exactmath`]: totient, divisor and binomial primitives ([`BigInt`]
//!   backed, no floating point anywhere);
//! - [`necklace`]: the word model: rotations, fermionic sign tracking,
//!   canonical forms and the allowed/forbidden classification;
//! - [`sieve`]: a brute-force enumeration oracle (exhaustive scan and
//!   fixed-density generation) independent of every closed formula;
//! - [`counting`]: the closed-form counts: MacMahon and Polya totals, the
//!   odd/even divisor split into allowed/forbidden totals, and the
//!   per-content forbidden count `N(B/2^r, F/2^r)`;
//! - [`lfsr`]: the linear-feedback shift register construction whose cycles
//!   biject with fermionic necklaces;
//! - [`indices`]: Witten-like graded partial sums, the strong-coupling
//!   mod-6 identity, Zagier's generating polynomial and the Catalan
//!   staircase;
//! - [`golden`]: bundled golden count tables and a diff facility used for
//!   regression checks.
//!
//! Every closed-form count is cross-checked against the sieve in the test
//! suite; the two generation methods of the sieve cross-check each other.

pub mod counting;
pub mod error;
pub mod exactmath;
pub mod golden;
pub mod indices;
pub mod lfsr;
pub mod necklace;
pub mod sieve;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
