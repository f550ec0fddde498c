//! Support library for the `necklaces` binary: table serialization and the
//! verification sweep runner.

pub mod formats;
pub mod verify;
