//! Exhaustive verification, reports and the command-line front end for
//! [`blore_core`].

pub mod cli;
pub mod error;
pub mod fixtures;
pub mod laws;
pub mod report;
pub mod shard;
pub mod verifier;

pub use error::{Error, Result};
pub use fixtures::{fixture_suite, FixtureReport};
pub use laws::{check_identity_laws, LawConfig, LawReport};
pub use verifier::{count_all_rich_sequence, sweep, SweepBounds, SweepReport, SweepSpec};
