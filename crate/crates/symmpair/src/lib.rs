//! Command-line front end for `symmpair-core`: argument grammar, JSON
//! reports and the acceptance-suite runner.

pub mod command;
pub mod json;
pub mod report;
pub mod verify;

pub use command::Cli;
pub use report::{run, Outcome};

/// Environment variable overriding the Weyl enumeration rank guard.
pub const RANK_GUARD_ENV: &str = "SYMMPAIR_RANK_GUARD";

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_UNRESOLVED: u8 = 2;
