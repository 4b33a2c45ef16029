//! Exact invariant theory of classical symmetric pairs.
//!
//! Everything here is exact: rationals and Gaussian rationals backed by big
//! integers. The crate is `no_std` and needs only `alloc`.
#![no_std]

extern crate alloc;

pub mod centralizers;
pub mod error;
pub mod field;
pub mod hitchin;
pub mod matrix;
pub mod mpoly;
pub mod poly;
pub mod regquot;
pub mod rootsys;
pub mod spectral;
pub mod sympair;

pub use error::{Error, Result};
pub use field::{Field, Qi, Ring, Q};
pub use matrix::Matrix;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
