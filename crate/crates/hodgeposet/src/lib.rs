//! Exact classification posets for one-parameter degenerations of polarized
//! Hodge structures.
//!
//! Two entry points feed everything else: [`diamonds`] works from Hodge
//! numbers of a period domain, [`psid`] works from root data and a grading
//! element. Both produce class lists with relations that [`cubes`] consumes.

#![allow(clippy::needless_range_loop)]

pub mod budget;
pub mod cubes;
pub mod diamonds;
pub mod error;
pub mod fixtures;
pub mod g2model;
pub mod mirror;
pub mod nilpotent;
pub mod polarized;
pub mod psid;
pub mod rational;
pub mod rootsys;

pub mod cli;

pub use error::{Error, Result};

/// Version tag carried by every JSON document the CLI emits.
pub const SCHEMA_VERSION: &str = "1";
