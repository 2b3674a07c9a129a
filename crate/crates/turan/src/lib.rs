//! Command-line driver, JSON reports and parallel search on top of
//! `turan-core`.

pub mod cli;
pub mod corpus;
pub mod error;
pub mod examples;
pub mod family;
pub mod io;
pub mod manifest;
pub mod parallel;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
