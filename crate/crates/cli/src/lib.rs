//! Command layer for the `cisgraph` binary: property reports, predicate
//! enumeration, verification suites, open-question scans and catalog
//! scanning.

pub mod commands;
pub mod context;
pub mod error;
pub mod explore;
pub mod input;
pub mod predicate;
pub mod report;
pub mod sample;
pub mod scan;
pub mod suite;
pub mod verify;

pub use context::{Context, Settings};
pub use error::{CliError, Result};
pub use suite::SuiteResult;
