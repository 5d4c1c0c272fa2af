//! Library side of the `etamu` command-line tool.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod fit;
pub mod scenario;
pub mod sweep;
pub mod validate;

pub use error::{CliError, CliResult};
pub use scenario::{Scenario, SnrGrid};
