//! Claim-verification suite and command-line operations over
//! `monomial-core`.
//!
//! [`run_suite`] executes every check for degrees up to a bound and returns a
//! [`SuiteReport`] whose claims are sorted by id, so the rendered output is
//! identical across runs regardless of thread scheduling.

pub mod commands;
pub mod error;
pub mod report;
pub mod suite;

pub use error::{CliError, Result};
pub use report::{render_report, Format};
pub use suite::{run_suite, Summary, SuiteConfig, SuiteReport};
