//! The `gt` command line: element expressions, context flags, and the verbs
//! that call into the algebra, bracket, cocycle, surface and braid crates.
//!
//! Exit codes: 0 success or pass, 1 a verification ran and failed, 2 a
//! parse or usage error, 3 a context error.

pub mod args;
pub mod error;
pub mod expr;
pub mod run;
pub mod settings;

pub use args::{Cli, Command, Format};
pub use error::{CliError, Result};
pub use expr::{parse_element, print_element, ExprError};
pub use run::{run, run_from, Outcome, EXIT_CONTEXT, EXIT_FAILED, EXIT_PASS, EXIT_USAGE};
pub use settings::{ConfigFile, Settings, DEFAULT_MAX_DEGREE};
