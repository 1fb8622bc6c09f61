//! Command-line front end: problem documents in, canonical result documents
//! out, plus a built-in self-test.

pub mod compute;
pub mod error;
pub mod problem;
pub mod render;
pub mod selftest;

pub use compute::{run, ResultDocument, RunOptions};
pub use error::CliError;
pub use problem::{Problem, ProblemSpec};
