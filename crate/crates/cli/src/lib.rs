//! Command-line front end: documents, reports, rendering and commands.

pub mod commands;
pub mod doc;
pub mod render;
pub mod report;

pub use commands::{run, Output, EXIT_BUDGET, EXIT_FAIL, EXIT_OK, EXIT_USAGE};
pub use doc::{Document, Kind, ParseError};
pub use report::{parse_kv, Report, ReportStyle};
