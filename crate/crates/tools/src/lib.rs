//! Spec files, the YBE v1 format, parallel verification pipelines and the
//! `brace` command line, on top of `brace-core`.

pub mod cli;
pub mod error;
pub mod pipeline;
pub mod spec;
pub mod ybe_io;

pub use error::{Result, SchemaError, ToolError, YbeParseError};
pub use spec::{parse_spec, parse_spec_str, FamilySpec};
pub use ybe_io::{export_solution, import_solution, render_solution};
