//! Command-line front end: file formats, subcommands and the benchmark
//! harness.

pub mod bench;
pub mod commands;
pub mod format;
