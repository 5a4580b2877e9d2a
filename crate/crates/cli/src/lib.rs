//! Library behind the `aqec` command-line tool: claim parsing, report
//! rendering, table reproduction, and command dispatch.

pub mod claim;
pub mod commands;
pub mod report;
pub mod reproduce;

pub use commands::{run, Cli, CmdResult};
