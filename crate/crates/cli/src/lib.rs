//! File formats, Graphviz export, bench reporting and the command-line
//! driver for the `hypershrink` library.

pub mod cli;
pub mod dot;
pub mod format;
pub mod report;

pub use cli::run;
