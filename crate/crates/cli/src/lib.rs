//! Command-line front end: operator expression parsing, canonical rendering,
//! and deterministic text/JSON reports over the exact kernel in
//! `dopfactor-core`.

pub mod commands;
pub mod parse;
pub mod render;
pub mod report;
