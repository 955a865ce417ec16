pub mod commands;
pub mod eval;
pub mod parse;
pub mod report;
pub mod suites;
