//! File formats, expression parsing and JSON reports for `amoeba-core`,
//! shared by the `amoeba` binary and its tests.

pub mod edgelist;
pub mod expr;
pub mod graph6;
pub mod input;
pub mod report;
