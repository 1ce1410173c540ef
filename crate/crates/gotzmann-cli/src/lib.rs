//! Library half of the `gotzmann` command-line tool: range parsing,
//! sweep execution, table generation, and output rendering.

pub mod range;
pub mod render;
pub mod sweep;
pub mod table;
