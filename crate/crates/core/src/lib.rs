//! Word-problem oracles for braid groups and mapping class groups, a
//! bracketing calculus, and a checker for GT rewriting derivations.

pub mod braid;
pub mod bracketing;
pub mod cli;
pub mod gt;
pub mod report;
pub mod surface;
pub mod word;
