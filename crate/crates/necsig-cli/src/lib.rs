//! Command-line front end for the subgroup signature pipeline.
//!
//! Three subcommands: `validate` checks an action file against the relators
//! of the canonical presentation, `signature` runs the five-step analysis
//! and prints the subgroup's signature (optionally with the full trace or
//! as JSON), and `enumerate` lists subgroups of a given signature either
//! analytically at index 2 or by exhaustive search at a small degree.

pub mod cli;
pub mod input;
pub mod render;

pub use cli::run;
