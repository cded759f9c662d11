//! JSON fixtures, verification suites and the `sigma-quiver` command line over
//! [`sigma_quiver_core`].

pub mod cli;
pub mod json;
pub mod report;
pub mod suites;

pub use sigma_quiver_core as core;
