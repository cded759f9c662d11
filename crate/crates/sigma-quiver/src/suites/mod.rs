//! Property batteries behind `verify`, one per area.

pub mod adjoint;
pub mod invariance;
pub mod kmatrix;
pub mod maffei;
pub mod models;
pub mod partitions;
pub mod reflection;
pub mod tau;
pub mod weyl;
pub mod zw;

use crate::report::{Caps, SuiteReport};

pub type SuiteFn = fn(&Caps, u64) -> SuiteReport;

/// Suite names in `verify all` order.
pub const SUITES: &[(&str, SuiteFn)] = &[
    ("weyl", weyl::run),
    ("adjoint", adjoint::run),
    ("tau", tau::run),
    ("reflection", reflection::run),
    ("zw", zw::run),
    ("maffei", maffei::run),
    ("partitions", partitions::run),
    ("models", models::run),
    ("kmatrix", kmatrix::run),
    ("invariance", invariance::run),
];

pub fn lookup(name: &str) -> Option<SuiteFn> {
    SUITES.iter().find(|(n, _)| *n == name).map(|(_, f)| *f)
}
