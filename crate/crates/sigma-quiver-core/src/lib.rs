//! Exact-arithmetic core for σ-quiver varieties: quiver data and Weyl actions, points of
//! `M(v, w)`, transposes and reflection functors, Maffei's embedding and slice labels,
//! torus fixed-point models and symbolic K-matrix identities.
#![no_std]

extern crate alloc;

pub mod error;
pub mod forms;
pub mod graph;
pub mod invariants;
pub mod involutions;
pub mod kmatrix;
pub mod linsys;
pub mod lusztig;
pub mod maffei;
pub mod matrix;
pub mod partitions;
pub mod poly;
pub mod rational;
pub mod reflection;
pub mod rep;
pub mod subspace;
pub mod torus;

pub use error::{Error, Result};
pub use graph::{DiagramAuto, DimVector, Graph, Parameter};
pub use matrix::QMatrix;
pub use rational::Q;
pub use rep::RepPoint;
