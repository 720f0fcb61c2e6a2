//! Exact combinatorics toolkit: alternating sign matrices, descending plane partitions,
//! the six-vertex model, planar-map geodesics, Lorentzian transfer matrices and the
//! T-system as a cluster algebra, all in exact rational and Laurent arithmetic.

pub mod asm;
pub mod cli;
pub mod cluster;
pub mod error;
pub mod exact;
pub mod lorentzian;
pub mod maps;
pub mod refined;
pub mod report;
pub mod sixvertex;

pub use error::{Error, Result};
