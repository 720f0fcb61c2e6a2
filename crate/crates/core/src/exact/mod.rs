//! Exact scalars, series, matrices, generating-function truncation and path counting.

pub mod gf;
pub mod json;
pub mod laurent;
pub mod lgv;
pub mod matrix;
pub mod rational;
pub mod ring;
pub mod series;

pub use gf::{BiPoly, GfMatrixSpec};
pub use laurent::{Monomial, MultiLaurent, VarNames};
pub use lgv::{lgv_determinant, nonintersecting_sum, WeightedDag};
pub use matrix::ExactMatrix;
pub use rational::{int, rat, Rational};
pub use ring::Ring;
pub use series::UniSeries;
