//! Cluster algebras and the T-system: quiver and seed mutation, octahedron moves,
//! the D/U network solution and Laurent positivity checks.

pub mod network;
pub mod positivity;
pub mod quiver;
pub mod seed;
pub mod tsystem;

pub use network::{build_network, du_reorder_check, du_reorder_symbolic, network_paths_eval, solt_eval, DuFactor, DuKind, Network};
pub use positivity::{finite_type_orbit, positivity_sample_check, PositivityReport};
pub use quiver::Quiver;
pub use seed::Seed;
pub use tsystem::{cluster_tsystem_consistency, light_cone, tsystem_value, FlatData, SteppedSurface, TSystem};
