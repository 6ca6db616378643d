//! splatnav: a desk-scale navigation stack that uses a Gaussian-splatting map
//! as the single representation for mapping, exploration, semantic task
//! navigation, and collision avoidance.
//!
//! The stack is organised as a set of layers over one map type:
//!
//! - [`gsmap`] owns the Gaussians, partitioned into anchored submaps with
//!   dynamic load/unload and submap-level pose correction.
//! - [`splatcore`] renders the map differentiably and refines it against
//!   observations, reporting per-Gaussian update magnitudes.
//! - [`collide`] generates motion primitives and runs batched
//!   point-vs-Gaussian collision checks with a logical-OR reduction.
//! - [`explore`] turns update magnitudes into an uncertainty field and scores
//!   candidate regions and trajectories.
//! - [`semantics`] compresses feature embeddings and clusters the map into an
//!   object/region/submap hierarchy for task queries.
//! - [`plan`] runs discrete planning over a sparse graph, budgeted semantic
//!   tours, and produces experiment reports.
//! - [`worldsim`] provides the synthetic ground-truth world, ray-cast sensor,
//!   and robot dynamics used in place of hardware.
//! - [`runner`] wires the loop together: configuration, experiment
//!   orchestration, metrics, and logging.

pub mod collide;
pub mod explore;
pub mod gsmap;
pub mod math;
pub mod plan;
pub mod runner;
pub mod semantics;
pub mod splatcore;
pub mod worldsim;

pub use gsmap::{Gaussian, GaussianHandle, MapStore, Residency, Submap};
pub use math::{Aabb, Feature, Pose, Quat, Vec3, FEATURE_DIM};
