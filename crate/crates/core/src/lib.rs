//! Deformable-sheet pattern cutting.
//!
//! A thin elastic sheet is modeled as a grid of point masses joined by
//! distance constraints. A scripted scissor blade advances along a target
//! contour severing mesh points, while a gripper holds one pinch point and
//! tensions it in 1 mm steps to keep the material aligned with the blade.
//! Cutting accuracy is the symmetric difference between the intended and
//! the achieved cut sets.
//!
//! The crate provides:
//!
//! - [`sim`] — the mass-spring sheet with pinning, tensioning and severing;
//! - [`contour`] — contours, segmentation, blade-path rasterization and the
//!   accuracy metric;
//! - [`env`] — the tensioning MDP (reset/step/rollout);
//! - [`policy`] / [`trpo`] — a categorical MLP policy and a trust-region
//!   policy-optimization trainer;
//! - [`search`] — multi-pinch-point planning: per-segment candidate search,
//!   joint-area pins, cutting-order search;
//! - [`bench`] — the six-algorithm benchmark runner and CSV/JSON reports.

pub mod bench;
pub mod contour;
pub mod env;
mod error;
pub mod policy;
pub mod search;
pub mod seed;
pub mod sim;
pub mod trpo;
pub mod vec3;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
