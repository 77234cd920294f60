//! Air-to-ground path-loss pipeline at desk scale.
//!
//! The crate generates procedural urban scenes, computes per-receiver path
//! loss with a deterministic line-of-sight oracle, quantizes the losses into
//! normalized 26-bin distributions, trains a small CNN to predict those
//! distributions for several transmitter altitudes from a top-down raster in
//! one forward pass, and selects the altitude that maximizes coverage under
//! a path-loss threshold.
//!
//! Everything is seeded and deterministic: the same master seed reproduces
//! scenes, datasets, training history, and checkpoints byte for byte.

pub mod baselines;
pub mod coverage;
pub mod dataset;
pub mod error;
pub mod histogram;
pub mod network;
pub mod propagation;
pub mod rng;
pub mod scene;

pub use error::{Error, Result};
