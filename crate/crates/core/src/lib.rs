//! Multimodal sensor classification toolkit built around Gramian angular
//! field imaging.
//!
//! The pipeline runs in four stages:
//!
//! 1. [`timeseries`] — ingest raw multi-axis sensor series from CSV and
//!    rescale each axis onto `[-1, 1]`.
//! 2. [`gaf`] — map rescaled series to polar form, build Gramian angular
//!    field matrices, and quantize them into multi-channel grayscale images.
//! 3. [`sampler`] — split each clip's timeline into equal-duration segments
//!    and draw one diagonal window (or one frame) per segment with a keyed
//!    deterministic generator.
//! 4. [`features`] / [`fusion`] — extract per-modality features with weights
//!    shared across segments, fuse them with additive inter-segment
//!    attention, and classify. Exact analytic gradients for every parameter
//!    live alongside the forward passes.
//!
//! [`training`] ties the stages into a dataset synthesizer, an SGD-with-
//! momentum loop, evaluation, and an attention-vs-concat comparison harness.
//! On-disk artifacts (PGM images, GAFT tensors, checkpoints) live in [`io`].

pub mod dataset;
pub mod error;
pub mod features;
pub mod fusion;
pub mod gaf;
pub mod io;
pub mod linalg;
pub mod model;
pub mod rng;
pub mod sampler;
pub mod synth;
pub mod timeseries;
pub mod training;

pub use error::{Error, Result};
