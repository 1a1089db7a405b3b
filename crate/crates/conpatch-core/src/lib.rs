//! Patch matching with self-similarity context features.
//!
//! A small image patch is a weak descriptor: under noise it matches database
//! entries that look similar only by accident. This crate augments every
//! `c x c` patch with a compact *context feature* -- a `b`-bin normalized
//! histogram of the similarity weights between the patch and its `h x h`
//! surroundings -- and concatenates the two into a *con-patch*. The con-patch
//! keeps the dense-sampling advantage of small patches while carrying
//! information about the large window around them, which filters pseudo-matches
//! out of nearest-neighbor searches.
//!
//! The crate provides the building blocks and three pipelines built on them:
//!
//! - [`image`]: grayscale rasters, patch extraction, noise synthesis,
//!   sub-pixel sampling and PSNR.
//! - [`context`]: correlation surfaces, context histograms, con-patch
//!   assembly and the context-augmented distance.
//! - [`patchdb`] / [`kdtree`]: flat patch databases with exact and
//!   visit-bounded approximate k-NN search.
//! - [`denoise`]: external denoising over a clean-patch database, an internal
//!   NLM baseline, and a matching-quality benchmark.
//! - [`fruc`]: bi-directional motion-compensated frame-rate up-conversion
//!   with context-augmented block matching.
//! - [`synth`]: deterministic synthetic images and clips for desk-scale
//!   experiments.
//!
//! The crate is `no_std` (alloc required). All operations are pure: outputs
//! are immutable after construction and every random quantity derives from an
//! explicit 64-bit seed through a counter-based generator, so results are
//! bit-reproducible and independent of evaluation order.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod context;
pub mod denoise;
pub mod fruc;
pub mod image;
pub mod kdtree;
pub mod patchdb;
pub mod rng;
pub mod synth;

pub use error::{Error, Result};
