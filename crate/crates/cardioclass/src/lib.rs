//! Cardiac cine-MR classification pipeline: labeled segmentation volumes in,
//! disease classes out.
//!
//! The pipeline stages, each its own module:
//!
//! 1. [`volume`] — labeled voxel volumes and the CQV1 file format.
//! 2. [`postprocess`] — keep only the largest connected foreground component.
//! 3. [`seg_metrics`] — Dice coefficient and Hausdorff distance.
//! 4. [`features`] — 125 handcrafted volumetric, thickness, and shape features.
//! 5. [`selection`] — L1-penalized feature selection (LASSO, L1 logistic,
//!    randomized logistic) with One-vs-Rest aggregation and a two-stage
//!    30-then-20 pipeline.
//! 6. [`classifiers`] — LR, MLP, Nu-SVM, and their weighted soft-voting
//!    ensemble.
//! 7. [`evaluation`] — stratified k-fold cross-validation and grid search.
//! 8. [`phantom`] — synthetic labeled hearts for desk-scale verification.
//!
//! ```
//! use cardioclass::phantom::{PhantomSpec, generate_phantom};
//! use cardioclass::features::{FeatureManifest, assemble_features};
//!
//! let spec = PhantomSpec::for_class(0, 7).unwrap();
//! let study = generate_phantom(&spec).unwrap();
//! let manifest = FeatureManifest::default_manifest();
//! let features = assemble_features(&study, &manifest).unwrap();
//! assert_eq!(features.len(), 125);
//! ```

// The numeric kernels update several arrays in lockstep; indexed loops are
// the clearest way to write them, so the iterator-style lint stays off.
#![allow(clippy::needless_range_loop)]

pub mod classifiers;
pub mod error;
pub mod evaluation;
pub mod features;
pub mod phantom;
pub mod postprocess;
pub mod seg_metrics;
pub mod selection;
pub mod volume;

pub use error::{Error, Result};

use std::path::Path;

/// Write a file atomically: temp file in the same directory, then rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().unwrap_or(Path::new("."));
    let tmp = dir.join(format!(
        ".{}.tmp",
        path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default()
    ));
    std::fs::write(&tmp, bytes).map_err(|e| Error::io(tmp.display().to_string(), e))?;
    std::fs::rename(&tmp, path).map_err(|e| Error::io(path.display().to_string(), e))
}
