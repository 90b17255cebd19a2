use thiserror::Error;

/// Errors raised anywhere in the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("malformed volume header in {path}: {reason}")]
    MalformedHeader { path: String, reason: String },

    #[error("invalid label code {code} at voxel {index} (expected 0..=3)")]
    InvalidLabel { code: u8, index: usize },

    #[error("payload size {actual} does not match declared dims {expected} voxels")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("invalid structure code {0}: must be 1 (RV), 2 (MC), or 3 (LV)")]
    InvalidStructure(u8),

    #[error("mask dimension mismatch: {a:?} vs {b:?}")]
    DimMismatch { a: (usize, usize, usize), b: (usize, usize, usize) },

    #[error("hausdorff distance undefined: {0} mask is empty")]
    EmptyMask(&'static str),

    #[error("degenerate structure for feature '{feature}': {reason}")]
    DegenerateStructure { feature: String, reason: String },

    #[error("feature extraction failed for '{feature}': {source}")]
    FeatureFailed {
        feature: String,
        #[source]
        source: Box<Error>,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("solver did not converge: {0}")]
    NoConvergence(String),

    #[error("infeasible nu={nu}: must satisfy nu <= 2*min(n+, n-)/n = {bound}")]
    InfeasibleNu { nu: f64, bound: f64 },

    #[error("csv error in {path}: {source}")]
    Csv {
        path: String,
        #[source]
        source: csv::Error,
    },

    #[error("json error in {path}: {source}")]
    Json {
        path: String,
        #[source]
        source: serde_json::Error,
    },

    #[error("subject '{subject}' failed: {source}")]
    Subject {
        subject: String,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    /// Process exit code per the CLI contract: 1 usage, 2 data, 3 convergence.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidArgument(_) => 1,
            Error::NoConvergence(_) => 3,
            Error::Subject { source, .. } | Error::FeatureFailed { source, .. } => {
                source.exit_code()
            }
            _ => 2,
        }
    }
}
