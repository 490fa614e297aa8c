use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("fields live on different grids")]
    GridMismatch,

    #[error("cannot normalize a zero field")]
    ZeroField,

    #[error("imaginary residue {residue:.3e} exceeds {limit:.1e} of the field maximum")]
    ImaginaryResidue { residue: f64, limit: f64 },

    #[error("half-plane mass {0:.3e} is too small for a conditional centroid")]
    VanishingMass(f64),

    #[error("bad archive magic in {path}")]
    BadMagic { path: PathBuf },

    #[error("unknown field kind {0} in archive")]
    UnknownKind(u32),

    #[error("archive kind mismatch: expected {expected}, found {found}")]
    KindMismatch { expected: u32, found: u32 },

    #[error("archive dimension mismatch: header n={n}, payload holds {payload} bytes, expected {expected}")]
    DimensionMismatch { n: u32, payload: usize, expected: usize },

    #[error("archive truncated: {0}")]
    Truncated(String),

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
