//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("target {target_mev} meV exceeds table cutoff {cutoff_mev} meV; re-enumerate with a higher cutoff")]
    TargetAboveCutoff { target_mev: f64, cutoff_mev: f64 },

    #[error("state [{nx},{ny},{nz}] lies above the table cutoff {cutoff_mev} meV")]
    StateAboveCutoff {
        nx: u32,
        ny: u32,
        nz: u32,
        cutoff_mev: f64,
    },

    #[error("gate coupling would reach alpha >= 1 (e/(period*C) = {ratio}); unphysical")]
    GateAlphaUnphysical { ratio: f64 },

    #[error("charging energy {ec_mev} meV leaves no mechanical budget above the level gap {gap_mev} meV")]
    NoMechanicalBudget { ec_mev: f64, gap_mev: f64 },

    #[error("need at least 2 peaks to estimate a spacing, found {found}")]
    InsufficientPeaks { found: usize },

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    #[error("trace line {line}: {message}")]
    TraceParse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
