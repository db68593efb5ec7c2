use std::io;

use thiserror::Error;

use crate::datagen::DatasetSpec;

#[derive(Debug, Error)]
pub enum Error {
    #[error("point {index} has {found} objectives, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("point {index} objective {objective} is not finite ({value})")]
    InvalidValue {
        index: usize,
        objective: usize,
        value: f64,
    },

    #[error("at least 2 objectives are required, got {0}")]
    TooFewObjectives(usize),

    #[error("infeasible dataset spec: {0}")]
    InfeasibleSpec(String),

    #[error("invalid switch policy: {0}")]
    InvalidPolicy(String),

    #[error("rank mismatch between {first} and {second} on dataset {spec}")]
    CorrectnessFailure {
        spec: DatasetSpec,
        first: String,
        second: String,
    },

    #[error("subproblem solvers disagree on record {index}")]
    ReplayMismatch { index: usize },

    #[error("no divide-and-conquer timings for cell N={n} M={m} L={levels}")]
    MissingCell { n: usize, m: usize, levels: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
