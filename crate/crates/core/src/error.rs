// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

use std::path::PathBuf;

use crate::Scalar;

/// Errors raised by the cyclide kernel.
#[derive(Debug, thiserror::Error)]
pub enum CyclideError {
    #[error("invalid circle-family vector: {0}")]
    InvalidVector(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("leading coefficient u0 is zero; use the cubic path")]
    CubicInput,

    #[error("no cubic terms (B0 = 0); not a cubic cyclide")]
    NotACubicCyclide,

    #[error("no real solution (discriminant {discriminant})")]
    NoRealSolution { discriminant: Scalar },

    #[error("real solutions are irrational (discriminant {discriminant} is not a rational square)")]
    NonRationalSolution { discriminant: Scalar },

    #[error("both surfaces have a vanishing gradient along the circle")]
    BothSidesDegenerate,

    #[error("operation not defined for verdict {verdict}")]
    ComponentMismatch { verdict: String },

    #[error("invariant undefined: {0}")]
    UndefinedInvariant(String),

    #[error("no sign change of the implicit function inside the box")]
    EmptySurface,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CyclideError {
    /// Stable machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            CyclideError::InvalidVector(_) => "InvalidVector",
            CyclideError::Precondition(_) => "PreconditionViolation",
            CyclideError::CubicInput => "CubicInput",
            CyclideError::NotACubicCyclide => "NotACubicCyclide",
            CyclideError::NoRealSolution { .. } => "NoRealSolution",
            CyclideError::NonRationalSolution { .. } => "NonRationalSolution",
            CyclideError::BothSidesDegenerate => "BothSidesDegenerate",
            CyclideError::ComponentMismatch { .. } => "ComponentMismatch",
            CyclideError::UndefinedInvariant(_) => "UndefinedInvariant",
            CyclideError::EmptySurface => "EmptySurface",
            CyclideError::Parse(_) => "ParseError",
            CyclideError::Io { .. } => "IoError",
        }
    }
}

pub type Result<T, E = CyclideError> = std::result::Result<T, E>;
