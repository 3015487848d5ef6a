// Copyright 2026 ONER Simulator Contributors
// SPDX-License-Identifier: Apache-2.0

//! Error type shared by every module of the crate.

use crate::nqi::Frame;

#[derive(Debug, thiserror::Error)]
pub enum OnerError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unsupported spin: {0}")]
    UnsupportedSpin(String),

    #[error("frame mismatch: expected a tensor in the {expected:?} frame, got {found:?}")]
    FrameMismatch { expected: Frame, found: Frame },

    #[error(
        "perturbative regime violated: |gamma_n B| / max|Q| = {ratio:.4} is below {required}"
    )]
    RegimeViolation { ratio: f64, required: f64 },

    #[error("integration failure at t = {t:.6e} (step {dt:.3e}): {message}")]
    IntegrationFailure { t: f64, dt: f64, message: String },

    #[error(
        "pulse-train waveform did not reach a periodic attractor after {periods} periods \
         (last period-to-period change {residual:.3e})"
    )]
    ConvergenceFailure { periods: usize, residual: f64 },

    #[error("fit failure: {0}")]
    FitFailure(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, OnerError>;

impl OnerError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        OnerError::InvalidArgument(msg.into())
    }
}
