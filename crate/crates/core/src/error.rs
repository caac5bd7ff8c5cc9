// Copyright 2026 The casimir authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

use thiserror::Error;

/// Errors produced by the numerical and physical routines in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CasimirError {
    /// Invalid cavity or apparatus geometry (non-positive lengths and the like).
    #[error("invalid geometry: {0}")]
    Geometry(String),
    /// An argument outside the domain of the function, or a non-finite value.
    #[error("domain error: {0}")]
    Domain(String),
    /// A series that does not converge for the requested exponent.
    #[error("divergent series: exponent p = {0} must exceed 1")]
    DivergentSeries(f64),
    /// Adaptive refinement ran out of subdivisions before reaching tolerance.
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    /// The Feynman propagator was evaluated on (or too close to) the light cone.
    #[error("light-cone singularity: |s^2| = {interval:e} is below tolerance {tol:e}")]
    LightCone { interval: f64, tol: f64 },
    /// A failure inside one regularization scheme, tagged with its name.
    #[error("{scheme} scheme failed: {source}")]
    Scheme {
        scheme: &'static str,
        #[source]
        source: Box<CasimirError>,
    },
}

impl CasimirError {
    /// True for errors caused by the caller's arguments rather than by the numerics.
    pub fn is_argument_error(&self) -> bool {
        match self {
            CasimirError::Geometry(_) | CasimirError::DivergentSeries(_) => true,
            CasimirError::LightCone { .. } => true,
            CasimirError::Scheme { source, .. } => source.is_argument_error(),
            CasimirError::Domain(_) | CasimirError::NumericalFailure(_) => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, CasimirError>;

pub(crate) fn check_length(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(CasimirError::Geometry(format!(
            "{name} must be a positive finite length, got {value}"
        )))
    }
}
