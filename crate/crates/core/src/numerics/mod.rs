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

//! Shared numerical engine: quadrature, finite differences, bounded partial
//! sums and Richardson extrapolation.
//!
//! Everything here is a pure function of its arguments. Integrands passed in
//! by callers must themselves be reentrant if the caller evaluates in parallel.

mod diff;
mod quadrature;
mod series;

use serde::{Deserialize, Serialize};

pub use diff::{central_diff, default_step};
pub use quadrature::{integrate_1d, integrate_nd, Interval, QuadratureSpec};
pub use series::{richardson_extrapolate, tail_bounded_power_sum};

/// A numerical estimate with a bound on its distance from the exact limit.
///
/// For partial sums the bound is rigorous; for quadrature it is the adaptive
/// refinement estimate. `terms_used` counts series terms or integrand
/// evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesResult {
    pub value: f64,
    pub error_bound: f64,
    pub terms_used: usize,
}
