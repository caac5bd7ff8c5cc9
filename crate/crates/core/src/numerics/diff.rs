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

//! Central finite differences.

use crate::error::{CasimirError, Result};

/// `(f(x + h) − f(x − h)) / 2h`. The caller chooses the step.
pub fn central_diff<F>(f: F, x: f64, h: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(h.is_finite() && h > 0.0) {
        return Err(CasimirError::Domain(format!(
            "step must be positive and finite, got {h}"
        )));
    }
    let hi = f(x + h);
    let lo = f(x - h);
    let d = (hi - lo) / (2.0 * h);
    if d.is_finite() {
        Ok(d)
    } else {
        Err(CasimirError::Domain(format!(
            "non-finite difference at x = {x}: f(x+h) = {hi}, f(x-h) = {lo}"
        )))
    }
}

/// Default step `max(1e-5, 1e-5·|x|)`.
pub fn default_step(x: f64) -> f64 {
    (1e-5 * x.abs()).max(1e-5)
}
