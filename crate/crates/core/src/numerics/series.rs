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

//! Partial sums with integral tail bounds, and Richardson extrapolation.

use crate::error::{CasimirError, Result};

use super::SeriesResult;

/// Partial sum `Σ_{n=1}^{N} scale / n^p` with the integral-comparison tail
/// bound `scale / ((p − 1) N^{p−1})`.
///
/// Terms are accumulated from the smallest upward.
pub fn tail_bounded_power_sum(p: f64, scale: f64, n_terms: usize) -> Result<SeriesResult> {
    if !(p > 1.0) {
        return Err(CasimirError::DivergentSeries(p));
    }
    if !(scale.is_finite() && scale >= 0.0) {
        return Err(CasimirError::Domain(format!(
            "scale must be finite and non-negative, got {scale}"
        )));
    }
    if n_terms == 0 {
        return Err(CasimirError::Domain("n_terms must be positive".into()));
    }
    let sum: f64 = (1..=n_terms).rev().map(|n| (n as f64).powf(-p)).sum();
    let n = n_terms as f64;
    Ok(SeriesResult {
        value: scale * sum,
        error_bound: scale / ((p - 1.0) * n.powf(p - 1.0)),
        terms_used: n_terms,
    })
}

/// Richardson extrapolation of `(h, value)` samples whose error expands in
/// powers `h^order, h^{2 order}, …`.
///
/// Builds the full Neville tableau and returns its apex. The
/// samples may come in any order and need not be geometrically spaced.
pub fn richardson_extrapolate(samples: &[(f64, f64)], order: u32) -> Result<f64> {
    if samples.len() < 2 {
        return Err(CasimirError::Domain(
            "Richardson extrapolation needs at least two samples".into(),
        ));
    }
    if order == 0 {
        return Err(CasimirError::Domain(
            "extrapolation order must be positive".into(),
        ));
    }
    for (i, &(h, v)) in samples.iter().enumerate() {
        if !(h.is_finite() && h > 0.0) || !v.is_finite() {
            return Err(CasimirError::Domain(format!(
                "sample {i} has invalid (h, value) = ({h}, {v})"
            )));
        }
        if samples[..i].iter().any(|&(other, _)| other == h) {
            return Err(CasimirError::Domain(format!("duplicate step size h = {h}")));
        }
    }
    let steps: Vec<f64> = samples.iter().map(|s| s.0).collect();
    let mut column: Vec<f64> = samples.iter().map(|s| s.1).collect();
    // Neville interpolation in x = h^order, evaluated at x = 0.
    for level in 1..samples.len() {
        let power = order as i32;
        column = (0..column.len() - 1)
            .map(|j| {
                let ratio = (steps[j] / steps[j + level]).powi(power);
                column[j + 1] + (column[j + 1] - column[j]) / (ratio - 1.0)
            })
            .collect();
    }
    Ok(column[0])
}
