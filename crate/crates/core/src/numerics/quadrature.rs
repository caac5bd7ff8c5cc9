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

//! Adaptive Gauss–Legendre quadrature on finite and semi-infinite intervals.
//!
//! Every panel is integrated with a fixed-order Gauss–Legendre rule and with
//! the same rule on its two halves; the difference is the panel's error
//! estimate. The panel with the largest estimate is bisected until the total
//! estimate drops below the requested relative tolerance.
//!
//! Semi-infinite intervals `[lo, ∞)` are mapped onto `[0, 1)` with
//! `x = lo + u / (λ (1 − u))`, where `λ` is the integrand's decay rate. The
//! initial breakpoints sit at one, four and sixteen decay lengths.

use serde::{Deserialize, Serialize};

use crate::error::{CasimirError, Result};

use super::SeriesResult;

/// An integration range. Semi-infinite ranges carry the exponential decay
/// rate of the integrand, which fixes the length scale of the mapping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Interval {
    Finite { lo: f64, hi: f64 },
    SemiInfinite { lo: f64, decay_rate: f64 },
}

impl Interval {
    pub fn finite(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) || lo >= hi {
            return Err(CasimirError::Domain(format!(
                "finite interval needs finite lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Interval::Finite { lo, hi })
    }

    pub fn semi_infinite(lo: f64, decay_rate: f64) -> Result<Self> {
        if !lo.is_finite() {
            return Err(CasimirError::Domain(format!(
                "lower limit must be finite, got {lo}"
            )));
        }
        if !(decay_rate.is_finite() && decay_rate > 0.0) {
            return Err(CasimirError::Domain(format!(
                "semi-infinite interval needs a positive decay rate, got {decay_rate}"
            )));
        }
        Ok(Interval::SemiInfinite { lo, decay_rate })
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Interval::Finite { .. })
    }
}

/// Accuracy controls for the adaptive integrators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub relative_tolerance: f64,
    pub max_subdivisions: usize,
    /// Gauss–Legendre nodes per panel.
    pub base_order: usize,
}

impl QuadratureSpec {
    pub const DEFAULT_TOLERANCE: f64 = 1e-9;
    pub const DEFAULT_ORDER: usize = 16;
    pub const DEFAULT_MAX_SUBDIVISIONS: usize = 40;

    pub fn new(
        relative_tolerance: f64,
        max_subdivisions: usize,
        base_order: usize,
    ) -> Result<Self> {
        let spec = QuadratureSpec {
            relative_tolerance,
            max_subdivisions,
            base_order,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Default order and subdivision budget with a custom tolerance.
    pub fn with_tolerance(relative_tolerance: f64) -> Result<Self> {
        Self::new(
            relative_tolerance,
            Self::DEFAULT_MAX_SUBDIVISIONS,
            Self::DEFAULT_ORDER,
        )
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.relative_tolerance > 0.0 && self.relative_tolerance <= 1e-2) {
            return Err(CasimirError::Domain(format!(
                "relative tolerance must lie in (0, 1e-2], got {}",
                self.relative_tolerance
            )));
        }
        if self.max_subdivisions == 0 {
            return Err(CasimirError::Domain(
                "max_subdivisions must be positive".into(),
            ));
        }
        if self.base_order < 4 {
            return Err(CasimirError::Domain(format!(
                "base order must be at least 4, got {}",
                self.base_order
            )));
        }
        Ok(())
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            relative_tolerance: Self::DEFAULT_TOLERANCE,
            max_subdivisions: Self::DEFAULT_MAX_SUBDIVISIONS,
            base_order: Self::DEFAULT_ORDER,
        }
    }
}

/// Gauss–Legendre rule on `[-1, 1]`, stored as the non-negative half.
#[derive(Debug, Clone)]
pub(crate) struct GaussLegendre {
    /// Strictly positive nodes with their weights.
    pairs: Vec<(f64, f64)>,
    /// Weight of the node at zero, present for odd orders.
    center: Option<f64>,
}

impl GaussLegendre {
    pub(crate) fn new(order: usize) -> Self {
        let n = order;
        let nf = n as f64;
        let mut pairs = Vec::with_capacity(n / 2);
        for i in 0..n / 2 {
            // Tricomi's initial guess, then Newton on P_n.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                let dx = p / d;
                x -= dx;
                if dx.abs() <= 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            pairs.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
        }
        let center = (n % 2 == 1).then(|| {
            let (_, d) = legendre_with_derivative(n, 0.0);
            2.0 / (d * d)
        });
        GaussLegendre { pairs, center }
    }

    /// Integral of `f` over `[a, b]` together with the integral of `|f|`.
    ///
    /// Nodes are summed in mirrored pairs, so odd integrands on intervals
    /// symmetric about zero integrate to exactly zero.
    pub(crate) fn apply<F>(&self, f: &mut F, a: f64, b: f64) -> Result<(f64, f64)>
    where
        F: FnMut(f64) -> Result<f64>,
    {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut sum = 0.0;
        let mut abs_sum = 0.0;
        if let Some(w) = self.center {
            let v = finite(f(mid)?, mid)?;
            sum += w * v;
            abs_sum += w * v.abs();
        }
        for &(x, w) in &self.pairs {
            let dx = half * x;
            let lo = finite(f(mid - dx)?, mid - dx)?;
            let hi = finite(f(mid + dx)?, mid + dx)?;
            sum += w * (lo + hi);
            abs_sum += w * (lo.abs() + hi.abs());
        }
        Ok((sum * half, abs_sum * half.abs()))
    }

    pub(crate) fn order(&self) -> usize {
        2 * self.pairs.len() + usize::from(self.center.is_some())
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

fn finite(v: f64, x: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(CasimirError::Domain(format!(
            "integrand returned {v} at x = {x}"
        )))
    }
}

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    left: (f64, f64),
    right: (f64, f64),
    error: f64,
}

impl Panel {
    fn evaluate<F>(
        rule: &GaussLegendre,
        f: &mut F,
        a: f64,
        b: f64,
        whole: (f64, f64),
    ) -> Result<Self>
    where
        F: FnMut(f64) -> Result<f64>,
    {
        let m = 0.5 * (a + b);
        let left = rule.apply(f, a, m)?;
        let right = rule.apply(f, m, b)?;
        let error = (whole.0 - (left.0 + right.0)).abs();
        Ok(Panel {
            a,
            b,
            left,
            right,
            error,
        })
    }

    fn value(&self) -> f64 {
        self.left.0 + self.right.0
    }

    fn abs_value(&self) -> f64 {
        self.left.1 + self.right.1
    }
}

/// Globally adaptive bisection over the given breakpoints.
pub(crate) fn adaptive<F>(
    f: &mut F,
    breakpoints: &[f64],
    rule: &GaussLegendre,
    spec: &QuadratureSpec,
) -> Result<SeriesResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut panels = Vec::with_capacity(breakpoints.len() + spec.max_subdivisions);
    for w in breakpoints.windows(2) {
        let whole = rule.apply(f, w[0], w[1])?;
        panels.push(Panel::evaluate(rule, f, w[0], w[1], whole)?);
    }
    let evals_per_panel = 3 * rule.order();
    let mut evaluations = panels.len() * evals_per_panel;
    let mut subdivisions = 0;
    loop {
        let value: f64 = panels.iter().map(Panel::value).sum();
        let error: f64 = panels.iter().map(|p| p.error).sum();
        let magnitude: f64 = panels.iter().map(Panel::abs_value).sum();
        let rounding_floor = 50.0 * f64::EPSILON * magnitude;
        if error <= spec.relative_tolerance * value.abs() || error <= rounding_floor {
            return Ok(SeriesResult {
                value,
                error_bound: error,
                terms_used: evaluations,
            });
        }
        if subdivisions >= spec.max_subdivisions {
            return Err(CasimirError::NumericalFailure(format!(
                "quadrature did not reach relative tolerance {:e} within {} subdivisions \
                 (value {value:e}, error estimate {error:e})",
                spec.relative_tolerance, spec.max_subdivisions
            )));
        }
        let (worst, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .expect("at least one panel");
        let parent = panels.swap_remove(worst);
        let m = 0.5 * (parent.a + parent.b);
        panels.push(Panel::evaluate(rule, f, parent.a, m, parent.left)?);
        panels.push(Panel::evaluate(rule, f, m, parent.b, parent.right)?);
        evaluations += 4 * rule.order();
        subdivisions += 1;
    }
}

/// Integrates `f` over `iv` to `spec.relative_tolerance`.
///
/// The returned error bound is the adaptive refinement estimate. Non-finite
/// integrand values produce [`CasimirError::Domain`]; an exhausted subdivision
/// budget produces [`CasimirError::NumericalFailure`].
pub fn integrate_1d<F>(f: F, iv: Interval, spec: &QuadratureSpec) -> Result<SeriesResult>
where
    F: Fn(f64) -> f64,
{
    spec.validate()?;
    let rule = GaussLegendre::new(spec.base_order);
    integrate_with_rule(&mut |x| Ok(f(x)), iv, &rule, spec)
}

pub(crate) fn integrate_with_rule<F>(
    f: &mut F,
    iv: Interval,
    rule: &GaussLegendre,
    spec: &QuadratureSpec,
) -> Result<SeriesResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    match iv {
        Interval::Finite { lo, hi } => adaptive(f, &[lo, hi], rule, spec),
        Interval::SemiInfinite { lo, decay_rate } => {
            let scale = 1.0 / decay_rate;
            let mut mapped = |u: f64| {
                let one_minus = 1.0 - u;
                let x = lo + scale * u / one_minus;
                let jacobian = scale / (one_minus * one_minus);
                let v = f(x)?;
                // An underflowed tail times a large Jacobian is still zero.
                Ok(if v == 0.0 { 0.0 } else { v * jacobian })
            };
            let breaks: Vec<f64> = [0.0, 1.0, 4.0, 16.0]
                .iter()
                .map(|k| k / (1.0 + k))
                .chain(std::iter::once(1.0))
                .collect();
            adaptive(&mut mapped, &breaks, rule, spec)
        }
    }
}

/// Integrates `f` over a box of one to three finite intervals.
///
/// The integral is evaluated as nested adaptive 1-D integrals, so each axis
/// is refined independently. The error bound adds the outer estimate to the
/// worst inner estimate scaled by the outer width.
pub fn integrate_nd<F>(f: F, bounds: &[Interval], spec: &QuadratureSpec) -> Result<SeriesResult>
where
    F: Fn(&[f64]) -> f64,
{
    spec.validate()?;
    if bounds.is_empty() || bounds.len() > 3 {
        return Err(CasimirError::Domain(format!(
            "integrate_nd supports 1 to 3 dimensions, got {}",
            bounds.len()
        )));
    }
    let mut limits = Vec::with_capacity(bounds.len());
    for iv in bounds {
        match *iv {
            Interval::Finite { lo, hi } => limits.push((lo, hi)),
            Interval::SemiInfinite { .. } => {
                return Err(CasimirError::Domain(
                    "integrate_nd requires finite intervals".into(),
                ))
            }
        }
    }
    let rule = GaussLegendre::new(spec.base_order);
    let mut point = [0.0; 3];
    nested(&f, &limits, 0, &mut point, &rule, spec)
}

fn nested<F>(
    f: &F,
    limits: &[(f64, f64)],
    axis: usize,
    point: &mut [f64; 3],
    rule: &GaussLegendre,
    spec: &QuadratureSpec,
) -> Result<SeriesResult>
where
    F: Fn(&[f64]) -> f64,
{
    let dim = limits.len();
    let (lo, hi) = limits[axis];
    if axis + 1 == dim {
        let mut g = |x: f64| {
            point[axis] = x;
            Ok(f(&point[..dim]))
        };
        return adaptive(&mut g, &[lo, hi], rule, spec);
    }
    let mut inner_error = 0.0_f64;
    let mut inner_evals = 0;
    let mut g = |x: f64| {
        point[axis] = x;
        let inner = nested(f, limits, axis + 1, point, rule, spec)?;
        inner_error = inner_error.max(inner.error_bound);
        inner_evals += inner.terms_used;
        Ok(inner.value)
    };
    let outer = adaptive(&mut g, &[lo, hi], rule, spec)?;
    Ok(SeriesResult {
        value: outer.value,
        error_bound: outer.error_bound + (hi - lo) * inner_error,
        terms_used: inner_evals,
    })
}
