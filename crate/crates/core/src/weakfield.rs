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

//! First-order gravitational correction to the parallel-plate Casimir force.
//!
//! The apparatus has plate normal `ξ̃`, in-plate axes `η̃` and `χ̃`, and is
//! tilted by `α` away from the direction of gravity:
//!
//! ```text
//! z = ξ̃ cos α + η̃ sin α,   y = η̃ cos α − ξ̃ sin α,   x = χ̃.
//! ```
//!
//! A uniform field of strength `g` is described either in isotropic gauge
//! (`h₀₀ = −gz`, `h_ij = −gz δ_ij`) or in Fermi gauge (`h₀₀ = −gz`, `h_ij = 0`).
//! The two are related by a gauge field `ζ`, and the energy picked up by the
//! cavity stress tensor under that transformation is
//!
//! ```text
//! ΔE_g = −A g E_C ξ̃₀ cos α = −A g E_C z₀,
//! ```
//!
//! from which `ΔF/A = g E_C`. Adding the isotropic force `F^I/A = −2 g E_C`
//! gives the Fermi-frame force `F^F/A = −g E_C`.
//!
//! [`delta_energy_quadrature`] integrates the three source integrals as
//! written, without simplifying them, so it serves as an independent check
//! on [`delta_energy_closed`].

use std::f64::consts::{FRAC_PI_2, TAU};
use std::fmt;

use log::warn;
use serde::{Deserialize, Serialize};

use crate::cavity::{energy_per_area, pressure, CavityConfig, SpacetimePoint};
use crate::error::{check_length, CasimirError, Result};
use crate::numerics::{integrate_nd, Interval, QuadratureSpec, SeriesResult};

/// Symmetric 4×4 matrix in (t, x, y, z) index order.
pub type Matrix4 = [[f64; 4]; 4];

/// Weak-field regime threshold for `g` times the apparatus extent.
pub const WEAK_FIELD_LIMIT: f64 = 0.1;
/// Plates narrower than this many gap widths trigger a regime warning.
pub const WIDE_PLATE_RATIO: f64 = 10.0;

/// `(cos α, sin α)`, exact at multiples of a quarter turn.
fn direction(alpha: f64) -> (f64, f64) {
    let quarter = alpha / FRAC_PI_2;
    let k = quarter.round();
    if (quarter - k).abs() < 1e-12 {
        match (k as i64).rem_euclid(4) {
            0 => (1.0, 0.0),
            1 => (0.0, 1.0),
            2 => (-1.0, 0.0),
            _ => (0.0, -1.0),
        }
    } else {
        (alpha.cos(), alpha.sin())
    }
}

/// Maps apparatus coordinates `(ξ̃, η̃, χ̃)` to lab coordinates `(x, y, z)`.
pub fn apparatus_to_lab(p: [f64; 3], alpha: f64) -> [f64; 3] {
    let [xi, eta, chi] = p;
    let (c, s) = direction(alpha);
    [chi, eta * c - xi * s, xi * c + eta * s]
}

/// Inverse of [`apparatus_to_lab`].
pub fn lab_to_apparatus(p: [f64; 3], alpha: f64) -> [f64; 3] {
    let [x, y, z] = p;
    let [chi, eta, xi] = apparatus_to_lab([z, y, x], -alpha);
    [xi, eta, chi]
}

/// Uniform gravitational field strength (an inverse length in natural units).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeakField {
    g: f64,
}

impl WeakField {
    pub fn new(g: f64) -> Result<Self> {
        if !(g.is_finite() && g >= 0.0) {
            return Err(CasimirError::Geometry(format!(
                "field strength g must be finite and >= 0, got {g}"
            )));
        }
        Ok(WeakField { g })
    }

    pub fn g(&self) -> f64 {
        self.g
    }
}

/// Geometry of a tilted parallel-plate apparatus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlateApparatus {
    side: f64,
    length: f64,
    xi0: f64,
    alpha: f64,
    polarizations: u8,
}

/// A non-fatal departure from the regime the correction is derived in.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum RegimeWarning {
    /// Plate side is less than ten gap widths.
    NarrowPlates { side: f64, length: f64 },
    /// `g` times the apparatus extent exceeds [`WEAK_FIELD_LIMIT`].
    StrongField { g_times_extent: f64 },
}

impl fmt::Display for RegimeWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegimeWarning::NarrowPlates { side, length } => write!(
                f,
                "plate side a = {side} is below {WIDE_PLATE_RATIO}·L = {}; edge effects are not modelled",
                WIDE_PLATE_RATIO * length
            ),
            RegimeWarning::StrongField { g_times_extent } => write!(
                f,
                "g·extent = {g_times_extent} exceeds {WEAK_FIELD_LIMIT}; linearized gravity may be inaccurate"
            ),
        }
    }
}

impl PlateApparatus {
    /// Validates the geometry and normalizes `alpha` into `[0, 2π)`.
    ///
    /// Plates with `a < 10 L` are accepted with a logged warning.
    pub fn new(side: f64, length: f64, xi0: f64, alpha: f64, polarizations: u8) -> Result<Self> {
        let side = check_length("plate side a", side)?;
        // Reuse the cavity checks for L and the polarization count.
        let cavity = CavityConfig::new(length, polarizations)?;
        if !xi0.is_finite() {
            return Err(CasimirError::Geometry(format!(
                "center offset xi0 must be finite, got {xi0}"
            )));
        }
        if !alpha.is_finite() {
            return Err(CasimirError::Geometry(format!(
                "tilt alpha must be finite, got {alpha}"
            )));
        }
        let alpha = alpha.rem_euclid(TAU);
        let app = PlateApparatus {
            side,
            length: cavity.length(),
            xi0,
            alpha,
            polarizations,
        };
        if side < WIDE_PLATE_RATIO * length {
            warn!("{}", RegimeWarning::NarrowPlates { side, length });
        }
        Ok(app)
    }

    pub fn side(&self) -> f64 {
        self.side
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn xi0(&self) -> f64 {
        self.xi0
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn polarizations(&self) -> u8 {
        self.polarizations
    }

    /// Plate area `A = a²`.
    pub fn area(&self) -> f64 {
        self.side * self.side
    }

    /// Height of the apparatus center along gravity, `ξ̃₀ cos α`.
    pub fn z0(&self) -> f64 {
        self.xi0 * direction(self.alpha).0
    }

    pub fn cavity(&self) -> CavityConfig {
        CavityConfig::new(self.length, self.polarizations).expect("validated on construction")
    }

    /// Same apparatus with a different center offset.
    pub fn with_xi0(&self, xi0: f64) -> Result<Self> {
        Self::new(self.side, self.length, xi0, self.alpha, self.polarizations)
    }

    /// Distance from the lab origin to the farthest corner of the cavity.
    pub fn extent(&self) -> f64 {
        let normal = self.xi0.abs() + 0.5 * self.length;
        let half = 0.5 * self.side;
        (normal * normal + 2.0 * half * half).sqrt()
    }

    pub fn regime_warnings(&self, field: &WeakField) -> Vec<RegimeWarning> {
        let mut out = Vec::new();
        if self.side < WIDE_PLATE_RATIO * self.length {
            out.push(RegimeWarning::NarrowPlates {
                side: self.side,
                length: self.length,
            });
        }
        let g_times_extent = field.g * self.extent();
        if g_times_extent > WEAK_FIELD_LIMIT {
            out.push(RegimeWarning::StrongField { g_times_extent });
        }
        out
    }
}

/// Which weak-field gauge a perturbation is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gauge {
    Isotropic,
    Fermi,
}

/// Isotropic-gauge perturbation: `diag(−gz, −gz, −gz, −gz)`.
pub fn h_isotropic(field: &WeakField, p: &SpacetimePoint) -> Matrix4 {
    let v = -field.g * p.z;
    let mut h = [[0.0; 4]; 4];
    for (i, row) in h.iter_mut().enumerate() {
        row[i] = v;
    }
    h
}

/// Fermi-gauge perturbation: only `h₀₀ = −gz`.
///
/// The Fermi line element `−(1 + 2gz) dt² + dr²` would give `h₀₀ = −2gz`
/// under `g = η + h`; the component table used here keeps `−gz` to stay
/// consistent with the isotropic table it is gauge-related to.
pub fn h_fermi(field: &WeakField, p: &SpacetimePoint) -> Matrix4 {
    let mut h = [[0.0; 4]; 4];
    h[0][0] = -field.g * p.z;
    h
}

/// A metric perturbation field in a fixed gauge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricPerturbation {
    pub field: WeakField,
    pub gauge: Gauge,
}

impl MetricPerturbation {
    pub fn evaluate(&self, p: &SpacetimePoint) -> Matrix4 {
        match self.gauge {
            Gauge::Isotropic => h_isotropic(&self.field, p),
            Gauge::Fermi => h_fermi(&self.field, p),
        }
    }
}

/// Vector field `ζ_μ` with `∂_μ ζ_ν + ∂_ν ζ_μ = h^F_{μν} − h^I_{μν}`.
///
/// The representative is
/// `ζ = (0, g z x / 2, g z y / 2, g (z² − x² − y²) / 4)`; any other differs
/// from it by a Killing vector of flat space.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaugeField {
    g: f64,
}

impl GaugeField {
    /// Covariant components `(ζ_t, ζ_x, ζ_y, ζ_z)` at `p`.
    pub fn evaluate(&self, p: &SpacetimePoint) -> [f64; 4] {
        let g = self.g;
        [
            0.0,
            0.5 * g * p.z * p.x,
            0.5 * g * p.z * p.y,
            0.25 * g * (p.z * p.z - p.x * p.x - p.y * p.y),
        ]
    }
}

pub fn gauge_field(field: &WeakField) -> GaugeField {
    GaugeField { g: field.g }
}

/// `∂_μ ζ_ν + ∂_ν ζ_μ` at `p` by central differences with step `h`.
pub fn symmetrized_gradient<F>(zeta: F, p: &SpacetimePoint, h: f64) -> Result<Matrix4>
where
    F: Fn(&SpacetimePoint) -> [f64; 4],
{
    if !(h.is_finite() && h > 0.0) {
        return Err(CasimirError::Domain(format!(
            "step must be positive and finite, got {h}"
        )));
    }
    // jac[mu][nu] = ∂_mu ζ_nu
    let mut jac = [[0.0; 4]; 4];
    let base = p.to_array();
    for (mu, row) in jac.iter_mut().enumerate() {
        let mut fwd = base;
        let mut bwd = base;
        fwd[mu] += h;
        bwd[mu] -= h;
        let zf = zeta(&SpacetimePoint::from_array(fwd));
        let zb = zeta(&SpacetimePoint::from_array(bwd));
        for nu in 0..4 {
            row[nu] = (zf[nu] - zb[nu]) / (2.0 * h);
        }
    }
    Ok(std::array::from_fn(|mu| {
        std::array::from_fn(|nu| jac[mu][nu] + jac[nu][mu])
    }))
}

/// `ΔE_g` from the three surface integrals, each integrated numerically as
/// written (constant integrands included).
pub fn delta_energy_quadrature(
    app: &PlateApparatus,
    field: &WeakField,
    spec: &QuadratureSpec,
) -> Result<SeriesResult> {
    let g = field.g;
    let a = app.side;
    let l = app.length;
    let xi0 = app.xi0;
    let (cos_a, sin_a) = direction(app.alpha);
    let e_c = energy_per_area(&app.cavity());

    let transverse = Interval::finite(-0.5 * a, 0.5 * a)?;
    let normal = Interval::finite(xi0 - 0.5 * l, xi0 + 0.5 * l)?;

    // (6E_C/L) ∫dη̃ ∫dχ̃ (1/4) g cos α (−2 ξ̃₀ L)
    let first_prefactor = 6.0 * e_c / l;
    let first = integrate_nd(
        |_| 0.25 * g * cos_a * (-2.0 * xi0 * l),
        &[transverse, transverse],
        spec,
    )?;

    // −(2E_C/L) ∫dξ̃ ∫dχ̃ (1/2) g cos α (−a) ξ̃
    let side_prefactor = -2.0 * e_c / l;
    let second = integrate_nd(
        |p| 0.5 * g * cos_a * (-a) * p[0],
        &[normal, transverse],
        spec,
    )?;

    // −(2E_C/L) ∫dξ̃ ∫dη̃ (1/2) g (ξ̃ cos α + η̃ sin α)(−a)
    let third = integrate_nd(
        |p| 0.5 * g * (p[0] * cos_a + p[1] * sin_a) * (-a),
        &[normal, transverse],
        spec,
    )?;

    Ok(SeriesResult {
        value: first_prefactor * first.value + side_prefactor * (second.value + third.value),
        error_bound: first_prefactor.abs() * first.error_bound
            + side_prefactor.abs() * (second.error_bound + third.error_bound),
        terms_used: first.terms_used + second.terms_used + third.terms_used,
    })
}

/// `ΔE_g = −A g E_C z₀`.
pub fn delta_energy_closed(app: &PlateApparatus, field: &WeakField) -> f64 {
    -app.area() * field.g * energy_per_area(&app.cavity()) * app.z0()
}

/// Force correction per area, `ΔF/A = g E_C`.
pub fn delta_force_per_area(field: &WeakField, cfg: &CavityConfig) -> f64 {
    field.g * energy_per_area(cfg)
}

/// Force per area in isotropic coordinates, `F^I/A = −2 g E_C`.
pub fn isotropic_force_per_area(field: &WeakField, cfg: &CavityConfig) -> f64 {
    -2.0 * delta_force_per_area(field, cfg)
}

/// Force per area in Fermi coordinates, `F^F/A = F^I/A + ΔF/A = −g E_C`.
pub fn fermi_force_per_area(field: &WeakField, cfg: &CavityConfig) -> f64 {
    isotropic_force_per_area(field, cfg) + delta_force_per_area(field, cfg)
}

/// `ΔF/A` relative to the flat-space pressure; equals `g L / 3`.
pub fn fractional_correction(field: &WeakField, cfg: &CavityConfig) -> f64 {
    delta_force_per_area(field, cfg) / pressure(cfg)
}
