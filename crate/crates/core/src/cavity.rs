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

//! Closed-form Casimir observables for the ideal parallel-plate cavity.
//!
//! Natural units (ħ = c = 1), metric signature (−, +, +, +). A
//! [`CavityConfig`] with one polarization describes a Dirichlet scalar; two
//! polarizations give the electromagnetic values
//!
//! ```text
//! E_C = −π² / (720 L³),   P = −π² / (240 L⁴).
//! ```

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{check_length, CasimirError, Result};

/// Default `|s²|` below which the propagator is treated as singular.
pub const DEFAULT_LIGHT_CONE_TOL: f64 = 1e-12;

/// Minkowski metric diagonal, (−, +, +, +).
pub const MINKOWSKI: [f64; 4] = [-1.0, 1.0, 1.0, 1.0];

/// Plate separation and polarization count of the cavity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CavityConfig {
    length: f64,
    polarizations: u8,
}

impl CavityConfig {
    pub fn new(length: f64, polarizations: u8) -> Result<Self> {
        let length = check_length("plate separation L", length)?;
        if !(1..=2).contains(&polarizations) {
            return Err(CasimirError::Geometry(format!(
                "polarizations must be 1 (scalar) or 2 (electromagnetic), got {polarizations}"
            )));
        }
        Ok(CavityConfig {
            length,
            polarizations,
        })
    }

    pub fn scalar(length: f64) -> Result<Self> {
        Self::new(length, 1)
    }

    pub fn electromagnetic(length: f64) -> Result<Self> {
        Self::new(length, 2)
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn polarizations(&self) -> u8 {
        self.polarizations
    }

    fn factor(&self) -> f64 {
        f64::from(self.polarizations)
    }
}

/// Scalar vacuum energy density between the plates, `−π²/(1440 L⁴)`.
pub fn energy_density(length: f64) -> Result<f64> {
    let length = check_length("plate separation L", length)?;
    Ok(-PI * PI / (1440.0 * length.powi(4)))
}

/// Energy per unit plate area, `polarizations · (−π²/(1440 L³))`.
pub fn energy_per_area(cfg: &CavityConfig) -> f64 {
    cfg.factor() * (-PI * PI / (1440.0 * cfg.length.powi(3)))
}

/// Force per unit area, `polarizations · (−π²/(480 L⁴))`. Negative means
/// the plates attract.
pub fn pressure(cfg: &CavityConfig) -> f64 {
    cfg.factor() * (-PI * PI / (480.0 * cfg.length.powi(4)))
}

/// Sign pattern of the diagonal vacuum stress tensor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum TensorConvention {
    /// `diag(1, −1, −1, 3)`: traceless, with T³³ equal to the pressure.
    #[default]
    Traceless,
    /// `diag(1, −1, 1, 3)` exactly as it is usually printed in the source
    /// derivation. Not traceless; kept for side-by-side output only.
    AsPrinted,
}

/// Diagonal vacuum expectation `⟨T^{μν}⟩` in the cavity frame, index order
/// (t, x, y, z) with z normal to the plates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StressTensor {
    pub components: [[f64; 4]; 4],
}

impl StressTensor {
    pub fn from_diagonal(diag: [f64; 4]) -> Self {
        let mut components = [[0.0; 4]; 4];
        for (i, d) in diag.into_iter().enumerate() {
            components[i][i] = d;
        }
        StressTensor { components }
    }

    pub fn diagonal(&self) -> [f64; 4] {
        std::array::from_fn(|i| self.components[i][i])
    }

    /// `η_{μν} T^{μν}` with η = diag(−1, 1, 1, 1).
    pub fn trace(&self) -> f64 {
        (0..4).map(|i| MINKOWSKI[i] * self.components[i][i]).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..4).all(|i| (0..4).all(|j| self.components[i][j] == self.components[j][i]))
    }

    pub fn scaled(&self, factor: f64) -> Self {
        StressTensor {
            components: self.components.map(|row| row.map(|c| c * factor)),
        }
    }
}

/// Traceless parallel-plate stress tensor `(E_C/L)·diag(1, −1, −1, 3)`.
pub fn brown_maclay_tensor(cfg: &CavityConfig) -> StressTensor {
    brown_maclay_tensor_with(cfg, TensorConvention::Traceless)
}

/// Stress tensor in the requested sign convention.
///
/// T⁰⁰ is `energy_per_area / L` and T³³ is `pressure` in both conventions,
/// each evaluated from its own closed form so the identities hold bit for bit.
pub fn brown_maclay_tensor_with(cfg: &CavityConfig, convention: TensorConvention) -> StressTensor {
    let density = energy_per_area(cfg) / cfg.length;
    let yy = match convention {
        TensorConvention::Traceless => -density,
        TensorConvention::AsPrinted => density,
    };
    StressTensor::from_diagonal([density, -density, yy, pressure(cfg)])
}

/// A point in Minkowski space, natural units.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SpacetimePoint {
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SpacetimePoint {
    pub const fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        SpacetimePoint { t, x, y, z }
    }

    /// Coordinates in (t, x, y, z) order.
    pub fn to_array(self) -> [f64; 4] {
        [self.t, self.x, self.y, self.z]
    }

    pub fn from_array(c: [f64; 4]) -> Self {
        SpacetimePoint::new(c[0], c[1], c[2], c[3])
    }

    /// Squared interval `−Δt² + Δx² + Δy² + Δz²`.
    pub fn interval_squared(&self, other: &SpacetimePoint) -> f64 {
        let dt = self.t - other.t;
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        -dt * dt + dx * dx + dy * dy + dz * dz
    }
}

/// Massless flat-space Feynman propagator `1 / (4π² s²)`.
pub fn feynman_propagator(
    x: &SpacetimePoint,
    x2: &SpacetimePoint,
    light_cone_tol: f64,
) -> Result<f64> {
    if !(light_cone_tol > 0.0) {
        return Err(CasimirError::Domain(format!(
            "light-cone tolerance must be positive, got {light_cone_tol}"
        )));
    }
    let s2 = x.interval_squared(x2);
    if !s2.is_finite() {
        return Err(CasimirError::Domain(format!("non-finite interval {s2}")));
    }
    if s2.abs() < light_cone_tol {
        return Err(CasimirError::LightCone {
            interval: s2.abs(),
            tol: light_cone_tol,
        });
    }
    Ok(1.0 / (4.0 * PI * PI * s2))
}
