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

//! Natural ↔ SI conversion.
//!
//! Inside the library every quantity is in natural units (ħ = c = 1) with
//! lengths in whatever unit the caller picked. Taking lengths in metres, a
//! natural-unit energy-like value (energy, energy per area, pressure, force)
//! becomes SI after one multiplication by ħc. The gravitational parameter is
//! an inverse length, so an SI acceleration maps to it through `g / c²`.

use serde::{Deserialize, Serialize};

/// Reduced Planck constant, J·s (CODATA 2018, exact since the SI redefinition).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;
/// ħc in J·m.
pub const HBAR_C: f64 = HBAR * SPEED_OF_LIGHT;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystem {
    #[default]
    Natural,
    Si,
}

impl UnitSystem {
    /// Factor taking a natural-unit energy-like value to this system.
    pub fn energy_scale(self) -> f64 {
        match self {
            UnitSystem::Natural => 1.0,
            UnitSystem::Si => HBAR_C,
        }
    }

    pub fn energy_from_natural(self, value: f64) -> f64 {
        value * self.energy_scale()
    }

    pub fn energy_to_natural(self, value: f64) -> f64 {
        value / self.energy_scale()
    }

    /// Field strength as an inverse length. In SI the input is an
    /// acceleration in m/s².
    pub fn gravity_to_natural(self, g: f64) -> f64 {
        match self {
            UnitSystem::Natural => g,
            UnitSystem::Si => g / (SPEED_OF_LIGHT * SPEED_OF_LIGHT),
        }
    }

    pub fn gravity_from_natural(self, g: f64) -> f64 {
        match self {
            UnitSystem::Natural => g,
            UnitSystem::Si => g * SPEED_OF_LIGHT * SPEED_OF_LIGHT,
        }
    }

    pub fn length_unit(self) -> &'static str {
        match self {
            UnitSystem::Natural => "1 (natural)",
            UnitSystem::Si => "m",
        }
    }
}
