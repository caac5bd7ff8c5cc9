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

//! Parallel-plate Casimir energy, pressure and stress tensor, three
//! independent regularizations of the underlying mode sum, and the
//! first-order correction to the Casimir force in a uniform gravitational
//! field.
//!
//! Everything is computed in natural units (ħ = c = 1, signature −+++).
//! [`units`] converts to SI.
//!
//! ```
//! use casimir::cavity::{energy_per_area, pressure, CavityConfig};
//!
//! let cfg = CavityConfig::electromagnetic(1.0)?;
//! let pi2 = std::f64::consts::PI.powi(2);
//! assert!((energy_per_area(&cfg) + pi2 / 720.0).abs() < 1e-16);
//! assert!((pressure(&cfg) + pi2 / 240.0).abs() < 1e-16);
//! # Ok::<(), casimir::CasimirError>(())
//! ```
//!
//! The `book/` directory at the repository root walks through the physics
//! and numerics chapter by chapter; its code listings run as doctests.

pub mod cavity;
mod error;
pub mod figures;
pub mod numerics;
pub mod regularization;
pub mod units;
pub mod weakfield;

pub use error::{CasimirError, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/numerics.md")]
    mod numerics {}
    #[doc = include_str!("../../../book/src/regularization.md")]
    mod regularization {}
    #[doc = include_str!("../../../book/src/cavity.md")]
    mod cavity {}
    #[doc = include_str!("../../../book/src/weak-field.md")]
    mod weak_field {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
