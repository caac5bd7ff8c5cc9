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

//! Data series behind the six standard plots.
//!
//! | id | x axis | columns |
//! |----|--------|---------|
//! | 1  | L | scalar energy density ε(L) |
//! | 2  | L | pressure P(L) |
//! | 3  | L | energy per area E_C(L) |
//! | 4  | L | ΔF = g E_C A, one column per area |
//! | 5  | A | ΔF = g E_C A, one column per separation |
//! | 6  | L | ΔF/A and F^F/A |
//!
//! Axis ranges are not fixed by the physics; the defaults below are
//! recorded in every table's metadata.

use serde::{Deserialize, Serialize};

use crate::cavity::{energy_density, energy_per_area, pressure, CavityConfig};
use crate::error::{CasimirError, Result};
use crate::units::UnitSystem;
use crate::weakfield::{delta_force_per_area, fermi_force_per_area, WeakField};

/// Evenly spaced samples of a closed range.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sweep {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl Sweep {
    pub fn new(min: f64, max: f64, points: usize) -> Result<Self> {
        let sweep = Sweep { min, max, points };
        sweep.validate()?;
        Ok(sweep)
    }

    fn validate(&self) -> Result<()> {
        if !(self.min.is_finite() && self.max.is_finite()) || self.min >= self.max {
            return Err(CasimirError::Domain(format!(
                "sweep needs finite min < max, got [{}, {}]",
                self.min, self.max
            )));
        }
        if self.points < 2 {
            return Err(CasimirError::Domain(format!(
                "sweep needs at least 2 points, got {}",
                self.points
            )));
        }
        Ok(())
    }

    pub fn values(&self) -> Vec<f64> {
        let step = (self.max - self.min) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| {
                if i + 1 == self.points {
                    self.max
                } else {
                    self.min + step * i as f64
                }
            })
            .collect()
    }
}

/// Parameters for one figure. Fields a figure does not use are ignored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureSpec {
    pub id: u8,
    pub separations: Sweep,
    pub areas: Sweep,
    pub area_list: Vec<f64>,
    pub separation_list: Vec<f64>,
    /// Field strength, in the units of `units` (m/s² for SI).
    pub g: f64,
    pub polarizations: u8,
    pub units: UnitSystem,
}

impl FigureSpec {
    pub const DEFAULT_SEPARATIONS: Sweep = Sweep {
        min: 0.5,
        max: 5.0,
        points: 200,
    };
    pub const DEFAULT_AREAS: Sweep = Sweep {
        min: 1.0,
        max: 10.0,
        points: 200,
    };
    pub const DEFAULT_AREA_LIST: [f64; 3] = [1.0, 2.0, 4.0];
    pub const DEFAULT_SEPARATION_LIST: [f64; 3] = [0.5, 1.0, 2.0];

    /// Defaults for figure `id`: L in [0.5, 5] (200 points), A in [1, 10]
    /// (200 points), areas {1, 2, 4}, separations {0.5, 1, 2}, g = 1, two
    /// polarizations, natural units.
    pub fn with_defaults(id: u8) -> Result<Self> {
        let spec = FigureSpec {
            id,
            separations: Self::DEFAULT_SEPARATIONS,
            areas: Self::DEFAULT_AREAS,
            area_list: Self::DEFAULT_AREA_LIST.to_vec(),
            separation_list: Self::DEFAULT_SEPARATION_LIST.to_vec(),
            g: 1.0,
            polarizations: 2,
            units: UnitSystem::Natural,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(1..=6).contains(&self.id) {
            return Err(CasimirError::Domain(format!(
                "figure id must be 1..=6, got {}",
                self.id
            )));
        }
        self.separations.validate()?;
        self.areas.validate()?;
        if self.separations.min <= 0.0 {
            return Err(CasimirError::Geometry(format!(
                "separations must be positive, got min {}",
                self.separations.min
            )));
        }
        if self.areas.min <= 0.0 {
            return Err(CasimirError::Geometry(format!(
                "areas must be positive, got min {}",
                self.areas.min
            )));
        }
        if self.id == 4 && self.area_list.is_empty() {
            return Err(CasimirError::Domain(
                "figure 4 needs at least one area".into(),
            ));
        }
        if self.id == 5 && self.separation_list.is_empty() {
            return Err(CasimirError::Domain(
                "figure 5 needs at least one separation".into(),
            ));
        }
        if let Some(bad) = self
            .area_list
            .iter()
            .chain(&self.separation_list)
            .find(|v| !(v.is_finite() && **v > 0.0))
        {
            return Err(CasimirError::Geometry(format!(
                "list entries must be positive, got {bad}"
            )));
        }
        CavityConfig::new(1.0, self.polarizations)?;
        WeakField::new(self.g)?;
        Ok(())
    }
}

/// A rectangular table of numbers with named columns and free-form metadata.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FigureTable {
    pub metadata: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl FigureTable {
    pub fn column(&self, index: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r[index]).collect()
    }
}

/// Evaluates the series for `spec.id`.
pub fn figure_table(spec: &FigureSpec) -> Result<FigureTable> {
    spec.validate()?;
    let units = spec.units;
    let scale = units.energy_scale();
    let field = WeakField::new(units.gravity_to_natural(spec.g))?;
    let cavity = |l: f64| CavityConfig::new(l, spec.polarizations);
    let list = |values: &[f64]| {
        values
            .iter()
            .map(|v| format!("{v}"))
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut metadata = vec![
        ("figure".to_string(), spec.id.to_string()),
        ("units".to_string(), format!("{units:?}").to_lowercase()),
        ("length_unit".to_string(), units.length_unit().to_string()),
        ("polarizations".to_string(), spec.polarizations.to_string()),
    ];
    let sweep_meta = |name: &str, s: &Sweep| {
        (
            name.to_string(),
            format!("[{}, {}] x {}", s.min, s.max, s.points),
        )
    };

    let (columns, rows): (Vec<String>, Vec<Vec<f64>>) = match spec.id {
        1..=3 => {
            metadata.push(sweep_meta("L_sweep", &spec.separations));
            let name = match spec.id {
                1 => "energy_density",
                2 => "pressure",
                _ => "energy_per_area",
            };
            let rows = spec
                .separations
                .values()
                .into_iter()
                .map(|l| {
                    let cfg = cavity(l)?;
                    let v = match spec.id {
                        1 => energy_density(l)?,
                        2 => pressure(&cfg),
                        _ => energy_per_area(&cfg),
                    };
                    Ok(vec![l, v * scale])
                })
                .collect::<Result<_>>()?;
            (vec!["L".into(), name.into()], rows)
        }
        4 => {
            metadata.push(sweep_meta("L_sweep", &spec.separations));
            metadata.push(("A_list".into(), list(&spec.area_list)));
            metadata.push(("g".into(), spec.g.to_string()));
            let mut columns = vec!["L".to_string()];
            columns.extend(spec.area_list.iter().map(|a| format!("delta_F(A={a})")));
            let rows = spec
                .separations
                .values()
                .into_iter()
                .map(|l| {
                    let per_area = delta_force_per_area(&field, &cavity(l)?);
                    let mut row = vec![l];
                    row.extend(spec.area_list.iter().map(|a| per_area * a * scale));
                    Ok(row)
                })
                .collect::<Result<_>>()?;
            (columns, rows)
        }
        5 => {
            metadata.push(sweep_meta("A_sweep", &spec.areas));
            metadata.push(("L_list".into(), list(&spec.separation_list)));
            metadata.push(("g".into(), spec.g.to_string()));
            let per_area: Vec<f64> = spec
                .separation_list
                .iter()
                .map(|&l| Ok(delta_force_per_area(&field, &cavity(l)?)))
                .collect::<Result<_>>()?;
            let mut columns = vec!["A".to_string()];
            columns.extend(
                spec.separation_list
                    .iter()
                    .map(|l| format!("delta_F(L={l})")),
            );
            let rows = spec
                .areas
                .values()
                .into_iter()
                .map(|a| {
                    let mut row = vec![a];
                    row.extend(per_area.iter().map(|f| f * a * scale));
                    row
                })
                .collect();
            (columns, rows)
        }
        6 => {
            metadata.push(sweep_meta("L_sweep", &spec.separations));
            metadata.push(("g".into(), spec.g.to_string()));
            let rows = spec
                .separations
                .values()
                .into_iter()
                .map(|l| {
                    let cfg = cavity(l)?;
                    Ok(vec![
                        l,
                        delta_force_per_area(&field, &cfg) * scale,
                        fermi_force_per_area(&field, &cfg) * scale,
                    ])
                })
                .collect::<Result<_>>()?;
            (
                vec!["L".into(), "delta_F_per_A".into(), "fermi_F_per_A".into()],
                rows,
            )
        }
        _ => unreachable!("validated"),
    };
    Ok(FigureTable {
        metadata,
        columns,
        rows,
    })
}

/// Least-squares slope of `ln|y|` against `ln x`.
pub fn log_log_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.abs().ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}
