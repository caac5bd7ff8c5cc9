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

//! `casimir`: Casimir observables, regularization cross-checks, weak-field
//! gravity corrections and figure data from the command line.
//!
//! Exit codes: 0 success, 2 invalid arguments, 3 numerical failure,
//! 4 I/O failure.

mod output;

use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

use casimir::cavity::{
    brown_maclay_tensor_with, energy_density, energy_per_area, pressure, CavityConfig,
    TensorConvention,
};
use casimir::figures::{figure_table, FigureSpec, Sweep};
use casimir::numerics::QuadratureSpec;
use casimir::regularization::{
    compare_schemes_with, relative_discrepancy, riemann_zeta, DEFAULT_IMAGE_TERMS,
};
use casimir::units::UnitSystem;
use casimir::weakfield::{
    delta_energy_closed, delta_energy_quadrature, delta_force_per_area, fermi_force_per_area,
    fractional_correction, isotropic_force_per_area, PlateApparatus, WeakField,
};
use casimir::CasimirError;
use clap::{Parser, Subcommand, ValueEnum};

use output::num;

#[derive(Parser, Debug)]
#[command(
    name = "casimir",
    version,
    about = "Parallel-plate Casimir effect and its weak-field gravity correction"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one flat-space Casimir quantity.
    Compute(ComputeArgs),
    /// Gravitational energy shift and force corrections for a tilted apparatus.
    Gravity(GravityArgs),
    /// Write the data series behind one of the six standard figures.
    Figure(FigureArgs),
    /// Compare the image-sum, Abel–Plana and zeta regularizations.
    Regularize(RegularizeArgs),
    /// Riemann zeta function for real s > 1.
    Zeta(ZetaArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Units {
    Natural,
    Si,
}

impl From<Units> for UnitSystem {
    fn from(u: Units) -> Self {
        match u {
            Units::Natural => UnitSystem::Natural,
            Units::Si => UnitSystem::Si,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Quantity {
    EnergyDensity,
    EnergyPerArea,
    Pressure,
    StressTensor,
}

#[derive(clap::Args, Debug)]
struct ComputeArgs {
    #[arg(value_enum)]
    quantity: Quantity,
    /// Plate separation (metres with --units si).
    #[arg(long = "L", allow_negative_numbers = true)]
    length: f64,
    /// 1 for a scalar field, 2 for the electromagnetic field.
    #[arg(long, default_value_t = 2)]
    polarizations: u8,
    #[arg(long, value_enum, default_value_t = Units::Natural)]
    units: Units,
    /// Print the stress tensor with the printed diag(1, -1, 1, 3) signs.
    #[arg(long)]
    paper_literal: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Method {
    Closed,
    Quadrature,
}

#[derive(clap::Args, Debug)]
struct GravityArgs {
    /// Plate separation.
    #[arg(long = "L", allow_negative_numbers = true)]
    length: f64,
    /// Plate side; the area is a².
    #[arg(long, allow_negative_numbers = true)]
    a: f64,
    /// Offset of the apparatus center along the plate normal.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    xi0: f64,
    /// Tilt from the direction of gravity, radians.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    alpha: f64,
    /// Field strength: inverse length (natural) or m/s² (si).
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    g: f64,
    #[arg(long, default_value_t = 2)]
    polarizations: u8,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    method: Method,
    #[arg(long, value_enum, default_value_t = Units::Natural)]
    units: Units,
    /// Relative tolerance for --method quadrature.
    #[arg(long, default_value_t = QuadratureSpec::DEFAULT_TOLERANCE)]
    rtol: f64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Csv,
    Json,
}

#[derive(clap::Args, Debug)]
#[command(
    after_help = "Defaults: L in [0.5, 5] and A in [1, 10] with 200 points, \
    --A-list 1,2,4, --L-list 0.5,1,2, g = 1, two polarizations. \
    These ranges are conventions of this tool and are echoed as '#' metadata in CSV output."
)]
struct FigureArgs {
    /// Figure number, 1 to 6.
    #[arg(long)]
    id: u8,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Samples along the swept axis.
    #[arg(long, default_value_t = 200)]
    points: usize,
    #[arg(long = "Lmin", default_value_t = FigureSpec::DEFAULT_SEPARATIONS.min, allow_negative_numbers = true)]
    l_min: f64,
    #[arg(long = "Lmax", default_value_t = FigureSpec::DEFAULT_SEPARATIONS.max, allow_negative_numbers = true)]
    l_max: f64,
    #[arg(long = "Amin", default_value_t = FigureSpec::DEFAULT_AREAS.min, allow_negative_numbers = true)]
    a_min: f64,
    #[arg(long = "Amax", default_value_t = FigureSpec::DEFAULT_AREAS.max, allow_negative_numbers = true)]
    a_max: f64,
    /// Areas for figure 4, comma separated.
    #[arg(long = "A-list", value_delimiter = ',', default_values_t = FigureSpec::DEFAULT_AREA_LIST)]
    a_list: Vec<f64>,
    /// Separations for figure 5, comma separated.
    #[arg(long = "L-list", value_delimiter = ',', default_values_t = FigureSpec::DEFAULT_SEPARATION_LIST)]
    l_list: Vec<f64>,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    g: f64,
    #[arg(long, default_value_t = 2)]
    polarizations: u8,
    #[arg(long, value_enum, default_value_t = Units::Natural)]
    units: Units,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Scheme {
    ImageSum,
    AbelPlana,
    Zeta,
}

impl Scheme {
    fn name(self) -> &'static str {
        match self {
            Scheme::ImageSum => "image-sum",
            Scheme::AbelPlana => "abel-plana",
            Scheme::Zeta => "zeta",
        }
    }
}

#[derive(clap::Args, Debug)]
struct RegularizeArgs {
    #[arg(long = "L", allow_negative_numbers = true)]
    length: f64,
    /// Only print this scheme's row (the discrepancy still covers all three).
    #[arg(long, value_enum)]
    scheme: Option<Scheme>,
    /// Image-sum terms.
    #[arg(long, default_value_t = DEFAULT_IMAGE_TERMS)]
    n_terms: usize,
    /// Abel–Plana quadrature relative tolerance.
    #[arg(long, default_value_t = 1e-12)]
    rtol: f64,
}

#[derive(clap::Args, Debug)]
struct ZetaArgs {
    #[arg(long, allow_negative_numbers = true)]
    s: f64,
}

#[derive(Debug)]
enum Failure {
    Argument(String),
    Numerical(String),
    Io(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Argument(_) => 2,
            Failure::Numerical(_) => 3,
            Failure::Io(_) => 4,
        }
    }
}

impl From<CasimirError> for Failure {
    fn from(e: CasimirError) -> Self {
        if e.is_argument_error() {
            Failure::Argument(e.to_string())
        } else {
            Failure::Numerical(e.to_string())
        }
    }
}

/// Overflow or underflow in a closed form is a numerical failure, not a result.
fn checked(label: &str, v: f64) -> Result<String, Failure> {
    if v.is_finite() {
        Ok(num(v))
    } else {
        Err(Failure::Numerical(format!(
            "{label} evaluated to {v}; inputs are outside the representable range"
        )))
    }
}

fn tolerance(rtol: f64) -> Result<QuadratureSpec, Failure> {
    QuadratureSpec::with_tolerance(rtol).map_err(|e| Failure::Argument(e.to_string()))
}

fn compute(args: &ComputeArgs) -> Result<(), Failure> {
    let units = UnitSystem::from(args.units);
    let cfg = CavityConfig::new(args.length, args.polarizations)?;
    let scale = units.energy_scale();
    let (label, unit) = match (args.quantity, units) {
        (Quantity::EnergyDensity, UnitSystem::Si) => ("energy_density", "J/m^3"),
        (Quantity::EnergyPerArea, UnitSystem::Si) => ("energy_per_area", "J/m^2"),
        (Quantity::Pressure, UnitSystem::Si) => ("pressure", "Pa"),
        (Quantity::StressTensor, UnitSystem::Si) => ("stress_tensor", "Pa"),
        (Quantity::EnergyDensity, _) => ("energy_density", "natural"),
        (Quantity::EnergyPerArea, _) => ("energy_per_area", "natural"),
        (Quantity::Pressure, _) => ("pressure", "natural"),
        (Quantity::StressTensor, _) => ("stress_tensor", "natural"),
    };
    match args.quantity {
        Quantity::StressTensor => {
            let convention = if args.paper_literal {
                TensorConvention::AsPrinted
            } else {
                TensorConvention::Traceless
            };
            let tensor = brown_maclay_tensor_with(&cfg, convention).scaled(scale);
            for row in tensor.components {
                for c in row {
                    checked(label, c)?;
                }
            }
            println!("# {label} T^{{mu nu}} [{unit}], index order (t, x, y, z), convention {convention:?}");
            for row in tensor.components {
                println!("{}", row.map(num).join(" "));
            }
            println!("# trace eta_mu_nu T^mu_nu = {}", num(tensor.trace()));
        }
        q => {
            let value = match q {
                // The density is quoted per polarization.
                Quantity::EnergyDensity => energy_density(cfg.length())?,
                Quantity::EnergyPerArea => energy_per_area(&cfg),
                _ => pressure(&cfg),
            };
            println!("{label} = {} [{unit}]", checked(label, value * scale)?);
        }
    }
    Ok(())
}

fn gravity(args: &GravityArgs) -> Result<(), Failure> {
    let units = UnitSystem::from(args.units);
    let app = PlateApparatus::new(
        args.a,
        args.length,
        args.xi0,
        args.alpha,
        args.polarizations,
    )?;
    let field = WeakField::new(units.gravity_to_natural(args.g))?;
    let cfg = app.cavity();
    let scale = units.energy_scale();
    let (energy_unit, pressure_unit) = match units {
        UnitSystem::Si => ("J", "Pa"),
        UnitSystem::Natural => ("natural", "natural"),
    };
    let closed = delta_energy_closed(&app, &field);
    println!("method = {:?}", args.method);
    match args.method {
        Method::Closed => println!(
            "delta_E_g = {} [{energy_unit}]",
            checked("delta_E_g", closed * scale)?
        ),
        Method::Quadrature => {
            let spec = tolerance(args.rtol)?;
            let quad = delta_energy_quadrature(&app, &field, &spec)?;
            println!(
                "delta_E_g = {} [{energy_unit}]",
                checked("delta_E_g", quad.value * scale)?
            );
            println!(
                "delta_E_g_error_bound = {} [{energy_unit}]",
                checked("delta_E_g_error_bound", quad.error_bound * scale)?
            );
            println!(
                "delta_E_g_closed = {} [{energy_unit}]",
                checked("delta_E_g_closed", closed * scale)?
            );
            println!(
                "relative_discrepancy = {}",
                checked(
                    "relative_discrepancy",
                    relative_discrepancy(quad.value, closed)
                )?
            );
        }
    }
    println!(
        "delta_F_per_A = {} [{pressure_unit}]",
        checked("delta_F_per_A", delta_force_per_area(&field, &cfg) * scale)?
    );
    println!(
        "isotropic_F_per_A = {} [{pressure_unit}]",
        checked(
            "isotropic_F_per_A",
            isotropic_force_per_area(&field, &cfg) * scale
        )?
    );
    println!(
        "fermi_F_per_A = {} [{pressure_unit}]",
        checked("fermi_F_per_A", fermi_force_per_area(&field, &cfg) * scale)?
    );
    println!(
        "fractional_correction = {}",
        checked("fractional_correction", fractional_correction(&field, &cfg))?
    );
    for w in app.regime_warnings(&field) {
        eprintln!("warning: {w}");
    }
    Ok(())
}

fn figure(args: &FigureArgs) -> Result<(), Failure> {
    let spec = FigureSpec {
        id: args.id,
        separations: Sweep {
            min: args.l_min,
            max: args.l_max,
            points: args.points,
        },
        areas: Sweep {
            min: args.a_min,
            max: args.a_max,
            points: args.points,
        },
        area_list: args.a_list.clone(),
        separation_list: args.l_list.clone(),
        g: args.g,
        polarizations: args.polarizations,
        units: args.units.into(),
    };
    // Every spec problem is the caller's.
    spec.validate()
        .map_err(|e| Failure::Argument(e.to_string()))?;
    let table = figure_table(&spec)?;
    for (name, value) in table
        .rows
        .iter()
        .flat_map(|row| table.columns.iter().zip(row))
    {
        checked(name, *value)?;
    }
    let written = match args.format {
        Format::Csv => output::write_csv(&table, &args.out),
        Format::Json => output::write_json(&table, &args.out),
    };
    written.map_err(|e| Failure::Io(format!("cannot write {}: {e}", args.out.display())))?;
    println!("wrote {} rows to {}", table.rows.len(), args.out.display());
    Ok(())
}

fn regularize(args: &RegularizeArgs) -> Result<(), Failure> {
    let quad = tolerance(args.rtol)?;
    if args.n_terms == 0 {
        return Err(Failure::Argument("--n-terms must be at least 1".into()));
    }
    let report = compare_schemes_with(args.length, args.n_terms, &quad)?;
    let reference = -PI * PI / (1440.0 * args.length.powi(3));
    println!(
        "# scalar Casimir energy per area at L = {}",
        num(args.length)
    );
    println!("scheme,value,error_bound,relative_error_vs_closed_form");
    for v in &report.values {
        if args.scheme.is_some_and(|s| s.name() != v.scheme.name()) {
            continue;
        }
        println!(
            "{},{},{},{}",
            v.scheme.name(),
            num(v.value),
            num(v.error_bound),
            num(relative_discrepancy(v.value, reference))
        );
    }
    println!(
        "max_relative_discrepancy = {}",
        num(report.max_relative_discrepancy)
    );
    Ok(())
}

fn zeta(args: &ZetaArgs) -> Result<(), Failure> {
    let z = riemann_zeta(args.s).map_err(|e| Failure::Argument(e.to_string()))?;
    println!("zeta({}) = {}", args.s, num(z));
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("error")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Help and version exit 0, usage errors exit 2.
        Err(e) => e.exit(),
    };
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Gravity(a) => gravity(a),
        Command::Figure(a) => figure(a),
        Command::Regularize(a) => regularize(a),
        Command::Zeta(a) => zeta(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (Failure::Argument(msg) | Failure::Numerical(msg) | Failure::Io(msg)) = &f;
            eprintln!("error: {msg}");
            ExitCode::from(f.exit_code())
        }
    }
}
