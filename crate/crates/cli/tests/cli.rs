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

use std::f64::consts::PI;
use std::path::Path;
use std::process::{Command, Output};

use casimir::cavity::{energy_density, energy_per_area, pressure, CavityConfig};
use casimir::figures::log_log_slope;
use casimir::weakfield::{delta_force_per_area, fermi_force_per_area, WeakField};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_casimir"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

/// Value of a `key = value [unit]` line.
fn field(text: &str, key: &str) -> f64 {
    let line = text
        .lines()
        .find(|l| l.starts_with(&format!("{key} = ")))
        .unwrap_or_else(|| panic!("no {key} in:\n{text}"));
    line.split_whitespace().nth(2).unwrap().parse().unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs())
}

struct Csv {
    metadata: Vec<String>,
    header: Vec<String>,
    rows: Vec<Vec<f64>>,
}

fn read_csv(path: &Path) -> Csv {
    let text = std::fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let mut metadata = Vec::new();
    let header = loop {
        let line = lines.next().expect("header");
        if let Some(meta) = line.strip_prefix('#') {
            metadata.push(meta.trim().to_string());
        } else {
            break line.split(',').map(str::to_string).collect::<Vec<_>>();
        }
    };
    let rows = lines
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    Csv {
        metadata,
        header,
        rows,
    }
}

fn column(rows: &[Vec<f64>], j: usize) -> Vec<f64> {
    rows.iter().map(|r| r[j]).collect()
}

#[test]
fn compute_si_pressure_at_one_micron() {
    let out = run(&[
        "compute",
        "pressure",
        "--L",
        "1e-6",
        "--polarizations",
        "2",
        "--units",
        "si",
    ]);
    assert!(out.status.success());
    let p = field(&stdout(&out), "pressure");
    let hbar_c = 197.326_980_4e6 * 1.602_176_634e-19 * 1e-15;
    assert!(rel(p, -PI * PI * hbar_c / 240.0 * 1e24) < 1e-3);
    assert!((p + 1.3001e-3).abs() < 1e-7);
}

#[test]
fn compute_natural_energy_per_area() {
    let out = run(&["compute", "energy-per-area", "--L", "1"]);
    assert!(rel(field(&stdout(&out), "energy_per_area"), -PI * PI / 720.0) < 1e-15);
    let out = run(&["compute", "energy-density", "--L", "2"]);
    assert!(rel(field(&stdout(&out), "energy_density"), -PI * PI / 23_040.0) < 1e-15);
}

#[test]
fn compute_stress_tensor_table() {
    let out = run(&["compute", "stress-tensor", "--L", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<Vec<f64>> = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 4);
    assert!(rel(rows[3][3], -PI * PI / 240.0) < 1e-15);
    assert!(rel(rows[2][2], PI * PI / 720.0) < 1e-15);
    let literal = stdout(&run(&[
        "compute",
        "stress-tensor",
        "--L",
        "1",
        "--paper-literal",
    ]));
    assert!(literal.contains("AsPrinted"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        run(&["compute", "pressure", "--L", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["compute", "pressure", "--L", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["compute", "pressure"]).status.code(), Some(2));
    assert_eq!(
        run(&["compute", "pressure", "--L", "1", "--polarizations", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    assert_eq!(
        run(&["compute", "pressure", "--L", "1e-90"]).status.code(),
        Some(3)
    );
    assert_eq!(
        run(&[
            "gravity",
            "--L",
            "0.1",
            "--a",
            "1",
            "--method",
            "quadrature",
            "--rtol",
            "0.5"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(run(&["regularize", "--L", "0"]).status.code(), Some(2));
    assert_eq!(
        run(&["regularize", "--L", "1", "--n-terms", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["zeta", "--s", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn gravity_closed_and_quadrature() {
    let base = [
        "gravity", "--L", "0.1", "--a", "1", "--xi0", "0.5", "--alpha", "0", "--g", "1",
    ];
    let closed = stdout(&run(&base));
    let expected = PI * PI * 1000.0 / 1440.0;
    assert!(rel(field(&closed, "delta_E_g"), expected) < 1e-14);
    assert!(rel(field(&closed, "delta_F_per_A"), -PI * PI * 1000.0 / 720.0) < 1e-14);
    assert!(rel(field(&closed, "fermi_F_per_A"), PI * PI * 1000.0 / 720.0) < 1e-14);
    assert!(
        rel(
            field(&closed, "isotropic_F_per_A"),
            PI * PI * 1000.0 / 360.0
        ) < 1e-14
    );
    assert!(rel(field(&closed, "fractional_correction"), 0.1 / 3.0) < 1e-14);

    let mut quad_args = base.to_vec();
    quad_args.extend(["--method", "quadrature"]);
    let quad = stdout(&run(&quad_args));
    assert!(rel(field(&quad, "delta_E_g"), expected) < 1e-6);
    assert!(field(&quad, "relative_discrepancy") <= 1e-6);

    let tilted = stdout(&run(&[
        "gravity",
        "--L",
        "0.1",
        "--a",
        "1",
        "--xi0",
        "0.5",
        "--alpha",
        "1.5707963267948966",
    ]));
    assert_eq!(field(&tilted, "delta_E_g"), 0.0);
}

#[test]
fn gravity_reports_regime_warnings() {
    let out = run(&["gravity", "--L", "1", "--a", "2", "--xi0", "1", "--g", "1"]);
    assert!(out.status.success());
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("warning"), "{err}");
}

#[test]
fn gravity_si_earth_field() {
    let out = run(&[
        "gravity", "--L", "1e-6", "--a", "1e-2", "--xi0", "0", "--g", "9.8", "--units", "si",
    ]);
    let text = stdout(&out);
    let fermi = field(&text, "fermi_F_per_A");
    let g_nat = 9.8 / 299_792_458.0f64.powi(2);
    let e_c = energy_per_area(&CavityConfig::electromagnetic(1e-6).unwrap())
        * 1.054_571_817e-34
        * 299_792_458.0;
    assert!(fermi > 0.0 && fermi < 1e-15);
    assert!(rel(fermi, -g_nat * e_c) < 1e-12);
}

#[test]
fn figure_two_csv_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig2.csv");
    let out = run(&[
        "figure",
        "--id",
        "2",
        "--out",
        path.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let csv = read_csv(&path);
    assert_eq!(csv.header, ["L", "pressure"]);
    assert!(csv.metadata.iter().any(|m| m.starts_with("L_sweep")));
    assert_eq!(csv.rows.len(), 200);
    let l = column(&csv.rows, 0);
    let p = column(&csv.rows, 1);
    assert!(l.windows(2).all(|w| w[1] > w[0]));
    assert!(p.iter().all(|v| *v < 0.0) && p.windows(2).all(|w| w[1] > w[0]));
    assert!((log_log_slope(&l, &p) + 4.0).abs() < 1e-6);
}

#[test]
fn csv_cells_reproduce_formulas() {
    let dir = tempfile::tempdir().unwrap();
    let field_g = WeakField::new(1.0).unwrap();
    for id in 1..=6 {
        let path = dir.path().join(format!("fig{id}.csv"));
        let out = run(&[
            "figure",
            "--id",
            &id.to_string(),
            "--out",
            path.to_str().unwrap(),
            "--points",
            "37",
        ]);
        assert!(out.status.success());
        let csv = read_csv(&path);
        // At least 15 significant digits in every cell.
        let raw = std::fs::read_to_string(&path).unwrap();
        let first_cell = raw.lines().nth(csv.metadata.len() + 1).unwrap();
        let mantissa = first_cell
            .split(',')
            .next()
            .unwrap()
            .split('e')
            .next()
            .unwrap();
        assert!(mantissa.chars().filter(char::is_ascii_digit).count() >= 15);
        for row in &csv.rows {
            let x = row[0];
            let expected: Vec<f64> = match id {
                1 => vec![energy_density(x).unwrap()],
                2 => vec![pressure(&CavityConfig::electromagnetic(x).unwrap())],
                3 => vec![energy_per_area(&CavityConfig::electromagnetic(x).unwrap())],
                4 => [1.0, 2.0, 4.0]
                    .iter()
                    .map(|a| {
                        delta_force_per_area(&field_g, &CavityConfig::electromagnetic(x).unwrap())
                            * a
                    })
                    .collect(),
                5 => [0.5, 1.0, 2.0]
                    .iter()
                    .map(|&l| {
                        delta_force_per_area(&field_g, &CavityConfig::electromagnetic(l).unwrap())
                            * x
                    })
                    .collect(),
                _ => {
                    let cfg = CavityConfig::electromagnetic(x).unwrap();
                    vec![
                        delta_force_per_area(&field_g, &cfg),
                        fermi_force_per_area(&field_g, &cfg),
                    ]
                }
            };
            assert_eq!(row.len(), expected.len() + 1);
            for (got, want) in row[1..].iter().zip(&expected) {
                assert!(rel(*got, *want) <= 1e-12, "fig {id}: {got} vs {want}");
            }
        }
    }
}

#[test]
fn figure_five_linear_in_area() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig5.csv");
    let out = run(&[
        "figure",
        "--id",
        "5",
        "--out",
        path.to_str().unwrap(),
        "--L-list",
        "0.5,3",
        "--g",
        "0.2",
    ]);
    assert!(out.status.success());
    let csv = read_csv(&path);
    assert_eq!(csv.header, ["A", "delta_F(L=0.5)", "delta_F(L=3)"]);
    for (j, l) in [0.5, 3.0].into_iter().enumerate() {
        let slope = 0.2 * energy_per_area(&CavityConfig::electromagnetic(l).unwrap());
        for row in &csv.rows {
            assert!(rel(row[j + 1], slope * row[0]) <= 1e-15);
        }
    }
}

#[test]
fn figure_four_slopes_and_six_mirror_in_json() {
    let dir = tempfile::tempdir().unwrap();
    let p4 = dir.path().join("fig4.csv");
    assert!(run(&[
        "figure",
        "--id",
        "4",
        "--out",
        p4.to_str().unwrap(),
        "--A-list",
        "1,3"
    ])
    .status
    .success());
    let csv = read_csv(&p4);
    assert_eq!(csv.header.len(), 3);
    for j in 1..3 {
        assert!((log_log_slope(&column(&csv.rows, 0), &column(&csv.rows, j)) + 3.0).abs() < 1e-6);
    }

    let p6 = dir.path().join("fig6.json");
    assert!(run(&[
        "figure",
        "--id",
        "6",
        "--out",
        p6.to_str().unwrap(),
        "--format",
        "json"
    ])
    .status
    .success());
    let rows: Vec<serde_json::Map<String, serde_json::Value>> =
        serde_json::from_str(&std::fs::read_to_string(&p6).unwrap()).unwrap();
    assert_eq!(rows.len(), 200);
    for row in &rows {
        let keys: Vec<&str> = row.keys().map(String::as_str).collect();
        assert_eq!(keys, ["L", "delta_F_per_A", "fermi_F_per_A"]);
        assert_eq!(
            row["delta_F_per_A"].as_f64().unwrap(),
            -row["fermi_F_per_A"].as_f64().unwrap()
        );
    }
}

#[test]
fn figure_errors() {
    let dir = tempfile::tempdir().unwrap();
    let ok = dir.path().join("x.csv");
    let bad_dir = dir.path().join("missing").join("x.csv");
    assert_eq!(
        run(&["figure", "--id", "2", "--out", bad_dir.to_str().unwrap()])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        run(&["figure", "--id", "7", "--out", ok.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "figure",
            "--id",
            "1",
            "--out",
            ok.to_str().unwrap(),
            "--points",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&[
            "figure",
            "--id",
            "1",
            "--out",
            ok.to_str().unwrap(),
            "--Lmin",
            "2",
            "--Lmax",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn regularize_reports() {
    let text = stdout(&run(&["regularize", "--L", "1"]));
    assert!(field(&text, "max_relative_discrepancy") <= 1e-8);
    assert_eq!(
        text.lines()
            .filter(|l| l.starts_with("image-sum,")
                || l.starts_with("abel-plana,")
                || l.starts_with("zeta,"))
            .count(),
        3
    );

    let single = stdout(&run(&[
        "regularize",
        "--L",
        "1",
        "--scheme",
        "image-sum",
        "--n-terms",
        "1",
    ]));
    let row = single
        .lines()
        .find(|l| l.starts_with("image-sum,"))
        .unwrap();
    let cells: Vec<f64> = row.split(',').skip(1).map(|c| c.parse().unwrap()).collect();
    assert!(rel(cells[1], 1.0 / (48.0 * PI * PI)) < 1e-15);
    assert!(!single.contains("abel-plana,"));
}

#[test]
fn zeta_command() {
    let text = stdout(&run(&["zeta", "--s", "4"]));
    let v: f64 = text.split(" = ").nth(1).unwrap().trim().parse().unwrap();
    assert!((v - PI.powi(4) / 90.0).abs() < 1e-14);
}
