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

use casimir::cavity::{
    brown_maclay_tensor, energy_density, energy_per_area, feynman_propagator, pressure,
    CavityConfig, SpacetimePoint, DEFAULT_LIGHT_CONE_TOL,
};
use casimir::figures::log_log_slope;
use casimir::numerics::{
    central_diff, integrate_1d, tail_bounded_power_sum, Interval, QuadratureSpec,
};
use casimir::regularization::{
    energy_density_image_sum, energy_per_area_abel_plana, energy_per_area_image_sum,
};
use casimir::weakfield::{
    apparatus_to_lab, delta_energy_closed, delta_energy_quadrature, delta_force_per_area,
    fermi_force_per_area, isotropic_force_per_area, lab_to_apparatus, PlateApparatus, WeakField,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn quadrature_is_linear(a in -3.0f64..3.0, b in -3.0f64..3.0, lo in -2.0f64..0.0, width in 0.1f64..4.0) {
        let spec = QuadratureSpec::default();
        let iv = Interval::finite(lo, lo + width).unwrap();
        let f = |x: f64| (1.3 * x).sin();
        let g = |x: f64| (-x * x).exp();
        let combined = integrate_1d(|x| a * f(x) + b * g(x), iv, &spec).unwrap().value;
        let separate = a * integrate_1d(f, iv, &spec).unwrap().value + b * integrate_1d(g, iv, &spec).unwrap().value;
        let scale = a.abs() * width + b.abs() * width;
        prop_assert!((combined - separate).abs() <= 2.0 * spec.relative_tolerance * scale.max(1e-300));
    }

    #[test]
    fn polynomials_integrate_exactly(coeffs in prop::collection::vec(-2.0f64..2.0, 1..32)) {
        // Degree ≤ 31 = 2·16 − 1; exact antiderivative on [0, 1].
        let spec = QuadratureSpec::default();
        let poly = |x: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c);
        let exact: f64 = coeffs.iter().enumerate().map(|(k, c)| c / (k as f64 + 1.0)).sum();
        let abs_scale: f64 = coeffs.iter().map(|c| c.abs()).sum();
        let v = integrate_1d(poly, Interval::finite(0.0, 1.0).unwrap(), &spec).unwrap().value;
        prop_assert!((v - exact).abs() <= 1e-14 * abs_scale);
    }

    #[test]
    fn propagator_is_symmetric(a in prop::array::uniform4(-5.0f64..5.0), b in prop::array::uniform4(-5.0f64..5.0)) {
        let x = SpacetimePoint::from_array(a);
        let y = SpacetimePoint::from_array(b);
        match (feynman_propagator(&x, &y, DEFAULT_LIGHT_CONE_TOL), feynman_propagator(&y, &x, DEFAULT_LIGHT_CONE_TOL)) {
            (Ok(u), Ok(v)) => prop_assert_eq!(u, v),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "asymmetric failure"),
        }
    }

    #[test]
    fn stress_tensor_identities(l in 0.1f64..10.0, pol in 1u8..=2) {
        let cfg = CavityConfig::new(l, pol).unwrap();
        let t = brown_maclay_tensor(&cfg);
        prop_assert_eq!(t.components[3][3], pressure(&cfg));
        prop_assert_eq!(t.components[0][0], energy_per_area(&cfg) / l);
        prop_assert!(t.trace().abs() <= 16.0 * f64::EPSILON * t.components[0][0].abs());
    }

    #[test]
    fn rotation_preserves_norm(p in prop::array::uniform3(-10.0f64..10.0), alpha in -7.0f64..7.0) {
        let q = apparatus_to_lab(p, alpha);
        let n0: f64 = p.iter().map(|v| v * v).sum();
        let n1: f64 = q.iter().map(|v| v * v).sum();
        prop_assert!((n0 - n1).abs() <= 1e-14 * n0.max(1.0));
        let back = lab_to_apparatus(q, alpha);
        for i in 0..3 {
            prop_assert!((back[i] - p[i]).abs() <= 1e-13);
        }
    }

    #[test]
    fn force_bookkeeping(g in 0.0f64..2.0, l in 0.05f64..5.0, pol in 1u8..=2) {
        let field = WeakField::new(g).unwrap();
        let cfg = CavityConfig::new(l, pol).unwrap();
        let delta = delta_force_per_area(&field, &cfg);
        let iso = isotropic_force_per_area(&field, &cfg);
        let fermi = fermi_force_per_area(&field, &cfg);
        prop_assert_eq!(fermi, iso + delta);
        prop_assert_eq!(iso, -2.0 * delta);
        if g > 0.0 {
            prop_assert!(delta < 0.0 && iso > 0.0 && fermi > 0.0);
        }
    }

    #[test]
    fn delta_energy_is_linear(
        g in 1e-3f64..1.0,
        xi0 in 0.1f64..2.0,
        a in 1.0f64..5.0,
        alpha in 0.0f64..1.2,
    ) {
        let spec = QuadratureSpec::default();
        let field = WeakField::new(g).unwrap();
        let app = PlateApparatus::new(a, 0.1, xi0, alpha, 2).unwrap();
        let base = delta_energy_closed(&app, &field);
        let doubled = [
            delta_energy_closed(&app, &WeakField::new(2.0 * g).unwrap()),
            delta_energy_closed(&app.with_xi0(2.0 * xi0).unwrap(), &field),
            delta_energy_closed(&PlateApparatus::new(a * 2f64.sqrt(), 0.1, xi0, alpha, 2).unwrap(), &field),
        ];
        // Doubling g or ξ̃₀ is exact; doubling A through a·√2 picks up a few roundings.
        prop_assert_eq!(doubled[0], 2.0 * base);
        prop_assert_eq!(doubled[1], 2.0 * base);
        prop_assert!((doubled[2] - 2.0 * base).abs() <= 8.0 * f64::EPSILON * base.abs());
        let q1 = delta_energy_quadrature(&app, &field, &spec).unwrap().value;
        let q2 = delta_energy_quadrature(&app.with_xi0(2.0 * xi0).unwrap(), &field, &spec).unwrap().value;
        prop_assert!((q2 - 2.0 * q1).abs() <= 2e-9 * q1.abs());
    }
}

#[test]
fn tail_bound_holds_on_doubling() {
    for p in [2.0, 3.0, 4.0, 5.0] {
        for n in [10, 100, 1000] {
            let a = tail_bounded_power_sum(p, 1.0, n).unwrap();
            let b = tail_bounded_power_sum(p, 1.0, 2 * n).unwrap();
            assert!((a.value - b.value).abs() <= a.error_bound);
        }
    }
}

#[test]
fn partial_sums_approach_basel() {
    // Euler–Maclaurin style oracle: S_N + 1/N − 1/(2N²) converges to π²/6 at O(N⁻³).
    let exact = PI * PI / 6.0;
    for n in [100usize, 1000, 10_000] {
        let s = tail_bounded_power_sum(2.0, 1.0, n).unwrap();
        let nf = n as f64;
        let corrected = s.value + 1.0 / nf - 0.5 / (nf * nf);
        assert!((corrected - exact).abs() < 1.0 / nf.powi(3));
        assert!(exact - s.value <= s.error_bound);
    }
}

#[test]
fn scaling_laws_are_exact() {
    let quad = QuadratureSpec::with_tolerance(1e-12).unwrap();
    for lambda in [2.0, 10.0] {
        let l = 0.7;
        let d = energy_density_image_sum(l, 2000).unwrap().value;
        let d_scaled = energy_density_image_sum(lambda * l, 2000).unwrap().value;
        assert!((d_scaled - d / lambda.powi(4)).abs() <= 1e-12 * d_scaled.abs());
        let e = energy_per_area_image_sum(l, 2000).unwrap().value;
        let e_scaled = energy_per_area_image_sum(lambda * l, 2000).unwrap().value;
        assert!((e_scaled - e / lambda.powi(3)).abs() <= 1e-12 * e_scaled.abs());
        let ap = energy_per_area_abel_plana(l, &quad).unwrap().value;
        let ap_scaled = energy_per_area_abel_plana(lambda * l, &quad).unwrap().value;
        assert!((ap_scaled - ap / lambda.powi(3)).abs() <= 1e-12 * ap_scaled.abs());
        let c = energy_density(l).unwrap();
        assert!(
            (energy_density(lambda * l).unwrap() - c / lambda.powi(4)).abs() <= 1e-12 * c.abs()
        );
    }
}

#[test]
fn power_law_slopes_over_fifty_points() {
    let ls: Vec<f64> = (0..50).map(|i| 0.5 + 4.5 * i as f64 / 49.0).collect();
    let cfgs: Vec<CavityConfig> = ls
        .iter()
        .map(|&l| CavityConfig::electromagnetic(l).unwrap())
        .collect();
    let p: Vec<f64> = cfgs.iter().map(pressure).collect();
    let e: Vec<f64> = cfgs.iter().map(energy_per_area).collect();
    let d: Vec<f64> = ls.iter().map(|&l| energy_density(l).unwrap()).collect();
    assert!((log_log_slope(&ls, &p) + 4.0).abs() < 1e-9);
    assert!((log_log_slope(&ls, &e) + 3.0).abs() < 1e-9);
    assert!((log_log_slope(&ls, &d) + 4.0).abs() < 1e-9);
}

#[test]
fn cubic_central_difference_has_order_two() {
    let f = |x: f64| x.powi(3) - 2.0 * x * x;
    for x in [-1.0, 0.3, 2.0] {
        let exact = 3.0 * x * x - 4.0 * x;
        let e1 = (central_diff(f, x, 1e-2).unwrap() - exact).abs();
        let e2 = (central_diff(f, x, 5e-3).unwrap() - exact).abs();
        assert!(((e1 / e2).log2() - 2.0).abs() < 0.05);
    }
}
