#![allow(clippy::excessive_precision)]

use casimir_shell_core::energy::Conductivity;
use casimir_shell_core::limits::{plate_energy, plate_s};
use casimir_shell_core::material::wavenumber;
use casimir_shell_core::response::{jost_te, jost_tm, mode_kernel, ModeResponse};
use casimir_shell_core::{
    boyer_energy, dimensionless_s, hydrogen_default, interaction_energy, sweep, EvalConfig, RiccatiBessel,
    ShellSpec,
};

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

#[test]
fn mode_kernel_reference() {
    let m = mode_kernel(1, 1.0, 1.0, 1.0).unwrap();
    assert!(rel(m.te_num, 0.0055771923974993064519) < 1e-13);
    assert!(rel(m.tm_num, 0.049988511032995687624) < 1e-13);
}

#[test]
fn jost_reference() {
    let shell = ShellSpec::from_q(1.0, 1.0).unwrap();
    assert!(rel(jost_te(1, 1.0, &shell).unwrap(), 1.2706705664732253838) < 1e-14);
    assert!(rel(jost_tm(1, 1.0, &shell).unwrap(), 1.8909912254352428865) < 1e-14);
}

#[test]
fn dimensionless_s_reference() {
    // brute-force 30-digit mode sum at q_a = k_a R, v = k_a d = 0.5, Q = 4.94e-4
    let ka = wavenumber(11.65);
    let shell = ShellSpec::from_q(0.0202 / ka, 4.94e-4).unwrap();
    let atom = hydrogen_default();
    let d = 0.5 / ka;
    let cfg = EvalConfig { quad_rel_tol: 1e-10, lsum_rel_tol: 1e-11, ..EvalConfig::default() };
    let s_omega = dimensionless_s(&shell, &atom, d, &cfg, Conductivity::Finite).unwrap();
    let s_b = dimensionless_s(&shell, &atom, d, &cfg, Conductivity::Boyer).unwrap();
    assert!(rel(s_omega, 1.4794647052520458797e-4) < 1e-6, "{s_omega}");
    assert!(rel(s_b, 2.6321409287993026616e-4) < 1e-6, "{s_b}");
}

#[test]
fn large_coupling_approaches_boyer_kernel() {
    let bessel = RiccatiBessel::default();
    for (l, k) in [(1usize, 0.3), (4, 2.0), (12, 9.0)] {
        let m = ModeResponse::compute(&bessel, l, k, 1.0, 0.5).unwrap();
        let omega = 1e6;
        let scaled = omega / k * m.finite(omega);
        assert!(rel(scaled, m.boyer()) < 1e-4, "l = {l}");
    }
}

#[test]
fn large_coupling_approaches_boyer_energy() {
    let atom = hydrogen_default();
    let cfg = EvalConfig::default();
    let big = interaction_energy(&ShellSpec::from_q(1.0, 1e6).unwrap(), &atom, 0.4, &cfg).unwrap();
    let b = boyer_energy(1.0, &atom, 0.4, &cfg).unwrap();
    assert!(rel(big.energy_ev, b.energy_ev) < 1e-3);
}

#[test]
fn finite_conductivity_weakens_attraction() {
    let atom = hydrogen_default();
    let cfg = EvalConfig::default();
    for (r, omega) in [(0.342, 4.94e-4 / 0.342), (1.0, 1.0), (5.0, 0.2)] {
        let shell = ShellSpec::new(r, omega).unwrap();
        for d in [0.05, 0.5, 5.0] {
            let e = interaction_energy(&shell, &atom, d, &cfg).unwrap();
            let b = boyer_energy(r, &atom, d, &cfg).unwrap();
            assert!(e.energy_ev < 0.0 && b.energy_ev < e.energy_ev, "R = {r}, d = {d}");
        }
    }
}

#[test]
fn zero_coupling_is_exactly_zero() {
    let shell = ShellSpec::new(0.342, 0.0).unwrap();
    let e = interaction_energy(&shell, &hydrogen_default(), 0.1, &EvalConfig::default()).unwrap();
    assert_eq!(e.energy_ev, 0.0);
    assert!(e.converged);
}

#[test]
fn plate_s_against_simpson() {
    let v: f64 = 1.0;
    let c = 1.0 / (4.0 * v * v);
    let f = |t: f64| {
        let w = 1.0 / (1.0 + t * t * c);
        (-t).exp() * ((1.0 + t) * w + t * w * w)
    };
    let (a, b, n) = (0.0, 60.0, 200_000);
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for i in 1..n {
        sum += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    let simpson = sum * h / 3.0 / 3.0;
    assert!((plate_s(v).unwrap() - simpson).abs() < 1e-8);
}

#[test]
fn energy_grows_in_magnitude_toward_the_shell() {
    let shell = casimir_shell_core::c60_default();
    let atom = hydrogen_default();
    let grid: Vec<f64> = (0..8).map(|i| 0.05 * 2f64.powi(i)).collect();
    let rows = sweep(&shell, &atom, &grid, &EvalConfig::default()).unwrap();
    for w in rows.windows(2) {
        assert!(w[0].e_full < w[1].e_full);
        assert!(w[0].e_plate < w[1].e_plate);
    }
    assert!(rows.iter().all(|r| r.converged));
}

#[test]
fn repeated_evaluation_is_bitwise_identical() {
    let shell = casimir_shell_core::c60_default();
    let atom = hydrogen_default();
    let cfg = EvalConfig::default();
    let a = interaction_energy(&shell, &atom, 0.2, &cfg).unwrap();
    let b = interaction_energy(&shell, &atom, 0.2, &cfg).unwrap();
    assert_eq!(a.energy_ev.to_bits(), b.energy_ev.to_bits());
    assert_eq!(a.l_used, b.l_used);
}

#[test]
fn insensitive_to_tightened_tolerances() {
    let shell = casimir_shell_core::c60_default();
    let atom = hydrogen_default();
    let base = interaction_energy(&shell, &atom, 0.3, &EvalConfig::default()).unwrap();
    let tight = EvalConfig { quad_rel_tol: 1e-11, lsum_rel_tol: 1e-12, ..EvalConfig::default() };
    let t = interaction_energy(&shell, &atom, 0.3, &tight).unwrap();
    assert!(rel(base.energy_ev, t.energy_ev) < 1e-7);
}

#[test]
fn sphere_energy_below_plate_for_large_radius() {
    let atom = hydrogen_default();
    let cfg = EvalConfig::default();
    let b = boyer_energy(50.0, &atom, 1.0, &cfg).unwrap();
    let p = plate_energy(&atom, 1.0).unwrap();
    assert!(b.energy_ev > p);
}
