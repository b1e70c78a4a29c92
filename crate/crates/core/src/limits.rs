//! Limiting regimes: the plate limit `S(v)`, the near-field `d^-3` law, the
//! far-field `d^-7` law with its TM function `F(a)`, and the shell's effective
//! static polarizability.
//!
//! Every formula here is linear in the atomic polarizability, so
//! multi-oscillator atoms are handled term by term.

use core::f64::consts::PI;

use crate::energy::{energy_from_s, interaction_energy, EvalConfig};
use crate::error::{ensure_non_negative, ensure_positive, Result};
use crate::material::{AtomModel, ShellSpec, HBAR_C_EV_NM};
use crate::quadrature::{log_linear_edges, CompositeRule};

const RULE_ORDER: usize = 20;
const PANELS_PER_DECADE: usize = 4;

/// Plate-limit function
/// `S(v) = (1/3) int_0^inf dt e^-t [ (1+t)/(1+t^2/4v^2) + t/(1+t^2/4v^2)^2 ]`.
pub fn plate_s(v: f64) -> Result<f64> {
    ensure_positive("v", v)?;
    let c = 1.0 / (4.0 * v * v);
    let f = |t: f64| {
        let w = 1.0 / (1.0 + t * t * c);
        libm::exp(-t) * ((1.0 + t) * w + t * w * w)
    };
    let edges = log_linear_edges(1e-4 * (2.0 * v).min(1.0), PANELS_PER_DECADE, 60.0, 2.0);
    Ok(CompositeRule::new(RULE_ORDER).integrate(f, &edges) / 3.0)
}

/// Sphere-to-plate limit `-3 hbar c alpha(0) S(d k_a) / (8 pi d^4)`, in eV.
pub fn plate_energy(atom: &AtomModel, d_nm: f64) -> Result<f64> {
    ensure_positive("d", d_nm)?;
    let d4 = d_nm * d_nm * d_nm * d_nm;
    let mut total = 0.0;
    for o in atom.oscillators() {
        let s = plate_s(d_nm * o.wavenumber())?;
        total -= 3.0 * HBAR_C_EV_NM * o.static_polarizability() * s / (8.0 * PI * d4);
    }
    Ok(total)
}

/// Non-retarded limit `-hbar c alpha(0) k_a / (8 d^3)`, in eV.
pub fn near_field_energy(atom: &AtomModel, d_nm: f64) -> Result<f64> {
    ensure_positive("d", d_nm)?;
    let d3 = d_nm * d_nm * d_nm;
    Ok(-atom
        .oscillators()
        .iter()
        .map(|o| HBAR_C_EV_NM * o.static_polarizability() * o.wavenumber() / (8.0 * d3))
        .sum::<f64>())
}

/// `F(a) = (8 a^2 / 23) int_0^inf (y^4 + 2y^3 + 5y^2 + 6y + 3) / (3y^2 + 2a^2) e^-2y dy`.
pub fn far_field_f(a: f64) -> Result<f64> {
    ensure_non_negative("a", a)?;
    if a == 0.0 {
        return Ok(0.0);
    }
    let a2 = a * a;
    let f = |y: f64| {
        let poly = (((y + 2.0) * y + 5.0) * y + 6.0) * y + 3.0;
        poly / (3.0 * y * y + 2.0 * a2) * libm::exp(-2.0 * y)
    };
    let edges = log_linear_edges(1e-4 * a.min(1.0), PANELS_PER_DECADE, 40.0, 1.0);
    Ok(8.0 * a2 / 23.0 * CompositeRule::new(RULE_ORDER).integrate(f, &edges))
}

/// Leading far-field law
/// `-hbar c alpha(0) R^3 (53 Q + 138) / (8 pi (3 + Q) d^7)`, in eV.
///
/// Only meaningful for `d >> 1/k_a`, `d >> R` and `d >> sqrt(R / Omega)`;
/// see [`FarFieldValidity`].
pub fn far_field_energy(shell: &ShellSpec, atom: &AtomModel, d_nm: f64) -> Result<f64> {
    ensure_positive("d", d_nm)?;
    shell.validate()?;
    let q = shell.q();
    let r3 = shell.radius_nm * shell.radius_nm * shell.radius_nm;
    Ok(-HBAR_C_EV_NM * atom.static_polarizability() * r3 * (53.0 * q + 138.0)
        / (8.0 * PI * (3.0 + q) * libm::pow(d_nm, 7.0)))
}

/// Large-distance `S_Omega = (R/d)^3 [7Q / (3(3+Q)) + (46/3) F(a)]`, with
/// `F` evaluated at the actual `a = d sqrt(Omega / R)` rather than at `a -> inf`.
pub fn far_field_s(shell: &ShellSpec, d_nm: f64) -> Result<f64> {
    ensure_positive("d", d_nm)?;
    shell.validate()?;
    let q = shell.q();
    let a = d_nm * libm::sqrt(shell.omega_invnm / shell.radius_nm);
    let ratio = shell.radius_nm / d_nm;
    Ok(ratio * ratio * ratio * (7.0 * q / (3.0 * (3.0 + q)) + 46.0 / 3.0 * far_field_f(a)?))
}

/// Energy corresponding to [`far_field_s`], in eV.
pub fn far_field_energy_with_f(shell: &ShellSpec, atom: &AtomModel, d_nm: f64) -> Result<f64> {
    Ok(energy_from_s(atom, d_nm, far_field_s(shell, d_nm)?))
}

/// How far a distance sits inside the far-field domain. Each ratio should be
/// large for the `d^-7` law to apply.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FarFieldValidity {
    /// `d k_a` (retardation).
    pub d_times_ka: f64,
    /// `d / R`.
    pub d_over_radius: f64,
    /// `d / sqrt(R / Omega)`; zero when `Omega = 0`.
    pub d_over_screening: f64,
}

impl FarFieldValidity {
    pub fn new(shell: &ShellSpec, atom: &AtomModel, d_nm: f64) -> Self {
        Self {
            d_times_ka: d_nm * atom.lowest_wavenumber(),
            d_over_radius: d_nm / shell.radius_nm,
            d_over_screening: d_nm * libm::sqrt(shell.omega_invnm / shell.radius_nm),
        }
    }

    /// Smallest of the three ratios.
    pub fn margin(&self) -> f64 {
        self.d_times_ka.min(self.d_over_radius).min(self.d_over_screening)
    }

    /// True when every ratio exceeds `threshold`. Always false at `Omega = 0`,
    /// where the exact energy vanishes but the far-field formula does not.
    pub fn holds(&self, threshold: f64) -> bool {
        self.margin() > threshold
    }
}

/// Static polarizability of the shell seen from far away.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EffectivePolarizability {
    pub nm3: f64,
    pub m3: f64,
}

/// `alpha_f = (53 Q + 138) / (46 Q + 138) R^3`.
pub fn effective_polarizability(shell: &ShellSpec) -> Result<EffectivePolarizability> {
    shell.validate()?;
    let q = shell.q();
    let ratio = if q.is_infinite() { 53.0 / 46.0 } else { (53.0 * q + 138.0) / (46.0 * q + 138.0) };
    let nm3 = ratio * shell.radius_nm * shell.radius_nm * shell.radius_nm;
    Ok(EffectivePolarizability { nm3, m3: nm3 * 1e-27 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    Near,
    Far,
    Plate,
}

impl Regime {
    pub fn name(self) -> &'static str {
        match self {
            Regime::Near => "near",
            Regime::Far => "far",
            Regime::Plate => "plate",
        }
    }
}

/// Comparison of the full mode sum against one limiting law.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoteReport {
    pub d_nm: f64,
    pub e_full_ev: f64,
    pub e_limit_ev: f64,
    pub rel_dev: f64,
    pub regime: Regime,
    /// Far-field domain ratios at this distance (reported for every regime).
    pub validity: FarFieldValidity,
    pub converged: bool,
}

pub fn asymptote_report(
    shell: &ShellSpec,
    atom: &AtomModel,
    d_nm: f64,
    cfg: &EvalConfig,
    regime: Regime,
) -> Result<AsymptoteReport> {
    let full = interaction_energy(shell, atom, d_nm, cfg)?;
    compare(shell, atom, d_nm, full.energy_ev, full.converged, regime)
}

/// Build a report from an already computed full energy.
pub fn compare(
    shell: &ShellSpec,
    atom: &AtomModel,
    d_nm: f64,
    e_full_ev: f64,
    converged: bool,
    regime: Regime,
) -> Result<AsymptoteReport> {
    let e_limit_ev = match regime {
        Regime::Near => near_field_energy(atom, d_nm)?,
        Regime::Far => far_field_energy(shell, atom, d_nm)?,
        Regime::Plate => plate_energy(atom, d_nm)?,
    };
    let rel_dev = if e_full_ev == 0.0 {
        if e_limit_ev == 0.0 { 0.0 } else { f64::INFINITY }
    } else {
        ((e_full_ev - e_limit_ev) / e_full_ev).abs()
    };
    Ok(AsymptoteReport {
        d_nm,
        e_full_ev,
        e_limit_ev,
        rel_dev,
        regime,
        validity: FarFieldValidity::new(shell, atom, d_nm),
        converged,
    })
}
