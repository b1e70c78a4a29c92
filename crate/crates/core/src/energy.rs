//! Atom–shell interaction energy as a sum over angular momentum of
//! imaginary-wavenumber integrals:
//!
//! ```text
//! E_Omega = -(hbar c Omega / (pi L^2)) sum_{l>=1} nu int_0^inf dk alpha(ik)
//!           [ te_num / f_TE + tm_num / f_TM ],          L = R + d, nu = l + 1/2
//! E_B     = -(hbar c / (pi L^2)) sum_{l>=1} nu int_0^inf dk k alpha(ik)
//!           [ te_num / (s e) - tm_num / (s' e') ]
//! ```
//!
//! Both are also reported through the dimensionless `S` defined by
//! `E = -3 hbar c alpha(0) S / (8 pi d^4)`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{ensure_positive, Error, Result};
use crate::limits;
use crate::material::{AtomModel, ShellSpec, HBAR_C_EV_NM};
use crate::quadrature::{adaptive, Estimate};
use crate::response::ModeResponse;
use crate::special::RiccatiBessel;

/// Upper integration bound rule for the k-integrals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KCutoff {
    /// Derived from the `exp(-2kd)` envelope of the integrand and extended
    /// until the neglected tail is below tolerance.
    Envelope,
    /// Fixed bound in nm^-1 (no tail extension).
    Fixed(f64),
}

/// Numerical controls for the mode sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub quad_rel_tol: f64,
    pub lsum_rel_tol: f64,
    /// Number of successive negligible terms required to stop the l-sum.
    pub lsum_consecutive: usize,
    pub l_hard_max: usize,
    pub k_cutoff: KCutoff,
    /// Panel budget per k-integral.
    pub max_panels: usize,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            quad_rel_tol: 1e-8,
            lsum_rel_tol: 1e-9,
            lsum_consecutive: 2,
            l_hard_max: crate::special::DEFAULT_MAX_ORDER,
            k_cutoff: KCutoff::Envelope,
            max_panels: 400,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        let in_unit = |t: f64| t > 0.0 && t < 1.0;
        if !in_unit(self.quad_rel_tol) {
            return Err(Error::InvalidConfig("quad_rel_tol must lie in (0, 1)"));
        }
        if !in_unit(self.lsum_rel_tol) {
            return Err(Error::InvalidConfig("lsum_rel_tol must lie in (0, 1)"));
        }
        if self.l_hard_max < 1 {
            return Err(Error::InvalidConfig("l_hard_max must be at least 1"));
        }
        if self.lsum_consecutive < 1 {
            return Err(Error::InvalidConfig("lsum_consecutive must be at least 1"));
        }
        if self.max_panels < 1 {
            return Err(Error::InvalidConfig("max_panels must be at least 1"));
        }
        if let KCutoff::Fixed(k) = self.k_cutoff {
            ensure_positive("k cutoff", k)?;
        }
        Ok(())
    }
}

/// Finite plasma wavenumber or the perfect-conductor (Boyer) limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conductivity {
    Finite,
    Boyer,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyResult {
    /// Signed energy in eV (never positive).
    pub energy_ev: f64,
    pub s_dimensionless: f64,
    /// Highest angular momentum included.
    pub l_used: usize,
    /// Accumulated quadrature error estimate, in eV.
    pub quad_error_estimate: f64,
    pub converged: bool,
}

/// `3 hbar c alpha(0) / (8 pi)` in eV nm^4: the plate Casimir–Polder coefficient.
pub fn casimir_polder_prefactor(atom: &AtomModel) -> f64 {
    3.0 * HBAR_C_EV_NM * atom.static_polarizability() / (8.0 * PI)
}

/// Energy from the dimensionless `S` at distance `d`.
pub fn energy_from_s(atom: &AtomModel, d_nm: f64, s: f64) -> f64 {
    let d2 = d_nm * d_nm;
    -casimir_polder_prefactor(atom) * s / (d2 * d2)
}

/// `E_Omega` for an atom at distance `d_nm` from the shell surface.
pub fn interaction_energy(shell: &ShellSpec, atom: &AtomModel, d_nm: f64, cfg: &EvalConfig) -> Result<EnergyResult> {
    shell.validate()?;
    ModeSum::new(shell.radius_nm, atom, d_nm, cfg)?.run(Conductivity::Finite, shell.omega_invnm)
}

/// Perfect-conductor energy `E_B` for a shell of radius `r_nm`.
pub fn boyer_energy(r_nm: f64, atom: &AtomModel, d_nm: f64, cfg: &EvalConfig) -> Result<EnergyResult> {
    ensure_positive("R", r_nm)?;
    ModeSum::new(r_nm, atom, d_nm, cfg)?.run(Conductivity::Boyer, f64::INFINITY)
}

/// Dimensionless `S_Omega` (finite) or `S_B` (Boyer).
pub fn dimensionless_s(
    shell: &ShellSpec,
    atom: &AtomModel,
    d_nm: f64,
    cfg: &EvalConfig,
    variant: Conductivity,
) -> Result<f64> {
    let res = match variant {
        Conductivity::Finite => interaction_energy(shell, atom, d_nm, cfg)?,
        Conductivity::Boyer => boyer_energy(shell.radius_nm, atom, d_nm, cfg)?,
    };
    Ok(res.s_dimensionless)
}

struct ModeSum<'a> {
    radius: f64,
    distance: f64,
    atom: &'a AtomModel,
    cfg: &'a EvalConfig,
    bessel: RiccatiBessel,
}

impl<'a> ModeSum<'a> {
    fn new(radius: f64, atom: &'a AtomModel, d_nm: f64, cfg: &'a EvalConfig) -> Result<Self> {
        ensure_positive("d", d_nm)?;
        cfg.validate()?;
        Ok(Self { radius, distance: d_nm, atom, cfg, bessel: RiccatiBessel::new(cfg.l_hard_max) })
    }

    fn outer_radius(&self) -> f64 {
        self.radius + self.distance
    }

    /// Integrand of the l-th term at wavenumber k (without the factor nu).
    fn integrand(&self, variant: Conductivity, omega: f64, l: usize, k: f64) -> Result<f64> {
        let inner = self.bessel.eval_pair(l, k * self.radius)?;
        let outer = self.bessel.eval_pair(l, k * self.outer_radius())?;
        let mode = ModeResponse::from_pairs(k, &inner, &outer);
        let alpha = self.atom.polarizability_at_wavenumber(k);
        Ok(match variant {
            Conductivity::Finite => alpha * mode.finite(omega),
            Conductivity::Boyer => k * alpha * mode.boyer(),
        })
    }

    /// `int_0^inf dk integrand` for one l, on the mapped variable
    /// `u = k / (k + k_s)`.
    fn term_integral(&self, variant: Conductivity, omega: f64, l: usize, abs_floor: f64) -> Result<Estimate> {
        let d = self.distance;
        let nu = l as f64 + 0.5;
        let k_s = self.atom.lowest_wavenumber();
        let k_of = |u: f64| k_s * u / (1.0 - u);
        let u_of = |k: f64| k / (k + k_s);
        let tol = self.cfg.quad_rel_tol;

        let mut failure: Option<Error> = None;
        let integrate = |k_lo: f64, k_hi: f64, failure: &mut Option<Error>| {
            let mut marks = [u_of(0.5 / d), u_of(nu / self.outer_radius()), u_of(k_s)];
            marks.sort_by(f64::total_cmp);
            adaptive(
                |u| {
                    if failure.is_some() {
                        return 0.0;
                    }
                    let k = k_of(u);
                    let jac = k_s / ((1.0 - u) * (1.0 - u));
                    match self.integrand(variant, omega, l, k) {
                        Ok(v) => v * jac,
                        Err(e) => {
                            *failure = Some(e);
                            0.0
                        }
                    }
                },
                u_of(k_lo),
                u_of(k_hi),
                &marks,
                tol,
                abs_floor,
                self.cfg.max_panels,
            )
        };

        let mut k_max = match self.cfg.k_cutoff {
            KCutoff::Fixed(k) => k,
            KCutoff::Envelope => libm::log(1e3 / tol) / (2.0 * d) + nu / self.outer_radius(),
        };
        let mut est = integrate(0.0, k_max, &mut failure);
        if let KCutoff::Envelope = self.cfg.k_cutoff {
            // The integrand decays at least like exp(-2kd); extend until the
            // tail bound g(k_max) / (2d) is negligible.
            for _ in 0..60 {
                if let Some(e) = failure.take() {
                    return Err(e);
                }
                let tail = self.integrand(variant, omega, l, k_max)?.abs() / (2.0 * d);
                if tail <= (1e-2 * tol * est.value.abs()).max(abs_floor) {
                    break;
                }
                let next = 2.0 * k_max;
                let piece = integrate(k_max, next, &mut failure);
                est = Estimate {
                    value: est.value + piece.value,
                    error: est.error + piece.error,
                    evaluations: est.evaluations + piece.evaluations,
                    converged: est.converged && piece.converged,
                };
                k_max = next;
            }
        }
        match failure {
            Some(e) => Err(e),
            None => Ok(est),
        }
    }

    fn run(&self, variant: Conductivity, omega: f64) -> Result<EnergyResult> {
        if variant == Conductivity::Finite && omega == 0.0 {
            return Ok(EnergyResult {
                energy_ev: 0.0,
                s_dimensionless: 0.0,
                l_used: 0,
                quad_error_estimate: 0.0,
                converged: true,
            });
        }
        let cfg = self.cfg;
        let big_l = self.outer_radius();
        let l_floor = libm::ceil(2.0 * (0.5 / self.distance) * big_l).max(1.0) as usize;

        let mut sum = 0.0_f64;
        let mut err = 0.0_f64;
        let mut quad_ok = true;
        let mut quiet = 0;
        let mut l_used = 0;
        let mut tail_converged = false;
        for l in 1..=cfg.l_hard_max {
            let nu = l as f64 + 0.5;
            let abs_floor = 1e-3 * cfg.lsum_rel_tol * sum.abs() / nu;
            let est = self.term_integral(variant, omega, l, abs_floor)?;
            let term = nu * est.value;
            sum += term;
            err += nu * est.error;
            quad_ok &= est.converged;
            l_used = l;
            if term.abs() <= cfg.lsum_rel_tol * sum.abs() {
                quiet += 1;
            } else {
                quiet = 0;
            }
            if quiet >= cfg.lsum_consecutive && l >= l_floor {
                tail_converged = true;
                break;
            }
        }

        // S = (8 d^4 / (3 alpha(0) L^2)) * c * sum, with c = Omega or 1.
        let coupling = match variant {
            Conductivity::Finite => omega,
            Conductivity::Boyer => 1.0,
        };
        let d2 = self.distance * self.distance;
        let s_factor = 8.0 * d2 * d2 * coupling / (3.0 * self.atom.static_polarizability() * big_l * big_l);
        let s = s_factor * sum;
        let energy = energy_from_s(self.atom, self.distance, s);
        let err_ev = (energy_from_s(self.atom, self.distance, s_factor * err)).abs();
        Ok(EnergyResult {
            energy_ev: energy,
            s_dimensionless: s,
            l_used,
            quad_error_estimate: err_ev,
            converged: quad_ok && tail_converged,
        })
    }
}

/// One row of a distance sweep; energies in eV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub d_nm: f64,
    pub e_full: f64,
    pub e_boyer: f64,
    pub e_plate: f64,
    pub e_near: f64,
    pub e_far: f64,
    pub s_omega: f64,
    pub converged: bool,
}

/// Evaluate every regime at one distance.
pub fn sweep_row(shell: &ShellSpec, atom: &AtomModel, d_nm: f64, cfg: &EvalConfig) -> Result<SweepRow> {
    let full = interaction_energy(shell, atom, d_nm, cfg)?;
    let boyer = boyer_energy(shell.radius_nm, atom, d_nm, cfg)?;
    Ok(SweepRow {
        d_nm,
        e_full: full.energy_ev,
        e_boyer: boyer.energy_ev,
        e_plate: limits::plate_energy(atom, d_nm)?,
        e_near: limits::near_field_energy(atom, d_nm)?,
        e_far: limits::far_field_energy(shell, atom, d_nm)?,
        s_omega: full.s_dimensionless,
        converged: full.converged && boyer.converged,
    })
}

/// Check that a distance grid is positive and strictly increasing.
pub fn validate_grid(grid: &[f64]) -> Result<()> {
    let mut prev = 0.0;
    for (i, &d) in grid.iter().enumerate() {
        if !(d.is_finite() && d > prev) {
            return Err(Error::UnorderedGrid { index: i });
        }
        prev = d;
    }
    Ok(())
}

/// Evaluate [`sweep_row`] over a strictly increasing grid, in order.
pub fn sweep(shell: &ShellSpec, atom: &AtomModel, grid: &[f64], cfg: &EvalConfig) -> Result<Vec<SweepRow>> {
    validate_grid(grid)?;
    grid.iter().map(|&d| sweep_row(shell, atom, d, cfg)).collect()
}
