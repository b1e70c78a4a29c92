//! Shell and atom parameters. Units are eV for energies and frequencies
//! (`hbar * omega`), nm for lengths and nm^-1 for wavenumbers.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{ensure_non_negative, ensure_positive, Error, Result};

/// `hbar * c` in eV nm.
pub const HBAR_C_EV_NM: f64 = 197.326_980_4;

/// One atomic unit of polarizability volume in nm^3.
pub const AU_POLARIZABILITY_NM3: f64 = 1.482e-4;

/// The constants above as a record, for reporting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitSystem {
    pub hbar_c: f64,
    pub au_polarizability_nm3: f64,
}

pub const UNITS: UnitSystem =
    UnitSystem { hbar_c: HBAR_C_EV_NM, au_polarizability_nm3: AU_POLARIZABILITY_NM3 };

/// Wavenumber in nm^-1 of a photon with energy `ev`.
pub fn wavenumber(ev: f64) -> f64 {
    ev / HBAR_C_EV_NM
}

/// Photon energy in eV at wavenumber `k` (nm^-1).
pub fn photon_energy(k: f64) -> f64 {
    k * HBAR_C_EV_NM
}

/// Infinitely thin conducting sphere: radius and plasma wavenumber.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellSpec {
    pub radius_nm: f64,
    pub omega_invnm: f64,
}

impl ShellSpec {
    pub fn new(radius_nm: f64, omega_invnm: f64) -> Result<Self> {
        ensure_positive("R", radius_nm)?;
        ensure_non_negative("Omega", omega_invnm)?;
        Ok(Self { radius_nm, omega_invnm })
    }

    /// Shell from its radius and the dimensionless coupling `Q = Omega R`.
    pub fn from_q(radius_nm: f64, q: f64) -> Result<Self> {
        ensure_positive("R", radius_nm)?;
        ensure_non_negative("Q", q)?;
        Ok(Self { radius_nm, omega_invnm: q / radius_nm })
    }

    pub fn q(&self) -> f64 {
        self.omega_invnm * self.radius_nm
    }

    pub(crate) fn validate(&self) -> Result<()> {
        Self::new(self.radius_nm, self.omega_invnm).map(|_| ())
    }
}

/// C60 fullerene: `R = 0.342 nm`, `Q = 4.94e-4`.
pub fn c60_default() -> ShellSpec {
    ShellSpec { radius_nm: 0.342, omega_invnm: 4.94e-4 / 0.342 }
}

/// A single Lorentz oscillator term `g^2 / (omega^2 + omega_k^2)`.
///
/// `strength` is `g` with `g^2` in nm^3 eV^2, so that `g^2 / omega_k^2` is the
/// static polarizability of this term in nm^3.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Oscillator {
    pub strength: f64,
    pub frequency_ev: f64,
}

impl Oscillator {
    pub fn new(strength: f64, frequency_ev: f64) -> Result<Self> {
        ensure_positive("oscillator strength", strength)?;
        ensure_positive("oscillator frequency", frequency_ev)?;
        Ok(Self { strength, frequency_ev })
    }

    /// Oscillator with the given static polarizability (nm^3).
    pub fn from_static(alpha0_nm3: f64, frequency_ev: f64) -> Result<Self> {
        ensure_positive("static polarizability", alpha0_nm3)?;
        Self::new(libm::sqrt(alpha0_nm3) * frequency_ev, frequency_ev)
    }

    pub fn static_polarizability(&self) -> f64 {
        let ratio = self.strength / self.frequency_ev;
        ratio * ratio
    }

    /// Characteristic wavenumber `omega_k / (hbar c)` in nm^-1.
    pub fn wavenumber(&self) -> f64 {
        wavenumber(self.frequency_ev)
    }

    fn at(&self, omega_ev: f64) -> f64 {
        self.strength * self.strength / (omega_ev * omega_ev + self.frequency_ev * self.frequency_ev)
    }
}

/// Dynamic polarizability model: a sum of oscillators.
#[derive(Debug, Clone, PartialEq)]
pub struct AtomModel {
    oscillators: Vec<Oscillator>,
    pub label: String,
}

impl AtomModel {
    pub fn new(label: impl Into<String>, oscillators: Vec<Oscillator>) -> Result<Self> {
        if oscillators.is_empty() {
            return Err(Error::EmptyAtomModel);
        }
        for o in &oscillators {
            Oscillator::new(o.strength, o.frequency_ev)?;
        }
        Ok(Self { oscillators, label: label.into() })
    }

    pub fn oscillators(&self) -> &[Oscillator] {
        &self.oscillators
    }

    /// The oscillator, if the model has exactly one.
    pub fn single_oscillator(&self) -> Option<&Oscillator> {
        match self.oscillators.as_slice() {
            [o] => Some(o),
            _ => None,
        }
    }

    /// `alpha(0)` in nm^3.
    pub fn static_polarizability(&self) -> f64 {
        self.oscillators.iter().map(Oscillator::static_polarizability).sum()
    }

    /// `alpha(i omega)` in nm^3 for `omega` in eV.
    pub fn polarizability_imag_axis(&self, omega_ev: f64) -> Result<f64> {
        ensure_non_negative("frequency", omega_ev)?;
        Ok(self.polarizability_unchecked(omega_ev))
    }

    pub(crate) fn polarizability_unchecked(&self, omega_ev: f64) -> f64 {
        self.oscillators.iter().map(|o| o.at(omega_ev)).sum()
    }

    /// `alpha` at imaginary wavenumber `k` (nm^-1).
    pub(crate) fn polarizability_at_wavenumber(&self, k: f64) -> f64 {
        self.polarizability_unchecked(photon_energy(k))
    }

    /// Smallest oscillator wavenumber; sets the scale on which `alpha` varies.
    pub fn lowest_wavenumber(&self) -> f64 {
        self.oscillators
            .iter()
            .map(Oscillator::wavenumber)
            .fold(f64::INFINITY, f64::min)
    }
}

/// Hydrogen in the single-oscillator model: `alpha(0) = 4.50 a.u.`,
/// `omega_a = 11.65 eV`.
pub fn hydrogen_default() -> AtomModel {
    let osc = Oscillator::from_static(4.50 * AU_POLARIZABILITY_NM3, 11.65)
        .expect("hydrogen parameters are positive");
    AtomModel { oscillators: alloc::vec![osc], label: String::from("hydrogen") }
}
