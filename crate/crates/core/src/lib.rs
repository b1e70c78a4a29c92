//! Van der Waals (Casimir–Polder) energy of a polarizable atom outside an
//! infinitely thin conducting sphere in the hydrodynamic plasma-shell model.
//!
//! The crate is `no_std` (it needs `alloc`). Units throughout are eV and nm.
//!
//! - [`special`]: exponentially scaled modified Riccati–Bessel functions.
//! - [`material`]: shell and atom parameters.
//! - [`response`]: Jost functions and mode kernels.
//! - [`energy`]: the full mode sum, its perfect-conductor limit and sweeps.
//! - [`limits`]: plate, near-field and far-field laws.
#![no_std]
extern crate alloc;

pub mod energy;
pub mod error;
pub mod limits;
pub mod material;
pub mod quadrature;
pub mod response;
pub mod special;

pub use energy::{
    boyer_energy, dimensionless_s, interaction_energy, sweep, sweep_row, Conductivity, EnergyResult, EvalConfig,
    KCutoff, SweepRow,
};
pub use error::{Error, Result};
pub use material::{c60_default, hydrogen_default, AtomModel, Oscillator, ShellSpec};
pub use special::{eval_pair, eval_sequence, RiccatiBessel, ScaledBesselPair};
