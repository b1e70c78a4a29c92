//! Sphere response on the imaginary frequency axis: TE/TM Jost functions
//! and the per-mode kernels of the atom energy integrand.

use crate::error::{ensure_positive, Error, Result};
use crate::material::ShellSpec;
use crate::special::{RiccatiBessel, ScaledBesselPair};

/// Geometric mode kernels at `(l, k)` with `x = kR`, `z = k(R + d)`:
///
/// ```text
/// te_num = s_l(x)^2 e_l(z)^2
/// tm_num = s'_l(x)^2 e'_l(z)^2 + s'_l(x)^2 e_l(z)^2 (nu^2 - 1/4) / z^2
/// ```
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeKernel {
    pub l: usize,
    pub k_invnm: f64,
    pub te_num: f64,
    pub tm_num: f64,
}

/// Kernels plus the same-radius products the Jost functions need.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeResponse {
    pub kernel: ModeKernel,
    /// `s_l(x) e_l(x)`.
    pub se_inner: f64,
    /// `s'_l(x) e'_l(x)`, negative.
    pub ds_de_inner: f64,
}

fn check_order(l: usize) -> Result<()> {
    if l == 0 {
        Err(Error::NotPositive { name: "l", value: 0.0 })
    } else {
        Ok(())
    }
}

impl ModeResponse {
    /// Kernels from Bessel pairs at the shell (`inner`) and atom (`outer`) radii.
    pub fn from_pairs(k: f64, inner: &ScaledBesselPair, outer: &ScaledBesselPair) -> Self {
        let l = inner.l;
        let nu = l as f64 + 0.5;
        let z = outer.x;
        let scale = libm::exp(inner.cross_log_scale(outer));
        let se_cross = inner.s_hat * outer.e_hat * scale;
        let dsde_cross = inner.ds_hat * outer.de_hat * scale;
        let dse_cross = inner.ds_hat * outer.e_hat * scale;
        let centrifugal = (nu * nu - 0.25) / (z * z);
        let te_num = se_cross * se_cross;
        let tm_num = dsde_cross * dsde_cross + dse_cross * dse_cross * centrifugal;
        Self {
            kernel: ModeKernel { l, k_invnm: k, te_num, tm_num },
            se_inner: inner.se(),
            ds_de_inner: inner.ds_de(),
        }
    }

    pub fn compute(bessel: &RiccatiBessel, l: usize, k: f64, radius: f64, distance: f64) -> Result<Self> {
        check_order(l)?;
        ensure_positive("k", k)?;
        ensure_positive("R", radius)?;
        ensure_positive("d", distance)?;
        let inner = bessel.eval_pair(l, k * radius)?;
        let outer = bessel.eval_pair(l, k * (radius + distance))?;
        Ok(Self::from_pairs(k, &inner, &outer))
    }

    pub fn jost_te(&self, omega: f64) -> f64 {
        1.0 + omega / self.kernel.k_invnm * self.se_inner
    }

    pub fn jost_tm(&self, omega: f64) -> f64 {
        1.0 - omega / self.kernel.k_invnm * self.ds_de_inner
    }

    /// `te_num / f_TE + tm_num / f_TM` at plasma wavenumber `omega`.
    pub fn finite(&self, omega: f64) -> f64 {
        self.kernel.te_num / self.jost_te(omega) + self.kernel.tm_num / self.jost_tm(omega)
    }

    /// Perfect-conductor kernel `te_num / (s e) - tm_num / (s' e')`. Equals the
    /// large-`omega` limit of `(omega / k) * finite(omega)`.
    pub fn boyer(&self) -> f64 {
        self.kernel.te_num / self.se_inner - self.kernel.tm_num / self.ds_de_inner
    }
}

/// TE Jost function `1 + (Omega / k) s_l(kR) e_l(kR)`.
pub fn jost_te(l: usize, k: f64, shell: &ShellSpec) -> Result<f64> {
    check_order(l)?;
    ensure_positive("k", k)?;
    shell.validate()?;
    let p = RiccatiBessel::default().eval_pair(l, k * shell.radius_nm)?;
    Ok(1.0 + shell.omega_invnm / k * p.se())
}

/// TM Jost function `1 - (Omega / k) s'_l(kR) e'_l(kR)`.
pub fn jost_tm(l: usize, k: f64, shell: &ShellSpec) -> Result<f64> {
    check_order(l)?;
    ensure_positive("k", k)?;
    shell.validate()?;
    let p = RiccatiBessel::default().eval_pair(l, k * shell.radius_nm)?;
    Ok(1.0 - shell.omega_invnm / k * p.ds_de())
}

/// Mode kernels for an atom at distance `d_nm` outside a shell of radius `r_nm`.
pub fn mode_kernel(l: usize, k: f64, r_nm: f64, d_nm: f64) -> Result<ModeKernel> {
    ModeResponse::compute(&RiccatiBessel::default(), l, k, r_nm, d_nm).map(|m| m.kernel)
}
