//! Modified Riccati–Bessel functions on the imaginary axis.
//!
//! The growing solution `s_l(x) = sqrt(pi x / 2) I_{l+1/2}(x)` and the decaying
//! solution `e_l(x) = sqrt(2 x / pi) K_{l+1/2}(x)` are returned in scaled form:
//!
//! ```text
//! s_l(x)  = s_hat  * exp(+x) * 2^exponent
//! e_l(x)  = e_hat  * exp(-x) * 2^(-exponent)
//! s'_l(x) = ds_hat * exp(+x) * 2^exponent
//! e'_l(x) = de_hat * exp(-x) * 2^(-exponent)
//! ```
//!
//! `exponent` is zero whenever the scaled values fit comfortably in an `f64`;
//! it only becomes non-zero for very small arguments at high order, where
//! `s_l` underflows and `e_l` overflows. Products `s_l(x) e_l(x)` never need
//! the exponent, and products `s_l(x) e_l(z)` pick up the explicit factor
//! `exp(x - z) * 2^(p_x - p_z)` (see [`ScaledBesselPair::cross_log_scale`]).
//!
//! `e_l` is generated by upward recurrence of the ratio `e_l / e_{l-1}`.
//! `s_l` comes from the downward ratio `s_l / s_{l-1}`, seeded by a continued
//! fraction at the top order and normalised through the Wronskian
//! `s_l e_{l+1} + s_{l+1} e_l = 1`, which involves only positive terms.

use alloc::vec::Vec;
use core::f64::consts::LN_2;

use crate::error::{Error, Result};

/// Default maximum supported order.
pub const DEFAULT_MAX_ORDER: usize = 2000;

/// Smallest accepted argument. Below this the recurrence ratios `(2l+1)/x`
/// leave the `f64` range.
pub const MIN_ARGUMENT: f64 = 1e-250;

/// Binary exponents up to this size are folded into the mantissas.
const FOLD_LIMIT: i32 = 600;

const CF_MAX_ITERATIONS: usize = 2_000_000;

/// Scaled values of `s_l`, `e_l` and their derivatives at one `(l, x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledBesselPair {
    pub l: usize,
    pub x: f64,
    pub s_hat: f64,
    pub e_hat: f64,
    pub ds_hat: f64,
    pub de_hat: f64,
    /// Binary exponent shared (with opposite signs) by the `s` and `e` parts.
    pub exponent: i32,
}

impl ScaledBesselPair {
    fn scale(&self, sign: f64) -> f64 {
        libm::exp(sign * (self.x + self.exponent as f64 * LN_2))
    }

    /// Unscaled `s_l(x)`; overflows to infinity for large arguments.
    pub fn s(&self) -> f64 {
        self.s_hat * self.scale(1.0)
    }

    pub fn e(&self) -> f64 {
        self.e_hat * self.scale(-1.0)
    }

    pub fn ds(&self) -> f64 {
        self.ds_hat * self.scale(1.0)
    }

    pub fn de(&self) -> f64 {
        self.de_hat * self.scale(-1.0)
    }

    /// `ln s_l(x)`, valid over the whole argument range.
    pub fn ln_s(&self) -> f64 {
        libm::log(self.s_hat) + self.x + self.exponent as f64 * LN_2
    }

    pub fn ln_e(&self) -> f64 {
        libm::log(self.e_hat) - self.x - self.exponent as f64 * LN_2
    }

    /// `ln s'_l(x)`.
    pub fn ln_ds(&self) -> f64 {
        libm::log(self.ds_hat) + self.x + self.exponent as f64 * LN_2
    }

    /// `ln |e'_l(x)|`.
    pub fn ln_abs_de(&self) -> f64 {
        libm::log(-self.de_hat) - self.x - self.exponent as f64 * LN_2
    }

    /// `s_l(x) e_l(x)`.
    pub fn se(&self) -> f64 {
        self.s_hat * self.e_hat
    }

    /// `s'_l(x) e'_l(x)`, always negative.
    pub fn ds_de(&self) -> f64 {
        self.ds_hat * self.de_hat
    }

    /// `s_l e'_l - s'_l e_l`, identically `-1`.
    pub fn wronskian(&self) -> f64 {
        self.s_hat * self.de_hat - self.ds_hat * self.e_hat
    }

    /// Natural log of the factor converting `s_hat(x) * e_hat(z)` into
    /// `s_l(x) * e_l(z)`, where `self` is at `x` and `outer` at `z`.
    pub fn cross_log_scale(&self, outer: &ScaledBesselPair) -> f64 {
        (self.x - outer.x) + (self.exponent - outer.exponent) as f64 * LN_2
    }
}

/// Evaluator with a configurable order ceiling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RiccatiBessel {
    max_order: usize,
}

impl Default for RiccatiBessel {
    fn default() -> Self {
        Self::new(DEFAULT_MAX_ORDER)
    }
}

impl RiccatiBessel {
    pub const fn new(max_order: usize) -> Self {
        Self { max_order }
    }

    pub fn max_order(&self) -> usize {
        self.max_order
    }

    fn check(&self, l: usize, x: f64) -> Result<()> {
        if !(x.is_finite() && x > 0.0) {
            return Err(Error::NotPositive { name: "x", value: x });
        }
        if x < MIN_ARGUMENT {
            return Err(Error::OutOfRange { name: "x", value: x });
        }
        if l > self.max_order {
            return Err(Error::OrderTooLarge { order: l, max: self.max_order });
        }
        Ok(())
    }

    /// Scaled functions at a single order.
    pub fn eval_pair(&self, l: usize, x: f64) -> Result<ScaledBesselPair> {
        self.check(l, x)?;
        let mut up = Upward::new(x);
        let mut rho_l = 1.0;
        for _ in 0..l {
            rho_l = up.step();
        }
        let (mantissa, exp2) = (up.mantissa, up.exp2);
        let rho_next = up.peek();
        let r_next = ratio_cf(l + 1, x)?;
        Ok(assemble(l, x, mantissa, exp2, rho_l, rho_next, r_next))
    }

    /// Scaled functions for every order `0..=l_max`, in one pass.
    pub fn eval_sequence(&self, l_max: usize, x: f64) -> Result<Vec<ScaledBesselPair>> {
        self.check(l_max, x)?;
        let n = l_max + 1;

        // rho[l] = e_l / e_{l-1} for l = 0..=l_max+1, with e_{-1} = exp(-x).
        let mut rho = Vec::with_capacity(n + 1);
        let mut mant = Vec::with_capacity(n);
        let mut exps = Vec::with_capacity(n);
        let mut up = Upward::new(x);
        rho.push(1.0);
        for l in 0..n {
            mant.push(up.mantissa);
            exps.push(up.exp2);
            if l + 1 < n {
                rho.push(up.step());
            } else {
                rho.push(up.peek());
            }
        }

        // r[j] = s_{j+1} / s_j for j = 0..=l_max.
        let mut r = alloc::vec![0.0; n];
        r[l_max] = ratio_cf(l_max + 1, x)?;
        for j in (0..l_max).rev() {
            let order = (j + 1) as f64;
            r[j] = 1.0 / ((2.0 * order + 1.0) / x + r[j + 1]);
        }

        Ok((0..n)
            .map(|l| assemble(l, x, mant[l], exps[l], rho[l], rho[l + 1], r[l]))
            .collect())
    }
}

/// Upward recurrence for `e_hat_l`, kept as mantissa and binary exponent.
struct Upward {
    x: f64,
    l: usize,
    rho: f64,
    mantissa: f64,
    exp2: i32,
}

impl Upward {
    fn new(x: f64) -> Self {
        Self { x, l: 0, rho: 1.0, mantissa: 1.0, exp2: 0 }
    }

    /// `rho_{l+1} = 1 / rho_l + (2l + 1) / x`.
    fn peek(&self) -> f64 {
        1.0 / self.rho + (2.0 * self.l as f64 + 1.0) / self.x
    }

    fn step(&mut self) -> f64 {
        let next = self.peek();
        self.rho = next;
        self.l += 1;
        let (m, e) = libm::frexp(self.mantissa * next);
        self.mantissa = m;
        self.exp2 += e;
        next
    }
}

/// `s_n / s_{n-1}` from the continued fraction
/// `1 / (b_n + 1 / (b_{n+1} + ...))`, `b_j = (2j + 1) / x` (modified Lentz).
fn ratio_cf(n: usize, x: f64) -> Result<f64> {
    let b = |j: usize| (2.0 * j as f64 + 1.0) / x;
    let mut f = b(n);
    let mut c = f;
    let mut d = 0.0;
    for i in 1..CF_MAX_ITERATIONS {
        let bj = b(n + i);
        d = 1.0 / (bj + d);
        c = bj + 1.0 / c;
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() <= 2.0 * f64::EPSILON {
            return Ok(1.0 / f);
        }
    }
    Err(Error::NoConvergence { order: n, x })
}

fn assemble(
    l: usize,
    x: f64,
    mantissa: f64,
    exp2: i32,
    rho_l: f64,
    rho_next: f64,
    r_next: f64,
) -> ScaledBesselPair {
    let lf = l as f64;
    let s_m = 1.0 / (mantissa * (r_next + rho_next));
    let ds_m = s_m * ((lf + 1.0) / x + r_next);
    let de_m = -mantissa * (1.0 / rho_l + lf / x);
    if exp2.abs() <= FOLD_LIMIT {
        ScaledBesselPair {
            l,
            x,
            s_hat: libm::scalbn(s_m, -exp2),
            e_hat: libm::scalbn(mantissa, exp2),
            ds_hat: libm::scalbn(ds_m, -exp2),
            de_hat: libm::scalbn(de_m, exp2),
            exponent: 0,
        }
    } else {
        ScaledBesselPair { l, x, s_hat: s_m, e_hat: mantissa, ds_hat: ds_m, de_hat: de_m, exponent: -exp2 }
    }
}

/// Scaled pair at the default order ceiling.
pub fn eval_pair(l: usize, x: f64) -> Result<ScaledBesselPair> {
    RiccatiBessel::default().eval_pair(l, x)
}

/// Scaled sequence `0..=l_max` at the default order ceiling.
pub fn eval_sequence(l_max: usize, x: f64) -> Result<Vec<ScaledBesselPair>> {
    RiccatiBessel::default().eval_sequence(l_max, x)
}
