//! Command-line arguments and their resolution into a validated [`RunConfig`].

use anyhow::{bail, Result};
use casimir_shell_core::{c60_default, AtomModel, EvalConfig, ShellSpec};
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::atom_file;
use crate::output::Format;

#[derive(Debug, Parser)]
#[command(name = "casimir-shell", version, about = "Van der Waals energy of an atom outside a thin plasma shell")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Energy at a single distance
    Energy(EnergyArgs),
    /// Energies over a distance grid, with every limiting law
    Sweep(SweepArgs),
    /// Plate-limit function S(v)
    Plate(PlateArgs),
    /// Full energy against near, far or plate laws
    Asymptote(AsymptoteArgs),
    /// Scaled Riccati-Bessel values
    Bessel(BesselArgs),
    /// Built-in invariant checks
    Selftest,
}

#[derive(Debug, Args)]
pub struct ShellArgs {
    /// Shell radius in nm
    #[arg(long = "R", allow_negative_numbers = true)]
    pub radius: Option<f64>,
    /// Plasma wavenumber in 1/nm
    #[arg(long = "Omega", allow_negative_numbers = true, conflicts_with = "q")]
    pub omega: Option<f64>,
    /// Dimensionless coupling Omega * R
    #[arg(long = "Q", id = "q", allow_negative_numbers = true)]
    pub q: Option<f64>,
    /// C60 preset (R = 0.342 nm, Q = 4.94e-4)
    #[arg(long, conflicts_with_all = ["radius", "omega", "q"])]
    pub c60: bool,
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// `hydrogen` or `file:<path>`
    #[arg(long, default_value = "hydrogen")]
    pub atom: String,
    /// Relative tolerance of the k integrals; the l sum uses a tenth of it
    #[arg(long, allow_negative_numbers = true)]
    pub tol: Option<f64>,
    /// Largest angular momentum allowed
    #[arg(long)]
    pub lmax: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Print |E| instead of signed energies
    #[arg(long)]
    pub magnitude: bool,
    /// Comma-separated subset of output columns
    #[arg(long, value_delimiter = ',')]
    pub columns: Vec<String>,
}

#[derive(Debug, Args)]
pub struct EnergyArgs {
    #[command(flatten)]
    pub shell: ShellArgs,
    #[command(flatten)]
    pub common: CommonArgs,
    /// Distance from the shell surface in nm
    #[arg(long, allow_negative_numbers = true)]
    pub d: f64,
    /// Perfect-conductor shell instead of the plasma shell
    #[arg(long)]
    pub boyer: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Spacing {
    Log,
    Linear,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub dmin: f64,
    /// Upper end; may be omitted for a single point
    #[arg(long, allow_negative_numbers = true)]
    pub dmax: Option<f64>,
    #[arg(long, default_value_t = 25)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = Spacing::Log)]
    pub spacing: Spacing,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub shell: ShellArgs,
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub grid: GridArgs,
}

#[derive(Debug, Args)]
pub struct PlateArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, default_value_t = 1e-3, allow_negative_numbers = true)]
    pub vmin: f64,
    #[arg(long, default_value_t = 1e3, allow_negative_numbers = true)]
    pub vmax: f64,
    #[arg(long, default_value_t = 61)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = Spacing::Log)]
    pub spacing: Spacing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RegimeArg {
    Near,
    Far,
    Plate,
    All,
}

#[derive(Debug, Args)]
pub struct AsymptoteArgs {
    #[command(flatten)]
    pub shell: ShellArgs,
    #[command(flatten)]
    pub common: CommonArgs,
    #[command(flatten)]
    pub grid: GridArgs,
    #[arg(long, value_enum, default_value_t = RegimeArg::All)]
    pub regime: RegimeArg,
}

#[derive(Debug, Args)]
pub struct BesselArgs {
    /// Order or inclusive range, e.g. `3` or `0..3`
    #[arg(long)]
    pub l: String,
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// Fully validated parameters for one run.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub shell: ShellSpec,
    pub atom: AtomModel,
    pub eval: EvalConfig,
    pub format: Format,
    pub magnitude: bool,
    pub columns: Vec<String>,
}

impl ShellArgs {
    pub fn resolve(&self) -> Result<ShellSpec> {
        if self.c60 {
            return Ok(c60_default());
        }
        let Some(r) = self.radius else { bail!("missing shell: give --R with --Omega or --Q, or --c60") };
        Ok(match (self.omega, self.q) {
            (Some(omega), None) => ShellSpec::new(r, omega)?,
            (None, Some(q)) => ShellSpec::from_q(r, q)?,
            _ => bail!("give exactly one of --Omega and --Q"),
        })
    }
}

impl CommonArgs {
    pub fn eval(&self) -> Result<EvalConfig> {
        let mut cfg = EvalConfig::default();
        if let Some(tol) = self.tol {
            if !(tol > 0.0 && tol < 1.0) {
                bail!("tol must lie in (0, 1) (got {tol})");
            }
            cfg.quad_rel_tol = tol;
            cfg.lsum_rel_tol = 0.1 * tol;
        }
        if let Some(l) = self.lmax {
            cfg.l_hard_max = l;
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn resolve(&self, shell: ShellSpec) -> Result<RunConfig> {
        Ok(RunConfig {
            shell,
            atom: atom_file::resolve(&self.atom)?,
            eval: self.eval()?,
            format: self.format,
            magnitude: self.magnitude,
            columns: self.columns.clone(),
        })
    }
}

impl GridArgs {
    pub fn grid(&self) -> Result<Vec<f64>> {
        build_grid("d", self.dmin, self.dmax.unwrap_or(self.dmin), self.points, self.spacing)
    }
}

pub fn build_grid(name: &str, lo: f64, hi: f64, points: usize, spacing: Spacing) -> Result<Vec<f64>> {
    if points < 1 {
        bail!("points must be at least 1");
    }
    if !(lo > 0.0 && lo.is_finite()) {
        bail!("{name} must be positive (got {lo})");
    }
    if points == 1 {
        return Ok(vec![lo]);
    }
    if !(hi > lo && hi.is_finite()) {
        bail!("{name}min must be below {name}max (got {lo} and {hi})");
    }
    let n = (points - 1) as f64;
    Ok((0..points)
        .map(|i| {
            let t = i as f64 / n;
            if i == points - 1 {
                hi
            } else {
                match spacing {
                    Spacing::Log => lo * (hi / lo).powf(t),
                    Spacing::Linear => lo + (hi - lo) * t,
                }
            }
        })
        .collect())
}

/// Parse `3` or `0..3` (inclusive).
pub fn order_range(spec: &str) -> Result<(usize, usize)> {
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| anyhow::anyhow!("bad order {s:?}"));
    match spec.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                bail!("empty order range {spec:?}");
            }
            Ok((a, b))
        }
        None => {
            let l = parse(spec)?;
            Ok((l, l))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        let g = build_grid("d", 1.0, 100.0, 3, Spacing::Log).unwrap();
        assert!((g[1] - 10.0).abs() < 1e-12 && g[2] == 100.0);
        assert_eq!(build_grid("d", 1.0, 3.0, 3, Spacing::Linear).unwrap(), vec![1.0, 2.0, 3.0]);
        assert_eq!(build_grid("d", 0.5, 0.5, 1, Spacing::Log).unwrap(), vec![0.5]);
        assert!(build_grid("d", 2.0, 1.0, 3, Spacing::Log).is_err());
        assert!(build_grid("d", 1.0, 2.0, 0, Spacing::Log).is_err());
        assert!(build_grid("d", -1.0, 2.0, 2, Spacing::Log).is_err());
    }

    #[test]
    fn order_ranges() {
        assert_eq!(order_range("0..3").unwrap(), (0, 3));
        assert_eq!(order_range("0..=3").unwrap(), (0, 3));
        assert_eq!(order_range("7").unwrap(), (7, 7));
        assert!(order_range("3..1").is_err());
        assert!(order_range("a").is_err());
    }
}
