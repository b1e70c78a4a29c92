//! Subcommand implementations. Each writes its table to `out` and returns
//! a [`Status`]; invalid input surfaces as an error.

use std::f64::consts::PI;
use std::io::Write;
use std::thread;

use anyhow::{bail, Context, Result};
use casimir_shell_core::limits::{
    self, effective_polarizability, far_field_f, plate_energy, plate_s, Regime,
};
use casimir_shell_core::{
    boyer_energy, c60_default, eval_pair, hydrogen_default, interaction_energy, sweep_row, EvalConfig,
    RiccatiBessel, ShellSpec,
};

use crate::config::{
    build_grid, order_range, AsymptoteArgs, BesselArgs, EnergyArgs, PlateArgs, RegimeArg, RunConfig, SweepArgs,
};
use crate::output::{num, Table};

pub const THREADS_ENV: &str = "CASIMIR_SHELL_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    NotConverged,
    CheckFailed,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::NotConverged | Status::CheckFailed => 2,
        }
    }
}

fn converged(all: bool) -> Status {
    if all {
        Status::Ok
    } else {
        Status::NotConverged
    }
}

fn emit(out: &mut dyn Write, table: Table, run: &RunConfig) -> Result<()> {
    let table = if run.columns.is_empty() {
        table
    } else {
        table.select(&run.columns).map_err(anyhow::Error::msg)?
    };
    table.write(out, run.format)?;
    Ok(())
}

fn energy_value(run: &RunConfig, e: f64) -> String {
    num(if run.magnitude { e.abs() } else { e })
}

pub fn energy(args: &EnergyArgs, out: &mut dyn Write) -> Result<Status> {
    let run = if args.boyer {
        let r = match (args.shell.c60, args.shell.radius) {
            (true, _) => c60_default().radius_nm,
            (false, Some(r)) => r,
            (false, None) => bail!("missing shell: give --R or --c60"),
        };
        args.common.resolve(ShellSpec::new(r, 0.0)?)?
    } else {
        args.common.resolve(args.shell.resolve()?)?
    };
    let res = if args.boyer {
        boyer_energy(run.shell.radius_nm, &run.atom, args.d, &run.eval)?
    } else {
        interaction_energy(&run.shell, &run.atom, args.d, &run.eval)?
    };
    let mut t = Table::new(&["energy_eV", "S", "l_used", "quad_error", "converged"]);
    t.push(vec![
        energy_value(&run, res.energy_ev),
        num(res.s_dimensionless),
        res.l_used.to_string(),
        num(res.quad_error_estimate),
        res.converged.to_string(),
    ]);
    emit(out, t, &run)?;
    Ok(converged(res.converged))
}

/// Worker count from the environment, defaulting to the available cores.
pub fn thread_limit() -> Result<usize> {
    match std::env::var(THREADS_ENV) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => bail!("{THREADS_ENV} must be a positive integer (got {v:?})"),
        },
        Err(_) => Ok(thread::available_parallelism().map(|n| n.get()).unwrap_or(1)),
    }
}

/// Map `f` over `items` on up to `threads` scoped workers; results keep input order.
pub fn par_map<T, R, F>(items: &[T], threads: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = threads.clamp(1, items.len().max(1));
    if workers == 1 {
        return items.iter().map(&f).collect();
    }
    let mut slots: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let f = &f;
                s.spawn(move || {
                    items.iter().enumerate().skip(w).step_by(workers).map(|(i, x)| (i, f(x))).collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            for (i, r) in h.join().expect("sweep worker panicked") {
                slots[i] = Some(r);
            }
        }
    });
    slots.into_iter().map(|r| r.expect("every slot filled")).collect()
}

pub fn sweep(args: &SweepArgs, out: &mut dyn Write) -> Result<Status> {
    let run = args.common.resolve(args.shell.resolve()?)?;
    let grid = args.grid.grid()?;
    let threads = thread_limit()?;
    let rows = par_map(&grid, threads, |&d| sweep_row(&run.shell, &run.atom, d, &run.eval));
    let mut t = Table::new(&["d_nm", "E_full_eV", "E_boyer_eV", "E_plate_eV", "E_near_eV", "E_far_eV", "S_omega"]);
    let mut all = true;
    for row in rows {
        let row = row?;
        all &= row.converged;
        t.push(vec![
            num(row.d_nm),
            energy_value(&run, row.e_full),
            energy_value(&run, row.e_boyer),
            energy_value(&run, row.e_plate),
            energy_value(&run, row.e_near),
            energy_value(&run, row.e_far),
            num(row.s_omega),
        ]);
    }
    emit(out, t, &run)?;
    Ok(converged(all))
}

pub fn plate(args: &PlateArgs, out: &mut dyn Write) -> Result<Status> {
    let run = args.common.resolve(c60_default())?;
    let grid = build_grid("v", args.vmin, args.vmax, args.points, args.spacing)?;
    let ka = run.atom.lowest_wavenumber();
    let mut t = Table::new(&["v", "S", "E_plate_eV"]);
    for v in grid {
        t.push(vec![num(v), num(plate_s(v)?), energy_value(&run, plate_energy(&run.atom, v / ka)?)]);
    }
    emit(out, t, &run)?;
    Ok(Status::Ok)
}

pub fn asymptote(args: &AsymptoteArgs, out: &mut dyn Write) -> Result<Status> {
    let run = args.common.resolve(args.shell.resolve()?)?;
    let grid = args.grid.grid()?;
    let regimes: &[Regime] = match args.regime {
        RegimeArg::Near => &[Regime::Near],
        RegimeArg::Far => &[Regime::Far],
        RegimeArg::Plate => &[Regime::Plate],
        RegimeArg::All => &[Regime::Near, Regime::Plate, Regime::Far],
    };
    let full = par_map(&grid, thread_limit()?, |&d| interaction_energy(&run.shell, &run.atom, d, &run.eval));
    let mut t = Table::new(&[
        "d_nm",
        "regime",
        "E_full_eV",
        "E_limit_eV",
        "rel_dev",
        "d_ka",
        "d_over_R",
        "d_over_screening",
        "converged",
    ]);
    let mut all = true;
    for (&d, res) in grid.iter().zip(full) {
        let res = res?;
        all &= res.converged;
        for &regime in regimes {
            let r = limits::compare(&run.shell, &run.atom, d, res.energy_ev, res.converged, regime)?;
            t.push(vec![
                num(d),
                regime.name().into(),
                energy_value(&run, r.e_full_ev),
                energy_value(&run, r.e_limit_ev),
                num(r.rel_dev),
                num(r.validity.d_times_ka),
                num(r.validity.d_over_radius),
                num(r.validity.d_over_screening),
                r.converged.to_string(),
            ]);
        }
    }
    emit(out, t, &run)?;
    Ok(converged(all))
}

pub fn bessel(args: &BesselArgs, out: &mut dyn Write) -> Result<Status> {
    let (lo, hi) = order_range(&args.l)?;
    let seq = RiccatiBessel::default().eval_sequence(hi, args.x)?;
    let mut t = Table::new(&["l", "x", "s_hat", "e_hat", "ds_hat", "de_hat", "exponent", "s", "e"]);
    for p in &seq[lo..=hi] {
        t.push(vec![
            p.l.to_string(),
            num(p.x),
            num(p.s_hat),
            num(p.e_hat),
            num(p.ds_hat),
            num(p.de_hat),
            p.exponent.to_string(),
            num(p.s()),
            num(p.e()),
        ]);
    }
    t.write(out, args.format)?;
    Ok(Status::Ok)
}

struct Check {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn check(name: &'static str, pass: bool, detail: String) -> Check {
    Check { name, pass, detail }
}

fn rel(a: f64, b: f64) -> f64 {
    (a / b - 1.0).abs()
}

fn checks() -> Result<Vec<Check>> {
    let h = hydrogen_default();
    let c60 = c60_default();
    let cfg = EvalConfig::default();
    let mut list = Vec::new();

    let mut worst: f64 = 0.0;
    for l in [0usize, 1, 5, 40, 200] {
        for x in [1e-4, 0.03, 1.0, 17.0, 999.0] {
            worst = worst.max((eval_pair(l, x)?.wronskian() + 1.0).abs());
        }
    }
    list.push(check("wronskian", worst <= 1e-10, format!("max |W + 1| = {worst:.2e}")));

    let p = eval_pair(0, 1.0)?;
    let dev = rel(p.s(), 1.0f64.sinh());
    list.push(check("s0 closed form", dev <= 1e-13, format!("s_0(1) = {:.10}", p.s())));

    let a0 = h.static_polarizability();
    list.push(check("hydrogen polarizability", rel(a0, 6.669e-4) < 1e-12, format!("{a0:.4e} nm^3")));

    let s_hi = plate_s(1e3)?;
    let s_lo = plate_s(1e-3)? / (PI * 1e-3 / 3.0);
    list.push(check(
        "plate function limits",
        (s_hi - 1.0).abs() <= 1e-3 && (s_lo - 1.0).abs() <= 5e-3,
        format!("S(1e3) = {s_hi:.6}, S(1e-3) / (pi v / 3) = {s_lo:.6}"),
    ));

    let f_hi = far_field_f(1e3)?;
    list.push(check(
        "far-field function limits",
        far_field_f(0.0)? == 0.0 && (f_hi - 1.0).abs() <= 1e-3,
        format!("F(1e3) = {f_hi:.6}"),
    ));

    let ap = effective_polarizability(&c60)?.m3;
    list.push(check("C60 effective polarizability", rel(ap, 4.0e-29) <= 0.02, format!("{ap:.4e} m^3")));

    let plate_contact = plate_energy(&h, 0.053)?;
    list.push(check("plate contact energy", rel(plate_contact.abs(), 6.4) <= 0.1, format!("{plate_contact:.4} eV")));

    let contact = interaction_energy(&c60, &h, 0.053, &cfg)?;
    list.push(check(
        "C60 contact energy",
        contact.converged && rel(contact.energy_ev.abs(), 3.8) <= 0.1,
        format!("{:.4} eV, l_used {}", contact.energy_ev, contact.l_used),
    ));

    let boyer = boyer_energy(c60.radius_nm, &h, 0.053, &cfg)?;
    list.push(check(
        "finite conductivity weakens attraction",
        boyer.energy_ev < contact.energy_ev && contact.energy_ev < 0.0,
        format!("E_B = {:.4} eV", boyer.energy_ev),
    ));

    let zero = interaction_energy(&ShellSpec::new(1.0, 0.0)?, &h, 1.0, &cfg)?;
    list.push(check("zero coupling", zero.energy_ev == 0.0, format!("E = {}", zero.energy_ev)));

    Ok(list)
}

pub fn selftest(out: &mut dyn Write) -> Result<Status> {
    let list = checks().context("selftest could not run")?;
    let mut failed = 0;
    for c in &list {
        if c.pass {
            writeln!(out, "ok    {}: {}", c.name, c.detail)?;
        } else {
            failed += 1;
            writeln!(out, "FAIL  {}: {}", c.name, c.detail)?;
        }
    }
    writeln!(out, "{} checks, {failed} failed", list.len())?;
    Ok(if failed == 0 { Status::Ok } else { Status::CheckFailed })
}
