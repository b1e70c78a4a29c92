//! Plain-text oscillator tables: one `g omega_eV` pair per line, `#` comments.
//!
//! `g` is chosen so that `g^2 / omega^2` is the static polarizability in nm^3.

use std::path::Path;

use anyhow::{bail, Context, Result};
use casimir_shell_core::{hydrogen_default, AtomModel, Oscillator};

pub fn parse(text: &str, label: &str) -> Result<AtomModel> {
    let mut oscillators = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            bail!("line {}: expected two columns `g omega_eV`, found {}", n + 1, fields.len());
        }
        let g: f64 = fields[0].parse().with_context(|| format!("line {}: bad strength {:?}", n + 1, fields[0]))?;
        let w: f64 = fields[1].parse().with_context(|| format!("line {}: bad frequency {:?}", n + 1, fields[1]))?;
        oscillators.push(Oscillator::new(g, w).with_context(|| format!("line {}", n + 1))?);
    }
    Ok(AtomModel::new(label, oscillators)?)
}

pub fn load(path: &Path) -> Result<AtomModel> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read atom file {}", path.display()))?;
    parse(&text, &path.display().to_string()).with_context(|| format!("atom file {}", path.display()))
}

/// Resolve `hydrogen` or `file:<path>`.
pub fn resolve(spec: &str) -> Result<AtomModel> {
    match spec {
        "hydrogen" => Ok(hydrogen_default()),
        _ => match spec.strip_prefix("file:") {
            Some(path) => load(Path::new(path)),
            None => bail!("unknown atom {spec:?} (expected `hydrogen` or `file:<path>`)"),
        },
    }
}
