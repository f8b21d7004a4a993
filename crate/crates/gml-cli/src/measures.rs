//! Built-in measures and measure-file loading for the trace command.

use anyhow::{bail, Context};
use gml::measure::{measure_from_json, MeasureSpec};
use std::path::Path;

/// Resolve a --measure argument: a built-in name or a JSON file path.
///
/// Built-ins: `lebesgue` (dA), `atom0` (unit mass at 0), `gaussian`
/// (e^{-|z|²} dA), `growing` (atoms at j = 0..10 with weights
/// (1+j)^{mq+1}, which violate the sup condition for the given m, q).
pub fn load_measure(spec: &str, m: u32, q: f64) -> anyhow::Result<(MeasureSpec, String)> {
    match spec {
        "lebesgue" => Ok((MeasureSpec::lebesgue(), "Lebesgue area measure".into())),
        "atom0" => Ok((MeasureSpec::unit_atom_at_origin(), "unit atom at 0".into())),
        "gaussian" => Ok((
            MeasureSpec::radial_density(|s| (-s * s).exp()),
            "standard Gaussian density".into(),
        )),
        "growing" => {
            let exponent = m as f64 * q + 1.0;
            Ok((
                MeasureSpec::polynomial_weight_atoms(11, exponent),
                format!("atoms at 0..=10 with weights (1+j)^{exponent}"),
            ))
        }
        path => {
            let text = std::fs::read_to_string(Path::new(path))
                .with_context(|| format!("cannot read measure file {path:?}"))?;
            let mu = measure_from_json(&text)?;
            if matches!(mu, MeasureSpec::Atoms(ref a) if a.is_empty()) {
                bail!("measure file {path:?} contains no atoms");
            }
            Ok((mu, format!("measure from {path}")))
        }
    }
}
