//! Nonnegative Borel measures on ℂ: atomic lists, radial and general
//! densities, and cell-averaged grid densities, with ball masses μ(B(a, r))
//! and the JSON file format used by the CLI.

use crate::error::{Error, Result};
use crate::quad::{self, QuadratureConfig};
use num_complex::Complex64;
use std::sync::Arc;

/// Cell-averaged density on a square grid.
///
/// `values[i][j]` is the average density over the cell with lower-left
/// corner `origin + (j·cell, i·cell)`.
#[derive(Debug, Clone, serde::Serialize, serde::Deserialize)]
pub struct GridDensity {
    pub cell: f64,
    pub origin: (f64, f64),
    pub values: Vec<Vec<f64>>,
}

type DensityFn = Arc<dyn Fn(Complex64) -> f64 + Send + Sync>;
type RadialFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A nonnegative measure given as atoms, a density, or a grid.
#[derive(Clone)]
pub enum MeasureSpec {
    /// Point masses (location, weight ≥ 0).
    Atoms(Vec<(Complex64, f64)>),
    /// dμ = ρ(|z|) dA.
    RadialDensity(RadialFn),
    /// dμ = ρ(z) dA.
    Density(DensityFn),
    /// Piecewise-constant density on a square grid.
    Grid(GridDensity),
}

impl std::fmt::Debug for MeasureSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MeasureSpec::Atoms(atoms) => f.debug_tuple("Atoms").field(&atoms.len()).finish(),
            MeasureSpec::RadialDensity(_) => f.write_str("RadialDensity(..)"),
            MeasureSpec::Density(_) => f.write_str("Density(..)"),
            MeasureSpec::Grid(g) => f
                .debug_struct("Grid")
                .field("cell", &g.cell)
                .field("rows", &g.values.len())
                .finish(),
        }
    }
}

impl MeasureSpec {
    pub fn atoms(atoms: Vec<(Complex64, f64)>) -> Result<Self> {
        if atoms.iter().any(|(_, w)| !(*w >= 0.0) || !w.is_finite()) {
            return Err(Error::domain("atom weights must be finite and nonnegative"));
        }
        Ok(MeasureSpec::Atoms(atoms))
    }

    pub fn radial_density(rho: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        MeasureSpec::RadialDensity(Arc::new(rho))
    }

    pub fn density(rho: impl Fn(Complex64) -> f64 + Send + Sync + 'static) -> Self {
        MeasureSpec::Density(Arc::new(rho))
    }

    pub fn grid(grid: GridDensity) -> Result<Self> {
        if !(grid.cell > 0.0 && grid.cell.is_finite()) {
            return Err(Error::domain("grid cell size must be positive"));
        }
        let cols = grid.values.first().map_or(0, |r| r.len());
        if grid.values.iter().any(|r| r.len() != cols) {
            return Err(Error::domain("grid rows must have equal length"));
        }
        if grid.values.iter().flatten().any(|v| !(*v >= 0.0) || !v.is_finite()) {
            return Err(Error::domain("grid densities must be finite and nonnegative"));
        }
        Ok(MeasureSpec::Grid(grid))
    }

    /// Lebesgue area measure dA.
    pub fn lebesgue() -> Self {
        MeasureSpec::density(|_| 1.0)
    }

    /// A unit point mass at the origin.
    pub fn unit_atom_at_origin() -> Self {
        MeasureSpec::Atoms(vec![(Complex64::new(0.0, 0.0), 1.0)])
    }

    /// Atoms at 0, 1, …, n−1 on the real axis with weights (1 + j)^exponent.
    /// With exponent > m·q this violates every sup-type ball-mass bound.
    pub fn polynomial_weight_atoms(n: usize, exponent: f64) -> Self {
        MeasureSpec::Atoms(
            (0..n)
                .map(|j| {
                    let a = Complex64::new(j as f64, 0.0);
                    (a, (1.0 + j as f64).powf(exponent))
                })
                .collect(),
        )
    }

    /// Radius of a disk around 0 known to contain the support, when the
    /// representation makes one available.
    pub fn support_radius(&self) -> Option<f64> {
        match self {
            MeasureSpec::Atoms(atoms) => Some(
                atoms
                    .iter()
                    .filter(|(_, w)| *w > 0.0)
                    .map(|(z, _)| z.norm())
                    .fold(0.0, f64::max),
            ),
            MeasureSpec::Grid(grid) => {
                let rows = grid.values.len() as f64;
                let cols = grid.values.first().map_or(0, |r| r.len()) as f64;
                let corners = [
                    (grid.origin.0, grid.origin.1),
                    (grid.origin.0 + cols * grid.cell, grid.origin.1),
                    (grid.origin.0, grid.origin.1 + rows * grid.cell),
                    (grid.origin.0 + cols * grid.cell, grid.origin.1 + rows * grid.cell),
                ];
                Some(
                    corners
                        .iter()
                        .map(|&(x, y)| (x * x + y * y).sqrt())
                        .fold(0.0, f64::max),
                )
            }
            _ => None,
        }
    }
}

/// μ(B(a, r)). Atom masses are exact, with boundary atoms counted inside;
/// densities are integrated in polar coordinates around `a`; boundary grid
/// cells are split by 8×8 subsampling.
pub fn ball_mass(mu: &MeasureSpec, a: Complex64, r: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain("ball radius must be positive and finite"));
    }
    match mu {
        MeasureSpec::Atoms(atoms) => Ok(atoms
            .iter()
            .filter(|(z, _)| (z - a).norm() <= r)
            .map(|(_, w)| w)
            .sum()),
        MeasureSpec::RadialDensity(rho) => {
            let rho = rho.clone();
            polar_ball_integral(move |z| rho(z.norm()), a, r, cfg)
        }
        MeasureSpec::Density(rho) => {
            let rho = rho.clone();
            polar_ball_integral(move |z| rho(z), a, r, cfg)
        }
        MeasureSpec::Grid(grid) => Ok(grid_ball_mass(grid, a, r)),
    }
}

fn polar_ball_integral(
    rho: impl Fn(Complex64) -> f64,
    a: Complex64,
    r: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    // Angular node count probed at two radii, then held fixed.
    let mut nodes = cfg.angular_nodes;
    for &frac in &[1.0, 0.5] {
        let s = r * frac;
        let (_, used) = quad::periodic_trapezoid_auto(
            |theta| rho(a + Complex64::from_polar(s, theta)),
            &QuadratureConfig { angular_nodes: cfg.angular_nodes, ..*cfg },
        )?;
        nodes = nodes.max(used / 4).max(cfg.angular_nodes);
    }
    quad::adaptive_integrate(
        |s| {
            s * quad::periodic_trapezoid(|theta| rho(a + Complex64::from_polar(s, theta)), nodes)
        },
        0.0,
        r,
        cfg,
    )
}

fn grid_ball_mass(grid: &GridDensity, a: Complex64, r: f64) -> f64 {
    let h = grid.cell;
    let mut mass = 0.0;
    for (i, row) in grid.values.iter().enumerate() {
        for (j, &rho) in row.iter().enumerate() {
            if rho == 0.0 {
                continue;
            }
            let x0 = grid.origin.0 + j as f64 * h;
            let y0 = grid.origin.1 + i as f64 * h;
            // Distance from the center to the cell rectangle.
            let dx = (x0 - a.re).max(a.re - (x0 + h)).max(0.0);
            let dy = (y0 - a.im).max(a.im - (y0 + h)).max(0.0);
            if dx * dx + dy * dy > r * r {
                continue; // fully outside
            }
            let corners_inside = [(x0, y0), (x0 + h, y0), (x0, y0 + h), (x0 + h, y0 + h)]
                .iter()
                .all(|&(x, y)| {
                    let (dx, dy) = (x - a.re, y - a.im);
                    dx * dx + dy * dy <= r * r
                });
            if corners_inside {
                mass += rho * h * h;
            } else {
                // boundary cell: 8×8 midpoint subsample
                const K: usize = 8;
                let sub = h / K as f64;
                let mut hits = 0usize;
                for ii in 0..K {
                    for jj in 0..K {
                        let x = x0 + (jj as f64 + 0.5) * sub;
                        let y = y0 + (ii as f64 + 0.5) * sub;
                        let (dx, dy) = (x - a.re, y - a.im);
                        if dx * dx + dy * dy <= r * r {
                            hits += 1;
                        }
                    }
                }
                mass += rho * h * h * hits as f64 / (K * K) as f64;
            }
        }
    }
    mass
}

/// Parse the measure file format:
/// `{"atoms": [[re, im, weight], ...]}` or
/// `{"grid": {"cell": h, "origin": [x0, y0], "values": [[...], ...]}}`.
pub fn measure_from_json(text: &str) -> Result<MeasureSpec> {
    #[derive(serde::Deserialize)]
    #[serde(deny_unknown_fields)]
    struct GridFile {
        cell: f64,
        origin: [f64; 2],
        values: Vec<Vec<f64>>,
    }
    #[derive(serde::Deserialize)]
    #[serde(deny_unknown_fields)]
    struct MeasureFile {
        #[serde(default)]
        atoms: Option<Vec<[f64; 3]>>,
        #[serde(default)]
        grid: Option<GridFile>,
    }

    let parsed: MeasureFile = serde_json::from_str(text)
        .map_err(|e| Error::domain(format!("malformed measure JSON: {e}")))?;
    match (parsed.atoms, parsed.grid) {
        (Some(atoms), None) => MeasureSpec::atoms(
            atoms
                .into_iter()
                .map(|[re, im, w]| (Complex64::new(re, im), w))
                .collect(),
        ),
        (None, Some(grid)) => MeasureSpec::grid(GridDensity {
            cell: grid.cell,
            origin: (grid.origin[0], grid.origin[1]),
            values: grid.values,
        }),
        _ => Err(Error::domain(
            "measure JSON must contain exactly one of \"atoms\" or \"grid\"",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig {
            rel_tol: 1e-9,
            ..QuadratureConfig::default()
        }
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn atom_masses_are_exact() {
        let mu = MeasureSpec::atoms(vec![(c(0.0, 0.0), 1.0)]).unwrap();
        assert_eq!(ball_mass(&mu, c(0.0, 0.0), 1.0, &cfg()).unwrap(), 1.0);
        let far = MeasureSpec::atoms(vec![(c(3.0, 5.0), 1.0)]).unwrap();
        assert_eq!(ball_mass(&far, c(0.0, 0.0), 1.0, &cfg()).unwrap(), 0.0);
        // boundary atom counts as inside
        let edge = MeasureSpec::atoms(vec![(c(1.0, 0.0), 2.0)]).unwrap();
        assert_eq!(ball_mass(&edge, c(0.0, 0.0), 1.0, &cfg()).unwrap(), 2.0);
    }

    #[test]
    fn atom_mass_additivity() {
        let mu = MeasureSpec::atoms(vec![
            (c(0.1, 0.0), 0.5),
            (c(0.0, 0.4), 1.5),
            (c(2.0, 2.0), 7.0),
        ])
        .unwrap();
        assert_eq!(ball_mass(&mu, c(0.0, 0.0), 1.0, &cfg()).unwrap(), 2.0);
        assert_eq!(ball_mass(&mu, c(2.0, 2.0), 0.5, &cfg()).unwrap(), 7.0);
    }

    #[test]
    fn lebesgue_disk_area() {
        let mu = MeasureSpec::lebesgue();
        for &(a, r) in &[(c(0.0, 0.0), 1.0), (c(2.0, -3.0), 0.7)] {
            let m = ball_mass(&mu, a, r, &cfg()).unwrap();
            assert_relative_eq!(m, PI * r * r, max_relative = 1e-6);
        }
    }

    #[test]
    fn radial_gaussian_ball_at_origin() {
        // ∫_{B(0,r)} e^{-|z|²} dA = π(1 − e^{-r²})
        let mu = MeasureSpec::radial_density(|s| (-s * s).exp());
        let m = ball_mass(&mu, c(0.0, 0.0), 1.5, &cfg()).unwrap();
        assert_relative_eq!(m, PI * (1.0 - (-2.25f64).exp()), max_relative = 1e-8);
    }

    #[test]
    fn grid_unit_density_approximates_area() {
        // 1 on [-2,2]²: ball of radius 1 inside
        let n = 80;
        let cell = 4.0 / n as f64;
        let grid = GridDensity {
            cell,
            origin: (-2.0, -2.0),
            values: vec![vec![1.0; n]; n],
        };
        let mu = MeasureSpec::grid(grid).unwrap();
        let m = ball_mass(&mu, c(0.0, 0.0), 1.0, &cfg()).unwrap();
        assert_relative_eq!(m, PI, max_relative = 2e-3);
    }

    #[test]
    fn support_radius_known_for_atoms_and_grid() {
        let mu = MeasureSpec::atoms(vec![(c(3.0, 4.0), 1.0), (c(0.0, 0.0), 1.0)]).unwrap();
        assert_relative_eq!(mu.support_radius().unwrap(), 5.0, max_relative = 1e-15);
        assert!(MeasureSpec::lebesgue().support_radius().is_none());
    }

    #[test]
    fn json_atoms_round_trip() {
        let mu = measure_from_json(r#"{"atoms": [[0.0, 0.0, 1.0], [1.0, 2.0, 0.5]]}"#).unwrap();
        match &mu {
            MeasureSpec::Atoms(atoms) => {
                assert_eq!(atoms.len(), 2);
                assert_eq!(atoms[1].0, c(1.0, 2.0));
            }
            other => panic!("expected atoms, got {other:?}"),
        }
    }

    #[test]
    fn json_grid_and_errors() {
        let mu = measure_from_json(
            r#"{"grid": {"cell": 0.5, "origin": [-1.0, -1.0], "values": [[1.0, 2.0], [3.0, 4.0]]}}"#,
        )
        .unwrap();
        assert!(matches!(mu, MeasureSpec::Grid(_)));
        assert!(measure_from_json("{").is_err());
        assert!(measure_from_json("{}").is_err());
        let both = r#"{"atoms": [[0,0,1]],
                       "grid": {"cell": 1.0, "origin": [0,0], "values": [[1.0]]}}"#;
        assert!(measure_from_json(both).is_err());
        assert!(measure_from_json(r#"{"atoms": [[0.0, 0.0, -1.0]]}"#).is_err());
        assert!(measure_from_json(r#"{"points": []}"#).is_err());
    }
}
