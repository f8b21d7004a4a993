//! Gaussian integral means M_{p,α}(f, r): the ratio of the p-th power
//! integral of |f| against e^{-α|z|²} over the disk of radius r to the
//! weight's own integral.
//!
//! Three routes are provided and cross-checked: a closed form for monomials
//! through the weighted power integrals, an exact coefficient series for
//! p = 2, and a nested angular/radial quadrature for general (f, p). On top
//! of them sit the derivative identity, the monotone maximum-principle
//! chain, and the disk embedding bound.

use crate::error::{Error, Result};
use crate::poly::PowerSeriesFunction;
use crate::quad::{self, QuadratureConfig};
use crate::special;
use num_complex::Complex64;
use std::f64::consts::{PI, TAU};

/// Exponent budget shared with the weighted power integrals.
const EXP_GUARD: f64 = 700.0;

/// Evaluation radius: finite, or the r → ∞ limit.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub enum Radius {
    Finite(f64),
    Infinite,
}

/// Parameter triple (p, α, r) of the means.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct MeansParams {
    pub p: f64,
    pub alpha: f64,
    pub radius: Radius,
}

impl MeansParams {
    pub fn new(p: f64, alpha: f64, radius: Radius) -> Result<Self> {
        if !(p > 0.0 && p.is_finite()) {
            return Err(Error::domain("p must be positive and finite"));
        }
        if !alpha.is_finite() {
            return Err(Error::domain("alpha must be finite"));
        }
        match radius {
            Radius::Finite(r) if !(r > 0.0 && r.is_finite()) => {
                return Err(Error::domain("radius must be positive and finite"))
            }
            Radius::Infinite if alpha <= 0.0 => {
                return Err(Error::domain("r = ∞ requires alpha > 0"))
            }
            _ => {}
        }
        Ok(MeansParams { p, alpha, radius })
    }
}

/// The radial weight v(r) = r e^{-αr²}.
#[derive(Debug, Clone, Copy)]
pub struct RadialWeight {
    pub alpha: f64,
}

impl RadialWeight {
    pub fn eval(&self, s: f64) -> f64 {
        s * (-self.alpha * s * s).exp()
    }

    /// ∫₀^r v(s) ds in closed form.
    pub fn integral_to(&self, r: f64) -> f64 {
        if self.alpha == 0.0 {
            0.5 * r * r
        } else {
            -(-self.alpha * r * r).exp_m1() / (2.0 * self.alpha)
        }
    }
}

fn guard_radius(alpha: f64, r: f64) -> Result<()> {
    if alpha < 0.0 && -alpha * r * r > EXP_GUARD {
        return Err(Error::Overflow(format!(
            "e^({}r²) at r={r} exceeds the f64 exponent budget",
            -alpha
        )));
    }
    Ok(())
}

fn check_p(p: f64) -> Result<()> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::domain("p must be positive and finite"));
    }
    Ok(())
}

fn check_finite_radius(r: f64) -> Result<()> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(Error::domain("radius must be positive and finite"));
    }
    Ok(())
}

fn angular_fixed(f: &PowerSeriesFunction, p: f64, r: f64, nodes: usize) -> f64 {
    quad::periodic_trapezoid(
        |theta| f.abs_pow(Complex64::from_polar(r, theta), p),
        nodes,
    )
}

/// Even node count for which the trapezoid rule is exact on |f|² at p = 2
/// (the integrand is a trigonometric polynomial of degree ≤ deg f).
fn exact_p2_nodes(f: &PowerSeriesFunction, cfg: &QuadratureConfig) -> usize {
    let deg = f.degree().unwrap_or(0);
    let needed = 2 * deg + 2;
    cfg.angular_nodes.max(needed + (needed % 2))
}

/// Pick one angular node count for a whole radius sweep: exact count for
/// p = 2, otherwise the largest count demanded by doubling-convergence
/// probes at the given radii. Holding it fixed keeps sweeps reproducible,
/// the radial integrand smooth, and chain comparisons consistent.
fn pick_angular_nodes_probed(
    f: &PowerSeriesFunction,
    p: f64,
    probes: &[f64],
    cfg: &QuadratureConfig,
) -> Result<usize> {
    if p == 2.0 {
        return Ok(exact_p2_nodes(f, cfg));
    }
    let mut nodes = cfg.angular_nodes.max(exact_p2_nodes(f, cfg));
    for &r in probes {
        if r <= 0.0 {
            continue;
        }
        let probe_cfg = QuadratureConfig { angular_nodes: cfg.angular_nodes, ..*cfg };
        let (_, used) = quad::periodic_trapezoid_auto(
            |theta| f.abs_pow(Complex64::from_polar(r, theta), p),
            &probe_cfg,
        )?;
        // The last two doublings only confirmed convergence.
        nodes = nodes.max((used / 4).max(probe_cfg.angular_nodes));
    }
    Ok(nodes)
}

fn probe_fractions(r: f64) -> [f64; 8] {
    [
        0.125 * r,
        0.25 * r,
        0.375 * r,
        0.5 * r,
        0.625 * r,
        0.75 * r,
        0.875 * r,
        r,
    ]
}

fn pick_angular_nodes(
    f: &PowerSeriesFunction,
    p: f64,
    r_max: f64,
    cfg: &QuadratureConfig,
) -> Result<usize> {
    pick_angular_nodes_probed(f, p, &probe_fractions(r_max), cfg)
}

/// Radius beyond which the Gaussian-weighted mass of |f|^p is negligible at
/// the probe level: where s^{pd+1} e^{-αs²} has decayed well past its peak.
fn mass_radius(f: &PowerSeriesFunction, p: f64, alpha: f64) -> f64 {
    let mu = 0.5 * p * f.degree().unwrap_or(0) as f64;
    ((2.0 * (mu + 4.0)) / alpha).max(4.0 / alpha).sqrt()
}

/// M(r) = ∫₀^{2π} |f(re^{iθ})|^p dθ, certified by node doubling.
/// The continuous extension at r = 0 is 2π|f(0)|^p.
pub fn angular_mean(
    f: &PowerSeriesFunction,
    p: f64,
    r: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    check_p(p)?;
    if r < 0.0 || !r.is_finite() {
        return Err(Error::domain("angular mean requires finite r >= 0"));
    }
    if r == 0.0 {
        return Ok(TAU * f.abs_pow(Complex64::new(0.0, 0.0), p));
    }
    if p == 2.0 {
        return Ok(angular_fixed(f, p, r, exact_p2_nodes(f, cfg)));
    }
    let (value, _) =
        quad::periodic_trapezoid_auto(|theta| f.abs_pow(Complex64::from_polar(r, theta), p), cfg)?;
    Ok(value)
}

/// Closed-form route for monomials:
/// M_{p,α}(z^k, r) = f_{pk/2}(r²) / f_0(r²) in the x = r² variable.
pub fn means_monomial(k: u32, p: f64, alpha: f64, r: f64) -> Result<f64> {
    check_p(p)?;
    check_finite_radius(r)?;
    if !alpha.is_finite() {
        return Err(Error::domain("alpha must be finite"));
    }
    if k == 0 {
        return Ok(1.0);
    }
    guard_radius(alpha, r)?;
    let cfg = QuadratureConfig::default();
    let x = r * r;
    let num = special::weighted_power_integral(0.5 * p * k as f64, alpha, x, &cfg)?;
    let den = special::weighted_power_integral(0.0, alpha, x, &cfg)?;
    Ok(num / den)
}

/// r → ∞ limit of the monomial means: Γ(λ+1)/α^λ with λ = pk/2 (α > 0).
pub fn means_monomial_at_infinity(k: u32, p: f64, alpha: f64) -> Result<f64> {
    check_p(p)?;
    if !(alpha > 0.0) {
        return Err(Error::Divergent("means at r = ∞ require alpha > 0".into()));
    }
    let lambda = 0.5 * p * k as f64;
    Ok((special::ln_gamma(lambda + 1.0) - lambda * alpha.ln()).exp())
}

/// Exact p = 2 route: M_{2,α}(f, r) = Σ_k |a_k|² M_{2,α}(z^k, r).
pub fn means_series_p2(f: &PowerSeriesFunction, alpha: f64, r: f64) -> Result<f64> {
    check_finite_radius(r)?;
    guard_radius(alpha, r)?;
    let mut sum = 0.0;
    for (k, c) in f.coeffs().iter().enumerate() {
        let w = c.norm_sqr();
        if w != 0.0 {
            sum += w * means_monomial(k as u32, 2.0, alpha, r)?;
        }
    }
    Ok(sum)
}

/// p = 2 series route at r = ∞: Σ_k |a_k|² k!/α^k (α > 0).
pub fn means_series_p2_at_infinity(f: &PowerSeriesFunction, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0) {
        return Err(Error::Divergent("means at r = ∞ require alpha > 0".into()));
    }
    let mut sum = 0.0;
    for (k, c) in f.coeffs().iter().enumerate() {
        let w = c.norm_sqr();
        if w != 0.0 {
            sum += w * means_monomial_at_infinity(k as u32, 2.0, alpha)?;
        }
    }
    Ok(sum)
}

fn means_with_nodes(
    f: &PowerSeriesFunction,
    p: f64,
    alpha: f64,
    r: f64,
    nodes: usize,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let weight = RadialWeight { alpha };
    let num = quad::adaptive_integrate(
        |s| angular_fixed(f, p, s, nodes) * weight.eval(s),
        0.0,
        r,
        cfg,
    )?;
    let den = TAU * quad::adaptive_integrate(|s| weight.eval(s), 0.0, r, cfg)?;
    Ok(num / den)
}

/// Quadrature-route means at every radius of an increasing grid, sharing a
/// single angular rule and accumulating the radial integrals piecewise, so
/// a whole sweep costs one pass over [0, r_max].
pub fn means_profile(
    f: &PowerSeriesFunction,
    p: f64,
    alpha: f64,
    radii: &[f64],
    cfg: &QuadratureConfig,
) -> Result<Vec<f64>> {
    check_p(p)?;
    if radii.is_empty() {
        return Err(Error::domain("radius grid must be nonempty"));
    }
    for w in radii.windows(2) {
        if !(w[0] < w[1]) {
            return Err(Error::domain("radii must be strictly increasing"));
        }
    }
    check_finite_radius(radii[0])?;
    let r_max = *radii.last().unwrap();
    check_finite_radius(r_max)?;
    guard_radius(alpha, r_max)?;

    let nodes = pick_angular_nodes(f, p, r_max, cfg)?;
    let weight = RadialWeight { alpha };
    let mut values = Vec::with_capacity(radii.len());
    let mut num = 0.0;
    let mut den = 0.0;
    let mut prev = 0.0;
    for &r in radii {
        num += quad::adaptive_integrate(
            |s| angular_fixed(f, p, s, nodes) * weight.eval(s),
            prev,
            r,
            cfg,
        )?;
        den += quad::adaptive_integrate(|s| weight.eval(s), prev, r, cfg)?;
        values.push(num / (TAU * den));
        prev = r;
    }
    Ok(values)
}

/// Quadrature route for arbitrary (f, p): angular means integrated against
/// the radial weight, normalized by the weight's own disk integral.
pub fn means_generic(
    f: &PowerSeriesFunction,
    p: f64,
    alpha: f64,
    r: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    check_p(p)?;
    check_finite_radius(r)?;
    guard_radius(alpha, r)?;
    let nodes = pick_angular_nodes(f, p, r, cfg)?;
    means_with_nodes(f, p, alpha, r, nodes, cfg)
}

/// ∫_ℂ |f(z)|^p e^{-α|z|²} dA(z) for α > 0, as the radial integral of the
/// angular means against the weight, truncated where the analytic
/// Gaussian-tail bound drops below 1e-14 of the running value.
pub fn gaussian_plane_integral(
    f: &PowerSeriesFunction,
    p: f64,
    alpha: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    check_p(p)?;
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::Divergent("plane integral requires alpha > 0".into()));
    }
    if f.is_zero() {
        return Ok(0.0);
    }
    let nodes = pick_angular_nodes_probed(f, p, &probe_fractions(mass_radius(f, p, alpha)), cfg)?;
    gaussian_tail_integral(f, p, alpha, nodes, cfg, 0.0, 0.0)
}

/// start_value + ∫_{start_radius}^∞ M(s) v(s) ds with a fixed angular rule:
/// the truncation radius grows until the analytic Gaussian-tail bound is
/// below 1e-14 of the accumulated value.
fn gaussian_tail_integral(
    f: &PowerSeriesFunction,
    p: f64,
    alpha: f64,
    nodes: usize,
    cfg: &QuadratureConfig,
    start_radius: f64,
    start_value: f64,
) -> Result<f64> {
    let deg = f.degree().unwrap_or(0);
    let mu = 0.5 * p * deg as f64;
    let amp = TAU * f.coeff_abs_sum().powf(p).max(f64::MIN_POSITIVE);
    let weight = RadialWeight { alpha };

    // Start beyond the integrand's peak so the tail bound below is monotone.
    let mut upper = ((2.0 * (mu + 1.0) / alpha).max(16.0)).sqrt().max(start_radius);
    let mut prev = start_radius;
    let mut value = start_value;
    for _ in 0..60 {
        value += quad::adaptive_integrate(
            |s| angular_fixed(f, p, s, nodes) * weight.eval(s),
            prev,
            upper,
            cfg,
        )?;
        // ∫_R^∞ s^{2μ+1} e^{-αs²} ds ≤ (R²)^μ e^{-αR²} / α for αR² ≥ 2μ+2.
        let x = upper * upper;
        let ln_tail = amp.ln() + mu * x.ln() - alpha * x - alpha.ln();
        if ln_tail <= (1e-14 * value.abs().max(f64::MIN_POSITIVE)).ln() {
            return Ok(value);
        }
        prev = upper;
        upper *= 1.35;
    }
    Err(Error::domain("tail truncation failed to certify"))
}

/// M_{p,α}(f, ∞) = ∫_ℂ |f|^p e^{-α|z|²} dA / ∫_ℂ e^{-α|z|²} dA for α > 0.
pub fn means_at_infinity(
    f: &PowerSeriesFunction,
    p: f64,
    alpha: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    check_p(p)?;
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::Divergent("means at r = ∞ require alpha > 0".into()));
    }
    if f.is_zero() {
        return Ok(0.0);
    }
    let num = gaussian_plane_integral(f, p, alpha, cfg)?;
    // Full-plane weight integral: ∫ e^{-α|z|²} dA = π/α.
    Ok(num * alpha / PI)
}

/// dM/dr from the derivative identity
/// v(r) ∫₀^r (M(r) − M(s)) v(s) ds / (2π (∫₀^r v)²);
/// nonnegative, and zero only for constant f.
pub fn means_derivative(
    f: &PowerSeriesFunction,
    p: f64,
    alpha: f64,
    r: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    check_p(p)?;
    check_finite_radius(r)?;
    guard_radius(alpha, r)?;
    let nodes = pick_angular_nodes(f, p, r, cfg)?;
    let weight = RadialWeight { alpha };
    let outer = angular_fixed(f, p, r, nodes);
    let gap = quad::adaptive_integrate(
        |s| (outer - angular_fixed(f, p, s, nodes)) * weight.eval(s),
        0.0,
        r,
        cfg,
    )?;
    let base = quad::adaptive_integrate(|s| weight.eval(s), 0.0, r, cfg)?;
    Ok(weight.eval(r) * gap / (TAU * base * base))
}

/// One link of the maximum-principle chain.
#[derive(Debug, Clone, serde::Serialize)]
pub struct MeansAtRadius {
    pub r: f64,
    pub value: f64,
}

/// Result of checking |f(0)|^p ≤ M(r₁) ≤ … ≤ M(r_n) [≤ M(∞) when α > 0].
#[derive(Debug, Clone, serde::Serialize)]
pub struct MaxPrincipleReport {
    pub lower_bound: f64,
    pub entries: Vec<MeansAtRadius>,
    /// Present only for α > 0.
    pub upper_bound: Option<f64>,
    /// Human-readable description of each violation beyond the slack.
    pub violations: Vec<String>,
    /// Comparisons use slack · max(1, |value|).
    pub slack: f64,
}

impl MaxPrincipleReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Evaluate the means on an increasing radius grid and verify the monotone
/// chain between |f(0)|^p and the r = ∞ limit. Violations are report
/// content, not errors.
pub fn maximum_principle_check(
    f: &PowerSeriesFunction,
    p: f64,
    alpha: f64,
    radii: &[f64],
    cfg: &QuadratureConfig,
) -> Result<MaxPrincipleReport> {
    check_p(p)?;
    if radii.is_empty() {
        return Err(Error::domain("radius grid must be nonempty"));
    }
    for w in radii.windows(2) {
        if !(w[0] < w[1]) {
            return Err(Error::domain("radii must be strictly increasing"));
        }
    }
    check_finite_radius(radii[0])?;
    let r_max = *radii.last().unwrap();
    check_finite_radius(r_max)?;
    guard_radius(alpha, r_max)?;

    let slack = 1e-9;
    // One angular rule for the whole chain, probed over both the sweep range
    // and the Gaussian mass range, so every comparison (including against
    // the r = ∞ limit) shares its angular discretization.
    let mut probes = probe_fractions(r_max).to_vec();
    if alpha > 0.0 {
        probes.extend_from_slice(&probe_fractions(mass_radius(f, p, alpha)));
    }
    let nodes = pick_angular_nodes_probed(f, p, &probes, cfg)?;
    let weight = RadialWeight { alpha };
    let mut num = 0.0;
    let mut den = 0.0;
    let mut prev = 0.0;
    let mut entries = Vec::with_capacity(radii.len());
    for &r in radii {
        num += quad::adaptive_integrate(
            |s| angular_fixed(f, p, s, nodes) * weight.eval(s),
            prev,
            r,
            cfg,
        )?;
        den += quad::adaptive_integrate(|s| weight.eval(s), prev, r, cfg)?;
        entries.push(MeansAtRadius { r, value: num / (TAU * den) });
        prev = r;
    }

    let lower_bound = f.abs_pow(Complex64::new(0.0, 0.0), p);
    let upper_bound = if alpha > 0.0 && !f.is_zero() {
        // continue the same accumulation out to the certified tail radius
        let full = gaussian_tail_integral(f, p, alpha, nodes, cfg, r_max, num)?;
        Some(full * alpha / PI)
    } else if alpha > 0.0 {
        Some(0.0)
    } else {
        None
    };

    let tol = |v: f64| slack * v.abs().max(1.0);
    let mut violations = Vec::new();
    if entries[0].value < lower_bound - tol(lower_bound) {
        violations.push(format!(
            "M({}) = {:e} fell below |f(0)|^p = {:e}",
            entries[0].r, entries[0].value, lower_bound
        ));
    }
    for w in entries.windows(2) {
        if w[1].value < w[0].value - tol(w[0].value) {
            violations.push(format!(
                "M({}) = {:e} decreased from M({}) = {:e}",
                w[1].r, w[1].value, w[0].r, w[0].value
            ));
        }
    }
    if let Some(upper) = upper_bound {
        let last = entries.last().unwrap();
        if last.value > upper + tol(upper) {
            violations.push(format!(
                "M({}) = {:e} exceeded M(∞) = {:e}",
                last.r, last.value, upper
            ));
        }
    }

    Ok(MaxPrincipleReport { lower_bound, entries, upper_bound, violations, slack })
}

/// Both sides of the disk embedding bound
/// ∫_{|z|<r} |f e^{-|z|²/2}|^p dA ≤ (∫_{|z|<r} e^{-p|z|²/2} dA) · M_{p,p/2}(f, ∞).
pub fn embed_bound_check(
    f: &PowerSeriesFunction,
    p: f64,
    r: f64,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64)> {
    check_p(p)?;
    check_finite_radius(r)?;
    let alpha = 0.5 * p;
    let nodes = pick_angular_nodes(f, p, r, cfg)?;
    let weight = RadialWeight { alpha };
    let lhs = quad::adaptive_integrate(
        |s| angular_fixed(f, p, s, nodes) * weight.eval(s),
        0.0,
        r,
        cfg,
    )?;
    let disk_weight = TAU * weight.integral_to(r);
    let rhs = disk_weight * means_at_infinity(f, p, alpha, cfg)?;
    Ok((lhs, rhs))
}
