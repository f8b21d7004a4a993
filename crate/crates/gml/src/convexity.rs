//! Log-log convexity of the monomial means: the pointwise convexity
//! functional D, the monomial difference functional Δ in the x = r²
//! variable, the diagnostic functions behind the transition-point argument,
//! and certified sign scans with bisected transitions.
//!
//! Everything here works in x = r²: ln M_{p,α}(z^k, ·) is convex (concave)
//! in ln r exactly where Δ(pk/2, ·) is nonnegative (nonpositive) in x.

use crate::error::{Error, Result};
use crate::means;
use crate::poly::PowerSeriesFunction;
use crate::quad::QuadratureConfig;
use crate::roots::bisect;
use crate::special;

/// Pointwise convexity functional
/// D(g)(x) = g'/g + x·g''/g − x·(g'/g)²;
/// ln g is convex in ln x where D ≥ 0 and concave where D ≤ 0.
pub fn d_functional(g_value: f64, g1: f64, g2: f64, x: f64) -> Result<f64> {
    if !(g_value > 0.0) {
        return Err(Error::domain("d_functional requires g(x) > 0"));
    }
    if !(x > 0.0) {
        return Err(Error::domain("d_functional requires x > 0"));
    }
    let ratio = g1 / g_value;
    Ok(ratio + x * g2 / g_value - x * ratio * ratio)
}

/// Δ(λ, x) = D(f_λ)(x) − D(f_0)(x), with f_λ the weighted power integral.
///
/// Δ(0, ·) ≡ 0; the sign of Δ(pk/2, ·) decides convexity of the monomial
/// means in ln r via x = r².
pub fn delta_functional(lambda: f64, alpha: f64, x: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if lambda == 0.0 {
        return Ok(0.0);
    }
    let h = special::weighted_power_integral(lambda, alpha, x, cfg)?;
    let (h1, h2, _) = special::weighted_power_integral_derivs(lambda, alpha, x)?;
    let f0 = special::weighted_power_integral(0.0, alpha, x, cfg)?;
    let (g1, g2, _) = special::weighted_power_integral_derivs(0.0, alpha, x)?;
    Ok(d_functional(h, h1, h2, x)? - d_functional(f0, g1, g2, x)?)
}

/// Diagnostic values of the transition-point argument at one x.
///
/// d₁ ≥ 0 and d₂ < 0 hold for all x > 0 and both signs of α; δ₁ and δ carry
/// the sign of ∂Δ/∂λ and change sign exactly once when α < 0.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct ProofDiagnostics {
    pub x: f64,
    /// h·ln x − ∂h/∂λ
    pub d1: f64,
    /// (λ+1−αx)h − 2x^(λ+1) e^(−αx)
    pub d2: f64,
    /// −h + x^(λ+1) e^(−αx)(λ+1−αx) / ((λ+1)² − (2λ+1)αx + α²x²)
    pub delta1: f64,
    /// −h²h' / (hh' + xhh'' − 2x(h')²) − h·ln x + ∂h/∂λ
    pub delta: f64,
}

pub fn proof_diagnostics(
    lambda: f64,
    alpha: f64,
    x: f64,
    cfg: &QuadratureConfig,
) -> Result<ProofDiagnostics> {
    if alpha == 0.0 {
        return Err(Error::domain("proof diagnostics require alpha != 0"));
    }
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain("proof diagnostics require finite x > 0"));
    }
    let h = special::weighted_power_integral(lambda, alpha, x, cfg)?;
    let (h1, h2, _) = special::weighted_power_integral_derivs(lambda, alpha, x)?;
    let dh_dlambda = special::weighted_power_log_integral(lambda, alpha, x, cfg)?;

    let d1 = h * x.ln() - dh_dlambda;
    // x^{λ+1} e^{−αx} = x·h'
    let xl1e = x * h1;
    let d2 = (lambda + 1.0 - alpha * x) * h - 2.0 * xl1e;
    let quad_form =
        (lambda + 1.0) * (lambda + 1.0) - (2.0 * lambda + 1.0) * alpha * x + alpha * alpha * x * x;
    let delta1 = -h + xl1e * (lambda + 1.0 - alpha * x) / quad_form;

    let denom = h * h1 + x * h * h2 - 2.0 * x * h1 * h1;
    let scale = (h * h1).abs() + (x * h * h2).abs() + (2.0 * x * h1 * h1).abs();
    if denom.abs() <= 1e-13 * scale {
        return Err(Error::SingularSample { x });
    }
    let delta = -h * h * h1 / denom - h * x.ln() + dh_dlambda;

    Ok(ProofDiagnostics { x, d1, d2, delta1, delta })
}

/// Sign of the convexity functional on a scan segment.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum SignClass {
    Positive,
    Negative,
    Zero,
}

/// A maximal run of constant sign over the scanned x-range.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct SignSegment {
    pub x_lo: f64,
    pub x_hi: f64,
    pub sign: SignClass,
}

/// A bisected sign change of Δ in the x variable.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct TransitionPoint {
    /// Root location in x; the transition radius is √x0.
    pub x0: f64,
    pub bracket: (f64, f64),
    /// Δ at the bracket ends (opposite signs).
    pub f_bracket: (f64, f64),
    pub x_tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Classification {
    Convex,
    Concave,
    ConvexThenConcave,
    Degenerate,
    Indeterminate,
}

/// Outcome of a sign scan of Δ(λ, α, ·) over (0, x_max].
#[derive(Debug, Clone, serde::Serialize)]
pub struct ConvexityReport {
    pub lambda: f64,
    pub alpha: f64,
    pub classification: Classification,
    pub sign_profile: Vec<SignSegment>,
    pub transitions: Vec<TransitionPoint>,
    /// Transition radii c = √x0, one per transition.
    pub transition_radii: Vec<f64>,
    /// (λ+1)/(−α) for α < 0: the proof's strict lower bound for x0.
    pub corollary_bound_x: Option<f64>,
    pub x_min: f64,
    pub x_max: f64,
    pub grid_points: usize,
    pub note: Option<String>,
}

const POINTS_PER_DECADE: usize = 400;
const ROOT_X_TOL: f64 = 1e-12;
/// |Δ| at or below this is classified Zero during scans.
const ZERO_BAND: f64 = 1e-12;
/// Certification threshold for "Δ ≤ 0 everywhere" (α > 0 branch).
const NONPOSITIVE_TOL: f64 = 1e-10;

fn log_grid(x_min: f64, x_max: f64, per_decade: usize) -> Vec<f64> {
    let decades = (x_max / x_min).log10();
    let n = ((decades * per_decade as f64).ceil() as usize).max(2);
    let ln_min = x_min.ln();
    let step = (x_max.ln() - ln_min) / n as f64;
    (0..=n).map(|i| (ln_min + step * i as f64).exp()).collect()
}

fn sign_of(v: f64) -> SignClass {
    if v.abs() <= ZERO_BAND {
        SignClass::Zero
    } else if v > 0.0 {
        SignClass::Positive
    } else {
        SignClass::Negative
    }
}

fn compress_profile(grid: &[f64], signs: &[SignClass]) -> Vec<SignSegment> {
    let mut segments: Vec<SignSegment> = Vec::new();
    for (i, &s) in signs.iter().enumerate() {
        match segments.last_mut() {
            Some(seg) if seg.sign == s => seg.x_hi = grid[i],
            _ => segments.push(SignSegment { x_lo: grid[i], x_hi: grid[i], sign: s }),
        }
    }
    segments
}

/// Classify ln M_{p,α}(z^k, ·) in ln r by sign-scanning Δ(pk/2, α, ·) on a
/// log grid over (0, x_max] and bisecting any sign change.
///
/// k = 0 and α = 0 make Δ vanish identically and are reported as degenerate.
/// For α < 0 the unique transition x0 satisfies x0 > (pk+2)/(−2α).
pub fn classify_monomial_means(
    k: u32,
    p: f64,
    alpha: f64,
    x_max: f64,
    cfg: &QuadratureConfig,
) -> Result<ConvexityReport> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::domain("p must be positive and finite"));
    }
    if !(x_max > 0.0 && x_max.is_finite()) {
        return Err(Error::domain("x_max must be positive and finite"));
    }
    let lambda = 0.5 * p * k as f64;
    let x_min = (x_max * 1e-6).max(1e-4).min(x_max / 2.0);

    if k == 0 || alpha == 0.0 {
        return Ok(ConvexityReport {
            lambda,
            alpha,
            classification: Classification::Degenerate,
            sign_profile: vec![SignSegment { x_lo: x_min, x_hi: x_max, sign: SignClass::Zero }],
            transitions: Vec::new(),
            transition_radii: Vec::new(),
            corollary_bound_x: None,
            x_min,
            x_max,
            grid_points: 0,
            note: Some("Δ vanishes identically: ln M is linear in ln r".into()),
        });
    }

    let grid = log_grid(x_min, x_max, POINTS_PER_DECADE);
    let values: Vec<f64> = grid
        .iter()
        .map(|&x| delta_functional(lambda, alpha, x, cfg))
        .collect::<Result<_>>()?;
    let signs: Vec<SignClass> = values.iter().map(|&v| sign_of(v)).collect();
    let sign_profile = compress_profile(&grid, &signs);

    if alpha > 0.0 {
        let worst = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if worst <= NONPOSITIVE_TOL {
            return Ok(ConvexityReport {
                lambda,
                alpha,
                classification: Classification::Concave,
                sign_profile,
                transitions: Vec::new(),
                transition_radii: Vec::new(),
                corollary_bound_x: None,
                x_min,
                x_max,
                grid_points: grid.len(),
                note: None,
            });
        }
        return Ok(ConvexityReport {
            lambda,
            alpha,
            classification: Classification::Indeterminate,
            sign_profile,
            transitions: Vec::new(),
            transition_radii: Vec::new(),
            corollary_bound_x: None,
            x_min,
            x_max,
            grid_points: grid.len(),
            note: Some(format!("positive Δ sample {worst:e} found with alpha > 0")),
        });
    }

    // α < 0: expect one positive run followed by one negative run.
    let mut changes: Vec<(usize, usize)> = Vec::new();
    let mut last_strict: Option<(usize, SignClass)> = None;
    for (i, &s) in signs.iter().enumerate() {
        if s == SignClass::Zero {
            continue;
        }
        if let Some((j, prev)) = last_strict {
            if prev != s {
                changes.push((j, i));
            }
        }
        last_strict = Some((i, s));
    }

    let corollary_bound_x = Some((lambda + 1.0) / (-alpha));
    match changes.len() {
        0 => Ok(ConvexityReport {
            lambda,
            alpha,
            classification: Classification::Indeterminate,
            sign_profile,
            transitions: Vec::new(),
            transition_radii: Vec::new(),
            corollary_bound_x,
            x_min,
            x_max,
            grid_points: grid.len(),
            note: Some("no sign change of Δ inside x_max; rerun with a larger x_max".into()),
        }),
        1 => {
            let (i_pos, i_neg) = changes[0];
            let root = bisect(
                |x| delta_functional(lambda, alpha, x, cfg).unwrap_or(f64::NAN),
                grid[i_pos],
                grid[i_neg],
                ROOT_X_TOL,
                200,
            )?;
            let transition = TransitionPoint {
                x0: root.root,
                bracket: root.bracket,
                f_bracket: root.f_bracket,
                x_tol: ROOT_X_TOL,
            };
            Ok(ConvexityReport {
                lambda,
                alpha,
                classification: Classification::ConvexThenConcave,
                sign_profile,
                transitions: vec![transition],
                transition_radii: vec![root.root.sqrt()],
                corollary_bound_x,
                x_min,
                x_max,
                grid_points: grid.len(),
                note: None,
            })
        }
        n => Ok(ConvexityReport {
            lambda,
            alpha,
            classification: Classification::Indeterminate,
            sign_profile,
            transitions: Vec::new(),
            transition_radii: Vec::new(),
            corollary_bound_x,
            x_min,
            x_max,
            grid_points: grid.len(),
            note: Some(format!("{n} sign changes found; expected exactly one")),
        }),
    }
}

/// The guaranteed convexity radius c = √((pk+2)/(−2α)) for α < 0:
/// ln M_{p,α}(z^k, ·) is convex in ln r on (0, c].
pub fn corollary_c_bound(k: u32, p: f64, alpha: f64) -> Result<f64> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::domain("p must be positive and finite"));
    }
    if !(alpha < 0.0 && alpha.is_finite()) {
        return Err(Error::domain("the convexity radius formula requires alpha < 0"));
    }
    Ok(((p * k as f64 + 2.0) / (-2.0 * alpha)).sqrt())
}

/// Discrete convexity certificate of ln M_{2,α}(f, ·) in ln r on a grid.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SeriesConvexityReport {
    pub radii: Vec<f64>,
    pub ln_means: Vec<f64>,
    /// Centered second differences of ln M in ln r at interior grid points.
    pub second_differences: Vec<f64>,
    pub min_second_difference: f64,
    /// Certificate threshold: all second differences ≥ −threshold.
    pub threshold: f64,
    pub passed: bool,
}

/// Check discrete log-log convexity of M_{2,α}(f, ·) for α < 0 on a grid
/// inside (0, √(1/(−α))], using the exact p = 2 series route.
///
/// The grid must be uniform in ln r (within 1%) so plain second differences
/// are the convexity functional up to a positive factor.
pub fn series_convexity_check(
    f: &PowerSeriesFunction,
    alpha: f64,
    radii: &[f64],
    _cfg: &QuadratureConfig,
) -> Result<SeriesConvexityReport> {
    if !(alpha < 0.0 && alpha.is_finite()) {
        return Err(Error::domain("series convexity check requires alpha < 0"));
    }
    if f.is_zero() {
        return Err(Error::domain("series convexity check requires f != 0"));
    }
    if radii.len() < 3 {
        return Err(Error::domain("need at least 3 radii"));
    }
    let c_bound = (1.0 / -alpha).sqrt();
    for w in radii.windows(2) {
        if !(w[0] > 0.0 && w[0] < w[1]) {
            return Err(Error::domain("radii must be positive and strictly increasing"));
        }
    }
    if *radii.last().unwrap() > c_bound * (1.0 + 1e-12) {
        return Err(Error::domain(format!(
            "grid must stay inside (0, {c_bound}] where convexity is guaranteed"
        )));
    }
    let steps: Vec<f64> = radii.windows(2).map(|w| (w[1] / w[0]).ln()).collect();
    let (lo, hi) = steps
        .iter()
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), &s| (lo.min(s), hi.max(s)));
    if hi > lo * 1.01 {
        return Err(Error::domain("radius grid must be uniform in ln r within 1%"));
    }

    let ln_means: Vec<f64> = radii
        .iter()
        .map(|&r| means::means_series_p2(f, alpha, r).map(f64::ln))
        .collect::<Result<_>>()?;
    let second_differences: Vec<f64> = ln_means
        .windows(3)
        .map(|w| w[0] - 2.0 * w[1] + w[2])
        .collect();
    let min_second_difference = second_differences
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    let threshold = 1e-7;
    Ok(SeriesConvexityReport {
        radii: radii.to_vec(),
        ln_means,
        second_differences,
        min_second_difference,
        passed: min_second_difference >= -threshold,
        threshold,
    })
}

/// Both sides of the three-circle interpolation inequality for the monomial
/// means at radii r1 ≤ r ≤ r2:
/// lhs = ln(r2/r1)·ln M(r), rhs = ln(r2/r)·ln M(r1) + ln(r/r1)·ln M(r2).
///
/// The radii must lie inside a certified convex region of ln M: all of
/// (0, ∞) for k = 0 or α = 0, and (0, √x0] for α < 0 with x0 from the sign
/// scan. For α > 0 with k ≥ 1 no convex region exists.
pub fn three_circles_check(
    k: u32,
    p: f64,
    alpha: f64,
    r1: f64,
    r: f64,
    r2: f64,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64)> {
    if !(r1 > 0.0 && r1 <= r && r <= r2 && r2.is_finite()) {
        return Err(Error::domain("radii must satisfy 0 < r1 <= r <= r2 < ∞"));
    }
    if k > 0 && alpha > 0.0 {
        return Err(Error::domain(
            "no convex region exists for alpha > 0: the monomial means are log-concave",
        ));
    }
    if k > 0 && alpha < 0.0 {
        let x_needed = r2 * r2;
        let report =
            classify_monomial_means(k, p, alpha, (4.0 * x_needed).max(100.0), cfg)?;
        let x0 = report
            .transitions
            .first()
            .map(|t| t.x0)
            .ok_or_else(|| Error::domain("could not certify a convex region"))?;
        if x_needed > x0 {
            return Err(Error::domain(format!(
                "r2² = {x_needed} lies beyond the certified convex region (0, {x0}]"
            )));
        }
    }
    let m = |rr: f64| means_monomial_ln(k, p, alpha, rr);
    let lhs = (r2 / r1).ln() * m(r)?;
    let rhs = (r2 / r).ln() * m(r1)? + (r / r1).ln() * m(r2)?;
    Ok((lhs, rhs))
}

fn means_monomial_ln(k: u32, p: f64, alpha: f64, r: f64) -> Result<f64> {
    Ok(means::means_monomial(k, p, alpha, r)?.ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    #[test]
    fn d_functional_power_law_is_flat() {
        // g = x: ln x is linear in ln x.
        for &x in &[0.3, 1.0, 7.0] {
            let d = d_functional(x, 1.0, 0.0, x).unwrap();
            assert!(d.abs() < 1e-14);
        }
    }

    #[test]
    fn d_functional_exponential() {
        // g = e^x at x = 1: 1 + 1 − 1 = 1.
        let e = std::f64::consts::E;
        assert_relative_eq!(d_functional(e, e, e, 1.0).unwrap(), 1.0, max_relative = 1e-14);
    }

    #[test]
    fn d_functional_constant_is_zero() {
        assert_eq!(d_functional(3.0, 0.0, 0.0, 2.0).unwrap(), 0.0);
        assert!(d_functional(-1.0, 0.0, 0.0, 2.0).is_err());
    }

    #[test]
    fn delta_vanishes_at_lambda_zero() {
        for &x in &[0.01, 2.0, 25.0] {
            assert_eq!(delta_functional(0.0, 1.0, x, &cfg()).unwrap(), 0.0);
            assert_eq!(delta_functional(0.0, -1.0, x, &cfg()).unwrap(), 0.0);
        }
    }

    #[test]
    fn delta_signs_at_unit_point() {
        // Frozen from an independent high-precision evaluation of the
        // D-components.
        let neg = delta_functional(1.0, 1.0, 1.0, &cfg()).unwrap();
        assert_relative_eq!(neg, -0.20734392232360923, max_relative = 1e-9);
        let pos = delta_functional(1.0, -1.0, 1.0, &cfg()).unwrap();
        assert_relative_eq!(pos, 0.10448627378495137, max_relative = 1e-9);
    }

    #[test]
    fn delta_matches_finite_difference_oracle() {
        // D(f_λ) = (d²/du²) ln f_λ(e^u) / x: check Δ against central second
        // differences of ln f in u = ln x.
        let fd_d = |lambda: f64, alpha: f64, x: f64| {
            let eps = 1e-4;
            let lnf = |u: f64| {
                special::weighted_power_integral(lambda, alpha, u.exp(), &cfg())
                    .unwrap()
                    .ln()
            };
            let u = x.ln();
            (lnf(u + eps) - 2.0 * lnf(u) + lnf(u - eps)) / (eps * eps) / x
        };
        for &(lambda, alpha, x) in &[(1.0, 1.0, 1.0), (2.0, -1.0, 2.0), (0.5, 1.0, 0.3)] {
            let d = delta_functional(lambda, alpha, x, &cfg()).unwrap();
            let oracle = fd_d(lambda, alpha, x) - fd_d(0.0, alpha, x);
            assert_relative_eq!(d, oracle, max_relative = 1e-5, epsilon = 1e-8);
        }
    }

    #[test]
    fn diagnostics_closed_form_example() {
        // λ=1, α=1, x=1: d2 = 1 − 4e^{-1}.
        let d = proof_diagnostics(1.0, 1.0, 1.0, &cfg()).unwrap();
        assert_relative_eq!(d.d2, 1.0 - 4.0 * (-1.0f64).exp(), max_relative = 1e-11);
        assert!(d.d1 >= 0.0);
        assert!(d.delta < 0.0);
    }

    #[test]
    fn diagnostics_d1_vanishes_at_origin() {
        // d1 → 0 as x → 0⁺ while staying nonnegative.
        let mut prev = f64::INFINITY;
        for &x in &[0.5, 0.1, 0.02] {
            let d = proof_diagnostics(1.5, -1.0, x, &cfg()).unwrap();
            assert!(d.d1 >= -1e-12);
            assert!(d.d1 <= prev);
            prev = d.d1;
        }
    }

    #[test]
    fn diagnostics_delta1_single_sign_change() {
        // λ=1, α=−1: δ₁ changes sign once, past (λ+1)/(−α) = 2.
        let delta1 = |x: f64| proof_diagnostics(1.0, -1.0, x, &cfg()).unwrap().delta1;
        let root = bisect(delta1, 2.0, 10.0, 1e-10, 200).unwrap();
        assert!(root.root > 2.0);
        // Independent high-precision value: x* = 2.6879993454994913.
        assert_relative_eq!(root.root, 2.6879993454994913, max_relative = 1e-7);
        assert!(delta1(0.5) > 0.0);
        assert!(delta1(20.0) < 0.0);
    }

    #[test]
    fn classify_concave_for_positive_alpha() {
        let report = classify_monomial_means(3, 2.0, 1.0, 30.0, &cfg()).unwrap();
        assert_eq!(report.classification, Classification::Concave);
        assert!(report.transitions.is_empty());
    }

    #[test]
    fn classify_transition_for_negative_alpha() {
        let report = classify_monomial_means(1, 2.0, -1.0, 100.0, &cfg()).unwrap();
        assert_eq!(report.classification, Classification::ConvexThenConcave);
        assert_eq!(report.transitions.len(), 1);
        let t = &report.transitions[0];
        // Independent high-precision root: x0 = 3.1676197847451612.
        assert_relative_eq!(t.x0, 3.167619784745161, max_relative = 1e-8);
        assert!(t.x0 > report.corollary_bound_x.unwrap());
        assert!(t.f_bracket.0 * t.f_bracket.1 < 0.0);
        assert_relative_eq!(report.transition_radii[0], t.x0.sqrt(), max_relative = 1e-15);
        assert!(report.transition_radii[0] > 2.0f64.sqrt());
    }

    #[test]
    fn classify_degenerate_cases() {
        let r0 = classify_monomial_means(0, 2.0, -1.0, 10.0, &cfg()).unwrap();
        assert_eq!(r0.classification, Classification::Degenerate);
        let r1 = classify_monomial_means(2, 2.0, 0.0, 10.0, &cfg()).unwrap();
        assert_eq!(r1.classification, Classification::Degenerate);
    }

    #[test]
    fn classify_inconclusive_when_window_too_small() {
        // x0 ≈ 3.17 sits beyond x_max = 2.
        let report = classify_monomial_means(1, 2.0, -1.0, 2.0, &cfg()).unwrap();
        assert_eq!(report.classification, Classification::Indeterminate);
        assert!(report.note.as_deref().unwrap_or("").contains("larger x_max"));
    }

    #[test]
    fn corollary_bound_values() {
        assert_relative_eq!(corollary_c_bound(1, 2.0, -1.0).unwrap(), 2.0f64.sqrt(), max_relative = 1e-15);
        assert_relative_eq!(corollary_c_bound(0, 2.0, -1.0).unwrap(), 1.0, max_relative = 1e-15);
        assert_relative_eq!(corollary_c_bound(2, 1.0, -2.0).unwrap(), 1.0, max_relative = 1e-15);
        assert!(corollary_c_bound(1, 2.0, 1.0).is_err());
        assert!(corollary_c_bound(1, 2.0, 0.0).is_err());
    }

    #[test]
    fn series_convexity_on_guaranteed_region() {
        let f = PowerSeriesFunction::from_real(&[1.0, 1.0]);
        let radii = log_grid(0.05, 1.0, 16);
        let report = series_convexity_check(&f, -1.0, &radii, &cfg()).unwrap();
        assert!(report.passed, "min d² = {:e}", report.min_second_difference);

        // constants: flat chain, zero second differences
        let c = PowerSeriesFunction::constant(num_complex::Complex64::new(2.0, 0.0));
        let report = series_convexity_check(&c, -1.0, &radii, &cfg()).unwrap();
        assert!(report.second_differences.iter().all(|d| d.abs() < 1e-12));

        // monomial special case matches the classifier's convex region
        let z3 = PowerSeriesFunction::monomial(3, num_complex::Complex64::new(1.0, 0.0));
        let report = series_convexity_check(&z3, -1.0, &radii, &cfg()).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn series_convexity_rejects_bad_grids() {
        let f = PowerSeriesFunction::from_real(&[1.0, 1.0]);
        let too_far = log_grid(0.5, 1.5, 16);
        assert!(series_convexity_check(&f, -1.0, &too_far, &cfg()).is_err());
        assert!(series_convexity_check(&f, 1.0, &log_grid(0.1, 0.9, 16), &cfg()).is_err());
        let uneven = vec![0.1, 0.2, 0.21, 0.5];
        assert!(series_convexity_check(&f, -1.0, &uneven, &cfg()).is_err());
    }

    #[test]
    fn three_circles_degenerate_equality() {
        // r1 = r and r2 = r collapse to equality.
        let (lhs, rhs) = three_circles_check(1, 2.0, -1.0, 0.5, 0.5, 1.2, &cfg()).unwrap();
        assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
        let (lhs, rhs) = three_circles_check(1, 2.0, -1.0, 0.3, 1.2, 1.2, &cfg()).unwrap();
        assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
    }

    #[test]
    fn three_circles_interpolation_inside_region() {
        let (lhs, rhs) = three_circles_check(1, 2.0, -1.0, 0.3, 0.7, 1.2, &cfg()).unwrap();
        assert!(lhs <= rhs + 1e-9, "lhs={lhs} rhs={rhs}");
    }

    #[test]
    fn three_circles_region_preconditions() {
        assert!(three_circles_check(1, 2.0, 1.0, 0.3, 0.7, 1.2, &cfg()).is_err());
        // beyond √x0 ≈ 1.78 for k=1, p=2, α=−1
        assert!(three_circles_check(1, 2.0, -1.0, 0.3, 0.7, 2.5, &cfg()).is_err());
        // k = 0 is allowed anywhere
        assert!(three_circles_check(0, 2.0, 1.0, 0.3, 0.7, 2.5, &cfg()).is_ok());
    }
}
