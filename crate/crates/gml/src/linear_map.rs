//! Means of linear maps a + z under the standard Gaussian weight (p = 2,
//! α = 1): in the x = r² variable they reduce to the ratio
//! F(x) = (c+1−(c+1+x)e^{−x})/(1−e^{−x}) with c = |a|².
//!
//! Unlike the monomials, these are not log-concave on all of (0, ∞) once
//! c > 0. This module evaluates F, its convexity functional, the
//! sign-equivalent indicator chain G → H → H' → J used to locate the unique
//! transition, and the c → ∞ limit indicator G₀ whose positive root λ makes
//! (√λ, ∞) the maximal common concavity interval.

use crate::convexity::Classification;
use crate::error::{Error, Result};
use crate::roots::{bisect, BisectionRoot};

fn check_c(c: f64) -> Result<()> {
    if !(c >= 0.0 && c.is_finite()) {
        return Err(Error::domain("c = |a|² must be finite and nonnegative"));
    }
    Ok(())
}

/// F(x) = (c+1 − (c+1+x)e^{−x}) / (1 − e^{−x}) for x > 0, i.e. the means of
/// a + z at radius √x; F(0⁺) = c and F(∞) = c+1.
pub fn means_ratio(c: f64, x: f64) -> f64 {
    let one_minus = -(-x).exp_m1();
    ((c + 1.0) * one_minus - x * (-x).exp()) / one_minus
}

/// Convexity functional D(F)(x), via D(F) = D(g) − D(h) for F = g/h with
/// g = (c+1)(1−e^{−x}) − x e^{−x} and h = 1 − e^{−x}.
pub fn log_convexity_functional(c: f64, x: f64) -> Result<f64> {
    check_c(c)?;
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::domain("x must be positive and finite"));
    }
    let ex = (-x).exp();
    let one_minus = -(-x).exp_m1();
    let g = (c + 1.0) * one_minus - x * ex;
    let g1 = (c + x) * ex;
    let g2 = (1.0 - c - x) * ex;
    let h = one_minus;
    let h1 = ex;
    let h2 = -ex;
    let d = |v: f64, v1: f64, v2: f64| {
        let ratio = v1 / v;
        ratio + x * v2 / v - x * ratio * ratio
    };
    Ok(d(g, g1, g2) - d(h, h1, h2))
}

/// Sign indicator G(x): same sign as D(F)(x).
pub fn sign_indicator(c: f64, x: f64) -> f64 {
    let e1 = x.exp();
    let e2 = e1 * e1;
    let e3 = e2 * e1;
    (c + 1.0) * (-1.0 + 3.0 * x - x * x) * e3
        + (3.0 + 3.0 * c - 6.0 * x - 6.0 * c * x - x * x) * e2
        + (-3.0 - 3.0 * c + (3.0 + 3.0 * c) * x + (2.0 + c) * x * x + x * x * x) * e1
        + (c + 1.0)
}

/// H(x): same sign as G'(x).
pub fn indicator_slope(c: f64, x: f64) -> f64 {
    let em1 = (-x).exp();
    let em2 = em1 * em1;
    (c + 1.0) * (7.0 - 3.0 * x) - (14.0 + 12.0 * c + 2.0 * x) * em1
        + (7.0 + 5.0 * c + (5.0 + c) * x + x * x) * em2
}

/// H'(x); tends to −3(c+1) as x → ∞.
pub fn indicator_slope_deriv(c: f64, x: f64) -> f64 {
    let em1 = (-x).exp();
    let em2 = em1 * em1;
    -3.0 * (c + 1.0) + (12.0 + 12.0 * c + 2.0 * x) * em1
        - (9.0 + 9.0 * c + (8.0 + 2.0 * c) * x + 2.0 * x * x) * em2
}

/// J(x): same sign as H''(x); J(0) = 4c and J is nonincreasing.
pub fn curvature_indicator(c: f64, x: f64) -> f64 {
    -10.0 - 12.0 * c - 2.0 * x + (10.0 + 16.0 * c + (12.0 + 4.0 * c) * x + 4.0 * x * x) * (-x).exp()
}

/// J'(x) = −2(1−e^{−x}) − (12c + 4x + 4cx + 4x²) e^{−x} ≤ 0.
pub fn curvature_indicator_deriv(c: f64, x: f64) -> f64 {
    -2.0 * -(-x).exp_m1() - (12.0 * c + (4.0 + 4.0 * c) * x + 4.0 * x * x) * (-x).exp()
}

/// The c → ∞ limit indicator
/// G₀(x) = (−1+3x−x²)e^{3x} + (3−6x)e^{2x} + (−3+3x+x²)e^{x} + 1;
/// G(x) < 0 for every c exactly where G₀(x) < 0.
pub fn limit_indicator(x: f64) -> f64 {
    let e1 = x.exp();
    let e2 = e1 * e1;
    let e3 = e2 * e1;
    (-1.0 + 3.0 * x - x * x) * e3 + (3.0 - 6.0 * x) * e2 + (-3.0 + 3.0 * x + x * x) * e1 + 1.0
}

/// The unique positive root λ of G₀, bisected on [1, 3] to 1e−10 in x.
pub fn limit_indicator_root() -> Result<BisectionRoot> {
    bisect(limit_indicator, 1.0, 3.0, 1e-10, 200)
}

/// Full analysis of the means of a + z for one c = |a|².
#[derive(Debug, Clone, serde::Serialize)]
pub struct LinearMapReport {
    pub c: f64,
    pub x_max: f64,
    /// J(0), which equals 4c exactly.
    pub curvature_at_zero: f64,
    /// J' ≤ 0 at every sample.
    pub curvature_nonincreasing: bool,
    /// H' approaches −3(c+1).
    pub slope_limit_ok: bool,
    /// Unique sign change of G (present for c > 0).
    pub transition: Option<BisectionRoot>,
    /// D(F) > 0 sampled strictly before the transition (c > 0).
    pub convex_before_transition: bool,
    /// D(F) < 0 sampled strictly after the transition, up to x_max.
    pub concave_after_transition: bool,
    /// For c = 0: D(F) ≤ 0 at every sample on (0, x_max].
    pub concave_everywhere: Option<bool>,
    /// sign(D(F)) agreed with sign(G) at every sample away from the root.
    pub indicator_sign_agrees: bool,
    pub classification: Classification,
    pub samples: usize,
}

const SAMPLES: usize = 400;
const SIGN_TOL: f64 = 1e-9;

fn sample_grid(x_lo: f64, x_hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (x_lo.ln(), x_hi.ln());
    (0..=n)
        .map(|i| (a + (b - a) * i as f64 / n as f64).exp())
        .collect()
}

/// Analyze the convexity profile of ln M_{2,1}(a + z, ·) through F and its
/// indicator chain on (0, x_max].
pub fn analyze(c: f64, x_max: f64) -> Result<LinearMapReport> {
    check_c(c)?;
    if !(x_max > 1.0 && x_max.is_finite()) {
        return Err(Error::domain("x_max must be finite and > 1"));
    }
    // Below ~1e-3 the functional is an O(x⁶)-scaled cancellation; the limit
    // values there are known (D(F) → −1/(6(c+1)) tempered by c).
    let grid = sample_grid(1e-3, x_max, SAMPLES);

    let curvature_at_zero = curvature_indicator(c, 0.0);
    let curvature_nonincreasing = grid
        .iter()
        .all(|&x| curvature_indicator_deriv(c, x) <= 1e-12);
    let x_big = x_max.max(60.0);
    let slope_limit_ok =
        (indicator_slope_deriv(c, x_big) + 3.0 * (c + 1.0)).abs() <= 1e-9 * (1.0 + c);

    if c == 0.0 {
        // dual certificate: the functional itself and its sign indicator
        let mut concave = true;
        for &x in &grid {
            if log_convexity_functional(c, x)? > SIGN_TOL {
                concave = false;
                break;
            }
            let scale = (1.0 + 3.0 * x + x * x) * (3.0 * x).exp();
            if sign_indicator(c, x) > 1e-9 * scale {
                concave = false;
                break;
            }
        }
        return Ok(LinearMapReport {
            c,
            x_max,
            curvature_at_zero,
            curvature_nonincreasing,
            slope_limit_ok,
            transition: None,
            convex_before_transition: false,
            concave_after_transition: concave,
            concave_everywhere: Some(concave),
            indicator_sign_agrees: true,
            classification: if concave {
                Classification::Concave
            } else {
                Classification::Indeterminate
            },
            samples: grid.len(),
        });
    }

    // c > 0: G starts positive (G ~ J(0) = 4c scale near 0) and ends
    // negative; bisect the unique change.
    let first_neg = grid
        .iter()
        .position(|&x| sign_indicator(c, x) < 0.0)
        .ok_or_else(|| Error::domain("no sign change of G inside x_max; increase x_max"))?;
    if first_neg == 0 {
        return Err(Error::domain("G is already negative at the left sample"));
    }
    let root = bisect(
        |x| sign_indicator(c, x),
        grid[first_neg - 1],
        grid[first_neg],
        1e-10,
        200,
    )?;
    let x0 = root.root;

    let margin = 1e-6 * x0;
    let mut convex_before = true;
    let mut concave_after = true;
    let mut agrees = true;
    for &x in &grid {
        let df = log_convexity_functional(c, x)?;
        let g = sign_indicator(c, x);
        if (x - x0).abs() > margin && df.abs() > 0.0 && g != 0.0 && (df > 0.0) != (g > 0.0) {
            agrees = false;
        }
        if x < x0 - margin && df <= 0.0 {
            convex_before = false;
        }
        if x > x0 + margin && df >= 0.0 {
            concave_after = false;
        }
    }

    Ok(LinearMapReport {
        c,
        x_max,
        curvature_at_zero,
        curvature_nonincreasing,
        slope_limit_ok,
        transition: Some(root),
        convex_before_transition: convex_before,
        concave_after_transition: concave_after,
        concave_everywhere: None,
        indicator_sign_agrees: agrees,
        classification: Classification::ConvexThenConcave,
        samples: grid.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn means_ratio_limits() {
        for &c in &[0.0, 1.0, 4.0] {
            assert_relative_eq!(means_ratio(c, 1e-8), c, epsilon = 1e-6);
            assert_relative_eq!(means_ratio(c, 60.0), c + 1.0, max_relative = 1e-12);
        }
    }

    #[test]
    fn means_ratio_matches_weighted_integrals() {
        // F(x) = f-integral ratio of (c+t)e^{-t}: cross-check by quadrature.
        let cfg = crate::quad::QuadratureConfig::default();
        for &(c, x) in &[(1.0, 0.7), (4.0, 2.5)] {
            let num = crate::quad::adaptive_integrate(|t| (c + t) * (-t).exp(), 0.0, x, &cfg).unwrap();
            let den = crate::quad::adaptive_integrate(|t| (-t).exp(), 0.0, x, &cfg).unwrap();
            assert_relative_eq!(means_ratio(c, x), num / den, max_relative = 1e-11);
        }
    }

    #[test]
    fn limit_indicator_printed_values() {
        // G₀(1) = e³ − 3e² + e + 1 and G₀(2) = e⁶ − 9e⁴ + 7e² + 1.
        let e = std::f64::consts::E;
        assert_relative_eq!(
            limit_indicator(1.0),
            e.powi(3) - 3.0 * e.powi(2) + e + 1.0,
            max_relative = 1e-12
        );
        assert!(limit_indicator(1.0) > 0.0);
        assert_relative_eq!(
            limit_indicator(2.0),
            e.powi(6) - 9.0 * e.powi(4) + 7.0 * e.powi(2) + 1.0,
            max_relative = 1e-12
        );
        assert!(limit_indicator(2.0) < 0.0);
    }

    #[test]
    fn limit_root_location() {
        let root = limit_indicator_root().unwrap();
        assert!((root.root - 1.86047095).abs() < 1e-6);
        assert!(root.f_bracket.0 * root.f_bracket.1 < 0.0);
        // positive before, negative after (sampled)
        for &x in &[0.2, 0.8, 1.5, 1.8] {
            assert!(limit_indicator(x) > 0.0, "G0({x}) not positive");
        }
        for &x in &[1.9, 3.0, 6.0, 12.0] {
            assert!(limit_indicator(x) < 0.0, "G0({x}) not negative");
        }
    }

    #[test]
    fn indicator_splits_into_limit_part() {
        // G = (c+1)·G₀ + x² eˣ (1 + x − eˣ), exactly; this is what makes
        // the limit root the boundary of the common concavity interval.
        for &c in &[0.0, 1.0, 4.0, 100.0] {
            for &x in &[0.3, 1.0, 1.86, 2.5, 4.0] {
                let g = sign_indicator(c, x);
                let expect =
                    (c + 1.0) * limit_indicator(x) + x * x * x.exp() * (1.0 + x - x.exp());
                assert_relative_eq!(g, expect, max_relative = 1e-10, epsilon = 1e-9);
            }
        }
    }

    #[test]
    fn curvature_indicator_at_zero_is_4c() {
        for &c in &[0.0, 1.0, 4.0, 100.0] {
            assert_eq!(curvature_indicator(c, 0.0), 4.0 * c);
        }
    }

    #[test]
    fn analyze_concave_for_c_zero() {
        let report = analyze(0.0, 20.0).unwrap();
        assert_eq!(report.classification, Classification::Concave);
        assert_eq!(report.concave_everywhere, Some(true));
        assert!(report.transition.is_none());
        assert!(report.curvature_nonincreasing);
        assert!(report.slope_limit_ok);
    }

    #[test]
    fn analyze_transition_for_positive_c() {
        let report = analyze(1.0, 20.0).unwrap();
        assert_eq!(report.classification, Classification::ConvexThenConcave);
        let t = report.transition.unwrap();
        // Independent high-precision root: 1.4912758526832323.
        assert_relative_eq!(t.root, 1.4912758526832323, max_relative = 1e-7);
        assert!(report.convex_before_transition);
        assert!(report.concave_after_transition);
        assert!(report.indicator_sign_agrees);
        assert_eq!(report.curvature_at_zero, 4.0);

        let report4 = analyze(4.0, 20.0).unwrap();
        let t4 = report4.transition.unwrap();
        assert_relative_eq!(t4.root, 1.7361355169321332, max_relative = 1e-7);
        // transition creeps up toward the limit root as c grows
        assert!(t4.root > t.root);
        assert!(t4.root < 1.86047095);
    }

    #[test]
    fn maximality_probe_at_large_c() {
        // Just below the limit root, a large c still yields convexity.
        let lambda = limit_indicator_root().unwrap().root;
        let df = log_convexity_functional(100.0, lambda - 0.05).unwrap();
        assert!(df > 0.0);
        // and beyond the limit root every c is concave
        for &c in &[0.0, 1.0, 100.0, 1e4] {
            let df = log_convexity_functional(c, lambda + 0.05).unwrap();
            assert!(df < 0.0, "c={c}");
        }
    }
}
