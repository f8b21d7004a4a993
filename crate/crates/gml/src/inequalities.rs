//! Sharp Gaussian inequalities on polynomial Fock-space elements, plus the
//! Rademacher sign functions and the Khinchine average used by the q < p
//! trace argument.

use crate::error::{Error, Result};
use crate::means;
use crate::poly::PowerSeriesFunction;
use crate::quad::QuadratureConfig;
use crate::special;
use num_complex::Complex64;
use std::f64::consts::PI;

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// Both sides of the Gaussian Poincaré inequality
/// ∫|f e^{-|z|²/2}|² dA − π|f(0)|² ≤ ∫|f′ e^{-|z|²/2}|² dA,
/// in closed coefficient form: lhs = π Σ_{k≥1} |a_k|² k!,
/// rhs = π Σ_{k≥1} |a_k|² k·k!.
///
/// Equality holds exactly when the coefficients are supported on {0, 1}.
pub fn poincare_gap(f: &PowerSeriesFunction) -> (f64, f64) {
    let mut lhs = 0.0;
    let mut rhs = 0.0;
    for (k, c) in f.coeffs().iter().enumerate().skip(1) {
        let w = c.norm_sqr();
        if w != 0.0 {
            let kf = factorial(k);
            lhs += w * kf;
            rhs += w * k as f64 * kf;
        }
    }
    (PI * lhs, PI * rhs)
}

/// Quadrature cross-check of [`poincare_gap`]: both sides computed as plane
/// integrals rather than coefficient sums.
pub fn poincare_gap_quadrature(
    f: &PowerSeriesFunction,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64)> {
    let full = means::gaussian_plane_integral(f, 2.0, 1.0, cfg)?;
    let lhs = full - PI * f.value_at_zero().norm_sqr();
    let rhs = means::gaussian_plane_integral(&f.derivative(), 2.0, 1.0, cfg)?;
    Ok((lhs, rhs))
}

/// ∫ |f′(z) e^{-|z|²/2}| dA for a monomial f = c z^k in closed form:
/// |c| k 2^{(k-1)/2} 2π Γ((k+1)/2).
fn monomial_gradient_integral(k: usize, coeff: Complex64) -> f64 {
    if k == 0 {
        return 0.0;
    }
    coeff.norm()
        * k as f64
        * std::f64::consts::TAU
        * 2.0f64.powf(0.5 * (k as f64 - 1.0))
        * special::gamma((k as f64 + 1.0) / 2.0)
}

/// Both sides of the isoperimetric-Sobolev inequality
/// ∫|f e^{-|z|²/2}|² dA − π|f(0)|² ≤ C (∫|f′ e^{-|z|²/2}| dA)²,
/// with C = (2π)^{-1} in general and the sharp constant C = (4π)^{-1}
/// for monomials (`sharp = true`), where f = z attains equality.
pub fn iso_sobolev_check(
    f: &PowerSeriesFunction,
    sharp: bool,
    cfg: &QuadratureConfig,
) -> Result<(f64, f64)> {
    let (lhs, _) = poincare_gap(f);
    let gradient = if sharp {
        // the sharp constant is established for monomials only
        let (k, coeff) = f.as_monomial().ok_or_else(|| {
            Error::domain("the sharp isoperimetric-Sobolev form applies to monomials")
        })?;
        monomial_gradient_integral(k, coeff)
    } else {
        means::gaussian_plane_integral(&f.derivative(), 1.0, 0.5, cfg)?
    };
    let constant = if sharp { 0.25 / PI } else { 0.5 / PI };
    Ok((lhs, constant * gradient * gradient))
}

/// Rademacher sign r_j(t) = r₀(2^j t), with r₀ = +1 on [0, 1/2) and −1 on
/// [1/2, 1) modulo one.
pub fn rademacher(j: u32, t: f64) -> Result<i32> {
    if !(0.0..1.0).contains(&t) {
        return Err(Error::domain("rademacher functions are sampled on t in [0, 1)"));
    }
    if j > 52 {
        return Err(Error::domain("rademacher order above 52 exceeds f64 dyadic resolution"));
    }
    let s = t * (1u64 << j) as f64;
    let frac = s - s.floor();
    Ok(if frac < 0.5 { 1 } else { -1 })
}

/// Khinchine comparison for Σ c_j r_j(t):
/// returns (lp_avg, l2_norm) with lp_avg = (∫₀¹ |Σ c_j r_j|^p dt)^{1/p}.
///
/// The integrand is constant on dyadic intervals of length 2^{-(m+1)}
/// (m = number of coefficients), so midpoint sampling at that resolution
/// integrates it exactly; `nodes` only sets a finer floor. For p = 2 the
/// two values agree exactly by orthogonality.
pub fn khinchine_check(c: &[Complex64], p: f64, nodes: usize) -> Result<(f64, f64)> {
    if !(p > 0.0 && p.is_finite()) {
        return Err(Error::domain("p must be positive and finite"));
    }
    let m = c.len();
    if m == 0 {
        return Ok((0.0, 0.0));
    }
    if m > 20 {
        return Err(Error::domain("coefficient lists above length 20 are not supported"));
    }
    let mut levels = m as u32 + 1;
    while (1usize << levels) < nodes.min(1 << 24) {
        levels += 1;
    }
    let n = 1usize << levels;

    let mut sum = 0.0;
    for i in 0..n {
        let t = (i as f64 + 0.5) / n as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, cj) in c.iter().enumerate() {
            // coefficients pair with r_1, r_2, …
            acc += cj * rademacher(j as u32 + 1, t)? as f64;
        }
        sum += acc.norm().powf(p);
    }
    let lp_avg = (sum / n as f64).powf(1.0 / p);
    let l2_norm = c.iter().map(|cj| cj.norm_sqr()).sum::<f64>().sqrt();
    Ok((lp_avg, l2_norm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn cfg() -> QuadratureConfig {
        QuadratureConfig {
            rel_tol: 1e-9,
            ..QuadratureConfig::default()
        }
    }

    #[test]
    fn poincare_equality_at_z() {
        let z = PowerSeriesFunction::monomial(1, c(1.0, 0.0));
        let (lhs, rhs) = poincare_gap(&z);
        assert_relative_eq!(lhs, PI, max_relative = 1e-14);
        assert_relative_eq!(rhs, PI, max_relative = 1e-14);
    }

    #[test]
    fn poincare_constant_and_square() {
        let (lhs, rhs) = poincare_gap(&PowerSeriesFunction::constant(c(3.0, -1.0)));
        assert_eq!((lhs, rhs), (0.0, 0.0));
        let z2 = PowerSeriesFunction::monomial(2, c(1.0, 0.0));
        let (lhs, rhs) = poincare_gap(&z2);
        assert_relative_eq!(lhs, 2.0 * PI, max_relative = 1e-14);
        assert_relative_eq!(rhs, 4.0 * PI, max_relative = 1e-14);
    }

    #[test]
    fn poincare_quadrature_agrees_with_coefficients() {
        let f = PowerSeriesFunction::new(vec![c(1.0, 0.5), c(-2.0, 0.0), c(0.0, 1.5)]);
        let (lhs_c, rhs_c) = poincare_gap(&f);
        let (lhs_q, rhs_q) = poincare_gap_quadrature(&f, &cfg()).unwrap();
        assert_relative_eq!(lhs_c, lhs_q, max_relative = 1e-8);
        assert_relative_eq!(rhs_c, rhs_q, max_relative = 1e-8);
    }

    #[test]
    fn iso_sobolev_sharp_equality_at_z() {
        let z = PowerSeriesFunction::monomial(1, c(1.0, 0.0));
        let (lhs, rhs) = iso_sobolev_check(&z, true, &cfg()).unwrap();
        assert_relative_eq!(lhs, PI, max_relative = 1e-12);
        assert_relative_eq!(rhs, PI, max_relative = 1e-12);
    }

    #[test]
    fn iso_sobolev_sharp_monomials_hold() {
        for k in 1..=20usize {
            let f = PowerSeriesFunction::monomial(k, c(1.0, 0.0));
            let (lhs, rhs) = iso_sobolev_check(&f, true, &cfg()).unwrap();
            assert!(
                lhs <= rhs * (1.0 + 1e-12),
                "sharp bound failed at k={k}: lhs={lhs:e} rhs={rhs:e}"
            );
        }
    }

    #[test]
    fn iso_sobolev_constants_and_preconditions() {
        let zero = PowerSeriesFunction::constant(c(2.0, 0.0));
        let (lhs, rhs) = iso_sobolev_check(&zero, true, &cfg()).unwrap();
        assert_eq!((lhs, rhs), (0.0, 0.0));
        // sharp form rejects non-monomials
        let f = PowerSeriesFunction::from_real(&[1.0, 1.0]);
        assert!(iso_sobolev_check(&f, true, &cfg()).is_err());
        // non-sharp form takes any polynomial
        let (lhs, rhs) = iso_sobolev_check(&f, false, &cfg()).unwrap();
        assert!(lhs <= rhs * (1.0 + 1e-9));
    }

    #[test]
    fn monomial_gradient_closed_form_matches_quadrature() {
        for k in 1..=5usize {
            let f = PowerSeriesFunction::monomial(k, c(1.0, 0.0));
            let closed = monomial_gradient_integral(k, c(1.0, 0.0));
            let quad = means::gaussian_plane_integral(&f.derivative(), 1.0, 0.5, &cfg()).unwrap();
            assert_relative_eq!(closed, quad, max_relative = 1e-8);
        }
    }

    #[test]
    fn rademacher_printed_branches() {
        assert_eq!(rademacher(0, 0.25).unwrap(), 1);
        assert_eq!(rademacher(0, 0.75).unwrap(), -1);
        // r₁(0.3) = r₀(0.6) = −1
        assert_eq!(rademacher(1, 0.3).unwrap(), -1);
        assert!(rademacher(0, 1.0).is_err());
    }

    #[test]
    fn khinchine_single_coefficient() {
        let (lp, l2) = khinchine_check(&[c(1.0, 0.0)], 3.5, 0).unwrap();
        assert_relative_eq!(lp, 1.0, max_relative = 1e-14);
        assert_relative_eq!(l2, 1.0, max_relative = 1e-15);
    }

    #[test]
    fn khinchine_orthogonality_at_p2() {
        let (lp, l2) = khinchine_check(&[c(1.0, 0.0), c(1.0, 0.0)], 2.0, 0).unwrap();
        assert_relative_eq!(lp, 2.0f64.sqrt(), max_relative = 1e-14);
        assert_relative_eq!(lp, l2, max_relative = 1e-14);
    }

    #[test]
    fn khinchine_p1_pair_averages_to_one() {
        let (lp, l2) = khinchine_check(&[c(1.0, 0.0), c(1.0, 0.0)], 1.0, 0).unwrap();
        assert_relative_eq!(lp, 1.0, max_relative = 1e-14);
        assert_relative_eq!(lp / l2, 1.0 / 2.0f64.sqrt(), max_relative = 1e-14);
    }

    #[test]
    fn khinchine_empty_and_oversized() {
        assert_eq!(khinchine_check(&[], 2.0, 0).unwrap(), (0.0, 0.0));
        let too_long = vec![c(1.0, 0.0); 21];
        assert!(khinchine_check(&too_long, 2.0, 0).is_err());
    }
}
