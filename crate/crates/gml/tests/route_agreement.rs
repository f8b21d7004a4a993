//! Cross-route agreement of the three means implementations on random
//! polynomials, plus the monotone maximum-principle chain away from p = 2.

mod common;

use common::{random_poly, seeded_rng};
use gml::{means, PowerSeriesFunction, QuadratureConfig};
use num_complex::Complex64;

fn cfg() -> QuadratureConfig {
    QuadratureConfig::composite_2d()
}

#[test]
fn series_and_quadrature_routes_agree() {
    let mut rng = seeded_rng(7);
    let mut worst: f64 = 0.0;
    for _ in 0..60 {
        let f = random_poly(&mut rng, 6);
        if f.is_zero() {
            continue;
        }
        for &alpha in &[-1.0, 1.0] {
            for &r in &[0.5, 1.0, 2.0] {
                let series = means::means_series_p2(&f, alpha, r).unwrap();
                let generic = means::means_generic(&f, 2.0, alpha, r, &cfg()).unwrap();
                let rel = ((series - generic) / series).abs();
                worst = worst.max(rel);
                assert!(
                    rel <= 1e-8,
                    "route mismatch {rel:e} at alpha={alpha}, r={r} for {:?}",
                    f.coeffs()
                );
            }
        }
    }
    println!("worst series/quadrature deviation: {worst:e}");
}

#[test]
fn monomial_closed_form_agrees_with_quadrature() {
    for k in 0..=6u32 {
        let f = PowerSeriesFunction::monomial(k as usize, Complex64::new(1.0, 0.0));
        for &alpha in &[-1.0, 1.0] {
            for &r in &[0.5, 1.0, 2.0] {
                let closed = means::means_monomial(k, 2.0, alpha, r).unwrap();
                let generic = means::means_generic(&f, 2.0, alpha, r, &cfg()).unwrap();
                let rel = ((closed - generic) / closed).abs();
                assert!(rel <= 1e-8, "monomial mismatch {rel:e} at k={k}, alpha={alpha}, r={r}");
            }
        }
    }
}

#[test]
fn scale_covariance_of_all_routes() {
    let mut rng = seeded_rng(11);
    let scale = Complex64::new(-1.5, 2.0);
    for _ in 0..10 {
        let f = random_poly(&mut rng, 5);
        if f.is_zero() {
            continue;
        }
        let g = f.scaled(scale);
        let factor = scale.norm_sqr(); // |c|^p at p = 2
        let s_f = means::means_series_p2(&f, -1.0, 0.7).unwrap();
        let s_g = means::means_series_p2(&g, -1.0, 0.7).unwrap();
        assert!(((s_g - factor * s_f) / s_g).abs() < 1e-12);
        let q_f = means::means_generic(&f, 2.0, -1.0, 0.7, &cfg()).unwrap();
        let q_g = means::means_generic(&g, 2.0, -1.0, 0.7, &cfg()).unwrap();
        assert!(((q_g - factor * q_f) / q_g).abs() < 1e-9);
    }
}

#[test]
fn maximum_principle_chain_for_odd_exponents() {
    let mut rng = seeded_rng(23);
    let radii = [0.5, 1.0, 2.0, 4.0];
    for _ in 0..12 {
        let f = random_poly(&mut rng, 5);
        for &p in &[1.0, 3.5] {
            for &alpha in &[-1.0, 1.0] {
                let report =
                    means::maximum_principle_check(&f, p, alpha, &radii, &cfg()).unwrap();
                assert!(
                    report.passed(),
                    "violations {:?} at p={p}, alpha={alpha} for {:?}",
                    report.violations,
                    f.coeffs()
                );
            }
        }
    }
}

#[test]
fn derivative_identity_matches_difference_quotient() {
    let mut rng = seeded_rng(31);
    for _ in 0..6 {
        let f = random_poly(&mut rng, 4);
        if f.is_constant() {
            continue;
        }
        for &(p, alpha, r) in &[(2.0, 1.0, 1.0), (1.0, -0.5, 1.5)] {
            let d = means::means_derivative(&f, p, alpha, r, &cfg()).unwrap();
            assert!(d >= -1e-12, "negative derivative {d:e}");
            let eps = 1e-4;
            let hi = means::means_generic(&f, p, alpha, r + eps, &cfg()).unwrap();
            let lo = means::means_generic(&f, p, alpha, r - eps, &cfg()).unwrap();
            let fd = (hi - lo) / (2.0 * eps);
            let tol = (1e-6f64).max(1e-4 * d.abs());
            assert!(
                (d - fd).abs() <= tol.max(1e-4 * fd.abs()),
                "derivative {d:e} vs difference quotient {fd:e} at p={p}, alpha={alpha}"
            );
        }
    }
}
