//! Fock-Sobolev norms, Carleson-type ball-mass statistics over square
//! lattices, trace ratios of test-function families, and the pushforward
//! measures induced by composition and Volterra operators.
//!
//! A measure embeds F^{p,m} into L^q when its normalized ball masses
//! μ(B(a,r))/(1+|a|)^{mq} are bounded (p ≤ q) or lattice-summable with
//! exponent p/(p−q) (q < p). Both statistics are computed over a truncated
//! lattice with the truncation reported, never silently dropped.

use crate::error::{Error, Result};
use crate::means;
use crate::measure::{ball_mass, MeasureSpec};
use crate::poly::PowerSeriesFunction;
use crate::quad::{self, QuadratureConfig};
use num_complex::Complex64;
use rayon::prelude::*;

/// Geometry of a lattice-based statistic: spacing s, ball radius r,
/// truncation radius, and the exponents (p, q, m).
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct LatticeParams {
    pub s: f64,
    pub r: f64,
    pub r_trunc: f64,
    pub p: f64,
    pub q: f64,
    pub m: u32,
}

impl LatticeParams {
    pub fn new(s: f64, r: f64, r_trunc: f64, p: f64, q: f64, m: u32) -> Result<Self> {
        if !(s > 0.0 && r > 0.0 && s.is_finite() && r.is_finite()) {
            return Err(Error::domain("lattice spacing and ball radius must be positive"));
        }
        if s > r {
            return Err(Error::domain(
                "lattice spacing must satisfy s <= r so squares sit inside their balls",
            ));
        }
        if !(p > 0.0 && q > 0.0) {
            return Err(Error::domain("p and q must be positive"));
        }
        if !(r_trunc >= 10.0 * r.max(1.0)) {
            return Err(Error::domain("truncation radius must be at least 10·max(1, r)"));
        }
        Ok(LatticeParams { s, r, r_trunc, p, q, m })
    }

    /// Default split s = r/2 and truncation 10·max(1, r).
    pub fn with_defaults(r: f64, p: f64, q: f64, m: u32) -> Result<Self> {
        LatticeParams::new(0.5 * r, r, 10.0 * r.max(1.0), p, q, m)
    }
}

/// Points of s·ℤ² inside the truncation disk, in deterministic row-major
/// order.
pub fn lattice_centers(s: f64, r_trunc: f64) -> Vec<Complex64> {
    let n = (r_trunc / s).floor() as i64;
    let mut centers = Vec::new();
    for i in -n..=n {
        for j in -n..=n {
            let a = Complex64::new(i as f64 * s, j as f64 * s);
            if a.norm() <= r_trunc {
                centers.push(a);
            }
        }
    }
    centers
}

/// Normalized reproducing-kernel function k_w(z) = exp(z·w̄ − |w|²/2);
/// |k_w(w)| e^{-|w|²/2} = 1.
pub fn kernel_eval(w: Complex64, z: Complex64) -> Result<Complex64> {
    let e = z * w.conj() - Complex64::new(0.5 * w.norm_sqr(), 0.0);
    if e.re > 700.0 {
        return Err(Error::Overflow("kernel exponent exceeds the f64 budget".into()));
    }
    Ok(e.exp())
}

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// (e^{z·ā} − p_m(z·ā)) / z^m, where p_m is the Taylor polynomial of e^w of
/// order m−1 (p_0 = 0). Entire in z, with the continuity value ā^m/m! at
/// z = 0; the power-series form is used while the subtraction would cancel.
pub fn kernel_remainder(a: Complex64, z: Complex64, m: u32) -> Complex64 {
    let w = z * a.conj();
    if w.norm() <= 24.0 {
        // Σ_{i≥0} ā^m w^i / (m+i)!
        let mut term = a.conj().powu(m) / factorial(m);
        let mut sum = term;
        for i in 1..200u32 {
            term = term * w / (m + i) as f64;
            sum += term;
            if term.norm() <= f64::EPSILON * sum.norm() {
                break;
            }
        }
        sum
    } else {
        let mut taylor = Complex64::new(0.0, 0.0);
        let mut t = Complex64::new(1.0, 0.0);
        for j in 0..m {
            taylor += t;
            t = t * w / (j + 1) as f64;
        }
        (w.exp() - taylor) / z.powu(m)
    }
}

/// An entire test function with pointwise values: a polynomial, a
/// normalized kernel, or a kernel remainder.
#[derive(Debug, Clone)]
pub enum TestFn {
    Poly(PowerSeriesFunction),
    Kernel { w: Complex64 },
    KernelRemainder { a: Complex64, m: u32 },
}

impl TestFn {
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        match self {
            TestFn::Poly(f) => Ok(f.eval(z)),
            TestFn::Kernel { w } => kernel_eval(*w, z),
            TestFn::KernelRemainder { a, m } => Ok(kernel_remainder(*a, z, *m)),
        }
    }

    /// |f(z)| e^{-|z|²/2}, computed in a cancellation-free form per variant.
    pub fn weighted_abs(&self, z: Complex64) -> f64 {
        match self {
            TestFn::Poly(f) => f.abs_sq(z).sqrt() * (-0.5 * z.norm_sqr()).exp(),
            // |k_w(z)| e^{-|z|²/2} = e^{-|z-w|²/2}
            TestFn::Kernel { w } => (-0.5 * (z - w).norm_sqr()).exp(),
            TestFn::KernelRemainder { a, m } => {
                kernel_remainder(*a, z, *m).norm() * (-0.5 * z.norm_sqr()).exp()
            }
        }
    }

    /// Where the Gaussian-weighted mass concentrates.
    fn mass_center(&self) -> Complex64 {
        match self {
            TestFn::Poly(_) => Complex64::new(0.0, 0.0),
            TestFn::Kernel { w } => *w,
            TestFn::KernelRemainder { a, .. } => *a,
        }
    }

    pub fn label(&self) -> String {
        match self {
            TestFn::Poly(f) => match f.as_monomial() {
                Some((k, _)) => format!("z^{k}"),
                None => format!("poly(deg {})", f.degree().map_or(0, |d| d)),
            },
            TestFn::Kernel { w } => format!("k[{}{:+}i]", w.re, w.im),
            TestFn::KernelRemainder { a, m } => format!("rem[{}{:+}i;m={m}]", a.re, a.im),
        }
    }
}

/// Sweepable families of test functions.
#[derive(Debug, Clone)]
pub enum TestFunctionFamily {
    /// z^0, …, z^K.
    Monomials { max_degree: u32 },
    /// Normalized kernels at the given points.
    Kernels { points: Vec<Complex64> },
    /// Kernel remainders of order m at the given points.
    KernelRemainders { points: Vec<Complex64>, m: u32 },
}

impl TestFunctionFamily {
    pub fn members(&self) -> Vec<TestFn> {
        match self {
            TestFunctionFamily::Monomials { max_degree } => (0..=*max_degree)
                .map(|k| {
                    TestFn::Poly(PowerSeriesFunction::monomial(
                        k as usize,
                        Complex64::new(1.0, 0.0),
                    ))
                })
                .collect(),
            TestFunctionFamily::Kernels { points } => {
                points.iter().map(|&w| TestFn::Kernel { w }).collect()
            }
            TestFunctionFamily::KernelRemainders { points, m } => points
                .iter()
                .map(|&a| TestFn::KernelRemainder { a, m: *m })
                .collect(),
        }
    }
}

/// ||f||_{F^{p,m}} = (∫ |z^m f(z) e^{-|z|²/2}|^p dA)^{1/p} for polynomials.
pub fn fock_sobolev_norm(
    f: &PowerSeriesFunction,
    p: f64,
    m: u32,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    if f.is_zero() {
        return Ok(0.0);
    }
    let shifted = f.mul_monomial(m as usize);
    Ok(means::gaussian_plane_integral(&shifted, p, 0.5 * p, cfg)?.powf(1.0 / p))
}

/// ∫ (|z|^m |f(z)| e^{-|z|²/2})^p dA for an arbitrary test function, by
/// polar quadrature around its mass center, extended until two consecutive
/// radius enlargements leave the value unchanged at tolerance.
pub fn weighted_plane_integral(f: &TestFn, m: u32, p: f64, cfg: &QuadratureConfig) -> Result<f64> {
    if let TestFn::Poly(poly) = f {
        if poly.is_zero() {
            return Ok(0.0);
        }
        return means::gaussian_plane_integral(&poly.mul_monomial(m as usize), p, 0.5 * p, cfg);
    }
    let center = f.mass_center();
    let integrand = |z: Complex64| {
        let base = f.weighted_abs(z);
        if base == 0.0 {
            return 0.0;
        }
        (z.norm().powi(m as i32) * base).powf(p)
    };
    polar_integral_extended(integrand, center, (2.0 * (160.0 + p * m as f64) / p).sqrt(), cfg)
}

/// Polar quadrature of `g` around `center` over radii [0, R], with R grown
/// until the value stabilizes twice in a row.
fn polar_integral_extended(
    g: impl Fn(Complex64) -> f64,
    center: Complex64,
    r_start: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let mut nodes = cfg.angular_nodes;
    for &probe in &[0.5 * r_start, 0.15 * r_start] {
        let (_, used) = quad::periodic_trapezoid_auto(
            |theta| g(center + Complex64::from_polar(probe, theta)),
            cfg,
        )?;
        nodes = nodes.max(used / 4);
    }
    let radial = |upper: f64| {
        quad::adaptive_integrate(
            |s| {
                s * quad::periodic_trapezoid(
                    |theta| g(center + Complex64::from_polar(s, theta)),
                    nodes,
                )
            },
            0.0,
            upper,
            cfg,
        )
    };
    let mut upper = r_start.max(4.0);
    let mut value = radial(upper)?;
    let mut stable = 0;
    for _ in 0..48 {
        let next_upper = upper * 1.3;
        let next = radial(next_upper)?;
        let close = (next - value).abs() <= cfg.tol_scaled(next);
        upper = next_upper;
        value = next;
        stable = if close { stable + 1 } else { 0 };
        if stable >= 2 {
            return Ok(value);
        }
    }
    Err(Error::domain("plane integral failed to stabilize under radius extension"))
}

/// ||f||_{L^q(μ)} = (∫ |f(z) e^{-|z|²/2}|^q dμ(z))^{1/q}.
///
/// Exact sums for atoms; polar quadrature for densities (which must stay
/// bounded, so the Gaussian factor controls the tail); subsampled cell sums
/// for grids.
pub fn weighted_lq_norm(
    f: &TestFn,
    mu: &MeasureSpec,
    q: f64,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    if !(q > 0.0 && q.is_finite()) {
        return Err(Error::domain("q must be positive and finite"));
    }
    let power = match mu {
        MeasureSpec::Atoms(atoms) => atoms
            .iter()
            .map(|(z, w)| w * f.weighted_abs(*z).powf(q))
            .sum::<f64>(),
        MeasureSpec::RadialDensity(rho) => {
            let rho = rho.clone();
            polar_integral_extended(
                |z| f.weighted_abs(z).powf(q) * rho(z.norm()),
                f.mass_center(),
                (2.0 * 160.0 / q).sqrt() + f.mass_center().norm(),
                cfg,
            )?
        }
        MeasureSpec::Density(rho) => {
            let rho = rho.clone();
            polar_integral_extended(
                |z| f.weighted_abs(z).powf(q) * rho(z),
                f.mass_center(),
                (2.0 * 160.0 / q).sqrt() + f.mass_center().norm(),
                cfg,
            )?
        }
        MeasureSpec::Grid(grid) => {
            const K: usize = 4;
            let sub = grid.cell / K as f64;
            let mut sum = 0.0;
            for (i, row) in grid.values.iter().enumerate() {
                for (j, &rho) in row.iter().enumerate() {
                    if rho == 0.0 {
                        continue;
                    }
                    let x0 = grid.origin.0 + j as f64 * grid.cell;
                    let y0 = grid.origin.1 + i as f64 * grid.cell;
                    let mut cell_sum = 0.0;
                    for ii in 0..K {
                        for jj in 0..K {
                            let z = Complex64::new(
                                x0 + (jj as f64 + 0.5) * sub,
                                y0 + (ii as f64 + 0.5) * sub,
                            );
                            cell_sum += f.weighted_abs(z).powf(q);
                        }
                    }
                    sum += rho * cell_sum * sub * sub;
                }
            }
            sum
        }
    };
    Ok(power.powf(1.0 / q))
}

/// ||f||_{L^q(μ)} / ||f||_{F^{p,m}}.
pub fn trace_ratio(
    f: &TestFn,
    mu: &MeasureSpec,
    p: f64,
    q: f64,
    m: u32,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let den = weighted_plane_integral(f, m, p, cfg)?.powf(1.0 / p);
    if !(den > 0.0) || !den.is_finite() {
        return Err(Error::domain("trace ratio requires a nonzero Fock-Sobolev norm"));
    }
    Ok(weighted_lq_norm(f, mu, q, cfg)? / den)
}

/// One labelled ratio of a family sweep.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FamilyRatio {
    pub label: String,
    pub ratio: f64,
}

/// Trace ratios over a family, with the maximum highlighted.
#[derive(Debug, Clone, serde::Serialize)]
pub struct FamilySweep {
    pub entries: Vec<FamilyRatio>,
    pub max_ratio: f64,
    pub argmax: String,
}

pub fn trace_ratio_family(
    family: &TestFunctionFamily,
    mu: &MeasureSpec,
    p: f64,
    q: f64,
    m: u32,
    cfg: &QuadratureConfig,
) -> Result<FamilySweep> {
    let members = family.members();
    if members.is_empty() {
        return Err(Error::domain("family has no members"));
    }
    let entries: Vec<FamilyRatio> = members
        .iter()
        .map(|f| {
            trace_ratio(f, mu, p, q, m, cfg).map(|ratio| FamilyRatio { label: f.label(), ratio })
        })
        .collect::<Result<_>>()?;
    let mut best = 0;
    for (i, e) in entries.iter().enumerate() {
        if e.ratio > entries[best].ratio {
            best = i;
        }
    }
    Ok(FamilySweep {
        max_ratio: entries[best].ratio,
        argmax: entries[best].label.clone(),
        entries,
    })
}

/// Sampled sup of μ(B(a,r))/(1+|a|)^{mq} over the truncated lattice.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SupStatistic {
    /// Largest sampled statistic (a lower bound for the true sup).
    pub sup: f64,
    pub argmax: (f64, f64),
    /// Value before the quarter-spacing refinement pass.
    pub coarse_sup: f64,
    pub centers_evaluated: usize,
    /// The measure's known support extends beyond the truncation radius.
    pub truncation_warning: bool,
    /// Largest statistic near the truncation edge over the largest at half
    /// the truncation radius.
    pub edge_growth_ratio: f64,
    /// The maximum sits at the truncation edge and the statistic is still
    /// growing there: the true sup looks infinite.
    pub unbounded_suspected: bool,
}

/// Evaluate the sup statistic over the lattice, refine around the argmax at
/// quarter spacing, and flag truncation-edge maxima.
pub fn carleson_sup_statistic(
    mu: &MeasureSpec,
    lat: &LatticeParams,
    cfg: &QuadratureConfig,
) -> Result<SupStatistic> {
    let mq = lat.m as f64 * lat.q;
    let stat = |a: Complex64| -> Result<f64> {
        Ok(ball_mass(mu, a, lat.r, cfg)? / (1.0 + a.norm()).powf(mq))
    };

    let centers = lattice_centers(lat.s, lat.r_trunc);
    let values: Vec<f64> = centers.par_iter().map(|&a| stat(a)).collect::<Result<_>>()?;
    let mut best = 0;
    for (i, &v) in values.iter().enumerate() {
        if v > values[best] {
            best = i;
        }
    }
    let coarse_sup = values[best];
    let coarse_argmax = centers[best];

    // quarter-spacing refinement around the coarse argmax
    let mut sup = coarse_sup;
    let mut argmax = coarse_argmax;
    for di in -2i32..=2 {
        for dj in -2i32..=2 {
            if di == 0 && dj == 0 {
                continue;
            }
            let b = coarse_argmax
                + Complex64::new(di as f64 * lat.s / 4.0, dj as f64 * lat.s / 4.0);
            let v = stat(b)?;
            if v > sup {
                sup = v;
                argmax = b;
            }
        }
    }

    let truncation_warning = mu.support_radius().is_some_and(|rs| rs > lat.r_trunc);

    // A bounded statistic may still attain its sampled maximum at the edge
    // (e.g. a bounded nondecreasing density), so "unbounded" additionally
    // requires growth between the half-radius shell and the edge shell.
    let shell_max = |lo: f64, hi: f64| {
        centers
            .iter()
            .zip(&values)
            .filter(|(a, _)| {
                let n = a.norm();
                n >= lo && n <= hi
            })
            .map(|(_, &v)| v)
            .fold(0.0f64, f64::max)
    };
    let mid_max = shell_max(0.45 * lat.r_trunc, 0.55 * lat.r_trunc);
    let edge_max = shell_max(0.9 * lat.r_trunc, lat.r_trunc);
    let edge_growth_ratio = if mid_max > 0.0 { edge_max / mid_max } else if edge_max > 0.0 {
        f64::INFINITY
    } else {
        0.0
    };
    let at_edge = coarse_argmax.norm() >= lat.r_trunc - 2.0 * lat.s;
    let unbounded_suspected = at_edge && edge_growth_ratio > 1.2;

    Ok(SupStatistic {
        sup,
        argmax: (argmax.re, argmax.im),
        coarse_sup,
        centers_evaluated: centers.len(),
        truncation_warning,
        edge_growth_ratio,
        unbounded_suspected,
    })
}

/// What is known about the discarded lattice tail.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum TailBound {
    /// The support is covered: every discarded ball has zero mass.
    Zero,
    /// The support is not known to be covered; the tail was truncated.
    Unknown,
}

/// Truncated lattice sum Σ (μ(B(a,r))/(1+|a|)^{mq})^{p/(p−q)} for q < p.
#[derive(Debug, Clone, serde::Serialize)]
pub struct SumStatistic {
    pub sum: f64,
    pub exponent: f64,
    pub nonzero_terms: usize,
    pub tail: TailBound,
    /// Outer-ring term sums stopped decaying: the full sum looks divergent.
    pub divergent_suspected: bool,
}

pub fn carleson_sum_statistic(
    mu: &MeasureSpec,
    lat: &LatticeParams,
    cfg: &QuadratureConfig,
) -> Result<SumStatistic> {
    if !(lat.q < lat.p) {
        return Err(Error::domain("the lattice-sum statistic requires q < p"));
    }
    let exponent = lat.p / (lat.p - lat.q);
    let mq = lat.m as f64 * lat.q;
    let n = (lat.r_trunc / lat.s).floor() as i64;

    // ring index = max(|i|, |j|); outer square shells are clipped by the
    // truncation disk, so divergence is judged on per-point ring averages.
    let mut ring_sums = vec![0.0f64; n as usize + 1];
    let mut ring_counts = vec![0usize; n as usize + 1];
    let mut sum = 0.0;
    let mut nonzero_terms = 0usize;

    let mut indexed: Vec<(i64, i64)> = Vec::new();
    for i in -n..=n {
        for j in -n..=n {
            let a = Complex64::new(i as f64 * lat.s, j as f64 * lat.s);
            if a.norm() <= lat.r_trunc {
                indexed.push((i, j));
            }
        }
    }
    let terms: Vec<(usize, f64)> = indexed
        .par_iter()
        .map(|&(i, j)| -> Result<(usize, f64)> {
            let a = Complex64::new(i as f64 * lat.s, j as f64 * lat.s);
            let mass = ball_mass(mu, a, lat.r, cfg)?;
            let term = if mass > 0.0 {
                // log space so tiny masses with large exponents stay finite
                (exponent * (mass.ln() - mq * (1.0 + a.norm()).ln())).exp()
            } else {
                0.0
            };
            Ok((i.unsigned_abs().max(j.unsigned_abs()) as usize, term))
        })
        .collect::<Result<_>>()?;
    for (ring, term) in terms {
        ring_counts[ring] += 1;
        if term > 0.0 {
            nonzero_terms += 1;
            sum += term;
            ring_sums[ring] += term;
        }
    }

    let tail = match mu.support_radius() {
        Some(rs) if rs + lat.r <= lat.r_trunc => TailBound::Zero,
        _ => TailBound::Unknown,
    };
    let ring_avgs: Vec<f64> = ring_sums
        .iter()
        .zip(&ring_counts)
        .map(|(&s, &c)| if c > 0 { s / c as f64 } else { 0.0 })
        .collect();
    let max_avg = ring_avgs.iter().cloned().fold(0.0, f64::max);
    let last_avg = *ring_avgs.last().unwrap_or(&0.0);
    let divergent_suspected = last_avg > 0.0 && last_avg >= 0.5 * max_avg;

    Ok(SumStatistic { sum, exponent, nonzero_terms, tail, divergent_suspected })
}

/// Pushforward measure of the composition operator f ↦ f∘φ for the affine
/// map φ(z) = az + b: dμ(w) = |a|^{-2} e^{-q|(w−b)/a|²/2} dA(w).
pub fn composition_measure(a: Complex64, b: Complex64, q: f64) -> Result<MeasureSpec> {
    if a.norm_sqr() == 0.0 {
        return Err(Error::domain("composition with a constant map is degenerate"));
    }
    if !(q > 0.0 && q.is_finite()) {
        return Err(Error::domain("q must be positive and finite"));
    }
    let inv_jacobian = 1.0 / a.norm_sqr();
    Ok(MeasureSpec::density(move |w: Complex64| {
        inv_jacobian * (-0.5 * q * ((w - b) / a).norm_sqr()).exp()
    }))
}

/// Measure deciding boundedness of the Volterra operator
/// f ↦ ∫₀^z f φ′: dμ = (|φ′(z)|/(1+|z|))^q dA.
pub fn volterra_measure(phi: &PowerSeriesFunction, q: f64) -> Result<MeasureSpec> {
    if !(q > 0.0 && q.is_finite()) {
        return Err(Error::domain("q must be positive and finite"));
    }
    let dphi = phi.derivative();
    Ok(MeasureSpec::density(move |z: Complex64| {
        let denom = 1.0 + z.norm();
        (dphi.abs_sq(z) / (denom * denom)).powf(0.5 * q)
    }))
}
