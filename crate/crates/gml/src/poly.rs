//! Entire functions given by a finite list of Taylor coefficients at 0.

use num_complex::Complex64;

/// A polynomial (or truncated power series) f(z) = Σ_k a_k z^k.
///
/// The all-zero list is the zero function; trailing zero coefficients are
/// allowed and ignored by `degree`.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeriesFunction {
    coeffs: Vec<Complex64>,
}

impl PowerSeriesFunction {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        PowerSeriesFunction { coeffs }
    }

    pub fn zero() -> Self {
        PowerSeriesFunction { coeffs: Vec::new() }
    }

    pub fn constant(c: Complex64) -> Self {
        PowerSeriesFunction { coeffs: vec![c] }
    }

    /// c · z^k
    pub fn monomial(k: usize, c: Complex64) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        PowerSeriesFunction { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        PowerSeriesFunction {
            coeffs: coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect(),
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient a_k (zero beyond the stored list).
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or(Complex64::new(0.0, 0.0))
    }

    /// Index of the last nonzero coefficient; `None` for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| c.norm_sqr() != 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().is_none_or(|d| d == 0)
    }

    /// `Some((k, a_k))` when exactly one coefficient is nonzero.
    pub fn as_monomial(&self) -> Option<(usize, Complex64)> {
        let mut found = None;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.norm_sqr() != 0.0 {
                if found.is_some() {
                    return None;
                }
                found = Some((k, *c));
            }
        }
        found
    }

    pub fn value_at_zero(&self) -> Complex64 {
        self.coeff(0)
    }

    /// Horner evaluation; exact for polynomials.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// |f(z)|²
    pub fn abs_sq(&self, z: Complex64) -> f64 {
        self.eval(z).norm_sqr()
    }

    /// |f(z)|^p evaluated as (|f|²)^{p/2}, avoiding branch cuts.
    pub fn abs_pow(&self, z: Complex64, p: f64) -> f64 {
        let m2 = self.abs_sq(z);
        if m2 == 0.0 {
            return 0.0;
        }
        if p == 2.0 {
            m2
        } else {
            m2.powf(0.5 * p)
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return PowerSeriesFunction::zero();
        }
        PowerSeriesFunction {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        }
    }

    /// z^m · f(z)
    pub fn mul_monomial(&self, m: usize) -> Self {
        if self.coeffs.is_empty() {
            return PowerSeriesFunction::zero();
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); m];
        coeffs.extend_from_slice(&self.coeffs);
        PowerSeriesFunction { coeffs }
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        PowerSeriesFunction {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Σ_k |a_k|, a cheap growth bound |f(z)| ≤ Σ|a_k| max(1,|z|)^deg.
    pub fn coeff_abs_sum(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }
}
