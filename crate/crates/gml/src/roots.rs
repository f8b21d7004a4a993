//! Bracketed root finding by bisection.

use crate::error::{Error, Result};

/// A root certified by a sign-changing bracket.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct BisectionRoot {
    /// Bracket midpoint after the final step.
    pub root: f64,
    /// Final bracket; the function has opposite signs at its ends.
    pub bracket: (f64, f64),
    /// Function values at the final bracket ends.
    pub f_bracket: (f64, f64),
    pub iterations: usize,
}

/// Bisect `f` on `[lo, hi]` down to a bracket of width `xtol`.
///
/// Requires a sign change on the initial bracket; an endpoint where `f`
/// vanishes exactly is returned as the root directly.
pub fn bisect<F: Fn(f64) -> f64>(
    f: F,
    lo: f64,
    hi: f64,
    xtol: f64,
    max_iter: usize,
) -> Result<BisectionRoot> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::domain("bisection requires finite lo < hi"));
    }
    if !(xtol > 0.0) {
        return Err(Error::domain("xtol must be positive"));
    }
    let mut a = lo;
    let mut b = hi;
    let mut fa = f(a);
    let mut fb = f(b);
    if fa == 0.0 {
        return Ok(BisectionRoot { root: a, bracket: (a, a), f_bracket: (0.0, 0.0), iterations: 0 });
    }
    if fb == 0.0 {
        return Ok(BisectionRoot { root: b, bracket: (b, b), f_bracket: (0.0, 0.0), iterations: 0 });
    }
    if fa.signum() == fb.signum() {
        return Err(Error::NoBracket { lo, hi, f_lo: fa, f_hi: fb });
    }

    let mut iterations = 0;
    while b - a > xtol && iterations < max_iter {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break; // bracket no longer splittable in f64
        }
        let fm = f(mid);
        iterations += 1;
        if fm == 0.0 {
            return Ok(BisectionRoot {
                root: mid,
                bracket: (a, b),
                f_bracket: (fa, fb),
                iterations,
            });
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    Ok(BisectionRoot {
        root: 0.5 * (a + b),
        bracket: (a, b),
        f_bracket: (fa, fb),
        iterations,
    })
}
