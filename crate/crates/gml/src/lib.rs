//! Gaussian integral means of entire functions.
//!
//! The crate computes the means M_{p,α}(f, r) of an entire function against
//! the Gaussian weight e^{-α|z|²} over disks, classifies the convexity of
//! ln M as a function of ln r (including transition radii found by certified
//! bisection), and evaluates the Carleson-type ball-mass statistics, trace
//! ratios, and sharp Gaussian inequalities attached to Fock-Sobolev
//! embeddings.

// Validation uses NaN-rejecting negated comparisons throughout.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod convexity;
pub mod error;
pub mod inequalities;
pub mod linear_map;
pub mod means;
pub mod measure;
pub mod poly;
pub mod quad;
pub mod roots;
pub mod special;
pub mod trace;

pub use error::{Error, Result};
pub use poly::PowerSeriesFunction;
pub use quad::QuadratureConfig;
