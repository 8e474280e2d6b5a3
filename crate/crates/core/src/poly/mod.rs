//! Homogeneous bivariate polynomials over a + b√2 (a, b Gaussian rationals),
//! MacWilliams transforms, and Gleason invariant theory.

pub mod gleason;
mod hpoly;
mod scalar;
pub mod text;

pub use hpoly::{macwilliams_transform, HPoly, PolyRecord, RatPoly, Ring};
pub use scalar::{GaussRat, Scalar};
