//! Exact harmonic weight enumerators for binary linear codes.

pub mod combinatorics;
pub mod config;
pub mod designs;
pub mod discrete;
pub mod error;
pub mod euclid;
pub mod gf2;
pub mod hwe;
pub mod linalg;

pub use error::{Error, Result};
pub mod poly;
pub mod tetrad;
pub mod zonal;
