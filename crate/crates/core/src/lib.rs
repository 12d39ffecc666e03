//! Homology of braid groups with coefficients in `K[q^{±1}]`, where each
//! standard generator acts by `-q`, computed exactly from the normalized
//! standard complex of the q-divided power algebra.

pub mod cache;
pub mod closedform;
pub mod complexes;
pub mod error;
pub mod exactla;
pub mod homology;
pub mod parallel;
pub mod qarith;

pub use error::{Error, Result};
