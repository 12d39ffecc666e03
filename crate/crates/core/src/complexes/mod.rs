//! The normalized standard complex of the q-divided power algebra in a fixed
//! degree, its dual, and the juxtaposition product on cochains.

pub mod complex;
pub mod composition;
pub mod product;
pub mod scaling;

pub use complex::{
    boundary_matrix, braid_cochain_complex, Bigrading, CochainComplex, GradedComplex,
};
pub use composition::{enumerate_compositions, Composition};
pub use product::{concat_product, Cochain};
pub use scaling::{factorial_weight, sign_matrix, verify_factorial_scaling, LocalPrime};
