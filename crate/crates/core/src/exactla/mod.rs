//! Exact linear algebra over Euclidean domains.

pub mod cyclo;
pub mod domain;
pub mod matrix;
pub mod presentation;
pub mod qcp;
pub mod smith;
pub mod valuated;

pub use cyclo::{admissible_labels, factor_into_cyclotomics, CyclotomicTorsion, TorsionSummand};
pub use domain::{EuclideanDomain, FpPoly, Integers, PolyRing, QPoly};
pub use matrix::{Matrix, SparseMatrix};
pub use presentation::{homology_of_pair, ModulePresentation};
pub use qcp::{CpPoly, QPolyCp};
pub use smith::{smith_normal_form, smith_normal_form_with, PivotRule, SmithForm, Transforms};
pub use valuated::{field_rank, valuated_smith, LocalSmith};
