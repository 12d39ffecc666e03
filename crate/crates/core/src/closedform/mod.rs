//! The closed-form presentations of the homology as an independent oracle:
//! monomial bases with annihilators, the symbolic Bockstein, and the stable
//! rings.

mod bockstein;
mod compare;
mod monomial;
mod presentation;
mod stable;

pub use bockstein::{
    symbolic_bockstein, symbolic_bockstein_homology, symbolic_bockstein_matrix,
    symbolic_squares_to_zero, BocksteinTerm,
};
pub use compare::{compare_with_direct, oracle_torsion, ComparisonReport, Mismatch};
pub use monomial::{ExponentCap, Factors, GeneratorSymbol, Kind, Monomial};
pub use presentation::{enumerate_basis, Presentation, Relation};
pub use stable::{
    stable_basis, stable_bockstein, stable_integral_presentation, stable_torsion_rank,
    StablePresentation,
};
