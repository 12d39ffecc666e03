//! Homology groups of `Br(n)` with twisted Laurent coefficients, the mod-`p`
//! Bockstein, and the integral groups assembled from them.

mod bockstein;
mod compute;
mod group;
mod table;

pub use bockstein::{bockstein, verify_no_p2_torsion, BasisElement, BocksteinMap};
pub use compute::{
    annihilated_by_factorial, compute_degree, compute_homology, compute_homology_with,
    verify_torsion_support, Method,
};
pub use group::{
    integral_from_json, integral_to_json, DegreeHomology, HomologyGroup, HomologyTable,
    IntegralGroup, PrimeTorsion,
};
pub use table::{
    compute_table, default_primes, first_torsion, integral_assembly, localized_components,
};
