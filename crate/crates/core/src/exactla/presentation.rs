use serde::{Deserialize, Serialize};

use super::domain::EuclideanDomain;
use super::matrix::{is_zero_matrix, mat_mul, Matrix};
use super::smith::{smith_normal_form, Transforms};
use crate::error::{Error, Result};

/// `R^free_rank ⊕ ⊕_i R/(torsion_i)` with torsion a divisibility chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModulePresentation<E> {
    pub free_rank: usize,
    pub torsion: Vec<E>,
}

/// `ker(d_out) / im(d_in)` for maps `A --d_in--> M --d_out--> B`, with `M`
/// free of rank `d_in.rows == d_out.cols`.
pub fn homology_of_pair<D: EuclideanDomain>(
    d: &D,
    d_in: &Matrix<D::Elem>,
    d_out: &Matrix<D::Elem>,
) -> Result<ModulePresentation<D::Elem>> {
    if d_in.rows != d_out.cols {
        return Err(Error::InvalidArgument(format!(
            "ambient ranks differ: {} vs {}",
            d_in.rows, d_out.cols
        )));
    }
    if d_in.cols > 0 && d_out.rows > 0 && !is_zero_matrix(d, &mat_mul(d, d_out, d_in)) {
        return Err(Error::NotAComplex);
    }
    let s_in = smith_normal_form(d, d_in, Transforms::NONE);
    let s_out = smith_normal_form(d, d_out, Transforms::NONE);
    Ok(ModulePresentation {
        free_rank: d_in.rows - s_out.rank() - s_in.rank(),
        torsion: s_in
            .divisors
            .into_iter()
            .filter(|x| !d.is_unit(x))
            .collect(),
    })
}
