//! Local Smith form of valuated matrices.
//!
//! Over a discrete valuation ring with uniformizer `π`, a matrix with entries
//! `b_ij · u_ij · π^{r_i - c_j}` (`b_ij` in the residue field's prime
//! subfield, `u_ij` units) is equivalent to `diag(π^r)·B·diag(π^{-c})`.
//! Schur complements keep that shape, so elimination of `B` over the field,
//! always pivoting on a nonzero entry of least exponent `r_i - c_j`, yields
//! the local invariant factors as the chosen exponents.

use crate::qarith::coeff::Field;

/// Result of a valuated elimination: the rank of `B` and the exponents of
/// the local invariant factors in ascending order (zero exponents are units).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalSmith {
    pub rank: usize,
    pub exponents: Vec<i64>,
}

impl LocalSmith {
    pub fn nonunit_exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.exponents.iter().copied().filter(|&e| e > 0)
    }
}

/// Exponents of the local invariant factors of `diag(π^row)·B·diag(π^{-col})`.
///
/// Panics if an eliminated pivot has negative exponent, which would mean
/// the scaled matrix is not integral over the valuation ring.
pub fn valuated_smith<F: Field>(
    f: &F,
    b: &[Vec<F::Elem>],
    row_val: &[i64],
    col_val: &[i64],
) -> LocalSmith {
    let rows = b.len();
    let cols = col_val.len();
    assert!(b.iter().all(|r| r.len() == cols), "ragged matrix");
    assert_eq!(row_val.len(), rows, "row valuations");
    assert_eq!(col_val.len(), cols, "column valuations");
    let mut a: Vec<Vec<F::Elem>> = b.to_vec();
    let mut row_alive = vec![true; rows];
    let mut col_alive = vec![true; cols];
    let mut exponents = Vec::new();
    loop {
        let mut best: Option<(i64, usize, usize)> = None;
        for i in (0..rows).filter(|&i| row_alive[i]) {
            for j in (0..cols).filter(|&j| col_alive[j]) {
                if f.is_zero(&a[i][j]) {
                    continue;
                }
                let w = row_val[i] - col_val[j];
                if best.is_none_or(|(bw, _, _)| w < bw) {
                    best = Some((w, i, j));
                }
            }
        }
        let Some((w, r, t)) = best else { break };
        assert!(w >= 0, "valuated matrix is not integral");
        exponents.push(w);
        row_alive[r] = false;
        col_alive[t] = false;
        let inv = f.inv(&a[r][t]);
        let pivot_row = a[r].clone();
        for i in (0..rows).filter(|&i| row_alive[i]) {
            if f.is_zero(&a[i][t]) {
                continue;
            }
            let m = f.mul(&a[i][t], &inv);
            for j in (0..cols).filter(|&j| col_alive[j]) {
                if !f.is_zero(&pivot_row[j]) {
                    let d = f.mul(&m, &pivot_row[j]);
                    a[i][j] = f.sub(&a[i][j], &d);
                }
            }
            a[i][t] = f.zero();
        }
    }
    exponents.sort_unstable();
    LocalSmith {
        rank: exponents.len(),
        exponents,
    }
}

/// Rank over a field: valuated elimination with trivial valuations.
pub fn field_rank<F: Field>(f: &F, b: &[Vec<F::Elem>]) -> usize {
    let cols = b.first().map_or(0, |r| r.len());
    valuated_smith(f, b, &vec![0; b.len()], &vec![0; cols]).rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::coeff::Fp;

    #[test]
    fn diagonal_and_mixed() {
        let f = Fp::new(7);
        // diag(π^2, π^0) · [[1,1],[1,0]] · diag(1, π^{-0})
        let b = vec![vec![1, 1], vec![1, 0]];
        let s = valuated_smith(&f, &b, &[2, 0], &[0, 0]);
        assert_eq!(s.exponents, vec![0, 2]);
        let z = vec![vec![0, 0], vec![0, 0]];
        assert_eq!(valuated_smith(&f, &z, &[1, 1], &[0, 0]).rank, 0);
    }
}
