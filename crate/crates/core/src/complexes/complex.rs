use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::composition::{enumerate_compositions, Composition};
use super::product::Cochain;
use crate::exactla::SparseMatrix;
use crate::qarith::{q_binomial, CoeffRing, Poly};

/// `(degree n, dimension k, homological index l = n - k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bigrading {
    pub n: usize,
    pub k: usize,
    pub l: usize,
}

impl Bigrading {
    pub fn new(n: usize, k: usize) -> Self {
        assert!(k <= n, "dimension exceeds degree");
        Bigrading { n, k, l: n - k }
    }
}

/// Matrix of `∂_k : C_k → C_{k-1}` in degree `n` (rows: `k-1` parts, columns: `k` parts).
pub fn boundary_matrix(n: usize, k: usize, ring: CoeffRing) -> SparseMatrix<Poly> {
    assert!(
        n >= 1 && (1..=n).contains(&k),
        "boundary_matrix needs 1 <= k <= n"
    );
    let src = enumerate_compositions(n, k);
    let dst = enumerate_compositions(n, k - 1);
    let index: HashMap<&Composition, usize> = dst.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut binom: HashMap<(u32, u32), Poly> = HashMap::new();
    let mut entries = Vec::new();
    for (col, c) in src.iter().enumerate() {
        let mut acc: HashMap<usize, Poly> = HashMap::new();
        for j in 0..k.saturating_sub(1) {
            let (a, b) = (c.parts[j], c.parts[j + 1]);
            let coeff = binom
                .entry((a, b))
                .or_insert_with(|| {
                    q_binomial((a + b) as usize, a as usize, ring).expect("a <= a + b")
                })
                .clone();
            let coeff = if j % 2 == 0 { coeff } else { -&coeff };
            let row = index[&c.merge(j)];
            let e = acc.entry(row).or_insert_with(|| Poly::zero(ring));
            *e = &*e + &coeff;
        }
        entries.extend(
            acc.into_iter()
                .filter(|(_, v)| !v.is_zero())
                .map(|(r, v)| (r, col, v)),
        );
    }
    SparseMatrix::new(dst.len(), src.len(), entries)
}

/// Degree-`n` part of the chain complex: `bases[k]` and `boundaries[k] = ∂_k`
/// (`boundaries[0]` is the zero map to nothing).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GradedComplex {
    pub n: usize,
    pub ring: CoeffRing,
    pub bases: Vec<Vec<Composition>>,
    pub boundaries: Vec<SparseMatrix<Poly>>,
}

impl GradedComplex {
    pub fn build(n: usize, ring: CoeffRing) -> Self {
        let bases: Vec<Vec<Composition>> = (0..=n).map(|k| enumerate_compositions(n, k)).collect();
        let mut boundaries = vec![SparseMatrix::new(0, bases[0].len(), Vec::new())];
        for k in 1..=n {
            boundaries.push(boundary_matrix(n, k, ring));
        }
        GradedComplex {
            n,
            ring,
            bases,
            boundaries,
        }
    }

    pub fn rank(&self, k: usize) -> usize {
        self.bases[k].len()
    }

    /// `∂_{k-1} ∘ ∂_k = 0` for every `k`, by sparse multiplication.
    pub fn squares_to_zero(&self) -> bool {
        (2..=self.n).all(|k| {
            sparse_product_is_zero(&self.boundaries[k - 1], &self.boundaries[k], self.ring)
        })
    }
}

fn sparse_product_is_zero(a: &SparseMatrix<Poly>, b: &SparseMatrix<Poly>, ring: CoeffRing) -> bool {
    let mut by_col: Vec<Vec<(usize, &Poly)>> = vec![Vec::new(); a.cols];
    for (i, j, v) in &a.entries {
        by_col[*j].push((*i, v));
    }
    let mut acc: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
    for (mid, j, v) in &b.entries {
        for (i, w) in &by_col[*mid] {
            let e = acc.entry((*i, *j)).or_insert_with(|| Poly::zero(ring));
            *e = &*e + &(*w * v);
        }
    }
    acc.values().all(|v| v.is_zero())
}

/// The dual complex: `coboundaries[k] = δ_k = ∂_{k+1}^T : C^k → C^{k+1}`.
/// Cohomology at `k` is `H_{n-k}` of the braid group.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CochainComplex {
    pub n: usize,
    pub ring: CoeffRing,
    pub bases: Vec<Vec<Composition>>,
    pub coboundaries: Vec<SparseMatrix<Poly>>,
}

impl CochainComplex {
    pub fn rank(&self, k: usize) -> usize {
        self.bases[k].len()
    }

    pub fn bigrading(&self, k: usize) -> Bigrading {
        Bigrading::new(self.n, k)
    }

    /// `δ_k c` for a cochain of dimension `k`.
    pub fn apply(&self, c: &Cochain) -> Cochain {
        let d = self.delta(c.k as isize);
        let mut values = vec![Poly::zero(self.ring); d.rows];
        for (i, j, v) in &d.entries {
            values[*i] = &values[*i] + &(v * &c.values[*j]);
        }
        Cochain {
            n: self.n,
            k: c.k + 1,
            ring: self.ring,
            values,
        }
    }

    /// `δ_k`, with zero maps outside `0..n`.
    pub fn delta(&self, k: isize) -> SparseMatrix<Poly> {
        let dim = |k: isize| {
            if k < 0 || k as usize > self.n {
                0
            } else {
                self.rank(k as usize)
            }
        };
        if k >= 0 && (k as usize) < self.coboundaries.len() {
            self.coboundaries[k as usize].clone()
        } else {
            SparseMatrix::new(dim(k + 1), dim(k), Vec::new())
        }
    }
}

/// Cochain complex computing `H_*(Br(n); ring[q^{±1}])`.
pub fn braid_cochain_complex(n: usize, ring: CoeffRing) -> CochainComplex {
    let chain = GradedComplex::build(n, ring);
    let coboundaries = (0..n)
        .map(|k| chain.boundaries[k + 1].transpose())
        .collect();
    CochainComplex {
        n,
        ring,
        bases: chain.bases,
        coboundaries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: CoeffRing = CoeffRing::Integers;

    fn dense(m: &SparseMatrix<Poly>) -> Vec<Vec<String>> {
        m.to_dense(Poly::zero(Z))
            .data
            .iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect())
            .collect()
    }

    #[test]
    fn boundary_in_degree_three() {
        // ∂[1|2] = [3 choose 1] t_3, ∂[1|1|1] = [2]([2|1] - [1|2]).
        let d2 = boundary_matrix(3, 2, Z);
        assert_eq!(d2.rows, 1);
        assert_eq!(d2.cols, 2);
        let one_plus_q_plus_q2 = q_binomial(3, 1, Z).unwrap();
        assert!(d2.entries.iter().all(|(_, _, v)| *v == one_plus_q_plus_q2));
        let d3 = boundary_matrix(3, 3, Z);
        let two = q_binomial(2, 1, Z).unwrap();
        let col: Vec<Poly> = d3.to_dense(Poly::zero(Z)).column(0);
        assert_eq!(col, vec![-&two, two]);
    }

    #[test]
    fn squares_to_zero_small_degrees() {
        for n in 0..=8 {
            for ring in [Z, CoeffRing::Rationals, CoeffRing::PrimeField(3)] {
                assert!(
                    GradedComplex::build(n, ring).squares_to_zero(),
                    "n={n} {ring}"
                );
            }
        }
    }

    #[test]
    fn euler_characteristic_vanishes() {
        for n in 2..=10 {
            let c = GradedComplex::build(n, Z);
            let chi: i64 = (0..=n)
                .map(|k| {
                    if k % 2 == 0 {
                        c.rank(k) as i64
                    } else {
                        -(c.rank(k) as i64)
                    }
                })
                .sum();
            assert_eq!(chi, 0, "n={n}");
        }
    }

    #[test]
    fn cochain_complex_is_transpose() {
        let chain = GradedComplex::build(4, Z);
        let co = braid_cochain_complex(4, Z);
        for k in 0..4 {
            assert_eq!(
                dense(&co.delta(k as isize)),
                dense(&chain.boundaries[k + 1].transpose())
            );
        }
        assert_eq!((co.delta(-1).rows, co.delta(-1).cols), (0, 0));
        assert_eq!(co.delta(4).cols, 1);
        assert_eq!(co.bigrading(1), Bigrading { n: 4, k: 1, l: 3 });
    }

    #[test]
    fn json_round_trip() {
        let c = GradedComplex::build(4, CoeffRing::PrimeField(2));
        let back: GradedComplex =
            serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back.bases, c.bases);
        assert_eq!(back.boundaries, c.boundaries);
    }
}
