use super::compute::compute_homology;
use crate::complexes::braid_cochain_complex;
use crate::error::{Error, Result};
use crate::exactla::{
    field_rank, matrix::mat_vec, smith_normal_form_with, PivotRule, PolyRing, SmithForm, Transforms,
};
use crate::parallel;
use crate::qarith::coeff::{Coefficients, Fp};
use crate::qarith::{dense, CoeffRing, Poly};

/// One `F_p`-basis vector `q^power · u_generator` of a homology group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub generator: usize,
    pub power: usize,
}

/// `β_p : H_l → H_{l-1}` over `F_p[q^{±1}]` for every `l`, in the
/// SNF-derived bases listed in divisor order.
#[derive(Clone, Debug)]
pub struct BocksteinMap {
    pub n: usize,
    pub p: u32,
    /// `bases[l]` spans `H_l`.
    pub bases: Vec<Vec<BasisElement>>,
    /// `matrices[l]` has `bases[l-1].len()` rows and `bases[l].len()` columns;
    /// `matrices[0]` is the zero map to `H_{-1} = 0`.
    pub matrices: Vec<Vec<Vec<u32>>>,
}

impl BocksteinMap {
    pub fn dimension(&self, l: usize) -> usize {
        self.bases[l].len()
    }

    pub fn rank(&self, l: usize) -> usize {
        if l == 0 || l > self.n {
            return 0;
        }
        field_rank(&Fp::new(self.p), &self.matrices[l])
    }

    /// `β_{l-1} ∘ β_l = 0` for every `l`.
    pub fn squares_to_zero(&self) -> bool {
        let f = Fp::new(self.p);
        (2..=self.n).all(|l| {
            let (a, b) = (&self.matrices[l - 1], &self.matrices[l]);
            a.iter().all(|row| {
                (0..self.dimension(l)).all(|j| {
                    let mut s = 0u32;
                    for (t, x) in row.iter().enumerate() {
                        f.add_mul_assign(&mut s, x, &b[t][j]);
                    }
                    s == 0
                })
            })
        })
    }

    /// `dim ker β_l − dim im β_{l+1}`.
    pub fn homology_dimension(&self, l: usize) -> usize {
        self.dimension(l) - self.rank(l) - self.rank(l + 1)
    }
}

/// A homology generator `u_j` with its Laurent-normalized annihilator.
struct Generator {
    index: usize,
    divisor: Vec<u32>,
}

fn generators(snf: &SmithForm<Vec<u32>>, f: &Fp) -> Vec<Generator> {
    snf.divisors
        .iter()
        .enumerate()
        .map(|(index, d)| Generator {
            index,
            divisor: dense::laurent_normalize(f, d),
        })
        .filter(|g| g.divisor.len() > 1)
        .collect()
}

/// Chain-level Bockstein: lift each cocycle coefficient-wise to `{0, …, p−1}`,
/// apply the integral coboundary, divide by `p`, reduce, and read off
/// coordinates in the target homology basis.
pub fn bockstein(n: usize, p: u32) -> Result<BocksteinMap> {
    let coeff = CoeffRing::prime_field(p)?;
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "bockstein needs n >= 2, got {n}"
        )));
    }
    let f = Fp::new(p);
    let ring = PolyRing::new(f);
    let cx_p = braid_cochain_complex(n, coeff);
    let cx_z = braid_cochain_complex(n, CoeffRing::Integers);
    // snf[k] diagonalizes δ_k : C^k → C^{k+1}.
    let ks: Vec<usize> = (0..n).collect();
    let snf: Vec<SmithForm<Vec<u32>>> = parallel::map(&ks, |&k| {
        let m = cx_p.coboundaries[k]
            .map(|x| x.to_fp_vec())
            .to_dense(Vec::new());
        smith_normal_form_with(&ring, &m, Transforms::ROWS, PivotRule::MinNormMarkowitz)
    });
    for k in 0..=n {
        let r_out = if k < n { snf[k].rank() } else { 0 };
        let r_in = if k > 0 { snf[k - 1].rank() } else { 0 };
        if cx_p.rank(k) != r_out + r_in {
            return Err(Error::InconsistentRanks {
                n,
                l: n - k,
                p,
                detail: "nonzero free rank".into(),
            });
        }
    }
    // gens[k] generate H^k; H^0 = 0 because δ_0 is injective.
    let gens: Vec<Vec<Generator>> = (0..=n)
        .map(|k| {
            if k == 0 {
                Vec::new()
            } else {
                generators(&snf[k - 1], &f)
            }
        })
        .collect();
    let basis_of = |k: usize| -> Vec<BasisElement> {
        gens[k]
            .iter()
            .enumerate()
            .flat_map(|(g, gen)| {
                (0..gen.divisor.len() - 1).map(move |power| BasisElement {
                    generator: g,
                    power,
                })
            })
            .collect()
    };

    let mut bases = vec![Vec::new(); n + 1];
    let mut matrices = vec![Vec::new(); n + 1];
    for l in 0..=n {
        bases[l] = basis_of(n - l);
    }
    for l in 1..=n {
        let k = n - l;
        let rows = bases[l - 1].len();
        let mut mat = vec![vec![0u32; bases[l].len()]; rows];
        if gens[k].is_empty() {
            matrices[l] = mat;
            continue;
        }
        let u_inv = snf[k - 1].u_inv.as_ref().expect("row transform requested");
        let u_next = snf[k].u.as_ref().expect("row transform requested");
        let delta = &cx_z.coboundaries[k];
        let mut col = 0;
        for gen in &gens[k] {
            let lift: Vec<Poly> = u_inv
                .column(gen.index)
                .iter()
                .map(|c| {
                    Poly::from_bigints(CoeffRing::Integers, c.iter().map(|&x| x.into()).collect())
                })
                .collect();
            let mut image = vec![Poly::zero(CoeffRing::Integers); delta.rows];
            for (i, j, e) in &delta.entries {
                image[*i] = &image[*i] + &(e * &lift[*j]);
            }
            let w: Vec<Vec<u32>> = image
                .iter()
                .map(|v| {
                    v.div_int_exact(p)
                        .map(|x| x.reduce_mod(p).to_fp_vec())
                        .ok_or(Error::NonDivisibleByP { p, n, k })
                })
                .collect::<Result<_>>()?;
            let c = mat_vec(&ring, u_next, &w);
            if c[snf[k].rank()..].iter().any(|x| !x.is_empty()) {
                return Err(Error::InconsistentRanks {
                    n,
                    l: l - 1,
                    p,
                    detail: "Bockstein image is not a cocycle".into(),
                });
            }
            for a in 0..gen.divisor.len() - 1 {
                let mut row = 0;
                for target in &gens[k + 1] {
                    let r = dense::rem(&f, &dense::shift(&f, &c[target.index], a), &target.divisor);
                    for b in 0..target.divisor.len() - 1 {
                        mat[row + b][col] = r.get(b).copied().unwrap_or(0);
                    }
                    row += target.divisor.len() - 1;
                }
                col += 1;
            }
        }
        matrices[l] = mat;
    }
    Ok(BocksteinMap {
        n,
        p,
        bases,
        matrices,
    })
}

/// `ker β_p / im β_p` has the `Q`-dimension in every index, so the `p`-torsion
/// of the integral homology has exponent one.
pub fn verify_no_p2_torsion(n: usize, p: u32) -> Result<bool> {
    if n < 2 {
        return Ok(true);
    }
    let beta = bockstein(n, p)?;
    let q = compute_homology(n, CoeffRing::Rationals)?;
    Ok((0..=n).all(|l| beta.homology_dimension(l) as u64 == q[l].torsion_dimension()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_two_torsion() {
        for n in 2..=5 {
            let b = bockstein(n, 2).unwrap();
            assert!((1..=n).all(|l| b.rank(l) == 0), "n={n}");
        }
        let b = bockstein(6, 2).unwrap();
        assert_eq!(
            (0..=6).map(|l| b.rank(l)).collect::<Vec<_>>(),
            vec![0, 0, 0, 1, 0, 0, 0]
        );
        assert!(b.squares_to_zero());
    }

    #[test]
    fn dimensions_match_field_homology() {
        let b = bockstein(7, 3).unwrap();
        let h = compute_homology(7, CoeffRing::PrimeField(3)).unwrap();
        for l in 0..=7 {
            assert_eq!(b.dimension(l) as u64, h[l].torsion_dimension());
        }
    }

    #[test]
    fn no_square_torsion_small() {
        for n in 2..=7 {
            assert!(verify_no_p2_torsion(n, 2).unwrap());
        }
    }

    #[test]
    fn degree_one_is_rejected() {
        assert!(matches!(bockstein(1, 2), Err(Error::InvalidArgument(_))));
    }
}
