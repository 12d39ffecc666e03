use std::collections::BTreeMap;

use super::group::{DegreeHomology, HomologyGroup};
use crate::complexes::{braid_cochain_complex, enumerate_compositions, sign_matrix, LocalPrime};
use crate::error::{Error, Result};
use crate::exactla::{
    admissible_labels, factor_into_cyclotomics, field_rank, smith_normal_form_with, valuated_smith,
    CpPoly, CyclotomicTorsion, EuclideanDomain, LocalSmith, PivotRule, PolyRing, QPolyCp,
    Transforms,
};
use crate::parallel;
use crate::qarith::coeff::{Field, Fp, Qq};
use crate::qarith::{CoeffRing, Poly};

/// How the elementary divisors are obtained.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Method {
    /// Valuated elimination of the rescaled complex at every cyclotomic prime.
    #[default]
    Local,
    /// Smith normal form of the coboundary matrices over `K[q]`.
    Global,
}

fn check_coeff(coeff: CoeffRing) -> Result<()> {
    match coeff {
        CoeffRing::Integers => Err(Error::NotAField(coeff)),
        _ => Ok(()),
    }
}

fn trivial_degree(n: usize, coeff: CoeffRing) -> Vec<HomologyGroup> {
    (0..=n)
        .map(|l| HomologyGroup {
            n,
            l,
            coeff,
            free_rank: (l == 0) as usize,
            torsion: CyclotomicTorsion::default(),
        })
        .collect()
}

/// `H_l(Br(n); coeff[q^{±1}])` for `l = 0..=n`.
pub fn compute_homology(n: usize, coeff: CoeffRing) -> Result<Vec<HomologyGroup>> {
    compute_homology_with(n, coeff, Method::Local)
}

pub fn compute_homology_with(
    n: usize,
    coeff: CoeffRing,
    method: Method,
) -> Result<Vec<HomologyGroup>> {
    check_coeff(coeff)?;
    if n <= 1 {
        return Ok(trivial_degree(n, coeff));
    }
    match (method, coeff) {
        (Method::Local, CoeffRing::PrimeField(p)) => local_route(&Fp::new(p), n, coeff),
        (Method::Local, _) => local_route(&Qq, n, coeff),
        (Method::Global, _) => global_route(n, coeff),
    }
}

pub fn compute_degree(n: usize, coeff: CoeffRing) -> Result<DegreeHomology> {
    Ok(DegreeHomology {
        n,
        coeff,
        groups: compute_homology(n, coeff)?,
    })
}

fn dense_signs<F: Field>(f: &F, n: usize, k: usize) -> Vec<Vec<F::Elem>> {
    let s = sign_matrix(n, k);
    let mut out = vec![vec![f.zero(); s.cols]; s.rows];
    for (i, j, v) in &s.entries {
        out[*i][*j] = f.from_i64(*v);
    }
    out
}

fn local_route<F: Field>(f: &F, n: usize, coeff: CoeffRing) -> Result<Vec<HomologyGroup>> {
    let dims: Vec<usize> = (0..=n)
        .map(|k| enumerate_compositions(n, k).len())
        .collect();
    // signs[k] = B_k for k in 1..=n.
    let ks: Vec<usize> = (1..=n).collect();
    let signs: Vec<Vec<Vec<F::Elem>>> = parallel::map(&ks, |&k| dense_signs(f, n, k));
    let ranks: Vec<usize> = parallel::map(&signs, |b| field_rank(f, b));
    let rank_b = |k: usize| {
        if (1..=n).contains(&k) {
            ranks[k - 1]
        } else {
            0
        }
    };

    let labels: Vec<LocalPrime> = admissible_labels(coeff, n as u64)
        .into_iter()
        .map(|m| LocalPrime { ring: coeff, m })
        .filter(|lp| lp.val_q_factorial(n as u64) > 0)
        .collect();
    let tasks: Vec<(usize, LocalPrime)> = ks
        .iter()
        .flat_map(|&k| labels.iter().map(move |&lp| (k, lp)))
        .collect();
    let locals: Vec<LocalSmith> = parallel::map(&tasks, |&(k, lp)| {
        let rv: Vec<i64> = enumerate_compositions(n, k - 1)
            .iter()
            .map(|c| lp.val_weight(c))
            .collect();
        let cv: Vec<i64> = enumerate_compositions(n, k)
            .iter()
            .map(|c| lp.val_weight(c))
            .collect();
        valuated_smith(f, &signs[k - 1], &rv, &cv)
    });

    // Torsion of H^k comes from δ_{k-1} = ∂_k^T.
    let mut torsion: Vec<BTreeMap<(u64, u32), u32>> = vec![BTreeMap::new(); n + 1];
    for ((k, lp), loc) in tasks.iter().zip(&locals) {
        if loc.rank != rank_b(*k) {
            return Err(Error::InconsistentRanks {
                n,
                l: n - k,
                p: coeff.characteristic(),
                detail: format!(
                    "local rank {} differs from generic rank {}",
                    loc.rank,
                    rank_b(*k)
                ),
            });
        }
        let w = lp.exponent_in_label();
        for e in loc.nonunit_exponents() {
            if e % w != 0 {
                return Err(Error::UnfactoredResidual {
                    residual: format!("(q - 1)^{e}"),
                });
            }
            *torsion[*k].entry((lp.m, (e / w) as u32)).or_default() += 1;
        }
    }
    Ok((0..=n)
        .map(|l| {
            let k = n - l;
            let free = dims[k] - rank_b(k + 1) - rank_b(k);
            HomologyGroup {
                n,
                l,
                coeff,
                free_rank: free,
                torsion: CyclotomicTorsion::from_counts(std::mem::take(&mut torsion[k])),
            }
        })
        .collect())
}

/// Rank and normalized nonunit divisors (as polynomials) of a coboundary.
struct Divisors {
    rank: usize,
    nonunit: Vec<Poly>,
}

fn global_divisors(coeff: CoeffRing, sp: &crate::exactla::SparseMatrix<Poly>) -> Divisors {
    let finish = |rank: usize, polys: Vec<Poly>| Divisors {
        rank,
        nonunit: polys
            .into_iter()
            .map(|p| p.laurent_normalize())
            .filter(|p| !p.is_laurent_unit())
            .collect(),
    };
    match coeff {
        CoeffRing::PrimeField(p) => {
            let d = PolyRing::new(Fp::new(p));
            let m = sp.map(|x| x.to_fp_vec()).to_dense(d.zero());
            let s = smith_normal_form_with(&d, &m, Transforms::NONE, PivotRule::MinNormMarkowitz);
            let rank = s.rank();
            finish(
                rank,
                s.divisors.iter().map(|v| Poly::from_fp_vec(p, v)).collect(),
            )
        }
        _ => {
            let d = QPolyCp;
            let m = sp
                .map(|x| CpPoly::from_rationals(x.coeffs()))
                .to_dense(CpPoly::zero());
            let s = smith_normal_form_with(&d, &m, Transforms::NONE, PivotRule::MinNorm);
            let rank = s.rank();
            finish(
                rank,
                s.divisors
                    .iter()
                    .map(|v| Poly::from_q_vec(v.to_rationals()))
                    .collect(),
            )
        }
    }
}

fn global_route(n: usize, coeff: CoeffRing) -> Result<Vec<HomologyGroup>> {
    let cx = braid_cochain_complex(n, coeff);
    let ks: Vec<usize> = (0..n).collect();
    let divs: Vec<Divisors> = parallel::map(&ks, |&k| global_divisors(coeff, &cx.coboundaries[k]));
    let rank = |k: isize| {
        if k >= 0 && (k as usize) < n {
            divs[k as usize].rank
        } else {
            0
        }
    };
    (0..=n)
        .map(|l| {
            let k = n - l;
            let free = cx.rank(k) - rank(k as isize) - rank(k as isize - 1);
            let mut pairs = Vec::new();
            if k >= 1 {
                for d in &divs[k - 1].nonunit {
                    pairs.extend(factor_into_cyclotomics(d, n as u64)?);
                }
            }
            Ok(HomologyGroup {
                n,
                l,
                coeff,
                free_rank: free,
                torsion: CyclotomicTorsion::from_pairs(pairs),
            })
        })
        .collect()
}

/// Certifies that torsion lives only at `φ_m` with `m ≤ n`: the boundary
/// factors as `∂_k·D_k = D_{k-1}·B_k` with `D` the factorial weights, and the
/// sign complex `B` is exact over the prime field of `coeff`.
pub fn verify_torsion_support(n: usize, coeff: CoeffRing) -> Result<bool> {
    check_coeff(coeff)?;
    if n < 2 {
        return Ok(true);
    }
    if !crate::complexes::verify_factorial_scaling(n, CoeffRing::Integers) {
        return Ok(false);
    }
    let ranks: Vec<usize> = match coeff {
        CoeffRing::PrimeField(p) => {
            let f = Fp::new(p);
            (1..=n)
                .map(|k| field_rank(&f, &dense_signs(&f, n, k)))
                .collect()
        }
        _ => (1..=n)
            .map(|k| field_rank(&Qq, &dense_signs(&Qq, n, k)))
            .collect(),
    };
    let rank_b = |k: usize| {
        if (1..=n).contains(&k) {
            ranks[k - 1]
        } else {
            0
        }
    };
    Ok((0..=n).all(|k| rank_b(k) + rank_b(k + 1) == enumerate_compositions(n, k).len()))
}
/// Every torsion summand `K[q]/φ_m^e` of degree `n` is killed by `[n]!`.
/// Distinct labels are coprime, so this is the same as every elementary
/// divisor dividing `[n]!`.
pub fn annihilated_by_factorial(n: usize, groups: &[HomologyGroup]) -> bool {
    groups.iter().all(|g| {
        let fact = crate::qarith::q_factorial(n, g.coeff);
        g.torsion.summands.iter().all(|s| {
            crate::qarith::cyclotomic_in(s.m, g.coeff)
                .pow(s.e)
                .divides(&fact)
        })
    })
}
