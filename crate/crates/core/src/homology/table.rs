use std::collections::BTreeMap;

use super::compute::compute_homology;
use super::group::{DegreeHomology, HomologyGroup, HomologyTable, IntegralGroup, PrimeTorsion};
use crate::error::{Error, Result};
use crate::exactla::CyclotomicTorsion;
use crate::parallel;
use crate::qarith::{primes_up_to, split_prime_power, CoeffRing};

/// Computes every degree `0 ≤ n ≤ nmax`, in parallel over `n`.
pub fn compute_table(coeff: CoeffRing, nmax: usize) -> Result<HomologyTable> {
    let ns: Vec<usize> = (0..=nmax).collect();
    let degrees = parallel::map(&ns, |&n| {
        compute_homology(n, coeff).map(|groups| DegreeHomology { n, coeff, groups })
    });
    let degrees = degrees
        .into_iter()
        .map(|d| d.map(|d| (d.n, d)))
        .collect::<Result<BTreeMap<_, _>>>()?;
    Ok(HomologyTable {
        coeff,
        nmax,
        degrees,
    })
}

/// The `φ_m`-local part of each group. Over `F_p` this is the family
/// `φ_{m p^i}`, `i ≥ 0`, with `p ∤ m`; over `Q` the single index `m`.
pub fn localized_components(groups: &[HomologyGroup], m: u64) -> Vec<CyclotomicTorsion> {
    groups
        .iter()
        .map(|g| match g.coeff {
            CoeffRing::PrimeField(p) => g
                .torsion
                .filter(|s| split_prime_power(s.m, p as u64).0 == m),
            _ => g.torsion.filter(|s| s.m == m),
        })
        .collect()
}

/// Lexicographically first `(n, l)` at which `F_p` and `Q` dimensions differ.
pub fn first_torsion(p: u32, fp: &HomologyTable, q: &HomologyTable) -> Result<(usize, usize)> {
    if fp.coeff != CoeffRing::PrimeField(p) || q.coeff != CoeffRing::Rationals {
        return Err(Error::InvalidArgument(
            "first_torsion needs an F_p table and a Q table".into(),
        ));
    }
    let nmax = fp.nmax.min(q.nmax);
    for n in 2..=nmax {
        for l in 0..=n {
            if fp.dimension(n, l) > q.dimension(n, l) {
                return Ok((n, l));
            }
        }
    }
    Err(Error::NotFound(format!("no {p}-torsion up to n = {nmax}")))
}

/// Integral homology `H_l(Br(n); Z[q^{±1}])` from the `Q` ranks and the `F_p`
/// dimensions, assuming every `p`-torsion summand has exponent one:
/// `dim_{F_p} H_l = r_l + t_l + t_{l-1}`.
pub fn integral_assembly(n: usize, primes: &[u32]) -> Result<Vec<IntegralGroup>> {
    if n <= 1 {
        return Ok((0..=n)
            .map(|l| IntegralGroup {
                n,
                l,
                free_rank: (l == 0) as u64,
                torsion: Vec::new(),
            })
            .collect());
    }
    let q = compute_homology(n, CoeffRing::Rationals)?;
    let free: Vec<u64> = q.iter().map(|g| g.torsion_dimension()).collect();
    let mut torsion: Vec<Vec<PrimeTorsion>> = vec![Vec::new(); n + 1];
    let mut primes = primes.to_vec();
    primes.sort_unstable();
    primes.dedup();
    for &p in &primes {
        let fp = compute_homology(n, CoeffRing::prime_field(p)?)?;
        let mut prev = 0i64;
        for l in 0..=n {
            let t = fp[l].torsion_dimension() as i64 - free[l] as i64 - prev;
            if t < 0 || (l == n && t != 0) {
                return Err(Error::InconsistentRanks {
                    n,
                    l,
                    p,
                    detail: format!("Z_{p} multiplicity would be {t}"),
                });
            }
            if t > 0 {
                torsion[l].push(PrimeTorsion { p, mult: t as u64 });
            }
            prev = t;
        }
    }
    Ok((0..=n)
        .map(|l| IntegralGroup {
            n,
            l,
            free_rank: free[l],
            torsion: std::mem::take(&mut torsion[l]),
        })
        .collect())
}

/// All primes `≤ n`, the only ones that can appear by the factorial annihilation.
pub fn default_primes(n: usize) -> Vec<u32> {
    primes_up_to(n as u64)
        .into_iter()
        .map(|p| p as u32)
        .collect()
}
