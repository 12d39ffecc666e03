use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qarith::{cyclotomic_in, CoeffRing, Poly};

/// One summand family `(R/φ_m^e)^mult`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TorsionSummand {
    pub m: u64,
    pub e: u32,
    pub mult: u32,
}

/// Multiset of cyclotomic-power summands, sorted by `(m, e)`, one entry per pair.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CyclotomicTorsion {
    pub summands: Vec<TorsionSummand>,
}

impl CyclotomicTorsion {
    pub fn from_pairs<I: IntoIterator<Item = (u64, u32)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<(u64, u32), u32> = BTreeMap::new();
        for p in pairs {
            *acc.entry(p).or_default() += 1;
        }
        Self::from_counts(acc)
    }

    pub fn from_counts(acc: BTreeMap<(u64, u32), u32>) -> Self {
        CyclotomicTorsion {
            summands: acc
                .into_iter()
                .filter(|(_, c)| *c > 0)
                .map(|((m, e), mult)| TorsionSummand { m, e, mult })
                .collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// Total number of cyclic summands.
    pub fn count(&self) -> u32 {
        self.summands.iter().map(|s| s.mult).sum()
    }

    /// Dimension over the coefficient field: `Σ mult·e·deg φ_m`.
    pub fn field_dimension(&self, ring: CoeffRing) -> u64 {
        self.summands
            .iter()
            .map(|s| {
                s.mult as u64 * s.e as u64 * cyclotomic_in(s.m, ring).degree().unwrap_or(0) as u64
            })
            .sum()
    }

    pub fn merge(&self, other: &CyclotomicTorsion) -> CyclotomicTorsion {
        let mut acc: BTreeMap<(u64, u32), u32> = BTreeMap::new();
        for s in self.summands.iter().chain(&other.summands) {
            *acc.entry((s.m, s.e)).or_default() += s.mult;
        }
        Self::from_counts(acc)
    }

    pub fn filter<F: Fn(&TorsionSummand) -> bool>(&self, f: F) -> CyclotomicTorsion {
        CyclotomicTorsion {
            summands: self.summands.iter().copied().filter(|s| f(s)).collect(),
        }
    }
}

/// Cyclotomic labels that partition the torsion over `ring`: every `m` over
/// `Q`; over `F_p` the `m ≥ 2` prime to `p` together with `m = p`, whose
/// reductions are pairwise coprime.
pub fn admissible_labels(ring: CoeffRing, nmax: u64) -> Vec<u64> {
    match ring {
        CoeffRing::PrimeField(p) => {
            let p = p as u64;
            let mut v: Vec<u64> = (2..=nmax).filter(|m| m % p != 0 || *m == p).collect();
            v.sort_unstable();
            v
        }
        _ => (1..=nmax).collect(),
    }
}

/// Writes a nonunit `d` as `∏ φ_m^{e_m}` by trial division over the
/// admissible labels `m ≤ nmax`.
pub fn factor_into_cyclotomics(d: &Poly, nmax: u64) -> Result<Vec<(u64, u32)>> {
    let ring = d.ring();
    let mut rest = d.laurent_normalize();
    let mut out = Vec::new();
    for m in admissible_labels(ring, nmax) {
        if rest.is_laurent_unit() {
            break;
        }
        let phi = cyclotomic_in(m, ring);
        let mut e = 0;
        while let Ok(q) = rest.exact_div(&phi) {
            rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((m, e));
        }
    }
    if !rest.is_laurent_unit() {
        return Err(Error::UnfactoredResidual {
            residual: rest.to_string(),
        });
    }
    Ok(out)
}
