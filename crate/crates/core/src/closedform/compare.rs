use std::collections::BTreeMap;

use super::presentation::Presentation;
use crate::error::Result;
use crate::exactla::{factor_into_cyclotomics, CyclotomicTorsion};
use crate::homology::{HomologyGroup, HomologyTable};
use crate::qarith::CoeffRing;

/// The homology predicted by the closed form in degree `n`.
pub fn oracle_torsion(coeff: CoeffRing, n: u32) -> Result<Vec<HomologyGroup>> {
    let pres = Presentation::new(coeff, n)?;
    let mut free = vec![0usize; n as usize + 1];
    let mut pairs: Vec<Vec<(u64, u32)>> = vec![Vec::new(); n as usize + 1];
    for m in pres.monomials_of_degree(n)? {
        let l = m.dimension() as usize;
        match &m.annihilator {
            None => free[l] += 1,
            Some(a) => pairs[l].extend(factor_into_cyclotomics(a, n.max(1) as u64)?),
        }
    }
    Ok((0..=n as usize)
        .map(|l| HomologyGroup {
            n: n as usize,
            l,
            coeff,
            free_rank: free[l],
            torsion: CyclotomicTorsion::from_pairs(std::mem::take(&mut pairs[l])),
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub n: usize,
    pub l: usize,
    pub oracle: HomologyGroup,
    pub direct: Option<HomologyGroup>,
}

#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub coeff: CoeffRing,
    pub nmax: usize,
    pub cells_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl ComparisonReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Cell-by-cell comparison of the closed form with a directly computed table.
pub fn compare_with_direct(
    coeff: CoeffRing,
    nmax: usize,
    direct: &HomologyTable,
) -> Result<ComparisonReport> {
    let mut mismatches = Vec::new();
    let mut cells = 0;
    let oracle: BTreeMap<usize, Vec<HomologyGroup>> = (0..=nmax)
        .map(|n| oracle_torsion(coeff, n as u32).map(|g| (n, g)))
        .collect::<Result<_>>()?;
    for (n, groups) in oracle {
        for g in groups {
            cells += 1;
            let d = direct.get(n, g.l);
            if d != Some(&g) {
                mismatches.push(Mismatch {
                    n,
                    l: g.l,
                    oracle: g,
                    direct: d.cloned(),
                });
            }
        }
    }
    Ok(ComparisonReport {
        coeff,
        nmax,
        cells_checked: cells,
        mismatches,
    })
}
