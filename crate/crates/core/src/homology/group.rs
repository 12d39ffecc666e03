use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exactla::CyclotomicTorsion;
use crate::qarith::CoeffRing;

/// `H_l(Br(n); K[q^{±1}])`: a free part and cyclotomic-power torsion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub n: usize,
    pub l: usize,
    pub coeff: CoeffRing,
    pub free_rank: usize,
    pub torsion: CyclotomicTorsion,
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Dimension over the coefficient field of the torsion part.
    pub fn torsion_dimension(&self) -> u64 {
        self.torsion.field_dimension(self.coeff)
    }
}

#[derive(Serialize, Deserialize)]
struct GroupRepr {
    l: usize,
    free_rank: usize,
    torsion: CyclotomicTorsion,
}

#[derive(Serialize, Deserialize)]
struct DegreeRepr {
    n: usize,
    coeff: CoeffRing,
    groups: Vec<GroupRepr>,
}

/// All homology groups in one degree `n`, indexed by `l = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeHomology {
    pub n: usize,
    pub coeff: CoeffRing,
    pub groups: Vec<HomologyGroup>,
}

impl DegreeHomology {
    pub fn group(&self, l: usize) -> Option<&HomologyGroup> {
        self.groups.get(l)
    }

    pub fn to_json(&self) -> String {
        let repr = DegreeRepr {
            n: self.n,
            coeff: self.coeff,
            groups: self
                .groups
                .iter()
                .map(|g| GroupRepr {
                    l: g.l,
                    free_rank: g.free_rank,
                    torsion: g.torsion.clone(),
                })
                .collect(),
        };
        serde_json::to_string(&repr).expect("serializable")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        let r: DegreeRepr = serde_json::from_str(s)?;
        Ok(DegreeHomology {
            n: r.n,
            coeff: r.coeff,
            groups: r
                .groups
                .into_iter()
                .map(|g| HomologyGroup {
                    n: r.n,
                    l: g.l,
                    coeff: r.coeff,
                    free_rank: g.free_rank,
                    torsion: g.torsion,
                })
                .collect(),
        })
    }
}

/// Homology over one coefficient field for `0 ≤ l ≤ n ≤ nmax`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyTable {
    pub coeff: CoeffRing,
    pub nmax: usize,
    pub degrees: BTreeMap<usize, DegreeHomology>,
}

impl HomologyTable {
    pub fn get(&self, n: usize, l: usize) -> Option<&HomologyGroup> {
        self.degrees.get(&n).and_then(|d| d.group(l))
    }

    /// Field dimension of the whole group (free parts count as infinite and panic).
    pub fn dimension(&self, n: usize, l: usize) -> u64 {
        let g = self.get(n, l).expect("cell computed");
        assert_eq!(g.free_rank, 0, "free part has infinite dimension");
        g.torsion_dimension()
    }
}

/// One cell of the integral table: `Z^free_rank ⊕ ⊕_p Z_p^mult`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegralGroup {
    #[serde(skip)]
    pub n: usize,
    pub l: usize,
    pub free_rank: u64,
    pub torsion: Vec<PrimeTorsion>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeTorsion {
    pub p: u32,
    pub mult: u64,
}

impl IntegralGroup {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }
}

#[derive(Serialize, Deserialize)]
struct IntegralRepr {
    n: usize,
    coeff: CoeffRing,
    groups: Vec<IntegralGroup>,
}

pub fn integral_to_json(n: usize, groups: &[IntegralGroup]) -> String {
    serde_json::to_string(&IntegralRepr {
        n,
        coeff: CoeffRing::Integers,
        groups: groups.to_vec(),
    })
    .expect("serializable")
}

pub fn integral_from_json(s: &str) -> serde_json::Result<(usize, Vec<IntegralGroup>)> {
    let r: IntegralRepr = serde_json::from_str(s)?;
    let n = r.n;
    Ok((
        n,
        r.groups
            .into_iter()
            .map(|g| IntegralGroup { n, ..g })
            .collect(),
    ))
}
