use std::collections::HashMap;

use super::composition::{enumerate_compositions, Composition};
use crate::qarith::{CoeffRing, Poly};

/// A cochain of degree `n` and dimension `k`: values on the compositions of
/// `n` into `k` parts, in lexicographic order.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain {
    pub n: usize,
    pub k: usize,
    pub ring: CoeffRing,
    pub values: Vec<Poly>,
}

impl Cochain {
    pub fn new(n: usize, k: usize, ring: CoeffRing, values: Vec<Poly>) -> Self {
        assert_eq!(
            values.len(),
            enumerate_compositions(n, k).len(),
            "wrong basis size"
        );
        Cochain { n, k, ring, values }
    }

    /// The unit in degree 0.
    pub fn unit(ring: CoeffRing) -> Self {
        Cochain {
            n: 0,
            k: 0,
            ring,
            values: vec![Poly::one(ring)],
        }
    }

    /// Dual basis element of `c`.
    pub fn dual(c: &Composition, ring: CoeffRing) -> Self {
        let basis = enumerate_compositions(c.n(), c.k());
        let values = basis
            .iter()
            .map(|b| {
                if b == c {
                    Poly::one(ring)
                } else {
                    Poly::zero(ring)
                }
            })
            .collect();
        Cochain {
            n: c.n(),
            k: c.k(),
            ring,
            values,
        }
    }
}

/// Juxtaposition product: on `(i_1..i_{k1+k2})` the value is `c1(prefix)·c2(suffix)`
/// when the prefix has degree `n1`, and zero otherwise.
pub fn concat_product(c1: &Cochain, c2: &Cochain) -> Cochain {
    assert_eq!(c1.ring, c2.ring, "ring mismatch");
    let ring = c1.ring;
    let idx = |n: usize, k: usize| -> HashMap<Composition, usize> {
        enumerate_compositions(n, k)
            .into_iter()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect()
    };
    let i1 = idx(c1.n, c1.k);
    let i2 = idx(c2.n, c2.k);
    let basis = enumerate_compositions(c1.n + c2.n, c1.k + c2.k);
    let values = basis
        .iter()
        .map(|c| {
            let pre = Composition {
                parts: c.parts[..c1.k].to_vec(),
            };
            let suf = Composition {
                parts: c.parts[c1.k..].to_vec(),
            };
            match (i1.get(&pre), i2.get(&suf)) {
                (Some(&a), Some(&b)) => &c1.values[a] * &c2.values[b],
                _ => Poly::zero(ring),
            }
        })
        .collect();
    Cochain {
        n: c1.n + c2.n,
        k: c1.k + c2.k,
        ring,
        values,
    }
}
