use std::fmt;

use serde::{Deserialize, Serialize};

/// Ordered tuple of positive parts; indexes the basis monomial `t_{i1}⊗…⊗t_{ik}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    pub parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        Composition { parts }
    }

    pub fn n(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// Merge of the adjacent parts `j, j+1` (0-based `j`).
    pub fn merge(&self, j: usize) -> Composition {
        let mut parts = Vec::with_capacity(self.parts.len() - 1);
        parts.extend_from_slice(&self.parts[..j]);
        parts.push(self.parts[j] + self.parts[j + 1]);
        parts.extend_from_slice(&self.parts[j + 2..]);
        Composition { parts }
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Compositions of `n` into `k` parts in lexicographic order.
pub fn enumerate_compositions(n: usize, k: usize) -> Vec<Composition> {
    fn rec(rem: usize, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if k == 0 {
            if rem == 0 {
                out.push(Composition { parts: cur.clone() });
            }
            return;
        }
        if rem < k {
            return;
        }
        for first in 1..=rem - (k - 1) {
            cur.push(first as u32);
            rec(rem - first, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn counts_are_binomial() {
        for n in 1..=10 {
            for k in 1..=n {
                assert_eq!(
                    enumerate_compositions(n, k).len(),
                    binomial(n - 1, k - 1),
                    "n={n} k={k}"
                );
            }
        }
        assert_eq!(enumerate_compositions(0, 0).len(), 1);
        assert!(enumerate_compositions(3, 0).is_empty());
    }

    #[test]
    fn lexicographic_order() {
        let c = enumerate_compositions(4, 2);
        let parts: Vec<Vec<u32>> = c.iter().map(|c| c.parts.clone()).collect();
        assert_eq!(parts, vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert!(enumerate_compositions(7, 3).windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn merge_adjacent_parts() {
        let c = Composition::new(vec![1, 2, 3]);
        assert_eq!(c.merge(0).parts, vec![3, 3]);
        assert_eq!(c.merge(1).parts, vec![1, 5]);
        assert_eq!(c.to_string(), "(1,2,3)");
    }
}
