//! Factorial rescaling of the standard complex.
//!
//! With `D_k = diag(∏_j [i_j]!)` on the composition basis of `C_k`, the
//! boundary satisfies `∂_k · D_k = D_{k-1} · B_k`, where `B_k` has the same
//! support as `∂_k` and entries `±1`. Once every `[i]!` with `i ≤ n` is
//! inverted the complex is isomorphic to `(C, B)`, and locally at a prime
//! `π` the boundary is `diag(π^{v(D_{k-1})})·B_k·diag(π^{-v(D_k)})` up to units.

use std::collections::HashMap;

use super::composition::{enumerate_compositions, Composition};
use crate::exactla::SparseMatrix;
use crate::qarith::{q_binomial, q_factorial, split_prime_power, CoeffRing, Poly};

/// Sign matrix `B_k`: entry `(-1)^j` (0-based merge position `j`) in the row of the merged composition.
pub fn sign_matrix(n: usize, k: usize) -> SparseMatrix<i64> {
    assert!(
        n >= 1 && (1..=n).contains(&k),
        "sign_matrix needs 1 <= k <= n"
    );
    let src = enumerate_compositions(n, k);
    let dst = enumerate_compositions(n, k - 1);
    let index: HashMap<&Composition, usize> = dst.iter().enumerate().map(|(i, c)| (c, i)).collect();
    let mut entries = Vec::new();
    for (col, c) in src.iter().enumerate() {
        for j in 0..k.saturating_sub(1) {
            entries.push((index[&c.merge(j)], col, if j % 2 == 0 { 1 } else { -1 }));
        }
    }
    SparseMatrix::new(dst.len(), src.len(), entries)
}

/// `∏_j [i_j]!` for a composition.
pub fn factorial_weight(c: &Composition, ring: CoeffRing) -> Poly {
    c.parts.iter().fold(Poly::one(ring), |acc, &i| {
        &acc * &q_factorial(i as usize, ring)
    })
}

/// Exactly checks `∂_k(r, c) · D_k[c] = D_{k-1}[r] · B_k(r, c)` for all `k`.
pub fn verify_factorial_scaling(n: usize, ring: CoeffRing) -> bool {
    for k in 1..=n {
        let src = enumerate_compositions(n, k);
        let dst = enumerate_compositions(n, k - 1);
        let wsrc: Vec<Poly> = src.iter().map(|c| factorial_weight(c, ring)).collect();
        let wdst: Vec<Poly> = dst.iter().map(|c| factorial_weight(c, ring)).collect();
        let index: HashMap<&Composition, usize> =
            dst.iter().enumerate().map(|(i, c)| (c, i)).collect();
        for (col, c) in src.iter().enumerate() {
            for j in 0..k - 1 {
                let row = index[&c.merge(j)];
                let (a, b) = (c.parts[j] as usize, c.parts[j + 1] as usize);
                let mut entry = q_binomial(a + b, a, ring).expect("a <= a + b");
                let mut sign = Poly::one(ring);
                if j % 2 == 1 {
                    entry = -&entry;
                    sign = -&sign;
                }
                if &entry * &wsrc[col] != &wdst[row] * &sign {
                    return false;
                }
            }
        }
    }
    true
}

/// A prime of `K[q]` dividing some `[i]!`, named by its cyclotomic label.
///
/// Over `Q` this is `φ_m` itself. Over `F_p` with `p ∤ m` it is any
/// irreducible factor of the squarefree reduction `φ_m mod p`; for `m = p`
/// it is `q - 1`, and `φ_p ≡ (q-1)^{p-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LocalPrime {
    pub ring: CoeffRing,
    pub m: u64,
}

impl LocalPrime {
    /// Valuation of the q-integer `[a]` at this prime.
    pub fn val_q_integer(&self, a: u64) -> i64 {
        if a == 0 {
            panic!("[0] = 0 has infinite valuation");
        }
        match self.ring {
            CoeffRing::PrimeField(p) => {
                let p = p as u64;
                if self.m == p {
                    let (_, e) = split_prime_power(a, p);
                    p.pow(e) as i64 - 1
                } else if a % self.m == 0 {
                    let (_, e) = split_prime_power(a / self.m, p);
                    p.pow(e) as i64
                } else {
                    0
                }
            }
            _ => (self.m >= 2 && a % self.m == 0) as i64,
        }
    }

    pub fn val_q_factorial(&self, a: u64) -> i64 {
        (2..=a).map(|b| self.val_q_integer(b)).sum()
    }

    /// Valuation of `∏_j [i_j]!`.
    pub fn val_weight(&self, c: &Composition) -> i64 {
        c.parts
            .iter()
            .map(|&i| self.val_q_factorial(i as u64))
            .sum()
    }

    /// Exponent of the prime in `φ_m`: `p - 1` for `m = p` over `F_p`, else 1.
    pub fn exponent_in_label(&self) -> i64 {
        match self.ring {
            CoeffRing::PrimeField(p) if self.m == p as u64 => p as i64 - 1,
            _ => 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::cyclotomic_in;

    #[test]
    fn scaling_identity_small() {
        for n in 1..=6 {
            assert!(verify_factorial_scaling(n, CoeffRing::Integers));
        }
    }

    #[test]
    fn valuations_match_trial_division() {
        for ring in [
            CoeffRing::Rationals,
            CoeffRing::PrimeField(2),
            CoeffRing::PrimeField(3),
        ] {
            for m in 2..=9u64 {
                let lp = LocalPrime { ring, m };
                let p = ring.characteristic() as u64;
                if p > 0 && m % p == 0 && m != p {
                    continue;
                }
                let g = if p > 0 && m == p {
                    Poly::from_ints(ring, &[-1, 1])
                } else {
                    // Any irreducible factor; the valuation is the same for all of them.
                    smallest_factor(&cyclotomic_in(m, ring))
                };
                for a in 1..=24u64 {
                    let v = crate::qarith::q_integer(a as usize, ring)
                        .valuation(&g)
                        .unwrap();
                    assert_eq!(v as i64, lp.val_q_integer(a), "ring {ring} m {m} a {a}");
                }
            }
        }
    }

    fn smallest_factor(f: &Poly) -> Poly {
        // Brute force over monic polynomials of small degree in F_p; over Q cyclotomics are irreducible.
        let ring = f.ring();
        let p = ring.characteristic();
        if p == 0 {
            return f.clone();
        }
        let deg = f.degree().unwrap();
        for d in 1..deg {
            let count = (p as u64).pow(d as u32);
            for code in 0..count {
                let mut c = Vec::with_capacity(d + 1);
                let mut x = code;
                for _ in 0..d {
                    c.push((x % p as u64) as i64);
                    x /= p as u64;
                }
                c.push(1);
                let g = Poly::from_ints(ring, &c);
                if g.divides(f) {
                    return g;
                }
            }
        }
        f.clone()
    }
}
