//! Computational checks of the cyclotomic lemmas: gcd classification of
//! `φ_m, φ_n` modulo primes, the mod-`p` congruences, the `ω/ψ` splitting
//! and the q-Lucas unit predicate.

use serde::{Deserialize, Serialize};

use super::coeff::Fp;
use super::cyclotomic::{cyclotomic, cyclotomic_in};
use super::dense;
use super::poly::Poly;
use super::qnum::q_binomial;
use super::ring::{euler_phi, is_prime, primes_up_to, split_prime_power, CoeffRing};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GcdClassification {
    Unit,
    SharedModP(u32),
}

/// The prime `p` with `n = m·p^i`, `i ≥ 1`, if there is one.
pub fn predicted_shared_prime(m: u64, n: u64) -> Option<u32> {
    if n <= m || n % m != 0 {
        return None;
    }
    let r = n / m;
    let p = (2..=r).find(|d| r % d == 0)?;
    let (rest, _) = split_prime_power(r, p);
    (rest == 1).then_some(p as u32)
}

/// Classifies `gcd(φ_m, φ_n)` and cross-checks the answer by computing the
/// gcd over `Q` and modulo every prime `p ≤ n`.
pub fn verify_cyclotomic_gcd(m: u64, n: u64) -> Result<GcdClassification> {
    if m < 2 || m >= n {
        return Err(Error::InvalidArgument(format!(
            "need 2 <= m < n, got ({m}, {n})"
        )));
    }
    let mismatch = |detail: String| Error::ClassificationMismatch { m, n, detail };
    let predicted = predicted_shared_prime(m, n);

    let q = CoeffRing::Rationals;
    if !cyclotomic_in(m, q).gcd(&cyclotomic_in(n, q))?.is_one() {
        return Err(mismatch("nontrivial gcd over Q".into()));
    }
    for p in primes_up_to(n) {
        let f = CoeffRing::PrimeField(p as u32);
        let shared = !cyclotomic_in(m, f).gcd(&cyclotomic_in(n, f))?.is_one();
        if shared != (predicted == Some(p as u32)) {
            return Err(mismatch(format!("mod {p}: shared factor = {shared}")));
        }
    }
    Ok(match predicted {
        Some(p) => GcdClassification::SharedModP(p),
        None => GcdClassification::Unit,
    })
}

/// `φ_{m p^i} ≡ φ_m^{φ(p^i)} (mod p)`; for `m = 1` also `φ_{p^i} ≡ φ_p^{p^{i-1}}`.
pub fn verify_congruence(m: u64, p: u32, i: u32) -> bool {
    if !is_prime(p as u64) || m == 0 || m % p as u64 == 0 || i == 0 {
        return false;
    }
    let f = CoeffRing::PrimeField(p);
    let pi = (p as u64).pow(i);
    let lhs = cyclotomic_in(m * pi, f);
    let general = lhs == cyclotomic_in(m, f).pow(euler_phi(pi) as u32);
    if m == 1 {
        general && lhs == cyclotomic_in(p as u64, f).pow((p as u64).pow(i - 1) as u32)
    } else {
        general
    }
}

/// Euclidean division `φ_{m p^j} = φ_{m p^i}·ω + p·ψ` over `Z`.
///
/// `i = 0` is accepted for `m = 1` as well, with `φ_1 = q - 1` as divisor.
pub fn split_phi(m: u64, i: u32, j: u32, p: u32) -> Result<(Poly, Poly)> {
    if !is_prime(p as u64) || m == 0 || m % p as u64 == 0 || i >= j {
        return Err(Error::InvalidArgument(format!(
            "split_phi({m}, {i}, {j}, {p})"
        )));
    }
    let small_idx = m * (p as u64).pow(i);
    let big_idx = m * (p as u64).pow(j);
    let (omega, r) = cyclotomic(big_idx).div_rem(&cyclotomic(small_idx))?;
    let psi = r.div_int_exact(p).ok_or(Error::RemainderNotDivisibleByP {
        big: big_idx,
        small: small_idx,
        p,
    })?;
    Ok((omega, psi))
}

/// `gcd(ψ mod p, φ_{m p^i} mod p) = 1` for the `ψ` of [`split_phi`].
pub fn split_phi_coprime(m: u64, i: u32, j: u32, p: u32) -> Result<bool> {
    let (_, psi) = split_phi(m, i, j, p)?;
    let f = CoeffRing::PrimeField(p);
    let small = cyclotomic_in(m * (p as u64).pow(i), f);
    Ok(psi.change_ring(f).gcd(&small)?.is_one())
}

fn no_carry(mut a: usize, mut b: usize, p: usize) -> bool {
    while a > 0 || b > 0 {
        if a % p + b % p >= p {
            return false;
        }
        a /= p;
        b /= p;
    }
    true
}

/// Digit-wise prediction that `[i+j choose i]` is prime to `φ_m` modulo `p`
/// (`m = 1` standing for `φ_p`).
pub fn qlucas_predicts_unit(i: usize, j: usize, p: u32, m: usize) -> bool {
    let p = p as usize;
    if m == 1 {
        return no_carry(i, j, p);
    }
    i % m + j % m < m && no_carry(i / m, j / m, p)
}

/// Direct test: `φ` (as in [`qlucas_predicts_unit`]) does not divide the
/// q-binomial in `F_p[q]`.
pub fn qlucas_direct(i: usize, j: usize, p: u32, m: usize) -> Result<bool> {
    let f = CoeffRing::PrimeField(p);
    let phi = cyclotomic_in(if m == 1 { p as u64 } else { m as u64 }, f);
    Ok(!phi.divides(&q_binomial(i + j, i, f)?))
}

/// [`qlucas_direct`] for every `i + j ≤ smax` at once: `table[s][i]` covers
/// `(i, s - i)`. Rows come from the q-Pascal rule in `F_p[q]`.
pub fn qlucas_direct_table(smax: usize, p: u32, m: usize) -> Result<Vec<Vec<bool>>> {
    let f = CoeffRing::prime_field(p)?;
    let fp = Fp::new(p);
    let phi = cyclotomic_in(if m == 1 { p as u64 } else { m as u64 }, f).to_fp_vec();
    let mut row: Vec<Vec<u32>> = vec![vec![1]];
    let mut table = vec![vec![!dense::divides(&fp, &phi, &row[0])]];
    for s in 1..=smax {
        let mut next = Vec::with_capacity(s + 1);
        for i in 0..=s {
            let left = if i > 0 {
                row[i - 1].clone()
            } else {
                Vec::new()
            };
            let right = if i < s {
                dense::shift(&fp, &row[i], i)
            } else {
                Vec::new()
            };
            next.push(dense::add(&fp, &left, &right));
        }
        table.push(next.iter().map(|b| !dense::divides(&fp, &phi, b)).collect());
        row = next;
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_examples() {
        assert_eq!(
            verify_cyclotomic_gcd(2, 4).unwrap(),
            GcdClassification::SharedModP(2)
        );
        assert_eq!(
            verify_cyclotomic_gcd(2, 3).unwrap(),
            GcdClassification::Unit
        );
        assert_eq!(
            verify_cyclotomic_gcd(3, 9).unwrap(),
            GcdClassification::SharedModP(3)
        );
        assert_eq!(
            verify_cyclotomic_gcd(4, 6).unwrap(),
            GcdClassification::Unit
        );
        assert!(verify_cyclotomic_gcd(3, 3).is_err());
    }

    #[test]
    fn congruence_examples() {
        assert!(verify_congruence(1, 2, 2));
        assert!(verify_congruence(3, 2, 1));
        assert!(verify_congruence(5, 2, 1));
        assert!(!verify_congruence(2, 2, 1));
    }

    #[test]
    fn split_examples() {
        let z = CoeffRing::Integers;
        let (w, psi) = split_phi(1, 1, 2, 2).unwrap();
        assert_eq!(w, Poly::from_ints(z, &[-1, 1]));
        assert!(psi.is_one());
        for (m, i, j, p) in [(1, 1, 2, 3), (3, 0, 1, 2), (1, 0, 2, 5)] {
            let (w, psi) = split_phi(m, i, j, p).unwrap();
            let small = cyclotomic(m * (p as u64).pow(i));
            let big = cyclotomic(m * (p as u64).pow(j));
            assert_eq!(&(&small * &w) + &psi.scale_int(p as i64), big);
            assert!(split_phi_coprime(m, i, j, p).unwrap());
        }
    }

    #[test]
    fn qlucas_examples() {
        assert!(!qlucas_predicts_unit(1, 1, 2, 1));
        assert!(qlucas_predicts_unit(2, 1, 2, 1));
        assert!(qlucas_predicts_unit(0, 5, 3, 1));
        assert!(!qlucas_direct(1, 1, 2, 1).unwrap());
        assert!(qlucas_direct(2, 1, 2, 1).unwrap());
    }

    #[test]
    fn pascal_table_matches_single_cells() {
        for (p, m) in [(2, 1), (2, 3), (3, 1), (3, 5), (5, 3)] {
            let t = qlucas_direct_table(10, p, m).unwrap();
            for s in 0..=10 {
                for i in 0..=s {
                    assert_eq!(
                        t[s][i],
                        qlucas_direct(i, s - i, p, m).unwrap(),
                        "p={p} m={m} ({i},{})",
                        s - i
                    );
                }
            }
        }
    }
}
