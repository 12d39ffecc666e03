use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::poly::Poly;
use super::ring::CoeffRing;

fn memo() -> &'static RwLock<HashMap<u64, Poly>> {
    static MEMO: OnceLock<RwLock<HashMap<u64, Poly>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The cyclotomic polynomial `φ_m` over `Z`, from `q^m - 1 = ∏_{d|m} φ_d`.
///
/// Entries are filled idempotently: concurrent callers may race on a key
/// but always insert the same value.
pub fn cyclotomic(m: u64) -> Poly {
    assert!(m >= 1, "cyclotomic index must be positive");
    if let Some(p) = memo().read().unwrap().get(&m) {
        return p.clone();
    }
    let z = CoeffRing::Integers;
    let mut acc = Poly::q_power_minus_one(z, m as usize);
    for d in 1..m {
        if m % d == 0 {
            acc = acc.exact_div(&cyclotomic(d)).expect("φ_d divides q^m - 1");
        }
    }
    memo()
        .write()
        .unwrap()
        .entry(m)
        .or_insert_with(|| acc.clone());
    acc
}

/// `φ_m` reduced into `ring`.
pub fn cyclotomic_in(m: u64, ring: CoeffRing) -> Poly {
    cyclotomic(m).change_ring(ring)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: CoeffRing = CoeffRing::Integers;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), Poly::from_ints(Z, &[-1, 1]));
        assert_eq!(cyclotomic(2), Poly::from_ints(Z, &[1, 1]));
        assert_eq!(cyclotomic(6), Poly::from_ints(Z, &[1, -1, 1]));
        assert_eq!(cyclotomic(12), Poly::from_ints(Z, &[1, 0, -1, 0, 1]));
    }

    #[test]
    fn product_formula() {
        for m in 1..=60u64 {
            let prod = (1..=m)
                .filter(|d| m % d == 0)
                .fold(Poly::one(Z), |acc, d| &acc * &cyclotomic(d));
            assert_eq!(prod, Poly::q_power_minus_one(Z, m as usize));
        }
    }
}
