use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient ring of a polynomial: the integers, the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum CoeffRing {
    Integers,
    Rationals,
    PrimeField(u32),
}

impl CoeffRing {
    /// Builds `F_p`, rejecting composite moduli.
    pub fn prime_field(p: u32) -> Result<Self> {
        if is_prime(p as u64) {
            Ok(CoeffRing::PrimeField(p))
        } else {
            Err(Error::NotPrime(p as u64))
        }
    }

    pub fn characteristic(&self) -> u32 {
        match self {
            CoeffRing::PrimeField(p) => *p,
            _ => 0,
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, CoeffRing::Integers)
    }

    /// Short tag used in file names and JSON (`z`, `q`, `fp:3`).
    pub fn tag(&self) -> String {
        match self {
            CoeffRing::Integers => "z".to_string(),
            CoeffRing::Rationals => "q".to_string(),
            CoeffRing::PrimeField(p) => format!("fp:{p}"),
        }
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.tag())
    }
}

impl FromStr for CoeffRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        match s.as_str() {
            "z" | "integers" => Ok(CoeffRing::Integers),
            "q" | "rationals" => Ok(CoeffRing::Rationals),
            _ => {
                let p = s
                    .strip_prefix("fp:")
                    .or_else(|| s.strip_prefix('f'))
                    .ok_or_else(|| Error::Parse(format!("unknown coefficient ring `{s}`")))?;
                let p: u32 = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad prime in `{s}`")))?;
                CoeffRing::prime_field(p)
            }
        }
    }
}

impl From<CoeffRing> for String {
    fn from(r: CoeffRing) -> String {
        r.tag()
    }
}

impl TryFrom<String> for CoeffRing {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Deterministic trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes `p <= n` in increasing order.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

/// Euler's totient.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Writes `n = m * p^i` with `p ∤ m`, returning `(m, i)`.
pub fn split_prime_power(mut n: u64, p: u64) -> (u64, u32) {
    let mut i = 0;
    while n % p == 0 {
        n /= p;
        i += 1;
    }
    (n, i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_tags() {
        assert_eq!("q".parse::<CoeffRing>().unwrap(), CoeffRing::Rationals);
        assert_eq!(
            "fp:3".parse::<CoeffRing>().unwrap(),
            CoeffRing::PrimeField(3)
        );
        assert_eq!("z".parse::<CoeffRing>().unwrap(), CoeffRing::Integers);
        assert!("fp:4".parse::<CoeffRing>().is_err());
        assert!("x".parse::<CoeffRing>().is_err());
    }

    #[test]
    fn totient_and_primes() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(9), 6);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(primes_up_to(12), vec![2, 3, 5, 7, 11]);
        assert_eq!(split_prime_power(24, 2), (3, 3));
    }
}
