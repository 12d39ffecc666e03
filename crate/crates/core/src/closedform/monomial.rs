use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qarith::{CoeffRing, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    X,
    Y,
}

/// How large an exponent a symbol may carry in the presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExponentCap {
    Polynomial,
    /// `x² = 0`.
    Exterior,
    /// Appears only through squares `x²` or as a single factor of a generator.
    SquaredOnly,
}

/// `x_i` or `y_i`, of degree `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorSymbol {
    pub kind: Kind,
    pub index: u32,
    pub cap: ExponentCap,
}

impl GeneratorSymbol {
    pub fn new(coeff: CoeffRing, kind: Kind, index: u32) -> Self {
        let cap = match (coeff, kind) {
            (_, Kind::Y) => ExponentCap::Polynomial,
            (_, Kind::X) if index == 1 => ExponentCap::Polynomial,
            (CoeffRing::PrimeField(2), Kind::X) => ExponentCap::SquaredOnly,
            (_, Kind::X) => ExponentCap::Exterior,
        };
        GeneratorSymbol { kind, index, cap }
    }

    pub fn degree(&self) -> u32 {
        self.index
    }

    pub fn dimension(&self) -> u32 {
        match self.kind {
            Kind::X => self.index - 1,
            Kind::Y => self.index - 2,
        }
    }
}

/// A product of symbols, keyed by `(kind, index)` with positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Factors(pub BTreeMap<(Kind, u32), u32>);

impl Factors {
    pub fn one() -> Self {
        Factors::default()
    }

    pub fn x(i: u32, e: u32) -> Self {
        Factors(BTreeMap::from([((Kind::X, i), e)]))
    }

    pub fn y(i: u32, e: u32) -> Self {
        Factors(BTreeMap::from([((Kind::Y, i), e)]))
    }

    pub fn exponent(&self, kind: Kind, i: u32) -> u32 {
        self.0.get(&(kind, i)).copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Factors) -> Factors {
        let mut out = self.0.clone();
        for (k, e) in &other.0 {
            *out.entry(*k).or_default() += e;
        }
        Factors(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Factors) -> Option<Factors> {
        let mut out = self.0.clone();
        for (k, e) in &other.0 {
            let cur = out.get_mut(k)?;
            if *cur < *e {
                return None;
            }
            *cur -= e;
            if *cur == 0 {
                out.remove(k);
            }
        }
        Some(Factors(out))
    }

    pub fn divides(&self, other: &Factors) -> bool {
        other.div(self).is_some()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|((_, i), e)| i * e).sum()
    }

    pub fn dimension(&self) -> u32 {
        self.0
            .iter()
            .map(|((k, i), e)| {
                let d = match k {
                    Kind::X => i - 1,
                    Kind::Y => i - 2,
                };
                d * e
            })
            .sum()
    }
}

impl fmt::Display for Factors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|((k, i), e)| {
                let s = match k {
                    Kind::X => 'x',
                    Kind::Y => 'y',
                };
                if *e == 1 {
                    format!("{s}{i}")
                } else {
                    format!("{s}{i}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl FromStr for Factors {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Factors::one());
        }
        let bad = || Error::Parse(format!("bad monomial {s:?}"));
        let mut out = Factors::one();
        for part in s.split('*') {
            let part = part.trim();
            let kind = match part.chars().next() {
                Some('x') => Kind::X,
                Some('y') => Kind::Y,
                _ => return Err(bad()),
            };
            let (idx, e) = match part[1..].split_once('^') {
                Some((i, e)) => (i, e.parse::<u32>().map_err(|_| bad())?),
                None => (&part[1..], 1),
            };
            let i: u32 = idx.parse().map_err(|_| bad())?;
            if i == 0 || (kind == Kind::Y && i < 2) || e == 0 {
                return Err(bad());
            }
            out = out.mul(&Factors(BTreeMap::from([((kind, i), e)])));
        }
        Ok(out)
    }
}

/// A basis element of the closed-form presentation together with its
/// annihilator (`None` for a free generator).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: CoeffRing,
    pub factors: Factors,
    pub annihilator: Option<Poly>,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.factors.degree()
    }

    pub fn dimension(&self) -> u32 {
        self.factors.dimension()
    }

    pub fn symbols(&self) -> Vec<(GeneratorSymbol, u32)> {
        self.factors
            .0
            .iter()
            .map(|((k, i), e)| (GeneratorSymbol::new(self.coeff, *k, *i), *e))
            .collect()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_form_round_trips() {
        for s in ["y6", "x1^2*x6", "x2^2*x8", "x6*y3", "1"] {
            let m: Factors = s.parse().unwrap();
            assert_eq!(m.to_string(), s);
        }
        assert!("z3".parse::<Factors>().is_err());
        assert!("y1".parse::<Factors>().is_err());
    }

    #[test]
    fn degree_and_dimension() {
        let m: Factors = "x1^2*x6".parse().unwrap();
        assert_eq!((m.degree(), m.dimension()), (8, 5));
        let y: Factors = "y6".parse().unwrap();
        assert_eq!((y.degree(), y.dimension()), (6, 4));
    }
}
