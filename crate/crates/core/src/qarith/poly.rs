use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::coeff::{Coefficients, Fp, Qq, Zz};
use super::dense;
use super::ring::CoeffRing;
use crate::error::{Error, Result};

/// Dense univariate polynomial in `q` over a [`CoeffRing`].
///
/// Coefficients are stored as rationals; over `Z` and `F_p` they are always
/// integral, and over `F_p` they are the canonical representatives `0..p`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: CoeffRing,
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(ring: CoeffRing, coeffs: Vec<BigRational>) -> Result<Self> {
        let mut coeffs = coeffs;
        match ring {
            CoeffRing::Integers => {
                if coeffs.iter().any(|c| !c.is_integer()) {
                    return Err(Error::Parse("non-integral coefficient over Z".into()));
                }
            }
            CoeffRing::PrimeField(p) => {
                let f = Fp::new(p);
                for c in coeffs.iter_mut() {
                    if !c.is_integer() {
                        return Err(Error::Parse("non-integral coefficient over F_p".into()));
                    }
                    *c = BigRational::from_integer(BigInt::from(f.from_bigint(&c.to_integer())));
                }
            }
            CoeffRing::Rationals => {}
        }
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Ok(Poly { ring, coeffs })
    }

    pub fn from_ints(ring: CoeffRing, coeffs: &[i64]) -> Self {
        Self::from_bigints(ring, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_bigints(ring: CoeffRing, coeffs: Vec<BigInt>) -> Self {
        Self::new(
            ring,
            coeffs.into_iter().map(BigRational::from_integer).collect(),
        )
        .expect("integral coefficients are valid in every ring")
    }

    pub fn zero(ring: CoeffRing) -> Self {
        Poly {
            ring,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ring: CoeffRing) -> Self {
        Self::from_ints(ring, &[1])
    }

    /// The variable `q`.
    pub fn q(ring: CoeffRing) -> Self {
        Self::from_ints(ring, &[0, 1])
    }

    /// `q^k - 1`.
    pub fn q_power_minus_one(ring: CoeffRing, k: usize) -> Self {
        let mut c = vec![0i64; k + 1];
        c[0] -= 1;
        c[k] += 1;
        Self::from_ints(ring, &c)
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// A nonzero constant; over `Z` only `±1` counts.
    pub fn is_unit(&self) -> bool {
        match self.ring {
            CoeffRing::Integers => self.coeffs.len() == 1 && self.coeffs[0].abs().is_one(),
            _ => self.coeffs.len() == 1,
        }
    }

    /// A unit of the Laurent ring `R[q^{±1}]`: a unit times a power of `q`.
    pub fn is_laurent_unit(&self) -> bool {
        let nz: Vec<_> = self.coeffs.iter().filter(|c| !c.is_zero()).collect();
        nz.len() == 1
            && match self.ring {
                CoeffRing::Integers => nz[0].abs().is_one(),
                _ => true,
            }
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Integer coefficients (panics over `Q` when some coefficient is fractional).
    pub fn int_coeffs(&self) -> Vec<BigInt> {
        self.coeffs
            .iter()
            .map(|c| {
                assert!(c.is_integer(), "fractional coefficient");
                c.to_integer()
            })
            .collect()
    }

    pub fn to_fp_vec(&self) -> Vec<u32> {
        let p = self.ring.characteristic();
        assert!(p > 0, "not a prime field polynomial");
        self.int_coeffs()
            .iter()
            .map(|c| c.to_u32().expect("canonical"))
            .collect()
    }

    pub fn from_fp_vec(p: u32, v: &[u32]) -> Self {
        Self::from_bigints(
            CoeffRing::PrimeField(p),
            v.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    pub fn from_q_vec(v: Vec<BigRational>) -> Self {
        Self::new(CoeffRing::Rationals, v).expect("rational coefficients")
    }

    /// Reinterprets an integral polynomial in another ring (reducing mod `p` when needed).
    pub fn change_ring(&self, ring: CoeffRing) -> Self {
        Self::new(ring, self.coeffs.clone()).expect("integral coefficients change ring freely")
    }

    pub fn reduce_mod(&self, p: u32) -> Self {
        self.change_ring(CoeffRing::PrimeField(p))
    }

    /// Value at an integer point, computed in the ring of definition.
    pub fn eval_int(&self, x: i64) -> BigRational {
        let xv = BigRational::from_integer(BigInt::from(x));
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &xv + c;
        }
        if let CoeffRing::PrimeField(p) = self.ring {
            let f = Fp::new(p);
            acc = BigRational::from_integer(BigInt::from(f.from_bigint(&acc.to_integer())));
        }
        acc
    }

    fn same_ring(&self, other: &Poly) {
        assert_eq!(self.ring, other.ring, "ring mismatch");
    }

    fn lift(&self) -> Engine {
        match self.ring {
            CoeffRing::Integers => Engine::Z(self.int_coeffs()),
            CoeffRing::Rationals => Engine::Q(self.coeffs.clone()),
            CoeffRing::PrimeField(p) => Engine::F(Fp::new(p), self.to_fp_vec()),
        }
    }

    fn lower(ring: CoeffRing, e: Engine) -> Self {
        match e {
            Engine::Z(v) => Self::from_bigints(ring, v),
            Engine::Q(v) => Poly {
                ring,
                coeffs: dense::trimmed(&Qq, v),
            },
            Engine::F(f, v) => Self::from_fp_vec(f.modulus(), &v),
        }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self * &Poly::from_ints(self.ring, &[c])
    }

    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        if self.is_zero() {
            return self.clone();
        }
        coeffs.extend(self.coeffs.iter().cloned());
        Poly {
            ring: self.ring,
            coeffs,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one(self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division. Over `Z` the divisor's leading coefficient must be `±1`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.same_ring(d);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = self.ring;
        let (q, r) = match (self.lift(), d.lift()) {
            (Engine::Z(a), Engine::Z(b)) => {
                let lead = b.last().unwrap().clone();
                if !lead.abs().is_one() {
                    return Err(Error::NonMonicDivisor);
                }
                let sign = lead.clone();
                let bm: Vec<BigInt> = b.iter().map(|c| c * &sign).collect();
                let (q, r) = dense::div_rem_monic(&Zz, &a, &bm);
                (
                    Engine::Z(q.iter().map(|c| c * &sign).collect()),
                    Engine::Z(r),
                )
            }
            (Engine::Q(a), Engine::Q(b)) => {
                let (q, r) = dense::div_rem(&Qq, &a, &b);
                (Engine::Q(q), Engine::Q(r))
            }
            (Engine::F(f, a), Engine::F(_, b)) => {
                let (q, r) = dense::div_rem(&f, &a, &b);
                (Engine::F(f, q), Engine::F(f, r))
            }
            _ => unreachable!(),
        };
        Ok((Self::lower(ring, q), Self::lower(ring, r)))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact quotient; [`Error::NonExactDivision`] when a remainder is left.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonExactDivision)
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    /// Monic gcd over a field.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_ring(other);
        let ring = self.ring;
        match (self.lift(), other.lift()) {
            (Engine::Q(a), Engine::Q(b)) => {
                Ok(Self::lower(ring, Engine::Q(dense::gcd(&Qq, &a, &b))))
            }
            (Engine::F(f, a), Engine::F(_, b)) => {
                Ok(Self::lower(ring, Engine::F(f, dense::gcd(&f, &a, &b))))
            }
            _ => Err(Error::NotAField(ring)),
        }
    }

    /// Extended gcd over a field: `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.same_ring(other);
        let ring = self.ring;
        match (self.lift(), other.lift()) {
            (Engine::Q(a), Engine::Q(b)) => {
                let (g, s, t) = dense::ext_gcd(&Qq, &a, &b);
                Ok((
                    Self::lower(ring, Engine::Q(g)),
                    Self::lower(ring, Engine::Q(s)),
                    Self::lower(ring, Engine::Q(t)),
                ))
            }
            (Engine::F(f, a), Engine::F(_, b)) => {
                let (g, s, t) = dense::ext_gcd(&f, &a, &b);
                Ok((
                    Self::lower(ring, Engine::F(f, g)),
                    Self::lower(ring, Engine::F(f, s)),
                    Self::lower(ring, Engine::F(f, t)),
                ))
            }
            _ => Err(Error::NotAField(ring)),
        }
    }

    /// Canonical associate in `R[q^{±1}]`: `q`-power stripped, then monic over a
    /// field or with positive leading coefficient over `Z`.
    pub fn laurent_normalize(&self) -> Poly {
        let v = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        let stripped: Vec<BigRational> = self.coeffs[v.min(self.coeffs.len())..].to_vec();
        let Some(lead) = stripped.last().cloned() else {
            return self.clone();
        };
        let coeffs = match self.ring {
            CoeffRing::Integers => {
                if lead.is_negative() {
                    stripped.iter().map(|c| -c).collect()
                } else {
                    stripped
                }
            }
            CoeffRing::Rationals => stripped.iter().map(|c| c / &lead).collect(),
            CoeffRing::PrimeField(p) => {
                let f = Fp::new(p);
                let v: Vec<u32> = stripped
                    .iter()
                    .map(|c| c.to_integer().to_u32().unwrap())
                    .collect();
                return Self::from_fp_vec(p, &dense::monic(&f, &v));
            }
        };
        Poly {
            ring: self.ring,
            coeffs,
        }
    }

    /// `g`-adic valuation: largest `v` with `g^v | self` (`u32::MAX` for zero).
    pub fn valuation(&self, g: &Poly) -> Result<u32> {
        if self.is_zero() {
            return Ok(u32::MAX);
        }
        let mut v = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.div_rem(g)?;
            if !r.is_zero() {
                return Ok(v);
            }
            cur = q;
            v += 1;
        }
    }

    /// Every coefficient divisible by `p` (integral polynomials only).
    pub fn all_divisible_by(&self, p: u32) -> bool {
        let bp = BigInt::from(p);
        self.int_coeffs().iter().all(|c| (c % &bp).is_zero())
    }

    /// Divides every integer coefficient by `p`, which must be exact.
    pub fn div_int_exact(&self, p: u32) -> Option<Poly> {
        if !self.all_divisible_by(p) {
            return None;
        }
        let bp = BigInt::from(p);
        Some(Self::from_bigints(
            self.ring,
            self.int_coeffs().iter().map(|c| c / &bp).collect(),
        ))
    }
}

enum Engine {
    Z(Vec<BigInt>),
    Q(Vec<BigRational>),
    F(Fp, Vec<u32>),
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.same_ring(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Poly::new(self.ring, c).unwrap()
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.same_ring(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let c = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Poly::new(self.ring, c).unwrap()
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.ring, self.coeffs.iter().map(|c| -c).collect()).unwrap()
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.same_ring(rhs);
        let ring = self.ring;
        let e = match (self.lift(), rhs.lift()) {
            (Engine::Z(a), Engine::Z(b)) => Engine::Z(dense::mul(&Zz, &a, &b)),
            (Engine::Q(a), Engine::Q(b)) => Engine::Q(dense::mul(&Qq, &a, &b)),
            (Engine::F(f, a), Engine::F(_, b)) => Engine::F(f, dense::mul(&f, &a, &b)),
            _ => unreachable!(),
        };
        Poly::lower(ring, e)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({})", self.ring, self)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    ring: CoeffRing,
    coeffs: Vec<String>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            ring: self.ring,
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = PolyRepr::deserialize(d)?;
        let coeffs = r
            .coeffs
            .iter()
            .map(|s| s.parse::<BigRational>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        Poly::new(r.ring, coeffs).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: CoeffRing = CoeffRing::Rationals;

    #[test]
    fn display_and_json() {
        let p = Poly::from_ints(Q, &[1, -1, 2]);
        assert_eq!(p.to_string(), "1 - q + 2q^2");
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(j, r#"{"ring":"q","coeffs":["1","-1","2"]}"#);
        let back: Poly = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn reduction_mod_p() {
        let p = Poly::from_ints(CoeffRing::Integers, &[3, -1, 2]);
        assert_eq!(
            p.reduce_mod(2),
            Poly::from_ints(CoeffRing::PrimeField(2), &[1, 1])
        );
    }

    #[test]
    fn laurent_normalization_strips_q() {
        let p = Poly::from_ints(Q, &[0, 2, 2]);
        assert_eq!(p.laurent_normalize(), Poly::from_ints(Q, &[1, 1]));
        let z = Poly::from_ints(CoeffRing::Integers, &[0, 0, -3, -1]);
        assert_eq!(
            z.laurent_normalize(),
            Poly::from_ints(CoeffRing::Integers, &[3, 1])
        );
    }

    #[test]
    fn division_over_z_requires_unit_leading() {
        let a = Poly::from_ints(CoeffRing::Integers, &[1, 0, 1]);
        let b = Poly::from_ints(CoeffRing::Integers, &[1, 2]);
        assert!(matches!(a.div_rem(&b), Err(Error::NonMonicDivisor)));
        let c = Poly::from_ints(CoeffRing::Integers, &[1, -1]);
        let (q, r) = a.div_rem(&c.laurent_normalize()).unwrap();
        assert_eq!(&(&q * &c.laurent_normalize()) + &r, a);
    }
}
