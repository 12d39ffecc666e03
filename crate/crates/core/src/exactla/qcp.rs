use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::domain::EuclideanDomain;
use crate::qarith::coeff::Qq;
use crate::qarith::dense;

/// Element of `Q[q]` stored as `content · prim`, where `prim` is a primitive
/// integer polynomial with positive leading coefficient and `content` is a
/// nonzero rational (zero is the empty `prim`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CpPoly {
    pub content: BigRational,
    pub prim: Vec<BigInt>,
}

impl CpPoly {
    pub fn zero() -> Self {
        CpPoly {
            content: BigRational::one(),
            prim: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.prim.is_empty()
    }

    /// From integer coefficients (trailing zeros allowed).
    pub fn from_ints(mut v: Vec<BigInt>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        Self::from_scaled(BigRational::one(), v)
    }

    pub fn from_rationals(v: &[BigRational]) -> Self {
        let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = v
            .iter()
            .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
            .collect();
        let mut out = Self::from_ints(ints);
        out.content /= BigRational::from_integer(den);
        out
    }

    pub fn to_rationals(&self) -> Vec<BigRational> {
        self.prim
            .iter()
            .map(|c| &self.content * BigRational::from_integer(c.clone()))
            .collect()
    }

    fn from_scaled(content: BigRational, mut v: Vec<BigInt>) -> Self {
        if v.is_empty() {
            return Self::zero();
        }
        let mut g = BigInt::zero();
        for c in &v {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if v.last().unwrap().is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for c in v.iter_mut() {
                *c /= &g;
            }
        }
        CpPoly {
            content: content * BigRational::from_integer(g),
            prim: v,
        }
    }

    fn degree(&self) -> usize {
        self.prim.len().saturating_sub(1)
    }
}

fn int_lin(a: &[BigInt], ca: &BigInt, b: &[BigInt], cb: &BigInt, shift: usize) -> Vec<BigInt> {
    // ca·a + cb·q^shift·b
    let n = a.len().max(b.len() + shift);
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] = ca * x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i + shift] += cb * x;
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

/// `Q[q]` with content-primitive elements.
#[derive(Clone, Copy, Debug, Default)]
pub struct QPolyCp;

impl QPolyCp {
    fn lin(&self, a: &CpPoly, sa: &BigRational, b: &CpPoly, sb: &BigRational) -> CpPoly {
        // sa·a + sb·b
        if b.is_zero() || sb.is_zero() {
            return if sa.is_one() {
                a.clone()
            } else {
                CpPoly {
                    content: &a.content * sa,
                    prim: a.prim.clone(),
                }
            };
        }
        if a.is_zero() || sa.is_zero() {
            return CpPoly {
                content: &b.content * sb,
                prim: b.prim.clone(),
            };
        }
        let x = &a.content * sa;
        let y = &b.content * sb;
        let den = x.denom().lcm(y.denom());
        let xn = x.numer() * (&den / x.denom());
        let yn = y.numer() * (&den / y.denom());
        let g = xn.gcd(&yn);
        let v = int_lin(&a.prim, &(&xn / &g), &b.prim, &(&yn / &g), 0);
        CpPoly::from_scaled(BigRational::new(g, den), v)
    }
}

impl EuclideanDomain for QPolyCp {
    type Elem = CpPoly;
    type Norm = usize;

    fn zero(&self) -> CpPoly {
        CpPoly::zero()
    }
    fn one(&self) -> CpPoly {
        CpPoly {
            content: BigRational::one(),
            prim: vec![BigInt::one()],
        }
    }
    fn is_zero(&self, a: &CpPoly) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &CpPoly) -> bool {
        a.prim.len() == 1
    }
    fn norm(&self, a: &CpPoly) -> usize {
        a.degree()
    }
    fn add(&self, a: &CpPoly, b: &CpPoly) -> CpPoly {
        self.lin(a, &BigRational::one(), b, &BigRational::one())
    }
    fn sub(&self, a: &CpPoly, b: &CpPoly) -> CpPoly {
        self.lin(a, &BigRational::one(), b, &-BigRational::one())
    }
    fn mul(&self, a: &CpPoly, b: &CpPoly) -> CpPoly {
        if a.is_zero() || b.is_zero() {
            return CpPoly::zero();
        }
        // Gauss: product of primitive polynomials is primitive.
        CpPoly {
            content: &a.content * &b.content,
            prim: dense::mul(&crate::qarith::coeff::Zz, &a.prim, &b.prim),
        }
    }
    fn neg(&self, a: &CpPoly) -> CpPoly {
        CpPoly {
            content: -&a.content,
            prim: a.prim.clone(),
        }
    }
    fn div_rem(&self, a: &CpPoly, b: &CpPoly) -> (CpPoly, CpPoly) {
        assert!(!b.is_zero(), "division by zero");
        if a.prim.len() < b.prim.len() {
            return (CpPoly::zero(), a.clone());
        }
        // Pseudo-division of the primitive parts: lc^{e} a = Q b + R.
        let db = b.degree();
        let lc = b.prim[db].clone();
        let mut rem = a.prim.clone();
        let mut quo = vec![BigInt::zero(); a.prim.len() - db];
        let mut scale = BigInt::one();
        for i in (0..quo.len()).rev() {
            let c = rem[i + db].clone();
            if c.is_zero() {
                continue;
            }
            let g = c.gcd(&lc);
            let mul_rem = &lc / &g;
            let qc = &c / &g;
            if !mul_rem.is_one() {
                for x in rem.iter_mut() {
                    *x *= &mul_rem;
                }
                for x in quo.iter_mut() {
                    *x *= &mul_rem;
                }
                scale *= &mul_rem;
            }
            for (j, bj) in b.prim.iter().enumerate() {
                rem[i + j] -= &qc * bj;
            }
            quo[i] = qc;
        }
        rem.truncate(db);
        while rem.last().is_some_and(Zero::is_zero) {
            rem.pop();
        }
        while quo.last().is_some_and(Zero::is_zero) {
            quo.pop();
        }
        let s = BigRational::from_integer(scale);
        let q = CpPoly::from_scaled(&a.content / &b.content / &s, quo);
        let r = CpPoly::from_scaled(&a.content / &s, rem);
        (q, r)
    }
    fn ext_gcd(&self, a: &CpPoly, b: &CpPoly) -> (CpPoly, CpPoly, CpPoly) {
        let (g, s, t) = dense::ext_gcd(&Qq, &a.to_rationals(), &b.to_rationals());
        (
            CpPoly::from_rationals(&g),
            CpPoly::from_rationals(&s),
            CpPoly::from_rationals(&t),
        )
    }
    fn normalize(&self, a: &CpPoly) -> (CpPoly, CpPoly) {
        if a.is_zero() {
            return (CpPoly::zero(), self.one());
        }
        let lead = &a.content * BigRational::from_integer(a.prim[a.degree()].clone());
        let monic = CpPoly {
            content: BigRational::one() / BigRational::from_integer(a.prim[a.degree()].clone()),
            prim: a.prim.clone(),
        };
        (
            monic,
            CpPoly {
                content: lead,
                prim: vec![BigInt::one()],
            },
        )
    }
    fn inv_unit(&self, u: &CpPoly) -> CpPoly {
        CpPoly {
            content: BigRational::one()
                / (&u.content * BigRational::from_integer(u.prim[0].clone())),
            prim: vec![BigInt::one()],
        }
    }
    fn sub_mul(&self, a: &CpPoly, c: &CpPoly, b: &CpPoly) -> CpPoly {
        if c.is_zero() || b.is_zero() {
            return a.clone();
        }
        let cb = self.mul(c, b);
        self.sub(a, &cb)
    }
}
