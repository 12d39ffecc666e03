use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::qarith::coeff::{Field, Fp, Qq};
use crate::qarith::dense;

/// A Euclidean domain with exact arithmetic.
pub trait EuclideanDomain: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;
    type Norm: Ord + Clone;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_unit(&self, a: &Self::Elem) -> bool;
    /// Euclidean size of a nonzero element.
    fn norm(&self, a: &Self::Elem) -> Self::Norm;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `a = q b + r` with `r = 0` or `norm(r) < norm(b)`.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
    /// `(g, s, t)` with `s a + t b = g`, `g` normalized.
    fn ext_gcd(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem, Self::Elem);
    /// Canonical associate `a / u` and the unit `u`.
    fn normalize(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem);
    fn inv_unit(&self, u: &Self::Elem) -> Self::Elem;

    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        let (q, r) = self.div_rem(a, b);
        self.is_zero(&r).then_some(q)
    }

    fn divides(&self, b: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(b) {
            return self.is_zero(a);
        }
        self.is_zero(&self.div_rem(a, b).1)
    }

    /// `a - c b`.
    fn sub_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.sub(a, &self.mul(c, b))
    }
}

/// `F[q]` for a coefficient field `F`, elements as dense coefficient vectors.
#[derive(Clone, Debug)]
pub struct PolyRing<F> {
    pub field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field }
    }
}

pub type FpPoly = PolyRing<Fp>;
pub type QPoly = PolyRing<Qq>;

impl<F: Field> EuclideanDomain for PolyRing<F>
where
    F::Elem: PartialEq,
{
    type Elem = Vec<F::Elem>;
    type Norm = usize;

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }
    fn one(&self) -> Self::Elem {
        vec![self.field.one()]
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }
    fn is_unit(&self, a: &Self::Elem) -> bool {
        a.len() == 1
    }
    fn norm(&self, a: &Self::Elem) -> usize {
        a.len().saturating_sub(1)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        dense::add(&self.field, a, b)
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        dense::sub(&self.field, a, b)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        dense::mul(&self.field, a, b)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        dense::neg(&self.field, a)
    }
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem) {
        dense::div_rem(&self.field, a, b)
    }
    fn ext_gcd(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem, Self::Elem) {
        dense::ext_gcd(&self.field, a, b)
    }
    fn normalize(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem) {
        match a.last() {
            None => (Vec::new(), self.one()),
            Some(l) => (dense::monic(&self.field, a), vec![l.clone()]),
        }
    }
    fn inv_unit(&self, u: &Self::Elem) -> Self::Elem {
        vec![self.field.inv(&u[0])]
    }
    fn sub_mul(&self, a: &Self::Elem, c: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if c.is_empty() || b.is_empty() {
            return a.clone();
        }
        let f = &self.field;
        let n = a.len().max(c.len() + b.len() - 1);
        let mut out = a.clone();
        out.resize(n, f.zero());
        for (i, ci) in c.iter().enumerate() {
            if f.is_zero(ci) {
                continue;
            }
            let nc = f.neg(ci);
            for (j, bj) in b.iter().enumerate() {
                f.add_mul_assign(&mut out[i + j], &nc, bj);
            }
        }
        dense::trimmed(f, out)
    }
}

/// The integers with Euclidean norm `|a|`; canonical associates are nonnegative.
#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl EuclideanDomain for Integers {
    type Elem = BigInt;
    type Norm = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
    fn norm(&self, a: &BigInt) -> BigInt {
        a.abs()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        a.div_rem(b)
    }
    fn ext_gcd(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
        let e = a.extended_gcd(b);
        if e.gcd.is_negative() {
            (-e.gcd, -e.x, -e.y)
        } else {
            (e.gcd, e.x, e.y)
        }
    }
    fn normalize(&self, a: &BigInt) -> (BigInt, BigInt) {
        if a.is_negative() {
            (-a, -BigInt::one())
        } else {
            (a.clone(), BigInt::one())
        }
    }
    fn inv_unit(&self, u: &BigInt) -> BigInt {
        u.clone()
    }
}
