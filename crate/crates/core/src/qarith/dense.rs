//! Dense univariate polynomial kernels over a [`Coefficients`] ring.
//!
//! A polynomial is a `Vec` of coefficients, index `i` holding the coefficient
//! of `q^i`, with trailing zeros stripped. The empty vector is zero.

use super::coeff::{Coefficients, Field};

pub fn trim<C: Coefficients>(r: &C, a: &mut Vec<C::Elem>) {
    while let Some(last) = a.last() {
        if r.is_zero(last) {
            a.pop();
        } else {
            break;
        }
    }
}

pub fn trimmed<C: Coefficients>(r: &C, mut a: Vec<C::Elem>) -> Vec<C::Elem> {
    trim(r, &mut a);
    a
}

/// Degree, `None` for zero.
pub fn degree<E>(a: &[E]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn constant<C: Coefficients>(r: &C, c: C::Elem) -> Vec<C::Elem> {
    trimmed(r, vec![c])
}

pub fn monomial<C: Coefficients>(r: &C, c: C::Elem, k: usize) -> Vec<C::Elem> {
    if r.is_zero(&c) {
        return Vec::new();
    }
    let mut v = vec![r.zero(); k + 1];
    v[k] = c;
    v
}

pub fn add<C: Coefficients>(r: &C, a: &[C::Elem], b: &[C::Elem]) -> Vec<C::Elem> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = r.add(o, s);
    }
    trimmed(r, out)
}

pub fn sub<C: Coefficients>(r: &C, a: &[C::Elem], b: &[C::Elem]) -> Vec<C::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i);
        let y = b.get(i);
        out.push(match (x, y) {
            (Some(x), Some(y)) => r.sub(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => r.neg(y),
            (None, None) => unreachable!(),
        });
    }
    trimmed(r, out)
}

pub fn neg<C: Coefficients>(r: &C, a: &[C::Elem]) -> Vec<C::Elem> {
    a.iter().map(|x| r.neg(x)).collect()
}

pub fn scale<C: Coefficients>(r: &C, a: &[C::Elem], c: &C::Elem) -> Vec<C::Elem> {
    if r.is_zero(c) {
        return Vec::new();
    }
    trimmed(r, a.iter().map(|x| r.mul(x, c)).collect())
}

pub fn mul<C: Coefficients>(r: &C, a: &[C::Elem], b: &[C::Elem]) -> Vec<C::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![r.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if r.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r.add_mul_assign(&mut out[i + j], x, y);
        }
    }
    trimmed(r, out)
}

pub fn pow<C: Coefficients>(r: &C, a: &[C::Elem], e: u32) -> Vec<C::Elem> {
    let mut acc = constant(r, r.one());
    for _ in 0..e {
        acc = mul(r, &acc, a);
    }
    acc
}

/// Multiplies by `q^k`.
pub fn shift<C: Coefficients>(r: &C, a: &[C::Elem], k: usize) -> Vec<C::Elem> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![r.zero(); k];
    out.extend_from_slice(a);
    out
}

pub fn eval<C: Coefficients>(r: &C, a: &[C::Elem], x: &C::Elem) -> C::Elem {
    let mut acc = r.zero();
    for c in a.iter().rev() {
        acc = r.add(&r.mul(&acc, x), c);
    }
    acc
}

/// Division by a polynomial with unit leading coefficient `1`; valid over any ring.
pub fn div_rem_monic<C: Coefficients>(
    r: &C,
    a: &[C::Elem],
    b: &[C::Elem],
) -> (Vec<C::Elem>, Vec<C::Elem>) {
    let db = degree(b).expect("division by zero polynomial");
    assert!(r.is_one(&b[db]), "divisor must be monic");
    if a.len() <= db {
        return (Vec::new(), a.to_vec());
    }
    let mut rem = a.to_vec();
    let mut quo = vec![r.zero(); a.len() - db];
    for i in (0..quo.len()).rev() {
        let c = rem[i + db].clone();
        if r.is_zero(&c) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = r.mul(&c, bj);
            rem[i + j] = r.sub(&rem[i + j], &t);
        }
        quo[i] = c;
    }
    rem.truncate(db);
    (trimmed(r, quo), trimmed(r, rem))
}

/// Remainder only, in place; the divisor must be monic.
pub fn rem_monic_in_place<C: Coefficients>(r: &C, a: &mut Vec<C::Elem>, b: &[C::Elem]) {
    let db = degree(b).expect("division by zero polynomial");
    if a.len() <= db {
        return;
    }
    for i in (0..a.len() - db).rev() {
        let c = a[i + db].clone();
        if r.is_zero(&c) {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(db) {
            let t = r.mul(&c, bj);
            a[i + j] = r.sub(&a[i + j], &t);
        }
        a[i + db] = r.zero();
    }
    a.truncate(db);
    trim(r, a);
}

pub fn div_rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let db = degree(b).expect("division by zero polynomial");
    if a.len() <= db {
        return (Vec::new(), a.to_vec());
    }
    let lead_inv = f.inv(&b[db]);
    let mut rem = a.to_vec();
    let mut quo = vec![f.zero(); a.len() - db];
    for i in (0..quo.len()).rev() {
        let c = f.mul(&rem[i + db], &lead_inv);
        if f.is_zero(&c) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = f.mul(&c, bj);
            rem[i + j] = f.sub(&rem[i + j], &t);
        }
        quo[i] = c;
    }
    rem.truncate(db);
    (trimmed(f, quo), trimmed(f, rem))
}

pub fn rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    div_rem(f, a, b).1
}

/// Exact quotient `a / b`, or `None` when `b` does not divide `a`.
pub fn exact_div<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let (q, r) = div_rem(f, a, b);
    r.is_empty().then_some(q)
}

pub fn divides<F: Field>(f: &F, b: &[F::Elem], a: &[F::Elem]) -> bool {
    if b.is_empty() {
        return a.is_empty();
    }
    rem(f, a, b).is_empty()
}

/// Scales to leading coefficient one; zero stays zero.
pub fn monic<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(l) => scale(f, a, &f.inv(l)),
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Extended Euclid: returns `(g, s, t)` with `s a + t b = g`, `g` monic.
pub fn ext_gcd<F: Field>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>, Vec<F::Elem>) {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    let mut s0 = constant(f, f.one());
    let mut s1 = Vec::new();
    let mut t0 = Vec::new();
    let mut t1 = constant(f, f.one());
    while !r1.is_empty() {
        let (q, r) = div_rem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        let t = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    match r0.last() {
        None => (Vec::new(), Vec::new(), Vec::new()),
        Some(l) => {
            let li = f.inv(l);
            (scale(f, &r0, &li), scale(f, &s0, &li), scale(f, &t0, &li))
        }
    }
}

/// Number of leading zero coefficients, i.e. the `q`-adic valuation.
pub fn q_valuation<C: Coefficients>(r: &C, a: &[C::Elem]) -> usize {
    a.iter().take_while(|c| r.is_zero(c)).count()
}

/// Laurent normalization: strip the `q`-power and make monic, so that
/// associates in `K[q^{±1}]` share one representative.
pub fn laurent_normalize<F: Field>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let v = q_valuation(f, a);
    monic(f, &a[v.min(a.len())..])
}

/// Valuation of `a` at `g` (repeated exact division) and the cofactor.
pub fn valuation<F: Field>(f: &F, a: &[F::Elem], g: &[F::Elem]) -> (u32, Vec<F::Elem>) {
    assert!(degree(g).unwrap_or(0) > 0, "valuation at a unit");
    let mut v = 0;
    let mut cur = a.to_vec();
    if cur.is_empty() {
        return (u32::MAX, cur);
    }
    loop {
        let (q, r) = div_rem(f, &cur, g);
        if !r.is_empty() {
            return (v, cur);
        }
        cur = q;
        v += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::coeff::{Fp, Zz};
    use num_bigint::BigInt;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn multiply_and_divide_over_z() {
        let a = z(&[1, 1]);
        let b = z(&[-1, 1]);
        let prod = mul(&Zz, &a, &b);
        assert_eq!(prod, z(&[-1, 0, 1]));
        let (q, r) = div_rem_monic(&Zz, &z(&[1, 0, 1]), &z(&[1, 1]));
        assert_eq!(q, z(&[-1, 1]));
        assert_eq!(r, z(&[2]));
    }

    #[test]
    fn gcd_over_f2() {
        let f = Fp::new(2);
        // q^2 + 1 = (q + 1)^2 over F_2
        let a = vec![1, 0, 1];
        let b = vec![1, 1];
        assert_eq!(gcd(&f, &a, &b), vec![1, 1]);
        let (g, s, t) = ext_gcd(&f, &[1, 1, 1], &[1, 1]);
        assert_eq!(g, vec![1]);
        assert_eq!(
            add(&f, &mul(&f, &s, &[1, 1, 1]), &mul(&f, &t, &[1, 1])),
            vec![1]
        );
        assert_eq!(valuation(&f, &a, &b).0, 2);
    }

    #[test]
    fn in_place_remainder_matches() {
        let f = Fp::new(5);
        let a = vec![3, 1, 4, 1, 0, 2];
        let b = vec![2, 0, 1];
        let mut c = a.clone();
        rem_monic_in_place(&f, &mut c, &b);
        assert_eq!(c, rem(&f, &a, &b));
    }
}
