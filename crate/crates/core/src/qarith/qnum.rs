use super::poly::Poly;
use super::ring::CoeffRing;
use crate::error::{Error, Result};

/// `[i] = 1 + q + ... + q^{i-1}`, with `[0] = 0`.
pub fn q_integer(i: usize, ring: CoeffRing) -> Poly {
    Poly::from_ints(ring, &vec![1; i])
}

/// `[i]! = [2][3]...[i]`, with `[0]! = [1]! = 1`.
pub fn q_factorial(i: usize, ring: CoeffRing) -> Poly {
    (2..=i).fold(Poly::one(ring), |acc, j| &acc * &q_integer(j, ring))
}

/// Gaussian binomial `[n]!/([k]![n-k]!)`, computed by exact division over `Z`.
pub fn q_binomial(n: usize, k: usize, ring: CoeffRing) -> Result<Poly> {
    if k > n {
        return Err(Error::InvalidArgument(format!(
            "q_binomial({n}, {k}) needs k <= n"
        )));
    }
    let z = CoeffRing::Integers;
    let num = q_factorial(n, z);
    let den = &q_factorial(k, z) * &q_factorial(n - k, z);
    Ok(num.exact_div(&den)?.change_ring(ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    const Z: CoeffRing = CoeffRing::Integers;

    #[test]
    fn small_values() {
        assert!(q_integer(0, Z).is_zero());
        assert!(q_integer(1, Z).is_one());
        assert_eq!(q_integer(3, Z), Poly::from_ints(Z, &[1, 1, 1]));
        assert!(q_factorial(1, Z).is_one());
        assert!(q_factorial(0, Z).is_one());
        assert_eq!(
            q_factorial(4, Z).eval_int(1),
            BigRational::from_integer(24.into())
        );
        assert_eq!(
            q_binomial(4, 2, Z).unwrap(),
            Poly::from_ints(Z, &[1, 1, 2, 1, 1])
        );
        assert!(q_binomial(7, 0, Z).unwrap().is_one());
        assert_eq!(q_binomial(2, 1, Z).unwrap(), Poly::from_ints(Z, &[1, 1]));
    }

    #[test]
    fn binomial_mod_p() {
        let f2 = CoeffRing::PrimeField(2);
        assert_eq!(
            q_binomial(4, 2, f2).unwrap(),
            Poly::from_ints(f2, &[1, 1, 0, 1, 1])
        );
    }
}
