use num_bigint::BigInt;
use proptest::prelude::*;

use braidq::complexes::boundary_matrix;
use braidq::exactla::matrix::{identity, mat_mul};
use braidq::exactla::{
    smith_normal_form, smith_normal_form_with, EuclideanDomain, Integers, Matrix, PivotRule,
    PolyRing, Transforms,
};
use braidq::homology::{compute_homology_with, Method};
use braidq::qarith::coeff::Fp;
use braidq::qarith::{
    cyclotomic, lemmas, q_binomial, qlucas_predicts_unit, split_phi, verify_congruence, CoeffRing,
    Poly,
};

const Z: CoeffRing = CoeffRing::Integers;

fn int_matrix(rows: usize, cols: usize, v: &[i64]) -> Matrix<BigInt> {
    Matrix {
        rows,
        cols,
        data: (0..rows)
            .map(|i| (0..cols).map(|j| BigInt::from(v[i * cols + j])).collect())
            .collect(),
    }
}

fn diag_of<D: EuclideanDomain>(
    d: &D,
    rows: usize,
    cols: usize,
    divisors: &[D::Elem],
) -> Matrix<D::Elem> {
    let mut m = Matrix::filled(rows, cols, d.zero());
    for (i, x) in divisors.iter().enumerate() {
        m.set(i, i, x.clone());
    }
    m
}

fn check_smith<D: EuclideanDomain>(
    d: &D,
    m: &Matrix<D::Elem>,
    pivot: PivotRule,
) -> Result<(), TestCaseError> {
    let s = smith_normal_form_with(d, m, Transforms::ALL, pivot);
    let (u, u_inv, v) = (
        s.u.as_ref().unwrap(),
        s.u_inv.as_ref().unwrap(),
        s.v.as_ref().unwrap(),
    );
    prop_assert_eq!(
        &mat_mul(d, &mat_mul(d, u, m), v),
        &diag_of(d, m.rows, m.cols, &s.divisors)
    );
    prop_assert_eq!(&mat_mul(d, u, u_inv), &identity(d, m.rows));
    for w in s.divisors.windows(2) {
        prop_assert!(d.divides(&w[0], &w[1]));
    }
    Ok(())
}

fn fp_poly_matrix(p: u32, rows: usize, cols: usize, v: &[Vec<u32>]) -> Matrix<Vec<u32>> {
    let trim = |mut c: Vec<u32>| {
        c.iter_mut().for_each(|x| *x %= p);
        while c.last() == Some(&0) {
            c.pop();
        }
        c
    };
    Matrix {
        rows,
        cols,
        data: (0..rows)
            .map(|i| (0..cols).map(|j| trim(v[i * cols + j].clone())).collect())
            .collect(),
    }
}

fn shuffle(len: usize, seed: u64) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..len).collect();
    let mut x = seed | 1;
    for i in (1..len).rev() {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        perm.swap(i, (x % (i as u64 + 1)) as usize);
    }
    perm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cyclotomic_product_formula(m in 1u64..300) {
        let prod = (1..=m).filter(|d| m % d == 0).fold(Poly::one(Z), |acc, d| &acc * &cyclotomic(d));
        prop_assert_eq!(prod, Poly::q_power_minus_one(Z, m as usize));
    }

    #[test]
    fn q_pascal_symmetry_and_value_at_one(n in 1usize..24, k in 0usize..24) {
        let k = k % (n + 1);
        let b = q_binomial(n, k, Z).unwrap();
        prop_assert_eq!(&b, &q_binomial(n, n - k, Z).unwrap());
        let classical = (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1));
        prop_assert_eq!(b.eval_int(1), num_rational::BigRational::from_integer(classical));
        if k >= 1 && k < n {
            let rhs = &q_binomial(n - 1, k - 1, Z).unwrap() + &q_binomial(n - 1, k, Z).unwrap().shift(k);
            prop_assert_eq!(b, rhs);
        }
    }

    #[test]
    fn qlucas_matches_divisibility(i in 0usize..30, j in 0usize..30, p_idx in 0usize..3, m_idx in 0usize..3) {
        let p = [2u32, 3, 5][p_idx];
        let m = [1usize, 3, 5][m_idx];
        prop_assume!(m % p as usize != 0);
        prop_assert_eq!(qlucas_predicts_unit(i, j, p, m), lemmas::qlucas_direct(i, j, p, m).unwrap());
    }

    #[test]
    fn split_identity_holds(m in 1u64..30, p_idx in 0usize..4, j in 1u32..4) {
        let p = [2u32, 3, 5, 7][p_idx];
        prop_assume!(m % p as u64 != 0);
        prop_assume!(m * (p as u64).pow(j) <= 400);
        prop_assert!(verify_congruence(m, p, j));
        for i in 0..j {
            let (omega, psi) = split_phi(m, i, j, p).unwrap();
            let small = cyclotomic(m * (p as u64).pow(i));
            let rebuilt = &(&small * &omega) + &psi.scale_int(p as i64);
            prop_assert_eq!(rebuilt, cyclotomic(m * (p as u64).pow(j)));
            prop_assert!(lemmas::split_phi_coprime(m, i, j, p).unwrap());
        }
    }

    #[test]
    fn smith_over_integers(rows in 1usize..5, cols in 1usize..5, v in prop::collection::vec(-9i64..10, 16)) {
        check_smith(&Integers, &int_matrix(rows, cols, &v), PivotRule::MinNorm)?;
    }

    #[test]
    fn smith_over_fp_polynomials(
        p_idx in 0usize..3,
        rows in 1usize..4,
        cols in 1usize..4,
        v in prop::collection::vec(prop::collection::vec(0u32..5, 0..4), 9),
        markowitz in any::<bool>(),
    ) {
        let p = [2u32, 3, 5][p_idx];
        let pivot = if markowitz { PivotRule::MinNormMarkowitz } else { PivotRule::MinNorm };
        check_smith(&PolyRing::new(Fp::new(p)), &fp_poly_matrix(p, rows, cols, &v), pivot)?;
    }

    #[test]
    fn divisors_ignore_basis_order(n in 3usize..7, k_off in 0usize..5, seed in any::<u64>(), p_idx in 0usize..3) {
        let p = [2u32, 3, 5][p_idx];
        let k = 2 + k_off % (n - 1);
        let ring = PolyRing::new(Fp::new(p));
        let m = boundary_matrix(n, k, CoeffRing::PrimeField(p)).map(|x| x.to_fp_vec()).to_dense(Vec::new());
        let shuffled = m.permute_rows(&shuffle(m.rows, seed)).permute_cols(&shuffle(m.cols, seed.rotate_left(17)));
        let a = smith_normal_form(&ring, &m, Transforms::NONE).divisors;
        let b = smith_normal_form(&ring, &shuffled, Transforms::NONE).divisors;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn fp_complex_is_reduction_of_integral(n in 2usize..9, k_off in 0usize..8, p_idx in 0usize..4) {
        let p = [2u32, 3, 5, 7][p_idx];
        let k = 1 + k_off % n;
        let fp = boundary_matrix(n, k, CoeffRing::PrimeField(p));
        let reduced = boundary_matrix(n, k, Z).map(|x| x.reduce_mod(p));
        let dense_fp = fp.to_dense(Poly::zero(CoeffRing::PrimeField(p)));
        let dense_red = reduced.to_dense(Poly::zero(CoeffRing::PrimeField(p)));
        prop_assert_eq!(dense_fp, dense_red);
    }

    #[test]
    fn elimination_routes_agree(n in 2usize..8, c_idx in 0usize..4) {
        let c = [CoeffRing::Rationals, CoeffRing::PrimeField(2), CoeffRing::PrimeField(3), CoeffRing::PrimeField(5)][c_idx];
        prop_assert_eq!(compute_homology_with(n, c, Method::Local).unwrap(), compute_homology_with(n, c, Method::Global).unwrap());
    }
}
