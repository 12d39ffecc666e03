//! End-to-end checks across modules: chain-level homology against the
//! closed form, Bockstein ranks against the symbolic operator, the integral
//! assembly against both, and the cache round trip.

use braidq::cache::Cache;
use braidq::closedform::{
    compare_with_direct, enumerate_basis, stable_basis, stable_integral_presentation,
    symbolic_bockstein_matrix, Presentation,
};
use braidq::exactla::field_rank;
use braidq::homology::{bockstein, compute_table, integral_assembly, HomologyTable};
use braidq::qarith::coeff::Fp;
use braidq::qarith::CoeffRing;

fn table(c: CoeffRing, nmax: usize) -> HomologyTable {
    compute_table(c, nmax).unwrap()
}

#[test]
fn closed_form_matches_direct_up_to_nine() {
    for c in [
        CoeffRing::Rationals,
        CoeffRing::PrimeField(2),
        CoeffRing::PrimeField(3),
        CoeffRing::PrimeField(7),
    ] {
        let rep = compare_with_direct(c, 9, &table(c, 9)).unwrap();
        assert!(rep.is_clean(), "{c}: {:?}", rep.mismatches);
    }
}

#[test]
fn symbolic_and_chain_level_bockstein_ranks_agree() {
    for p in [2u32, 3] {
        let pres = Presentation::new(CoeffRing::PrimeField(p), 9).unwrap();
        for n in 2..=9usize {
            let direct = bockstein(n, p).unwrap();
            for l in 1..=n {
                let m = symbolic_bockstein_matrix(&pres, n as u32, l as u32).unwrap();
                assert_eq!(
                    field_rank(&Fp::new(p), &m),
                    direct.rank(l),
                    "p={p} n={n} l={l}"
                );
            }
        }
    }
}

#[test]
fn closed_form_basis_sizes_match_field_dimensions() {
    let t = table(CoeffRing::PrimeField(2), 8);
    for n in 2..=8usize {
        for l in 0..=n {
            let basis = enumerate_basis(CoeffRing::PrimeField(2), n as u32, l as u32).unwrap();
            let dim: u64 = basis
                .iter()
                .map(|m| m.annihilator.as_ref().and_then(|a| a.degree()).unwrap_or(0) as u64)
                .sum();
            assert_eq!(dim, t.dimension(n, l), "n={n} l={l}");
        }
    }
}

#[test]
fn integral_torsion_is_bockstein_image() {
    for n in 2..=9usize {
        let z = integral_assembly(n, &[2, 3]).unwrap();
        for p in [2u32, 3] {
            let beta = bockstein(n, p).unwrap();
            for l in 0..n {
                let mult = z[l].torsion.iter().find(|t| t.p == p).map_or(0, |t| t.mult);
                assert_eq!(beta.rank(l + 1) as u64, mult, "n={n} l={l} p={p}");
            }
        }
    }
}

#[test]
fn stable_ring_in_low_dimensions() {
    assert_eq!(stable_basis(CoeffRing::Rationals, 0).unwrap().len(), 1);
    assert!(stable_basis(CoeffRing::Rationals, 2).unwrap().is_empty());
    let f2: Vec<usize> = (0..=4)
        .map(|l| stable_basis(CoeffRing::PrimeField(2), l).unwrap().len())
        .collect();
    assert_eq!(f2, vec![1, 0, 1, 1, 1]);
    let s = stable_integral_presentation();
    assert!(!s.generators.is_empty());
}

#[test]
fn cache_serves_identical_tables() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let c = CoeffRing::PrimeField(3);
    let fresh = cache.table(c, 7).unwrap();
    let cached = cache.table(c, 7).unwrap();
    assert_eq!(fresh, cached);
    assert_eq!(fresh, table(c, 7));
    assert_eq!(cache.entries().unwrap().len(), 6);
    let z = cache.integral_table(6).unwrap();
    assert_eq!(z[6], integral_assembly(6, &[2, 3, 5]).unwrap());
}
