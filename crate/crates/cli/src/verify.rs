//! Verification suites: each check reports pass/fail with timing.

use std::time::Instant;

use braidq::cache::Cache;
use braidq::closedform::{
    compare_with_direct, stable_basis, stable_torsion_rank, symbolic_bockstein_homology,
    symbolic_squares_to_zero, Presentation,
};
use braidq::complexes::GradedComplex;
use braidq::homology::{
    annihilated_by_factorial, bockstein, compute_homology_with, first_torsion,
    verify_no_p2_torsion, verify_torsion_support, Method,
};
use braidq::qarith::{
    cyclotomic, euler_phi, is_prime, lemmas, primes_up_to, qlucas_direct_table,
    qlucas_predicts_unit, split_phi, verify_congruence, verify_cyclotomic_gcd, CoeffRing, Poly,
};
use braidq::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Lemmas,
    Complex,
    Bockstein,
    Closedform,
    Stable,
    All,
}

#[derive(Clone, Debug)]
pub struct Bounds {
    pub nmax: usize,
    pub mmax: u64,
    pub primes: Vec<u32>,
    pub coeffs: Vec<CoeffRing>,
}

pub struct Report {
    pub failed: usize,
    pub internal: Option<Error>,
}

struct Runner {
    failed: usize,
    internal: Option<Error>,
}

impl Runner {
    fn check(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        let t = Instant::now();
        let r = f();
        let ms = t.elapsed().as_secs_f64() * 1e3;
        match r {
            Ok((true, detail)) => println!("PASS  {name}  {detail} ({ms:.1} ms)"),
            Ok((false, detail)) => {
                self.failed += 1;
                println!("FAIL  {name}  {detail} ({ms:.1} ms)");
            }
            Err(e) => {
                self.failed += 1;
                println!("FAIL  {name}  error: {e} ({ms:.1} ms)");
                if e.is_internal() && self.internal.is_none() {
                    self.internal = Some(e);
                }
            }
        }
    }
}

fn all_of(it: impl IntoIterator<Item = Result<bool>>) -> Result<(bool, String)> {
    let mut total = 0;
    let mut bad = 0;
    for r in it {
        total += 1;
        if !r? {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{} of {total} cases hold", total - bad)))
}

fn lemma_suite(r: &mut Runner, b: &Bounds) {
    let m_prod = b.mmax.max(200);
    r.check(
        &format!("product of φ_d over d | m equals q^m - 1, m ≤ {m_prod}"),
        || {
            all_of((1..=m_prod).map(|m| {
                let prod = (1..=m)
                    .filter(|d| m % d == 0)
                    .fold(Poly::one(CoeffRing::Integers), |acc, d| {
                        &acc * &cyclotomic(d)
                    });
                Ok(prod == Poly::q_power_minus_one(CoeffRing::Integers, m as usize))
            }))
        },
    );
    r.check(
        &format!("gcd classification of φ_m, φ_n, 2 ≤ m < n ≤ {}", b.mmax),
        || {
            all_of((2..b.mmax).flat_map(|m| {
                (m + 1..=b.mmax).map(move |n| verify_cyclotomic_gcd(m, n).map(|_| true))
            }))
        },
    );
    let pairs: Vec<(u64, u32, u32)> = [2u32, 3, 5, 7]
        .iter()
        .flat_map(|&p| {
            (1..=20u64)
                .filter(move |m| m % p as u64 != 0)
                .flat_map(move |m| (1..=3).map(move |i| (m, p, i)))
        })
        .collect();
    r.check(
        "congruence φ_{mp^i} ≡ φ_m^{φ(p^i)} mod p, m ≤ 20, p ≤ 7, i ≤ 3",
        || {
            all_of(
                pairs
                    .iter()
                    .map(|&(m, p, i)| Ok(verify_congruence(m, p, i))),
            )
        },
    );
    r.check(
        "split φ_{mp^j} = φ_{mp^i}·ω + p·ψ with ψ a unit mod φ_{mp^i}, m ≤ 20, p ≤ 7, j ≤ 3",
        || {
            all_of(pairs.iter().flat_map(|&(m, p, j)| {
                (0..j).map(move |i| {
                    split_phi(m, i, j, p)?;
                    lemmas::split_phi_coprime(m, i, j, p)
                })
            }))
        },
    );
    r.check(
        "q-Lucas predicate agrees with divisibility, i + j ≤ 64, p ≤ 5, m ∈ {1, 3, 5}",
        || {
            let mut cases = Vec::new();
            for p in [2u32, 3, 5] {
                for m in [1usize, 3, 5].into_iter().filter(|m| m % p as usize != 0) {
                    let table = qlucas_direct_table(64, p, m)?;
                    for (s, row) in table.iter().enumerate() {
                        for (i, &unit) in row.iter().enumerate() {
                            cases.push(Ok(qlucas_predicts_unit(i, s - i, p, m) == unit));
                        }
                    }
                }
            }
            all_of(cases)
        },
    );
    r.check("Euler φ and primality helpers on small inputs", || {
        Ok((
            euler_phi(12) == 4 && is_prime(97) && !is_prime(91),
            "φ(12) = 4, 97 prime, 91 composite".into(),
        ))
    });
}

fn complex_suite(r: &mut Runner, b: &Bounds, cache: &Cache) {
    let nmax = b.nmax.max(12);
    for &c in &[
        CoeffRing::Rationals,
        CoeffRing::PrimeField(2),
        CoeffRing::PrimeField(3),
        CoeffRing::PrimeField(5),
    ] {
        r.check(&format!("∂∘∂ = 0 over {c}, n ≤ {nmax}"), || {
            all_of((1..=nmax).map(|n| Ok(GradedComplex::build(n, c).squares_to_zero())))
        });
    }
    for &c in &b.coeffs {
        r.check(
            &format!("torsion supported at φ_m, m ≤ n, over {c}, n ≤ {nmax}"),
            || all_of((2..=nmax).map(|n| verify_torsion_support(n, c))),
        );
        r.check(
            &format!("every divisor divides [n]! over {c}, n ≤ {nmax}"),
            || all_of((2..=nmax).map(|n| divides_factorial(n, c, cache))),
        );
        let gmax = if c == CoeffRing::Rationals {
            b.nmax.min(10)
        } else {
            b.nmax
        };
        r.check(
            &format!("local and global elimination agree over {c}, n ≤ {gmax}"),
            || {
                all_of((0..=gmax).map(|n| {
                    Ok(compute_homology_with(n, c, Method::Local)?
                        == compute_homology_with(n, c, Method::Global)?)
                }))
            },
        );
    }
}

fn divides_factorial(n: usize, c: CoeffRing, cache: &Cache) -> Result<bool> {
    Ok(annihilated_by_factorial(n, &cache.degree(n, c)?.groups))
}

fn bockstein_suite(r: &mut Runner, b: &Bounds) {
    for &p in &b.primes {
        r.check(
            &format!("β_{p}∘β_{p} = 0, 2 ≤ n ≤ {}", b.nmax),
            || all_of((2..=b.nmax).map(|n| Ok(bockstein(n, p)?.squares_to_zero()))),
        );
        r.check(
            &format!(
                "no {p}²-torsion: ker β/im β has the Q dimension, 2 ≤ n ≤ {}",
                b.nmax
            ),
            || all_of((2..=b.nmax).map(|n| verify_no_p2_torsion(n, p))),
        );
        r.check(
            &format!(
                "rank β_{p} equals the Z_{p} multiplicities, 2 ≤ n ≤ {}",
                b.nmax
            ),
            || {
                all_of((2..=b.nmax).map(|n| {
                    let beta = bockstein(n, p)?;
                    let z = braidq::homology::integral_assembly(n, &[p])?;
                    Ok((1..=n).all(|l| {
                        let t = z[l - 1]
                            .torsion
                            .iter()
                            .find(|t| t.p == p)
                            .map_or(0, |t| t.mult);
                        beta.rank(l) as u64 == t
                    }))
                }))
            },
        );
    }
}

fn closedform_suite(r: &mut Runner, b: &Bounds, cache: &Cache) {
    for &c in &b.coeffs {
        r.check(
            &format!(
                "closed form equals direct computation over {c}, n ≤ {}",
                b.nmax
            ),
            || {
                let t = cache.table(c, b.nmax)?;
                let rep = compare_with_direct(c, b.nmax, &t)?;
                let detail = match rep.mismatches.first() {
                    None => format!("{} cells, 0 mismatches", rep.cells_checked),
                    Some(m) => format!(
                        "{} mismatches, first at (n={}, l={})",
                        rep.mismatches.len(),
                        m.n,
                        m.l
                    ),
                };
                Ok((rep.is_clean(), detail))
            },
        );
        if let CoeffRing::PrimeField(p) = c {
            let nb = (b.nmax + 2) as u32;
            r.check(
                &format!("symbolic β_{p} squares to zero, n ≤ {nb}"),
                || {
                    let pres = Presentation::new(c, nb)?;
                    let mut cases = Vec::new();
                    for n in 0..=nb {
                        for m in pres.monomials_of_degree(n)? {
                            cases.push(symbolic_squares_to_zero(&m.factors, p));
                        }
                    }
                    all_of(cases)
                },
            );
            r.check(
                &format!(
                    "symbolic β_{p} homology has the Q dimension, n ≤ {}",
                    b.nmax
                ),
                || {
                    let pres = Presentation::new(c, b.nmax as u32)?;
                    let q = cache.table(CoeffRing::Rationals, b.nmax)?;
                    let mut cases = Vec::new();
                    for n in 2..=b.nmax {
                        for l in 0..=n {
                            let h = symbolic_bockstein_homology(&pres, n as u32, l as u32)? as u64;
                            cases.push(Ok(h == q.dimension(n, l)));
                        }
                    }
                    all_of(cases)
                },
            );
        }
    }
}

fn stable_suite(r: &mut Runner, b: &Bounds, cache: &Cache) {
    for &p in &b.primes {
        if 2 * p as usize + 2 > b.nmax {
            println!(
                "SKIP  first {p}-torsion and stable checks need --nmax {}",
                2 * p + 2
            );
            continue;
        }
        r.check(
            &format!(
                "first {p}-torsion at (n, l) = ({}, {})",
                2 * p + 2,
                2 * p - 2
            ),
            || {
                let fp = cache.table(CoeffRing::PrimeField(p), b.nmax)?;
                let q = cache.table(CoeffRing::Rationals, b.nmax)?;
                let got = first_torsion(p, &fp, &q)?;
                Ok((
                    got == (2 * p as usize + 2, 2 * p as usize - 2),
                    format!("found {got:?}"),
                ))
            },
        );
        r.check(
            &format!(
                "low dimensions at n = {} match the stable ring over Z_{p}",
                b.nmax
            ),
            || {
                let fp = cache.table(CoeffRing::PrimeField(p), b.nmax)?;
                let q = cache.table(CoeffRing::Rationals, b.nmax)?;
                all_of((1..=3u32).map(|l| {
                    let n = b.nmax;
                    let stable = stable_basis(CoeffRing::PrimeField(p), l)?.len() as u64;
                    Ok(fp.dimension(n, l as usize) == stable + q.dimension(n, l as usize))
                }))
            },
        );
        r.check(
            &format!(
                "stable Bockstein image gives the Z_{p} summands at n = {}, l ≤ 3",
                b.nmax
            ),
            || {
                let z = cache.integral(b.nmax)?;
                all_of((1..=3u32).map(|l| {
                    let t = z[l as usize]
                        .torsion
                        .iter()
                        .find(|t| t.p == p)
                        .map_or(0, |t| t.mult);
                    Ok(stable_torsion_rank(p, l)? as u64 == t)
                }))
            },
        );
    }
}

pub fn run(suite: Suite, b: &Bounds, cache: &Cache) -> Report {
    let mut r = Runner {
        failed: 0,
        internal: None,
    };
    let want = |s: Suite| suite == s || suite == Suite::All;
    if want(Suite::Lemmas) {
        lemma_suite(&mut r, b);
    }
    if want(Suite::Complex) {
        complex_suite(&mut r, b, cache);
    }
    if want(Suite::Bockstein) {
        bockstein_suite(&mut r, b);
    }
    if want(Suite::Closedform) {
        closedform_suite(&mut r, b, cache);
    }
    if want(Suite::Stable) {
        stable_suite(&mut r, b, cache);
    }
    println!(
        "{}",
        if r.failed == 0 {
            "all checks passed".to_string()
        } else {
            format!("{} checks failed", r.failed)
        }
    );
    Report {
        failed: r.failed,
        internal: r.internal,
    }
}

/// Primes `≤ n` for bockstein defaults.
pub fn small_primes(n: u64) -> Vec<u32> {
    primes_up_to(n).into_iter().map(|p| p as u32).collect()
}
