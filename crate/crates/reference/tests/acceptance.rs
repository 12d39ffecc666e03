//! One line per acceptance criterion. Every comparison is exact: there is no
//! numeric tolerance anywhere in this suite.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use braidq::closedform::{compare_with_direct, stable_basis, stable_torsion_rank};
use braidq::complexes::GradedComplex;
use braidq::homology::{
    annihilated_by_factorial, bockstein, compute_table, default_primes, first_torsion,
    integral_assembly, verify_no_p2_torsion, HomologyGroup, HomologyTable, IntegralGroup,
};
use braidq::qarith::{
    cyclotomic, lemmas, qlucas_direct_table, qlucas_predicts_unit, split_phi, verify_congruence,
    verify_cyclotomic_gcd, CoeffRing, Poly,
};
use braidq::Result;
use braidq_reference::{Cell, Table, NMAX};

const Q: CoeffRing = CoeffRing::Rationals;
const F2: CoeffRing = CoeffRing::PrimeField(2);
const F3: CoeffRing = CoeffRing::PrimeField(3);
const F5: CoeffRing = CoeffRing::PrimeField(5);
const F7: CoeffRing = CoeffRing::PrimeField(7);

/// Tables are computed once and shared between criteria.
struct Tables {
    by_ring: BTreeMap<CoeffRing, HomologyTable>,
}

impl Tables {
    fn get(&mut self, c: CoeffRing, nmax: usize) -> Result<&HomologyTable> {
        if self.by_ring.get(&c).map_or(true, |t| t.nmax < nmax) {
            self.by_ring.insert(c, compute_table(c, nmax)?);
        }
        Ok(&self.by_ring[&c])
    }
}

fn field_cell(g: &HomologyGroup) -> Option<Cell> {
    if g.free_rank > 0 {
        return None;
    }
    let mut v: Vec<(u64, u32)> = g
        .torsion
        .summands
        .iter()
        .flat_map(|s| std::iter::repeat((s.m, s.e)).take(s.mult as usize))
        .collect();
    v.sort_unstable();
    Some(Cell::Field(v))
}

fn integral_cell(g: &IntegralGroup) -> Cell {
    let mut torsion: Vec<(u32, u64)> = g.torsion.iter().map(|t| (t.p, t.mult)).collect();
    torsion.sort_unstable();
    Cell::Integral {
        free: g.free_rank,
        torsion,
    }
}

/// Cells absent from a published table (`l > n` or rows past `H_8`) must be zero.
fn published_or_zero(
    cells: &BTreeMap<(usize, usize), Cell>,
    n: usize,
    l: usize,
    integral: bool,
) -> Cell {
    cells.get(&(n, l)).cloned().unwrap_or(if integral {
        Cell::Integral {
            free: 0,
            torsion: Vec::new(),
        }
    } else {
        Cell::Field(Vec::new())
    })
}

fn table_reproduction(tables: &mut Tables) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for (table, c) in [(Table::Fp2, F2), (Table::Fp3, F3), (Table::Q, Q)] {
        let cells = table.cells();
        let t = tables.get(c, NMAX)?;
        for n in 2..=NMAX {
            for l in 0..=n {
                checked += 1;
                let got = field_cell(t.get(n, l).expect("computed"));
                let want = published_or_zero(&cells, n, l, false);
                if got.as_ref() != Some(&want) {
                    bad.push(format!(
                        "{c} (n={n}, H_{l}): computed {got:?}, published {want:?}"
                    ));
                }
            }
        }
    }
    Ok(summary(checked, bad))
}

fn integral_reproduction() -> Result<(bool, String)> {
    let cells = Table::Z.cells();
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 2..=NMAX {
        let groups = integral_assembly(n, &default_primes(n))?;
        for (l, g) in groups.iter().enumerate() {
            checked += 1;
            let want = published_or_zero(&cells, n, l, true);
            let got = integral_cell(g);
            if got != want {
                bad.push(format!(
                    "(n={n}, H_{l}): computed {got:?}, published {want:?}"
                ));
            }
        }
    }
    Ok(summary(checked, bad))
}

fn two_oracles(tables: &mut Tables) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for c in [Q, F2, F3, F5] {
        let rep = compare_with_direct(c, NMAX, tables.get(c, NMAX)?)?;
        checked += rep.cells_checked;
        bad.extend(
            rep.mismatches
                .iter()
                .map(|m| format!("{c} (n={}, l={})", m.n, m.l)),
        );
    }
    Ok(summary(checked, bad))
}

fn chain_axioms() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 0..=12 {
        checked += 1;
        if !GradedComplex::build(n, CoeffRing::Integers).squares_to_zero() {
            bad.push(format!("∂∂ ≠ 0 at n={n}"));
        }
    }
    for p in [2, 3, 5] {
        for n in 2..=NMAX {
            checked += 1;
            if !bockstein(n, p)?.squares_to_zero() {
                bad.push(format!("β_{p}β_{p} ≠ 0 at n={n}"));
            }
        }
    }
    Ok(summary(checked, bad))
}

fn annihilation(tables: &mut Tables) -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for c in [Q, F2, F3, F5, F7] {
        let t = tables.get(c, 12)?;
        for n in 0..=12 {
            checked += 1;
            if !annihilated_by_factorial(n, &t.degrees[&n].groups) {
                bad.push(format!("{c} n={n}"));
            }
        }
    }
    Ok(summary(checked, bad))
}

fn cyclotomic_lemmas() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for m in 1..=200u64 {
        checked += 1;
        let prod = (1..=m)
            .filter(|d| m % d == 0)
            .fold(Poly::one(CoeffRing::Integers), |acc, d| {
                &acc * &cyclotomic(d)
            });
        if prod != Poly::q_power_minus_one(CoeffRing::Integers, m as usize) {
            bad.push(format!("product m={m}"));
        }
    }
    for m in 2..60u64 {
        for n in m + 1..=60 {
            checked += 1;
            if let Err(e) = verify_cyclotomic_gcd(m, n) {
                bad.push(format!("gcd ({m}, {n}): {e}"));
            }
        }
    }
    for p in [2u32, 3, 5, 7] {
        for m in (1..=20u64).filter(|m| m % p as u64 != 0) {
            for j in 1..=3 {
                checked += 1;
                if !verify_congruence(m, p, j) {
                    bad.push(format!("congruence m={m} p={p} i={j}"));
                }
                for i in 0..j {
                    checked += 1;
                    let ok =
                        split_phi(m, i, j, p).is_ok() && lemmas::split_phi_coprime(m, i, j, p)?;
                    if !ok {
                        bad.push(format!("split m={m} p={p} i={i} j={j}"));
                    }
                }
            }
        }
    }
    Ok(summary(checked, bad))
}

fn no_p2_torsion() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for p in [2, 3, 5] {
        for n in 2..=NMAX {
            checked += 1;
            if !verify_no_p2_torsion(n, p)? {
                bad.push(format!("p={p} n={n}"));
            }
        }
    }
    Ok(summary(checked, bad))
}

fn first_torsion_location(tables: &mut Tables) -> Result<(bool, String)> {
    let mut found = Vec::new();
    let mut ok = true;
    for (p, nmax, want) in [(2u32, NMAX, (6, 2)), (3, NMAX, (8, 4)), (5, 12, (12, 8))] {
        let q = tables.get(Q, nmax)?.clone();
        let fp = tables.get(CoeffRing::PrimeField(p), nmax)?;
        let got = first_torsion(p, fp, &q)?;
        ok &= got == want;
        found.push(format!("p={p}: {got:?}"));
    }
    Ok((ok, found.join(", ")))
}

fn qlucas() -> Result<(bool, String)> {
    let mut bad = Vec::new();
    let mut checked = 0;
    for p in [2u32, 3, 5] {
        for m in [1usize, 3, 5].into_iter().filter(|m| m % p as usize != 0) {
            let table = qlucas_direct_table(64, p, m)?;
            for (s, row) in table.iter().enumerate() {
                for (i, &unit) in row.iter().enumerate() {
                    checked += 1;
                    if qlucas_predicts_unit(i, s - i, p, m) != unit {
                        bad.push(format!("p={p} m={m} ({i}, {})", s - i));
                    }
                }
            }
        }
    }
    Ok(summary(checked, bad))
}

fn stable_cross_check(tables: &mut Tables) -> Result<(bool, String)> {
    let n = NMAX;
    let mut bad = Vec::new();
    let mut checked = 0;
    let q = tables.get(Q, n)?.clone();
    for p in [2u32, 3] {
        let fp = tables.get(CoeffRing::PrimeField(p), n)?;
        for l in 1..=3u32 {
            checked += 1;
            let stable = stable_basis(CoeffRing::PrimeField(p), l)?.len() as u64;
            let (have, q_dim) = (fp.dimension(n, l as usize), q.dimension(n, l as usize));
            if have != stable + q_dim {
                bad.push(format!("F_{p} H_{l}: {have} ≠ stable {stable} + Q {q_dim}"));
            }
            checked += 1;
            let rank = stable_torsion_rank(p, l)? as u64;
            let z = integral_assembly(n, &[p])?;
            let mult = z[l as usize]
                .torsion
                .iter()
                .find(|t| t.p == p)
                .map_or(0, |t| t.mult);
            if rank != mult {
                bad.push(format!(
                    "Z_{p} in H_{l}: stable β rank {rank}, integral {mult}"
                ));
            }
        }
    }
    let cells = Table::Q.cells();
    for l in 1..=3 {
        checked += 1;
        let got = field_cell(q.get(n, l).expect("computed"));
        if got.as_ref() != cells.get(&(n, l)) {
            bad.push(format!("Q H_{l}: {got:?}"));
        }
    }
    Ok(summary(checked, bad))
}

fn summary(checked: usize, bad: Vec<String>) -> (bool, String) {
    if bad.is_empty() {
        (true, format!("{checked} cases"))
    } else {
        (
            false,
            format!("{} of {checked} cases fail: {}", bad.len(), bad.join("; ")),
        )
    }
}

fn main() -> ExitCode {
    let mut tables = Tables {
        by_ring: BTreeMap::new(),
    };
    type Criterion<'a> = (
        &'a str,
        Box<dyn FnMut(&mut Tables) -> Result<(bool, String)>>,
    );
    let criteria: Vec<Criterion> = vec![
        (
            "tables over F_2, F_3, Q, 2 ≤ n ≤ 10, exact",
            Box::new(table_reproduction),
        ),
        (
            "integral table, 2 ≤ n ≤ 10, exact",
            Box::new(|_| integral_reproduction()),
        ),
        (
            "closed form vs direct over Q, F_2, F_3, F_5, n ≤ 10, zero mismatches",
            Box::new(two_oracles),
        ),
        (
            "∂∂ = 0 for n ≤ 12 and ββ = 0 for n ≤ 10, p ∈ {2, 3, 5}",
            Box::new(|_| chain_axioms()),
        ),
        (
            "[n]! annihilates every divisor, n ≤ 12, Q and F_2..F_7",
            Box::new(annihilation),
        ),
        (
            "cyclotomic product, gcd, congruence and splitting lemmas",
            Box::new(|_| cyclotomic_lemmas()),
        ),
        (
            "no p²-torsion, n ≤ 10, p ∈ {2, 3, 5}",
            Box::new(|_| no_p2_torsion()),
        ),
        (
            "first p-torsion at (2p + 2, 2p - 2) for p = 2, 3, 5",
            Box::new(first_torsion_location),
        ),
        (
            "q-Lucas predicate vs divisibility, i + j ≤ 64",
            Box::new(|_| qlucas()),
        ),
        (
            "stable ring matches n = 10 in dimensions 1..3",
            Box::new(stable_cross_check),
        ),
    ];
    let mut failed = 0;
    for (k, (name, mut run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = match run(&mut tables) {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        let secs = start.elapsed().as_secs_f64();
        failed += !ok as usize;
        println!(
            "{} criterion {:>2}: {name} [{detail}] ({secs:.1} s)",
            if ok { "PASS" } else { "FAIL" },
            k + 1
        );
    }
    println!("acceptance: {} of 10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
