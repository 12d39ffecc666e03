use std::collections::BTreeSet;

use super::monomial::{ExponentCap, Factors, GeneratorSymbol, Monomial};
use crate::error::{Error, Result};
use crate::qarith::{cyclotomic_in, split_prime_power, CoeffRing, Poly};

/// `relation · monomial = 0` applies to every multiple of `monomial`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub monomial: Factors,
    pub polynomial: Poly,
}

/// Generators (each a product of symbols) and relations of the closed form,
/// truncated at degree `nmax`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub coeff: CoeffRing,
    pub nmax: u32,
    pub generators: Vec<Factors>,
    pub relations: Vec<Relation>,
}

/// Strictly increasing exponent chains `lo ≤ j_1 < j_2 < …` (at least one
/// term) with `Σ base·p^{j_t} ≤ budget`, as the indices `base·p^{j_t}`.
fn tails(base: u32, p: u32, lo: u32, budget: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(base: u64, p: u64, j: u32, budget: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let idx = base * p.pow(j);
        if idx > budget {
            return;
        }
        cur.push(idx as u32);
        out.push(cur.clone());
        go(base, p, j + 1, budget - idx, cur, out);
        cur.pop();
        go(base, p, j + 1, budget, cur, out);
    }
    go(base as u64, p as u64, lo, budget as u64, &mut cur, &mut out);
    out
}

fn with_tail(head: Factors, tail: &[u32]) -> Factors {
    tail.iter().fold(head, |acc, &i| acc.mul(&Factors::x(i, 1)))
}

fn phi(m: u32, ring: CoeffRing) -> Poly {
    cyclotomic_in(m as u64, ring)
}

fn odd_parts(n: u32) -> impl Iterator<Item = u32> {
    (3..=n).step_by(2)
}

impl Presentation {
    pub fn new(coeff: CoeffRing, nmax: u32) -> Result<Self> {
        let mut g = vec![Factors::x(1, 1)];
        let mut r = Vec::new();
        let n = nmax;
        match coeff {
            CoeffRing::Integers => return Err(Error::NotAField(coeff)),
            CoeffRing::Rationals => {
                r.push(Relation {
                    monomial: Factors::x(1, 2),
                    polynomial: phi(2, coeff),
                });
                for m in 3..=n {
                    g.push(Factors::y(m, 1));
                    r.push(Relation {
                        monomial: Factors::y(m, 1),
                        polynomial: phi(m, coeff),
                    });
                }
            }
            CoeffRing::PrimeField(2) => {
                // Families x_{M 2^i}² x_{M 2^{i_1}} ⋯ with M = 1 or M odd.
                for m in std::iter::once(1).chain(odd_parts(n)) {
                    let mut i = 0;
                    while 2 * m * (1 << i) <= n {
                        let b = m << i;
                        let sq = Factors::x(b, 2);
                        if m > 1 || i > 0 {
                            g.push(sq.clone());
                        }
                        let pw = if m == 1 {
                            phi(2, coeff).pow(1 << i)
                        } else {
                            phi(m, coeff).pow(1 << i)
                        };
                        r.push(Relation {
                            monomial: sq.clone(),
                            polynomial: pw,
                        });
                        for t in tails(m, 2, i + 2, n - 2 * b) {
                            g.push(with_tail(sq.clone(), &t));
                        }
                        i += 1;
                    }
                }
                for m in odd_parts(n) {
                    g.push(Factors::y(m, 1));
                    r.push(Relation {
                        monomial: Factors::y(m, 1),
                        polynomial: phi(m, coeff),
                    });
                    for t in tails(m, 2, 1, n - m) {
                        g.push(with_tail(Factors::y(m, 1), &t));
                    }
                }
            }
            CoeffRing::PrimeField(p) => {
                r.push(Relation {
                    monomial: Factors::x(1, 2),
                    polynomial: phi(2, coeff),
                });
                if n >= 2 {
                    for t in tails(2, p, 1, n - 2) {
                        g.push(with_tail(Factors::x(1, 2), &t));
                    }
                }
                for k in 3..=n {
                    g.push(Factors::y(k, 1));
                    r.push(Relation {
                        monomial: Factors::y(k, 1),
                        polynomial: phi(k, coeff),
                    });
                    let (m, j) = split_prime_power(k as u64, p as u64);
                    for t in tails(m as u32, p, j + 1, n - k) {
                        g.push(with_tail(Factors::y(k, 1), &t));
                    }
                }
            }
        }
        g.sort();
        g.dedup();
        Ok(Presentation {
            coeff,
            nmax,
            generators: g,
            relations: r,
        })
    }

    fn admissible(&self, w: &Factors) -> bool {
        w.0.iter().all(|((k, i), e)| {
            GeneratorSymbol::new(self.coeff, *k, *i).cap != ExponentCap::Exterior || *e <= 1
        })
    }

    /// gcd of the relation polynomials whose monomial divides `w`; `None` when
    /// no relation applies.
    pub fn annihilator(&self, w: &Factors) -> Result<Option<Poly>> {
        let mut acc: Option<Poly> = None;
        for rel in self.relations.iter().filter(|r| r.monomial.divides(w)) {
            acc = Some(match acc {
                None => rel.polynomial.clone(),
                Some(a) => a.gcd(&rel.polynomial)?,
            });
        }
        Ok(acc)
    }

    /// All basis monomials of degree exactly `n`, ordered by dimension then factors.
    pub fn monomials_of_degree(&self, n: u32) -> Result<Vec<Monomial>> {
        if n > self.nmax {
            return Err(Error::InvalidArgument(format!(
                "degree {n} beyond presentation bound {}",
                self.nmax
            )));
        }
        let mut products = BTreeSet::new();
        let gens: Vec<(u32, &Factors)> = self.generators.iter().map(|g| (g.degree(), g)).collect();
        fn go(
            gens: &[(u32, &Factors)],
            from: usize,
            left: u32,
            cur: Factors,
            out: &mut BTreeSet<Factors>,
        ) {
            if left == 0 {
                out.insert(cur);
                return;
            }
            for (idx, (d, g)) in gens.iter().enumerate().skip(from) {
                if *d <= left {
                    go(gens, idx, left - d, cur.mul(g), out);
                }
            }
        }
        go(&gens, 0, n, Factors::one(), &mut products);
        let mut out = Vec::new();
        for w in products {
            if !self.admissible(&w) {
                continue;
            }
            let ann = self.annihilator(&w)?;
            if ann.as_ref().is_some_and(|a| a.is_unit()) {
                continue;
            }
            out.push(Monomial {
                coeff: self.coeff,
                factors: w,
                annihilator: ann,
            });
        }
        out.sort_by(|a, b| (a.dimension(), &a.factors).cmp(&(b.dimension(), &b.factors)));
        Ok(out)
    }
}

/// Monomials of degree `n` and dimension `l` with nonunit annihilator (or free).
pub fn enumerate_basis(coeff: CoeffRing, n: u32, l: u32) -> Result<Vec<Monomial>> {
    let pres = Presentation::new(coeff, n)?;
    Ok(pres
        .monomials_of_degree(n)?
        .into_iter()
        .filter(|m| m.dimension() == l)
        .collect())
}
