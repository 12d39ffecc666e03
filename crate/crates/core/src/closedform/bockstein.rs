use std::collections::BTreeMap;

use super::monomial::{Factors, Kind, Monomial};
use super::presentation::Presentation;
use crate::error::{Error, Result};
use crate::exactla::field_rank;
use crate::qarith::coeff::Fp;
use crate::qarith::{split_phi, split_prime_power, CoeffRing, Poly};

/// One summand `coefficient · target` of a symbolic Bockstein image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BocksteinTerm {
    pub coefficient: Poly,
    pub target: Factors,
}

/// `ψ` in `φ_{mp^j} = φ_{mp^{j-1}}·ω + p·ψ`.
fn psi(a: u32, p: u32) -> Result<Poly> {
    let (m, j) = split_prime_power(a as u64, p as u64);
    Ok(split_phi(m, j - 1, j, p)?.1)
}

/// `β_p` as a derivation: for `p = 2`, `β x_{m2^j} = ψ·x_{m2^{j-1}}²`; for odd
/// `p`, `β x_{mp^j} = −ψ·y_{mp^j}` with the Koszul sign of the exterior
/// factors in increasing index order. `x_1`, `y_·` and `x_{m}` with `p ∤ m`
/// are cycles.
pub fn symbolic_bockstein(w: &Factors, p: u32) -> Result<Vec<BocksteinTerm>> {
    CoeffRing::prime_field(p)?;
    let mut out = Vec::new();
    let mut position = 0;
    for (&(kind, a), &e) in &w.0 {
        if kind != Kind::X || a == 1 {
            continue;
        }
        let rest = w.div(&Factors::x(a, 1)).expect("factor present");
        if p == 2 {
            if a % 2 == 0 && e % 2 == 1 {
                out.push(BocksteinTerm {
                    coefficient: psi(a, 2)?,
                    target: rest.mul(&Factors::x(a / 2, 2)),
                });
            }
        } else {
            if e > 1 {
                return Ok(Vec::new());
            }
            if a % p == 0 {
                let sign = if position % 2 == 0 { -1 } else { 1 };
                out.push(BocksteinTerm {
                    coefficient: psi(a, p)?.scale_int(sign),
                    target: rest.mul(&Factors::y(a, 1)),
                });
            }
            position += 1;
        }
    }
    Ok(out)
}

/// `β_p(β_p w) = 0` with coefficients reduced mod `p`.
pub fn symbolic_squares_to_zero(w: &Factors, p: u32) -> Result<bool> {
    let mut acc: BTreeMap<Factors, Poly> = BTreeMap::new();
    for t in symbolic_bockstein(w, p)? {
        for u in symbolic_bockstein(&t.target, p)? {
            let c = &t.coefficient * &u.coefficient;
            let e = acc
                .entry(u.target)
                .or_insert_with(|| Poly::zero(CoeffRing::Integers));
            *e = &*e + &c;
        }
    }
    Ok(acc.values().all(|c| c.reduce_mod(p).is_zero()))
}

/// `F_p`-basis `q^a·w`, `a < deg ann(w)`, of the torsion monomials in one cell.
fn cell_basis(cell: &[Monomial]) -> Vec<(usize, usize)> {
    cell.iter()
        .enumerate()
        .filter_map(|(i, m)| m.annihilator.as_ref().map(|a| (i, a.degree().unwrap_or(0))))
        .flat_map(|(i, d)| (0..d).map(move |a| (i, a)))
        .collect()
}

/// Matrix of symbolic `β_p : (n, l) → (n, l−1)` in the bases `q^a·w`.
pub fn symbolic_bockstein_matrix(pres: &Presentation, n: u32, l: u32) -> Result<Vec<Vec<u32>>> {
    let p = match pres.coeff {
        CoeffRing::PrimeField(p) => p,
        other => return Err(Error::NotAField(other)),
    };
    let all = pres.monomials_of_degree(n)?;
    let src: Vec<Monomial> = all.iter().filter(|m| m.dimension() == l).cloned().collect();
    let src_basis = cell_basis(&src);
    if l == 0 {
        return Ok(Vec::new());
    }
    let dst: Vec<Monomial> = all
        .iter()
        .filter(|m| m.dimension() == l - 1)
        .cloned()
        .collect();
    let dst_basis = cell_basis(&dst);
    let offset: BTreeMap<&Factors, usize> = {
        let mut map = BTreeMap::new();
        let mut at = 0;
        for m in &dst {
            if let Some(a) = &m.annihilator {
                map.insert(&m.factors, at);
                at += a.degree().unwrap_or(0);
            }
        }
        map
    };
    let mut mat = vec![vec![0u32; src_basis.len()]; dst_basis.len()];
    for (col, &(i, a)) in src_basis.iter().enumerate() {
        for t in symbolic_bockstein(&src[i].factors, p)? {
            let Some(&row) = offset.get(&t.target) else {
                continue;
            };
            let target = dst.iter().find(|m| m.factors == t.target).expect("indexed");
            let ann = target.annihilator.as_ref().expect("torsion target");
            let r = t.coefficient.reduce_mod(p).shift(a).rem(ann)?;
            for (b, c) in r.to_fp_vec().into_iter().enumerate() {
                mat[row + b][col] = (mat[row + b][col] + c) % p;
            }
        }
    }
    Ok(mat)
}

/// `dim ker β_l − dim im β_{l+1}` of the symbolic Bockstein at `(n, l)`.
pub fn symbolic_bockstein_homology(pres: &Presentation, n: u32, l: u32) -> Result<usize> {
    let f = Fp::new(pres.coeff.characteristic());
    let dim = cell_basis(
        &pres
            .monomials_of_degree(n)?
            .into_iter()
            .filter(|m| m.dimension() == l)
            .collect::<Vec<_>>(),
    )
    .len();
    let out = if l == 0 {
        0
    } else {
        field_rank(&f, &symbolic_bockstein_matrix(pres, n, l)?)
    };
    let inc = if l + 1 > n {
        0
    } else {
        field_rank(&f, &symbolic_bockstein_matrix(pres, n, l + 1)?)
    };
    Ok(dim - out - inc)
}
