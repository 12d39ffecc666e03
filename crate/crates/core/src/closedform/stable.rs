use std::collections::BTreeMap;

use super::monomial::{Factors, Kind};
use crate::error::{Error, Result};
use crate::exactla::field_rank;
use crate::qarith::coeff::Fp;
use crate::qarith::CoeffRing;

/// Polynomial and exterior symbols of a stable ring, as `(index, kind, dimension, exterior)`.
fn stable_symbols(coeff: CoeffRing, lmax: u32) -> Result<Vec<(u32, Kind, u32, bool)>> {
    let mut out = Vec::new();
    match coeff {
        CoeffRing::Rationals => {}
        CoeffRing::PrimeField(2) => {
            // x_2² enters as a single polynomial symbol of dimension 2.
            out.push((2, Kind::X, 2, false));
            let mut a = 4u32;
            while a - 1 <= lmax {
                out.push((a, Kind::X, a - 1, false));
                a *= 2;
            }
        }
        CoeffRing::PrimeField(p) => {
            let mut a = 2 * p;
            while a - 2 <= lmax {
                out.push((a, Kind::Y, a - 2, false));
                out.push((a, Kind::X, a - 1, true));
                a *= p;
            }
        }
        CoeffRing::Integers => return Err(Error::NotAField(coeff)),
    }
    Ok(out)
}

/// Monomials of dimension `l` in the stable ring over a field: `Q` in
/// dimension 0; `Z_2[x_2², x_{2^i}, i > 1]`; `Z_p[y_{2p^i}, x_{2p^i}, i > 0]/(x²)`.
pub fn stable_basis(coeff: CoeffRing, l: u32) -> Result<Vec<Factors>> {
    let syms = stable_symbols(coeff, l)?;
    let mut out = Vec::new();
    fn go(
        syms: &[(u32, Kind, u32, bool)],
        at: usize,
        left: u32,
        cur: Factors,
        out: &mut Vec<Factors>,
    ) {
        if left == 0 {
            out.push(cur);
            return;
        }
        let Some(&(a, kind, d, ext)) = syms.get(at) else {
            return;
        };
        let mut e = 0;
        let mut w = cur;
        loop {
            go(syms, at + 1, left - e * d, w.clone(), out);
            e += 1;
            if e * d > left || (ext && e > 1) {
                break;
            }
            // x_2² is carried as the square of x_2.
            let step = if kind == Kind::X && a == 2 { 2 } else { 1 };
            let f = match kind {
                Kind::X => Factors::x(a, step),
                Kind::Y => Factors::y(a, step),
            };
            w = w.mul(&f);
        }
    }
    go(&syms, 0, l, Factors::one(), &mut out);
    out.sort();
    Ok(out)
}

/// `β_2 x_{2^i} = x_{2^{i-1}}²`, `β_p x_i = y_i`, `β_p y_i = 0`, as signed terms.
pub fn stable_bockstein(w: &Factors, p: u32) -> Vec<(i64, Factors)> {
    let mut out = Vec::new();
    let mut position = 0;
    for (&(kind, a), &e) in &w.0 {
        if kind != Kind::X {
            continue;
        }
        let rest = w.div(&Factors::x(a, 1)).expect("factor present");
        if p == 2 {
            if a >= 4 && e % 2 == 1 {
                out.push((1, rest.mul(&Factors::x(a / 2, 2))));
            }
        } else {
            out.push((
                if position % 2 == 0 { 1 } else { -1 },
                rest.mul(&Factors::y(a, 1)),
            ));
            position += 1;
        }
    }
    out
}

/// Number of `Z_p` summands of the stable integral homology in dimension `l`:
/// the rank of `β_p` from dimension `l + 1` onto dimension `l`.
pub fn stable_torsion_rank(p: u32, l: u32) -> Result<usize> {
    let coeff = CoeffRing::prime_field(p)?;
    let src = stable_basis(coeff, l + 1)?;
    let dst: BTreeMap<Factors, usize> = stable_basis(coeff, l)?
        .into_iter()
        .enumerate()
        .map(|(i, w)| (w, i))
        .collect();
    let f = Fp::new(p);
    let mut mat = vec![vec![0u32; src.len()]; dst.len()];
    for (j, w) in src.iter().enumerate() {
        for (s, t) in stable_bockstein(w, p) {
            if let Some(&i) = dst.get(&t) {
                mat[i][j] = f.reduce_i64(mat[i][j] as i64 + s);
            }
        }
    }
    Ok(field_rank(&f, &mat))
}

/// The stable integral ring as families of generators and relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StablePresentation {
    pub coeff: CoeffRing,
    pub generators: Vec<String>,
    pub relations: Vec<String>,
    pub indices: String,
}

pub fn stable_integral_presentation() -> StablePresentation {
    StablePresentation {
        coeff: CoeffRing::Integers,
        generators: vec![
            "y_{2p^i}".into(),
            "x_{2^j}^2".into(),
            "x_{2^i}^2 x_{2^{i_1}} ... x_{2^{i_h}}".into(),
            "y_{2p^j} x_{2p^{j_1}} ... x_{2p^{j_h}}".into(),
        ],
        relations: vec!["2 x_{2^i}".into(), "p y_{2p^j}".into(), "x_{2p^j}^2".into()],
        indices: "0 < i, i+1 < i_1 < ... < i_h, 0 < j < j_1 < ... < j_h, p odd prime; q acts as -1"
            .into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[Factors]) -> Vec<String> {
        v.iter().map(|m| m.to_string()).collect()
    }

    #[test]
    fn low_dimensions() {
        assert_eq!(
            names(&stable_basis(CoeffRing::Rationals, 0).unwrap()),
            ["1"]
        );
        assert!(stable_basis(CoeffRing::Rationals, 3).unwrap().is_empty());
        assert_eq!(
            names(&stable_basis(CoeffRing::PrimeField(2), 2).unwrap()),
            ["x2^2"]
        );
        assert_eq!(
            names(&stable_basis(CoeffRing::PrimeField(2), 3).unwrap()),
            ["x4"]
        );
        assert_eq!(
            names(&stable_basis(CoeffRing::PrimeField(3), 4).unwrap()),
            ["y6"]
        );
        assert_eq!(
            names(&stable_basis(CoeffRing::PrimeField(3), 5).unwrap()),
            ["x6"]
        );
    }

    #[test]
    fn stable_bockstein_hits_squares() {
        assert_eq!(stable_torsion_rank(2, 2).unwrap(), 1);
        assert_eq!(stable_torsion_rank(2, 3).unwrap(), 0);
        assert_eq!(stable_torsion_rank(3, 4).unwrap(), 1);
    }
}
