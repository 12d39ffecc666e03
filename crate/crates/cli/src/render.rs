//! Text, CSV and JSON renderings of homology tables.

use braidq::homology::{integral_to_json, HomologyGroup, HomologyTable, IntegralGroup};
use braidq::qarith::CoeffRing;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Style {
    pub ascii: bool,
}

impl Style {
    fn plus(&self) -> &'static str {
        if self.ascii {
            " + "
        } else {
            " ⊕ "
        }
    }

    fn phi(&self) -> &'static str {
        if self.ascii {
            "phi_"
        } else {
            "φ_"
        }
    }
}

fn power(base: String, e: u64) -> String {
    if e == 1 {
        base
    } else {
        format!("{base}^{e}")
    }
}

fn ring_symbol(coeff: CoeffRing) -> String {
    match coeff {
        CoeffRing::Rationals => "Q".into(),
        CoeffRing::PrimeField(p) => format!("Z_{p}"),
        CoeffRing::Integers => "Z".into(),
    }
}

/// `φ_2 ⊕ φ_3`, `φ_2^4`; empty groups are ".".
pub fn group_cell(g: &HomologyGroup, style: Style) -> String {
    let mut parts = Vec::new();
    for s in &g.torsion.summands {
        for _ in 0..s.mult {
            parts.push(power(format!("{}{}", style.phi(), s.m), s.e as u64));
        }
    }
    if g.free_rank > 0 {
        parts.push(power(
            format!("{}[q^±1]", ring_symbol(g.coeff)),
            g.free_rank as u64,
        ));
    }
    if parts.is_empty() {
        ".".into()
    } else {
        parts.join(style.plus())
    }
}

/// `Z_2 ⊕ Z^2`: torsion summands first, then the free part.
pub fn integral_cell(g: &IntegralGroup, style: Style) -> String {
    let mut parts: Vec<String> = g
        .torsion
        .iter()
        .map(|t| power(format!("Z_{}", t.p), t.mult))
        .collect();
    if g.free_rank > 0 {
        parts.push(power("Z".into(), g.free_rank));
    }
    if parts.is_empty() {
        ".".into()
    } else {
        parts.join(style.plus())
    }
}

fn caption(coeff: CoeffRing) -> String {
    match coeff {
        CoeffRing::Integers => "H_*(F_1(n); Z)".into(),
        c => format!("H_*(Br(n); {}[q^±1])", ring_symbol(c)),
    }
}

/// Rows `H_0 … H_{nmax-2}`, columns `n = 2 … nmax`, left-aligned cells.
fn grid(coeff: CoeffRing, nmax: usize, cell: impl Fn(usize, usize) -> String) -> String {
    let ns: Vec<usize> = (2..=nmax).collect();
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["n".to_string()];
    header.extend(ns.iter().map(|n| n.to_string()));
    rows.push(header);
    for l in 0..=nmax.saturating_sub(2) {
        let mut row = vec![format!("H_{l}")];
        row.extend(
            ns.iter()
                .map(|&n| if l <= n { cell(n, l) } else { ".".into() }),
        );
        rows.push(row);
    }
    let cols = rows[0].len();
    let width: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = format!("{}\n", caption(coeff));
    for r in &rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s}{}", " ".repeat(width[c] - s.chars().count())))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn table_text(t: &HomologyTable, style: Style) -> String {
    grid(t.coeff, t.nmax, |n, l| {
        group_cell(t.get(n, l).expect("computed"), style)
    })
}

pub fn integral_text(t: &[Vec<IntegralGroup>], style: Style) -> String {
    grid(CoeffRing::Integers, t.len() - 1, |n, l| {
        integral_cell(&t[n][l], style)
    })
}

pub fn table_csv(t: &HomologyTable) -> String {
    let mut out = String::from("coeff,n,l,free_rank,torsion\n");
    for (n, d) in t.degrees.range(2..) {
        for g in &d.groups {
            out.push_str(&format!(
                "{},{n},{},{},{}\n",
                t.coeff.tag(),
                g.l,
                g.free_rank,
                summands_csv(
                    g.torsion
                        .summands
                        .iter()
                        .map(|s| format!("{}^{}x{}", s.m, s.e, s.mult))
                )
            ));
        }
    }
    out
}

pub fn integral_csv(t: &[Vec<IntegralGroup>]) -> String {
    let mut out = String::from("coeff,n,l,free_rank,torsion\n");
    for (n, groups) in t.iter().enumerate().skip(2) {
        for g in groups {
            out.push_str(&format!(
                "z,{n},{},{},{}\n",
                g.l,
                g.free_rank,
                summands_csv(g.torsion.iter().map(|s| format!("{}x{}", s.p, s.mult)))
            ));
        }
    }
    out
}

fn summands_csv(it: impl Iterator<Item = String>) -> String {
    it.collect::<Vec<_>>().join(";")
}

/// A JSON array of the per-degree records for `n = 2 … nmax`.
pub fn table_json(t: &HomologyTable) -> String {
    let items: Vec<String> = t.degrees.range(2..).map(|(_, d)| d.to_json()).collect();
    format!("[{}]\n", items.join(",\n"))
}

pub fn integral_json(t: &[Vec<IntegralGroup>]) -> String {
    let items: Vec<String> = t
        .iter()
        .enumerate()
        .skip(2)
        .map(|(n, g)| integral_to_json(n, g))
        .collect();
    format!("[{}]\n", items.join(",\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use braidq::exactla::CyclotomicTorsion;
    use braidq::homology::PrimeTorsion;

    #[test]
    fn cells() {
        let g = HomologyGroup {
            n: 6,
            l: 2,
            coeff: CoeffRing::PrimeField(2),
            free_rank: 0,
            torsion: CyclotomicTorsion::from_pairs([(2, 1), (3, 1)]),
        };
        assert_eq!(group_cell(&g, Style { ascii: false }), "φ_2 ⊕ φ_3");
        assert_eq!(group_cell(&g, Style { ascii: true }), "phi_2 + phi_3");
        let z = IntegralGroup {
            n: 6,
            l: 2,
            free_rank: 2,
            torsion: vec![PrimeTorsion { p: 2, mult: 1 }],
        };
        assert_eq!(integral_cell(&z, Style { ascii: false }), "Z_2 ⊕ Z^2");
        let e = IntegralGroup {
            n: 6,
            l: 5,
            free_rank: 0,
            torsion: vec![],
        };
        assert_eq!(integral_cell(&e, Style { ascii: false }), ".");
    }
}
