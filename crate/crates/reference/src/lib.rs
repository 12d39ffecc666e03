//! The four published tables of `H_l(Br(n))` for `2 ≤ n ≤ 10`, as text in
//! the `braidq table` layout and as parsed cells.

use std::collections::BTreeMap;

/// One published table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Table {
    /// `K = F_2`.
    Fp2,
    /// `K = F_3`.
    Fp3,
    /// `K = Q`.
    Q,
    /// Constant coefficients on the Milnor fiber, i.e. `K = Z`.
    Z,
}

/// A parsed cell. Field cells list `(m, e)` once per summand `K[q]/φ_m^e`;
/// integral cells give the free rank and `(p, mult)` for `Z_p^mult`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Field(Vec<(u64, u32)>),
    Integral { free: u64, torsion: Vec<(u32, u64)> },
}

pub const NMAX: usize = 10;

impl Table {
    pub const ALL: [Table; 4] = [Table::Fp2, Table::Fp3, Table::Q, Table::Z];

    /// Coefficient tag accepted by `braidq table --coeff`.
    pub fn coeff_tag(self) -> &'static str {
        match self {
            Table::Fp2 => "fp:2",
            Table::Fp3 => "fp:3",
            Table::Q => "q",
            Table::Z => "z",
        }
    }

    /// The table as `braidq table --nmax 10` renders it.
    pub fn text(self) -> &'static str {
        match self {
            Table::Fp2 => include_str!("../tables/table1_fp2.txt"),
            Table::Fp3 => include_str!("../tables/table2_fp3.txt"),
            Table::Q => include_str!("../tables/table3_q.txt"),
            Table::Z => include_str!("../tables/table4_z.txt"),
        }
    }

    /// Cells keyed by `(n, l)` for `2 ≤ n ≤ 10`, `0 ≤ l ≤ 8`.
    pub fn cells(self) -> BTreeMap<(usize, usize), Cell> {
        let mut lines = self.text().lines().skip(1);
        let header: Vec<usize> = lines
            .next()
            .expect("header row")
            .split_whitespace()
            .skip(1)
            .map(|n| n.parse().expect("degree"))
            .collect();
        let mut out = BTreeMap::new();
        for line in lines {
            let (label, rest) = line.split_once(' ').expect("row label");
            let l: usize = label
                .strip_prefix("H_")
                .expect("H_l")
                .parse()
                .expect("index");
            for (n, cell) in header.iter().zip(split_cells(rest, header.len())) {
                out.insert((*n, l), parse_cell(self, &cell));
            }
        }
        out
    }
}

/// Columns are separated by two or more spaces; summands by " ⊕ ".
fn split_cells(rest: &str, count: usize) -> Vec<String> {
    let mut cells: Vec<String> = rest
        .split("  ")
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect();
    cells.resize(count, ".".into());
    cells
}

fn split_power(s: &str) -> (&str, u64) {
    match s.split_once('^') {
        Some((b, e)) => (b, e.parse().expect("exponent")),
        None => (s, 1),
    }
}

fn parse_cell(table: Table, s: &str) -> Cell {
    let parts: Vec<&str> = if s == "." {
        Vec::new()
    } else {
        s.split(" ⊕ ").collect()
    };
    if table == Table::Z {
        let mut free = 0;
        let mut torsion = Vec::new();
        for part in parts {
            let (base, e) = split_power(part);
            match base.strip_prefix("Z_") {
                Some(p) => torsion.push((p.parse().expect("prime"), e)),
                None => {
                    assert_eq!(base, "Z", "integral summand {part}");
                    free += e;
                }
            }
        }
        torsion.sort_unstable();
        Cell::Integral { free, torsion }
    } else {
        let mut summands: Vec<(u64, u32)> = parts
            .into_iter()
            .map(|part| {
                let (base, e) = split_power(part);
                let m = base
                    .strip_prefix("φ_")
                    .expect("cyclotomic summand")
                    .parse()
                    .expect("label");
                (m, e as u32)
            })
            .collect();
        summands.sort_unstable();
        Cell::Field(summands)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_table_has_all_cells() {
        for t in Table::ALL {
            assert_eq!(t.cells().len(), 9 * 9, "{t:?}");
        }
    }

    #[test]
    fn sample_cells() {
        assert_eq!(Table::Fp2.cells()[&(8, 6)], Cell::Field(vec![(2, 4)]));
        assert_eq!(
            Table::Fp2.cells()[&(6, 2)],
            Cell::Field(vec![(2, 1), (3, 1)])
        );
        assert_eq!(Table::Q.cells()[&(8, 6)], Cell::Field(vec![(8, 1)]));
        assert_eq!(Table::Q.cells()[&(5, 0)], Cell::Field(vec![(2, 1)]));
        assert_eq!(Table::Q.cells()[&(2, 5)], Cell::Field(vec![]));
        assert_eq!(
            Table::Z.cells()[&(6, 2)],
            Cell::Integral {
                free: 2,
                torsion: vec![(2, 1)]
            }
        );
        assert_eq!(
            Table::Z.cells()[&(10, 5)],
            Cell::Integral {
                free: 0,
                torsion: vec![(2, 2)]
            }
        );
        assert_eq!(
            Table::Z.cells()[&(10, 4)],
            Cell::Integral {
                free: 0,
                torsion: vec![(2, 1), (3, 1)]
            }
        );
    }
}
