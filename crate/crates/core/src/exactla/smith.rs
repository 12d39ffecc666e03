use super::domain::EuclideanDomain;
use super::matrix::{identity, Matrix};
use crate::parallel;

/// Which unimodular transforms to accumulate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Transforms {
    pub u: bool,
    pub u_inv: bool,
    pub v: bool,
}

impl Transforms {
    pub const NONE: Transforms = Transforms {
        u: false,
        u_inv: false,
        v: false,
    };
    pub const ROWS: Transforms = Transforms {
        u: true,
        u_inv: true,
        v: false,
    };
    pub const ALL: Transforms = Transforms {
        u: true,
        u_inv: true,
        v: true,
    };
}

/// `U·M·V = diag(divisors)`, divisors normalized and forming a divisibility chain.
#[derive(Clone, Debug)]
pub struct SmithForm<E> {
    pub rows: usize,
    pub cols: usize,
    /// All `rank` nonzero diagonal entries, units first.
    pub divisors: Vec<E>,
    pub u: Option<Matrix<E>>,
    pub u_inv: Option<Matrix<E>>,
    pub v: Option<Matrix<E>>,
}

/// Pivot selection: always an entry of least Euclidean norm; ties go to the
/// lowest row, then column, or first to the least Markowitz fill-in cost.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PivotRule {
    #[default]
    MinNorm,
    MinNormMarkowitz,
}

impl<E> SmithForm<E> {
    pub fn rank(&self) -> usize {
        self.divisors.len()
    }
}

struct State<'a, D: EuclideanDomain> {
    d: &'a D,
    a: Vec<Vec<D::Elem>>,
    u: Option<Vec<Vec<D::Elem>>>,
    u_inv: Option<Vec<Vec<D::Elem>>>,
    v: Option<Vec<Vec<D::Elem>>>,
    rows: usize,
    cols: usize,
    pivot: PivotRule,
}

impl<'a, D: EuclideanDomain> State<'a, D> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some(u) = self.u.as_mut() {
            u.swap(i, j);
        }
        if let Some(ui) = self.u_inv.as_mut() {
            for r in ui.iter_mut() {
                r.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in self.a.iter_mut() {
            r.swap(i, j);
        }
        if let Some(v) = self.v.as_mut() {
            for r in v.iter_mut() {
                r.swap(i, j);
            }
        }
    }

    /// `row_i -= m_i · row_t` for each `(i, m_i)`; all `i > t`.
    fn row_ops(&mut self, t: usize, mults: &[(usize, D::Elem)]) {
        if mults.is_empty() {
            return;
        }
        let d = self.d;
        let apply = |m: &mut Vec<Vec<D::Elem>>, from: usize| {
            let (head, tail) = m.split_at_mut(t + 1);
            let pivot = &head[t];
            let mut targets: Vec<(&mut Vec<D::Elem>, &D::Elem)> = Vec::with_capacity(mults.len());
            let mut it = mults.iter().peekable();
            for (off, row) in tail.iter_mut().enumerate() {
                if let Some((i, c)) = it.peek() {
                    if *i == t + 1 + off {
                        targets.push((row, c));
                        it.next();
                    }
                }
            }
            parallel::for_each_mut(&mut targets, |(row, c)| {
                for j in from..pivot.len() {
                    if !d.is_zero(&pivot[j]) {
                        row[j] = d.sub_mul(&row[j], c, &pivot[j]);
                    }
                }
            });
        };
        apply(&mut self.a, t);
        if let Some(u) = self.u.as_mut() {
            apply(u, 0);
        }
        // Inverse: col_t += Σ m_i · col_i.
        if let Some(ui) = self.u_inv.as_mut() {
            parallel::for_each_mut(ui, |r| {
                let mut acc = r[t].clone();
                for (i, c) in mults {
                    if !d.is_zero(&r[*i]) {
                        acc = d.add(&acc, &d.mul(c, &r[*i]));
                    }
                }
                r[t] = acc;
            });
        }
    }

    /// `col_j -= m_j · col_t` for each `(j, m_j)`; all `j > t`.
    fn col_ops(&mut self, t: usize, mults: &[(usize, D::Elem)]) {
        if mults.is_empty() {
            return;
        }
        let d = self.d;
        let apply = |r: &mut Vec<D::Elem>| {
            if d.is_zero(&r[t]) {
                return;
            }
            let p = r[t].clone();
            for (j, c) in mults {
                r[*j] = d.sub_mul(&r[*j], c, &p);
            }
        };
        parallel::for_each_mut(&mut self.a[t..], apply);
        if let Some(v) = self.v.as_mut() {
            parallel::for_each_mut(v, apply);
        }
    }

    fn min_in_col(&self, t: usize, from: usize) -> Option<usize> {
        let d = self.d;
        (from..self.rows)
            .filter(|&i| !d.is_zero(&self.a[i][t]))
            .min_by_key(|&i| (d.norm(&self.a[i][t]), i))
    }

    fn min_in_row(&self, t: usize, from: usize) -> Option<usize> {
        let d = self.d;
        (from..self.cols)
            .filter(|&j| !d.is_zero(&self.a[t][j]))
            .min_by_key(|&j| (d.norm(&self.a[t][j]), j))
    }

    fn global_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let d = self.d;
        let markowitz = self.pivot == PivotRule::MinNormMarkowitz;
        let mut row_nnz = vec![0usize; self.rows];
        let mut col_nnz = vec![0usize; self.cols];
        if markowitz {
            for i in t..self.rows {
                for j in t..self.cols {
                    if !d.is_zero(&self.a[i][j]) {
                        row_nnz[i] += 1;
                        col_nnz[j] += 1;
                    }
                }
            }
        }
        let mut best: Option<(D::Norm, usize, usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                let x = &self.a[i][j];
                if d.is_zero(x) {
                    continue;
                }
                let n = d.norm(x);
                let cost = if markowitz {
                    (row_nnz[i] - 1) * (col_nnz[j] - 1)
                } else {
                    0
                };
                let better = match best.as_ref() {
                    None => true,
                    Some(b) => n < b.0 || (n == b.0 && cost < b.3),
                };
                if better {
                    best = Some((n, i, j, cost));
                }
            }
        }
        best.map(|(_, i, j, _)| (i, j))
    }

    /// Clears row and column `t` outside the diagonal; returns false when the
    /// remaining block is zero.
    fn pivot_step(&mut self, t: usize) -> bool {
        let Some((pi, pj)) = self.global_pivot(t) else {
            return false;
        };
        self.swap_rows(t, pi);
        self.swap_cols(t, pj);
        let d = self.d;
        loop {
            let piv = self.a[t][t].clone();
            let mults: Vec<(usize, D::Elem)> = (t + 1..self.rows)
                .filter(|&i| !d.is_zero(&self.a[i][t]))
                .map(|i| (i, d.div_rem(&self.a[i][t], &piv).0))
                .filter(|(_, q)| !d.is_zero(q))
                .collect();
            self.row_ops(t, &mults);
            if let Some(i) = self.min_in_col(t, t + 1) {
                self.swap_rows(t, i);
                continue;
            }
            let piv = self.a[t][t].clone();
            let mults: Vec<(usize, D::Elem)> = (t + 1..self.cols)
                .filter(|&j| !d.is_zero(&self.a[t][j]))
                .map(|j| (j, d.div_rem(&self.a[t][j], &piv).0))
                .filter(|(_, q)| !d.is_zero(q))
                .collect();
            self.col_ops(t, &mults);
            if let Some(j) = self.min_in_row(t, t + 1) {
                self.swap_cols(t, j);
                continue;
            }
            return true;
        }
    }

    /// Replaces `(a_ii, a_jj)` by `(gcd, lcm)`.
    fn gcd_lcm(&mut self, i: usize, j: usize) {
        let d = self.d;
        let a = self.a[i][i].clone();
        let b = self.a[j][j].clone();
        let (g, s, t) = d.ext_gcd(&a, &b);
        let ag = d.exact_div(&a, &g).expect("gcd divides");
        let bg = d.exact_div(&b, &g).expect("gcd divides");
        self.a[i][i] = g;
        self.a[j][j] = d.mul(&ag, &b);
        // Rows: [[s, t], [-b/g, a/g]].
        if let Some(u) = self.u.as_mut() {
            let (ri, rj) = (u[i].clone(), u[j].clone());
            for k in 0..ri.len() {
                u[i][k] = d.add(&d.mul(&s, &ri[k]), &d.mul(&t, &rj[k]));
                u[j][k] = d.sub(&d.mul(&ag, &rj[k]), &d.mul(&bg, &ri[k]));
            }
        }
        // Inverse rows: [[a/g, -t], [b/g, s]] acting on columns.
        if let Some(ui) = self.u_inv.as_mut() {
            for r in ui.iter_mut() {
                let (ci, cj) = (r[i].clone(), r[j].clone());
                r[i] = d.add(&d.mul(&ag, &ci), &d.mul(&bg, &cj));
                r[j] = d.sub(&d.mul(&s, &cj), &d.mul(&t, &ci));
            }
        }
        // Columns: [[1, -t b/g], [1, s a/g]].
        if let Some(v) = self.v.as_mut() {
            let tb = d.mul(&t, &bg);
            let sa = d.mul(&s, &ag);
            for r in v.iter_mut() {
                let (ci, cj) = (r[i].clone(), r[j].clone());
                r[i] = d.add(&ci, &cj);
                r[j] = d.sub(&d.mul(&sa, &cj), &d.mul(&tb, &ci));
            }
        }
    }

    fn scale_unit(&mut self, i: usize, unit: &D::Elem) {
        let d = self.d;
        let inv = d.inv_unit(unit);
        if let Some(u) = self.u.as_mut() {
            for x in u[i].iter_mut() {
                *x = d.mul(&inv, x);
            }
        }
        if let Some(ui) = self.u_inv.as_mut() {
            for r in ui.iter_mut() {
                r[i] = d.mul(unit, &r[i]);
            }
        }
    }
}

/// Smith normal form by Euclidean elimination with minimal-norm pivots
/// (ties broken by lowest row, then column).
pub fn smith_normal_form<D: EuclideanDomain>(
    d: &D,
    m: &Matrix<D::Elem>,
    want: Transforms,
) -> SmithForm<D::Elem> {
    smith_normal_form_with(d, m, want, PivotRule::MinNorm)
}

pub fn smith_normal_form_with<D: EuclideanDomain>(
    d: &D,
    m: &Matrix<D::Elem>,
    want: Transforms,
    pivot: PivotRule,
) -> SmithForm<D::Elem> {
    let mut st = State {
        d,
        a: m.data.clone(),
        u: want.u.then(|| identity(d, m.rows).data),
        u_inv: want.u_inv.then(|| identity(d, m.rows).data),
        v: want.v.then(|| identity(d, m.cols).data),
        rows: m.rows,
        cols: m.cols,
        pivot,
    };
    let mut rank = 0;
    while rank < m.rows.min(m.cols) && st.pivot_step(rank) {
        rank += 1;
    }
    // Order by norm, then enforce the chain pairwise.
    for pos in 0..rank {
        let k = (pos..rank)
            .min_by_key(|&k| (d.norm(&st.a[k][k]), k))
            .unwrap();
        st.swap_rows(pos, k);
        st.swap_cols(pos, k);
    }
    for i in 0..rank {
        for j in i + 1..rank {
            if !d.divides(&st.a[i][i], &st.a[j][j]) {
                st.gcd_lcm(i, j);
            }
        }
    }
    let mut divisors = Vec::with_capacity(rank);
    for i in 0..rank {
        let (nrm, unit) = d.normalize(&st.a[i][i]);
        if unit != d.one() {
            st.scale_unit(i, &unit);
        }
        st.a[i][i] = nrm.clone();
        divisors.push(nrm);
    }
    let wrap = |x: Option<Vec<Vec<D::Elem>>>, r: usize, c: usize| {
        x.map(|data| Matrix {
            rows: r,
            cols: c,
            data,
        })
    };
    SmithForm {
        rows: m.rows,
        cols: m.cols,
        divisors,
        u: wrap(st.u, m.rows, m.rows),
        u_inv: wrap(st.u_inv, m.rows, m.rows),
        v: wrap(st.v, m.cols, m.cols),
    }
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;

    use super::*;
    use crate::exactla::domain::{Integers, PolyRing};
    use crate::exactla::matrix::mat_mul;
    use crate::qarith::coeff::Fp;

    fn int_matrix(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix {
            rows: rows.len(),
            cols: rows[0].len(),
            data: rows
                .iter()
                .map(|r| r.iter().map(|&x| x.into()).collect())
                .collect(),
        }
    }

    fn diagonal<D: EuclideanDomain>(d: &D, s: &SmithForm<D::Elem>) -> Matrix<D::Elem> {
        let mut m = Matrix::filled(s.rows, s.cols, d.zero());
        for (i, x) in s.divisors.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    #[test]
    fn integer_example() {
        let m = int_matrix(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_normal_form(&Integers, &m, Transforms::ALL);
        let want: Vec<BigInt> = [2, 6, 12].iter().map(|&x| x.into()).collect();
        assert_eq!(s.divisors, want);
        let (u, v) = (s.u.as_ref().unwrap(), s.v.as_ref().unwrap());
        assert_eq!(
            mat_mul(&Integers, &mat_mul(&Integers, u, &m), v),
            diagonal(&Integers, &s)
        );
        let u_inv = s.u_inv.as_ref().unwrap();
        assert_eq!(mat_mul(&Integers, u, u_inv), identity(&Integers, 3));
    }

    #[test]
    fn rank_deficient_and_empty() {
        let m = int_matrix(&[&[1, 2], &[2, 4]]);
        assert_eq!(smith_normal_form(&Integers, &m, Transforms::NONE).rank(), 1);
        let e: Matrix<BigInt> = Matrix {
            rows: 0,
            cols: 3,
            data: Vec::new(),
        };
        assert_eq!(smith_normal_form(&Integers, &e, Transforms::ALL).rank(), 0);
    }

    #[test]
    fn polynomial_example_over_f2() {
        // [[1+q, 0], [0, 1+q^2]] over F_2: 1+q^2 = (1+q)^2, so the chain is (1+q, (1+q)^2).
        let r = PolyRing::new(Fp::new(2));
        let m = Matrix {
            rows: 2,
            cols: 2,
            data: vec![vec![vec![1, 1], vec![]], vec![vec![], vec![1, 0, 1]]],
        };
        for pivot in [PivotRule::MinNorm, PivotRule::MinNormMarkowitz] {
            let s = smith_normal_form_with(&r, &m, Transforms::ALL, pivot);
            assert_eq!(s.divisors, vec![vec![1, 1], vec![1, 0, 1]]);
            let (u, v) = (s.u.as_ref().unwrap(), s.v.as_ref().unwrap());
            assert_eq!(mat_mul(&r, &mat_mul(&r, u, &m), v), diagonal(&r, &s));
        }
    }
}
