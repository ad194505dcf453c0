//! Dense integer matrices, Smith normal form and integer linear systems.

use std::fmt;

use crate::zring::{floor_div, is_negative, Int};

#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (r, c): (usize, usize)) -> &Int {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Int {
        &mut self.data[r * self.cols + c]
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::ONE;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Int>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (c, x) in row.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<Int>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (c, col) in cols.iter().enumerate() {
            for (r, x) in col.iter().enumerate() {
                m[(r, c)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn col(&self, c: usize) -> Vec<Int> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row(&self, r: usize) -> Vec<Int> {
        self.data[r * self.cols..(r + 1) * self.cols].to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> Vec<Int> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Int::ZERO;
                for (c, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        acc += &self[(r, c)] * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].clone();
            }
        }
        out
    }

    /// `[self | other]`.
    pub fn hcat(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = IntMatrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(r, c)] = self[(r, c)].clone();
            }
            for c in 0..other.cols {
                out[(r, self.cols + c)] = other[(r, c)].clone();
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[dst] += f * row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &Int) {
        for c in 0..self.cols {
            let x = &self[(src, c)];
            if !x.is_zero() {
                let v = x * f;
                self[(dst, c)] += v;
            }
        }
    }

    /// col[dst] += f * col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &Int) {
        for r in 0..self.rows {
            let x = &self[(r, src)];
            if !x.is_zero() {
                let v = x * f;
                self[(r, dst)] += v;
            }
        }
    }

    fn neg_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -&self[(r, c)];
            self[(r, c)] = v;
        }
    }

    fn neg_col(&mut self, c: usize) {
        for r in 0..self.rows {
            let v = -&self[(r, c)];
            self[(r, c)] = v;
        }
    }
}

/// `p * a * q = diag(d_0, .., d_{r-1}, 0, ..)` with `d_i | d_{i+1}`, all positive.
#[derive(Clone, Debug)]
pub struct Smith {
    pub p: IntMatrix,
    pub p_inv: IntMatrix,
    pub q: IntMatrix,
    pub diag: Vec<Int>,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diag.len()
    }
}

pub fn smith(a: &IntMatrix) -> Smith {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut p = IntMatrix::identity(m);
    let mut p_inv = IntMatrix::identity(m);
    let mut q = IntMatrix::identity(n);
    let mut diag = Vec::new();

    // Row op row[i] += f row[t] acts on P the same way and on P^-1 as col[t] -= f col[i].
    let row_add = |d: &mut IntMatrix, p: &mut IntMatrix, pi: &mut IntMatrix, i: usize, t: usize, f: &Int| {
        d.add_row(i, t, f);
        p.add_row(i, t, f);
        pi.add_col(t, i, &-f);
    };

    for t in 0..m.min(n) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for r in t..m {
                for c in t..n {
                    let x = &d[(r, c)];
                    if x.is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some(b) => abs_lt(x, &d[b]),
                    };
                    if better {
                        best = Some((r, c));
                        if is_unit(x) {
                            break;
                        }
                    }
                }
                if best.is_some_and(|b| is_unit(&d[b])) {
                    break;
                }
            }
            let Some((r, c)) = best else {
                return Smith { p, p_inv, q, diag };
            };
            d.swap_rows(t, r);
            p.swap_rows(t, r);
            p_inv.swap_cols(t, r);
            d.swap_cols(t, c);
            q.swap_cols(t, c);

            let mut clean = true;
            let piv = d[(t, t)].clone();
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let f = -floor_div(&d[(i, t)], &piv);
                row_add(&mut d, &mut p, &mut p_inv, i, t, &f);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let f = -floor_div(&d[(t, j)], &piv);
                d.add_col(j, t, &f);
                q.add_col(j, t, &f);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&d[(i, j)] % &piv).is_zero()));
            if let Some(i) = bad {
                row_add(&mut d, &mut p, &mut p_inv, t, i, &Int::ONE);
                continue;
            }
            break;
        }
        if is_negative(&d[(t, t)]) {
            d.neg_row(t);
            p.neg_row(t);
            p_inv.neg_col(t);
        }
        diag.push(d[(t, t)].clone());
    }
    Smith { p, p_inv, q, diag }
}

fn is_unit(x: &Int) -> bool {
    x.is_one() || *x == Int::NEG_ONE
}

fn abs_lt(a: &Int, b: &Int) -> bool {
    let (a, b) = (if is_negative(a) { -a } else { a.clone() }, if is_negative(b) { -b } else { b.clone() });
    a < b
}

/// A basis of `{x : a x = 0}` over Z.
pub fn kernel(a: &IntMatrix) -> Vec<Vec<Int>> {
    let s = smith(a);
    (s.rank()..a.cols).map(|c| s.q.col(c)).collect()
}

/// Proof that `b` is not in the column lattice of `a`: with `y = u / denom`,
/// `y^T a` is integral while `y^T b` is not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonMembership {
    pub u: Vec<Int>,
    pub denom: Int,
}

impl NonMembership {
    pub fn verify(&self, a: &IntMatrix, b: &[Int]) -> bool {
        if self.denom.is_zero() || self.u.len() != a.rows() || b.len() != a.rows() {
            return false;
        }
        let ua = a.transpose().mul_vec(&self.u);
        let ub: Int = self.u.iter().zip(b).map(|(x, y)| x * y).sum();
        ua.iter().all(|x| (x % &self.denom).is_zero()) && !(ub % &self.denom).is_zero()
    }
}

/// An integer solution of `a x = b`, or a certificate that none exists.
pub fn solve(a: &IntMatrix, b: &[Int]) -> Result<Vec<Int>, NonMembership> {
    let s = smith(a);
    solve_with(&s, a.cols(), b)
}

pub fn solve_with(s: &Smith, cols: usize, b: &[Int]) -> Result<Vec<Int>, NonMembership> {
    let c = s.p.mul_vec(b);
    let mut y = vec![Int::ZERO; cols];
    for (i, ci) in c.iter().enumerate() {
        if i < s.rank() {
            let di = &s.diag[i];
            if !(ci % di).is_zero() {
                return Err(NonMembership { u: s.p.row(i), denom: di.clone() });
            }
            y[i] = ci / di;
        } else if !ci.is_zero() {
            let denom = if is_negative(ci) { -ci * Int::from(2) } else { ci * Int::from(2) };
            return Err(NonMembership { u: s.p.row(i), denom });
        }
    }
    Ok(s.q.mul_vec(&y))
}
