//! Integer matrices with Hermite and Smith normal forms.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::integers::Integers;
use super::matrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

/// `D = U · A · V` with `U`, `V` unimodular and `D` diagonal with each
/// diagonal entry dividing the next.
#[derive(Debug, Clone)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl Snf {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.data[i][i].clone())
            .filter(|x| !x.is_zero())
            .collect()
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed when there are no rows.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<Self> {
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Malformed("ragged matrix rows".into()));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(data, cols).expect("rectangular literal")
    }

    pub fn diag(entries: &[BigInt]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.data[i][i] = e.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i][j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.data.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            data: if self.rows == 0 {
                vec![Vec::new(); self.cols]
            } else {
                matrix::transpose(&self.data)
            },
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::Malformed(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i][j] += a * &other.data[k][j];
                }
            }
        }
        Ok(out)
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.cols {
            return Err(Error::Malformed("column mismatch in vstack".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self::from_rows(data, self.cols)
    }

    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::Malformed("determinant of non-square matrix".into()));
        }
        // Bareiss fraction-free elimination.
        let n = self.rows;
        let mut a = self.data.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = t / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * prev })
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().is_ok_and(|d| d.abs().is_one())
    }

    /// Row-style Hermite normal form: returns `(H, U)` with `U · A = H`,
    /// `U` unimodular, `H` in echelon form with positive pivots and entries
    /// above each pivot reduced into `[0, pivot)`.
    pub fn hnf(&self) -> (IntMatrix, IntMatrix) {
        let mut h = self.data.clone();
        let mut u = Self::identity(self.rows).data;
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            for i in r + 1..self.rows {
                if h[i][c].is_zero() {
                    continue;
                }
                combine_rows(&mut h, &mut u, r, i, c);
            }
            if h[r][c].is_zero() {
                continue;
            }
            if h[r][c].is_negative() {
                negate_row(&mut h[r]);
                negate_row(&mut u[r]);
            }
            for i in 0..r {
                let q = h[i][c].div_floor(&h[r][c]);
                if !q.is_zero() {
                    sub_row_multiple(&mut h, i, r, &q);
                    sub_row_multiple(&mut u, i, r, &q);
                }
            }
            r += 1;
        }
        (
            IntMatrix {
                rows: self.rows,
                cols: self.cols,
                data: h,
            },
            IntMatrix {
                rows: self.rows,
                cols: self.rows,
                data: u,
            },
        )
    }

    /// Number of nonzero rows in the Hermite form.
    pub fn rank(&self) -> usize {
        let (h, _) = self.hnf();
        h.data.iter().filter(|r| r.iter().any(|x| !x.is_zero())).count()
    }

    /// A basis of `{ v : v · A = 0 }`, one vector per row.
    pub fn left_kernel(&self) -> IntMatrix {
        let (h, u) = self.hnf();
        let rows = (0..self.rows)
            .filter(|&i| h.data[i].iter().all(Zero::is_zero))
            .map(|i| u.data[i].clone())
            .collect();
        IntMatrix::from_rows(rows, self.rows).expect("kernel rows")
    }

    /// Nonzero rows of the Hermite form: a canonical basis of the row span.
    pub fn row_span_basis(&self) -> IntMatrix {
        let (h, _) = self.hnf();
        let rows = h
            .data
            .into_iter()
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        IntMatrix::from_rows(rows, self.cols).expect("span rows")
    }

    pub fn smith_normal_form(&self) -> Snf {
        let (m, n) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut u = Self::identity(m).data;
        let mut vt = Self::identity(n).data; // columns of V stored as rows
        let mut t = 0;
        while t < m.min(n) {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            vt.swap(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                let q = a[i][t].div_floor(&a[t][t]);
                if !q.is_zero() {
                    sub_row_multiple(&mut a, i, t, &q);
                    sub_row_multiple(&mut u, i, t, &q);
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..n {
                let q = a[t][j].div_floor(&a[t][t]);
                if !q.is_zero() {
                    for row in a.iter_mut() {
                        let s = &q * &row[t];
                        row[j] -= s;
                    }
                    sub_row_multiple(&mut vt, j, t, &q);
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            // enforce the divisibility chain
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            if let Some(i) = bad {
                add_row(&mut a, t, i);
                add_row(&mut u, t, i);
                continue;
            }
            if a[t][t].is_negative() {
                negate_row(&mut a[t]);
                negate_row(&mut u[t]);
            }
            t += 1;
        }
        Snf {
            u: IntMatrix {
                rows: m,
                cols: m,
                data: u,
            },
            d: IntMatrix {
                rows: m,
                cols: n,
                data: a,
            },
            v: IntMatrix {
                rows: n,
                cols: n,
                data: vt,
            }
            .transpose(),
        }
    }
}

/// Replaces rows `r`, `i` by a unimodular combination putting `gcd` at `(r, c)`
/// and zero at `(i, c)`.
fn combine_rows(h: &mut [Vec<BigInt>], u: &mut [Vec<BigInt>], r: usize, i: usize, c: usize) {
    let a = h[r][c].clone();
    let b = h[i][c].clone();
    let e = a.extended_gcd(&b);
    let (p, q) = (&a / &e.gcd, &b / &e.gcd);
    for m in [h, u] {
        let (x, y) = (m[r].clone(), m[i].clone());
        m[r] = x.iter().zip(&y).map(|(s, t)| &e.x * s + &e.y * t).collect();
        m[i] = x.iter().zip(&y).map(|(s, t)| &p * t - &q * s).collect();
    }
}

fn negate_row(row: &mut [BigInt]) {
    for x in row.iter_mut() {
        *x = -&*x;
    }
}

/// `row[i] -= q * row[r]`.
fn sub_row_multiple(m: &mut [Vec<BigInt>], i: usize, r: usize, q: &BigInt) {
    let src = m[r].clone();
    for (x, s) in m[i].iter_mut().zip(&src) {
        *x -= q * s;
    }
}

/// `row[t] += row[i]`.
fn add_row(m: &mut [Vec<BigInt>], t: usize, i: usize) {
    let src = m[i].clone();
    for (x, s) in m[t].iter_mut().zip(&src) {
        *x += s;
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.data {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Determinant over `Z` via the generic routine, used as a cross-check.
pub fn det_by_expansion(a: &IntMatrix) -> Result<BigInt> {
    matrix::det(&Integers, &a.data)
}
