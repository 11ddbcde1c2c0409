//! Rebuilding a based pair from its coefficients `a_0, …, a_n`.
//!
//! `Z_i` is the matrix of `ζ_i` on `I` with `Z_i(r, b)` the `r`-th coordinate
//! of `ζ_i b_b` (1-based, `b_{n-1} = x`, `b_n = y`). The last two rows are
//! fixed by the normalization and the `a_i`. Commutativity of the `Z_i` in
//! the `x` and `y` rows then gives, for `ℓ ≥ 2` and `1 ≤ r ≤ n-2`,
//!
//! ```text
//! row_r(Z_ℓ) = row_{r-1}(Z_{ℓ-1}) - a_{n-r+1} row_n(Z_{ℓ-1}) + a_ℓ row_n(Z_{n-r})
//! ```
//!
//! with `row_0 = 0`, and `row_{n-ℓ}(Z_1) = a_0 row_{n-1}(Z_ℓ) + a_1 row_n(Z_ℓ)`.

use super::{BasedPair, BinaryPair};
use crate::error::{Error, Result};
use crate::exactalg::matrix::{self, Mat};
use crate::exactalg::ring::Ring;
use crate::ringmod::{ActionTable, BasisKind, MultTable};

/// The `x` and `y` rows of every `Z_ℓ`, `1 ≤ ℓ ≤ n-1`, as 0-based rows
/// `n-2` and `n-1`.
fn seed_rows<R: Ring>(ring: &R, a: &[R::Elem]) -> Vec<[Vec<R::Elem>; 2]> {
    let n = a.len() - 1;
    (1..n)
        .map(|l| {
            let mut xr = ring.zero_vec(n);
            let mut yr = ring.zero_vec(n);
            for j in 1..=n - 2 {
                if l + j == n - 1 {
                    xr[j - 1] = ring.one();
                }
                if l + j == n {
                    yr[j - 1] = ring.one();
                }
            }
            xr[n - 1] = ring.neg(&a[l + 1]);
            if l == 1 {
                yr[n - 2] = a[0].clone();
                yr[n - 1] = a[1].clone();
            }
            [xr, yr]
        })
        .collect()
}

/// Builds all `Z_ℓ` (index 0 is the identity) from the coefficients.
pub fn action_matrices<R: Ring>(ring: &R, a: &[R::Elem]) -> Result<Vec<Mat<R::Elem>>> {
    let n = a.len().checked_sub(1).filter(|&n| n >= 3).ok_or_else(|| {
        Error::Precondition(format!("pairs need n ≥ 3, got {} coefficients", a.len()))
    })?;
    let seed = seed_rows(ring, a);
    // rows[ℓ][r] for 1-based r, index 0 unused
    let mut z: Vec<Vec<Vec<R::Elem>>> = vec![vec![ring.zero_vec(n); n + 1]; n];
    for l in 1..n {
        z[l][n - 1] = seed[l - 1][0].clone();
        z[l][n] = seed[l - 1][1].clone();
    }
    for l in 2..n {
        let mut row = ring.vec_scale(&a[0], &z[l][n - 1]);
        ring.vec_axpy(&mut row, &a[1], &z[l][n]);
        z[1][n - l] = row;
    }
    for l in 2..n {
        for r in 1..=n - 2 {
            let mut row = z[l - 1][r - 1].clone();
            ring.vec_axpy(&mut row, &ring.neg(&a[n - r + 1]), &z[l - 1][n]);
            let other = z[n - r][n].clone();
            ring.vec_axpy(&mut row, &a[l], &other);
            z[l][r] = row;
        }
    }
    let mut out = vec![matrix::identity(ring, n)];
    out.extend(z.into_iter().skip(1).map(|rows| rows[1..].to_vec()));
    Ok(out)
}

/// Position `(row, col)` (0-based) where `Z_k` has a 1 and every other
/// `Z_j` has a 0.
fn marker(n: usize, k: usize) -> (usize, usize) {
    match k {
        0 => (n - 2, n - 2),
        k if k <= n - 2 => (n - 2, n - 2 - k),
        _ => (n - 1, 0),
    }
}

/// The based pair with coefficients `a`, rebuilt from the `Z_i` alone.
pub fn reconstruct_from_coefficients<R: Ring>(ring: &R, a: &[R::Elem]) -> Result<BasedPair<R>> {
    let z = action_matrices(ring, a)?;
    let n = a.len() - 1;
    for i in 1..n {
        for l in i + 1..n {
            let p = matrix::mat_mul(ring, &z[i], &z[l]);
            let q = matrix::mat_mul(ring, &z[l], &z[i]);
            if !matrix::mat_eq(ring, &p, &q) {
                return Err(Error::Inconsistent(format!("Z_{i} and Z_{l} do not commute")));
            }
        }
    }
    let mut c = Vec::with_capacity(n);
    for i in 0..n {
        let mut m = Vec::with_capacity(n);
        for j in 0..n {
            let p = matrix::mat_mul(ring, &z[i], &z[j]);
            let coords: Vec<R::Elem> = (0..n)
                .map(|k| {
                    let (r, s) = marker(n, k);
                    p[r][s].clone()
                })
                .collect();
            let mut rebuilt = matrix::zeros(ring, n, n);
            for (k, ck) in coords.iter().enumerate() {
                for (dst, src) in rebuilt.iter_mut().zip(&z[k]) {
                    ring.vec_axpy(dst, ck, src);
                }
            }
            if !matrix::mat_eq(ring, &rebuilt, &p) {
                return Err(Error::Inconsistent(format!(
                    "ζ_{i} ζ_{j} is not a combination of the ζ_k"
                )));
            }
            m.push(coords);
        }
        c.push(m);
    }
    let table = MultTable::from_full(ring.clone(), c)?;
    // d[i][s][t] = Z_i(t, s)
    let d = z.iter().map(matrix::transpose).collect();
    let module = ActionTable::from_full(ring.clone(), BasisKind::Standard(n as i32 - 3), -1, d)?;
    let pair = BinaryPair::new(table, module, -1)?;
    Ok(BasedPair {
        pair,
        a: a.to_vec(),
    })
}
