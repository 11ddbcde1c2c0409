//! Dense matrices over an arbitrary context, stored as `Vec` of rows.
//!
//! Determinants use division-free cofactor expansion memoized over column
//! subsets, so they work over any commutative ring including `Z/m` and
//! polynomial rings.

use std::collections::HashMap;

use super::ring::Ring;
use crate::error::{Error, Result};

pub type Mat<E> = Vec<Vec<E>>;

pub fn identity<R: Ring>(ring: &R, n: usize) -> Mat<R::Elem> {
    (0..n).map(|i| ring.unit_vec(n, i)).collect()
}

pub fn zeros<R: Ring>(ring: &R, rows: usize, cols: usize) -> Mat<R::Elem> {
    vec![ring.zero_vec(cols); rows]
}

pub fn transpose<E: Clone>(a: &Mat<E>) -> Mat<E> {
    if a.is_empty() {
        return Vec::new();
    }
    (0..a[0].len())
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

pub fn mat_mul<R: Ring>(ring: &R, a: &Mat<R::Elem>, b: &Mat<R::Elem>) -> Mat<R::Elem> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            let mut out = ring.zero_vec(cols);
            for (x, brow) in row.iter().zip(b) {
                ring.vec_axpy(&mut out, x, brow);
            }
            out
        })
        .collect()
}

/// Row vector times matrix.
pub fn vec_mat<R: Ring>(ring: &R, v: &[R::Elem], a: &Mat<R::Elem>) -> Vec<R::Elem> {
    let cols = a.first().map_or(0, Vec::len);
    let mut out = ring.zero_vec(cols);
    for (x, row) in v.iter().zip(a) {
        ring.vec_axpy(&mut out, x, row);
    }
    out
}

pub fn mat_eq<R: Ring>(ring: &R, a: &Mat<R::Elem>, b: &Mat<R::Elem>) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| ring.vec_eq(x, y))
}

pub fn is_identity<R: Ring>(ring: &R, a: &Mat<R::Elem>) -> bool {
    mat_eq(ring, a, &identity(ring, a.len()))
}

pub fn map_mat<E, F, T>(a: &Mat<E>, f: F) -> Mat<T>
where
    F: Fn(&E) -> T,
{
    a.iter().map(|row| row.iter().map(&f).collect()).collect()
}

fn check_square<E>(a: &Mat<E>) -> Result<usize> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::Malformed("matrix is not square".into()));
    }
    if n > 24 {
        return Err(Error::Unsupported(format!("determinant of size {n}")));
    }
    Ok(n)
}

/// Determinant by expansion along rows, memoized on the set of unused columns.
pub fn det<R: Ring>(ring: &R, a: &Mat<R::Elem>) -> Result<R::Elem> {
    let n = check_square(a)?;
    if n == 0 {
        return Ok(ring.one());
    }
    // memo[mask] = det of rows (n - |mask|)..n restricted to columns in mask
    let mut memo: HashMap<u32, R::Elem> = HashMap::new();
    memo.insert(0, ring.one());
    for size in 1..=n {
        let row = n - size;
        let mut next = HashMap::new();
        for &mask in memo.keys() {
            for j in 0..n {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let m2 = mask | (1 << j);
                if next.contains_key(&m2) {
                    continue;
                }
                let mut acc = ring.zero();
                let mut pos = 0usize;
                for c in 0..n {
                    if m2 & (1 << c) == 0 {
                        continue;
                    }
                    let minor = &memo[&(m2 & !(1 << c))];
                    if !ring.is_zero(&a[row][c]) && !ring.is_zero(minor) {
                        let t = ring.mul(&a[row][c], minor);
                        if pos.is_multiple_of(2) {
                            ring.add_assign(&mut acc, &t);
                        } else {
                            acc = ring.sub(&acc, &t);
                        }
                    }
                    pos += 1;
                }
                next.insert(m2, acc);
            }
        }
        memo = next;
    }
    Ok(memo.remove(&((1u32 << n) - 1)).expect("full mask"))
}

fn minor<E: Clone>(a: &Mat<E>, skip_r: usize, skip_c: usize) -> Mat<E> {
    a.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_r)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_c)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// The adjugate, satisfying `A · adj(A) = det(A) · I`.
pub fn adjugate<R: Ring>(ring: &R, a: &Mat<R::Elem>) -> Result<Mat<R::Elem>> {
    let n = check_square(a)?;
    if n == 1 {
        return Ok(vec![vec![ring.one()]]);
    }
    let mut adj = zeros(ring, n, n);
    for i in 0..n {
        for j in 0..n {
            let d = det(ring, &minor(a, i, j))?;
            adj[j][i] = if (i + j) % 2 == 0 { d } else { ring.neg(&d) };
        }
    }
    Ok(adj)
}

/// Inverse of a matrix whose determinant is a unit of the context.
pub fn inverse<R: Ring>(ring: &R, a: &Mat<R::Elem>) -> Result<Mat<R::Elem>> {
    let d = det(ring, a)?;
    if !ring.is_unit(&d) {
        return Err(Error::NotDivisible(format!(
            "determinant {} is not a unit",
            ring.render(&d)
        )));
    }
    let adj = adjugate(ring, a)?;
    adj.iter()
        .map(|row| row.iter().map(|x| ring.exact_div(x, &d)).collect())
        .collect()
}

/// Solves `A x = b` for square `A` over a field, by Gauss-Jordan elimination.
///
/// Every nonzero element of the context must be a unit.
pub fn solve_field<R: Ring>(ring: &R, a: &Mat<R::Elem>, b: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let n = check_square(a)?;
    if b.len() != n {
        return Err(Error::Malformed("right-hand side length".into()));
    }
    let mut m: Mat<R::Elem> = a
        .iter()
        .zip(b)
        .map(|(row, x)| {
            let mut r = row.clone();
            r.push(x.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&i| !ring.is_zero(&m[i][col]))
            .ok_or_else(|| Error::NotDivisible("singular matrix".into()))?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        m[col] = m[col]
            .iter()
            .map(|x| ring.exact_div(x, &p))
            .collect::<Result<_>>()?;
        for i in 0..n {
            if i == col || ring.is_zero(&m[i][col]) {
                continue;
            }
            let s = ring.neg(&m[i][col]);
            let src = m[col].clone();
            ring.vec_axpy(&mut m[i], &s, &src);
        }
    }
    Ok(m.into_iter().map(|mut r| r.pop().expect("augmented")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::integers::{Integers, IntegersMod};
    use num_bigint::BigInt;

    fn m(rows: &[&[i64]]) -> Mat<BigInt> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(det(&Integers, &m(&[&[1, 2], &[3, 4]])).unwrap(), BigInt::from(-2));
        let a = m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]);
        assert_eq!(det(&Integers, &a).unwrap(), BigInt::from(6));
        assert_eq!(det(&Integers, &Vec::new()).unwrap(), BigInt::from(1));
    }

    #[test]
    fn adjugate_identity() {
        let a = m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 4]]);
        let d = det(&Integers, &a).unwrap();
        let p = mat_mul(&Integers, &a, &adjugate(&Integers, &a).unwrap());
        for (i, row) in p.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                let want = if i == j { d.clone() } else { BigInt::from(0) };
                assert_eq!(*x, want);
            }
        }
    }

    #[test]
    fn inverse_over_z_mod() {
        let r = IntegersMod::new(12).unwrap();
        let a = m(&[&[5, 1], &[0, 1]]);
        let inv = inverse(&r, &a).unwrap();
        assert!(is_identity(&r, &mat_mul(&r, &a, &inv)));
        assert!(inverse(&Integers, &m(&[&[2, 0], &[0, 1]])).is_err());
    }
}
