//! Full-rank and partial `Z`-lattices inside `Q_f` for integer forms.
//!
//! A lattice is stored as `(1/d) · rowspan(H)` in θ-power coordinates, with
//! `H` in Hermite form and `d ≥ 1` minimal, which makes equality structural.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{ThetaAlgebra, ThetaElement};
use crate::error::{Error, Result};
use crate::exactalg::frac::Fraction;
use crate::exactalg::integers::Integers;
use crate::exactalg::intmat::IntMatrix;
use crate::exactalg::matrix;
use crate::forms::BinaryForm;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    n: usize,
    scale: BigInt,
    basis: IntMatrix,
}

type Alg = ThetaAlgebra<Integers>;
type Elem = ThetaElement<BigInt>;

impl Lattice {
    /// The lattice spanned by rational row vectors of length `n`.
    pub fn from_rows(n: usize, rows: &[Vec<Fraction<BigInt>>]) -> Lattice {
        let d = rows
            .iter()
            .flatten()
            .fold(BigInt::one(), |acc, x| acc.lcm(&x.den));
        let int_rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|x| &x.num * (&d / &x.den)).collect())
            .collect();
        let h = IntMatrix::from_rows(int_rows, n)
            .expect("rows of length n")
            .row_span_basis();
        let g = (0..h.nrows())
            .flat_map(|i| h.row(i).to_vec())
            .fold(d.clone(), |acc, x| acc.gcd(&x));
        let basis = IntMatrix::from_rows(
            (0..h.nrows())
                .map(|i| h.row(i).iter().map(|x| x / &g).collect())
                .collect(),
            n,
        )
        .expect("same shape");
        Lattice {
            n,
            scale: d / g,
            basis,
        }
    }

    pub fn from_elements(alg: &Alg, elems: &[Elem]) -> Lattice {
        let rows: Vec<_> = elems.iter().map(|e| e.coeffs.clone()).collect();
        Lattice::from_rows(alg.n(), &rows)
    }

    pub fn rank(&self) -> usize {
        self.basis.nrows()
    }

    pub fn scale(&self) -> &BigInt {
        &self.scale
    }

    pub fn hermite_basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn elements(&self, alg: &Alg) -> Vec<Elem> {
        let q = alg.field();
        (0..self.basis.nrows())
            .map(|i| ThetaElement {
                coeffs: self
                    .basis
                    .row(i)
                    .iter()
                    .map(|x| q.make(x.clone(), self.scale.clone()))
                    .collect(),
            })
            .collect()
    }

    pub fn contains(&self, alg: &Alg, x: &Elem) -> bool {
        let mut elems = self.elements(alg);
        elems.push(x.clone());
        Lattice::from_elements(alg, &elems) == *self
    }

    pub fn contains_lattice(&self, alg: &Alg, other: &Lattice) -> bool {
        let mut elems = self.elements(alg);
        elems.extend(other.elements(alg));
        Lattice::from_elements(alg, &elems) == *self
    }

    /// Span of all pairwise products.
    pub fn product(&self, other: &Lattice, alg: &Alg) -> Lattice {
        let a = self.elements(alg);
        let b = other.elements(alg);
        let prods: Vec<Elem> = a
            .iter()
            .flat_map(|x| b.iter().map(move |y| alg.mul(x, y)))
            .collect();
        Lattice::from_elements(alg, &prods)
    }

    /// `(self : other) = { x : x · other ⊂ self }` for a full-rank `self`.
    pub fn colon(&self, other: &Lattice, alg: &Alg) -> Result<Lattice> {
        let n = self.n;
        if self.rank() != n {
            return Err(Error::Precondition("colon needs a full-rank lattice".into()));
        }
        let q = alg.field();
        let ma: Vec<Vec<Fraction<BigInt>>> = self.elements(alg).into_iter().map(|e| e.coeffs).collect();
        let ma_inv = matrix::inverse(q, &ma)?;
        // C = [M_A T_b M_A^{-1}] over the generators b, side by side
        let mut c: Vec<Vec<Fraction<BigInt>>> = vec![Vec::new(); n];
        for b in other.elements(alg) {
            let t = alg.mult_matrix(&b);
            let cb = matrix::mat_mul(q, &matrix::mat_mul(q, &ma, &t), &ma_inv);
            for (row, extra) in c.iter_mut().zip(cb) {
                row.extend(extra);
            }
        }
        let width = c[0].len();
        let d = c.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(&x.den));
        let mut rows: Vec<Vec<BigInt>> = c
            .iter()
            .map(|r| r.iter().map(|x| &x.num * (&d / &x.den)).collect())
            .collect();
        for j in 0..width {
            let mut r = vec![BigInt::zero(); width];
            r[j] = -d.clone();
            rows.push(r);
        }
        let big = IntMatrix::from_rows(rows, width)?;
        let ker = big.left_kernel();
        let coords: Vec<Vec<Fraction<BigInt>>> = (0..ker.nrows())
            .map(|i| {
                let v: Vec<Fraction<BigInt>> = ker.row(i)[..n].iter().map(|x| q.embed(x)).collect();
                matrix::vec_mat(q, &v, &ma)
            })
            .collect();
        Ok(Lattice::from_rows(n, &coords))
    }
}

/// The `Z`-module of global sections of `O(k)` on the subscheme `f = 0` of
/// the projective line, realized inside `Q_f`.
///
/// Sections over `y ≠ 0` are spans of `x^a y^{k-a}` with `a ≥ 0`, sections over
/// `x ≠ 0` those with `a ≤ k`, both modulo multiples `x^i y^{k-i-n} f`. A global
/// section is a `y`-chart section congruent to an `x`-chart one. The Laurent
/// monomials are truncated to the exponent window
/// `k - n + 1 - margin ≤ a ≤ n - 1 + margin`, the intersection is computed by a
/// Hermite form with the negative-exponent columns first, and the survivors
/// are evaluated at `x = θ`, `y = 1`.
pub fn global_sections(form: &BinaryForm<Integers>, k: i32, margin: usize) -> Result<Lattice> {
    let n = form.degree() as i64;
    let kk = k as i64;
    if !(-1..n).contains(&kk) {
        return Err(Error::OutOfRange(format!("k = {k} for n = {n}")));
    }
    if form.coeff(0).is_zero() || form.coeff(n as usize).is_zero() {
        return Err(Error::Precondition(
            "global sections need f_0 ≠ 0 and f_n ≠ 0".into(),
        ));
    }
    let alg = ThetaAlgebra::new(form)?;
    let lo = kk - n + 1 - margin as i64;
    let hi = n - 1 + margin as i64;
    let exps: Vec<i64> = (lo..=hi)
        .filter(|&a| a < 0)
        .chain((lo..=hi).filter(|&a| a >= 0))
        .collect();
    let col = |a: i64| exps.iter().position(|&e| e == a).expect("in window");
    let width = exps.len();
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for a in lo..=kk.min(hi) {
        let mut r = vec![BigInt::zero(); width];
        r[col(a)] = BigInt::one();
        gens.push(r);
    }
    for i in lo..=hi - n {
        let mut r = vec![BigInt::zero(); width];
        for (j, fj) in form.coeffs().iter().enumerate() {
            r[col(i + n - j as i64)] = fj.clone();
        }
        gens.push(r);
    }
    let negatives = exps.iter().filter(|&&a| a < 0).count();
    let (h, _) = IntMatrix::from_rows(gens, width)?.hnf();
    let mut found = Vec::new();
    for i in 0..h.nrows() {
        let row = h.row(i);
        if row[..negatives].iter().any(|x| !x.is_zero()) || row.iter().all(Zero::is_zero) {
            continue;
        }
        let mut e = alg.zero();
        for (c, &a) in row.iter().zip(&exps).skip(negatives) {
            if !c.is_zero() {
                e = alg.add(&e, &alg.scale(c, &alg.theta_pow(a as usize)));
            }
        }
        found.push(e);
    }
    Ok(Lattice::from_elements(&alg, &found))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(c: &[i64]) -> (BinaryForm<Integers>, Alg) {
        let f = BinaryForm::from_ints(c).unwrap();
        let a = ThetaAlgebra::new(&f).unwrap();
        (f, a)
    }

    #[test]
    fn global_sections_match_literal_bases() {
        for c in [&[2, 3, 5][..], &[3, -1, 4, 6], &[2, 0, 1, 0, 3], &[6, 4, 2]] {
            let (f, a) = alg(c);
            let n = f.degree() as i32;
            for k in -1..n {
                let want = Lattice::from_elements(&a, &a.module_basis(k).unwrap());
                let got = global_sections(&f, k, n as usize).unwrap();
                assert_eq!(got, want, "f = {c:?}, k = {k}");
            }
        }
    }

    #[test]
    fn global_sections_stable_in_margin() {
        let (f, _) = alg(&[4, 2, -6, 3]);
        for k in -1..3 {
            assert_eq!(
                global_sections(&f, k, 3).unwrap(),
                global_sections(&f, k, 7).unwrap()
            );
        }
    }

    #[test]
    fn invertibility_examples() {
        for (c, invertible) in [(&[2, 2, 2][..], false), (&[1, 1, 1], true), (&[3, 6, 4], true)] {
            let (_, a) = alg(c);
            let r = Lattice::from_elements(&a, &a.module_basis(0).unwrap());
            let i = Lattice::from_elements(&a, &a.module_basis(1).unwrap());
            let is = Lattice::from_elements(&a, &a.module_basis(-1).unwrap());
            assert_eq!(i.product(&is, &a) == r, invertible);
            assert_eq!(i.product(&r, &a), i);
        }
    }

    #[test]
    fn colon_gives_sharp_module() {
        let (_, a) = alg(&[6, 3, -2, 9]);
        let r = Lattice::from_elements(&a, &a.module_basis(0).unwrap());
        let i = Lattice::from_elements(&a, &a.module_basis(1).unwrap());
        let is = Lattice::from_elements(&a, &a.module_basis(-1).unwrap());
        assert_eq!(r.colon(&i, &a).unwrap(), is);
    }
}
