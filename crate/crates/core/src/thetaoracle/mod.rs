//! A direct model of `Q_f = K(θ) / (f_0 θ^n + … + f_n)` over the fraction
//! field `K` of the base context.
//!
//! Everything here is computed with explicit powers of θ and is used to check
//! the table constructions in [`crate::ringmod`] independently.

pub mod check;
pub mod lattice;

use crate::error::{Error, Result};
use crate::exactalg::frac::{Frac, Fraction, FractionBase};
use crate::exactalg::matrix::{self, Mat};
use crate::exactalg::ring::Ring;
use crate::forms::BinaryForm;

pub use check::{check_global_sections, check_tables};
pub use lattice::{global_sections, Lattice};

/// `c_0 + c_1 θ + … + c_{n-1} θ^{n-1}` with coefficients in `K`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaElement<E> {
    pub coeffs: Vec<Fraction<E>>,
}

/// Coordinates in the basis of `I_f^k`: `1, θ, …, θ^k, ζ_{k+1}, …, ζ_{n-1}`
/// for `k ≥ 0` and `ν_0, …, ν_{n-1}` for `k = -1`.
#[derive(Debug, Clone, PartialEq)]
pub struct MixedBasisElement<E> {
    pub k: i32,
    pub coords: Vec<E>,
}

#[derive(Debug, Clone)]
pub struct ThetaAlgebra<B: FractionBase> {
    field: Frac<B>,
    f: Vec<B::Elem>,
    /// `f_j / f_0` for `j = 0..=n`
    reduction: Vec<Fraction<B::Elem>>,
}

impl<B: FractionBase> ThetaAlgebra<B> {
    pub fn new(form: &BinaryForm<B>) -> Result<Self> {
        let base = form.ring().clone();
        if base.is_zero(form.coeff(0)) {
            return Err(Error::Precondition("the θ-model needs f_0 ≠ 0".into()));
        }
        let field = Frac::new(base)?;
        let f0 = field.embed(form.coeff(0));
        let reduction = form
            .coeffs()
            .iter()
            .map(|c| field.exact_div(&field.embed(c), &f0))
            .collect::<Result<_>>()?;
        Ok(ThetaAlgebra {
            field,
            f: form.coeffs().to_vec(),
            reduction,
        })
    }

    pub fn n(&self) -> usize {
        self.f.len() - 1
    }

    pub fn field(&self) -> &Frac<B> {
        &self.field
    }

    pub fn base(&self) -> &B {
        self.field.base()
    }

    pub fn f(&self, i: usize) -> &B::Elem {
        &self.f[i]
    }

    pub fn zero(&self) -> ThetaElement<B::Elem> {
        ThetaElement {
            coeffs: self.field.zero_vec(self.n()),
        }
    }

    pub fn constant(&self, c: &B::Elem) -> ThetaElement<B::Elem> {
        let mut e = self.zero();
        e.coeffs[0] = self.field.embed(c);
        e
    }

    pub fn one(&self) -> ThetaElement<B::Elem> {
        self.constant(&self.base().one())
    }

    pub fn from_fractions(&self, coeffs: Vec<Fraction<B::Elem>>) -> Result<ThetaElement<B::Elem>> {
        if coeffs.len() != self.n() {
            return Err(Error::Malformed(format!(
                "expected {} coefficients, got {}",
                self.n(),
                coeffs.len()
            )));
        }
        Ok(ThetaElement { coeffs })
    }

    /// `θ^m` for `m ≥ 0`.
    pub fn theta_pow(&self, m: usize) -> ThetaElement<B::Elem> {
        let mut v = self.field.zero_vec(m + 1);
        v[m] = self.field.one();
        self.reduce(v)
    }

    /// `θ^m` for any integer `m`; negative powers need `f_n ≠ 0`.
    pub fn theta_ipow(&self, m: i64) -> Result<ThetaElement<B::Elem>> {
        if m >= 0 {
            return Ok(self.theta_pow(m as usize));
        }
        let inv = self.inverse(&self.theta_pow(1))?;
        let mut acc = self.one();
        for _ in 0..(-m) {
            acc = self.mul(&acc, &inv);
        }
        Ok(acc)
    }

    /// `ζ_i = f_0 θ^i + … + f_{i-1} θ` with `ζ_0 = 1`.
    pub fn zeta(&self, i: usize) -> Result<ThetaElement<B::Elem>> {
        let n = self.n();
        if i >= n {
            return Err(Error::OutOfRange(format!("ζ index {i} for n = {n}")));
        }
        if i == 0 {
            return Ok(self.one());
        }
        let mut e = self.zero();
        for u in 0..i {
            e.coeffs[i - u] = self.field.embed(&self.f[u]);
        }
        Ok(e)
    }

    /// `ν_0 = f_0` and `ν_i = ζ_i + f_i`.
    pub fn nu(&self, i: usize) -> Result<ThetaElement<B::Elem>> {
        if i == 0 {
            return Ok(self.constant(&self.f[0]));
        }
        let mut e = self.zeta(i)?;
        e.coeffs[0] = self.field.embed(&self.f[i]);
        Ok(e)
    }

    /// Reduces a coefficient vector of any length using `f(θ) = 0`.
    fn reduce(&self, mut v: Vec<Fraction<B::Elem>>) -> ThetaElement<B::Elem> {
        let n = self.n();
        let k = &self.field;
        for d in (n..v.len()).rev() {
            if k.is_zero(&v[d]) {
                continue;
            }
            let c = v[d].clone();
            for j in 1..=n {
                let t = k.mul(&c, &self.reduction[j]);
                v[d - j] = k.sub(&v[d - j], &t);
            }
            v[d] = k.zero();
        }
        v.resize(n, k.zero());
        ThetaElement { coeffs: v }
    }

    pub fn add(&self, a: &ThetaElement<B::Elem>, b: &ThetaElement<B::Elem>) -> ThetaElement<B::Elem> {
        ThetaElement {
            coeffs: self.field.vec_add(&a.coeffs, &b.coeffs),
        }
    }

    pub fn sub(&self, a: &ThetaElement<B::Elem>, b: &ThetaElement<B::Elem>) -> ThetaElement<B::Elem> {
        ThetaElement {
            coeffs: self.field.vec_sub(&a.coeffs, &b.coeffs),
        }
    }

    pub fn scale(&self, s: &B::Elem, a: &ThetaElement<B::Elem>) -> ThetaElement<B::Elem> {
        ThetaElement {
            coeffs: self.field.vec_scale(&self.field.embed(s), &a.coeffs),
        }
    }

    pub fn scale_frac(&self, s: &Fraction<B::Elem>, a: &ThetaElement<B::Elem>) -> ThetaElement<B::Elem> {
        ThetaElement {
            coeffs: self.field.vec_scale(s, &a.coeffs),
        }
    }

    pub fn mul(&self, a: &ThetaElement<B::Elem>, b: &ThetaElement<B::Elem>) -> ThetaElement<B::Elem> {
        let n = self.n();
        let k = &self.field;
        let mut v = k.zero_vec(2 * n - 1);
        for (i, x) in a.coeffs.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                k.add_mul_assign(&mut v[i + j], x, y);
            }
        }
        self.reduce(v)
    }

    pub fn equal(&self, a: &ThetaElement<B::Elem>, b: &ThetaElement<B::Elem>) -> bool {
        self.field.vec_eq(&a.coeffs, &b.coeffs)
    }

    pub fn is_zero(&self, a: &ThetaElement<B::Elem>) -> bool {
        a.coeffs.iter().all(|c| self.field.is_zero(c))
    }

    /// Rows are the θ-coordinates of `a · θ^j`.
    pub fn mult_matrix(&self, a: &ThetaElement<B::Elem>) -> Mat<Fraction<B::Elem>> {
        (0..self.n())
            .map(|j| self.mul(a, &self.theta_pow(j)).coeffs)
            .collect()
    }

    /// Multiplicative inverse, or `NotDivisible` for zero divisors.
    pub fn inverse(&self, a: &ThetaElement<B::Elem>) -> Result<ThetaElement<B::Elem>> {
        let m = matrix::transpose(&self.mult_matrix(a));
        let e0 = self.field.unit_vec(self.n(), 0);
        let v = matrix::solve_field(&self.field, &m, &e0)?;
        Ok(ThetaElement { coeffs: v })
    }

    /// The literal basis of `I_f^k`.
    pub fn module_basis(&self, k: i32) -> Result<Vec<ThetaElement<B::Elem>>> {
        let n = self.n() as i32;
        if !(-1..n).contains(&k) {
            return Err(Error::OutOfRange(format!("k = {k} for n = {n}")));
        }
        (0..n as usize)
            .map(|i| {
                if k == -1 {
                    self.nu(i)
                } else if (i as i32) <= k {
                    Ok(self.theta_pow(i))
                } else {
                    self.zeta(i)
                }
            })
            .collect()
    }

    /// The basis of `I_f^k` with `θ^k ζ_m` for `m ≥ 1`, which spans the same
    /// module as [`Self::module_basis`].
    pub fn module_basis_shifted(&self, k: i32) -> Result<Vec<ThetaElement<B::Elem>>> {
        let n = self.n() as i32;
        if !(-1..n).contains(&k) {
            return Err(Error::OutOfRange(format!("k = {k} for n = {n}")));
        }
        let mut out = Vec::new();
        for i in 0..n {
            if i <= k {
                out.push(self.theta_pow(i as usize));
            } else {
                let m = (i - k) as usize;
                let mut e = self.zero();
                for u in 0..m {
                    let d = i - u as i32;
                    if d >= 0 {
                        e.coeffs[d as usize] = self.field.embed(&self.f[u]);
                    }
                }
                out.push(e);
            }
        }
        Ok(out)
    }

    /// Coordinates of `a` in the basis of `I_f^k`, or `NotInModule`.
    ///
    /// The basis is triangular in powers of θ with leading coefficients `1`
    /// or `f_0`, so the coordinates are found top-down.
    pub fn to_mixed_basis(&self, a: &ThetaElement<B::Elem>, k: i32) -> Result<MixedBasisElement<B::Elem>> {
        let basis = self.module_basis(k)?;
        let kf = &self.field;
        let mut rest = a.clone();
        let mut coords = vec![self.base().zero(); self.n()];
        for d in (0..self.n()).rev() {
            let lead = &basis[d].coeffs[d];
            let c = kf.exact_div(&rest.coeffs[d], lead)?;
            if kf.is_zero(&c) {
                continue;
            }
            let ci = kf.to_base(&c).ok_or_else(|| {
                Error::NotInModule(format!(
                    "coordinate {} on basis element {d} of I^{k}",
                    kf.render(&c)
                ))
            })?;
            rest = self.sub(&rest, &self.scale(&ci, &basis[d]));
            coords[d] = ci;
        }
        debug_assert!(self.is_zero(&rest));
        Ok(MixedBasisElement { k, coords })
    }

    /// Inverse of [`Self::to_mixed_basis`].
    pub fn from_mixed_basis(&self, m: &MixedBasisElement<B::Elem>) -> Result<ThetaElement<B::Elem>> {
        let basis = self.module_basis(m.k)?;
        let mut acc = self.zero();
        for (c, b) in m.coords.iter().zip(&basis) {
            acc = self.add(&acc, &self.scale(c, b));
        }
        Ok(acc)
    }

    pub fn render(&self, a: &ThetaElement<B::Elem>) -> String {
        let kf = &self.field;
        let mut parts = Vec::new();
        for (i, c) in a.coeffs.iter().enumerate() {
            if kf.is_zero(c) {
                continue;
            }
            let c = kf.render(c);
            parts.push(match i {
                0 => c,
                1 => format!("({c})*θ"),
                _ => format!("({c})*θ^{i}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::integers::Integers;
    use crate::exactalg::poly::PolyRing;
    use crate::forms::universal_form;
    use num_bigint::BigInt;

    fn alg(c: &[i64]) -> ThetaAlgebra<Integers> {
        ThetaAlgebra::new(&BinaryForm::from_ints(c).unwrap()).unwrap()
    }

    fn ints(a: &ThetaAlgebra<Integers>, e: &ThetaElement<BigInt>) -> Vec<i64> {
        e.coeffs
            .iter()
            .map(|c| i64::try_from(&a.field().to_base(c).unwrap()).unwrap())
            .collect()
    }

    #[test]
    fn theta_squared_for_one_one_one() {
        let a = alg(&[1, 1, 1]);
        let t = a.theta_pow(1);
        assert_eq!(ints(&a, &a.mul(&t, &t)), vec![-1, -1]);
        assert!(a.equal(&a.mul(&t, &a.one()), &t));
    }

    #[test]
    fn theta_cubed_is_minus_one() {
        let a = alg(&[1, 0, 0, 1]);
        let t = a.theta_pow(1);
        assert_eq!(ints(&a, &a.mul(&t, &a.theta_pow(2))), vec![-1, 0, 0]);
    }

    #[test]
    fn zeta_shapes() {
        let u = universal_form(3).unwrap();
        let a = ThetaAlgebra::new(&u).unwrap();
        let r: &PolyRing = u.ring();
        let z2 = a.zeta(2).unwrap();
        assert_eq!(a.field().to_base(&z2.coeffs[2]).unwrap(), r.var(0));
        assert_eq!(a.field().to_base(&z2.coeffs[1]).unwrap(), r.var(1));
        assert!(a.zeta(3).is_err());
        assert!(a.equal(&a.zeta(0).unwrap(), &a.one()));
    }

    #[test]
    fn mixed_basis_examples() {
        let u = universal_form(3).unwrap();
        let r = u.ring().clone();
        let a = ThetaAlgebra::new(&u).unwrap();
        let x = a.scale(&r.var(0), &a.theta_pow(2));
        let m = a.to_mixed_basis(&x, 1).unwrap();
        assert_eq!(m.coords, vec![r.zero(), r.neg(&r.var(1)), r.one()]);
        let nu1 = a.add(&a.scale(&r.var(0), &a.theta_pow(1)), &a.constant(&r.var(1)));
        let m = a.to_mixed_basis(&nu1, -1).unwrap();
        assert_eq!(m.coords, vec![r.zero(), r.one(), r.zero()]);
        assert!(matches!(
            a.to_mixed_basis(&a.theta_pow(2), 1),
            Err(Error::NotInModule(_))
        ));
    }

    #[test]
    fn inverse_of_theta() {
        let a = alg(&[1, 2, 3, 5]);
        let t = a.theta_pow(1);
        let ti = a.inverse(&t).unwrap();
        assert!(a.equal(&a.mul(&t, &ti), &a.one()));
    }

    #[test]
    fn shifted_basis_spans_the_same_module() {
        let a = alg(&[3, -2, 5, 7, 1]);
        for k in -1..4 {
            for e in a.module_basis_shifted(k).unwrap() {
                a.to_mixed_basis(&e, k).unwrap();
            }
        }
    }
}
