//! Binary n-ic forms `f = f_0 x^n + f_1 x^{n-1} y + … + f_n y^n`.
//!
//! Coefficients are indexed by the power of `y`. A form carries a twist tag
//! `l`; the only place it enters arithmetic is the `det(γ)^l` factor of the
//! GL2 action.
//!
//! The action substitutes `(x, y) ↦ (ax + cy, bx + dy)`, i.e. the row vector
//! `(x, y)` is multiplied on the right by `[[a, b], [c, d]]`. With that
//! convention `act(act(f, g1), g2) = act(f, g2 · g1)`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactalg::hom::Hom;
use crate::exactalg::integers::Integers;
use crate::exactalg::matrix;
use crate::exactalg::poly::{Poly, PolyRing};
use crate::exactalg::ring::Ring;

#[derive(Debug, Clone)]
pub struct BinaryForm<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
    twist: i32,
}

impl<R: Ring> BinaryForm<R> {
    pub fn new(ring: R, coeffs: Vec<R::Elem>, twist: i32) -> Result<Self> {
        if coeffs.len() < 3 {
            return Err(Error::Malformed(format!(
                "a binary form needs degree at least 2, got {} coefficients",
                coeffs.len()
            )));
        }
        Ok(BinaryForm {
            ring,
            coeffs,
            twist,
        })
    }

    /// Parses a comma separated coefficient list `f_0,…,f_n`.
    pub fn parse(ring: R, s: &str, twist: i32) -> Result<Self> {
        let mut coeffs = Vec::new();
        let mut offset = 0;
        for piece in s.split(',') {
            let c = ring.parse_elem(piece).map_err(|e| match e {
                Error::Parse { pos, msg } => Error::Parse {
                    pos: pos + offset,
                    msg,
                },
                other => other,
            })?;
            coeffs.push(c);
            offset += piece.len() + 1;
        }
        Self::new(ring, coeffs, twist)
    }

    pub fn zero(ring: R, n: usize, twist: i32) -> Result<Self> {
        let coeffs = ring.zero_vec(n + 1);
        Self::new(ring, coeffs, twist)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &R::Elem {
        &self.coeffs[i]
    }

    pub fn twist(&self) -> i32 {
        self.twist
    }

    pub fn with_twist(mut self, twist: i32) -> Self {
        self.twist = twist;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    /// Coefficientwise equality, including the twist tag.
    pub fn same_as(&self, other: &Self) -> bool {
        self.twist == other.twist && self.ring.vec_eq(&self.coeffs, &other.coeffs)
    }

    /// `f(x, y)` evaluated at a point.
    pub fn eval(&self, x: &R::Elem, y: &R::Elem) -> R::Elem {
        let r = &self.ring;
        let n = self.degree() as u32;
        let mut acc = r.zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            let i = i as u32;
            let t = r.mul(&r.pow(x, n - i), &r.pow(y, i));
            r.add_mul_assign(&mut acc, c, &t);
        }
        acc
    }

    /// Image under a context homomorphism.
    pub fn map<T: Ring, H: Hom<R, T>>(&self, hom: &H) -> BinaryForm<T> {
        BinaryForm {
            ring: hom.target().clone(),
            coeffs: hom.apply_vec(&self.coeffs),
            twist: self.twist,
        }
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| self.ring.render(c)).collect();
        parts.join(",")
    }

    /// True iff the coefficients generate the unit ideal.
    pub fn is_primitive(&self) -> Result<bool> {
        let c = self.ring.content(&self.coeffs)?;
        Ok(self.ring.is_unit(&c))
    }

    pub fn content(&self) -> Result<R::Elem> {
        self.ring.content(&self.coeffs)
    }

    /// `f(ax + cy, bx + dy) · det(γ)^l`.
    pub fn act(&self, g: &Gl2<R::Elem>) -> Result<Self> {
        let r = &self.ring;
        let det = g.det(r);
        if !r.is_unit(&det) {
            return Err(Error::Precondition(format!(
                "determinant {} is not a unit",
                r.render(&det)
            )));
        }
        let n = self.degree();
        // powers of the linear forms (ax + cy) and (bx + dy), coefficient j at x^{p-j} y^j
        let lin_pows = |u: &R::Elem, v: &R::Elem| {
            let mut pows = vec![vec![r.one()]];
            for p in 1..=n {
                let prev = &pows[p - 1];
                let mut next = r.zero_vec(p + 1);
                for (j, c) in prev.iter().enumerate() {
                    r.add_mul_assign(&mut next[j], c, u);
                    r.add_mul_assign(&mut next[j + 1], c, v);
                }
                pows.push(next);
            }
            pows
        };
        let px = lin_pows(&g.a, &g.c);
        let py = lin_pows(&g.b, &g.d);
        let mut out = r.zero_vec(n + 1);
        for (i, fi) in self.coeffs.iter().enumerate() {
            if r.is_zero(fi) {
                continue;
            }
            for (s, u) in px[n - i].iter().enumerate() {
                for (t, v) in py[i].iter().enumerate() {
                    r.add_mul_assign(&mut out[s + t], fi, &r.mul(u, v));
                }
            }
        }
        let scale = if self.twist >= 0 {
            r.pow(&det, self.twist as u32)
        } else {
            let inv = r.exact_div(&r.one(), &det)?;
            r.pow(&inv, self.twist.unsigned_abs())
        };
        Ok(BinaryForm {
            ring: r.clone(),
            coeffs: r.vec_scale(&scale, &out),
            twist: self.twist,
        })
    }

    /// A lower shear `(1, t, 0, 1)` moving `f` to a form with nonzero leading
    /// coefficient, found by trying `t = 0, 1, …, n`.
    pub fn move_leading_nonzero(&self) -> Option<(Self, Gl2<R::Elem>)> {
        let r = &self.ring;
        for t in 0..=self.degree() as i64 {
            let g = Gl2::new(r.one(), r.from_i64(t), r.zero(), r.one());
            let moved = self.act(&g).ok()?;
            if !r.is_zero(moved.coeff(0)) {
                return Some((moved, g));
            }
        }
        None
    }

    /// The discriminant, by specializing the cached universal polynomial.
    pub fn disc(&self) -> Result<R::Elem> {
        let n = self.degree();
        let d = universal_disc(n)?;
        Ok(d.eval(&self.ring, &self.coeffs))
    }
}

impl BinaryForm<Integers> {
    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(
            Integers,
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            -1,
        )
    }
}

/// The form whose coefficients are the variables `f0, …, fn` of `Z[f0,…,fn]`.
pub fn universal_form(n: usize) -> Result<BinaryForm<PolyRing>> {
    if n < 2 {
        return Err(Error::Malformed(format!("degree {n} is below 2")));
    }
    let ring = PolyRing::universal(n)?;
    let coeffs = ring.gens();
    BinaryForm::new(ring, coeffs, -1)
}

/// An invertible 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Gl2<E> {
    pub a: E,
    pub b: E,
    pub c: E,
    pub d: E,
}

impl<E: Clone> Gl2<E> {
    pub fn new(a: E, b: E, c: E, d: E) -> Self {
        Gl2 { a, b, c, d }
    }

    pub fn det<R: Ring<Elem = E>>(&self, r: &R) -> E {
        r.sub(&r.mul(&self.a, &self.d), &r.mul(&self.b, &self.c))
    }

    pub fn identity<R: Ring<Elem = E>>(r: &R) -> Self {
        Gl2::new(r.one(), r.zero(), r.zero(), r.one())
    }

    /// `(0, 1, 1, 0)`: exchanges x and y.
    pub fn swap<R: Ring<Elem = E>>(r: &R) -> Self {
        Gl2::new(r.zero(), r.one(), r.one(), r.zero())
    }

    /// `(1, 0, 1, 1)`: x ↦ x + y.
    pub fn shear<R: Ring<Elem = E>>(r: &R) -> Self {
        Gl2::new(r.one(), r.zero(), r.one(), r.one())
    }

    /// Matrix product `self · other`.
    pub fn mul<R: Ring<Elem = E>>(&self, other: &Self, r: &R) -> Self {
        let m = matrix::mat_mul(r, &self.to_mat(), &other.to_mat());
        Gl2::new(
            m[0][0].clone(),
            m[0][1].clone(),
            m[1][0].clone(),
            m[1][1].clone(),
        )
    }

    pub fn to_mat(&self) -> Vec<Vec<E>> {
        vec![
            vec![self.a.clone(), self.b.clone()],
            vec![self.c.clone(), self.d.clone()],
        ]
    }

    pub fn map<F: Fn(&E) -> T, T: Clone>(&self, f: F) -> Gl2<T> {
        Gl2::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }
}

/// Named GL2(Z) generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    Identity,
    Swap,
    Shear,
}

impl Generator {
    pub fn matrix<R: Ring>(self, r: &R) -> Gl2<R::Elem> {
        match self {
            Generator::Identity => Gl2::identity(r),
            Generator::Swap => Gl2::swap(r),
            Generator::Shear => Gl2::shear(r),
        }
    }
}

fn disc_cache() -> &'static Mutex<HashMap<usize, Poly>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Poly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The discriminant of the universal form of degree `n` as a polynomial in
/// `f0, …, fn`.
///
/// Computed from the Bezout matrix of `F(t) = f(t, 1)` and `F'(t)`, whose
/// determinant is `±f_0^2 · Disc`. The sign is fixed so that the monomial
/// `f_0^{n-1} f_n^{n-1}` has coefficient `(-1)^{n(n-1)/2} n^n`.
pub fn universal_disc(n: usize) -> Result<Poly> {
    if n < 2 {
        return Err(Error::Malformed(format!("degree {n} is below 2")));
    }
    if let Some(p) = disc_cache().lock().expect("disc cache").get(&n) {
        return Ok(p.clone());
    }
    let d = compute_universal_disc(n)?;
    disc_cache()
        .lock()
        .expect("disc cache")
        .entry(n)
        .or_insert(d.clone());
    Ok(d)
}

fn compute_universal_disc(n: usize) -> Result<Poly> {
    let ring = PolyRing::universal(n)?;
    let f = ring.gens();
    // u_p: coefficient of t^p in F, v_p in F'
    let u: Vec<Poly> = (0..=n).map(|p| f[n - p].clone()).collect();
    let v: Vec<Poly> = (0..=n)
        .map(|p| {
            if p < n {
                ring.mul(&ring.from_i64((p + 1) as i64), &f[n - p - 1])
            } else {
                ring.zero()
            }
        })
        .collect();
    let nn = |p: usize, q: usize| ring.sub(&ring.mul(&u[p], &v[q]), &ring.mul(&u[q], &v[p]));
    let mut b = matrix::zeros(&ring, n + 1, n);
    for i in (0..n).rev() {
        for q in 0..n {
            let mut e = nn(i + 1, q);
            if q > 0 {
                e = ring.add(&e, &b[i + 1][q - 1]);
            }
            b[i][q] = e;
        }
    }
    b.truncate(n);
    let det = matrix::det(&ring, &b)?;
    let f0sq = ring.mul(&f[0], &f[0]);
    let mut disc = ring.exact_div(&det, &f0sq)?;
    let probe = crate::exactalg::poly::Mono::var(0, (n - 1) as u32)
        .mul(crate::exactalg::poly::Mono::var(n, (n - 1) as u32));
    let lead = disc
        .terms()
        .iter()
        .find(|(m, _)| *m == probe)
        .map(|(_, c)| c.clone())
        .ok_or_else(|| Error::Inconsistent("discriminant lacks f0^(n-1) fn^(n-1)".into()))?;
    let sign_neg = (n * (n - 1) / 2) % 2 == 1;
    let want_negative = sign_neg;
    if (lead < BigInt::from(0)) != want_negative {
        disc = disc.neg();
    }
    Ok(disc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(c: &[i64]) -> BinaryForm<Integers> {
        BinaryForm::from_ints(c).unwrap()
    }

    fn ints(f: &BinaryForm<Integers>) -> Vec<i64> {
        f.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn swap_reverses_with_twist_sign() {
        let f = form(&[1, 2, 3, 4]);
        let g = f.act(&Gl2::swap(&Integers)).unwrap();
        assert_eq!(ints(&g), vec![-4, -3, -2, -1]);
        let f0 = f.clone().with_twist(0);
        assert_eq!(ints(&f0.act(&Gl2::swap(&Integers)).unwrap()), vec![4, 3, 2, 1]);
    }

    #[test]
    fn shear_on_x_squared() {
        let f = form(&[1, 0, 0]).with_twist(0);
        let g = f.act(&Gl2::shear(&Integers)).unwrap();
        assert_eq!(ints(&g), vec![1, 2, 1]);
        let id = f.act(&Gl2::identity(&Integers)).unwrap();
        assert!(id.same_as(&f));
    }

    #[test]
    fn primitivity() {
        assert!(form(&[1, 2, 3]).is_primitive().unwrap());
        assert!(!form(&[2, 4, 6]).is_primitive().unwrap());
        assert!(!form(&[0, 0, 0]).is_primitive().unwrap());
    }

    #[test]
    fn classical_discriminants() {
        let r = PolyRing::universal(2).unwrap();
        let want2 = r.parse_elem("f1^2 - 4*f0*f2").unwrap();
        assert_eq!(universal_disc(2).unwrap(), want2);
        let r3 = PolyRing::universal(3).unwrap();
        let want3 = r3
            .parse_elem("18*f0*f1*f2*f3 - 4*f1^3*f3 + f1^2*f2^2 - 4*f0*f2^3 - 27*f0^2*f3^2")
            .unwrap();
        assert!(r3.equal(&universal_disc(3).unwrap(), &want3));
        assert_eq!(form(&[1, 1, 1]).disc().unwrap(), BigInt::from(-3));
        assert_eq!(form(&[1, 0, 0, 1]).disc().unwrap(), BigInt::from(-27));
        assert_eq!(form(&[1, 0, 0]).disc().unwrap(), BigInt::from(0));
    }

    #[test]
    fn leading_coefficient_move() {
        let f = form(&[0, 0, 1, 0]);
        let (g, _) = f.move_leading_nonzero().unwrap();
        assert!(*g.coeff(0) != BigInt::from(0));
        assert!(form(&[0, 0, 0]).move_leading_nonzero().is_none());
    }
}
