//! Fraction fields of integral contexts.
//!
//! Over `Z` fractions are fully reduced. Over polynomial rings the numerator
//! and denominator are divided by their common integer content and common
//! monomial factor, and collapsed when the denominator divides the numerator.
//! That is a canonical form whenever the denominator is a single term, which
//! covers every fraction produced by reducing powers of θ. Other denominators
//! can survive unreduced, so equality always goes through cross-multiplication.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::integers::Integers;
use super::poly::{Poly, PolyRing};
use super::ring::{ContextDescriptor, Ring};
use crate::error::{Error, Result};

/// An integral context whose fractions can be brought to a reduced form.
pub trait FractionBase: Ring {
    /// Returns an equivalent pair with a normalized denominator.
    fn normalize_fraction(&self, num: Self::Elem, den: Self::Elem) -> (Self::Elem, Self::Elem);
}

impl FractionBase for Integers {
    fn normalize_fraction(&self, num: BigInt, den: BigInt) -> (BigInt, BigInt) {
        if num.is_zero() {
            return (BigInt::zero(), BigInt::one());
        }
        let g = num.gcd(&den);
        let (mut n, mut d) = (num / &g, den / &g);
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        (n, d)
    }
}

impl FractionBase for PolyRing {
    fn normalize_fraction(&self, num: Poly, den: Poly) -> (Poly, Poly) {
        if num.is_zero() {
            return (Poly::zero(), self.one());
        }
        if let Some(q) = num.exact_div(&den) {
            return (q, self.one());
        }
        let g = num.integer_content().gcd(&den.integer_content());
        let m = num.monomial_content().gcd(den.monomial_content());
        let (mut n, mut d) = (num.divide_by_term(m, &g), den.divide_by_term(m, &g));
        if d.leading().is_some_and(|(_, c)| c.is_negative()) {
            n = n.neg();
            d = d.neg();
        }
        (n, d)
    }
}

/// A fraction `num / den` with `den` nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct Fraction<E> {
    pub num: E,
    pub den: E,
}

/// The fraction field of an integral context.
#[derive(Debug, Clone, PartialEq)]
pub struct Frac<B> {
    base: B,
}

impl<B: FractionBase> Frac<B> {
    pub fn new(base: B) -> Result<Self> {
        if !base.is_domain() {
            return Err(Error::Unsupported(format!(
                "fraction field of {}",
                base.descriptor()
            )));
        }
        Ok(Frac { base })
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn make(&self, num: B::Elem, den: B::Elem) -> Fraction<B::Elem> {
        assert!(!self.base.is_zero(&den), "zero denominator");
        let (num, den) = self.base.normalize_fraction(num, den);
        Fraction { num, den }
    }

    pub fn embed(&self, a: &B::Elem) -> Fraction<B::Elem> {
        Fraction {
            num: a.clone(),
            den: self.base.one(),
        }
    }

    /// The base element equal to `a`, if `a` is integral.
    pub fn to_base(&self, a: &Fraction<B::Elem>) -> Option<B::Elem> {
        self.base.exact_div(&a.num, &a.den).ok()
    }
}

impl<B: FractionBase> Ring for Frac<B> {
    type Elem = Fraction<B::Elem>;

    fn zero(&self) -> Self::Elem {
        self.embed(&self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        self.embed(&self.base.one())
    }
    fn from_int(&self, n: &BigInt) -> Self::Elem {
        self.embed(&self.base.from_int(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        if r.is_zero(&a.num) {
            return b.clone();
        }
        if r.is_zero(&b.num) {
            return a.clone();
        }
        if r.equal(&a.den, &b.den) {
            return self.make(r.add(&a.num, &b.num), a.den.clone());
        }
        let num = r.add(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den));
        self.make(num, r.mul(&a.den, &b.den))
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        Fraction {
            num: self.base.neg(&a.num),
            den: a.den.clone(),
        }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let r = &self.base;
        if r.is_zero(&a.num) || r.is_zero(&b.num) {
            return self.zero();
        }
        self.make(r.mul(&a.num, &b.num), r.mul(&a.den, &b.den))
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.base.is_zero(&a.num)
    }
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        let r = &self.base;
        r.equal(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den))
    }
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        if self.is_zero(b) {
            return if self.is_zero(a) {
                Ok(self.zero())
            } else {
                Err(Error::NotDivisible("division by zero".into()))
            };
        }
        let r = &self.base;
        Ok(self.make(r.mul(&a.num, &b.den), r.mul(&a.den, &b.num)))
    }
    fn is_unit(&self, a: &Self::Elem) -> bool {
        !self.is_zero(a)
    }
    fn is_domain(&self) -> bool {
        true
    }
    fn descriptor(&self) -> ContextDescriptor {
        ContextDescriptor::Fractions(Box::new(self.base.descriptor()))
    }
    fn render(&self, a: &Self::Elem) -> String {
        if self.base.is_one(&a.den) {
            self.base.render(&a.num)
        } else {
            format!("({})/({})", self.base.render(&a.num), self.base.render(&a.den))
        }
    }
    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        match s.find('/') {
            None => Ok(self.embed(&self.base.parse_elem(s)?)),
            Some(i) => {
                let strip = |t: &str| {
                    let t = t.trim();
                    t.strip_prefix('(')
                        .and_then(|t| t.strip_suffix(')'))
                        .unwrap_or(t)
                        .to_string()
                };
                let num = self.base.parse_elem(&strip(&s[..i]))?;
                let den = self.base.parse_elem(&strip(&s[i + 1..])).map_err(|e| match e {
                    Error::Parse { pos, msg } => Error::Parse { pos: pos + i + 1, msg },
                    other => other,
                })?;
                if self.base.is_zero(&den) {
                    return Err(Error::Parse {
                        pos: i + 1,
                        msg: "zero denominator".into(),
                    });
                }
                Ok(self.make(num, den))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let q = Frac::new(Integers).unwrap();
        let a = q.make(BigInt::from(6), BigInt::from(-4));
        assert_eq!(a.num, BigInt::from(-3));
        assert_eq!(a.den, BigInt::from(2));
        let b = q.add(&a, &q.make(BigInt::from(3), BigInt::from(2)));
        assert!(q.is_zero(&b));
        assert_eq!(b, q.zero());
    }

    #[test]
    fn polynomial_fractions_with_monomial_denominators_are_canonical() {
        let r = PolyRing::universal(2).unwrap();
        let k = Frac::new(r.clone()).unwrap();
        let f0 = r.var(0);
        let f1 = r.var(1);
        // (f0*f1 + f0^2) / (2*f0^2) = (f1 + f0) / (2*f0)
        let num = r.add(&r.mul(&f0, &f1), &r.mul(&f0, &f0));
        let den = r.mul(&r.from_i64(2), &r.mul(&f0, &f0));
        let a = k.make(num, den);
        assert_eq!(a.num, r.add(&f1, &f0));
        assert_eq!(a.den, r.mul(&r.from_i64(2), &f0));
        let b = k.make(r.mul(&r.from_i64(-2), &r.add(&f1, &f0)), r.mul(&r.from_i64(-4), &f0));
        assert_eq!(a, b);
    }
}
