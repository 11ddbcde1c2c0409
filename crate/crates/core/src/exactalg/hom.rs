//! Ring homomorphisms between contexts: reduction modulo m and specialization
//! of polynomial variables.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::integers::{Integers, IntegersMod};
use super::poly::{Poly, PolyRing};
use super::ring::Ring;
use crate::error::{Error, Result};

/// A ring homomorphism `S -> T`.
pub trait Hom<S: Ring, T: Ring> {
    fn target(&self) -> &T;
    fn apply(&self, x: &S::Elem) -> T::Elem;

    fn apply_vec(&self, xs: &[S::Elem]) -> Vec<T::Elem> {
        xs.iter().map(|x| self.apply(x)).collect()
    }
}

/// Applies `hom` to `x`.
pub fn apply_hom<S: Ring, T: Ring, H: Hom<S, T>>(x: &S::Elem, hom: &H) -> T::Elem {
    hom.apply(x)
}

/// `Z -> Z/m`.
#[derive(Debug, Clone)]
pub struct ReduceMod {
    target: IntegersMod,
}

impl ReduceMod {
    pub fn new(m: impl Into<BigInt>) -> Result<Self> {
        Ok(ReduceMod {
            target: IntegersMod::new(m)?,
        })
    }
}

impl Hom<Integers, IntegersMod> for ReduceMod {
    fn target(&self) -> &IntegersMod {
        &self.target
    }
    fn apply(&self, x: &BigInt) -> BigInt {
        self.target.reduce(x)
    }
}

/// `Z/m -> Z/m'` for `m'` dividing `m`.
#[derive(Debug, Clone)]
pub struct ModToMod {
    target: IntegersMod,
}

impl ModToMod {
    pub fn new(source: &IntegersMod, target_modulus: impl Into<BigInt>) -> Result<Self> {
        let target = IntegersMod::new(target_modulus)?;
        if !source.modulus().mod_floor(target.modulus()).is_zero() {
            return Err(Error::Malformed(format!(
                "{} does not divide {}",
                target.modulus(),
                source.modulus()
            )));
        }
        Ok(ModToMod { target })
    }
}

impl Hom<IntegersMod, IntegersMod> for ModToMod {
    fn target(&self) -> &IntegersMod {
        &self.target
    }
    fn apply(&self, x: &BigInt) -> BigInt {
        self.target.reduce(x)
    }
}

/// Evaluation of polynomial variables at fixed values of a target ring.
#[derive(Debug, Clone)]
pub struct Specialize<T: Ring> {
    target: T,
    values: Vec<T::Elem>,
}

impl<T: Ring> Specialize<T> {
    pub fn new(source: &PolyRing, target: T, values: Vec<T::Elem>) -> Result<Self> {
        if values.len() != source.nvars() {
            return Err(Error::Malformed(format!(
                "specialization needs {} values, got {}",
                source.nvars(),
                values.len()
            )));
        }
        Ok(Specialize { target, values })
    }

    pub fn values(&self) -> &[T::Elem] {
        &self.values
    }
}

impl Specialize<Integers> {
    pub fn at_ints(source: &PolyRing, values: &[i64]) -> Result<Self> {
        Self::new(
            source,
            Integers,
            values.iter().map(|&v| BigInt::from(v)).collect(),
        )
    }
}

impl<T: Ring> Hom<PolyRing, T> for Specialize<T> {
    fn target(&self) -> &T {
        &self.target
    }
    fn apply(&self, x: &Poly) -> T::Elem {
        x.eval(&self.target, &self.values)
    }
}

/// The identity map of a context.
#[derive(Debug, Clone)]
pub struct Identity<R: Ring>(pub R);

impl<R: Ring> Hom<R, R> for Identity<R> {
    fn target(&self) -> &R {
        &self.0
    }
    fn apply(&self, x: &R::Elem) -> R::Elem {
        x.clone()
    }
}

/// `second ∘ first`.
#[derive(Debug, Clone)]
pub struct Compose<H1, H2, M> {
    first: H1,
    second: H2,
    _mid: std::marker::PhantomData<M>,
}

impl<H1, H2, M> Compose<H1, H2, M> {
    pub fn new(first: H1, second: H2) -> Self {
        Compose {
            first,
            second,
            _mid: std::marker::PhantomData,
        }
    }
}

impl<S: Ring, M: Ring, T: Ring, H1: Hom<S, M>, H2: Hom<M, T>> Hom<S, T> for Compose<H1, H2, M> {
    fn target(&self) -> &T {
        self.second.target()
    }
    fn apply(&self, x: &S::Elem) -> T::Elem {
        self.second.apply(&self.first.apply(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduce_seven_mod_five() {
        let h = ReduceMod::new(5).unwrap();
        assert_eq!(apply_hom(&BigInt::from(7), &h), BigInt::from(2));
    }

    #[test]
    fn specialize_product() {
        let r = PolyRing::universal(4).unwrap();
        let p = r.mul(&r.var(0), &r.var(2));
        let h = Specialize::at_ints(&r, &[1, 0, 0, 0, 2]).unwrap();
        assert_eq!(h.apply(&p), BigInt::from(0));
        let q = r.mul(&r.var(0), &r.var(4));
        assert_eq!(h.apply(&q), BigInt::from(2));
    }

    #[test]
    fn wrong_variable_count_is_rejected() {
        let r = PolyRing::universal(2).unwrap();
        assert!(matches!(
            Specialize::at_ints(&r, &[1, 2]),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn reduce_after_specialize_matches_specialize_into_quotient() {
        let r = PolyRing::new(vec!["f1".into()]).unwrap();
        let p = r.add(&r.var(0), &r.from_i64(4));
        let then_reduce = Compose::new(
            Specialize::at_ints(&r, &[2]).unwrap(),
            ReduceMod::new(3).unwrap(),
        );
        let z3 = IntegersMod::new(3).unwrap();
        let direct = Specialize::new(&r, z3.clone(), vec![z3.from_i64(2)]).unwrap();
        assert_eq!(then_reduce.apply(&p), BigInt::from(0));
        assert_eq!(direct.apply(&p), BigInt::from(0));
    }

    #[test]
    fn mod_chain() {
        let z6 = IntegersMod::new(6).unwrap();
        let h = ModToMod::new(&z6, 2).unwrap();
        assert_eq!(h.apply(&BigInt::from(5)), BigInt::from(1));
        assert!(ModToMod::new(&z6, 4).is_err());
    }
}
