use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ring::{ContextDescriptor, Ring};
use crate::error::{Error, Result};

/// The integers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

/// Parses an optionally signed decimal integer, reporting the offending position.
pub fn parse_bigint(s: &str) -> Result<BigInt> {
    let t = s.trim();
    let lead = s.len() - s.trim_start().len();
    if t.is_empty() {
        return Err(Error::Parse {
            pos: lead,
            msg: "empty integer".into(),
        });
    }
    for (i, ch) in t.char_indices() {
        let ok = ch.is_ascii_digit() || (i == 0 && (ch == '-' || ch == '+'));
        if !ok {
            return Err(Error::Parse {
                pos: lead + i,
                msg: format!("unexpected character {ch:?}"),
            });
        }
    }
    t.parse::<BigInt>().map_err(|_| Error::Parse {
        pos: lead,
        msg: format!("bad integer {t:?}"),
    })
}

impl Ring for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        n.clone()
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn equal(&self, a: &BigInt, b: &BigInt) -> bool {
        a == b
    }
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Result<BigInt> {
        if b.is_zero() {
            return if a.is_zero() {
                Ok(BigInt::zero())
            } else {
                Err(Error::NotDivisible(format!("{a} by 0")))
            };
        }
        let (q, r) = a.div_rem(b);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible(format!("{a} by {b}")))
        }
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        a.abs().is_one()
    }
    fn is_domain(&self) -> bool {
        true
    }
    fn descriptor(&self) -> ContextDescriptor {
        ContextDescriptor::Integers
    }
    fn render(&self, a: &BigInt) -> String {
        a.to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<BigInt> {
        parse_bigint(s)
    }
    fn content(&self, v: &[BigInt]) -> Result<BigInt> {
        Ok(v.iter().fold(BigInt::zero(), |g, x| g.gcd(x)))
    }
    fn as_integer(&self, a: &BigInt) -> Option<BigInt> {
        Some(a.clone())
    }
}

/// The ring Z/m for m ≥ 2. The modulus need not be prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegersMod {
    m: BigInt,
}

impl IntegersMod {
    pub fn new(m: impl Into<BigInt>) -> Result<Self> {
        let m = m.into();
        if m < BigInt::from(2) {
            return Err(Error::Malformed(format!("modulus {m} must be at least 2")));
        }
        Ok(IntegersMod { m })
    }

    pub fn modulus(&self) -> &BigInt {
        &self.m
    }

    pub fn reduce(&self, a: &BigInt) -> BigInt {
        a.mod_floor(&self.m)
    }
}

impl Ring for IntegersMod {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, n: &BigInt) -> BigInt {
        self.reduce(n)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(&(a + b))
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(&(a - b))
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        self.reduce(&-a)
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        self.reduce(&(a * b))
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        self.reduce(a).is_zero()
    }
    fn equal(&self, a: &BigInt, b: &BigInt) -> bool {
        self.reduce(a) == self.reduce(b)
    }
    fn exact_div(&self, a: &BigInt, b: &BigInt) -> Result<BigInt> {
        // b q = a (mod m) is solvable iff gcd(b, m) divides a.
        let a = self.reduce(a);
        let b = self.reduce(b);
        let g = b.gcd(&self.m);
        if !(&a % &g).is_zero() {
            return Err(Error::NotDivisible(format!("{a} by {b} mod {}", self.m)));
        }
        let m_g = &self.m / &g;
        if m_g.is_one() {
            return Ok(BigInt::zero());
        }
        let b_g = (&b / &g).mod_floor(&m_g);
        let inv = mod_inverse(&b_g, &m_g).expect("coprime after dividing by gcd");
        Ok(((&a / &g) * inv).mod_floor(&m_g))
    }
    fn is_unit(&self, a: &BigInt) -> bool {
        self.reduce(a).gcd(&self.m).is_one()
    }
    fn is_domain(&self) -> bool {
        is_probable_prime(&self.m)
    }
    fn descriptor(&self) -> ContextDescriptor {
        ContextDescriptor::IntegersMod(self.m.clone())
    }
    fn render(&self, a: &BigInt) -> String {
        self.reduce(a).to_string()
    }
    fn parse_elem(&self, s: &str) -> Result<BigInt> {
        Ok(self.reduce(&parse_bigint(s)?))
    }
    fn content(&self, v: &[BigInt]) -> Result<BigInt> {
        let g = v.iter().fold(self.m.clone(), |g, x| g.gcd(x));
        Ok(self.reduce(&g))
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else if (-&e.gcd).is_one() {
        Some((-e.x).mod_floor(m))
    } else {
        None
    }
}

fn is_probable_prime(m: &BigInt) -> bool {
    // Trial division is enough for the moduli this crate meets.
    let two = BigInt::from(2);
    if *m < two {
        return false;
    }
    let mut d = two;
    while &d * &d <= *m {
        if (m % &d).is_zero() {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn integer_division() {
        assert_eq!(Integers.exact_div(&z(6), &z(3)).unwrap(), z(2));
        assert!(matches!(
            Integers.exact_div(&z(7), &z(3)),
            Err(Error::NotDivisible(_))
        ));
        assert_eq!(Integers.exact_div(&z(0), &z(0)).unwrap(), z(0));
    }

    #[test]
    fn integer_content() {
        assert_eq!(Integers.content(&[z(2), z(4), z(6)]).unwrap(), z(2));
        assert!(Integers.is_unit(&Integers.content(&[z(3), z(5)]).unwrap()));
        let c = Integers.content(&[z(0), z(0)]).unwrap();
        assert_eq!(c, z(0));
        assert!(!Integers.is_unit(&c));
    }

    #[test]
    fn modular_division_non_prime() {
        let r = IntegersMod::new(12).unwrap();
        let q = r.exact_div(&z(8), &z(4)).unwrap();
        assert_eq!(r.mul(&q, &z(4)), z(8));
        assert!(r.exact_div(&z(3), &z(4)).is_err());
        assert!(!r.is_domain());
        assert!(IntegersMod::new(5).unwrap().is_domain());
    }

    #[test]
    fn modular_content() {
        let r = IntegersMod::new(12).unwrap();
        assert!(!r.is_unit(&r.content(&[z(2), z(4)]).unwrap()));
        assert!(r.is_unit(&r.content(&[z(4), z(3)]).unwrap()));
        assert!(r.is_zero(&r.content(&[z(0), z(24)]).unwrap()));
    }

    #[test]
    fn parse_reports_position() {
        match parse_bigint(" 12x") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
        assert_eq!(parse_bigint("-17").unwrap(), z(-17));
    }
}
