use std::fmt::{self, Debug};

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Describes a base context. Rendered as `Z`, `Z/12`, `Z[f0,f1]`, `Frac(Z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContextDescriptor {
    Integers,
    IntegersMod(BigInt),
    Polynomials(Vec<String>),
    Fractions(Box<ContextDescriptor>),
}

impl fmt::Display for ContextDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContextDescriptor::Integers => write!(f, "Z"),
            ContextDescriptor::IntegersMod(m) => write!(f, "Z/{m}"),
            ContextDescriptor::Polynomials(vars) => write!(f, "Z[{}]", vars.join(",")),
            ContextDescriptor::Fractions(inner) => write!(f, "Frac({inner})"),
        }
    }
}

impl std::str::FromStr for ContextDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Z" {
            return Ok(ContextDescriptor::Integers);
        }
        if let Some(m) = s.strip_prefix("Z/") {
            let m: BigInt = m.parse().map_err(|_| Error::Parse {
                pos: 2,
                msg: format!("bad modulus {m:?}"),
            })?;
            return Ok(ContextDescriptor::IntegersMod(m));
        }
        if let Some(rest) = s.strip_prefix("Z[").and_then(|r| r.strip_suffix(']')) {
            let vars = rest
                .split(',')
                .map(|v| v.trim().to_string())
                .filter(|v| !v.is_empty())
                .collect();
            return Ok(ContextDescriptor::Polynomials(vars));
        }
        if let Some(rest) = s.strip_prefix("Frac(").and_then(|r| r.strip_suffix(')')) {
            return Ok(ContextDescriptor::Fractions(Box::new(rest.parse()?)));
        }
        Err(Error::Parse {
            pos: 0,
            msg: format!("unknown context {s:?}"),
        })
    }
}

/// An exact commutative ring with identity.
///
/// Elements are plain values; the context object carries any parameters
/// (modulus, variable names) and performs all arithmetic.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: &BigInt) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    /// Returns some `q` with `b * q = a`, or `NotDivisible`.
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem>;

    fn is_unit(&self, a: &Self::Elem) -> bool;

    /// True when the ring has no zero divisors.
    fn is_domain(&self) -> bool;

    fn descriptor(&self) -> ContextDescriptor;

    /// Human-readable rendering, also accepted by `parse_elem`.
    fn render(&self, a: &Self::Elem) -> String;

    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    /// Generator of the ideal spanned by `v`.
    fn content(&self, v: &[Self::Elem]) -> Result<Self::Elem> {
        let _ = v;
        Err(Error::Unsupported(format!(
            "content over {}",
            self.descriptor()
        )))
    }

    /// The integer an element represents, when the context is `Z`.
    fn as_integer(&self, a: &Self::Elem) -> Option<BigInt> {
        let _ = a;
        None
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&BigInt::from(n))
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        self.equal(a, &self.one())
    }

    fn pow(&self, a: &Self::Elem, mut e: u32) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    /// `a += b * c`.
    fn add_mul_assign(&self, a: &mut Self::Elem, b: &Self::Elem, c: &Self::Elem) {
        if self.is_zero(b) || self.is_zero(c) {
            return;
        }
        *a = self.add(a, &self.mul(b, c));
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        let mut acc = self.zero();
        for x in items {
            self.add_assign(&mut acc, x);
        }
        acc
    }

    fn dot(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Self::Elem {
        let mut acc = self.zero();
        for (x, y) in a.iter().zip(b) {
            self.add_mul_assign(&mut acc, x, y);
        }
        acc
    }

    fn vec_eq(&self, a: &[Self::Elem], b: &[Self::Elem]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| self.equal(x, y))
    }

    fn zero_vec(&self, len: usize) -> Vec<Self::Elem> {
        vec![self.zero(); len]
    }

    fn unit_vec(&self, len: usize, i: usize) -> Vec<Self::Elem> {
        let mut v = self.zero_vec(len);
        v[i] = self.one();
        v
    }

    fn vec_add(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Vec<Self::Elem> {
        a.iter().zip(b).map(|(x, y)| self.add(x, y)).collect()
    }

    fn vec_sub(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Vec<Self::Elem> {
        a.iter().zip(b).map(|(x, y)| self.sub(x, y)).collect()
    }

    fn vec_scale(&self, s: &Self::Elem, a: &[Self::Elem]) -> Vec<Self::Elem> {
        a.iter().map(|x| self.mul(s, x)).collect()
    }

    /// `acc += s * v`.
    fn vec_axpy(&self, acc: &mut [Self::Elem], s: &Self::Elem, v: &[Self::Elem]) {
        if self.is_zero(s) {
            return;
        }
        for (a, x) in acc.iter_mut().zip(v) {
            self.add_mul_assign(a, s, x);
        }
    }
}
