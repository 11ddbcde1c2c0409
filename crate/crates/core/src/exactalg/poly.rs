//! Sparse multivariate integer polynomials.
//!
//! Monomials pack up to 16 exponents into a `u128`, eight bits per variable with
//! the high bit of each slot kept clear as an overflow guard. Variable 0 sits in
//! the most significant slot, so integer order on the packed words is the
//! lexicographic monomial order with `v0 > v1 > ...`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::integers::parse_bigint;
use super::ring::{ContextDescriptor, Ring};
use crate::error::{Error, Result};

pub const MAX_VARS: usize = 16;
const SLOT_BITS: u32 = 8;
const MAX_EXP: u32 = 127;
const GUARD: u128 = 0x8080_8080_8080_8080_8080_8080_8080_8080;

/// A packed exponent vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Mono(u128);

impl Mono {
    pub const ONE: Mono = Mono(0);

    fn shift(var: usize) -> u32 {
        (MAX_VARS as u32 - 1 - var as u32) * SLOT_BITS
    }

    pub fn var(var: usize, exp: u32) -> Mono {
        assert!(var < MAX_VARS && exp <= MAX_EXP, "monomial out of range");
        Mono((exp as u128) << Self::shift(var))
    }

    pub fn exp(self, var: usize) -> u32 {
        ((self.0 >> Self::shift(var)) & 0xff) as u32
    }

    pub fn mul(self, other: Mono) -> Mono {
        let s = self.0 + other.0;
        assert!(s & GUARD == 0, "exponent overflow in monomial product");
        Mono(s)
    }

    pub fn divides(self, other: Mono) -> bool {
        ((other.0 | GUARD) - self.0) & GUARD == GUARD
    }

    /// `other / self`; caller checks divisibility.
    pub fn div_into(self, other: Mono) -> Mono {
        Mono(other.0 - self.0)
    }

    pub fn gcd(self, other: Mono) -> Mono {
        let mut out = 0u128;
        for v in 0..MAX_VARS {
            let e = self.exp(v).min(other.exp(v)) as u128;
            out |= e << Self::shift(v);
        }
        Mono(out)
    }

    pub fn degree(self) -> u32 {
        (0..MAX_VARS).map(|v| self.exp(v)).sum()
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }
}

/// A polynomial: terms sorted by increasing monomial, no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Poly {
    terms: Vec<(Mono, BigInt)>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(Mono::ONE, c)],
            }
        }
    }

    pub fn monomial(m: Mono, c: BigInt) -> Poly {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, BigInt)>) -> Poly {
        let mut acc: HashMap<Mono, BigInt> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Mono, BigInt>) -> Poly {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|t| t.0);
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.as_slice() {
            [] => Some(BigInt::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn scale(&self, s: &BigInt) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    pub fn mul_term(&self, m: Mono, s: &BigInt) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        // Multiplying by a monomial preserves the order.
        Poly {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(*m, c);
        }
        let mut acc: HashMap<Mono, BigInt> = HashMap::with_capacity(large.len() * 2);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                *acc.entry(ma.mul(*mb)).or_default() += ca * cb;
            }
        }
        Self::from_map(acc)
    }

    /// Exact division using lexicographic leading terms.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return if self.is_zero() { Some(Poly::zero()) } else { None };
        }
        if let Some(c) = d.as_constant() {
            let mut terms = Vec::with_capacity(self.len());
            for (m, a) in &self.terms {
                let (q, r) = a.div_rem(&c);
                if !r.is_zero() {
                    return None;
                }
                terms.push((*m, q));
            }
            return Some(Poly { terms });
        }
        let (dm, dc) = d.leading().cloned().expect("nonzero");
        let mut rem = self.clone();
        let mut quot: Vec<(Mono, BigInt)> = Vec::new();
        while let Some((rm, rc)) = rem.leading().cloned() {
            if !dm.divides(rm) {
                return None;
            }
            let (qc, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            let qm = dm.div_into(rm);
            rem = rem.add(&d.mul_term(qm, &-&qc));
            quot.push((qm, qc));
        }
        quot.reverse();
        Some(Poly { terms: quot })
    }

    /// Gcd of the integer coefficients (0 for the zero polynomial).
    pub fn integer_content(&self) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Mono {
        let mut it = self.terms.iter();
        match it.next() {
            None => Mono::ONE,
            Some((m0, _)) => it.fold(*m0, |g, (m, _)| g.gcd(*m)),
        }
    }

    /// Divides every coefficient by `c` and every monomial by `m`; caller checks divisibility.
    pub fn divide_by_term(&self, m: Mono, c: &BigInt) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (m.div_into(*t), a / c))
                .collect(),
        }
    }

    pub fn max_exponent(&self, var: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Evaluates at `values` in an arbitrary ring.
    pub fn eval<R: Ring>(&self, ring: &R, values: &[R::Elem]) -> R::Elem {
        let nv = values.len();
        let mut powers: Vec<Vec<R::Elem>> = Vec::with_capacity(nv);
        for (v, val) in values.iter().enumerate() {
            let top = self.max_exponent(v) as usize;
            let mut p = Vec::with_capacity(top + 1);
            p.push(ring.one());
            for e in 1..=top {
                let next = ring.mul(&p[e - 1], val);
                p.push(next);
            }
            powers.push(p);
        }
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = ring.from_int(c);
            for (v, p) in powers.iter().enumerate() {
                let e = m.exp(v) as usize;
                if e > 0 {
                    t = ring.mul(&t, &p[e]);
                }
            }
            ring.add_assign(&mut acc, &t);
        }
        acc
    }
}

/// Polynomials with integer coefficients in named variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyRing {
    vars: Arc<Vec<String>>,
}

impl PolyRing {
    pub fn new(vars: Vec<String>) -> Result<Self> {
        if vars.len() > MAX_VARS {
            return Err(Error::Unsupported(format!(
                "{} variables (at most {MAX_VARS})",
                vars.len()
            )));
        }
        Ok(PolyRing {
            vars: Arc::new(vars),
        })
    }

    /// The ring `Z[f0, ..., fn]` carrying the universal form of degree `n`.
    pub fn universal(n: usize) -> Result<Self> {
        Self::new((0..=n).map(|i| format!("f{i}")).collect())
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var(&self, i: usize) -> Poly {
        assert!(i < self.nvars(), "variable index out of range");
        Poly::monomial(Mono::var(i, 1), BigInt::one())
    }

    pub fn gens(&self) -> Vec<Poly> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    fn render_mono(&self, m: Mono) -> String {
        let mut parts = Vec::new();
        for (v, name) in self.vars.iter().enumerate() {
            match m.exp(v) {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl Ring for PolyRing {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero()
    }
    fn one(&self) -> Poly {
        Poly::constant(BigInt::one())
    }
    fn from_int(&self, n: &BigInt) -> Poly {
        Poly::constant(n.clone())
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }
    fn neg(&self, a: &Poly) -> Poly {
        a.neg()
    }
    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(&b.neg())
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul(b)
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn equal(&self, a: &Poly, b: &Poly) -> bool {
        a == b
    }
    fn exact_div(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        a.exact_div(b).ok_or_else(|| {
            Error::NotDivisible(format!("{} by {}", self.render(a), self.render(b)))
        })
    }
    fn is_unit(&self, a: &Poly) -> bool {
        a.as_constant().is_some_and(|c| c.abs().is_one())
    }
    fn is_domain(&self) -> bool {
        true
    }
    fn descriptor(&self) -> ContextDescriptor {
        ContextDescriptor::Polynomials(self.vars.to_vec())
    }
    fn render(&self, a: &Poly) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (idx, (m, c)) in a.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = self.render_mono(*m);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
    fn parse_elem(&self, s: &str) -> Result<Poly> {
        PolyParser::new(self, s).parse()
    }
}

struct PolyParser<'a> {
    ring: &'a PolyRing,
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn new(ring: &'a PolyRing, src: &'a str) -> Self {
        PolyParser {
            ring,
            src,
            chars: src.char_indices().collect(),
            pos: 0,
        }
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |c| c.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.offset(),
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn number(&mut self) -> Option<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        let text: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        text.parse().ok()
    }

    fn ident(&mut self) -> Option<String> {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '_')
        {
            if self.pos == start && self.peek().is_some_and(|c| c.is_ascii_digit()) {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        Some(self.chars[start..self.pos].iter().map(|c| c.1).collect())
    }

    fn factor(&mut self, mono: &mut Mono, coef: &mut BigInt) -> Result<()> {
        self.skip_ws();
        if let Some(n) = self.number() {
            *coef *= n;
            return Ok(());
        }
        let at = self.pos;
        let Some(name) = self.ident() else {
            return self.err("expected a number or a variable");
        };
        let Some(v) = self.ring.vars.iter().position(|x| *x == name) else {
            self.pos = at;
            return self.err(format!("unknown variable {name:?}"));
        };
        self.skip_ws();
        let mut e = 1u32;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            match self.number() {
                Some(n) if n <= BigInt::from(MAX_EXP) => {
                    e = u32::try_from(n).expect("small exponent");
                }
                _ => return self.err("bad exponent"),
            }
        }
        *mono = mono.mul(Mono::var(v, e));
        Ok(())
    }

    fn parse(mut self) -> Result<Poly> {
        let mut terms = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return self.err("empty polynomial");
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let mut sign = BigInt::one();
            match self.peek() {
                Some('+') => self.pos += 1,
                Some('-') => {
                    sign = -sign;
                    self.pos += 1;
                }
                Some(_) if first => {}
                Some(c) => return self.err(format!("expected '+' or '-', found {c:?}")),
                None => break,
            }
            first = false;
            let mut mono = Mono::ONE;
            let mut coef = sign;
            self.factor(&mut mono, &mut coef)?;
            loop {
                self.skip_ws();
                if self.peek() == Some('*') {
                    self.pos += 1;
                    self.factor(&mut mono, &mut coef)?;
                } else {
                    break;
                }
            }
            terms.push((mono, coef));
        }
        Ok(Poly::from_terms(terms))
    }
}

/// Builds an integer polynomial from a plain integer literal or polynomial string.
pub fn parse_poly_or_int(ring: &PolyRing, s: &str) -> Result<Poly> {
    if let Ok(n) = parse_bigint(s) {
        return Ok(Poly::constant(n));
    }
    ring.parse_elem(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> PolyRing {
        PolyRing::universal(4).unwrap()
    }

    #[test]
    fn monomial_packing() {
        let a = Mono::var(0, 2).mul(Mono::var(3, 1));
        assert_eq!(a.exp(0), 2);
        assert_eq!(a.exp(3), 1);
        assert!(Mono::var(0, 1).divides(a));
        assert!(!Mono::var(1, 1).divides(a));
        assert!(Mono::var(0, 1) > Mono::var(1, 5));
        assert_eq!(a.degree(), 3);
    }

    #[test]
    fn exact_division_factor_out() {
        let r = PolyRing::new(vec!["f0".into(), "f1".into()]).unwrap();
        let (f0, f1) = (r.var(0), r.var(1));
        let a = r.add(&r.mul(&f0, &f1), &r.mul(&f0, &f0));
        let q = r.exact_div(&a, &f0).unwrap();
        assert_eq!(q, r.add(&f1, &f0));
        assert!(r.exact_div(&r.add(&a, &r.one()), &f0).is_err());
    }

    #[test]
    fn render_and_parse_round_trip() {
        let r = ring();
        let p = r.parse_elem("-3*f0^2*f1 + f2 - 4 + f0*f4").unwrap();
        let text = r.render(&p);
        assert_eq!(r.parse_elem(&text).unwrap(), p);
        assert_eq!(text, "-3*f0^2*f1 + f0*f4 + f2 - 4");
        assert_eq!(r.render(&r.zero()), "0");
    }

    #[test]
    fn parse_errors_carry_position() {
        let r = ring();
        match r.parse_elem("f0 + g1") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn evaluation() {
        let r = ring();
        let p = r.parse_elem("f0*f2 + f4^2 - 1").unwrap();
        let vals: Vec<BigInt> = [1, 0, 3, 0, 2].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(p.eval(&super::super::Integers, &vals), BigInt::from(6));
    }
}
