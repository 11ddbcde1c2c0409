//! Symbolic rewriting of products `θ^m ζ_j` into module coordinates.
//!
//! Works over any context: the coefficients of `f` are plain ring elements
//! and no division is ever performed, so the same code produces universal
//! tables over `Z[f0,…,fn]` and concrete tables over `Z` or `Z/m`.

use crate::error::{Error, Result};
use crate::exactalg::ring::Ring;

/// The word `θ^m ζ_j` with `m ≥ -1` and `0 ≤ j ≤ n`; `ζ_0 = 1` and `ζ_n = -f_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Word {
    pub m: i32,
    pub j: usize,
}

impl Word {
    pub fn pow(m: i32) -> Word {
        Word { m, j: 0 }
    }
    pub fn new(m: i32, j: usize) -> Word {
        Word { m, j }
    }
}

/// Elements from which module bases are assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Atom {
    /// `θ^p`, `p ≥ 0`
    Pow(usize),
    /// `ζ_l`, `1 ≤ l ≤ n-1`
    Zeta(usize),
    /// `ν_0 = f_0`, `ν_l = ζ_l + f_l`
    Nu(usize),
}

/// The bases used for the module family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    /// `1, θ, …, θ^c, ζ_{c+1}, …, ζ_{n-1}`; for `c = -1`, `ν_0, …, ν_{n-1}`.
    Standard(i32),
    /// `1, θ, …, θ^c, ζ_{c+1} + f_{c+1}, …, ζ_{n-1} + f_{n-1}`.
    Primed(i32),
    /// `1, θ, …, θ^c, θ^c ζ_1, …, θ^c ζ_{n-1-c}`.
    Alternate(i32),
}

impl BasisKind {
    pub fn level(self) -> i32 {
        match self {
            BasisKind::Standard(c) | BasisKind::Primed(c) | BasisKind::Alternate(c) => c,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Standard(_) => "standard",
            BasisKind::Primed(_) => "primed",
            BasisKind::Alternate(_) => "alternate",
        }
    }

    pub fn from_name(name: &str, c: i32) -> Result<BasisKind> {
        match name {
            "standard" => Ok(BasisKind::Standard(c)),
            "primed" => Ok(BasisKind::Primed(c)),
            "alternate" => Ok(BasisKind::Alternate(c)),
            other => Err(Error::Malformed(format!("unknown basis {other:?}"))),
        }
    }

    /// The basis as words.
    pub fn words(self, n: usize) -> Result<Vec<Word>> {
        let c = self.level();
        if !(-1..n as i32).contains(&c) {
            return Err(Error::OutOfRange(format!("level {c} for n = {n}")));
        }
        let pows = (0..=c).map(Word::pow);
        let rest: Vec<Word> = match self {
            BasisKind::Standard(-1) => (1..=n).map(|t| Word::new(-1, t)).collect(),
            BasisKind::Standard(_) => ((c + 1) as usize..n).map(|j| Word::new(0, j)).collect(),
            BasisKind::Primed(_) => ((c + 1) as usize..n).map(|j| Word::new(-1, j + 1)).collect(),
            BasisKind::Alternate(_) => (1..=(n as i32 - 1 - c) as usize)
                .map(|t| Word::new(c, t))
                .collect(),
        };
        Ok(pows.chain(rest).collect())
    }
}

pub type Combo<E> = Vec<(E, Word)>;
pub type AtomCombo<E> = Vec<(E, Atom)>;

/// Rewriting context for one form.
pub struct Words<'a, R: Ring> {
    pub ring: &'a R,
    pub f: &'a [R::Elem],
}

impl<'a, R: Ring> Words<'a, R> {
    pub fn new(ring: &'a R, f: &'a [R::Elem]) -> Self {
        Words { ring, f }
    }

    pub fn n(&self) -> usize {
        self.f.len() - 1
    }

    /// `ζ_i ζ_j` for `1 ≤ i, j ≤ n-1` as a combination of `ζ_l`, `1 ≤ l ≤ n`.
    pub fn zeta_product(&self, i: usize, j: usize) -> Vec<(R::Elem, usize)> {
        let n = self.n();
        let r = self.ring;
        let mut out = Vec::new();
        let lo = (i + j).saturating_sub(n).max(1);
        for k in lo..=i {
            out.push((r.neg(&self.f[i + j - k]), k));
        }
        for k in j + 1..=(i + j).min(n) {
            out.push((self.f[i + j - k].clone(), k));
        }
        out
    }

    /// `(θ^{m1} ζ_{j1}) (θ^{m2} ζ_{j2})` as words.
    pub fn word_product(&self, a: Word, b: Word) -> Combo<R::Elem> {
        let n = self.n();
        let r = self.ring;
        let m = a.m + b.m;
        match (a.j, b.j) {
            (0, j) | (j, 0) => vec![(r.one(), Word::new(m, j))],
            (j, jn) | (jn, j) if jn == n => vec![(r.neg(&self.f[n]), Word::new(m, j))],
            (i, j) => self
                .zeta_product(i, j)
                .into_iter()
                .map(|(c, l)| (c, Word::new(m, l)))
                .collect(),
        }
    }

    /// Rewrites one word as atoms.
    pub fn word_atoms(&self, w: Word) -> Result<AtomCombo<R::Elem>> {
        let n = self.n();
        let r = self.ring;
        let Word { m, j } = w;
        if m < -1 || j > n {
            return Err(Error::OutOfRange(format!("word θ^{m} ζ_{j}")));
        }
        if j == 0 {
            return if m >= 0 {
                Ok(vec![(r.one(), Atom::Pow(m as usize))])
            } else {
                Err(Error::NotInModule("θ^-1 is not a module element".into()))
            };
        }
        if m == -1 {
            return Ok(vec![(r.one(), Atom::Nu(j - 1))]);
        }
        if j == n {
            return Ok(vec![(r.neg(&self.f[n]), Atom::Pow(m as usize))]);
        }
        if m == 0 {
            return Ok(vec![(r.one(), Atom::Zeta(j))]);
        }
        let m = m as usize;
        let mut out = Vec::new();
        if m + j < n {
            out.push((r.one(), Atom::Zeta(m + j)));
            for u in j..m + j {
                out.push((r.neg(&self.f[u]), Atom::Pow(m + j - u)));
            }
        } else {
            for u in j..=n {
                out.push((r.neg(&self.f[u]), Atom::Pow(m + j - u)));
            }
        }
        Ok(out)
    }

    /// Coordinates of a combination of atoms in `Standard(c)`.
    pub fn standard_coords(&self, atoms: &AtomCombo<R::Elem>, c: i32) -> Result<Vec<R::Elem>> {
        let n = self.n();
        let r = self.ring;
        let mut v = r.zero_vec(n);
        // atoms outside the target module; they must cancel
        let mut stray: Vec<(Atom, R::Elem)> = Vec::new();
        let mut push_stray = |atom: Atom, coef: &R::Elem| match stray.iter_mut().find(|(a, _)| *a == atom) {
            Some((_, acc)) => *acc = r.add(acc, coef),
            None => stray.push((atom, coef.clone())),
        };
        let mut pending: Vec<(R::Elem, Atom)> = atoms.clone();
        while let Some((coef, atom)) = pending.pop() {
            if r.is_zero(&coef) {
                continue;
            }
            if c == -1 {
                match atom {
                    Atom::Nu(l) => r.add_assign(&mut v[l], &coef),
                    other => push_stray(other, &coef),
                }
                continue;
            }
            let c = c as usize;
            match atom {
                Atom::Pow(p) if p <= c => r.add_assign(&mut v[p], &coef),
                Atom::Pow(_) => push_stray(atom, &coef),
                Atom::Zeta(l) if l > c => r.add_assign(&mut v[l], &coef),
                Atom::Zeta(l) => {
                    for u in 0..l {
                        pending.push((r.mul(&coef, &self.f[u]), Atom::Pow(l - u)));
                    }
                }
                Atom::Nu(0) => pending.push((r.mul(&coef, &self.f[0]), Atom::Pow(0))),
                Atom::Nu(l) => {
                    pending.push((coef.clone(), Atom::Zeta(l)));
                    pending.push((r.mul(&coef, &self.f[l]), Atom::Pow(0)));
                }
            }
        }
        if let Some((atom, coef)) = stray.iter().find(|(_, c)| !r.is_zero(c)) {
            return Err(Error::NotInModule(format!(
                "{} * {atom:?} at level {c}",
                r.render(coef)
            )));
        }
        Ok(v)
    }

    /// Coordinates of a combination of words in `Standard(c)`.
    pub fn combo_coords(&self, combo: &Combo<R::Elem>, c: i32) -> Result<Vec<R::Elem>> {
        let mut atoms = Vec::new();
        for (coef, w) in combo {
            if self.ring.is_zero(coef) {
                continue;
            }
            for (a, atom) in self.word_atoms(*w)? {
                atoms.push((self.ring.mul(coef, &a), atom));
            }
        }
        self.standard_coords(&atoms, c)
    }

    /// Rows are the `Standard(c)` coordinates of the basis `kind` (level `c`).
    pub fn basis_matrix(&self, kind: BasisKind) -> Result<Vec<Vec<R::Elem>>> {
        let c = kind.level();
        kind.words(self.n())?
            .into_iter()
            .map(|w| self.combo_coords(&vec![(self.ring.one(), w)], c))
            .collect()
    }

    /// Converts `Standard(c)` coordinates to coordinates in `kind`.
    ///
    /// Each basis differs from the standard one by a matrix `I + N` with
    /// `N² = 0`, whose inverse is `I - N`.
    pub fn from_standard(&self, x: &[R::Elem], kind: BasisKind) -> Result<Vec<R::Elem>> {
        let p = self.basis_matrix(kind)?;
        let r = self.ring;
        let mut y = x.to_vec();
        for (s, row) in p.iter().enumerate() {
            for (t, e) in row.iter().enumerate() {
                let delta = if s == t { r.sub(e, &r.one()) } else { e.clone() };
                if r.is_zero(&delta) {
                    continue;
                }
                y[t] = r.sub(&y[t], &r.mul(&x[s], &delta));
            }
        }
        Ok(y)
    }

    /// The product of two basis words in the coordinates of `target`.
    pub fn product_in(&self, a: Word, b: Word, target: BasisKind) -> Result<Vec<R::Elem>> {
        let std = self.combo_coords(&self.word_product(a, b), target.level())?;
        match target {
            BasisKind::Standard(_) => Ok(std),
            other => self.from_standard(&std, other),
        }
    }

    /// `d[i][s]` = coordinates of `ζ_i · b_s` in the basis `kind`, `0 ≤ i < n`.
    pub fn action(&self, kind: BasisKind) -> Result<Vec<Vec<Vec<R::Elem>>>> {
        let basis = kind.words(self.n())?;
        (0..self.n())
            .map(|i| {
                basis
                    .iter()
                    .map(|&b| self.product_in(Word::new(0, i), b, kind))
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::poly::PolyRing;

    #[test]
    fn zeta_one_theta_rewrites() {
        let r = PolyRing::universal(3).unwrap();
        let f = r.gens();
        let w = Words::new(&r, &f);
        // ζ_1 θ = ζ_2 - f_1 θ in the basis {1, θ, ζ_2}
        let v = w.product_in(Word::new(0, 1), Word::pow(1), BasisKind::Standard(1)).unwrap();
        assert_eq!(v, vec![r.zero(), r.neg(&f[1]), r.one()]);
    }

    #[test]
    fn primed_conversion_round_trip() {
        let r = PolyRing::universal(4).unwrap();
        let f = r.gens();
        let w = Words::new(&r, &f);
        for c in -1..4 {
            for kind in [BasisKind::Primed(c), BasisKind::Alternate(c)] {
                let p = w.basis_matrix(kind).unwrap();
                for (s, row) in p.iter().enumerate() {
                    let y = w.from_standard(row, kind).unwrap();
                    assert_eq!(y, r.unit_vec(4, s), "{kind:?}");
                }
            }
        }
    }
}
